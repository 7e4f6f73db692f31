//! The uniform hypergraph model and its structural predicates.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A k-uniform hypergraph.
///
/// Vertices are identified by position `0..n`; labels are metadata. Edges are
/// sorted index lists kept in lexicographic order, so two hypergraphs built
/// from the same edge sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
    edge_names: Option<Vec<String>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn build(k: usize, labels: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::build_named(k, labels, edges, None)
    }

    /// Like [`Hypergraph::build`], with one name per edge carried alongside.
    pub fn build_named(
        k: usize,
        labels: Vec<String>,
        edges: Vec<Vec<usize>>,
        edge_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if k < 2 {
            return Err(Error::EdgeSizeTooSmall(k));
        }
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if let Some(names) = &edge_names {
            if names.len() != edges.len() {
                return Err(Error::EdgeNameCount { names: names.len(), edges: edges.len() });
            }
        }

        let mut keyed: Vec<(Vec<usize>, Option<String>)> = Vec::with_capacity(edges.len());
        let mut names = edge_names.map(|v| v.into_iter());
        for mut e in edges {
            if let Some(&bad) = e.iter().find(|&&x| x >= n) {
                return Err(Error::IndexOutOfRange { index: bad, len: n });
            }
            e.sort_unstable();
            let distinct = e.windows(2).all(|w| w[0] != w[1]);
            if e.len() != k || !distinct {
                return Err(Error::NonUniformEdge { edge: e, k });
            }
            keyed.push((e, names.as_mut().and_then(|it| it.next())));
        }
        keyed.sort();
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateEdge(w[0].0.clone()));
            }
        }
        let has_names = names.is_some();
        let (edges, names): (Vec<_>, Vec<_>) = keyed.into_iter().unzip();
        let edge_names = has_names.then(|| names.into_iter().map(Option::unwrap).collect());

        let mut incidence = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(idx);
            }
        }
        Ok(Self { k, labels, edges, edge_names, incidence })
    }

    /// Builds from labels, resolving edge members by label.
    pub fn from_labeled_edges<S: AsRef<str>>(k: usize, labels: Vec<String>, edges: &[Vec<S>]) -> Result<Self> {
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut idx_edges = Vec::with_capacity(edges.len());
        for e in edges {
            let mut out = Vec::with_capacity(e.len());
            for l in e {
                let l = l.as_ref();
                out.push(*index.get(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
            }
            idx_edges.push(out);
        }
        Self::build(k, labels, idx_edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn edge_names(&self) -> Option<&[String]> {
        self.edge_names.as_deref()
    }

    pub fn edge_name(&self, e: usize) -> Option<&str> {
        self.edge_names.as_ref().map(|v| v[e].as_str())
    }

    /// Edges incident to `v`, as indices into [`Hypergraph::edges`].
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edge_by_name(&self, name: &str) -> Option<usize> {
        self.edge_names.as_ref()?.iter().position(|l| l == name)
    }

    /// Position of a sorted member list in the canonical edge order.
    pub fn find_edge(&self, sorted: &[usize]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(sorted)).ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::IndexOutOfRange { index: v, len: self.n() });
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex);
        }
        Ok(self.incidence[u].iter().filter(|&&e| self.edges[e].binary_search(&v).is_ok()).count())
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_codegree(&self) -> Result<usize> {
        if self.n() < 2 {
            return Err(Error::TooFewVertices { needed: 2, actual: self.n() });
        }
        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        for e in &self.edges {
            for (a, &x) in e.iter().enumerate() {
                for &y in &e[a + 1..] {
                    *counts.entry((x, y)).or_default() += 1;
                }
            }
        }
        Ok(counts.into_values().max().unwrap_or(0))
    }

    pub fn is_linear(&self) -> Result<bool> {
        Ok(self.max_codegree()? <= 1)
    }

    /// Map from degree to number of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for inc in &self.incidence {
            *h.entry(inc.len()).or_default() += 1;
        }
        h
    }

    pub fn is_regular(&self) -> bool {
        self.incidence.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// The sub-hypergraph induced by `subset`.
    ///
    /// Vertices are renumbered in ascending order of their original index and
    /// keep their labels; edge names survive for the retained edges.
    pub fn induced(&self, subset: &[usize]) -> Result<Hypergraph> {
        let n = self.n();
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        let mut names = self.edge_names.as_ref().map(|_| Vec::new());
        for (idx, e) in self.edges.iter().enumerate() {
            if e.iter().all(|&v| new_index[v] != usize::MAX) {
                edges.push(e.iter().map(|&v| new_index[v]).collect());
                if let (Some(out), Some(src)) = (names.as_mut(), self.edge_names.as_ref()) {
                    out.push(src[idx].clone());
                }
            }
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        Hypergraph::build_named(self.k, labels, edges, names)
    }

    /// Maps an edge through `p`, returning the sorted image.
    pub fn edge_image(&self, e: usize, p: &Permutation) -> Vec<usize> {
        let mut img: Vec<usize> = self.edges[e].iter().map(|&v| p.apply(v)).collect();
        img.sort_unstable();
        img
    }

    pub fn is_automorphism(&self, p: &Permutation) -> Result<bool> {
        if p.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), actual: p.len() });
        }
        Ok(self.preserves_edges(p))
    }

    pub(crate) fn preserves_edges(&self, p: &Permutation) -> bool {
        let mut img = Vec::with_capacity(self.k);
        self.edges.iter().all(|e| {
            img.clear();
            img.extend(e.iter().map(|&v| p.apply(v)));
            img.sort_unstable();
            self.find_edge(&img).is_some()
        })
    }

    /// Whether the transposition `(a b)` is an automorphism.
    pub fn are_twins(&self, a: usize, b: usize) -> bool {
        if a == b || self.incidence[a].len() != self.incidence[b].len() {
            return false;
        }
        // Equal degrees make the injective map on a's private edges onto b's enough.
        let mut img = Vec::with_capacity(self.k);
        self.incidence[a].iter().all(|&e| {
            let members = &self.edges[e];
            if members.binary_search(&b).is_ok() {
                return true;
            }
            img.clear();
            img.extend(members.iter().map(|&v| if v == a { b } else { v }));
            img.sort_unstable();
            self.find_edge(&img).is_some()
        })
    }

    /// The first transposition (in ascending pair order) that is an automorphism.
    pub fn twin_swap_witness(&self) -> Option<Permutation> {
        let n = self.n();
        for a in 0..n {
            for b in a + 1..n {
                if self.are_twins(a, b) {
                    return Some(Permutation::transposition(n, a, b));
                }
            }
        }
        None
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.incidence[v].is_empty()).collect()
    }
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Self { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Non-trivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }
}
