//! Automorphism search by individualization and refinement.
//!
//! The engine works on ordered partitions of the vertex set. Refinement
//! splits cells by the multiset of co-member cells over incident edges until
//! the partition is stable. Search fixes a first path down the tree
//! (individualizing the smallest vertex of the first smallest non-singleton
//! cell at each level) and looks for leaves elsewhere whose induced vertex
//! map preserves every edge. A branch is entered only while its refined
//! partitions have the same shape as the first path's.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Permutation};
use crate::role::{EdgeRole, RoleKind, VertexRole};

/// A partition of `0..n` into ordered cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl OrderedPartition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut cell_of = vec![usize::MAX; n];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidParams("empty cell in partition".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, len: n });
                }
                if cell_of[v] != usize::MAX {
                    return Err(Error::InvalidParams(format!("vertex {v} appears in two cells")));
                }
                cell_of[v] = c;
            }
        }
        if cell_of.contains(&usize::MAX) {
            return Err(Error::InvalidParams("partition does not cover every vertex".into()));
        }
        let cells = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Self { cells, cell_of })
    }

    pub fn unit(n: usize) -> Self {
        if n == 0 {
            return Self { cells: Vec::new(), cell_of: Vec::new() };
        }
        Self { cells: vec![(0..n).collect()], cell_of: vec![0; n] }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// First cell of minimum size among the non-singleton cells.
    fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Splits `v` out of cell `cell` into a singleton placed in front of the rest.
    fn individualize(&self, cell: usize, v: usize) -> Self {
        debug_assert_eq!(self.cell_of[v], cell);
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..cell]);
        cells.push(vec![v]);
        cells.push(self.cells[cell].iter().copied().filter(|&x| x != v).collect());
        cells.extend_from_slice(&self.cells[cell + 1..]);
        let mut cell_of = self.cell_of.clone();
        for (c, members) in cells.iter().enumerate().skip(cell) {
            for &x in members {
                cell_of[x] = c;
            }
        }
        Self { cells, cell_of }
    }
}

type Signature = Vec<Vec<usize>>;

/// Isomorphism-invariant summary of a stable partition: size and signature of each cell.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Shape(Vec<(usize, Signature)>);

fn signature(h: &Hypergraph, part: &OrderedPartition, v: usize) -> Signature {
    let mut sig: Signature = h
        .incident(v)
        .iter()
        .map(|&e| {
            let mut co: Vec<usize> =
                h.edge(e).iter().filter(|&&x| x != v).map(|&x| part.cell_of[x]).collect();
            co.sort_unstable();
            co
        })
        .collect();
    sig.sort_unstable();
    sig
}

fn refine_with_shape(h: &Hypergraph, initial: &OrderedPartition) -> (OrderedPartition, Shape) {
    let mut part = initial.clone();
    loop {
        let sigs: Vec<Signature> = (0..h.n()).map(|v| signature(h, &part, v)).collect();
        let mut cells = Vec::with_capacity(part.cells.len());
        let mut split = false;
        for cell in &part.cells {
            if cell.len() == 1 {
                cells.push(cell.clone());
                continue;
            }
            let mut sorted = cell.clone();
            sorted.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
            let start = cells.len();
            let mut run = vec![sorted[0]];
            for w in sorted.windows(2) {
                if sigs[w[0]] == sigs[w[1]] {
                    run.push(w[1]);
                } else {
                    cells.push(std::mem::replace(&mut run, vec![w[1]]));
                }
            }
            cells.push(run);
            split |= cells.len() - start > 1;
        }
        if !split {
            let shape = part.cells.iter().map(|c| (c.len(), sigs[c[0]].clone())).collect();
            return (part, Shape(shape));
        }
        let mut cell_of = vec![0; h.n()];
        for (c, members) in cells.iter_mut().enumerate() {
            members.sort_unstable();
            for &x in members.iter() {
                cell_of[x] = c;
            }
        }
        part = OrderedPartition { cells, cell_of };
    }
}

/// Coarsest stable refinement of `initial`.
///
/// Each vertex is signed by the sorted multiset, over its incident edges, of
/// the sorted cell indices of its co-members. Cells split by signature, and the
/// pieces are ordered by signature, so the result commutes with every
/// automorphism that preserves `initial`.
pub fn refine(h: &Hypergraph, initial: &OrderedPartition) -> OrderedPartition {
    refine_with_shape(h, initial).0
}

struct Level {
    part: OrderedPartition,
    shape: Shape,
    target: usize,
    chosen: usize,
}

struct Engine<'a> {
    h: &'a Hypergraph,
    nodes: u64,
    levels: Vec<Level>,
    leaf: OrderedPartition,
    leaf_shape: Shape,
}

impl<'a> Engine<'a> {
    fn new(h: &'a Hypergraph, initial: &OrderedPartition) -> Self {
        let mut nodes = 1;
        let (mut part, mut shape) = refine_with_shape(h, initial);
        let mut levels = Vec::new();
        while let Some(target) = part.target_cell() {
            let chosen = part.cells[target][0];
            let (next, next_shape) = refine_with_shape(h, &part.individualize(target, chosen));
            nodes += 1;
            levels.push(Level { part, shape, target, chosen });
            part = next;
            shape = next_shape;
        }
        Self { h, nodes, levels, leaf: part, leaf_shape: shape }
    }

    fn shape_at(&self, depth: usize) -> &Shape {
        self.levels.get(depth).map_or(&self.leaf_shape, |l| &l.shape)
    }

    /// An automorphism agreeing with the first path above `level` and sending
    /// its chosen vertex to `w`.
    fn search_from(&mut self, level: usize, w: usize) -> Option<Permutation> {
        let lv = &self.levels[level];
        let (part, shape) = refine_with_shape(self.h, &lv.part.individualize(lv.target, w));
        self.nodes += 1;
        if &shape != self.shape_at(level + 1) {
            return None;
        }
        self.descend(part, level + 1)
    }

    fn descend(&mut self, part: OrderedPartition, depth: usize) -> Option<Permutation> {
        if depth == self.levels.len() {
            let mut image = vec![0; self.h.n()];
            for (l, r) in self.leaf.cells.iter().zip(&part.cells) {
                image[l[0]] = r[0];
            }
            let p = Permutation::new(image).expect("discrete partitions give a bijection");
            return self.h.preserves_edges(&p).then_some(p);
        }
        let target = self.levels[depth].target;
        for &x in &part.cells[target] {
            let (next, shape) = refine_with_shape(self.h, &part.individualize(target, x));
            self.nodes += 1;
            if &shape == self.shape_at(depth + 1) {
                if let Some(p) = self.descend(next, depth + 1) {
                    return Some(p);
                }
            }
        }
        None
    }

    /// First non-identity automorphism in search order, deepest level first.
    fn find_nontrivial(&mut self) -> Option<Permutation> {
        for level in (0..self.levels.len()).rev() {
            let lv = &self.levels[level];
            let candidates: Vec<usize> =
                lv.part.cells[lv.target].iter().copied().filter(|&w| w != lv.chosen).collect();
            for w in candidates {
                if let Some(p) = self.search_from(level, w) {
                    return Some(p);
                }
            }
        }
        None
    }

    /// Generators level by level, with the group order as the product of orbit sizes.
    fn generators(&mut self) -> (Vec<Permutation>, Option<u64>) {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut order: Option<u64> = Some(1);
        for level in (0..self.levels.len()).rev() {
            let lv = &self.levels[level];
            let chosen = lv.chosen;
            let candidates = lv.part.cells[lv.target].clone();
            let mut orbit = orbit_of(chosen, &gens, self.h.n());
            for w in candidates {
                if orbit.contains(&w) {
                    continue;
                }
                if let Some(p) = self.search_from(level, w) {
                    gens.push(p);
                    orbit = orbit_of(chosen, &gens, self.h.n());
                }
            }
            order = order.and_then(|o| o.checked_mul(orbit.len() as u64));
        }
        (gens, order)
    }
}

fn orbit_of(v: usize, gens: &[Permutation], n: usize) -> HashSet<usize> {
    let mut seen = HashSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            debug_assert_eq!(g.len(), n);
            let y = g.apply(x);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Verdict of an automorphism analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub asymmetric: bool,
    pub witness: Option<Permutation>,
    pub generators: Vec<Permutation>,
    /// Exact order, present when it does not exceed the requested limit.
    pub group_order: Option<u64>,
    pub nodes_explored: u64,
}

fn require_two(h: &Hypergraph) -> Result<()> {
    if h.n() < 2 {
        return Err(Error::TooFewVertices { needed: 2, actual: h.n() });
    }
    Ok(())
}

/// Symmetry check with the full report: twin prefilter, then the search engine.
pub fn symmetry_report(h: &Hypergraph) -> Result<AutReport> {
    require_two(h)?;
    if let Some(p) = h.twin_swap_witness() {
        return Ok(AutReport {
            asymmetric: false,
            witness: Some(p.clone()),
            generators: vec![p],
            group_order: None,
            nodes_explored: 0,
        });
    }
    let mut engine = Engine::new(h, &OrderedPartition::unit(h.n()));
    let witness = engine.find_nontrivial();
    Ok(AutReport {
        asymmetric: witness.is_none(),
        generators: witness.iter().cloned().collect(),
        group_order: witness.is_none().then_some(1),
        witness,
        nodes_explored: engine.nodes,
    })
}

/// A non-identity automorphism of `h`, if one exists.
pub fn find_nontrivial_automorphism(h: &Hypergraph) -> Result<Option<Permutation>> {
    Ok(symmetry_report(h)?.witness)
}

pub fn is_asymmetric(h: &Hypergraph) -> Result<bool> {
    Ok(symmetry_report(h)?.asymmetric)
}

/// Search restricted to automorphisms mapping every cell of `colors` onto itself.
pub fn preserving_report(h: &Hypergraph, colors: &OrderedPartition) -> AutReport {
    let mut engine = Engine::new(h, colors);
    let witness = engine.find_nontrivial();
    AutReport {
        asymmetric: witness.is_none(),
        generators: witness.iter().cloned().collect(),
        group_order: witness.is_none().then_some(1),
        witness,
        nodes_explored: engine.nodes,
    }
}

pub fn find_nontrivial_preserving(h: &Hypergraph, colors: &OrderedPartition) -> Option<Permutation> {
    preserving_report(h, colors).witness
}

/// Generators of the full automorphism group, and its order when at most `limit`.
pub fn automorphism_group(h: &Hypergraph, limit: u64) -> Result<AutReport> {
    require_two(h)?;
    preserving_group(h, &OrderedPartition::unit(h.n()), limit)
}

/// Like [`automorphism_group`], restricted to automorphisms preserving every cell of `colors`.
pub fn preserving_group(h: &Hypergraph, colors: &OrderedPartition, limit: u64) -> Result<AutReport> {
    if limit == 0 {
        return Err(Error::InvalidParams("limit must be at least 1".into()));
    }
    let mut engine = Engine::new(h, colors);
    let (generators, order) = engine.generators();
    Ok(AutReport {
        asymmetric: generators.is_empty(),
        witness: generators.first().cloned(),
        group_order: order.filter(|&o| o <= limit),
        generators,
        nodes_explored: engine.nodes,
    })
}

/// All elements generated by `generators`, sorted; `None` once more than `limit` appear.
pub fn group_elements(n: usize, generators: &[Permutation], limit: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                if seen.len() == limit {
                    return None;
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut all: Vec<_> = seen.into_iter().collect();
    all.sort();
    Some(all)
}

fn edge_colors(h: &Hypergraph, e: usize) -> Result<OrderedPartition> {
    if e >= h.m() {
        return Err(Error::IndexOutOfRange { index: e, len: h.m() });
    }
    let members = h.edge(e).to_vec();
    let rest: Vec<usize> = (0..h.n()).filter(|v| members.binary_search(v).is_err()).collect();
    let mut cells = vec![members];
    if !rest.is_empty() {
        cells.push(rest);
    }
    OrderedPartition::new(h.n(), cells)
}

/// Search over automorphisms fixing edge `e` setwise.
pub fn edge_stabilizer_report(h: &Hypergraph, e: usize) -> Result<AutReport> {
    Ok(preserving_report(h, &edge_colors(h, e)?))
}

/// Generators and order of the setwise stabilizer of edge `e`.
pub fn edge_stabilizer_group(h: &Hypergraph, e: usize, limit: u64) -> Result<AutReport> {
    preserving_group(h, &edge_colors(h, e)?, limit)
}

/// A non-identity automorphism fixing edge `e` setwise.
pub fn edge_stabilizer_nontrivial(h: &Hypergraph, e: usize) -> Result<Option<Permutation>> {
    Ok(edge_stabilizer_report(h, e)?.witness)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Rotation,
    Reflection,
}

/// How an automorphism of a single component permutes its spine edges:
/// `E_i -> E_{i+j-1}` for a rotation, `E_i -> E_{j-i+1}` for a reflection,
/// with indices taken cyclically in `1..=len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LEdgeAction {
    pub kind: ActionKind,
    pub j: usize,
}

/// Classifies `p`'s action on the spine edges of a generated component.
///
/// Along the way checks that `p` keeps the `u` vertices, the `v` vertices and
/// the spine edges each as a set.
pub fn classify_l_edge_action(g: &Hypergraph, p: &Permutation) -> Result<LEdgeAction> {
    if !g.is_automorphism(p)? {
        return Err(Error::NotAnAutomorphism);
    }
    let names = g
        .edge_names()
        .ok_or_else(|| Error::InvalidParams("hypergraph carries no edge names".into()))?;

    let mut is_u = vec![false; g.n()];
    let mut is_v = vec![false; g.n()];
    for (idx, label) in g.labels().iter().enumerate() {
        let role: VertexRole = label.parse()?;
        is_u[idx] = role.kind == RoleKind::U && role.copy.is_none();
        is_v[idx] = role.kind == RoleKind::V && role.copy.is_none();
    }
    for v in 0..g.n() {
        let img = p.apply(v);
        if is_u[v] != is_u[img] {
            return Err(Error::StructureViolation(format!(
                "{} maps to {} across the u class",
                g.label(v),
                g.label(img)
            )));
        }
        if is_v[v] != is_v[img] {
            return Err(Error::StructureViolation(format!(
                "{} maps to {} across the v class",
                g.label(v),
                g.label(img)
            )));
        }
    }

    let spine_index = |name: &str| match name.parse::<EdgeRole>() {
        Ok(EdgeRole::L { i, copy: None }) => Some(i),
        _ => None,
    };
    let mut spine: Vec<(usize, usize)> = Vec::new();
    for (e, name) in names.iter().enumerate() {
        if let Some(i) = spine_index(name) {
            let img = g.find_edge(&g.edge_image(e, p)).ok_or(Error::NotAnAutomorphism)?;
            let m = spine_index(&names[img]).ok_or_else(|| {
                Error::StructureViolation(format!("spine edge {name} maps to {}", names[img]))
            })?;
            spine.push((i, m));
        }
    }
    let len = spine.len();
    if len == 0 {
        return Err(Error::InvalidParams("no spine edges named E_<i>".into()));
    }
    let wrap = |x: i64| -> usize { ((x - 1).rem_euclid(len as i64) + 1) as usize };
    let j = spine.iter().find(|(i, _)| *i == 1).map(|&(_, m)| m).ok_or_else(|| {
        Error::InvalidParams("spine edge E_1 missing".into())
    })?;
    let ji = j as i64;
    if spine.iter().all(|&(i, m)| wrap(i as i64 + ji - 1) == m) {
        return Ok(LEdgeAction { kind: ActionKind::Rotation, j });
    }
    if spine.iter().all(|&(i, m)| wrap(ji - i as i64 + 1) == m) {
        return Ok(LEdgeAction { kind: ActionKind::Reflection, j });
    }
    Err(Error::StructureViolation("spine action is neither a rotation nor a reflection".into()))
}
