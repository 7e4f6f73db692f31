//! Generators for the hypergraph families and the regular-graph dual pipeline.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::aut;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Permutation};
use crate::role::{CopyTag, EdgeRole, VertexRole};

/// Attempts the pairing model makes before giving up.
pub const PAIRING_ATTEMPTS: usize = 100_000;
/// Random regular graphs drawn while looking for an asymmetric one.
pub const ASYMMETRY_ATTEMPTS: usize = 1_000;

/// Vertex and edge lists of one spine-and-layers component, before offsetting.
struct Component {
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
    names: Vec<String>,
}

/// Index arithmetic for the component with `t*k` spine edges.
struct Layout {
    k: usize,
    len: usize,
}

impl Layout {
    fn norm(&self, i: usize) -> usize {
        (i - 1) % self.len + 1
    }
    fn u(&self, i: usize) -> usize {
        self.norm(i) - 1
    }
    fn v(&self, i: usize) -> usize {
        self.len + self.norm(i) - 1
    }
    fn w(&self, i: usize, j: usize) -> usize {
        2 * self.len + (self.norm(i) - 1) * (self.k - 3) + (j - 1)
    }
}

fn check_g_params(k: usize, t: usize) -> Result<()> {
    if k < 3 || t < 2 {
        return Err(Error::InvalidParams(format!("need k >= 3 and t >= 2, got k={k}, t={t}")));
    }
    Ok(())
}

fn component(k: usize, t: usize, copy: Option<CopyTag>) -> Component {
    let lay = Layout { k, len: t * k };
    let len = lay.len;
    let mut labels = Vec::with_capacity(len * (k - 1));
    labels.extend((1..=len).map(|i| VertexRole::u(i).with_copy(copy).to_string()));
    labels.extend((1..=len).map(|i| VertexRole::v(i).with_copy(copy).to_string()));
    for i in 1..=len {
        labels.extend((1..=k - 3).map(|j| VertexRole::w(i, j).with_copy(copy).to_string()));
    }

    let mut edges = Vec::with_capacity(len + t * (k - 3));
    let mut names = Vec::with_capacity(edges.capacity());
    for i in 1..=len {
        let mut e = vec![lay.v(i), lay.u(i), lay.v(i + 1)];
        e.extend((1..=k - 3).map(|j| lay.w(i, j)));
        edges.push(e);
        names.push(EdgeRole::L { i, copy }.to_string());
    }
    for j in 1..=k - 3 {
        for s in 1..=t {
            let i = lay.norm(j + s * k);
            edges.push((0..k).map(|d| lay.w(i + d, j)).collect());
            names.push(EdgeRole::Cyclic { i, j, copy }.to_string());
        }
    }
    Component { labels, edges, names }
}

/// Accumulates disjoint components plus extra vertices and edges.
#[derive(Default)]
struct Assembler {
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
    names: Vec<String>,
}

impl Assembler {
    /// Appends a component, returning the offset of its first vertex.
    fn push(&mut self, c: Component) -> usize {
        let offset = self.labels.len();
        self.labels.extend(c.labels);
        self.edges.extend(c.edges.into_iter().map(|e| e.into_iter().map(|v| v + offset).collect()));
        self.names.extend(c.names);
        offset
    }

    fn vertex(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, members: Vec<usize>, name: EdgeRole) {
        self.edges.push(members);
        self.names.push(name.to_string());
    }

    fn finish(self, k: usize) -> Result<Hypergraph> {
        Hypergraph::build_named(k, self.labels, self.edges, Some(self.names))
    }
}

/// The spine-and-layers k-graph with `t*k` spine edges.
#[allow(non_snake_case)]
pub fn gen_G(k: usize, t: usize) -> Result<Hypergraph> {
    check_g_params(k, t)?;
    let mut asm = Assembler::default();
    asm.push(component(k, t, None));
    asm.finish(k)
}

/// Shift of every index family of `gen_G(k, t)` by `shift` positions.
pub fn g_rotation(k: usize, t: usize, shift: usize) -> Result<Permutation> {
    check_g_params(k, t)?;
    let lay = Layout { k, len: t * k };
    let mut image = vec![0; lay.len * (k - 1)];
    for i in 1..=lay.len {
        image[lay.u(i)] = lay.u(i + shift);
        image[lay.v(i)] = lay.v(i + shift);
        for j in 1..=k - 3 {
            image[lay.w(i, j)] = lay.w(i + shift, j);
        }
    }
    Permutation::new(image)
}

/// `k-1` disjoint components with strictly increasing lengths, joined by an
/// edge through a new vertex `x0` and each component's `u_1`.
#[allow(non_snake_case)]
pub fn gen_H(k: usize, ts: &[usize]) -> Result<Hypergraph> {
    check_h_params(k, ts)?;
    let mut asm = Assembler::default();
    let mut joints = Vec::with_capacity(k);
    for (l, &t) in ts.iter().enumerate() {
        joints.push(asm.push(component(k, t, Some(CopyTag::Numbered(l + 1)))));
    }
    joints.push(asm.vertex(VertexRole::x0().to_string()));
    asm.edge(joints, EdgeRole::Zero);
    asm.finish(k)
}

fn check_h_params(k: usize, ts: &[usize]) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("need k >= 3, got {k}")));
    }
    if ts.len() != k - 1 {
        return Err(Error::InvalidParams(format!("need {} lengths for k={k}, got {}", k - 1, ts.len())));
    }
    if ts[0] < 2 || ts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParams(format!("lengths must satisfy 2 <= t1 < t2 < ..., got {ts:?}")));
    }
    Ok(())
}

fn check_pair(t: usize, t_prime: usize) -> Result<()> {
    if t < 2 || t >= t_prime {
        return Err(Error::InvalidParams(format!("need 2 <= t < t', got t={t}, t'={t_prime}")));
    }
    Ok(())
}

/// Two 3-uniform components joined through `x0`, each with a pendant edge
/// through `y` (respectively `y'`) on its second and third `u` vertices.
#[allow(non_snake_case)]
pub fn gen_H3(t: usize, t_prime: usize) -> Result<Hypergraph> {
    check_pair(t, t_prime)?;
    let mut asm = Assembler::default();
    let a = asm.push(component(3, t, None));
    let b = asm.push(component(3, t_prime, Some(CopyTag::Prime)));
    let x0 = asm.vertex(VertexRole::x0().to_string());
    let y = asm.vertex(VertexRole::y().to_string());
    let yp = asm.vertex(VertexRole::y_prime().to_string());
    // u_i sits at offset i-1 inside each component.
    asm.edge(vec![x0, a, b], EdgeRole::Zero);
    asm.edge(vec![y, a + 1, a + 2], EdgeRole::Y);
    asm.edge(vec![yp, b + 1, b + 2], EdgeRole::YPrime);
    asm.finish(3)
}

/// Two 5-uniform components joined by `{x0, u_1, u_2, u'_1, u'_2}`.
#[allow(non_snake_case)]
pub fn gen_H5(t: usize, t_prime: usize) -> Result<Hypergraph> {
    check_pair(t, t_prime)?;
    let mut asm = Assembler::default();
    let a = asm.push(component(5, t, None));
    let b = asm.push(component(5, t_prime, Some(CopyTag::Prime)));
    let x0 = asm.vertex(VertexRole::x0().to_string());
    asm.edge(vec![x0, a, a + 1, b, b + 1], EdgeRole::Zero);
    asm.finish(5)
}

const FRUCHT_EDGES: [[usize; 2]; 18] = [
    [0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [6, 0],
    [0, 7], [1, 7], [2, 8], [3, 9], [4, 9], [5, 10], [6, 10],
    [7, 11], [8, 11], [8, 9], [10, 11],
];

/// The 12-vertex cubic graph with trivial automorphism group.
pub fn frucht() -> Hypergraph {
    let labels = (0..12).map(|i| i.to_string()).collect();
    Hypergraph::build(2, labels, FRUCHT_EDGES.iter().map(|e| e.to_vec()).collect())
        .expect("fixed edge list is valid")
}

fn check_regular_params(n: usize, r: usize) -> Result<()> {
    if r < 3 || r >= n || !(n * r).is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("need 3 <= r < n with n*r even, got n={n}, r={r}")));
    }
    Ok(())
}

fn pairing_attempt<R: Rng>(n: usize, r: usize, rng: &mut R) -> Option<Vec<Vec<usize>>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    points.shuffle(rng);
    let mut edges: Vec<Vec<usize>> = points
        .chunks(2)
        .map(|p| if p[0] < p[1] { vec![p[0], p[1]] } else { vec![p[1], p[0]] })
        .collect();
    if edges.iter().any(|e| e[0] == e[1]) {
        return None;
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(edges)
}

fn random_regular_from<R: Rng>(n: usize, r: usize, rng: &mut R, attempts: usize) -> Result<Hypergraph> {
    for _ in 0..attempts {
        if let Some(edges) = pairing_attempt(n, r, rng) {
            let labels = (0..n).map(|i| i.to_string()).collect();
            return Hypergraph::build(2, labels, edges);
        }
    }
    Err(Error::RetryLimitExceeded(attempts))
}

/// A simple r-regular graph from the pairing model, resampling whenever a
/// loop or a repeated pair appears.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Hypergraph> {
    random_regular_with_attempts(n, r, seed, PAIRING_ATTEMPTS)
}

pub fn random_regular_with_attempts(n: usize, r: usize, seed: u64, attempts: usize) -> Result<Hypergraph> {
    check_regular_params(n, r)?;
    random_regular_from(n, r, &mut ChaCha8Rng::seed_from_u64(seed), attempts)
}

/// Draws random r-regular graphs from one seeded stream until one is asymmetric.
pub fn asymmetric_regular(n: usize, r: usize, seed: u64, attempts: usize) -> Result<Hypergraph> {
    check_regular_params(n, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let g = random_regular_from(n, r, &mut rng, PAIRING_ATTEMPTS)?;
        if aut::is_asymmetric(&g)? {
            return Ok(g);
        }
    }
    Err(Error::RetryLimitExceeded(attempts))
}

fn require_graph(g: &Hypergraph) -> Result<()> {
    if g.k() != 2 {
        return Err(Error::InvalidParams(format!("expected a 2-graph, got k={}", g.k())));
    }
    Ok(())
}

/// Indices of the edges incident to `v`.
pub fn adjacency_set(g: &Hypergraph, v: usize) -> Result<Vec<usize>> {
    require_graph(g)?;
    g.degree(v)?;
    Ok(g.incident(v).to_vec())
}

/// The hypergraph dual: one vertex per edge of `g`, one edge per adjacency set.
///
/// Dual vertex `i` stands for edge `i` of `g` and is labelled `e_<a>_<b>` with
/// the endpoint labels in sorted order.
pub fn dual(g: &Hypergraph) -> Result<Hypergraph> {
    require_graph(g)?;
    if !g.is_regular() {
        return Err(Error::NotRegular);
    }
    let r = g.max_degree();
    if r < 2 {
        return Err(Error::DegreeTooLow(r));
    }
    let labels = g
        .edges()
        .iter()
        .map(|e| {
            let mut ends = [g.label(e[0]), g.label(e[1])];
            ends.sort_unstable();
            format!("e_{}_{}", ends[0], ends[1])
        })
        .collect();
    let edges = (0..g.n()).map(|v| g.incident(v).to_vec()).collect();
    let names = (0..g.n()).map(|v| format!("A_{}", g.label(v))).collect();
    Hypergraph::build_named(r, labels, edges, Some(names))
}

/// Vertex map of `g` induced by an automorphism of `dual(g)`: each vertex goes
/// to the vertex whose adjacency set is the image of its own.
pub fn lift_dual_automorphism(g: &Hypergraph, p: &Permutation) -> Result<Permutation> {
    require_graph(g)?;
    if p.len() != g.m() {
        return Err(Error::LengthMismatch { expected: g.m(), actual: p.len() });
    }
    let by_set: HashMap<&[usize], usize> = (0..g.n()).map(|v| (g.incident(v), v)).collect();
    let mut image = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut mapped: Vec<usize> = g.incident(v).iter().map(|&e| p.apply(e)).collect();
        mapped.sort_unstable();
        image.push(*by_set.get(mapped.as_slice()).ok_or(Error::NotAnAutomorphism)?);
    }
    Permutation::new(image)
}

/// Parameters for one generator family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionParams {
    G { k: usize, t: usize },
    H { k: usize, ts: Vec<usize> },
    H3 { t: usize, t_prime: usize },
    H5 { t: usize, t_prime: usize },
    Frucht,
    RandomRegular { n: usize, r: usize, seed: u64 },
    /// Dual of an asymmetric r-regular graph: the Frucht graph when `n` is
    /// absent and `r = 3`, otherwise a filtered random regular graph.
    Dual { r: usize, n: Option<usize>, seed: u64 },
}

impl ConstructionParams {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::G { k, t } => check_g_params(*k, *t),
            Self::H { k, ts } => check_h_params(*k, ts),
            Self::H3 { t, t_prime } | Self::H5 { t, t_prime } => check_pair(*t, *t_prime),
            Self::Frucht => Ok(()),
            Self::RandomRegular { n, r, .. } => check_regular_params(*n, *r),
            Self::Dual { r, n: None, .. } if *r != 3 => {
                Err(Error::InvalidParams(format!("r={r} needs an explicit vertex count n")))
            }
            Self::Dual { r, n: Some(n), .. } => check_regular_params(*n, *r),
            Self::Dual { .. } => Ok(()),
        }
    }
}

/// A generated hypergraph with any caveats about it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Hypergraph,
    pub params: ConstructionParams,
    pub warnings: Vec<String>,
}

pub fn generate(params: &ConstructionParams) -> Result<Generated> {
    params.validate()?;
    let mut warnings = Vec::new();
    let graph = match params {
        ConstructionParams::G { k, t } => gen_G(*k, *t)?,
        ConstructionParams::H { k, ts } => {
            if *k == 3 || *k == 5 {
                warnings.push(format!("non-asymmetric for k={k}"));
            }
            gen_H(*k, ts)?
        }
        ConstructionParams::H3 { t, t_prime } => gen_H3(*t, *t_prime)?,
        ConstructionParams::H5 { t, t_prime } => gen_H5(*t, *t_prime)?,
        ConstructionParams::Frucht => frucht(),
        ConstructionParams::RandomRegular { n, r, seed } => random_regular(*n, *r, *seed)?,
        ConstructionParams::Dual { r, n, seed } => {
            let base = match n {
                None => frucht(),
                Some(n) => asymmetric_regular(*n, *r, *seed, ASYMMETRY_ATTEMPTS)?,
            };
            dual(&base)?
        }
    };
    Ok(Generated { graph, params: params.clone(), warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        assert!(gen_G(2, 2).is_err());
        assert!(gen_G(3, 1).is_err());
        assert!(gen_H(4, &[3, 3, 4]).is_err());
        assert!(gen_H(4, &[2, 3]).is_err());
        assert!(gen_H(4, &[1, 3, 4]).is_err());
        assert!(gen_H3(3, 2).is_err());
        assert!(gen_H3(1, 2).is_err());
        assert!(gen_H5(2, 2).is_err());
        assert!(random_regular(5, 3, 0).is_err());
        assert!(random_regular(4, 4, 0).is_err());
        assert!(random_regular(6, 2, 0).is_err());
    }

    #[test]
    fn g_small_counts() {
        let g = gen_G(3, 2).unwrap();
        assert_eq!((g.n(), g.m()), (12, 6));
        let g = gen_G(5, 2).unwrap();
        assert_eq!((g.n(), g.m()), (40, 14));
        assert!(g.edge_by_name("E_{6,1}").is_some());
        assert!(g.edge_by_name("E_{1,1}").is_some());
        assert!(g.edge_by_name("E_{7,2}").is_some());
        assert!(g.edge_by_name("E_{2,2}").is_some());
    }

    #[test]
    fn spine_edge_members() {
        let g = gen_G(4, 2).unwrap();
        let e = g.edge_by_name("E_8").unwrap();
        let mut members: Vec<&str> = g.edge(e).iter().map(|&v| g.label(v)).collect();
        members.sort_unstable();
        assert_eq!(members, ["u_8", "v_1", "v_8", "w_8_1"]);
        let c = g.edge_by_name("E_{5,1}").unwrap();
        let mut members: Vec<&str> = g.edge(c).iter().map(|&v| g.label(v)).collect();
        members.sort_unstable();
        assert_eq!(members, ["w_5_1", "w_6_1", "w_7_1", "w_8_1"]);
    }

    #[test]
    fn rotation_by_k_is_an_automorphism() {
        for k in 3..=7 {
            for t in 2..=3 {
                let g = gen_G(k, t).unwrap();
                let p = g_rotation(k, t, k).unwrap();
                assert!(g.is_automorphism(&p).unwrap(), "k={k} t={t}");
            }
        }
    }

    #[test]
    fn random_regular_is_seeded() {
        let a = random_regular(12, 3, 1).unwrap();
        let b = random_regular(12, 3, 1).unwrap();
        assert_eq!(a, b);
        assert!((0..12).all(|v| a.degree(v).unwrap() == 3));
        let c = random_regular(12, 3, 2).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn retry_limit_is_reported() {
        // n = r + 1 admits only the complete graph, which the pairing model rarely hits.
        assert_eq!(random_regular_with_attempts(8, 7, 3, 1), Err(Error::RetryLimitExceeded(1)));
    }

    #[test]
    fn dual_errors() {
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let star = Hypergraph::build(2, labels.clone(), vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert_eq!(dual(&star), Err(Error::NotRegular));
        let matching = Hypergraph::build(2, labels, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(dual(&matching), Err(Error::DegreeTooLow(1)));
        assert!(dual(&gen_G(3, 2).unwrap()).is_err());
    }

    #[test]
    fn dual_of_four_cycle_is_a_four_cycle() {
        let labels: Vec<String> = ["a", "b", "c", "d"].map(String::from).to_vec();
        let c4 = Hypergraph::build(2, labels, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let d = dual(&c4).unwrap();
        assert_eq!((d.k(), d.n(), d.m()), (2, 4, 4));
        assert!(d.is_regular() && d.max_degree() == 2);
        assert_eq!(d.labels(), &["e_a_b", "e_a_d", "e_b_c", "e_c_d"]);
    }

    #[test]
    fn generate_warns_for_three_and_five() {
        let g = generate(&ConstructionParams::H { k: 3, ts: vec![2, 3] }).unwrap();
        assert_eq!(g.warnings, ["non-asymmetric for k=3"]);
        let g = generate(&ConstructionParams::H { k: 4, ts: vec![2, 3, 4] }).unwrap();
        assert!(g.warnings.is_empty());
        assert!(generate(&ConstructionParams::Dual { r: 4, n: None, seed: 0 }).is_err());
    }
}
