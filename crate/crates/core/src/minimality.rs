//! Scans of induced sub-hypergraphs for the minimal asymmetry property.
//!
//! Subsets are independent work items and run on the ambient rayon pool (see
//! [`crate::with_jobs`]). Reports depend only on the enumeration order, never
//! on which worker finishes first.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aut::{self, AutReport};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Permutation};

pub const DEFAULT_MAX_EXHAUSTIVE_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every subset with at least two vertices and at least one vertex removed.
    Exhaustive,
    /// The `n` single-vertex deletions.
    Deletion1,
    /// The `n(n-1)/2` two-vertex deletions.
    Deletion2,
    /// All single deletions followed by seeded random subsets.
    Sample,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "deletion1" => Ok(Mode::Deletion1),
            "deletion2" => Ok(Mode::Deletion2),
            "sample" => Ok(Mode::Sample),
            other => Err(Error::InvalidParams(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub mode: Mode,
    pub max_exhaustive_n: usize,
    pub samples: usize,
    pub seed: u64,
}

impl ScanOptions {
    pub fn new(mode: Mode) -> Self {
        Self { mode, max_exhaustive_n: DEFAULT_MAX_EXHAUSTIVE_N, samples: 500, seed: 0 }
    }

    pub fn sampled(samples: usize, seed: u64) -> Self {
        Self { samples, seed, ..Self::new(Mode::Sample) }
    }
}

/// An induced sub-hypergraph found to be asymmetric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub subset: Vec<usize>,
    pub labels: Vec<String>,
    pub report: AutReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub mode: Mode,
    pub asymmetric_root: bool,
    /// Subsets examined in enumeration order, up to and including any counterexample.
    pub subsets_checked: usize,
    pub all_symmetric: bool,
    pub counterexample: Option<Counterexample>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

impl MinimalityReport {
    /// Root asymmetric and every scanned subset symmetric.
    pub fn passed(&self) -> bool {
        self.asymmetric_root && self.all_symmetric
    }

    /// Whether the scan certifies minimal asymmetry outright.
    pub fn certified(&self) -> bool {
        self.mode == Mode::Exhaustive && self.passed()
    }
}

/// `None` when `h` is symmetric, otherwise the asymmetric verdict.
///
/// Two isolated vertices and twin transpositions settle most subsets before
/// the search engine runs.
pub fn asymmetry_certificate(h: &Hypergraph) -> Result<Option<AutReport>> {
    if h.isolated_vertices().len() >= 2 {
        return Ok(None);
    }
    let report = aut::symmetry_report(h)?;
    Ok(report.asymmetric.then_some(report))
}

fn complement(n: usize, removed: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !removed.contains(v)).collect()
}

fn deletion1(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|v| complement(n, &[v])).collect()
}

fn deletion2(n: usize) -> Vec<Vec<usize>> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| complement(n, &[a, b]))).collect()
}

/// All `size`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..size).rev().find(|&i| cur[i] != i + n - size) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Subset sizes uniform on `2..n`, then a uniform subset of that size.
pub fn sample_subsets(n: usize, samples: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let size = rng.gen_range(2..n);
            let mut s = sample(&mut rng, n, size).into_vec();
            s.sort_unstable();
            s
        })
        .collect()
}

/// First asymmetric subset in `batch`, by position.
fn scan(h: &Hypergraph, batch: &[Vec<usize>]) -> Result<Option<(usize, AutReport)>> {
    batch
        .par_iter()
        .enumerate()
        .map(|(i, w)| Ok(asymmetry_certificate(&h.induced(w)?)?.map(|r| (i, r))))
        .find_map_first(|r: Result<Option<(usize, AutReport)>>| r.transpose())
        .transpose()
}

pub fn check_minimal(h: &Hypergraph, opts: &ScanOptions) -> Result<MinimalityReport> {
    let n = h.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, actual: n });
    }
    if opts.mode == Mode::Exhaustive && n > opts.max_exhaustive_n {
        return Err(Error::SizeLimitExceeded { n, limit: opts.max_exhaustive_n });
    }
    let mode_sampled = opts.mode == Mode::Sample;
    if mode_sampled && n < 3 && opts.samples > 0 {
        return Err(Error::InvalidParams("sampling needs at least 3 vertices".into()));
    }
    let asymmetric_root = aut::symmetry_report(h)?.asymmetric;

    let batches: Box<dyn Iterator<Item = Vec<Vec<usize>>>> = match opts.mode {
        Mode::Exhaustive => Box::new((2..n).map(move |size| combinations(n, size))),
        Mode::Deletion1 => Box::new(std::iter::once(deletion1(n))),
        Mode::Deletion2 => Box::new(std::iter::once(deletion2(n))),
        Mode::Sample => Box::new(
            [deletion1(n), sample_subsets(n, opts.samples, opts.seed)].into_iter(),
        ),
    };

    let mut checked = 0;
    let mut counterexample = None;
    for batch in batches {
        if let Some((i, report)) = scan(h, &batch)? {
            checked += i + 1;
            let subset = batch[i].clone();
            let labels = subset.iter().map(|&v| h.label(v).to_string()).collect();
            counterexample = Some(Counterexample { subset, labels, report });
            break;
        }
        checked += batch.len();
    }
    Ok(MinimalityReport {
        mode: opts.mode,
        asymmetric_root,
        subsets_checked: checked,
        all_symmetric: counterexample.is_none(),
        counterexample,
        seed: mode_sampled.then_some(opts.seed),
        samples: mode_sampled.then_some(opts.samples),
    })
}

/// A non-trivial automorphism of `h` with one vertex removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionWitness {
    pub deleted: usize,
    pub deleted_label: String,
    /// Acts on the induced sub-hypergraph's indices (original order, `deleted` skipped).
    pub witness: Permutation,
    pub cycles: Vec<Vec<String>>,
}

pub fn deletion_witness_table(h: &Hypergraph) -> Result<Vec<DeletionWitness>> {
    let n = h.n();
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, actual: n });
    }
    (0..n)
        .into_par_iter()
        .map(|v| {
            let sub = h.induced(&complement(n, &[v]))?;
            let witness = aut::find_nontrivial_automorphism(&sub)?.ok_or_else(|| {
                Error::AsymmetricSubgraphFound { vertex: v, label: h.label(v).to_string() }
            })?;
            let cycles = witness
                .cycles()
                .into_iter()
                .map(|c| c.into_iter().map(|x| sub.label(x).to_string()).collect())
                .collect();
            Ok(DeletionWitness { deleted: v, deleted_label: h.label(v).to_string(), witness, cycles })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![
            vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]
        ]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(5, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn symmetric_root_is_reported() {
        let h = Hypergraph::build(3, labels(4), vec![vec![0, 1, 2]]).unwrap();
        let r = check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)).unwrap();
        assert!(!r.asymmetric_root);
        assert!(!r.passed());
    }

    #[test]
    fn size_limit() {
        let h = Hypergraph::build(2, labels(21), vec![]).unwrap();
        assert_eq!(
            check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)),
            Err(Error::SizeLimitExceeded { n: 21, limit: 20 })
        );
        let tiny = Hypergraph::build(2, labels(1), vec![]).unwrap();
        assert!(matches!(check_minimal(&tiny, &ScanOptions::new(Mode::Deletion1)), Err(Error::TooFewVertices { .. })));
    }

    #[test]
    fn samples_are_reproducible_and_in_range() {
        let a = sample_subsets(30, 200, 7);
        assert_eq!(a, sample_subsets(30, 200, 7));
        assert_ne!(a, sample_subsets(30, 200, 8));
        for s in &a {
            assert!(s.len() >= 2 && s.len() < 30);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
    }

    /// Tree with legs of the given lengths hanging off vertex 0.
    fn spider(legs: &[usize]) -> Hypergraph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push(vec![prev, next]);
                prev = next;
                next += 1;
            }
        }
        Hypergraph::build(2, labels(next), edges).unwrap()
    }

    #[test]
    fn smallest_asymmetric_tree_is_minimal() {
        let h = spider(&[1, 2, 3]);
        let r = check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)).unwrap();
        assert!(r.certified(), "{r:?}");
        assert_eq!(r.subsets_checked, (1 << 7) - 7 - 1 - 1);
    }

    #[test]
    fn longer_leg_contains_the_smaller_tree() {
        let h = spider(&[1, 2, 4]);
        let r = check_minimal(&h, &ScanOptions::new(Mode::Exhaustive)).unwrap();
        assert!(r.asymmetric_root);
        let c = r.counterexample.expect("spider(1,2,3) sits inside");
        assert_eq!(c.subset.len(), 7);
        assert!(c.report.asymmetric);
        let d = check_minimal(&h, &ScanOptions::new(Mode::Deletion1)).unwrap();
        assert!(!d.all_symmetric);
    }
}
