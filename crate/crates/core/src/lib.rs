//! Asymmetric and minimal asymmetric uniform hypergraphs.
//!
//! The crate builds the sparse spine-and-layers families, the regular-graph
//! duals, and checks their claimed properties by computation:
//!
//! - [`hypergraph`]: the k-uniform model, degree and codegree predicates,
//!   induced sub-hypergraphs and permutations.
//! - [`aut`]: automorphism search by individualization and refinement, group
//!   generators and order, edge stabilizers, and spine-action classification.
//! - [`constructions`]: every generator family and the dual pipeline.
//! - [`connectivity`]: edge-disjoint Berge paths by max flow.
//! - [`minimality`]: exhaustive, deletion and sampled scans of induced
//!   sub-hypergraphs.
//! - [`io`] and [`cli`]: file formats and the command-line front end.
//!
//! ```
//! use asymhg::{aut, constructions};
//!
//! let h = constructions::gen_H3(2, 3).unwrap();
//! assert_eq!((h.n(), h.m()), (33, 18));
//! assert!(aut::find_nontrivial_automorphism(&h).unwrap().is_none());
//! ```

pub mod aut;
pub mod cli;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod minimality;
pub mod role;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, Permutation};

/// Runs `f` on a dedicated pool of `jobs` worker threads (at least one).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}
