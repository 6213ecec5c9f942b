//! Partially p-perfect hash families for intersecting hypergraphs.
//!
//! A hash function `h: [n] -> [b]` is partially p-perfect on a vertex set
//! `S` when it attains at least `min(p, |S|)` distinct buckets on `S`. Given
//! a hypergraph `G`, a family of such functions is a system for `G` at level
//! `p` when every edge has at least one partially p-perfect member; the
//! minimum system size is written `lambda(G, p, b)`. This crate builds,
//! verifies, and exactly sizes such systems at desk scale:
//!
//! - [`hypergraph`]: the input families, their intersection levels, the
//!   complete-uniform lower-bound witnesses, and the text format.
//! - [`family`]: hash functions and families, coverage reports, JSON.
//! - [`constructors`]: greedy and minimal-edge builders, the Las-Vegas
//!   randomized builder, and the pigeonhole lower-bound certificate.
//! - [`solver`]: exact `lambda` by symmetry-reduced exhaustive search.
//! - [`measure`]: biased-subset containment probabilities and the `prob^t`
//!   bound check for t-intersecting families.
//! - [`bounds`]: closed-form bound calculators in exact arithmetic.
//!
//! ```
//! use pphf::{lambda_exact, witness_triangle, SearchBudget};
//!
//! let triangle = witness_triangle();
//! let result = lambda_exact(&triangle, 2, 2, SearchBudget::default()).unwrap();
//! assert_eq!(result.value, Some(2)); // two 2-bucket functions are needed
//! let family = result.certificate.unwrap();
//! assert!(family.covers(&triangle, 2).unwrap().is_covering());
//! ```

pub mod bounds;
pub mod constructors;
pub mod error;
pub mod family;
pub mod hypergraph;
pub mod measure;
pub mod solver;

pub use bounds::{partite_cover_lower_bound, union_bound_value, CoverBoundQuery};
pub use constructors::{
    greedy_two_bucket, greedy_two_bucket_with_order, min_random_family_size,
    minimal_edge_family_b2, minimal_edge_function_b3, pigeonhole_witness_check,
    randomized_system, CertifiedSystem, RandomSeed, RandomizedSystem, DEFAULT_MAX_ATTEMPTS,
};
pub use error::Error;
pub use family::{HashFamily, HashFunction, SystemReport};
pub use hypergraph::{
    witness_complete_uniform, witness_complete_uniform_capped, witness_triangle, Hypergraph,
    IntersectionLevel,
};
pub use measure::{
    check_containment_bound, containment_probability_exact, containment_probability_mc,
    sample_biased_subset, BiasedTrialConfig, ContainmentReport, MeasureMode,
};
pub use solver::{
    canonical_functions, lambda_exact, no_single_function_system, LambdaResult, SearchBudget,
};
