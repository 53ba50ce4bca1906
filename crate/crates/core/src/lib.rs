//! Polychromatic colorings of permutation instances and strip sets.
//!
//! The library colors finite point sets so that every axis-aligned strip
//! containing enough points sees all `k` colors, and dually colors strip
//! sets so that every sufficiently deep point does. Point sets are reduced
//! to their per-axis orderings, so the algorithmic core works on `d`
//! (possibly circular) permutations of `n` items:
//!
//! - [`planar`]: the tuple-multigraph coloring achieving window `2k - 1` for
//!   two linear permutations and `2k` for two circular ones, plus the
//!   polynomial window-2 decision for `k = 2`.
//! - [`lll`]: a resampling colorer for any `d` with the explicit
//!   local-lemma condition it is driven by.
//! - [`dual`]: interval and strip coloring so that `d(k-1)+1`-deep points
//!   are polychromatic, with an exact depth verifier.
//! - [`constructions`]: generators for the lower-bound instances (cluster
//!   constructions from Hamiltonian path decompositions, and their dual).
//! - [`hardness`]: the NAE-3SAT reduction to three permutations, executable
//!   in both directions.
//! - [`oracle`]: brute-force and backtracking ground truth.
//! - [`model`] / [`geometry`]: the shared instance types, verifiers and
//!   geometric front ends everything above is checked against.

pub mod constructions;
pub mod dual;
pub mod error;
pub mod geometry;
pub mod hardness;
pub mod lll;
pub mod model;
pub mod oracle;
pub mod planar;

pub use error::{Error, Result};
pub use model::{
    bounds_table, min_polychromatic_window, random_coloring, random_instance, verify_windows,
    BoundsTable, Coloring, PermutationInstance, VerificationReport, WindowViolation,
};
