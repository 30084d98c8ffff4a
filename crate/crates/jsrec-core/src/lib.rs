//! Core types and operations for the multiple measurement vector (MMV) problem:
//! seeded random instances, canonical-form rank reduction, and the exact
//! small-scale oracles (brute-force spark, uniqueness bound) that anchor the
//! recovery algorithms built on top.
//!
//! An MMV instance is `Y = A·X + N` where `A` is an `m×n` sensing matrix
//! (`m < n`), `X` is an `n×r` signal whose nonzero rows share a common support
//! of size `k`, and the columns of `N` are i.i.d. Gaussian noise. All
//! generation is driven by an explicit 64-bit seed so instances are
//! reproducible bit for bit.

pub mod canonical;
pub mod error;
pub mod instance;
pub mod io;
pub mod linalg;
pub mod spark;
pub mod support;

pub use canonical::{canonicalize, default_rank_tol, CanonicalProblem};
pub use error::CoreError;
pub use instance::{
    generate_instance, snr_of, Ensemble, InstanceParams, JointSparseSignal, NoisyInstance,
    SensingMatrix,
};
pub use spark::{l0_uniqueness_bound, spark_brute_force, SPARK_MAX_COLUMNS};
pub use support::SupportSet;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CoreError>;
