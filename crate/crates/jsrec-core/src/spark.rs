//! Brute-force spark computation and the l0 uniqueness bound it feeds.

use itertools::Itertools;
use nalgebra::DMatrix;

use crate::linalg::{numerical_rank, RANK_REL_TOL};
use crate::{CoreError, Result};

/// Combinatorial guard: refusing wider matrices keeps the subset enumeration
/// from blowing past desk scale.
pub const SPARK_MAX_COLUMNS: usize = 20;

/// Smallest number of linearly dependent columns of `a`, by exhaustive subset
/// search. Returns `n + 1` when no dependent subset exists (only possible for
/// matrices with at least as many rows as columns).
pub fn spark_brute_force(a: &DMatrix<f64>) -> Result<usize> {
    let (m, n) = a.shape();
    if n > SPARK_MAX_COLUMNS {
        return Err(CoreError::SparkTooLarge {
            n,
            limit: SPARK_MAX_COLUMNS,
        });
    }
    if n == 0 {
        return Ok(1);
    }

    let top = n.min(m + 1);
    for size in 1..=top {
        // any m+1 vectors in R^m are dependent
        if size == m + 1 {
            return Ok(size);
        }
        for subset in (0..n).combinations(size) {
            let cols: Vec<_> = subset.iter().map(|&j| a.column(j)).collect();
            let sub = DMatrix::from_columns(&cols);
            if numerical_rank(&sub, RANK_REL_TOL) < size {
                return Ok(size);
            }
        }
    }
    Ok(n + 1)
}

/// Theorem-level uniqueness threshold `(spark(A) + rank(B) − 1) / 2`: a
/// row-sparse solution with `‖X‖₀` strictly below this value is the unique
/// solution of `AX = B`.
///
/// Callers must pass `spark ≥ 2` and `rank ≥ 1`.
pub fn l0_uniqueness_bound(spark: usize, rank: usize) -> f64 {
    debug_assert!(spark >= 2 && rank >= 1);
    (spark + rank - 1) as f64 / 2.0
}
