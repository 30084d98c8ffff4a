//! Rank reduction of the measurement matrix to canonical form via the
//! singular value decomposition.

use nalgebra::DMatrix;

use crate::{CoreError, Result};

/// The canonical-form measurement matrix `B` with full column rank, together
/// with the reducing transform and the singular spectrum it was cut from.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalProblem {
    /// `m×r_eff` full-column-rank matrix spanning the measurement column space.
    pub basis: DMatrix<f64>,
    /// Numerical rank of the measurements.
    pub rank: usize,
    /// `r×r_eff` matrix with `basis = Y · transform` (the retained right
    /// singular vectors).
    pub transform: DMatrix<f64>,
    /// All `min(m, r)` singular values, nonincreasing.
    pub singular_values: Vec<f64>,
    pub rank_tol: f64,
}

/// Default relative rank tolerance, scaled by the larger measurement
/// dimension to absorb growth of rounding error with problem size.
pub fn default_rank_tol(m: usize, r: usize) -> f64 {
    1e-10 * m.max(r) as f64
}

/// Reduces measurements `Y` (`m×r`) to canonical form: `B = U_kept · Σ_kept`,
/// keeping singular values above `rank_tol` times the largest. The span of
/// `B` equals the span of `Y` and `B` has full column rank.
pub fn canonicalize(y: &DMatrix<f64>, rank_tol: f64) -> Result<CanonicalProblem> {
    if !(0.0 < rank_tol && rank_tol < 1.0) {
        return Err(CoreError::InvalidRankTol(rank_tol));
    }
    if !y.iter().all(|v| v.is_finite()) {
        return Err(CoreError::NonFiniteEntries);
    }
    let (m, r) = y.shape();
    if m == 0 || r == 0 {
        return Err(CoreError::InvalidDimensions(
            "canonicalize needs a nonempty matrix".into(),
        ));
    }

    let svd = y.clone().svd(true, true);
    let u = svd.u.as_ref().expect("u requested");
    let v_t = svd.v_t.as_ref().expect("v_t requested");

    let mut singular_values: Vec<f64> = svd.singular_values.iter().copied().collect();
    singular_values.sort_by(|a, b| b.total_cmp(a));
    let sigma_max = singular_values[0];
    if sigma_max == 0.0 {
        return Err(CoreError::ZeroMeasurement);
    }

    // nalgebra returns the singular values sorted descending; pair each with
    // its vector index defensively in case of ties.
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));

    let rank = order
        .iter()
        .take_while(|&&i| svd.singular_values[i] > rank_tol * sigma_max)
        .count();

    let mut basis = DMatrix::zeros(m, rank);
    let mut transform = DMatrix::zeros(r, rank);
    for (out, &i) in order[..rank].iter().enumerate() {
        let sigma = svd.singular_values[i];
        basis.column_mut(out).copy_from(&(u.column(i) * sigma));
        transform.column_mut(out).copy_from(&v_t.row(i).transpose());
    }

    Ok(CanonicalProblem {
        basis,
        rank,
        transform,
        singular_values,
        rank_tol,
    })
}
