//! Orthonormal-factorization helpers shared by canonicalization and the
//! subspace recovery criteria. Projections always go through an orthonormal
//! basis of the column block, never through normal equations.

use nalgebra::{DMatrix, DVector};

/// Relative tolerance used for rank decisions when the caller does not supply
/// one: singular values (or pivoted R diagonals) below `RANK_REL_TOL` times
/// the largest are treated as zero.
pub const RANK_REL_TOL: f64 = 1e-10;

/// Numerical rank via rank-revealing (column-pivoted) QR: the number of
/// diagonal entries of R above `rel_tol` times the largest.
pub fn numerical_rank(mat: &DMatrix<f64>, rel_tol: f64) -> usize {
    if mat.ncols() == 0 || mat.nrows() == 0 {
        return 0;
    }
    let qr = mat.clone().col_piv_qr();
    let r = qr.r();
    let lead = r[(0, 0)].abs();
    if lead == 0.0 {
        return 0;
    }
    let p = mat.nrows().min(mat.ncols());
    (0..p).take_while(|&i| r[(i, i)].abs() > rel_tol * lead).count()
}

/// Orthonormal basis of the column space of `mat`, truncated to its numerical
/// rank. Returns an `m×0` matrix for a (numerically) zero input.
pub fn orthonormal_basis(mat: &DMatrix<f64>, rel_tol: f64) -> DMatrix<f64> {
    let m = mat.nrows();
    if mat.ncols() == 0 {
        return DMatrix::zeros(m, 0);
    }
    let qr = mat.clone().col_piv_qr();
    let r = qr.r();
    let lead = r[(0, 0)].abs();
    if lead == 0.0 {
        return DMatrix::zeros(m, 0);
    }
    let p = m.min(mat.ncols());
    let rank = (0..p).take_while(|&i| r[(i, i)].abs() > rel_tol * lead).count();
    qr.q().columns(0, rank).into()
}

/// Orthonormal basis of the orthogonal complement of the span of `u`, whose
/// columns must already be orthonormal. Returns `m×(m−q)` for an `m×q` input.
pub fn orthonormal_complement(u: &DMatrix<f64>) -> DMatrix<f64> {
    let m = u.nrows();
    let q = u.ncols();
    if q == 0 {
        return DMatrix::identity(m, m);
    }
    if q >= m {
        return DMatrix::zeros(m, 0);
    }
    // Full Q of a Householder QR of U: the first q columns reproduce span(U),
    // the trailing m−q columns span its complement.
    let qr = u.clone().qr();
    let mut qt = DMatrix::identity(m, m);
    qr.q_tr_mul(&mut qt);
    qt.rows(q, m - q).transpose()
}

/// Orthogonal projector `U·Uᵀ` onto the span of an orthonormal `u`.
pub fn projector(u: &DMatrix<f64>) -> DMatrix<f64> {
    u * u.transpose()
}

/// Residual `v − U(Uᵀv)` of `v` against the span of an orthonormal `u`.
pub fn residual(u: &DMatrix<f64>, v: &DVector<f64>) -> DVector<f64> {
    if u.ncols() == 0 {
        return v.clone();
    }
    v - u * (u.transpose() * v)
}

/// Squared norm of the projection of `v` onto the span of an orthonormal `u`.
pub fn projection_norm_sq(u: &DMatrix<f64>, v: &DVector<f64>) -> f64 {
    if u.ncols() == 0 {
        return 0.0;
    }
    (u.transpose() * v).norm_squared()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use rand_distr::StandardNormal;

    fn gaussian(m: usize, n: usize, seed: u64) -> DMatrix<f64> {
        let mut rng = StdRng::seed_from_u64(seed);
        DMatrix::from_fn(m, n, |_, _| rng.sample(StandardNormal))
    }

    #[test]
    fn basis_is_orthonormal_and_spans() {
        let a = gaussian(8, 3, 1);
        let u = orthonormal_basis(&a, RANK_REL_TOL);
        assert_eq!(u.ncols(), 3);
        let gram = u.transpose() * &u;
        assert!((gram - DMatrix::identity(3, 3)).norm() < 1e-12);
        // every column of a lies in span(u)
        for j in 0..3 {
            let col = DVector::from_column_slice(a.column(j).as_slice());
            assert!(residual(&u, &col).norm() < 1e-10 * col.norm());
        }
    }

    #[test]
    fn rank_deficiency_detected() {
        let mut a = gaussian(6, 2, 2);
        let dup = a.column(0).into_owned();
        a = DMatrix::from_columns(&[a.column(0).into(), a.column(1).into(), dup.column(0).into()]);
        assert_eq!(numerical_rank(&a, RANK_REL_TOL), 2);
        assert_eq!(orthonormal_basis(&a, RANK_REL_TOL).ncols(), 2);
    }

    #[test]
    fn complement_splits_the_space() {
        let a = gaussian(6, 2, 5);
        let u = orthonormal_basis(&a, RANK_REL_TOL);
        let q = orthonormal_complement(&u);
        assert_eq!(q.ncols(), 4);
        assert!((q.transpose() * &q - DMatrix::identity(4, 4)).norm() < 1e-12);
        assert!((q.transpose() * &u).norm() < 1e-12);
        let sum = projector(&u) + projector(&q);
        assert!((sum - DMatrix::identity(6, 6)).norm() < 1e-10);
    }

    #[test]
    fn zero_matrix_has_empty_basis() {
        let z = DMatrix::<f64>::zeros(5, 3);
        assert_eq!(numerical_rank(&z, RANK_REL_TOL), 0);
        assert_eq!(orthonormal_basis(&z, RANK_REL_TOL).ncols(), 0);
    }
}
