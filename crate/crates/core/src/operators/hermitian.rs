//! Dense Hermitian operators and their spectral calculus.
//!
//! `HermitianOperator` is the universal carrier for Hamiltonians K, states ρ,
//! tangent vectors, and observables. Construction symmetrizes (A + A†)/2 and
//! rejects inputs whose pre-symmetrization drift exceeds [`HERMITICITY_DRIFT_TOL`].

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest tolerated ‖A − A†‖_max before construction fails instead of symmetrizing.
pub const HERMITICITY_DRIFT_TOL: f64 = 1e-8;

/// Dense complex square matrix with enforced Hermiticity.
#[derive(Debug, Clone)]
pub struct HermitianOperator {
    matrix: Array2<C64>,
}

impl HermitianOperator {
    /// Symmetrize and wrap a matrix. Fails on non-square input or when the
    /// Hermiticity drift exceeds 1e-8 (a drift that large signals a bug
    /// upstream, not roundoff).
    pub fn new(matrix: Array2<C64>) -> Result<Self> {
        let (rows, cols) = matrix.dim();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::Config("operator dimension must be at least 1".into()));
        }
        let drift = hermiticity_drift(&matrix);
        if drift > HERMITICITY_DRIFT_TOL {
            return Err(Error::NotHermitian { drift, tol: HERMITICITY_DRIFT_TOL });
        }
        Ok(Self { matrix: symmetrize(&matrix) })
    }

    /// Wrap a matrix that is Hermitian by construction (still symmetrized so the
    /// invariant holds bit-exactly).
    pub(crate) fn from_exact(matrix: Array2<C64>) -> Self {
        Self { matrix: symmetrize(&matrix) }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { matrix: Array2::zeros((dim, dim)) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: Array2::eye(dim) }
    }

    /// c·𝟙 for real c.
    pub fn scaled_identity(dim: usize, c: f64) -> Self {
        Self { matrix: Array2::eye(dim).mapv(|z: C64| z * c) }
    }

    /// Diagonal operator from real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut m = Array2::zeros((dim, dim));
        for (i, &d) in diag.iter().enumerate() {
            m[[i, i]] = C64::new(d, 0.0);
        }
        Self { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Array2<C64> {
        self.matrix
    }

    /// Tr A (real; the imaginary part of a Hermitian trace is identically zero).
    pub fn trace(&self) -> f64 {
        self.matrix.diag().iter().map(|z| z.re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ‖A‖_max: largest entry modulus.
    pub fn max_abs_entry(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { matrix: self.matrix.mapv(|z| z * c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix + &other.matrix }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix - &other.matrix }
    }

    /// self + c·other.
    pub fn add_scaled(&self, c: f64, other: &Self) -> Self {
        Self { matrix: &self.matrix + &other.matrix.mapv(|z| z * c) }
    }

    /// Re Tr(A B); equals Tr(A B) for Hermitian A, B.
    pub fn trace_product(&self, other: &Self) -> f64 {
        trace_product(&self.matrix, &other.matrix)
    }

    /// Spectral decomposition; see [`eig`].
    pub fn eig(&self) -> Result<SpectralDecomposition> {
        eig(self)
    }
}

/// Re Tr(A B) without forming the product matrix.
pub(crate) fn trace_product(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    // Tr(AB) = Σ_ij A_ij B_ji
    let mut acc = 0.0;
    for (i, row) in a.outer_iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let w = b[[j, i]];
            acc += z.re * w.re - z.im * w.im;
        }
    }
    acc
}

pub(crate) fn hermiticity_drift(m: &Array2<C64>) -> f64 {
    let n = m.nrows();
    let mut drift = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = m[[i, j]] - m[[j, i]].conj();
            drift = drift.max(d.norm());
        }
    }
    drift
}

pub(crate) fn symmetrize(m: &Array2<C64>) -> Array2<C64> {
    let n = m.nrows();
    let mut out = Array2::zeros((n, n));
    for i in 0..n {
        out[[i, i]] = C64::new(m[[i, i]].re, 0.0);
        for j in (i + 1)..n {
            let avg = (m[[i, j]] + m[[j, i]].conj()) * 0.5;
            out[[i, j]] = avg;
            out[[j, i]] = avg.conj();
        }
    }
    out
}

pub(crate) fn adjoint(m: &Array2<C64>) -> Array2<C64> {
    m.t().mapv(|z| z.conj())
}

/// Eigenvalues (ascending) and the unitary of eigenvectors of a Hermitian operator.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Array1<f64>,
    eigenvectors: Array2<C64>,
}

/// Diagonalize a Hermitian operator. Eigenvalues come back ascending; the
/// eigenvector columns form a unitary.
pub fn eig(op: &HermitianOperator) -> Result<SpectralDecomposition> {
    let (eigenvalues, eigenvectors) = op
        .matrix()
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Eigendecomposition(e.to_string()))?;
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &Array1<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &Array2<C64> {
        &self.eigenvectors
    }

    pub(crate) fn from_parts(eigenvalues: Array1<f64>, eigenvectors: Array2<C64>) -> Self {
        Self { eigenvalues, eigenvectors }
    }

    /// V diag(λ) V†.
    pub fn reconstruct(&self) -> HermitianOperator {
        self.map_eigenvalues(|x| x)
    }

    /// V diag(f(λ)) V†, symmetrized.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> HermitianOperator {
        let v = &self.eigenvectors;
        let scaled = scale_columns(v, &self.eigenvalues.mapv(&f));
        HermitianOperator::from_exact(scaled.dot(&adjoint(v)))
    }

    /// V† A V: the matrix of `a` in this eigenbasis.
    pub fn to_eigenbasis(&self, a: &Array2<C64>) -> Array2<C64> {
        adjoint(&self.eigenvectors).dot(a).dot(&self.eigenvectors)
    }

    /// V A V†: back from the eigenbasis.
    pub fn from_eigenbasis(&self, a: &Array2<C64>) -> Array2<C64> {
        self.eigenvectors.dot(a).dot(&adjoint(&self.eigenvectors))
    }
}

fn scale_columns(v: &Array2<C64>, weights: &Array1<f64>) -> Array2<C64> {
    let mut out = v.clone();
    for (mut col, &w) in out.columns_mut().into_iter().zip(weights.iter()) {
        col.mapv_inplace(|z| z * w);
    }
    out
}

/// Scalar functions liftable to Hermitian operators through the spectral theorem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixFunction {
    Exp,
    Log,
    Power(f64),
}

/// Apply f through the eigendecomposition: V diag(f(λ)) V†.
///
/// `Log` and `Power(s)` with non-integer s require strictly positive spectrum;
/// the offending eigenvalue is reported otherwise.
pub fn matrix_function(op: &HermitianOperator, f: MatrixFunction) -> Result<HermitianOperator> {
    let spectral = eig(op)?;
    let needs_positive = match f {
        MatrixFunction::Exp => false,
        MatrixFunction::Log => true,
        MatrixFunction::Power(s) => s.fract() != 0.0 || s < 0.0,
    };
    if needs_positive {
        if let Some(&bad) = spectral.eigenvalues().iter().find(|&&x| x <= 0.0) {
            let function = match f {
                MatrixFunction::Log => "log",
                _ => "power",
            };
            return Err(Error::NonPositiveEigenvalue { function, eigenvalue: bad });
        }
    }
    Ok(match f {
        MatrixFunction::Exp => spectral.map_eigenvalues(f64::exp),
        MatrixFunction::Log => spectral.map_eigenvalues(f64::ln),
        MatrixFunction::Power(s) => spectral.map_eigenvalues(|x| x.powf(s)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::random::random_hermitian;
    use approx::assert_relative_eq;

    fn frob_diff(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
        (a - b).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    #[test]
    fn eig_diagonal_is_sorted() {
        let op = HermitianOperator::from_real_diagonal(&[2.0, 1.0]);
        let s = eig(&op).unwrap();
        assert_relative_eq!(s.eigenvalues()[0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(s.eigenvalues()[1], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn eig_pauli_x_spectrum() {
        let mut m = Array2::zeros((2, 2));
        m[[0, 1]] = C64::new(1.0, 0.0);
        m[[1, 0]] = C64::new(1.0, 0.0);
        let s = eig(&HermitianOperator::new(m).unwrap()).unwrap();
        assert_relative_eq!(s.eigenvalues()[0], -1.0, epsilon = 1e-14);
        assert_relative_eq!(s.eigenvalues()[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn eig_reconstructs_random_8x8() {
        let op = random_hermitian(8, 42);
        let s = eig(&op).unwrap();
        let rel = frob_diff(s.reconstruct().matrix(), op.matrix()) / op.frobenius_norm();
        assert!(rel <= 1e-10, "reconstruction error {rel}");
    }

    #[test]
    fn eigenvectors_are_unitary() {
        let op = random_hermitian(6, 3);
        let s = eig(&op).unwrap();
        let v = s.eigenvectors();
        let gram = adjoint(v).dot(v);
        let id = Array2::<C64>::eye(6);
        assert!(frob_diff(&gram, &id) <= 1e-10);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = HermitianOperator::zeros(2);
        let e = matrix_function(&z, MatrixFunction::Exp).unwrap();
        assert!(frob_diff(e.matrix(), &Array2::eye(2)) <= 1e-14);
    }

    #[test]
    fn log_inverts_exp() {
        let k = random_hermitian(4, 11);
        let e = matrix_function(&k, MatrixFunction::Exp).unwrap();
        let back = matrix_function(&e, MatrixFunction::Log).unwrap();
        assert!(frob_diff(back.matrix(), k.matrix()) <= 1e-9);
    }

    #[test]
    fn power_half_takes_scalar_roots() {
        let op = HermitianOperator::from_real_diagonal(&[0.25, 0.75]);
        let r = matrix_function(&op, MatrixFunction::Power(0.5)).unwrap();
        assert_relative_eq!(r.matrix()[[0, 0]].re, 0.5, epsilon = 1e-12);
        assert_relative_eq!(r.matrix()[[1, 1]].re, 0.75f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn log_rejects_nonpositive_spectrum() {
        let op = HermitianOperator::from_real_diagonal(&[1.0, -0.5]);
        match matrix_function(&op, MatrixFunction::Log) {
            Err(Error::NonPositiveEigenvalue { eigenvalue, .. }) => {
                assert_relative_eq!(eigenvalue, -0.5, epsilon = 1e-12)
            }
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn construction_rejects_large_drift() {
        let mut m = Array2::<C64>::zeros((2, 2));
        m[[0, 1]] = C64::new(1.0, 0.0);
        m[[1, 0]] = C64::new(0.5, 0.0);
        assert!(matches!(
            HermitianOperator::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn construction_symmetrizes_small_drift() {
        let mut m = Array2::<C64>::zeros((2, 2));
        m[[0, 1]] = C64::new(1.0, 1e-10);
        m[[1, 0]] = C64::new(1.0, -1.0000001e-10);
        let op = HermitianOperator::new(m).unwrap();
        assert!(hermiticity_drift(op.matrix()) == 0.0);
    }
}
