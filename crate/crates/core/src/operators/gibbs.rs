//! Gibbs states ρ = e^K under the Z = 1 convention.
//!
//! Fixing Tr e^K = 1 makes K = log ρ and absorbs every identity-shift degree of
//! freedom at construction time. Thermal states are full rank; eigenvalues below
//! the 1e-12 floor are an error rather than a clamp, because a clamped spectrum
//! would silently corrupt Ω_ρ⁻¹.

use ndarray::Array1;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::operators::hermitian::{eig, HermitianOperator, SpectralDecomposition};

/// Eigenvalues of ρ below this are treated as rank deficiency.
pub const FULL_RANK_FLOOR: f64 = 1e-12;

/// Max eigenvalue of K_raw beyond which e^K overflows f64.
const EXP_OVERFLOW_LIMIT: f64 = 700.0;

/// A point of the manifold of Hamiltonians: K with Tr e^K = 1, carrying the
/// cached spectral decomposition of ρ = e^K.
#[derive(Debug, Clone)]
pub struct GibbsState {
    hamiltonian: HermitianOperator,
    spectral: SpectralDecomposition,
    logz_offset: f64,
}

impl GibbsState {
    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    /// K = log ρ.
    pub fn hamiltonian(&self) -> &HermitianOperator {
        &self.hamiltonian
    }

    /// Spectral decomposition of ρ (eigenvalues ascending, all > 0).
    pub fn spectral(&self) -> &SpectralDecomposition {
        &self.spectral
    }

    /// Eigenvalues of ρ, ascending.
    pub fn probabilities(&self) -> &Array1<f64> {
        self.spectral.eigenvalues()
    }

    pub fn min_probability(&self) -> f64 {
        self.spectral.eigenvalues()[0]
    }

    /// Always 0 under the Z = 1 convention; kept for diagnostics.
    pub fn logz_offset(&self) -> f64 {
        self.logz_offset
    }

    /// ρ = e^K as a dense operator.
    pub fn density(&self) -> HermitianOperator {
        self.spectral.reconstruct()
    }

    /// Tr(ρ a).
    pub fn expectation(&self, a: &HermitianOperator) -> f64 {
        self.density().trace_product(a)
    }

    /// Construct from a density matrix (Hermitian, trace 1 within 1e-10, full
    /// rank). K is recovered as log ρ.
    pub fn from_density(rho: &HermitianOperator) -> Result<Self> {
        let trace = rho.trace();
        if (trace - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { trace });
        }
        let spectral = eig(rho)?;
        let min = spectral.eigenvalues()[0];
        if min < FULL_RANK_FLOOR {
            return Err(Error::RankDeficient { min_eigenvalue: min });
        }
        let hamiltonian = spectral.map_eigenvalues(f64::ln);
        Ok(Self { hamiltonian, spectral, logz_offset: 0.0 })
    }
}

/// Shift K_raw by −log Tr e^{K_raw}·𝟙 so that Z = 1, and build the Gibbs state.
///
/// Idempotent: normalizing a normalized K returns the same state.
pub fn normalize_to_gibbs(k_raw: &HermitianOperator) -> Result<GibbsState> {
    let spectral = eig(k_raw)?;
    let max = spectral.eigenvalues()[spectral.dim() - 1];
    if max > EXP_OVERFLOW_LIMIT {
        return Err(Error::Overflow { max_eigenvalue: max });
    }
    let log_z = log_sum_exp(spectral.eigenvalues());
    let probabilities = spectral.eigenvalues().mapv(|x| (x - log_z).exp());
    let min = probabilities[0];
    if min < FULL_RANK_FLOOR {
        return Err(Error::RankDeficient { min_eigenvalue: min });
    }
    let shifted = SpectralDecomposition::from_parts(
        spectral.eigenvalues().mapv(|x| x - log_z),
        spectral.eigenvectors().clone(),
    );
    let hamiltonian = shifted.reconstruct();
    let rho_spectral =
        SpectralDecomposition::from_parts(probabilities, spectral.eigenvectors().clone());
    Ok(GibbsState { hamiltonian, spectral: rho_spectral, logz_offset: 0.0 })
}

/// log Σ e^{x_i}, overflow safe.
pub fn log_sum_exp(xs: &Array1<f64>) -> f64 {
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    max + xs.iter().map(|&x| (x - max).exp()).sum::<f64>().ln()
}

impl GibbsState {
    /// Helper for tests and drivers: ρ entries as a raw matrix.
    pub fn density_matrix(&self) -> ndarray::Array2<C64> {
        self.density().into_matrix()
    }
}
