//! Seeded random test objects. ChaCha8 keeps draws identical across platforms.

use ndarray::Array2;
use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::operators::gibbs::{normalize_to_gibbs, GibbsState};
use crate::operators::hermitian::HermitianOperator;

/// GUE-style random Hermitian matrix: (G + G†)/2 with standard complex
/// Gaussian entries, scaled by 1/√dim so the spectrum stays O(1).
pub fn random_hermitian(dim: usize, seed: u64) -> HermitianOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_hermitian_with(dim, &mut rng)
}

/// Same as [`random_hermitian`] but drawing from a caller-owned stream.
pub fn random_hermitian_with(dim: usize, rng: &mut impl Rng) -> HermitianOperator {
    let scale = 1.0 / (dim as f64).sqrt();
    let g = Array2::from_shape_fn((dim, dim), |_| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re * scale, im * scale)
    });
    let sym = (&g + &g.t().mapv(|z: C64| z.conj())).mapv(|z| z * 0.5);
    HermitianOperator::from_exact(sym)
}

/// Random full-rank Gibbs state: normalize_to_gibbs of a random Hermitian K.
pub fn random_gibbs(dim: usize, seed: u64) -> Result<GibbsState> {
    normalize_to_gibbs(&random_hermitian(dim, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_is_deterministic() {
        let a = random_hermitian(2, 7);
        let b = random_hermitian(2, 7);
        assert_eq!(a.matrix(), b.matrix());
    }

    #[test]
    fn random_gibbs_is_full_rank() {
        for seed in 0..5 {
            let g = random_gibbs(4, seed).unwrap();
            assert!(g.min_probability() > 0.0);
        }
    }

    #[test]
    fn hermiticity_is_exact() {
        let op = random_hermitian(3, 1);
        assert!(crate::operators::hermitian::hermiticity_drift(op.matrix()) == 0.0);
    }
}
