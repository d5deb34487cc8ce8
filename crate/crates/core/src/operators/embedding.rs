//! Tensor-product embeddings and partial traces over lattice sites.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::models::lattice::LatticeSpec;
use crate::operators::hermitian::HermitianOperator;

/// 𝟙 ⊗ … ⊗ local ⊗ … ⊗ 𝟙 with `local` at position `site`.
pub fn embed_site_operator(
    local: &HermitianOperator,
    site: usize,
    lattice: &LatticeSpec,
) -> Result<HermitianOperator> {
    let sites = lattice.sites();
    if site >= sites {
        return Err(Error::SiteOutOfRange { site, sites });
    }
    let q = lattice.local_dim();
    if local.dim() != q {
        return Err(Error::DimensionMismatch { left: local.dim(), right: q });
    }
    let total = lattice.hilbert_dim()?;
    let stride = lattice.site_stride(site);
    let mut out = Array2::<C64>::zeros((total, total));
    // Index splits as (high, s, low) with s the digit at `site`.
    let high_count = total / (stride * q);
    for h in 0..high_count {
        for si in 0..q {
            for sj in 0..q {
                let v = local.matrix()[[si, sj]];
                if v == C64::new(0.0, 0.0) {
                    continue;
                }
                for l in 0..stride {
                    let row = (h * q + si) * stride + l;
                    let col = (h * q + sj) * stride + l;
                    out[[row, col]] = v;
                }
            }
        }
    }
    Ok(HermitianOperator::from_exact(out))
}

/// Trace out every site not in `keep`. Trace preserving; positive on positive
/// inputs. The reduced operator lives on the kept sites in their original
/// order.
pub fn partial_trace(
    op: &HermitianOperator,
    keep: &[usize],
    lattice: &LatticeSpec,
) -> Result<HermitianOperator> {
    let sites = lattice.sites();
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if let Some(&bad) = keep_sorted.iter().find(|&&s| s >= sites) {
        return Err(Error::SiteOutOfRange { site: bad, sites });
    }
    let total = lattice.hilbert_dim()?;
    if op.dim() != total {
        return Err(Error::DimensionMismatch { left: op.dim(), right: total });
    }
    let q = lattice.local_dim();
    let traced: Vec<usize> = (0..sites).filter(|s| !keep_sorted.contains(s)).collect();
    let kept_dim = q.pow(keep_sorted.len() as u32);
    let traced_dim = q.pow(traced.len() as u32);

    let mut out = Array2::<C64>::zeros((kept_dim, kept_dim));
    let mut digits = vec![0usize; sites];
    for ki in 0..kept_dim {
        let ki_digits = digits_of(ki, q, keep_sorted.len());
        for kj in 0..kept_dim {
            let kj_digits = digits_of(kj, q, keep_sorted.len());
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..traced_dim {
                let t_digits = digits_of(t, q, traced.len());
                for (pos, &site) in keep_sorted.iter().enumerate() {
                    digits[site] = ki_digits[pos];
                }
                for (pos, &site) in traced.iter().enumerate() {
                    digits[site] = t_digits[pos];
                }
                let row = lattice.index_from_digits(&digits);
                for (pos, &site) in keep_sorted.iter().enumerate() {
                    digits[site] = kj_digits[pos];
                }
                let col = lattice.index_from_digits(&digits);
                acc += op.matrix()[[row, col]];
            }
            out[[ki, kj]] = acc;
        }
    }
    Ok(HermitianOperator::from_exact(out))
}

fn digits_of(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in (0..len).rev() {
        out[slot] = index % base;
        index /= base;
    }
    out
}

/// a ⊗ b in the site-0-most-significant convention.
pub fn tensor_product(a: &HermitianOperator, b: &HermitianOperator) -> HermitianOperator {
    HermitianOperator::from_exact(ndarray::linalg::kron(a.matrix(), b.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::random::{random_gibbs, random_hermitian};
    use approx::assert_relative_eq;

    fn sigma_z() -> HermitianOperator {
        HermitianOperator::from_real_diagonal(&[1.0, -1.0])
    }

    #[test]
    fn sigma_z_at_site_zero() {
        let lat = LatticeSpec::chain(2, 2).unwrap();
        let full = embed_site_operator(&sigma_z(), 0, &lat).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| full.matrix()[[i, i]].re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn sigma_z_at_site_one() {
        let lat = LatticeSpec::chain(2, 2).unwrap();
        let full = embed_site_operator(&sigma_z(), 1, &lat).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| full.matrix()[[i, i]].re).collect();
        assert_eq!(diag, vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn identity_embeds_to_identity() {
        let lat = LatticeSpec::chain(3, 2).unwrap();
        let full = embed_site_operator(&HermitianOperator::identity(2), 1, &lat).unwrap();
        assert_relative_eq!(full.sub(&HermitianOperator::identity(8)).max_abs_entry(), 0.0);
    }

    #[test]
    fn site_out_of_range_is_reported() {
        let lat = LatticeSpec::chain(2, 2).unwrap();
        assert!(matches!(
            embed_site_operator(&sigma_z(), 2, &lat),
            Err(Error::SiteOutOfRange { .. })
        ));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let lat = LatticeSpec::chain(2, 2).unwrap();
        let rho_a = HermitianOperator::from_real_diagonal(&[0.7, 0.3]);
        let rho_b = random_gibbs(2, 3).unwrap().density();
        let joint = tensor_product(&rho_a, &rho_b);
        let reduced = partial_trace(&joint, &[0], &lat).unwrap();
        assert!(reduced.sub(&rho_a).max_abs_entry() <= 1e-12);
    }

    #[test]
    fn bell_state_marginal_is_maximally_mixed() {
        let lat = LatticeSpec::chain(2, 2).unwrap();
        let mut m = Array2::<C64>::zeros((4, 4));
        // |Φ+⟩⟨Φ+| with |Φ+⟩ = (|00⟩ + |11⟩)/√2
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                m[[i, j]] = C64::new(0.5, 0.0);
            }
        }
        let rho = HermitianOperator::new(m).unwrap();
        let reduced = partial_trace(&rho, &[0], &lat).unwrap();
        let half = HermitianOperator::scaled_identity(2, 0.5);
        assert!(reduced.sub(&half).max_abs_entry() <= 1e-12);
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let lat = LatticeSpec::chain(3, 2).unwrap();
        let rho = random_gibbs(8, 17).unwrap().density();
        let reduced = partial_trace(&rho, &[0, 2], &lat).unwrap();
        assert_relative_eq!(reduced.trace(), rho.trace(), epsilon = 1e-12);
    }

    #[test]
    fn partial_trace_is_dual_to_embedding() {
        // Tr(Tr_B(ρ)·a_AB-kept) = Tr(ρ·embed(a)) for a acting on the kept sites.
        let lat = LatticeSpec::chain(3, 2).unwrap();
        let rho = random_gibbs(8, 23).unwrap().density();
        let a = random_hermitian(2, 5);
        let full_a = embed_site_operator(&a, 1, &lat).unwrap();
        let reduced = partial_trace(&rho, &[1], &lat).unwrap();
        assert_relative_eq!(
            reduced.trace_product(&a),
            rho.trace_product(&full_a),
            epsilon = 1e-12
        );
    }

    #[test]
    fn empty_keep_set_is_an_error() {
        let lat = LatticeSpec::chain(2, 2).unwrap();
        let rho = random_gibbs(4, 1).unwrap().density();
        assert!(matches!(partial_trace(&rho, &[], &lat), Err(Error::EmptyKeepSet)));
    }
}
