//! Tangent vectors in the two dual pictures.
//!
//! State picture: traceless perturbations x of ρ. Hamiltonian picture:
//! observables a with Tr(ρ a) = 0, i.e. zero expectation in the base state.
//! Constraint checking is opt-in at construction (intermediate computations
//! legitimately pass through unconstrained operators) and always enforced by
//! the metric operations.

use crate::error::{Error, Result};
use crate::operators::gibbs::GibbsState;
use crate::operators::hermitian::HermitianOperator;

/// Which manifold a tangent vector belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Picture {
    /// Perturbation of the state ρ; constraint Tr x = 0.
    State,
    /// Perturbation of the Hamiltonian K; constraint Tr(ρ a) = 0.
    Hamiltonian,
}

impl Picture {
    pub fn name(&self) -> &'static str {
        match self {
            Picture::State => "state",
            Picture::Hamiltonian => "hamiltonian",
        }
    }
}

/// Hermitian perturbation tagged with its picture.
#[derive(Debug, Clone)]
pub struct TangentVector {
    operator: HermitianOperator,
    picture: Picture,
}

/// Constraint tolerance used when checking tangency (relative to ‖a‖_F).
pub const TANGENT_TOL: f64 = 1e-7;

impl TangentVector {
    /// Wrap without checking the constraint.
    pub fn new(operator: HermitianOperator, picture: Picture) -> Self {
        Self { operator, picture }
    }

    /// Strict construction: verifies the picture constraint at `base`.
    pub fn checked(
        operator: HermitianOperator,
        picture: Picture,
        base: &GibbsState,
    ) -> Result<Self> {
        let v = Self::new(operator, picture);
        v.ensure_tangent(base)?;
        Ok(v)
    }

    /// Project an arbitrary Hermitian operator onto the state-picture tangent
    /// space: subtract (Tr x / d)·𝟙.
    pub fn project_state(operator: &HermitianOperator) -> Self {
        let shift = operator.trace() / operator.dim() as f64;
        let projected =
            operator.add_scaled(-shift, &HermitianOperator::identity(operator.dim()));
        Self::new(projected, Picture::State)
    }

    /// Project onto the Hamiltonian-picture tangent space at `base`:
    /// subtract Tr(ρ a)·𝟙 (which keeps Z fixed to first order).
    pub fn project_hamiltonian(operator: &HermitianOperator, base: &GibbsState) -> Self {
        let shift = base.expectation(operator);
        let projected =
            operator.add_scaled(-shift, &HermitianOperator::identity(operator.dim()));
        Self::new(projected, Picture::Hamiltonian)
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.operator
    }

    pub fn into_operator(self) -> HermitianOperator {
        self.operator
    }

    pub fn picture(&self) -> Picture {
        self.picture
    }

    pub fn dim(&self) -> usize {
        self.operator.dim()
    }

    /// |constraint| at `base`: |Tr x| in the state picture, |Tr(ρ a)| in the
    /// Hamiltonian picture.
    pub fn constraint_residual(&self, base: &GibbsState) -> f64 {
        match self.picture {
            Picture::State => self.operator.trace().abs(),
            Picture::Hamiltonian => base.expectation(&self.operator).abs(),
        }
    }

    pub fn ensure_picture(&self, expected: Picture) -> Result<()> {
        if self.picture != expected {
            return Err(Error::PictureMismatch {
                expected: expected.name(),
                got: self.picture.name(),
            });
        }
        Ok(())
    }

    pub fn ensure_tangent(&self, base: &GibbsState) -> Result<()> {
        let residual = self.constraint_residual(base);
        let tol = TANGENT_TOL * self.operator.frobenius_norm().max(1.0);
        if residual > tol {
            return Err(Error::TangentConstraint { residual, tol });
        }
        Ok(())
    }
}
