//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by operator algebra, geometry, flow, and Monte Carlo code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("not Hermitian: symmetry drift {drift:.3e} exceeds {tol:.1e}")]
    NotHermitian { drift: f64, tol: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigendecomposition(String),

    #[error("domain error in {function}: eigenvalue {eigenvalue:.6e} is not positive")]
    NonPositiveEigenvalue { function: &'static str, eigenvalue: f64 },

    #[error("overflow risk: max eigenvalue {max_eigenvalue:.3e} exceeds 700; rescale K before normalizing")]
    Overflow { max_eigenvalue: f64 },

    #[error("state is rank deficient: eigenvalue {min_eigenvalue:.3e} below full-rank floor 1e-12")]
    RankDeficient { min_eigenvalue: f64 },

    #[error("trace is {trace:.12} instead of 1")]
    NotNormalized { trace: f64 },

    #[error("flow left the full-rank manifold at t = {t}: min eigenvalue {min_eigenvalue:.3e}")]
    FlowDegeneracy { t: f64, min_eigenvalue: f64 },

    #[error("tangent picture mismatch: expected {expected}, got {got}")]
    PictureMismatch { expected: &'static str, got: &'static str },

    #[error("tangent constraint violated: residual {residual:.3e} exceeds {tol:.1e}")]
    TangentConstraint { residual: f64, tol: f64 },

    #[error("Kraus set is not trace preserving: deviation {deviation:.3e}")]
    KrausNotTracePreserving { deviation: f64 },

    #[error("generator does not commute with translations: residual {residual:.3e}")]
    TranslationCommutation { residual: f64 },

    #[error("state is not translation invariant: residual {residual:.3e}")]
    NotTranslationInvariant { residual: f64 },

    #[error("site index {site} out of range for {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("partial trace needs a nonempty keep set")]
    EmptyKeepSet,

    #[error("Hilbert dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("lattice is not periodic; {0} requires periodic boundaries")]
    NotPeriodic(&'static str),

    #[error("point is off the stable submanifold: h = {h:.3e}, c deviation {c_deviation:.3e}")]
    OffSubmanifold { h: f64, c_deviation: f64 },

    #[error("boundary contamination: t = {t} exceeds (N/8)^2 = {limit} for N = {n}")]
    BoundaryContamination { t: f64, limit: f64, n: usize },

    #[error("insufficient sweeps: {sweeps} sweeps cannot fill {n_bins} bins of at least 100")]
    InsufficientSweeps { sweeps: usize, n_bins: usize },

    #[error("unknown propagator strategy '{0}'")]
    UnknownPropagator(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
