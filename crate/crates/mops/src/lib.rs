//! Multiple orthogonal polynomials for the Nikishin pair of modified Tricomi
//! weights `W(x; a, b, c)` and `W(x; a, b, c+1)` on the positive half-line.
//!
//! The crate is organised around two parallel tracks that cross-check each
//! other:
//!
//! * exact rational constructions: moments, type II polynomials on the step
//!   line (explicit coefficients, recurrence, normalisations, third-order
//!   ODE), type I pairs (moment linear system and a Rodrigues route through a
//!   symbolic weight algebra), and the threefold-symmetric specialisations;
//! * floating-point evaluation: the Tricomi function by its integral
//!   representation, numeric moments by adaptive quadrature, the Nikishin
//!   ratio as a truncated continued fraction, and zero localisation with
//!   interlacing-guided bisection plus a Hessenberg eigenvalue cross-check.
//!
//! See the `examples/` directory for one runnable example per capability and
//! the `mops` binary for the `coeffs` / `verify` / `figure` commands.

pub mod cli;
pub mod exact;
pub mod moments;
pub mod numweights;
pub mod poly;
pub mod spectra;
pub mod symmetry;
pub mod type1;
pub mod type2;

pub use exact::Rational;
pub use moments::ParamSet;
pub use poly::{LaurentPoly, Poly};

/// Errors shared across the exact and numeric modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("pole in Pochhammer continuation")]
    PochhammerPole,
    #[error("singular hypergeometric parameter")]
    SingularHypergeometricParameter,
    #[error("singular Minton parameter")]
    SingularMintonParameter,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("non-normal index n={0}")]
    NonNormalIndex(usize),
    #[error("reduction failure: negative power of x survives in a type I result")]
    ReductionFailure,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quadrature tolerance not met (best estimate {value} with error {err})")]
    QuadratureTolerance { value: f64, err: f64 },
    #[error("interlacing violated while bracketing root {root} of P_{n}")]
    InterlacingViolated { n: usize, root: usize },
    #[error("bound formula inapplicable: discriminant is not positive")]
    BoundInapplicable,
    #[error("threefold symmetry violated at degree {0}")]
    SymmetryViolated(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
