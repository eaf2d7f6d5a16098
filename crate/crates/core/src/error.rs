use thiserror::Error;

use crate::omega::SingularityReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("zeta(s) has a pole at s = 1")]
    PoleAtOne,

    #[error("point is outside the absolute convergence region of the double series (margin {margin:.3e})")]
    OutOfRegion { margin: f64 },

    #[error("point is outside the holomorphy region of the contour integral for M = {m}")]
    OutsideHolomorphyRegion { m: usize },

    #[error("contour tail estimate {estimate:.3e} exceeds tolerance at T = {t_max}")]
    TailBoundExceeded { estimate: f64, t_max: f64 },

    #[error("point lies within {:.3e} of the singular set ({})", .0.distance, .0.kind)]
    NearSingularSet(SingularityReport),

    #[error("error estimate {err:.3e} exceeds tolerance {tol:.3e}")]
    CancellationLoss { err: f64, tol: f64 },

    #[error("direction ({0}, {1}, {2}) violates eps_a != 0 and eps_a + eps_b != 0")]
    DegenerateDirection(f64, f64, f64),

    #[error("removable 0/0 at an integer lattice point")]
    IndeterminateAtLattice,

    #[error("singular coefficient has a pole here (some s_a is a positive integer)")]
    CoefficientPole,

    #[error("point is off the plane s1 + s2 + s3 = 2 (residual {0:.3e})")]
    OffTotalPlane(f64),

    #[error("sample has coinciding coordinates")]
    DegenerateSample,

    #[error("{0} is not prime")]
    NonPrimeModulus(u64),

    #[error("inverse of zero modulo {0}")]
    InverseOfZero(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
