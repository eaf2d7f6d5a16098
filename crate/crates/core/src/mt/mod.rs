//! The Mordell-Tornheim double zeta function
//! `zeta_MT(s1, s2; s3) = sum_{m,n >= 1} m^{-s1} n^{-s2} (m+n)^{-s3}`.

mod direct;
mod mellin_barnes;
mod pair;
mod params;
pub mod quadrature;

pub use direct::{convergence_margin, mt_direct};
pub use mellin_barnes::{in_holomorphy_region, mb_assemble, mb_integral, mt_continued};
pub use params::{auto_params, EvalResult, Method, MtParams};

use num_complex::Complex64;

use crate::error::Result;

/// Direct summation where the series converges with margin, the contour
/// formula elsewhere.
pub fn mt_eval(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    params: &MtParams,
) -> Result<EvalResult> {
    if convergence_margin(s1, s2, s3) >= 0.1 {
        mt_direct(s1, s2, s3, params.tol)
    } else {
        mt_continued(s1, s2, s3, params)
    }
}
