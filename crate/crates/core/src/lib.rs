//! Mordell-Tornheim double zeta values continued to all of C^3, the unified
//! omega function and its limits at non-positive integers, exact Bernoulli
//! coefficient identities, and finite omega values modulo primes.

pub mod coeffs;
pub mod error;
pub mod finite;
pub mod mt;
pub mod omega;
pub mod rational;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;
