//! Numerical verification of cosine-transform identities for the Riemann Ξ
//! function and of two-sided bounds for the Hardy integral
//! `I(y) = ∫₀^∞ (ψ(t+1) − log t) e^{−yt²} dt`.
//!
//! * [`specfun`]: special-function kernels with stated accuracy contracts.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration with tail control.
//! * [`identities`]: both sides of each identity and the verdict logic.
//! * [`bounds`]: `I(y)`, its printed and re-derived bounds, and the constants
//!   they use.

pub mod bounds;
pub mod error;
mod hardy;
pub mod identities;
mod profile;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use profile::ToleranceProfile;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/kernels.md")]
    mod kernels {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
}
