//! Gaussian-weighted integrals `∫₀^∞ g(t) e^{−c t²} dt` for `g` at most
//! logarithmically singular at the origin and `Re c > 0`.

use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_log_singular, try_integrate_semi_infinite, DecayHint, QuadResult};
use crate::specfun::{psibar, ComplexValue};

/// Real and imaginary parts of a complex integral, each with its own error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexQuad {
    pub re: QuadResult,
    pub im: QuadResult,
}

/// After `t = u/√(Re c)` the weight becomes `e^{−u²} e^{−iκu²}` with
/// `κ = Im c / Re c`; `(0, 1]` goes through the log-singular wrapper and
/// `[1, ∞)` through the Gaussian-hinted engine. `tol` bounds each of the two
/// parts of the result.
pub(crate) fn gaussian_weighted<G>(g: G, c: ComplexValue, tol: f64) -> Result<ComplexQuad>
where
    G: Fn(f64) -> Result<f64>,
{
    if !(c.re > 0.0) || !c.norm().is_finite() {
        return Err(Error::domain("gaussian_weighted", c, "Re c > 0"));
    }
    let s = c.re.sqrt();
    let kappa = c.im / c.re;
    let part = |phase: fn(f64) -> f64| -> Result<QuadResult> {
        let h = |u: f64| -> Result<f64> {
            let u2 = u * u;
            Ok(g(u / s)? * (-u2).exp() * phase(-kappa * u2) / s)
        };
        let head = try_integrate_log_singular(h, 1.0, 0.5 * tol)?;
        let tail = try_integrate_semi_infinite(h, 1.0, 0.5 * tol, DecayHint::Gaussian { rate: 1.0 })?;
        Ok(head.plus(tail))
    };
    let re = part(f64::cos)?;
    let im = if kappa == 0.0 {
        QuadResult {
            value: 0.0,
            abs_err_estimate: 0.0,
            evaluations: 1,
            converged: true,
        }
    } else {
        part(f64::sin)?
    };
    Ok(ComplexQuad { re, im })
}

/// `I(c) = ∫₀^∞ (ψ(t+1) − log t) e^{−c t²} dt` for complex `c` with `Re c > 0`.
pub(crate) fn hardy_integral_complex(c: ComplexValue, tol: f64) -> Result<ComplexQuad> {
    gaussian_weighted(|t| psibar(0, t), c, tol)
}
