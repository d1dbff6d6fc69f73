use super::EULER_GAMMA;
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Largest `|x|` accepted by `erfi`; `erfi(12)` is already about 1e61.
pub const ERFI_ARGUMENT_LIMIT: f64 = 12.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErfKind {
    Erf,
    Erfc,
    Erfi,
}

/// `erf`, `erfc` or `erfi` of a real argument.
pub fn erf_family(kind: ErfKind, x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("erf_family", x, "x not NaN"));
    }
    match kind {
        ErfKind::Erf => Ok(libm::erf(x)),
        ErfKind::Erfc => Ok(libm::erfc(x)),
        ErfKind::Erfi => {
            if x.abs() > ERFI_ARGUMENT_LIMIT {
                return Err(Error::Overflow {
                    function: "erfi",
                    arg: x.to_string(),
                });
            }
            Ok(erfi_series(x))
        }
    }
}

// erfi(x) = 2/√π Σ x^{2k+1} / (k! (2k+1)); all terms share the sign of x.
fn erfi_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut power = x; // x^{2k+1}/k!
    let mut sum = x;
    let mut comp = 0.0;
    for k in 1..2000 {
        let kf = f64::from(k);
        power *= x2 / kf;
        let term = power / (2.0 * kf + 1.0);
        // Neumaier summation
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    2.0 / PI.sqrt() * (sum + comp)
}

/// Exponential integral `Ei(x) = −E₁(−x)` on the negative axis.
pub fn expint_ei(x: f64) -> Result<f64> {
    if !(x < 0.0) {
        return Err(Error::domain("expint_ei", x, "x < 0"));
    }
    if x == f64::NEG_INFINITY {
        return Ok(-0.0);
    }
    let z = -x;
    if z <= 1.0 {
        // Ei(-z) = γ + log z + Σ (-z)^k / (k k!)
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..60 {
            let kf = f64::from(k);
            term *= -z / kf;
            let contrib = term / kf;
            sum += contrib;
            if contrib.abs() < 1e-18 {
                break;
            }
        }
        Ok(EULER_GAMMA + z.ln() + sum)
    } else {
        Ok(-e1_continued_fraction(z)?)
    }
}

// Modified Lentz evaluation of E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))
fn e1_continued_fraction(z: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let fi = f64::from(i);
        let an = -fi * fi;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok(h * (-z).exp());
        }
    }
    Err(Error::NonConvergence {
        what: "E1 continued fraction",
        detail: format!("z = {z}"),
    })
}

/// `∫₀^∞ e^{−a t²} log t dt = −(1/4) √(π/a) (γ + log 4a)` for `a > 0`.
pub fn log_gaussian_moment(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain("log_gaussian_moment", a, "a > 0"));
    }
    Ok(-0.25 * (PI / a).sqrt() * (EULER_GAMMA + (4.0 * a).ln()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn erf_identities() {
        assert_eq!(erf_family(ErfKind::Erf, 0.0).unwrap(), 0.0);
        for i in -40..=40 {
            let x = 0.1 * f64::from(i);
            let e = erf_family(ErfKind::Erf, x).unwrap();
            let ec = erf_family(ErfKind::Erfc, x).unwrap();
            assert!((e + ec - 1.0).abs() < 1e-15);
            assert_eq!(e, -erf_family(ErfKind::Erf, -x).unwrap());
            assert_eq!(erf_family(ErfKind::Erfi, x).unwrap(), -erf_family(ErfKind::Erfi, -x).unwrap());
        }
    }

    #[test]
    fn erfi_guard() {
        assert!(matches!(erf_family(ErfKind::Erfi, 12.5), Err(Error::Overflow { .. })));
        assert!(erf_family(ErfKind::Erfi, 12.0).unwrap().is_finite());
    }

    #[test]
    fn ei_sign_and_limits() {
        assert!(expint_ei(0.0).is_err());
        assert!(expint_ei(1.0).is_err());
        let far = expint_ei(-50.0).unwrap();
        assert!(far < 0.0);
        // Ei(x) ~ e^x / x (1 + 1/x + 2/x^2 + ...)
        let x = -50.0f64;
        let asym = x.exp() / x * (1.0 + 1.0 / x + 2.0 / (x * x) + 6.0 / x.powi(3) + 24.0 / x.powi(4));
        assert_relative_eq!(far, asym, max_relative = 1e-6);
        // continuity at the series / continued-fraction seam
        let lo = expint_ei(-1.0 + 1e-12).unwrap();
        let hi = expint_ei(-1.0 - 1e-12).unwrap();
        assert!((lo - hi).abs() < 1e-11);
        assert_eq!(expint_ei(f64::NEG_INFINITY).unwrap(), 0.0);
    }

    #[test]
    fn log_gaussian_moment_quarter() {
        let expected = -0.25 * (4.0 * PI).sqrt() * EULER_GAMMA;
        assert_relative_eq!(log_gaussian_moment(0.25).unwrap(), expected, max_relative = 1e-15);
        assert!(log_gaussian_moment(0.0).is_err());
    }
}
