use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Theta tail `R(y) = Σ_{n≥1} exp(−π n² y)` for `y > 0`.
///
/// For `y < 1` the modular relation `1 + 2R(y) = y^{-1/2} (1 + 2R(1/y))` is
/// applied so the direct sum always runs at `y >= 1`, where four terms
/// already fall below 1e-18.
pub fn theta_rest(y: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("theta_rest", y, "y > 0"));
    }
    if y >= 1.0 {
        Ok(theta_rest_direct(y))
    } else {
        let inv = 1.0 / y;
        Ok(0.5 * (inv.sqrt() * (1.0 + 2.0 * theta_rest_direct(inv)) - 1.0))
    }
}

fn theta_rest_direct(y: f64) -> f64 {
    let mut sum = 0.0;
    for n in 1u32.. {
        let nf = f64::from(n);
        let term = (-PI * nf * nf * y).exp();
        sum += term;
        if term < 1e-18 * sum.max(1e-300) || term == 0.0 {
            break;
        }
    }
    sum
}

/// `e^{t/2} − 2 e^{−t/2} R(e^{−2t})`, the kernel of the classical theta
/// cosine transform of `Ξ(t)/(t² + 1/4)`.
///
/// Even in `t`. For `t > 0.5` it is evaluated in the transformed form
/// `e^{−t/2} − 2 e^{t/2} R(e^{2t})`, which makes the `e^{−|t|/2}` decay explicit.
pub fn theta_bracket(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::domain("theta_bracket", t, "finite t"));
    }
    let u = t.abs();
    if u > 0.5 {
        let y = (2.0 * u).exp();
        if y.is_infinite() {
            // R(y) underflowed long before
            return Ok((-0.5 * u).exp());
        }
        Ok((-0.5 * u).exp() - 2.0 * (0.5 * u).exp() * theta_rest(y)?)
    } else {
        Ok((0.5 * u).exp() - 2.0 * (-0.5 * u).exp() * theta_rest((-2.0 * u).exp())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn large_y_single_term() {
        let y = 100.0;
        assert_relative_eq!(theta_rest(y).unwrap(), (-PI * y).exp(), max_relative = 1e-15);
    }

    #[test]
    fn functional_equation_small_y() {
        let r = theta_rest(0.01).unwrap();
        let expected = (10.0 * (1.0 + 2.0 * theta_rest(100.0).unwrap()) - 1.0) / 2.0;
        assert_relative_eq!(r, expected, max_relative = 1e-15);
    }

    #[test]
    fn bracket_even_and_positive() {
        for i in 0..=40 {
            let t = 0.1 * f64::from(i);
            let b = theta_bracket(t).unwrap();
            assert_eq!(b, theta_bracket(-t).unwrap());
            assert!(b > 0.0);
        }
        assert!(theta_rest(0.0).is_err());
        assert_eq!(theta_bracket(1000.0).unwrap(), (-500f64).exp());
    }
}
