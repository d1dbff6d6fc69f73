use super::{log_gamma, ComplexValue, BERNOULLI_EVEN};
use crate::error::{Error, Result};

/// Largest `|Im s|` (and `|t|` for [`xi_upper`]) the Euler–Maclaurin kernel is
/// contracted for.
pub const MAX_CRITICAL_HEIGHT: f64 = 200.0;

const CORRECTION_ORDER: usize = 12;
const XI_REALNESS_TOL: f64 = 1e-10;

/// `(2k)!` for k = 1..=12, paired with `BERNOULLI_EVEN`.
fn even_factorial(k: usize) -> f64 {
    (1..=2 * k).map(|j| j as f64).product()
}

/// Riemann zeta on the strip `0.4 <= Re s <= 3`, `|Im s| <= 200`, `s != 1`.
///
/// Euler–Maclaurin with `N = max(20, ceil|Im s| + 10)` and twelve Bernoulli
/// corrections.
pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain("zeta", s, "finite components"));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole {
            function: "zeta",
            arg: s.to_string(),
        });
    }
    if !(0.4..=3.0).contains(&s.re) || s.im.abs() > MAX_CRITICAL_HEIGHT {
        return Err(Error::domain("zeta", s, "0.4 <= Re s <= 3, |Im s| <= 200"));
    }
    let n = (s.im.abs().ceil() + 10.0).max(20.0) as u32;
    let nf = f64::from(n);

    let mut head = ComplexValue::new(0.0, 0.0);
    for k in (1..n).rev() {
        head += (-s * f64::from(k).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp(); // N^{-s}
    let mut sum = head + n_pow * nf / (s - 1.0) + n_pow * 0.5;

    // B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    let inv_n2 = 1.0 / (nf * nf);
    let mut rising = s; // s(s+1)...(s+2k-2)
    let mut power = n_pow / nf; // N^{-s-1}
    for k in 1..=CORRECTION_ORDER {
        sum += rising * power * (BERNOULLI_EVEN[k - 1] / even_factorial(k));
        let j = 2.0 * k as f64;
        rising *= (s + (j - 1.0)) * (s + j);
        power *= inv_n2;
    }
    Ok(sum)
}

/// Riemann `Ξ(t) = ξ(1/2 + it)` for real `|t| <= 200`.
///
/// Computed as the complex product `½ s(s-1) π^{-s/2} Γ(s/2) ζ(s)`; the
/// imaginary part of the product must vanish to `1e-10` relative to the
/// magnitude of its factors, otherwise [`Error::NotReal`] is returned.
pub fn xi_upper(t: f64) -> Result<f64> {
    if !t.is_finite() || t.abs() > MAX_CRITICAL_HEIGHT {
        return Err(Error::domain("xi_upper", t, "|t| <= 200"));
    }
    let s = ComplexValue::new(0.5, t);
    let half = s * 0.5;
    let log_prefactor = log_gamma(half)? - half * std::f64::consts::PI.ln();
    let prefactor = log_prefactor.exp() * (-0.5 * (t * t + 0.25));
    let z = zeta(s)?;
    let value = prefactor * z;
    let scale = prefactor.norm() * z.norm().max(1.0);
    if value.im.abs() > XI_REALNESS_TOL * scale {
        return Err(Error::NotReal {
            function: "xi_upper",
            residue: value.im,
            scale,
            tolerance: XI_REALNESS_TOL,
        });
    }
    Ok(value.re)
}
