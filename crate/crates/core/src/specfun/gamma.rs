use super::{ComplexValue, BERNOULLI_EVEN};
use crate::error::{Error, Result};

/// Highest derivative order supported by [`polygamma`] and [`psibar`].
pub const MAX_POLYGAMMA_ORDER: u32 = 8;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_SHIFT: f64 = 15.0;
const DIGAMMA_SHIFT: f64 = 12.0;
const POLYGAMMA_SHIFT: f64 = 20.0;

fn check_finite_complex(function: &'static str, z: ComplexValue) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(function, z, "finite components"))
    }
}

/// Principal branch of `log Γ(z)` for `Re z > 0`.
///
/// The argument is shifted up by the recurrence until `Re z >= 15`; the sum of
/// principal logarithms of the shifted factors stays on the principal branch
/// because every factor lies in the right half-plane.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_finite_complex("log_gamma", z)?;
    if z.re <= 0.0 {
        return Err(Error::domain("log_gamma", z, "Re z > 0"));
    }
    let mut shifted = z;
    let mut correction = ComplexValue::new(0.0, 0.0);
    while shifted.re < STIRLING_SHIFT {
        correction += shifted.ln();
        shifted += 1.0;
    }
    Ok(stirling(shifted) - correction)
}

fn stirling(z: ComplexValue) -> ComplexValue {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = ComplexValue::new(0.0, 0.0);
    let mut power = inv;
    for (k, b) in BERNOULLI_EVEN.iter().take(10).enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        series += power * (b / (n * (n - 1.0)));
        power *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series
}

/// Digamma `ψ(x) = Γ'(x)/Γ(x)` for real `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("digamma", x, "x > 0"));
    }
    let mut shifted = x;
    let mut correction = 0.0;
    while shifted < DIGAMMA_SHIFT {
        correction += 1.0 / shifted;
        shifted += 1.0;
    }
    Ok(digamma_asymptotic(shifted) - correction)
}

fn digamma_asymptotic(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut power = inv2;
    let mut series = 0.0;
    for (k, b) in BERNOULLI_EVEN.iter().take(9).enumerate() {
        series += b / (2.0 * (k as f64 + 1.0)) * power;
        power *= inv2;
    }
    x.ln() - 0.5 / x - series
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Rising factorial `x (x+1) ... (x+n-1)` for real `x`.
fn rising(x: f64, n: u32) -> f64 {
    (0..n).map(|j| x + f64::from(j)).product()
}

/// Polygamma `ψ^{(m)}(x)` for `1 <= m <= 8`, `x > 0`.
pub fn polygamma(m: u32, x: f64) -> Result<f64> {
    if m == 0 || m > MAX_POLYGAMMA_ORDER {
        return Err(Error::domain("polygamma", m, "1 <= m <= 8"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("polygamma", x, "x > 0"));
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let m_fact = factorial(m);
    let exponent = -(m as i32) - 1;
    // ψ^{(m)}(x) = ψ^{(m)}(x+1) - (-1)^m m! x^{-m-1}; every shift term has the
    // sign of the result, so no cancellation.
    let mut shifted = x;
    let mut correction = 0.0;
    while shifted < POLYGAMMA_SHIFT {
        correction += shifted.powi(exponent);
        shifted += 1.0;
    }
    let asym = polygamma_asymptotic(m, shifted);
    Ok(asym + sign * m_fact * correction)
}

// (-1)^{m+1} [ (m-1)!/x^m + m!/(2x^{m+1}) + sum B_2k (2k+m-1)!/((2k)! x^{2k+m}) ]
fn polygamma_asymptotic(m: u32, x: f64) -> f64 {
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let inv = 1.0 / x;
    let xm = x.powi(m as i32);
    let mut sum = factorial(m - 1) / xm + factorial(m) / (2.0 * xm * x);
    let inv2 = inv * inv;
    let mut power = inv2 / xm;
    for (k, b) in BERNOULLI_EVEN.iter().take(12).enumerate() {
        let two_k = 2 * (k as u32 + 1);
        // (2k+m-1)!/(2k)! = rising(2k+1, m-1)
        sum += b * rising(f64::from(two_k + 1), m - 1) * power;
        power *= inv2;
    }
    sign * sum
}

/// Crossover beyond which [`psibar`] switches to the differentiated
/// asymptotic tail.
fn psibar_crossover(m: u32) -> f64 {
    10.0 + 3.0 * f64::from(m)
}

/// `ψ̄_m(t)`, the m-th derivative of `ψ(t+1) - log t`, for `0 <= m <= 8`, `t > 0`.
///
/// For large `t` the difference of two nearly equal quantities is replaced by
/// the m-th derivative of the asymptotic tail `1/(2t) - Σ B_2k/(2k t^{2k})`.
pub fn psibar(m: u32, t: f64) -> Result<f64> {
    if m > MAX_POLYGAMMA_ORDER {
        return Err(Error::domain("psibar", m, "0 <= m <= 8"));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain("psibar", t, "t > 0"));
    }
    if t > psibar_crossover(m) {
        return Ok(psibar_tail(m, t));
    }
    if m == 0 {
        return Ok(digamma(t + 1.0)? - t.ln());
    }
    // d^m/dt^m log t = (-1)^{m-1} (m-1)! t^{-m}
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok(polygamma(m, t + 1.0)? - sign * factorial(m - 1) * t.powi(-(m as i32)))
}

fn psibar_tail(m: u32, t: f64) -> f64 {
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let inv = 1.0 / t;
    let mut sum = 0.5 * factorial(m) * inv.powi(m as i32 + 1);
    let inv2 = inv * inv;
    let mut power = inv2 * inv.powi(m as i32);
    for (k, b) in BERNOULLI_EVEN.iter().take(12).enumerate() {
        let two_k = 2.0 * (k as f64 + 1.0);
        sum -= b / two_k * rising(two_k, m) * power;
        power *= inv2;
    }
    sign * sum
}

/// `Γ(1/2 + it + m) / Γ(1/2 + it)` as the rising product `Π_{j<m} (1/2 + it + j)`.
pub fn gamma_ratio_poch(m: u32, t: f64) -> Result<ComplexValue> {
    if m > MAX_POLYGAMMA_ORDER {
        return Err(Error::domain("gamma_ratio_poch", m, "0 <= m <= 8"));
    }
    if !t.is_finite() {
        return Err(Error::domain("gamma_ratio_poch", t, "finite t"));
    }
    Ok((0..m)
        .map(|j| ComplexValue::new(0.5 + f64::from(j), t))
        .fold(ComplexValue::new(1.0, 0.0), |acc, f| acc * f))
}
