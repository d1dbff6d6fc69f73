use super::EULER_GAMMA;
use crate::error::{Error, Result};
use std::f64::consts::PI;

const SERIES_LIMIT: f64 = 2.0;
const ASYMPTOTIC_START: f64 = 25.0;

/// Seam between the two evaluation paths of [`k0_lattice_sum`].
pub const LATTICE_SEAM: f64 = 1.0;

/// Modified Bessel function `K₀(x)` for `x > 0`.
///
/// Ascending series up to `x = 2`; the asymptotic expansion cannot reach
/// 1e-13 until `x` is near 20, so the gap is bridged by Steed's continued
/// fraction.
pub fn bessel_k0(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("bessel_k0", x, "x > 0"));
    }
    if x <= SERIES_LIMIT {
        Ok(k0_series(x))
    } else if x < ASYMPTOTIC_START {
        k0_continued_fraction(x)
    } else {
        Ok(k0_asymptotic(x))
    }
}

// K0(x) = -(log(x/2) + γ) I0(x) + Σ_{k≥1} (x²/4)^k / (k!)² H_k
fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut harmonic = 0.0;
    let mut tail = 0.0;
    for k in 1..60 {
        let kf = f64::from(k);
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < 1e-18 * tail {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + tail
}

// Steed's method (CF2) specialised to order zero.
fn k0_continued_fraction(x: f64) -> Result<f64> {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = f64::from(i);
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            return Ok((PI / (2.0 * x)).sqrt() * (-x).exp() / s);
        }
    }
    Err(Error::NonConvergence {
        what: "bessel_k0 continued fraction",
        detail: format!("x = {x}"),
    })
}

fn k0_asymptotic(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..40 {
        let odd = 2.0 * f64::from(k) - 1.0;
        term *= -odd * odd / (8.0 * f64::from(k) * x);
        sum += term;
        if term.abs() < 1e-17 {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() * sum
}

/// `S(a) = 4 Σ_{n≥1} K₀(n a) − 2π/a`, the lattice sum with its `1/a` pole removed.
///
/// Uses [`k0_lattice_sum_direct`] for `a >= 1` and
/// [`k0_lattice_sum_lattice`] below; the two agree to 1e-10 on `[0.5, 2]`.
pub fn k0_lattice_sum(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain("k0_lattice_sum", a, "a > 0"));
    }
    if a >= LATTICE_SEAM {
        k0_lattice_sum_direct(a)
    } else {
        k0_lattice_sum_lattice(a)
    }
}

/// Direct path: sum `K₀(na)` until the terms drop below 1e-18, then bound the
/// geometric remainder.
pub fn k0_lattice_sum_direct(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain("k0_lattice_sum_direct", a, "a > 0"));
    }
    let max_terms = (60.0 / a).ceil() as u64 + 16;
    if max_terms > 2_000_000 {
        return Err(Error::NonConvergence {
            what: "k0_lattice_sum direct path",
            detail: format!("a = {a} needs more than 2e6 terms"),
        });
    }
    let mut sum = 0.0;
    let mut n = 1u64;
    loop {
        let term = bessel_k0(n as f64 * a)?;
        // remaining terms are bounded by term * e^{-a} / (1 - e^{-a})
        let remainder = term * (-a).exp() / -(-a).exp_m1();
        sum += term;
        if term < 1e-18 && remainder < 1e-17 {
            break;
        }
        n += 1;
        if n > max_terms {
            return Err(Error::NonConvergence {
                what: "k0_lattice_sum direct path",
                detail: format!("tail above 1e-17 after {max_terms} terms at a = {a}"),
            });
        }
    }
    Ok(4.0 * sum - 2.0 * PI / a)
}

const LATTICE_HEAD: u32 = 32;

/// Reciprocal-lattice path:
/// `S(a) = 2(γ + log(a/4π)) + 4π Σ_{k≥1} [(a² + 4π²k²)^{-1/2} − (2πk)^{-1}]`.
///
/// The first 32 brackets are summed exactly (in a cancellation-free form); the
/// remainder is expanded in `(a/2πk)²` and summed with Hurwitz-zeta tails, so
/// the cut-off error is below 1e-17 for `a <= 4`.
pub fn k0_lattice_sum_lattice(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain("k0_lattice_sum_lattice", a, "a > 0"));
    }
    if a > 4.0 {
        return Err(Error::domain("k0_lattice_sum_lattice", a, "a <= 4"));
    }
    let two_pi = 2.0 * PI;
    let a2 = a * a;
    let mut head = 0.0;
    for k in 1..=LATTICE_HEAD {
        let outer = two_pi * f64::from(k);
        let inner = (a2 + outer * outer).sqrt();
        // 1/inner - 1/outer = -a² / (inner * outer * (inner + outer))
        head -= a2 / (inner * outer * (inner + outer));
    }
    // (1+ε)^{-1/2} - 1 = Σ_j c_j ε^j with c_j = binom(-1/2, j)
    let eps = (a / two_pi).powi(2);
    let mut tail = 0.0;
    let mut coeff = 1.0;
    let mut eps_pow = 1.0;
    for j in 1..=6u32 {
        let jf = f64::from(j);
        coeff *= -(jf - 0.5) / jf;
        eps_pow *= eps;
        tail += coeff * eps_pow * hurwitz_tail(2.0 * jf + 1.0, LATTICE_HEAD);
    }
    tail /= two_pi;
    Ok(2.0 * (EULER_GAMMA + (a / (4.0 * PI)).ln()) + 2.0 * two_pi * (head + tail))
}

/// `Σ_{k>K} k^{-p}` by Euler–Maclaurin at `K`.
fn hurwitz_tail(p: f64, k: u32) -> f64 {
    let kf = f64::from(k);
    let f_k = kf.powf(-p);
    let mut sum = kf.powf(1.0 - p) / (p - 1.0) - 0.5 * f_k;
    // - Σ B_2i/(2i)! f^{(2i-1)}(K), f^{(r)}(K) = (-1)^r p(p+1)...(p+r-1) K^{-p-r}
    let mut rising = p; // p(p+1)...(p+2i-2)
    let mut power = f_k / kf;
    let mut fact = 2.0;
    for (i, b) in super::BERNOULLI_EVEN.iter().take(5).enumerate() {
        // odd derivative carries a minus sign
        sum += b / fact * rising * power;
        let j = 2.0 * (i as f64 + 1.0);
        rising *= (p + j - 1.0) * (p + j);
        power /= kf * kf;
        fact *= (j + 1.0) * (j + 2.0);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn k0_small_argument_log() {
        let x: f64 = 1e-8;
        let expected = -(0.5 * x).ln() - EULER_GAMMA;
        assert_relative_eq!(bessel_k0(x).unwrap(), expected, max_relative = 1e-14);
    }

    #[test]
    fn k0_regimes_agree_at_seams() {
        for x in [SERIES_LIMIT, ASYMPTOTIC_START] {
            let lo = x * (1.0 - 1e-12);
            let hi = x * (1.0 + 1e-12);
            assert_relative_eq!(bessel_k0(lo).unwrap(), bessel_k0(hi).unwrap(), max_relative = 1e-11);
        }
        // continued fraction vs asymptotic deep in overlap
        assert_relative_eq!(
            k0_continued_fraction(30.0).unwrap(),
            k0_asymptotic(30.0),
            max_relative = 1e-14
        );
        assert_relative_eq!(k0_continued_fraction(2.0).unwrap(), k0_series(2.0), max_relative = 1e-14);
    }

    #[test]
    fn k0_domain() {
        assert!(bessel_k0(0.0).is_err());
        assert!(bessel_k0(-3.0).is_err());
        assert_eq!(bessel_k0(800.0).unwrap(), 0.0);
    }

    #[test]
    fn hurwitz_tail_matches_brute_sum() {
        let brute: f64 = (33..2_000_000u64).map(|k| (k as f64).powi(-3)).sum::<f64>()
            + 0.5 / (2_000_000f64).powi(2);
        assert_relative_eq!(hurwitz_tail(3.0, 32), brute, max_relative = 1e-11);
    }

    #[test]
    fn lattice_small_a_leading_log() {
        let a = 1e-6;
        let expected = 2.0 * (EULER_GAMMA + (a / (4.0 * PI)).ln());
        assert_relative_eq!(k0_lattice_sum(a).unwrap(), expected, max_relative = 1e-13);
    }
}
