//! Independent reference implementations used only by the tests. They are
//! slow, simple, and share no code with the library.
#![allow(dead_code, clippy::needless_range_loop)]

pub mod frozen;

use num_complex::Complex64;
use std::f64::consts::PI;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ζ(s) from the alternating eta series with Borwein's acceleration
/// (n = 60 terms gives ~1e-15 for moderate |Im s|).
pub fn zeta_eta(s: Complex64) -> Complex64 {
    let n = 60usize + (s.im.abs() as usize) * 2;
    // d_k = n Σ_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0 / n as f64; // i = 0 term, scaled so d_k/n
    let mut acc = term;
    d[0] = acc;
    for i in 1..=n {
        let fi = i as f64;
        let nf = n as f64;
        term *= (nf + fi - 1.0) * (nf - fi + 1.0) * 4.0 / ((2.0 * fi - 1.0) * (2.0 * fi));
        acc += term;
        d[i] = acc;
    }
    let dn = d[n];
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let w = sign * (d[k] - dn);
        sum += w * Complex64::new((k + 1) as f64, 0.0).powc(-s);
    }
    let eta = -sum / dn;
    let two = Complex64::new(2.0, 0.0);
    eta / (Complex64::new(1.0, 0.0) - two.powc(Complex64::new(1.0, 0.0) - s))
}

/// ψ(x) = −γ + Σ_{k≥0} (1/(k+1) − 1/(k+x)), summed to K then closed with the
/// integral tail estimate (x−1)/K.
pub fn digamma_series(x: f64) -> f64 {
    let k_max = 2_000_000u64;
    let mut s = 0.0;
    for k in 0..k_max {
        let kf = k as f64;
        s += (x - 1.0) / ((kf + 1.0) * (kf + x));
    }
    // Σ_{k≥K} (x−1)/((k+1)(k+x)) ≈ (x−1)/(K + (x)/2)
    let kf = k_max as f64;
    -EULER_GAMMA + s + (x - 1.0) / (kf + 0.5 * (x + 1.0))
}

/// ψ^{(m)}(x) = (−1)^{m+1} m! Σ_{k≥0} (k+x)^{−m−1}, with an Euler–Maclaurin tail.
pub fn polygamma_series(m: u32, x: f64) -> f64 {
    let p = f64::from(m + 1);
    let k_max = 1000u64;
    let mut s = 0.0;
    for k in 0..k_max {
        s += (k as f64 + x).powf(-p);
    }
    let y = k_max as f64 + x;
    s += y.powf(1.0 - p) / (p - 1.0) + 0.5 * y.powf(-p) + p / 12.0 * y.powf(-p - 1.0);
    let fact: f64 = (1..=m).map(f64::from).product();
    let sign = if m.is_multiple_of(2) { -1.0 } else { 1.0 };
    sign * fact * s
}

/// Trapezoid rule on [lo, hi] with n panels.
pub fn trapezoid(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let h = (hi - lo) / n as f64;
    let mut s = 0.5 * (f(lo) + f(hi));
    for i in 1..n {
        s += f(lo + h * i as f64);
    }
    s * h
}

/// K₀(x) = ∫₀^∞ e^{−x cosh u} du; the trapezoid rule converges geometrically here.
pub fn k0_integral(x: f64) -> f64 {
    let hi = (2.0 * (40.0 / x + 1.0)).acosh().max(1.0) + 1.0;
    trapezoid(|u| (-x * u.cosh()).exp(), 0.0, hi, 4000)
}

/// Double-exponential (exp-sinh) quadrature of ∫₀^∞ f for smooth f with
/// integrable endpoint behaviour; t = exp(π/2 sinh s).
pub fn exp_sinh(f: impl Fn(f64) -> f64, h: f64) -> f64 {
    let mut sum = 0.0;
    let n = (6.0 / h) as i64;
    for k in -n..=n {
        let s = k as f64 * h;
        let t = (0.5 * PI * s.sinh()).exp();
        let w = 0.5 * PI * s.cosh() * t;
        if t.is_finite() && t > 0.0 && w.is_finite() {
            let v = f(t);
            if v.is_finite() {
                sum += v * w;
            }
        }
    }
    sum * h
}

/// Tanh-sinh quadrature of ∫_a^b f, tolerant of endpoint log singularities.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, h: f64) -> f64 {
    let half = 0.5 * (b - a);
    let n = (4.0 / h) as i64;
    let mut sum = 0.0;
    for k in -n..=n {
        let s = k as f64 * h;
        let u = 0.5 * PI * s.sinh();
        let x = u.tanh();
        let w = 0.5 * PI * s.cosh() / u.cosh().powi(2);
        // distance to the nearer endpoint, computed without cancellation
        let comp = 1.0 / (u.abs().exp() * u.cosh());
        let t = if x >= 0.0 { b - half * comp } else { a + half * comp };
        if t > a && t < b {
            let v = f(t);
            if v.is_finite() {
                sum += v * w;
            }
        }
    }
    sum * h * half
}

/// θ-tail brute sum.
pub fn theta_rest_brute(y: f64) -> f64 {
    (1..100_000u64)
        .map(|n| (-PI * (n * n) as f64 * y).exp())
        .take_while(|&v| v > 0.0)
        .sum()
}

/// 4 Σ K₀(na) − 2π/a by brute summation with the integral oracle.
pub fn lattice_sum_brute(a: f64) -> f64 {
    let mut s = 0.0;
    let mut n = 1u64;
    loop {
        let v = k0_integral(n as f64 * a);
        s += v;
        if v < 1e-19 {
            break;
        }
        n += 1;
    }
    4.0 * s - 2.0 * PI / a
}
