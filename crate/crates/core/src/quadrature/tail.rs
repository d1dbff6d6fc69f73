//! Tail cut-off selection for half-line integrals.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// How an integrand decays at infinity. `rate` must be finite and positive.
///
/// | hint | envelope |
/// |------|----------|
/// | `Gaussian` | `e^{−r t²}` |
/// | `Exponential` | `e^{−r t}` |
/// | `SuperExponential` | `e^{−r eᵗ}` |
/// | `PolynomialTimesExponential` | `e^{−r t/2}` (half the rate absorbs the power) |
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayHint {
    Gaussian { rate: f64 },
    Exponential { rate: f64 },
    SuperExponential { rate: f64 },
    PolynomialTimesExponential { rate: f64 },
}

const SAMPLES: u32 = 9;
const SAFETY_LN: f64 = std::f64::consts::LN_10;
const GROWTH: f64 = 1.25;
const MAX_STEPS: u32 = 200;
// growth of the fitted constant beyond this means the hint is wrong
const VIOLATION_LN: f64 = 27.631_021_115_928_547; // ln 1e12

impl DecayHint {
    pub fn rate(self) -> f64 {
        match self {
            Self::Gaussian { rate }
            | Self::Exponential { rate }
            | Self::SuperExponential { rate }
            | Self::PolynomialTimesExponential { rate } => rate,
        }
    }

    pub(crate) fn validate(self) -> Result<()> {
        let r = self.rate();
        if r > 0.0 && r.is_finite() {
            Ok(())
        } else {
            Err(Error::domain("DecayHint", r, "finite rate > 0"))
        }
    }

    fn ln_envelope(self, t: f64) -> f64 {
        match self {
            Self::Gaussian { rate } => -rate * t * t,
            Self::Exponential { rate } => -rate * t,
            Self::SuperExponential { rate } => -rate * t.exp(),
            Self::PolynomialTimesExponential { rate } => -0.5 * rate * t,
        }
    }

    /// `ln ∫_T^∞ envelope`.
    fn ln_tail_integral(self, t: f64) -> f64 {
        match self {
            Self::Gaussian { rate } => {
                let prefactor = (1.0 / (2.0 * rate * t)).min(0.5 * (PI / rate).sqrt());
                prefactor.ln() - rate * t * t
            }
            Self::Exponential { rate } => -rate * t - rate.ln(),
            // ∫_T^∞ e^{-r e^u} du = E₁(r e^T) ≤ e^{-r e^T} / (r e^T)
            Self::SuperExponential { rate } => -rate * t.exp() - rate.ln() - t,
            Self::PolynomialTimesExponential { rate } => -0.5 * rate * t - (0.5 * rate).ln(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Self::Gaussian { .. } => "gaussian",
            Self::Exponential { .. } => "exponential",
            Self::SuperExponential { .. } => "super_exponential",
            Self::PolynomialTimesExponential { .. } => "polynomial_times_exponential",
        }
    }
}

pub(crate) struct Cutoff {
    pub cutoff: f64,
    pub bound: f64,
    pub evaluations: usize,
}

/// Smallest `T = a + 1.25^k` whose fitted tail bound is at most `budget`.
pub(crate) fn choose_cutoff<F>(f: &F, a: f64, budget: f64, hint: DecayHint) -> Result<Cutoff>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut width = 1.0;
    let mut evaluations = 0;
    let mut first_ln_c: Option<f64> = None;
    let ln_budget = budget.ln();
    for _ in 0..MAX_STEPS {
        let t = a + width;
        if !t.is_finite() {
            break;
        }
        // fit C over [T, 1.5 T] with C |envelope| ≥ |f|
        let mut ln_c = f64::NEG_INFINITY;
        for k in 0..SAMPLES {
            let s = t * (1.0 + 0.5 * f64::from(k) / f64::from(SAMPLES - 1));
            let v = f(s)?;
            evaluations += 1;
            if !v.is_finite() {
                return Err(Error::NonFinite { at: s, value: v });
            }
            if v != 0.0 {
                ln_c = ln_c.max(v.abs().ln() - hint.ln_envelope(s));
            }
        }
        ln_c += SAFETY_LN;
        if ln_c.is_finite() {
            match first_ln_c {
                None => first_ln_c = Some(ln_c),
                Some(first) if ln_c - first > VIOLATION_LN => {
                    return Err(Error::HintViolation {
                        hint: hint.name().to_string(),
                        detail: format!(
                            "|f| exceeds the {} envelope by a factor growing past 1e12 near t = {t:.6e}",
                            hint.name()
                        ),
                    });
                }
                Some(_) => {}
            }
        }
        let ln_bound = ln_c + hint.ln_tail_integral(t);
        if ln_bound <= ln_budget {
            return Ok(Cutoff {
                cutoff: t,
                bound: ln_bound.exp(),
                evaluations,
            });
        }
        width *= GROWTH;
    }
    Err(Error::HintViolation {
        hint: hint.name().to_string(),
        detail: format!("no cut-off found with tail bound below {budget:.3e}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(g: impl Fn(f64) -> f64) -> impl Fn(f64) -> Result<f64> {
        move |t| Ok(g(t))
    }

    #[test]
    fn bad_rates_rejected() {
        assert!(DecayHint::Gaussian { rate: 0.0 }.validate().is_err());
        assert!(DecayHint::Exponential { rate: f64::NAN }.validate().is_err());
        assert!(DecayHint::SuperExponential { rate: f64::INFINITY }.validate().is_err());
        assert!(DecayHint::PolynomialTimesExponential { rate: 2.0 }.validate().is_ok());
    }

    #[test]
    fn exponential_cutoff_bound_is_honest() {
        let hint = DecayHint::Exponential { rate: 2.0 };
        let c = choose_cutoff(&ok(|t| (-2.0 * t).exp()), 0.0, 1e-12, hint).unwrap();
        let true_tail = (-2.0 * c.cutoff).exp() / 2.0;
        assert!(c.bound >= true_tail && c.bound <= 1e-12);
    }

    #[test]
    fn super_exponential_cuts_early() {
        let hint = DecayHint::SuperExponential { rate: 1.0 };
        let c = choose_cutoff(&ok(|t| (-t.exp()).exp()), 0.0, 1e-15, hint).unwrap();
        assert!(c.cutoff < 5.0);
    }

    #[test]
    fn identically_zero_tail() {
        let c = choose_cutoff(&ok(|_| 0.0), 0.0, 1e-15, DecayHint::Gaussian { rate: 1.0 }).unwrap();
        assert_eq!(c.bound, 0.0);
        assert_eq!(c.cutoff, 1.0);
    }
}
