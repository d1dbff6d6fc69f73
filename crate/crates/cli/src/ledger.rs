//! Misprint ledger: printed formulas next to re-derived ones, each evaluated
//! against an independently computed reference value.

use num_complex::Complex64;
use std::f64::consts::PI;
use xilab::bounds::{recompute_constants, PRINTED_CONSTANTS};
use xilab::identities::{self, verify, CaseSpec, Form, COSINE13_GRID, DIVERGENCE_PROBES, KOSH2_GRID};
use xilab::quadrature::{integrate_finite, try_integrate_log_singular, try_integrate_semi_infinite, DecayHint};
use xilab::specfun::{erf_family, expint_ei, k0_lattice_sum, log_gamma, psibar, zeta, ErfKind};
use xilab::{Result, ToleranceProfile};

/// How a value is judged against its reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Residual `|v − ref|/(1 + |ref|)` within the identity tolerance.
    Equal,
    /// `v ≤ ref` up to the identity tolerance.
    AtMost,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::AtMost => "at_most",
        }
    }

    fn holds(self, v: f64, reference: f64, tol: f64) -> bool {
        match self {
            Relation::Equal => identities::residual(v.into(), reference.into()) <= tol,
            Relation::AtMost => v <= reference + tol * (1.0 + reference.abs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evidence {
    pub label: String,
    /// `None` when the printed form has no finite value here.
    pub printed: Option<f64>,
    pub derived: Option<f64>,
    pub reference: f64,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MisprintEntry {
    pub id: &'static str,
    pub printed: &'static str,
    pub derived: &'static str,
    pub reference: &'static str,
    pub evidence: Vec<Evidence>,
    pub printed_holds: bool,
    pub derived_holds: bool,
    pub error: Option<String>,
}

struct Draft {
    id: &'static str,
    printed: &'static str,
    derived: &'static str,
    reference: &'static str,
    build: fn(&ToleranceProfile) -> Result<Vec<Evidence>>,
}

const DRAFTS: [Draft; 6] = [
    Draft {
        id: "kosh2-bracket",
        printed: "2πe^{x/2}/t − 4e^{−x/2}ΣK₀(2πnte^{−x})",
        derived: "−¼e^{−x/2}(4ΣK₀(2πnte^{−x}) − eˣ/t)",
        reference: "right side ∫Ξ²(t)/(t²+¼)² cos(xt)/cosh(πt) dt; integrability needs t·bracket(t) → 0",
        build: kosh2_evidence,
    },
    Draft {
        id: "cosine13-kernel",
        printed: "kernel cosh t/(cosh 2t + cosh 2β′), prefactor πe^{β′}/(4 cosh β′)",
        derived: "kernel cosh(t/2)/(cosh t + cosh 2β′), prefactor e^{β′}/cosh β′",
        reference: "residual |LHS − RHS|/(1 + |RHS|) of each form, which should vanish",
        build: cosine13_evidence,
    },
    Draft {
        id: "bounds-lower-constant",
        printed: "(2c₁)² √y/(√π erfi √y)",
        derived: "2c₁² √y/(√π erfi √y)",
        reference: "∫₀¹ (ψ(t+1) − log t) e^{−yt²} dt, which the term must not exceed",
        build: lower_constant_evidence,
    },
    Draft {
        id: "bounds-lower-erfi",
        printed: "−Ei(−y)/4 − e^{−y}/12 + √(πy) erfi(√y)/12",
        derived: "−Ei(−y)/4 − e^{−y}/12 + √(πy) erfc(√y)/12",
        reference: "∫₁^∞ (1/(2t) − 1/(12t²)) e^{−yt²} dt",
        build: lower_erfi_evidence,
    },
    Draft {
        id: "bounds-upper-radical",
        printed: "√(π/(2y)) erf √(2y)",
        derived: "√(π/(8y)) erf √(2y)",
        reference: "∫₀¹ e^{−2yt²} dt",
        build: upper_radical_evidence,
    },
    Draft {
        id: "k0-lattice-argument",
        printed: "4ΣK₀(nπx) − 2π/x",
        derived: "4ΣK₀(nx) − 2π/x",
        reference: "(1/2πi)∫Γ²(s/2)(x/2)^{−s}ζ(s) ds on Re s = ½",
        build: k0_argument_evidence,
    },
];

fn kosh2_evidence(profile: &ToleranceProfile) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    let t = DIVERGENCE_PROBES[2];
    for &x in &KOSH2_GRID {
        let probe = |form| -> Result<f64> { Ok((t * identities::kosh2_bracket(x, t, form)?).abs()) };
        out.push(Evidence {
            label: format!("|t·bracket(t)| at t = {t:e}, x = {x}"),
            printed: Some(probe(Form::Printed)?),
            derived: Some(probe(Form::Corrected)?),
            reference: identities::DIVERGENCE_THRESHOLD,
            relation: Relation::AtMost,
        });
        let side = |form| verify(CaseSpec::kosh2(x, form), profile);
        let (printed, derived) = (side(Form::Printed), side(Form::Corrected));
        if let Some(e) = derived.error {
            return Err(e);
        }
        let rhs = derived.rhs.map(|r| r.value().re).unwrap_or(f64::NAN);
        out.push(Evidence {
            label: format!("left side at x = {x}"),
            printed: printed.lhs.map(|l| l.value().re),
            derived: derived.lhs.map(|l| l.value().re),
            reference: rhs,
            relation: Relation::Equal,
        });
    }
    Ok(out)
}

fn cosine13_evidence(profile: &ToleranceProfile) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    for &(re, im) in &COSINE13_GRID {
        let beta = Complex64::new(re, im);
        let residual = |form| -> Result<Option<f64>> {
            let case = verify(CaseSpec::cosine13(beta, form), profile);
            match case.error {
                Some(e) => Err(e),
                None => Ok(case.residual),
            }
        };
        out.push(Evidence {
            label: format!("residual at β′ = {re}{im:+}i"),
            printed: residual(Form::Printed)?,
            derived: residual(Form::Corrected)?,
            reference: 0.0,
            relation: Relation::AtMost,
        });
    }
    Ok(out)
}

fn sqrt_y_over_erfi(y: f64) -> Result<f64> {
    Ok(y.sqrt() / (PI.sqrt() * erf_family(ErfKind::Erfi, y.sqrt())?))
}

fn lower_constant_evidence(profile: &ToleranceProfile) -> Result<Vec<Evidence>> {
    let c1 = recompute_constants()?.c1.value;
    let mut out = Vec::new();
    for y in [0.01f64, 1.0, 100.0] {
        let shape = sqrt_y_over_erfi(y)?;
        let head = try_integrate_log_singular(|t| Ok(psibar(0, t)? * (-y * t * t).exp()), 1.0, profile.quad_tol)?;
        out.push(Evidence {
            label: format!("y = {y}"),
            printed: Some((2.0 * PRINTED_CONSTANTS.c1).powi(2) * shape),
            derived: Some(2.0 * c1 * c1 * shape),
            reference: head.value,
            relation: Relation::AtMost,
        });
    }
    Ok(out)
}

fn lower_erfi_evidence(profile: &ToleranceProfile) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    for y in [0.01f64, 1.0, 10.0] {
        let common = -expint_ei(-y)? / 4.0 - (-y).exp() / 12.0;
        let root = (PI * y).sqrt() / 12.0;
        let tail = try_integrate_semi_infinite(
            |s| {
                let t = 1.0 + s;
                Ok((0.5 / t - 1.0 / (12.0 * t * t)) * (-y * t * t).exp())
            },
            0.0,
            profile.quad_tol,
            DecayHint::Gaussian { rate: y },
        )?;
        out.push(Evidence {
            label: format!("y = {y}"),
            printed: Some(common + root * erf_family(ErfKind::Erfi, y.sqrt())?),
            derived: Some(common + root * erf_family(ErfKind::Erfc, y.sqrt())?),
            reference: tail.value,
            relation: Relation::Equal,
        });
    }
    Ok(out)
}

fn upper_radical_evidence(profile: &ToleranceProfile) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    for y in [0.01f64, 1.0, 100.0] {
        let erf = erf_family(ErfKind::Erf, (2.0 * y).sqrt())?;
        let exact = integrate_finite(|t| (-2.0 * y * t * t).exp(), 0.0, 1.0, profile.quad_tol)?;
        out.push(Evidence {
            label: format!("y = {y}"),
            printed: Some((PI / (2.0 * y)).sqrt() * erf),
            derived: Some((PI / (8.0 * y)).sqrt() * erf),
            reference: exact.value,
            relation: Relation::Equal,
        });
    }
    Ok(out)
}

/// The Mellin–Barnes integral on `Re s = ½`, folded onto `u ≥ 0` by
/// conjugate symmetry.
fn mellin_lattice(x: f64, tol: f64) -> Result<f64> {
    let ln_half_x = (0.5 * x).ln();
    let f = |u: f64| -> Result<f64> {
        let s = Complex64::new(0.5, u);
        let weight = (2.0 * log_gamma(0.5 * s)? - s * ln_half_x).exp();
        Ok((weight * zeta(s)?).re / PI)
    };
    try_integrate_semi_infinite(f, 0.0, tol, DecayHint::PolynomialTimesExponential { rate: 0.5 * PI })
        .map(|q| q.value)
}

fn k0_argument_evidence(profile: &ToleranceProfile) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    for x in [0.05f64, 0.5] {
        // 4ΣK₀(na) = S(a) + 2π/a
        let printed = k0_lattice_sum(PI * x)? + 2.0 / x - 2.0 * PI / x;
        out.push(Evidence {
            label: format!("x = {x}"),
            printed: Some(printed),
            derived: Some(k0_lattice_sum(x)?),
            reference: mellin_lattice(x, profile.quad_tol)?,
            relation: Relation::Equal,
        });
    }
    Ok(out)
}

fn all_hold(evidence: &[Evidence], pick: fn(&Evidence) -> Option<f64>, tol: f64) -> bool {
    evidence
        .iter()
        .all(|e| pick(e).is_some_and(|v| e.relation.holds(v, e.reference, tol)))
}

/// Number of ledger entries; [`ledger_entry`] accepts `0..LEDGER_LEN`.
pub const LEDGER_LEN: usize = DRAFTS.len();

/// Builds one entry. Failures are recorded in the entry.
pub fn ledger_entry(index: usize, profile: &ToleranceProfile) -> MisprintEntry {
    let d = &DRAFTS[index];
    let (evidence, error) = match (d.build)(profile) {
        Ok(ev) => (ev, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    let tol = profile.identity_tol;
    MisprintEntry {
        id: d.id,
        printed: d.printed,
        derived: d.derived,
        reference: d.reference,
        printed_holds: error.is_none() && all_hold(&evidence, |e| e.printed, tol),
        derived_holds: error.is_none() && all_hold(&evidence, |e| e.derived, tol),
        evidence,
        error,
    }
}
