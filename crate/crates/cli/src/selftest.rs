//! Kernel and quadrature self-checks against pinned reference values.
//!
//! Kernels are reached through [`Kernels`] so tests can substitute a faulty
//! implementation and watch the named check fail.

use num_complex::Complex64;
use std::f64::consts::PI;
use xilab::bounds::PRINTED_CONSTANTS;
use xilab::quadrature::{try_integrate_finite, try_integrate_log_singular, try_integrate_semi_infinite, DecayHint};
use xilab::specfun::{self, ErfKind};
use xilab::{Result, ToleranceProfile};

/// The kernels exercised by the self-test. Every method defaults to the
/// library implementation.
pub trait Kernels: Sync {
    fn log_gamma(&self, z: Complex64) -> Result<Complex64> {
        specfun::log_gamma(z)
    }
    fn digamma(&self, x: f64) -> Result<f64> {
        specfun::digamma(x)
    }
    fn polygamma(&self, m: u32, x: f64) -> Result<f64> {
        specfun::polygamma(m, x)
    }
    fn psibar(&self, m: u32, t: f64) -> Result<f64> {
        specfun::psibar(m, t)
    }
    fn zeta(&self, s: Complex64) -> Result<Complex64> {
        specfun::zeta(s)
    }
    fn xi_upper(&self, t: f64) -> Result<f64> {
        specfun::xi_upper(t)
    }
    fn bessel_k0(&self, x: f64) -> Result<f64> {
        specfun::bessel_k0(x)
    }
    fn k0_lattice_sum_direct(&self, a: f64) -> Result<f64> {
        specfun::k0_lattice_sum_direct(a)
    }
    fn k0_lattice_sum_lattice(&self, a: f64) -> Result<f64> {
        specfun::k0_lattice_sum_lattice(a)
    }
    fn theta_rest(&self, y: f64) -> Result<f64> {
        specfun::theta_rest(y)
    }
    fn erf_family(&self, kind: ErfKind, x: f64) -> Result<f64> {
        specfun::erf_family(kind, x)
    }
    fn expint_ei(&self, x: f64) -> Result<f64> {
        specfun::expint_ei(x)
    }
    fn log_gaussian_moment(&self, a: f64) -> Result<f64> {
        specfun::log_gaussian_moment(a)
    }
}

/// The library kernels.
pub struct Library;
impl Kernels for Library {}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// The check failed because something did not converge.
    pub non_convergence: bool,
}

#[derive(Clone, Copy)]
enum Category {
    /// Kernel values; threshold `max(pinned, series_tol)`, relative.
    Series,
    /// Integrals; threshold `max(pinned, quad_tol)`, absolute.
    Quadrature,
    /// Printed constants; threshold `max(pinned, constants_tol)`, absolute.
    Constant,
}

type Compute<'a> = Box<dyn Fn(&dyn Kernels, &ToleranceProfile) -> Result<f64> + 'a>;

struct Check<'a> {
    name: &'static str,
    category: Category,
    pinned: f64,
    expected: f64,
    compute: Compute<'a>,
}

const FIRST_ZERO: f64 = 14.134_725_141_734_693;

fn checks<'a>() -> Vec<Check<'a>> {
    use Category::*;
    macro_rules! check {
        ($name:expr, $cat:expr, $pinned:expr, $expected:expr, $f:expr) => {
            Check {
                name: $name,
                category: $cat,
                pinned: $pinned,
                expected: $expected,
                compute: Box::new($f),
            }
        };
    }
    vec![
        check!("log_gamma(5)", Series, 1e-14, 24f64.ln(), |k, _| Ok(k.log_gamma(Complex64::new(5.0, 0.0))?.re)),
        check!("log_gamma(0.5+14.134725i).im", Series, 1e-12, 23.305_944_472_665_731, |k, _| {
            Ok(k.log_gamma(Complex64::new(0.5, 14.134725))?.im)
        }),
        check!("digamma(1)", Series, 1e-14, -specfun::EULER_GAMMA, |k, _| k.digamma(1.0)),
        check!("digamma(0.25)", Series, 1e-13, -4.227_453_533_376_265_4, |k, _| k.digamma(0.25)),
        check!("polygamma(1, 1)", Series, 1e-13, PI * PI / 6.0, |k, _| k.polygamma(1, 1.0)),
        check!("polygamma(2, 1)", Series, 1e-13, -2.404_113_806_319_188_6, |k, _| k.polygamma(2, 1.0)),
        check!("polygamma(1, 10)", Series, 1e-13, 0.105_166_335_681_685_75, |k, _| k.polygamma(1, 10.0)),
        check!("psibar(0, 1)", Series, 1e-14, 1.0 - specfun::EULER_GAMMA, |k, _| k.psibar(0, 1.0)),
        check!("psibar(1, 2)", Series, 1e-13, -0.105_065_933_151_773_56, |k, _| k.psibar(1, 2.0)),
        check!("zeta(2)", Series, 1e-14, PI * PI / 6.0, |k, _| Ok(k.zeta(Complex64::new(2.0, 0.0))?.re)),
        check!("zeta(1/2)", Series, 1e-12, -1.460_354_508_809_586_8, |k, _| {
            Ok(k.zeta(Complex64::new(0.5, 0.0))?.re)
        }),
        check!("|zeta(1/2 + 14.1347251417i)|", Quadrature, 1e-9, 0.0, |k, _| {
            Ok(k.zeta(Complex64::new(0.5, FIRST_ZERO))?.norm())
        }),
        check!("xi_upper(0)", Series, 1e-12, 0.497_120_778_188_314_1, |k, _| k.xi_upper(0.0)),
        check!("xi_upper(14.1347251417)", Quadrature, 1e-9, 0.0, |k, _| k.xi_upper(FIRST_ZERO)),
        check!("bessel_k0(1)", Series, 1e-13, 0.421_024_438_240_708_33, |k, _| k.bessel_k0(1.0)),
        check!("bessel_k0(20)", Series, 1e-13, 5.741_237_815_336_524_3e-10, |k, _| k.bessel_k0(20.0)),
        check!("k0_lattice_sum paths at a = 1", Quadrature, 1e-10, 0.0, |k, _| {
            Ok(k.k0_lattice_sum_direct(1.0)? - k.k0_lattice_sum_lattice(1.0)?)
        }),
        check!("k0_lattice_sum(5)", Series, 1e-12, -1.241_801_152_758_585_3, |k, _| k.k0_lattice_sum_direct(5.0)),
        check!("theta_rest(1)", Series, 1e-14, 0.043_217_405_606_654_007, |k, _| k.theta_rest(1.0)),
        check!("theta transform at t = 0.8", Quadrature, 1e-12, 0.0, |k, _| {
            let t = 0.8f64;
            let direct = (0.5 * t).exp() - 2.0 * (-0.5 * t).exp() * k.theta_rest((-2.0 * t).exp())?;
            let transformed = (-0.5 * t).exp() - 2.0 * (0.5 * t).exp() * k.theta_rest((2.0 * t).exp())?;
            Ok(direct - transformed)
        }),
        check!("erfi(1)", Series, 1e-13, 1.650_425_758_797_542_9, |k, _| k.erf_family(ErfKind::Erfi, 1.0)),
        check!("erfc(2)", Series, 1e-13, 0.004_677_734_981_047_265_8, |k, _| k.erf_family(ErfKind::Erfc, 2.0)),
        check!("expint_ei(-1)", Series, 1e-13, -0.219_383_934_395_520_27, |k, _| k.expint_ei(-1.0)),
        check!("log_gaussian_moment(1)", Series, 1e-14, -0.870_057_726_728_315_5, |k, _| k.log_gaussian_moment(1.0)),
        check!("integral of 1 on [0,1]", Quadrature, 1e-15, 1.0, |_, p| {
            Ok(try_integrate_finite(|_| Ok(1.0), 0.0, 1.0, p.quad_tol)?.value)
        }),
        check!("integral of exp(-t^2) on [0,inf)", Quadrature, 1e-12, 0.5 * PI.sqrt(), |_, p| {
            Ok(try_integrate_semi_infinite(|t| Ok((-t * t).exp()), 0.0, p.quad_tol, DecayHint::Gaussian { rate: 1.0 })?.value)
        }),
        check!("integral of -log t on (0,1]", Quadrature, 1e-12, 1.0, |_, p| {
            Ok(try_integrate_log_singular(|t| Ok(-t.ln()), 1.0, p.quad_tol)?.value)
        }),
        check!("integral of Xi(t)/((t^2+1/4)cosh(pi t))", Quadrature, 1e-10, 0.687_404_066_135_269_8, |k, p| {
            let f = |t: f64| Ok(k.xi_upper(t)? / ((t * t + 0.25) * (PI * t).cosh()));
            Ok(try_integrate_semi_infinite(f, 0.0, p.quad_tol, DecayHint::Exponential { rate: PI })?.value)
        }),
        check!("c1 against printed value", Constant, 5e-7, PRINTED_CONSTANTS.c1, |k, _| {
            Ok(try_integrate_log_singular(|t| Ok(k.psibar(0, t)?.sqrt()), 1.0, 1e-9)?.value)
        }),
        check!("c2 against printed value", Constant, 5e-6, PRINTED_CONSTANTS.c2, |k, _| {
            Ok(try_integrate_log_singular(|t| Ok(k.psibar(0, t)?.powi(2)), 1.0, 1e-9)?.value)
        }),
    ]
}

/// Runs every check, in a fixed order.
pub fn run_selftest(kernels: &dyn Kernels, profile: &ToleranceProfile) -> Vec<CheckOutcome> {
    checks()
        .into_iter()
        .map(|c| {
            let (threshold, relative) = match c.category {
                Category::Series => (c.pinned.max(profile.series_tol), true),
                Category::Quadrature => (c.pinned.max(profile.quad_tol), false),
                Category::Constant => (c.pinned.max(profile.constants_tol), false),
            };
            match (c.compute)(kernels, profile) {
                Ok(v) => {
                    let diff = (v - c.expected).abs();
                    let err = if relative && c.expected != 0.0 { diff / c.expected.abs() } else { diff };
                    let kind = if relative { "rel" } else { "abs" };
                    CheckOutcome {
                        name: c.name.to_string(),
                        pass: err <= threshold,
                        detail: format!("{kind} error {err:.2e} (threshold {threshold:.2e})"),
                        non_convergence: false,
                    }
                }
                Err(e) => CheckOutcome {
                    name: c.name.to_string(),
                    pass: false,
                    detail: e.to_string(),
                    non_convergence: e.is_non_convergence(),
                },
            }
        })
        .collect()
}
