//! Scalar special functions.
//!
//! Every public kernel is a total function over its documented domain and
//! returns [`Error`](crate::Error) outside it. The accuracy each kernel is
//! held to is listed in [`contracts`].

mod bessel;
mod erf;
mod gamma;
mod theta;
mod zeta;

pub use bessel::{bessel_k0, k0_lattice_sum, k0_lattice_sum_direct, k0_lattice_sum_lattice, LATTICE_SEAM};
pub use erf::{erf_family, expint_ei, log_gaussian_moment, ErfKind, ERFI_ARGUMENT_LIMIT};
pub use gamma::{digamma, gamma_ratio_poch, log_gamma, polygamma, psibar, MAX_POLYGAMMA_ORDER};
pub use theta::{theta_bracket, theta_rest};
pub use zeta::{xi_upper, zeta, MAX_CRITICAL_HEIGHT};

/// Complex argument or value. Components must be finite.
pub type ComplexValue = num_complex::Complex64;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Bernoulli numbers `B_2, B_4, ..., B_28`.
pub(crate) const BERNOULLI_EVEN: [f64; 14] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
];

/// Accuracy promise attached to one public kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracyContract {
    pub function: &'static str,
    pub domain: &'static str,
    pub target_rel_err: f64,
    pub method_note: &'static str,
}

const CONTRACTS: &[AccuracyContract] = &[
    AccuracyContract {
        function: "log_gamma",
        domain: "Re z > 0",
        target_rel_err: 1e-12,
        method_note: "upward recurrence to Re z >= 15, Stirling series with 10 Bernoulli terms",
    },
    AccuracyContract {
        function: "digamma",
        domain: "x >= 1e-6",
        target_rel_err: 1e-13,
        method_note: "upward recurrence to x >= 12, asymptotic series (away from the root near 1.4616)",
    },
    AccuracyContract {
        function: "polygamma",
        domain: "1 <= m <= 8, x > 0",
        target_rel_err: 1e-13,
        method_note: "upward recurrence to x >= 20, asymptotic series with Bernoulli coefficients",
    },
    AccuracyContract {
        function: "psibar",
        domain: "0 <= m <= 8, t > 0",
        target_rel_err: 1e-12,
        method_note: "direct difference for small t, differentiated asymptotic tail beyond 10 + 3m",
    },
    AccuracyContract {
        function: "zeta",
        domain: "0.4 <= Re s <= 3, |Im s| <= 200, s != 1",
        target_rel_err: 1e-12,
        method_note: "Euler-Maclaurin, N = max(20, |Im s| + 10), 12 Bernoulli corrections",
    },
    AccuracyContract {
        function: "xi_upper",
        domain: "|t| <= 200",
        target_rel_err: 1e-12,
        method_note: "completed zeta on the critical line; imaginary residue asserted",
    },
    AccuracyContract {
        function: "gamma_ratio_poch",
        domain: "0 <= m <= 8",
        target_rel_err: 1e-15,
        method_note: "rising product, no gamma evaluation",
    },
    AccuracyContract {
        function: "bessel_k0",
        domain: "x > 0",
        target_rel_err: 1e-13,
        method_note: "ascending series for x <= 2, Steed continued fraction to 25, asymptotic beyond",
    },
    AccuracyContract {
        function: "k0_lattice_sum",
        domain: "a > 0 (contract checked on 1e-4 <= a <= 50)",
        target_rel_err: 1e-12,
        method_note: "direct K0 sum for a >= 1, reciprocal-lattice sum with analytic tail below",
    },
    AccuracyContract {
        function: "theta_rest",
        domain: "y > 0",
        target_rel_err: 1e-13,
        method_note: "direct sum for y >= 1, modular transform below",
    },
    AccuracyContract {
        function: "erf_family",
        domain: "erf, erfc all real x; erfi |x| <= 12",
        target_rel_err: 1e-13,
        method_note: "erf/erfc from libm; erfi by compensated Maclaurin sum",
    },
    AccuracyContract {
        function: "expint_ei",
        domain: "x < 0",
        target_rel_err: 1e-13,
        method_note: "power series for |x| <= 1, Lentz continued fraction for E1 beyond",
    },
    AccuracyContract {
        function: "log_gaussian_moment",
        domain: "a > 0",
        target_rel_err: 1e-14,
        method_note: "closed form -(1/4) sqrt(pi/a) (gamma + log 4a)",
    },
];

/// One contract per public kernel.
pub fn contracts() -> &'static [AccuracyContract] {
    CONTRACTS
}

/// Looks up the contract for a kernel by function name.
pub fn contract(function: &str) -> Option<&'static AccuracyContract> {
    CONTRACTS.iter().find(|c| c.function == function)
}
