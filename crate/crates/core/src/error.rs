use std::fmt::Display;

/// Errors surfaced by kernels, the quadrature engine and the identity evaluators.
///
/// Kernels never return NaN for an argument they cannot handle; they return
/// one of these variants instead.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function}: argument {arg} outside domain ({expected})")]
    Domain {
        function: &'static str,
        arg: String,
        expected: &'static str,
    },

    #[error("{function}: pole at {arg}")]
    Pole { function: &'static str, arg: String },

    #[error("{function}: result overflows for argument {arg}")]
    Overflow { function: &'static str, arg: String },

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("integrand violates {hint} decay hint: {detail}")]
    HintViolation { hint: String, detail: String },

    #[error("integrand returned non-finite value {value} at t = {at}")]
    NonFinite { at: f64, value: f64 },

    #[error("{function}: imaginary residue {residue:e} exceeds {tolerance:e} relative to scale {scale:e}")]
    NotReal {
        function: &'static str,
        residue: f64,
        scale: f64,
        tolerance: f64,
    },
}

impl Error {
    pub(crate) fn domain(function: &'static str, arg: impl Display, expected: &'static str) -> Self {
        Error::Domain {
            function,
            arg: arg.to_string(),
            expected,
        }
    }

    /// True for failures of an iterative or adaptive procedure, as opposed to
    /// a bad argument.
    pub fn is_non_convergence(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::HintViolation { .. } | Error::NonFinite { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
