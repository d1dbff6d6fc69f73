use crate::error::{Error, Result};

/// Tolerances that drive verification verdicts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceProfile {
    /// Absolute tolerance requested from the quadrature engine, per side.
    pub quad_tol: f64,
    /// Largest residual `|lhs − rhs| / (1 + |rhs|)` accepted as PASS.
    pub identity_tol: f64,
    /// Relative tolerance for kernel self-checks against reference values.
    pub series_tol: f64,
    /// Absolute tolerance for recomputed constants against printed ones.
    pub constants_tol: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            quad_tol: 1e-10,
            identity_tol: 1e-7,
            series_tol: 1e-14,
            constants_tol: 1e-5,
        }
    }
}

impl ToleranceProfile {
    /// Checks positivity and `identity_tol >= quad_tol`.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("quad_tol", self.quad_tol),
            ("identity_tol", self.identity_tol),
            ("series_tol", self.series_tol),
            ("constants_tol", self.constants_tol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain {
                    function: "ToleranceProfile",
                    arg: format!("{name} = {v}"),
                    expected: "finite and > 0",
                });
            }
        }
        if self.identity_tol < self.quad_tol {
            return Err(Error::Domain {
                function: "ToleranceProfile",
                arg: format!("identity_tol = {} < quad_tol = {}", self.identity_tol, self.quad_tol),
                expected: "identity_tol >= quad_tol",
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        ToleranceProfile::default().validate().unwrap();
    }

    #[test]
    fn rejects_inverted_tolerances() {
        let p = ToleranceProfile {
            quad_tol: 1e-6,
            identity_tol: 1e-8,
            ..Default::default()
        };
        assert!(p.validate().is_err());
        let p = ToleranceProfile {
            series_tol: -1.0,
            ..Default::default()
        };
        assert!(p.validate().is_err());
    }
}
