//! Turning `verify` arguments into a list of cases.

use num_complex::Complex64;
use xilab::identities::{default_cases, CaseName, CaseSpec, VariantChoice};

/// Largest `m` accepted on the command line (the kernels go further).
pub const CLI_MAX_M: u32 = 3;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CaseArgs {
    pub x: Option<f64>,
    pub m: Option<u32>,
    pub beta: Option<Complex64>,
    pub n: Option<u32>,
    pub variant: VariantChoice,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SelectError {
    #[error("unknown case `{0}` (expected hardy11, koshliakov12, genpsi, kosh2, cosine13, ximoment or all)")]
    UnknownCase(String),
    #[error("--{flag} does not apply to {case}")]
    Irrelevant { flag: &'static str, case: String },
    #[error("--m must be at most {CLI_MAX_M}")]
    OrderTooLarge,
}

/// Parses `re,im` (or a bare real part).
pub fn parse_beta(s: &str) -> Result<Complex64, String> {
    let mut parts = s.split(',');
    let re = parts.next().unwrap_or("");
    let im = parts.next();
    if parts.next().is_some() {
        return Err(format!("expected re,im, got `{s}`"));
    }
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    let z = Complex64::new(num(re)?, im.map(num).transpose()?.unwrap_or(0.0));
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite beta `{s}`"))
    }
}

fn uses(name: CaseName) -> [bool; 4] {
    // x, m, beta, n
    match name {
        CaseName::Hardy11 | CaseName::Koshliakov12 | CaseName::Kosh2 => [true, false, false, false],
        CaseName::Genpsi => [true, true, false, false],
        CaseName::Cosine13 => [false, false, true, false],
        CaseName::Ximoment => [false, false, false, true],
    }
}

/// The cases for `selector`. A given parameter replaces that axis of the
/// default grid; a parameter the case does not take is an error.
pub fn select_cases(selector: &str, args: &CaseArgs) -> Result<Vec<CaseSpec>, SelectError> {
    if args.m.is_some_and(|m| m > CLI_MAX_M) {
        return Err(SelectError::OrderTooLarge);
    }
    let names: Vec<CaseName> = if selector == "all" {
        CaseName::ALL.to_vec()
    } else {
        vec![CaseName::parse(selector).ok_or_else(|| SelectError::UnknownCase(selector.to_string()))?]
    };
    let given = [args.x.is_some(), args.m.is_some(), args.beta.is_some(), args.n.is_some()];
    const FLAGS: [&str; 4] = ["x", "m", "beta", "n"];
    for (i, flag) in FLAGS.iter().enumerate() {
        if given[i] && !names.iter().any(|&n| uses(n)[i]) {
            return Err(SelectError::Irrelevant {
                flag,
                case: selector.to_string(),
            });
        }
    }
    let mut out = Vec::new();
    for name in names {
        let applies = uses(name);
        let mut specs = default_cases(name, args.variant);
        if applies[0] {
            if let Some(x) = args.x {
                specs.iter_mut().for_each(|s| s.params.x = Some(x));
            }
        }
        if applies[1] {
            if let Some(m) = args.m {
                specs.iter_mut().for_each(|s| s.params.m = Some(m));
            }
        }
        if applies[2] {
            if let Some(b) = args.beta {
                specs.iter_mut().for_each(|s| s.params.beta = Some(b));
            }
        }
        if applies[3] {
            if let Some(n) = args.n {
                specs.iter_mut().for_each(|s| s.params.n = Some(n));
            }
        }
        // collapsing an axis leaves duplicates; keep the first of each
        let mut unique: Vec<CaseSpec> = Vec::new();
        for s in specs {
            if !unique.contains(&s) {
                unique.push(s);
            }
        }
        out.extend(unique);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_genpsi_case() {
        let args = CaseArgs {
            m: Some(2),
            x: Some(0.5),
            ..Default::default()
        };
        let cases = select_cases("genpsi", &args).unwrap();
        assert_eq!(cases, vec![CaseSpec::genpsi(2, 0.5)]);
    }

    #[test]
    fn axis_replacement_keeps_other_axis() {
        let args = CaseArgs {
            m: Some(1),
            ..Default::default()
        };
        assert_eq!(select_cases("genpsi", &args).unwrap().len(), 3);
        let args = CaseArgs {
            x: Some(0.5),
            variant: VariantChoice::Both,
            ..Default::default()
        };
        assert_eq!(select_cases("kosh2", &args).unwrap().len(), 2);
    }

    #[test]
    fn rejects_bad_selectors_and_flags() {
        assert!(matches!(select_cases("hardy", &CaseArgs::default()), Err(SelectError::UnknownCase(_))));
        let args = CaseArgs {
            m: Some(1),
            ..Default::default()
        };
        assert!(matches!(select_cases("hardy11", &args), Err(SelectError::Irrelevant { .. })));
        let args = CaseArgs {
            m: Some(4),
            ..Default::default()
        };
        assert_eq!(select_cases("genpsi", &args), Err(SelectError::OrderTooLarge));
    }

    #[test]
    fn beta_parsing() {
        assert_eq!(parse_beta("0.3,0.2").unwrap(), Complex64::new(0.3, 0.2));
        assert_eq!(parse_beta("0.25").unwrap(), Complex64::new(0.25, 0.0));
        assert!(parse_beta("1,2,3").is_err());
        assert!(parse_beta("a,b").is_err());
        assert!(parse_beta("inf,0").is_err());
    }
}
