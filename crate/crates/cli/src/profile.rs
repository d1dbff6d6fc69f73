//! Tolerance profile loading: defaults, then an optional `key = value` file,
//! then command-line overrides.

use std::path::Path;
use xilab::ToleranceProfile;

/// Environment variable naming a profile file.
pub const PROFILE_ENV: &str = "XILAB_PROFILE";

#[derive(Debug, thiserror::Error)]
pub enum ProfileError {
    #[error("cannot read profile {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("profile line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid profile: {0}")]
    Invalid(#[from] xilab::Error),
}

/// Applies `key = value` lines to `base`. Blank lines and `#` comments are
/// ignored; unknown keys are errors.
pub fn parse_profile(text: &str, base: ToleranceProfile) -> Result<ToleranceProfile, ProfileError> {
    let mut p = base;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| ProfileError::Syntax { line: i + 1, message };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| syntax(format!("expected key = value, got {line:?}")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| syntax(format!("{:?} is not a number", value.trim())))?;
        let slot = match key.trim() {
            "quad_tol" => &mut p.quad_tol,
            "identity_tol" => &mut p.identity_tol,
            "series_tol" => &mut p.series_tol,
            "constants_tol" => &mut p.constants_tol,
            other => return Err(syntax(format!("unknown key {other:?}"))),
        };
        *slot = value;
    }
    Ok(p)
}

pub fn load_profile_file(path: &Path, base: ToleranceProfile) -> Result<ToleranceProfile, ProfileError> {
    let text = std::fs::read_to_string(path).map_err(|source| ProfileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_profile(&text, base)
}

/// Command-line tolerance overrides.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub quad_tol: Option<f64>,
    pub identity_tol: Option<f64>,
}

/// Defaults, then the file named by `env_value` (if any), then `overrides`.
pub fn resolve_profile(env_value: Option<&str>, overrides: Overrides) -> Result<ToleranceProfile, ProfileError> {
    let mut p = ToleranceProfile::default();
    if let Some(path) = env_value.filter(|s| !s.is_empty()) {
        p = load_profile_file(Path::new(path), p)?;
    }
    if let Some(q) = overrides.quad_tol {
        p.quad_tol = q;
    }
    if let Some(i) = overrides.identity_tol {
        p.identity_tol = i;
    }
    p.validate()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let p = parse_profile("# loose\nquad_tol = 1e-6\n\nidentity_tol=1e-5 # trailing\n", Default::default()).unwrap();
        assert_eq!(p.quad_tol, 1e-6);
        assert_eq!(p.identity_tol, 1e-5);
        assert_eq!(p.series_tol, ToleranceProfile::default().series_tol);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_profile("quad_tol", Default::default()), Err(ProfileError::Syntax { line: 1, .. })));
        assert!(parse_profile("quad_tol = fast", Default::default()).is_err());
        assert!(parse_profile("speed = 1", Default::default()).is_err());
    }

    #[test]
    fn overrides_win_and_are_validated() {
        let p = resolve_profile(None, Overrides { quad_tol: Some(1e-8), identity_tol: None }).unwrap();
        assert_eq!(p.quad_tol, 1e-8);
        let bad = resolve_profile(None, Overrides { quad_tol: Some(1e-3), identity_tol: Some(1e-6) });
        assert!(matches!(bad, Err(ProfileError::Invalid(_))));
    }
}
