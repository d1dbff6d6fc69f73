use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use xilab::bounds::HARDY_DOMAIN;
use xilab::identities::VariantChoice;
use xilab_cli::profile::{resolve_profile, Overrides, PROFILE_ENV};
use xilab_cli::report::{to_json, write_csv_dir, write_csv_stream, Format, Summary};
use xilab_cli::run::{run, Command, Grid, EXIT_USAGE};
use xilab_cli::select::{parse_beta, select_cases, CaseArgs};
use xilab_cli::selftest::Library;

/// Numerical verification of Ξ-function cosine-transform identities and of
/// the two-sided bounds for the Hardy integral.
#[derive(Parser)]
#[command(name = "xilab", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    /// Output file (JSON) or directory (CSV, one file per table). Default: stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads. The report is identical for every value.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..=256), global = true)]
    jobs: u16,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true)]
    quad_tol: Option<f64>,
    /// Residual threshold for identity cases.
    #[arg(long, global = true)]
    identity_tol: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Corrected,
    Both,
}

#[derive(Subcommand)]
enum Sub {
    /// Kernel oracles and the quadrature battery.
    Selftest,
    /// Verify one identity (or `all`) over its default grid.
    Verify {
        /// hardy11, koshliakov12, genpsi, kosh2, cosine13, ximoment or all
        case: String,
        /// Shift parameter; replaces the x axis of the grid.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<f64>,
        /// Derivative order (0 to 3).
        #[arg(long)]
        m: Option<u32>,
        /// Complex parameter as `re,im`.
        #[arg(long, value_parser = parse_beta, allow_hyphen_values = true)]
        beta: Option<num_complex::Complex64>,
        /// Moment index.
        #[arg(long)]
        n: Option<u32>,
        /// Which forms to run where a corrected form exists.
        #[arg(long, value_enum, default_value_t = VariantArg::Both)]
        variant: VariantArg,
    },
    /// Scan the two-sided bounds over a logarithmic grid.
    Bounds {
        /// `min:max:points`
        #[arg(long, value_parser = parse_grid, default_value = "0.01:100:25")]
        grid: Grid,
    },
    /// Self-test, every identity and the default bounds scan.
    Report,
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [min, max, points] = parts.as_slice() else {
        return Err(format!("expected min:max:points, got `{s}`"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    let grid = Grid {
        min: num(min)?,
        max: num(max)?,
        points: points.parse().map_err(|e| format!("`{points}`: {e}"))?,
    };
    if !(grid.min < grid.max) || grid.points < 2 {
        return Err("need min < max and at least 2 points".into());
    }
    if !(grid.min >= HARDY_DOMAIN.0 && grid.max <= HARDY_DOMAIN.1) {
        return Err(format!("grid must lie in [{:e}, {:e}]", HARDY_DOMAIN.0, HARDY_DOMAIN.1));
    }
    Ok(grid)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let env = std::env::var(PROFILE_ENV).ok();
    let overrides = Overrides {
        quad_tol: g.quad_tol,
        identity_tol: g.identity_tol,
    };
    let profile = match resolve_profile(env.as_deref(), overrides) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let command = match cli.command {
        Sub::Selftest => Command::Selftest,
        Sub::Report => Command::Report,
        Sub::Bounds { grid } => Command::Bounds(grid),
        Sub::Verify {
            case,
            x,
            m,
            beta,
            n,
            variant,
        } => {
            let variant = match variant {
                VariantArg::Printed => VariantChoice::Printed,
                VariantArg::Corrected => VariantChoice::Corrected,
                VariantArg::Both => VariantChoice::Both,
            };
            let args = CaseArgs { x, m, beta, n, variant };
            match select_cases(&case, &args) {
                Ok(specs) => Command::Verify(specs),
                Err(e) => return usage(e),
            }
        }
    };
    let format = match g.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };

    let report = run(&command, &profile, usize::from(g.jobs), &Library);

    let written = match (format, &g.out) {
        (Format::Json, None) => std::io::stdout().lock().write_all(to_json(&report).as_bytes()),
        (Format::Json, Some(path)) => std::fs::write(path, to_json(&report)),
        (Format::Csv, None) => write_csv_stream(&report, std::io::stdout().lock()),
        (Format::Csv, Some(dir)) => write_csv_dir(&report, dir),
    };
    if let Err(e) = written {
        return usage(format!("cannot write report: {e}"));
    }
    eprintln!("{}", Summary(&report));
    ExitCode::from(report.exit_code as u8)
}
