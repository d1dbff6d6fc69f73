//! JSON and CSV rendering of a [`RunReport`].
//!
//! Numbers carry 17 significant digits, residuals 3. Non-finite numbers
//! become `null` in JSON and an empty field in CSV.

use crate::ledger::MisprintEntry;
use crate::run::{BoundsSection, RunReport};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use xilab::bounds::PRINTED_CONSTANTS;
use xilab::identities::{IdentityCase, SideValue};
use xilab::quadrature::QuadResult;

pub const SCHEMA_VERSION: &str = "1.0.0";
pub const SCHEMA_JSON: &str = include_str!("../schema/report.schema.json");
pub const SELFTEST_HEADER: &str = include_str!("../schema/selftest.csv.header");
pub const CASES_HEADER: &str = include_str!("../schema/cases.csv.header");
pub const CONSTANTS_HEADER: &str = include_str!("../schema/constants.csv.header");
pub const BOUNDS_HEADER: &str = include_str!("../schema/bounds.csv.header");
pub const MISPRINTS_HEADER: &str = include_str!("../schema/misprints.csv.header");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

fn sig17(v: f64) -> Option<String> {
    v.is_finite().then(|| format!("{v:.16e}"))
}

fn sig3(v: f64) -> Option<String> {
    v.is_finite().then(|| format!("{v:.2e}"))
}

/// A number written with 17 significant digits.
#[derive(Debug, Clone, Copy)]
struct Num(f64);

/// A residual written with 3 significant digits.
#[derive(Debug, Clone, Copy)]
struct Res(f64);

fn raw<S: Serializer>(text: Option<String>, s: S) -> Result<S::Ok, S::Error> {
    match text {
        Some(t) => RawValue::from_string(t).map_err(serde::ser::Error::custom)?.serialize(s),
        None => s.serialize_none(),
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        raw(sig17(self.0), s)
    }
}

impl Serialize for Res {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        raw(sig3(self.0), s)
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: &'static str,
    tool: &'static str,
    tool_version: &'static str,
    command: &'static str,
    profile: JsonProfile,
    selftest: Vec<JsonCheck<'a>>,
    cases: Vec<JsonCase<'a>>,
    bounds: Option<JsonBounds>,
    misprints: Vec<JsonMisprint<'a>>,
    overall: JsonOverall<'a>,
}

#[derive(Serialize)]
struct JsonProfile {
    quad_tol: Num,
    identity_tol: Num,
    series_tol: Num,
    constants_tol: Num,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    status: &'static str,
    detail: &'a str,
}

#[derive(Serialize)]
struct JsonComplex {
    re: Num,
    im: Num,
}

#[derive(Serialize)]
struct JsonParams {
    x: Option<Num>,
    m: Option<u32>,
    beta: Option<JsonComplex>,
    n: Option<u32>,
}

#[derive(Serialize)]
struct JsonSide {
    re: Num,
    im: Option<Num>,
    abs_err_estimate: Num,
    evaluations: usize,
    converged: bool,
}

#[derive(Serialize)]
struct JsonCase<'a> {
    case: &'static str,
    form: &'static str,
    derivation: &'static str,
    params: JsonParams,
    lhs: Option<JsonSide>,
    rhs: Option<JsonSide>,
    residual: Option<Res>,
    verdict: &'static str,
    informational: bool,
    note: Option<&'a str>,
    error: Option<String>,
}

#[derive(Serialize)]
struct JsonGrid {
    min: Num,
    max: Num,
    points: usize,
}

#[derive(Serialize)]
struct JsonConstant {
    name: &'static str,
    printed: Num,
    recomputed: Num,
    delta: Num,
    abs_err_estimate: Num,
}

#[derive(Serialize)]
struct JsonRow {
    y: Num,
    lower_printed: Num,
    lower_derived: Num,
    #[serde(rename = "I")]
    i: Num,
    i_abs_err_estimate: Num,
    i_converged: bool,
    upper_derived: Num,
    upper_printed: Num,
    sandwich_ok_derived: bool,
    sandwich_ok_printed: bool,
    flags: Vec<&'static str>,
}

#[derive(Serialize)]
struct JsonRowError {
    y: Num,
    error: String,
}

#[derive(Serialize)]
struct JsonClaims {
    positive: bool,
    monotone: bool,
    decay_ratio: Num,
    decay_target: Num,
    decay_ok: bool,
}

#[derive(Serialize)]
struct JsonBounds {
    grid: JsonGrid,
    constants: Vec<JsonConstant>,
    constants_error: Option<String>,
    rows: Vec<JsonRow>,
    failures: Vec<JsonRowError>,
    claims: Option<JsonClaims>,
}

#[derive(Serialize)]
struct JsonEvidence<'a> {
    label: &'a str,
    printed: Option<Num>,
    derived: Option<Num>,
    reference: Num,
    relation: &'static str,
}

#[derive(Serialize)]
struct JsonMisprint<'a> {
    id: &'static str,
    printed: &'static str,
    derived: &'static str,
    reference: &'static str,
    evidence: Vec<JsonEvidence<'a>>,
    printed_holds: bool,
    derived_holds: bool,
    error: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonOverall<'a> {
    status: &'static str,
    exit_code: i32,
    failures: &'a [String],
}

fn side(s: &SideValue) -> JsonSide {
    JsonSide {
        re: Num(s.re.value),
        im: s.im.map(|q| Num(q.value)),
        abs_err_estimate: Num(s.abs_err_estimate()),
        evaluations: s.re.evaluations + s.im.map_or(0, |q| q.evaluations),
        converged: s.converged(),
    }
}

fn case(c: &IdentityCase) -> JsonCase<'_> {
    let p = c.spec.params;
    JsonCase {
        case: c.spec.name.as_str(),
        form: c.variant.form.as_str(),
        derivation: c.variant.note,
        params: JsonParams {
            x: p.x.map(Num),
            m: p.m,
            beta: p.beta.map(|b| JsonComplex { re: Num(b.re), im: Num(b.im) }),
            n: p.n,
        },
        lhs: c.lhs.as_ref().map(side),
        rhs: c.rhs.as_ref().map(side),
        residual: c.residual.map(Res),
        verdict: c.verdict.as_str(),
        informational: c.informational,
        note: c.note.as_deref(),
        error: c.error.as_ref().map(|e| e.to_string()),
    }
}

fn constants(b: &BoundsSection) -> Vec<(&'static str, f64, QuadResult)> {
    match &b.constants {
        Ok(c) => vec![("c1", PRINTED_CONSTANTS.c1, c.c1), ("c2", PRINTED_CONSTANTS.c2, c.c2)],
        Err(_) => Vec::new(),
    }
}

fn bounds(b: &BoundsSection) -> JsonBounds {
    JsonBounds {
        grid: JsonGrid {
            min: Num(b.grid.min),
            max: Num(b.grid.max),
            points: b.grid.points,
        },
        constants: constants(b)
            .into_iter()
            .map(|(name, printed, q)| JsonConstant {
                name,
                printed: Num(printed),
                recomputed: Num(q.value),
                delta: Num(q.value - printed),
                abs_err_estimate: Num(q.abs_err_estimate),
            })
            .collect(),
        constants_error: b.constants.as_ref().err().map(|e| e.to_string()),
        rows: b
            .rows
            .iter()
            .map(|r| JsonRow {
                y: Num(r.y),
                lower_printed: Num(r.lower_printed),
                lower_derived: Num(r.lower_derived),
                i: Num(r.i_value.value),
                i_abs_err_estimate: Num(r.i_value.abs_err_estimate),
                i_converged: r.i_value.converged,
                upper_derived: Num(r.upper_derived),
                upper_printed: Num(r.upper_printed),
                sandwich_ok_derived: r.sandwich_ok_derived,
                sandwich_ok_printed: r.sandwich_ok_printed,
                flags: r.flags.clone(),
            })
            .collect(),
        failures: b
            .failures
            .iter()
            .map(|f| JsonRowError {
                y: Num(f.y),
                error: f.error.to_string(),
            })
            .collect(),
        claims: b.claims.map(|c| JsonClaims {
            positive: c.positive,
            monotone: c.monotone,
            decay_ratio: Num(c.decay_ratio),
            decay_target: Num(c.decay_target),
            decay_ok: c.decay_ok(),
        }),
    }
}

fn misprint(m: &MisprintEntry) -> JsonMisprint<'_> {
    JsonMisprint {
        id: m.id,
        printed: m.printed,
        derived: m.derived,
        reference: m.reference,
        evidence: m
            .evidence
            .iter()
            .map(|e| JsonEvidence {
                label: &e.label,
                printed: e.printed.map(Num),
                derived: e.derived.map(Num),
                reference: Num(e.reference),
                relation: e.relation.as_str(),
            })
            .collect(),
        printed_holds: m.printed_holds,
        derived_holds: m.derived_holds,
        error: m.error.as_deref(),
    }
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The report as pretty-printed JSON with a trailing newline.
pub fn to_json(r: &RunReport) -> String {
    let p = r.profile;
    let doc = JsonReport {
        schema_version: SCHEMA_VERSION,
        tool: "xilab",
        tool_version: env!("CARGO_PKG_VERSION"),
        command: r.command,
        profile: JsonProfile {
            quad_tol: Num(p.quad_tol),
            identity_tol: Num(p.identity_tol),
            series_tol: Num(p.series_tol),
            constants_tol: Num(p.constants_tol),
        },
        selftest: r
            .selftest
            .iter()
            .map(|s| JsonCheck {
                name: &s.name,
                status: status(s.pass),
                detail: &s.detail,
            })
            .collect(),
        cases: r.cases.iter().map(case).collect(),
        bounds: r.bounds.as_ref().map(bounds),
        misprints: r.misprints.iter().map(misprint).collect(),
        overall: JsonOverall {
            status: status(r.passed()),
            exit_code: r.exit_code,
            failures: &r.failures,
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

/// One CSV table: its file stem, header and records.
pub struct Table {
    pub name: &'static str,
    pub header: Vec<&'static str>,
    pub records: Vec<Vec<String>>,
}

fn header(text: &'static str) -> Vec<&'static str> {
    text.trim().split(',').collect()
}

fn cell(v: f64) -> String {
    sig17(v).unwrap_or_default()
}

fn opt_cell(v: Option<f64>) -> String {
    v.map(cell).unwrap_or_default()
}

/// The CSV tables present in this report, in a fixed order.
pub fn tables(r: &RunReport) -> Vec<Table> {
    let mut out = Vec::new();
    if !r.selftest.is_empty() {
        out.push(Table {
            name: "selftest",
            header: header(SELFTEST_HEADER),
            records: r
                .selftest
                .iter()
                .map(|s| vec![s.name.clone(), status(s.pass).to_string(), s.detail.clone()])
                .collect(),
        });
    }
    if !r.cases.is_empty() {
        out.push(Table {
            name: "cases",
            header: header(CASES_HEADER),
            records: r.cases.iter().map(case_record).collect(),
        });
    }
    if let Some(b) = &r.bounds {
        out.push(Table {
            name: "constants",
            header: header(CONSTANTS_HEADER),
            records: constants(b)
                .into_iter()
                .map(|(name, printed, q)| {
                    vec![
                        name.to_string(),
                        cell(printed),
                        cell(q.value),
                        cell(q.value - printed),
                        cell(q.abs_err_estimate),
                    ]
                })
                .collect(),
        });
        out.push(Table {
            name: "bounds",
            header: header(BOUNDS_HEADER),
            records: b
                .rows
                .iter()
                .map(|row| {
                    let mut flags: Vec<&str> = row.flags.clone();
                    if !row.i_value.converged {
                        flags.push("not-converged");
                    }
                    if !row.sandwich_ok_derived {
                        flags.push("derived-sandwich-violated");
                    }
                    if !row.sandwich_ok_printed {
                        flags.push("printed-sandwich-violated");
                    }
                    vec![
                        cell(row.y),
                        cell(row.lower_printed),
                        cell(row.lower_derived),
                        cell(row.i_value.value),
                        cell(row.upper_derived),
                        cell(row.upper_printed),
                        flags.join(";"),
                    ]
                })
                .collect(),
        });
    }
    out.push(Table {
        name: "misprints",
        header: header(MISPRINTS_HEADER),
        records: r
            .misprints
            .iter()
            .flat_map(|m| {
                m.evidence.iter().map(move |e| {
                    vec![
                        m.id.to_string(),
                        e.label.clone(),
                        opt_cell(e.printed),
                        opt_cell(e.derived),
                        cell(e.reference),
                        e.relation.as_str().to_string(),
                    ]
                })
            })
            .collect(),
    });
    out
}

fn case_record(c: &IdentityCase) -> Vec<String> {
    let p = c.spec.params;
    let (lhs_re, lhs_im) = side_cells(c.lhs.as_ref());
    let (rhs_re, rhs_im) = side_cells(c.rhs.as_ref());
    vec![
        c.spec.name.as_str().to_string(),
        c.variant.form.as_str().to_string(),
        opt_cell(p.x),
        p.m.map(|m| m.to_string()).unwrap_or_default(),
        opt_cell(p.beta.map(|b| b.re)),
        opt_cell(p.beta.map(|b| b.im)),
        p.n.map(|n| n.to_string()).unwrap_or_default(),
        lhs_re,
        lhs_im,
        rhs_re,
        rhs_im,
        c.residual.and_then(sig3).unwrap_or_default(),
        c.verdict.as_str().to_string(),
        c.informational.to_string(),
        c.error.as_ref().map(|e| e.to_string()).unwrap_or_default(),
    ]
}

fn side_cells(s: Option<&SideValue>) -> (String, String) {
    match s {
        Some(s) => (cell(s.re.value), opt_cell(s.im.map(|q| q.value))),
        None => (String::new(), String::new()),
    }
}

fn write_table<W: Write>(t: &Table, w: W) -> io::Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(&t.header)?;
    for r in &t.records {
        csv.write_record(r)?;
    }
    csv.flush()
}

/// All tables on one stream, each preceded by `# name` and separated by a
/// blank line.
pub fn write_csv_stream<W: Write>(r: &RunReport, mut w: W) -> io::Result<()> {
    for (i, t) in tables(r).iter().enumerate() {
        if i > 0 {
            writeln!(w)?;
        }
        writeln!(w, "# {}", t.name)?;
        write_table(t, &mut w)?;
    }
    Ok(())
}

/// One `<name>.csv` per table inside `dir`, which is created if missing.
pub fn write_csv_dir(r: &RunReport, dir: &Path) -> io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for t in tables(r) {
        let file = std::fs::File::create(dir.join(format!("{}.csv", t.name)))?;
        write_table(&t, io::BufWriter::new(file))?;
    }
    Ok(())
}

/// One-line summary for stderr.
pub struct Summary<'a>(pub &'a RunReport);

impl fmt::Display for Summary<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        let passed = r.selftest.iter().filter(|s| s.pass).count();
        let gated = r.cases.iter().filter(|c| !c.informational).count();
        let failing = r.cases.iter().filter(|c| c.is_failure()).count();
        write!(f, "xilab {}: {}", r.command, status(r.passed()))?;
        if !r.selftest.is_empty() {
            write!(f, "; selftest {passed}/{}", r.selftest.len())?;
        }
        if !r.cases.is_empty() {
            write!(f, "; cases {}/{gated} pass ({} informational)", gated - failing, r.cases.len() - gated)?;
        }
        if let Some(b) = &r.bounds {
            let ok = b.rows.iter().filter(|row| row.sandwich_ok_derived).count();
            write!(f, "; bounds {ok}/{} sandwiched", b.grid.points)?;
        }
        write!(f, "; exit {}", r.exit_code)
    }
}
