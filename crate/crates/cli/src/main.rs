//! `heckebench`: scriptable verification runs over the affine Hecke algebra,
//! Steinberg cell counts and dg formality.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (the output then carries a witness), 2 on usage or input errors.

mod expr;
mod table;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use heckebench::combinat::SemisimplePoint;
use heckebench::dg::{formality_zigzag, verify_zigzag, DgAlgebraDoc, ZigzagCertificate};
use heckebench::hecke::{truncated_algebra, verify_defining_relations, verify_relations_with, HeckeAlgebra};
use heckebench::steinberg::{
    dlc_report, fixed_point_datum, nilpotent_datum, steinberg_report, DlcReport, FrobeniusScale, SteinbergReport,
    WeightReport,
};
use heckebench::{parse_rational, schema, Error, Rational, ZigzagQ};

use table::Table;

#[derive(Parser)]
#[command(
    name = "heckebench",
    version,
    about = "Exact checks for affine Hecke algebras, Steinberg varieties and dg formality"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce every defining relation over a box of weights and report residuals.
    HeckeVerify {
        #[arg(long)]
        n: usize,
        /// Weights range over [-bound, bound]^n.
        #[arg(long, default_value_t = 1)]
        bound: i32,
        /// Use a deliberately wrong commutation rule.
        #[arg(long)]
        corrupt: bool,
    },
    /// Multiply two expressions, e.g. `--a "theta:1,0" --b "s:1"`.
    HeckeMul {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Structure constants of the truncation at the central character of (s, q0).
    Truncate {
        /// Comma-separated torus coordinates.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Cells, Poincaré polynomials and Ext dimensions of a Steinberg variety.
    ///
    /// `--n` selects the nilpotent cone; `--s --q` a fixed-point datum.
    /// Frobenius weights are checked when `--sqrt-q` is given.
    Steinberg {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        sqrt_q: Option<String>,
    },
    /// Compare the geometric Ext total with the truncated algebra dimension.
    Dlc {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        sqrt_q: Option<String>,
    },
    /// Build and certify a formality zigzag for a dg-algebra document.
    DgFormality {
        /// Path to the document, or `-` for stdin.
        #[arg(long)]
        input: String,
        /// Overrides `r` from the document.
        #[arg(long)]
        r: Option<String>,
    },
    /// Print a JSON schema.
    Schemas {
        /// One of dg-algebra, springer, truncated-algebra, zigzag.
        #[arg(long = "type")]
        kind: String,
    },
}

/// What a command produced.
struct Outcome {
    json: Value,
    text: String,
    passed: bool,
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(m) => Failure::Usage(m),
            other => Failure::Math(other.to_string()),
        }
    }
}

type Run = Result<Outcome, Failure>;

fn rationals(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',').map(|t| parse_rational(t).map_err(Failure::from)).collect()
}

fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(Failure::from)
}

fn point(s: &str, q: &str, sqrt_q: Option<&str>) -> Result<SemisimplePoint, Failure> {
    let sqrt_q = sqrt_q.map(rational).transpose()?;
    Ok(SemisimplePoint::new(rationals(s)?, rational(q)?, sqrt_q)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn hecke_verify(n: usize, bound: i32, corrupt: bool) -> Run {
    if bound < 0 {
        return Err(Failure::Usage("--bound must be nonnegative".into()));
    }
    let report = if corrupt {
        verify_relations_with(&HeckeAlgebra::corrupted(n)?, bound)?
    } else {
        verify_defining_relations(n, bound)?
    };
    let mut t = Table::new(&["relation", "checked", "nonzero"]);
    for r in &report.relations {
        t.row(vec![r.relation.to_string(), r.checked.to_string(), r.nonzero.to_string()]);
    }
    let mut text =
        format!("n = {}, bound = {}{}\n", report.n, report.bound, if corrupt { " (corrupted rule)" } else { "" });
    text += &t.render();
    for r in &report.relations {
        for f in &r.failures {
            text += &format!("residual {}: {} = {}\n", r.relation, f.instance, f.residual);
        }
    }
    text += &format!("all residuals zero: {}\n", report.all_zero);
    Ok(Outcome { json: to_json(&report), text, passed: report.all_zero })
}

fn hecke_mul(n: usize, a: &str, b: &str) -> Run {
    let h = HeckeAlgebra::new(n)?;
    let x = expr::parse(&h, a)?;
    let y = expr::parse(&h, b)?;
    let p = h.multiply(&x, &y)?;
    let json = json!({
        "n": n,
        "a": x.to_string(),
        "b": y.to_string(),
        "product": p.to_string(),
        "terms": to_json(&p.to_doc()),
    });
    let text = format!("a  = {x}\nb  = {y}\nab = {p}\n");
    Ok(Outcome { json, text, passed: true })
}

fn truncate(s: &str, q: &str) -> Run {
    let p = point(s, q, None)?;
    let alg = truncated_algebra(&p)?;
    let unit = alg.check_unit();
    let assoc = alg.check_associativity_all();
    let doc = alg.to_doc();
    let mut text = format!("dimension {} (|W|^2 = {})\n", doc.dimension, {
        let w: usize = (1..=doc.n).product();
        w * w
    });
    let mut t = Table::new(&["index", "theta exponent", "w"]);
    for (k, b) in doc.basis.iter().enumerate() {
        t.row(vec![k.to_string(), format!("{:?}", b.a), format!("{:?}", b.w)]);
    }
    text += &t.render();
    let mut failures = Vec::new();
    if let Err(i) = unit {
        failures.push(format!("unit law fails on basis element {i}"));
    }
    if let Err((i, j, k)) = assoc {
        failures.push(format!("associativity fails on basis triple ({i}, {j}, {k})"));
    }
    text += &format!("unit law: {}\nassociativity: {}\n", unit.is_ok(), assoc.is_ok());
    for f in &failures {
        text += &format!("witness: {f}\n");
    }
    let mut json = to_json(&doc);
    if !failures.is_empty() {
        json["failures"] = json!(failures);
    }
    Ok(Outcome { json, text, passed: failures.is_empty() })
}

fn weights_text(w: &WeightReport) -> String {
    let mut t = Table::new(&["i", "j", "m", "k", "cells", "q0^-m", "twist", "ext weight", "ok"]);
    for r in &w.rows {
        t.row(vec![
            r.i.to_string(),
            r.j.to_string(),
            r.m.to_string(),
            r.k.to_string(),
            r.cells.to_string(),
            r.homology_weight.clone(),
            r.twist.clone(),
            r.ext_weight.clone(),
            r.consistent.to_string(),
        ]);
    }
    format!(
        "Frobenius weights (q0 = {}, {} cells checked)\n{}all consistent: {}\n",
        w.q0,
        w.checked_cells,
        t.render(),
        w.all_consistent
    )
}

fn graded_text(graded: impl IntoIterator<Item = (String, usize)>) -> String {
    let mut t = Table::new(&["k", "dim Hom^k"]);
    for (k, d) in graded {
        t.row(vec![k, d.to_string()]);
    }
    t.render()
}

fn steinberg_text(r: &SteinbergReport) -> String {
    let d = &r.datum;
    let mut text = format!(
        "{} datum, n = {}, |W(s)| = {}, component dims {:?}\n",
        d.kind, d.group.n, d.group.order, d.component_dims
    );
    let mut t = Table::new(&["i", "j", "m -> dim H_2m"]);
    for p in &r.poincare {
        let dims: Vec<String> = p.dims.iter().map(|(m, c)| format!("{m}:{c}")).collect();
        t.row(vec![p.i.to_string(), p.j.to_string(), dims.join(" ")]);
    }
    text += &t.render();
    text += &graded_text(r.ext.graded.iter().map(|(k, d)| (k.to_string(), *d)));
    text += &format!(
        "components {}  cells {}  homology {}  ext {}  hom0 {}\n",
        r.totals.components, r.totals.cells, r.totals.homology, r.totals.ext, r.totals.hom0
    );
    if let Some(w) = &r.weights {
        text += &weights_text(w);
    }
    for v in &r.violations {
        text += &format!("violation: {v}\n");
    }
    text
}

fn steinberg(n: Option<usize>, s: Option<&str>, q: Option<&str>, sqrt_q: Option<&str>) -> Run {
    let report = match (n, s, q) {
        (Some(n), None, None) => {
            let d = nilpotent_datum(n)?;
            let scale = match sqrt_q {
                Some(r) => {
                    let r = rational(r)?;
                    Some(FrobeniusScale::new(&r * &r, Some(r))?)
                }
                None => None,
            };
            steinberg_report(&d, scale.as_ref())?
        }
        (None, Some(s), Some(q)) => {
            let p = point(s, q, sqrt_q)?;
            let d = fixed_point_datum(&p)?;
            let scale = sqrt_q.map(|_| FrobeniusScale::of_point(&p));
            steinberg_report(&d, scale.as_ref())?
        }
        _ => return Err(Failure::Usage("give either --n alone or both --s and --q".into())),
    };
    let passed = report.ok();
    Ok(Outcome { json: to_json(&report), text: steinberg_text(&report), passed })
}

fn dlc_text(r: &DlcReport) -> String {
    let mut text = format!(
        "n = {}, s = ({}), q0 = {}\ncomponents {}  |W(s)| {}\ngeometric Ext total {}\nalgebraic dimension {}\nequal: {}\n",
        r.n,
        r.s.join(", "),
        r.q0,
        r.components,
        r.centralizer_order,
        r.geometric_total,
        r.algebraic_total,
        r.equal
    );
    text += &graded_text(r.graded.iter().map(|(k, d)| (k.to_string(), *d)));
    if let Some(w) = &r.weights {
        text += &weights_text(w);
    }
    for v in &r.violations {
        text += &format!("violation: {v}\n");
    }
    text
}

fn dlc(n: usize, s: &str, q: &str, sqrt_q: Option<&str>) -> Run {
    let p = point(s, q, sqrt_q)?;
    if p.rank() != n {
        return Err(Failure::Usage(format!("--s has {} coordinates but --n is {n}", p.rank())));
    }
    let report = dlc_report(&p)?;
    let passed = report.ok();
    Ok(Outcome { json: to_json(&report), text: dlc_text(&report), passed })
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut buf = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
    } else {
        buf = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?;
    }
    Ok(buf)
}

fn certificate_text(c: &ZigzagCertificate) -> String {
    let mut t = Table::new(&["algebra", "dim", "H^*", "valid"]);
    for a in &c.algebras {
        let h: Vec<String> = a.cohomology.iter().map(|(i, d)| format!("{i}:{d}")).collect();
        t.row(vec![a.name.clone(), a.dimension.to_string(), h.join(" "), a.valid.to_string()]);
    }
    let mut m = Table::new(&["map", "check", "passed", "witness"]);
    for map in &c.maps {
        for check in &map.checks {
            m.row(vec![
                format!("{}: {} -> {}", map.name, map.source, map.target),
                check.name.clone(),
                check.passed.to_string(),
                check.witness.clone().unwrap_or_default(),
            ]);
        }
    }
    format!("{}{}all passed: {}\n", t.render(), m.render(), c.all_passed)
}

fn zigzag_outcome(z: &ZigzagQ) -> Outcome {
    let cert = verify_zigzag(z);
    let mut json = to_json(&z.to_doc());
    json["status"] = json!(if cert.all_passed { "certified" } else { "rejected" });
    json["certificate"] = to_json(&cert);
    let mut w = Table::new(&["basis", "degree", "weight"]);
    for ((name, d), wt) in z.r_tilde.names.iter().zip(&z.r_tilde.degrees).zip(&z.weights) {
        w.row(vec![name.clone(), d.to_string(), wt.to_string()]);
    }
    let text = format!("zigzag H <- B -> R~ -> A with r = {}\n{}{}", z.r, w.render(), certificate_text(&cert));
    Outcome { json, text, passed: cert.all_passed }
}

fn dg_formality(input: &str, r: Option<&str>) -> Run {
    let raw = read_input(input)?;
    let doc: DgAlgebraDoc = serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("bad document: {e}")))?;
    let (a, doc_r) = doc.build()?;
    let r = match r {
        Some(r) => rational(r)?,
        None => doc_r.ok_or_else(|| Failure::Usage("no r given in the document or with --r".into()))?,
    };
    match formality_zigzag(&a, &r) {
        Ok(z) => Ok(zigzag_outcome(&z)),
        Err(Error::Validation(e)) => Ok(Outcome {
            text: format!("invalid dg-algebra: {e}\n"),
            json: json!({ "status": "invalid", "error": to_json(&e) }),
            passed: false,
        }),
        Err(Error::Formality(e)) => Ok(Outcome {
            text: format!("no zigzag: {e}\n"),
            json: json!({ "status": "not-formal", "error": to_json(&e) }),
            passed: false,
        }),
        Err(e) => Err(e.into()),
    }
}

fn schemas(kind: &str) -> Run {
    let s = schema::schema(kind).ok_or_else(|| {
        Failure::Usage(format!("unknown schema type {kind:?}; expected one of {}", schema::SCHEMA_TYPES.join(", ")))
    })?;
    let text = serde_json::to_string_pretty(&s).expect("schema serializes") + "\n";
    Ok(Outcome { json: s, text, passed: true })
}

fn dispatch(cli: &Cli) -> Run {
    match &cli.command {
        Command::HeckeVerify { n, bound, corrupt } => hecke_verify(*n, *bound, *corrupt),
        Command::HeckeMul { n, a, b } => hecke_mul(*n, a, b),
        Command::Truncate { s, q } => truncate(s, q),
        Command::Steinberg { n, s, q, sqrt_q } => steinberg(*n, s.as_deref(), q.as_deref(), sqrt_q.as_deref()),
        Command::Dlc { n, s, q, sqrt_q } => dlc(*n, s, q, sqrt_q.as_deref()),
        Command::DgFormality { input, r } => dg_formality(input, r.as_deref()),
        Command::Schemas { kind } => schemas(kind),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => emit(&(serde_json::to_string_pretty(&out.json).expect("output serializes") + "\n")),
                Format::Text => emit(&out.text),
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Math(m)) => {
            match cli.format {
                Format::Json => emit(&format!("{}\n", json!({ "status": "error", "witness": m }))),
                Format::Text => emit(&format!("error: {m}\n")),
            }
            ExitCode::from(1)
        }
    }
}
