//! Command line front end: print generator matrices, compute invariant
//! spinors, recompute the published count table, and run the built-in
//! verification suites.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource
//! cap exceeded. Identical invocations produce byte-identical output.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use holospin_core::{
    build_rep, ensure_within_cap, invariants_for_with_forms, run_selfcheck_with_forms,
    table1_with_forms, CliffordRep, Error as CoreError, FormTable, HolonomyFamily, HolonomySpec,
    InvariantSpaceResult, SelfCheckReport, Signature, Table1Report,
};

#[derive(Parser)]
#[command(
    name = "holospin",
    version,
    about = "Exact spinor representations and invariant-spinor counts for candidate holonomy algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator matrices of the spinor representation.
    Rep(RepArgs),
    /// Compute the invariant spinors of one holonomy family.
    Invariants(InvariantsArgs),
    /// Recompute every row of the published invariant-count table.
    Table1(Table1Args),
    /// Run the built-in verification suites.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
struct RepArgs {
    /// Signature "p,q" of the underlying quadratic space.
    #[arg(long, value_parser = parse_pair)]
    signature: (usize, usize),
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct InvariantsArgs {
    /// One of: SO, SU, U, Sp, G2, G2split, G2complex, Spin7, Spin43,
    /// Spin7complex.
    #[arg(long)]
    family: String,
    /// Parameters "p',q'" for the parametric families.
    #[arg(long, value_parser = parse_pair)]
    params: Option<(usize, usize)>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct Table1Args {
    /// Upper bound on p'+q' for the parametric families.
    #[arg(long, default_value_t = 3)]
    bound: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SelfcheckArgs {
    /// Shorthand for --format json.
    #[arg(long, conflicts_with = "format")]
    json: bool,
    /// Read the calibration-form constants from this directory instead
    /// of the embedded copies.
    #[arg(long)]
    forms_dir: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated counts, got {s:?}"))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| format!("not a count: {a:?}"))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| format!("not a count: {b:?}"))?;
    Ok((a, b))
}

enum Failure {
    Core(CoreError),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(CoreError::ResourceCap(_)) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let (text, code, out) = match cli.command {
        Command::Rep(args) => (render_rep(&args)?, 0, args.output.out),
        Command::Invariants(args) => (render_invariants(&args)?, 0, args.output.out),
        Command::Table1(args) => {
            let report = table1_with_forms(args.bound, &FormTable::builtin())?;
            let code = u8::from(!report.all_match());
            (
                render_table(&report, args.bound, args.output.format)?,
                code,
                args.output.out,
            )
        }
        Command::Selfcheck(args) => {
            let forms = match &args.forms_dir {
                Some(dir) => FormTable::from_dir(dir)?,
                None => FormTable::builtin(),
            };
            let report = run_selfcheck_with_forms(&forms);
            let format = if args.json {
                Format::Json
            } else {
                args.output.format
            };
            let code = u8::from(!report.passed());
            (render_selfcheck(&report, format)?, code, args.output.out)
        }
    };
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(code)
}

#[derive(Serialize)]
struct SignatureOut {
    p: usize,
    q: usize,
}

impl From<Signature> for SignatureOut {
    fn from(s: Signature) -> Self {
        SignatureOut { p: s.p, q: s.q }
    }
}

#[derive(Serialize)]
struct GeneratorOut {
    name: String,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct RepOut {
    signature: SignatureOut,
    spinor_dimension: usize,
    generators: Vec<GeneratorOut>,
}

fn matrix_rows(mat: &holospin_core::ExactMatrix) -> Vec<Vec<String>> {
    (0..mat.rows())
        .map(|r| (0..mat.cols()).map(|c| mat[(r, c)].to_string()).collect())
        .collect()
}

fn render_rep(args: &RepArgs) -> Result<String, Failure> {
    let (p, q) = args.signature;
    let sig = Signature::new(p, q);
    ensure_within_cap(sig)?;
    let rep = build_rep(sig)?;
    Ok(match args.output.format {
        Format::Pretty => pretty_rep(&rep, sig),
        Format::Json => {
            let out = RepOut {
                signature: sig.into(),
                spinor_dimension: sig.spinor_dim(),
                generators: rep
                    .generators()
                    .iter()
                    .enumerate()
                    .map(|(k, mat)| GeneratorOut {
                        name: format!("e_{}", k + 1),
                        rows: matrix_rows(mat),
                    })
                    .collect(),
            };
            to_json(&out)
        }
        Format::Csv => {
            let mut w = csv_writer();
            write_record(&mut w, ["generator", "row", "col", "value"]);
            for (k, mat) in rep.generators().iter().enumerate() {
                for r in 0..mat.rows() {
                    for c in 0..mat.cols() {
                        write_record(
                            &mut w,
                            &[
                                format!("e_{}", k + 1),
                                r.to_string(),
                                c.to_string(),
                                mat[(r, c)].to_string(),
                            ],
                        );
                    }
                }
            }
            finish_csv(w)
        }
    })
}

fn pretty_rep(rep: &CliffordRep, sig: Signature) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "signature {sig}");
    let _ = writeln!(s, "spinor dimension {}", sig.spinor_dim());
    for (k, mat) in rep.generators().iter().enumerate() {
        let _ = writeln!(s, "e_{} =", k + 1);
        for row in matrix_rows(mat) {
            let _ = writeln!(s, "  {}", row.join(" "));
        }
    }
    s
}

#[derive(Serialize)]
struct ParamsOut {
    p: usize,
    q: usize,
}

#[derive(Serialize)]
struct InvariantsOut {
    family: String,
    params: Option<ParamsOut>,
    ambient: SignatureOut,
    n_invariants: usize,
    basis: Vec<Vec<String>>,
}

fn spec_from_args(args: &InvariantsArgs) -> Result<HolonomySpec, CoreError> {
    let family = HolonomyFamily::from_name(&args.family)?;
    match (family.takes_params(), args.params) {
        (true, Some((p, q))) => HolonomySpec::parametric(family, p, q),
        (true, None) => Err(CoreError::InvalidParameter(format!(
            "family {} requires --params",
            family.name()
        ))),
        (false, Some(_)) => Err(CoreError::InvalidParameter(format!(
            "family {} takes no --params",
            family.name()
        ))),
        (false, None) => HolonomySpec::fixed(family),
    }
}

fn spec_params(spec: &HolonomySpec) -> Option<ParamsOut> {
    spec.family.takes_params().then_some(ParamsOut {
        p: spec.params.0,
        q: spec.params.1,
    })
}

fn basis_strings(result: &InvariantSpaceResult) -> Vec<Vec<String>> {
    result
        .space
        .basis
        .iter()
        .map(|v| v.coords.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn render_invariants(args: &InvariantsArgs) -> Result<String, Failure> {
    let spec = spec_from_args(args)?;
    let result = invariants_for_with_forms(&spec, &FormTable::builtin())?;
    Ok(match args.output.format {
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "family {}", spec.describe());
            let _ = writeln!(s, "ambient signature {}", result.ambient);
            let _ = writeln!(s, "spinor dimension {}", result.ambient.spinor_dim());
            let _ = writeln!(s, "invariant spinors: {}", result.n_invariants());
            for (idx, row) in basis_strings(&result).iter().enumerate() {
                let _ = writeln!(s, "basis {idx}: {}", row.join(" "));
            }
            s
        }
        Format::Json => to_json(&InvariantsOut {
            family: spec.family.name().to_string(),
            params: spec_params(&spec),
            ambient: result.ambient.into(),
            n_invariants: result.n_invariants(),
            basis: basis_strings(&result),
        }),
        Format::Csv => {
            let mut w = csv_writer();
            write_record(
                &mut w,
                [
                    "family",
                    "p_param",
                    "q_param",
                    "ambient_p",
                    "ambient_q",
                    "n_invariants",
                    "basis_index",
                    "component_index",
                    "value",
                ],
            );
            let (p_param, q_param) = match spec_params(&spec) {
                Some(ps) => (ps.p.to_string(), ps.q.to_string()),
                None => (String::new(), String::new()),
            };
            for (idx, row) in basis_strings(&result).iter().enumerate() {
                for (comp, value) in row.iter().enumerate() {
                    write_record(
                        &mut w,
                        &[
                            spec.family.name().to_string(),
                            p_param.clone(),
                            q_param.clone(),
                            result.ambient.p.to_string(),
                            result.ambient.q.to_string(),
                            result.n_invariants().to_string(),
                            idx.to_string(),
                            comp.to_string(),
                            value.clone(),
                        ],
                    );
                }
            }
            finish_csv(w)
        }
    })
}

#[derive(Serialize)]
struct TableRowOut {
    family: String,
    params: Option<ParamsOut>,
    printed_ambient: SignatureOut,
    computed_ambient: SignatureOut,
    expected_n: usize,
    computed_n: usize,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct TableOut {
    bound: usize,
    rows: Vec<TableRowOut>,
    all_match: bool,
}

fn render_table(report: &Table1Report, bound: usize, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "bound {bound}");
            let name_width = report
                .rows
                .iter()
                .map(|r| r.spec.describe().len())
                .max()
                .unwrap_or(6)
                .max("family".len());
            let _ = writeln!(
                s,
                "{:name_width$}  {:>8}  {:>8}  {:>8}  {:>8}  match",
                "family", "printed", "computed", "expected", "got"
            );
            for row in &report.rows {
                let _ = writeln!(
                    s,
                    "{:name_width$}  {:>8}  {:>8}  {:>8}  {:>8}  {}",
                    row.spec.describe(),
                    row.spec.printed_ambient().to_string(),
                    row.spec.ambient().to_string(),
                    row.expected,
                    row.computed,
                    if row.matches() { "yes" } else { "NO" }
                );
            }
            let total = report.rows.len();
            if report.all_match() {
                let _ = writeln!(s, "all {total} rows match");
            } else {
                let bad = report.rows.iter().filter(|r| !r.matches()).count();
                let _ = writeln!(s, "{bad} of {total} rows mismatch");
            }
            s
        }
        Format::Json => to_json(&TableOut {
            bound,
            rows: report
                .rows
                .iter()
                .map(|row| TableRowOut {
                    family: row.spec.family.name().to_string(),
                    params: spec_params(&row.spec),
                    printed_ambient: row.spec.printed_ambient().into(),
                    computed_ambient: row.spec.ambient().into(),
                    expected_n: row.expected,
                    computed_n: row.computed,
                    matches: row.matches(),
                })
                .collect(),
            all_match: report.all_match(),
        }),
        Format::Csv => {
            let mut w = csv_writer();
            write_record(
                &mut w,
                [
                    "family",
                    "p_param",
                    "q_param",
                    "printed_p",
                    "printed_q",
                    "computed_p",
                    "computed_q",
                    "expected_n",
                    "computed_n",
                    "match",
                ],
            );
            for row in &report.rows {
                let (p_param, q_param) = match spec_params(&row.spec) {
                    Some(ps) => (ps.p.to_string(), ps.q.to_string()),
                    None => (String::new(), String::new()),
                };
                write_record(
                    &mut w,
                    &[
                        row.spec.family.name().to_string(),
                        p_param,
                        q_param,
                        row.spec.printed_ambient().p.to_string(),
                        row.spec.printed_ambient().q.to_string(),
                        row.spec.ambient().p.to_string(),
                        row.spec.ambient().q.to_string(),
                        row.expected.to_string(),
                        row.computed.to_string(),
                        row.matches().to_string(),
                    ],
                );
            }
            finish_csv(w)
        }
    })
}

#[derive(Serialize)]
struct SuiteOut {
    name: String,
    checks: usize,
    failures_count: usize,
    first_failure: Option<String>,
}

#[derive(Serialize)]
struct SelfcheckOut {
    suites: Vec<SuiteOut>,
    total_checks: usize,
    passed: bool,
}

fn render_selfcheck(report: &SelfCheckReport, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Pretty => {
            let mut s = String::new();
            let width = report
                .suites
                .iter()
                .map(|r| r.name.len())
                .max()
                .unwrap_or(5);
            for suite in &report.suites {
                match suite.first_failure() {
                    None => {
                        let _ =
                            writeln!(s, "{:width$}  {:>5} checks  ok", suite.name, suite.checks);
                    }
                    Some(first) => {
                        let _ = writeln!(
                            s,
                            "{:width$}  {:>5} checks  {} failed, first: {first}",
                            suite.name,
                            suite.checks,
                            suite.failures.len()
                        );
                    }
                }
            }
            match report.first_failure() {
                None => {
                    let _ = writeln!(s, "all suites passed ({} checks)", report.total_checks());
                }
                Some((suite, failure)) => {
                    let _ = writeln!(s, "FAILED: {suite}: {failure}");
                }
            }
            s
        }
        Format::Json => to_json(&SelfcheckOut {
            suites: report
                .suites
                .iter()
                .map(|suite| SuiteOut {
                    name: suite.name.to_string(),
                    checks: suite.checks,
                    failures_count: suite.failures.len(),
                    first_failure: suite.first_failure().map(str::to_string),
                })
                .collect(),
            total_checks: report.total_checks(),
            passed: report.passed(),
        }),
        Format::Csv => {
            let mut w = csv_writer();
            write_record(
                &mut w,
                ["suite", "checks", "failures_count", "first_failure"],
            );
            for suite in &report.suites {
                write_record(
                    &mut w,
                    &[
                        suite.name.to_string(),
                        suite.checks.to_string(),
                        suite.failures.len().to_string(),
                        suite.first_failure().unwrap_or("").to_string(),
                    ],
                );
            }
            finish_csv(w)
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn write_record<I, S>(w: &mut csv::Writer<Vec<u8>>, record: I)
where
    I: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    w.write_record(record).expect("in-memory csv write");
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv output is utf-8")
}
