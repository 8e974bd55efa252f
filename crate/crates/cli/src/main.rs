use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fcmeasure::cover::{validate_against_graph, CoverRecord};
use fcmeasure::oracle::{count_compatible, CheckStatus, VerifyReport};
use fcmeasure::transform::is_qwc_group;
use fcmeasure::{
    build_graph, build_graph_parallel, cover, pipeline, verify_plan, CliqueCover, Hamiltonian64, MeasurementPlan64,
    Method, PauliAxis, PauliProduct, PlanRecord, Relation, VerifyOptions, DEFAULT_EXACT_LIMIT,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "measure", version, about = "Group Pauli Hamiltonian terms into simultaneously measurable sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clique-cover the compatibility graph and report group statistics.
    Group(GroupArgs),
    /// Build the measurement plan: rotation and Clifford circuit per group.
    Transform(GroupArgs),
    /// Check a plan against its Hamiltonian with dense-matrix oracles.
    Verify(VerifyArgs),
    /// Count products compatible with a template by exhaustive enumeration.
    Count(CountArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct GroupArgs {
    /// Hamiltonian file, one `<coeff> <term>` per line.
    input: PathBuf,
    #[arg(long, default_value = "fc")]
    relation: Relation,
    #[arg(long, default_value = "rlf")]
    method: Method,
    /// Defaults to json for `transform`, table otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Drop terms with |coeff| below this value.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Largest graph the exact method accepts.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_cap: usize,
    /// Build the compatibility graph on all cores.
    #[arg(long)]
    parallel: bool,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Plan produced by `transform`; built on the fly when absent.
    #[arg(long)]
    plan: Option<PathBuf>,
    /// Random states per group for the expectation check.
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    qubits: usize,
    /// `X1 X2 X3` or dense `IXXX`; defaults to N/4 identities then X's.
    #[arg(long)]
    template: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug)]
enum CliError {
    Core(fcmeasure::Error),
    Io { path: PathBuf, source: std::io::Error },
    Json(serde_json::Error),
    Usage(String),
    Verify { failed: usize },
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Json(_) => "json",
            CliError::Usage(_) => "usage",
            CliError::Verify { .. } => "verify",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Json(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Verify { failed } => write!(f, "{failed} checks failed"),
        }
    }
}

impl From<fcmeasure::Error> for CliError {
    fn from(e: fcmeasure::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(args: &GroupArgs) -> CliResult<Hamiltonian64> {
    let text = read(&args.input)?;
    Ok(match args.tolerance {
        Some(tol) => Hamiltonian64::parse_with_tolerance(&text, tol)?,
        None => Hamiltonian64::parse(&text)?,
    })
}

fn grouping(h: &Hamiltonian64, args: &GroupArgs) -> CliResult<CliqueCover> {
    let graph = if args.parallel { build_graph_parallel(h, args.relation) } else { build_graph(h, args.relation) };
    let c = cover(&graph, args.method, args.exact_cap)?;
    validate_against_graph(&graph, &c)
        .into_result()
        .map_err(|e| fcmeasure::Error::Defect(format!("{} produced an invalid cover: {e}", args.method)))?;
    Ok(c)
}

#[derive(Serialize)]
struct GroupReport {
    total_terms: usize,
    minimum: bool,
    #[serde(flatten)]
    cover: CoverRecord,
}

fn stats_table(total: usize, cover: &CliqueCover) -> String {
    let s = cover.stats();
    format!(
        "{:<8}{:<6}{:<10}{}\n{:<8}{:<6}{:<10}{:.3}\n",
        "Total", "M", "Max Size", "STD", total, s.group_count, s.max_size, s.size_stddev
    )
}

fn cmd_group(args: &GroupArgs) -> CliResult<()> {
    let h = load(args)?;
    let c = grouping(&h, args)?;
    let minimum = args.method == Method::Exact;
    let text = match args.format.unwrap_or(Format::Table) {
        Format::Json => {
            let report = GroupReport { total_terms: h.len(), minimum, cover: c.to_record() };
            serde_json::to_string_pretty(&report)? + "\n"
        }
        Format::Table => {
            let flag = if minimum { ", minimum" } else { "" };
            let mut out = format!("{} terms, {} groups ({}, {}{flag})\n", h.len(), c.len(), c.relation, c.method);
            out += &stats_table(h.len(), &c);
            for (i, g) in c.groups.iter().enumerate() {
                let members: Vec<String> = g.iter().map(|t| h.terms()[*t].pauli.label()).collect();
                out += &format!("group {i}: {}\n", members.join(" | "));
            }
            out
        }
    };
    emit(args.output.as_deref(), &text)
}

fn build_plan(h: &Hamiltonian64, args: &GroupArgs) -> CliResult<MeasurementPlan64> {
    if args.relation != Relation::Fc {
        return Err(CliError::Usage("transform requires fc".into()));
    }
    let plan = pipeline(h, &grouping(h, args)?)?;
    if let Some(i) = plan.groups.iter().position(|g| !is_qwc_group(&g.transformed)) {
        return Err(fcmeasure::Error::InGroup {
            group: i,
            source: Box::new(fcmeasure::Error::Defect("rotated group is not qubit-wise commuting".into())),
        }
        .into());
    }
    Ok(plan)
}

fn cmd_transform(args: &GroupArgs) -> CliResult<()> {
    let h = load(args)?;
    let plan = build_plan(&h, args)?;
    let text = match args.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&plan.to_record())? + "\n",
        Format::Table => {
            let mut out = format!("{} terms, {} groups\n", h.len(), plan.groups.len());
            out += &format!("{:<7}{:<7}{:<7}{:<8}{}\n", "Group", "Terms", "CNOT", "1q", "Rotated");
            for (i, g) in plan.groups.iter().enumerate() {
                let rotated: Vec<String> =
                    g.transformed.terms().iter().map(|t| format!("{} {}", t.coeff, t.pauli.label())).collect();
                out += &format!(
                    "{:<7}{:<7}{:<7}{:<8}{}\n",
                    i,
                    g.term_indices.len(),
                    g.gate_counts.cnots,
                    g.gate_counts.single_qubit_gates,
                    rotated.join(" + ")
                );
            }
            out
        }
    };
    emit(args.output.as_deref(), &text)
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    group: Option<usize>,
    name: &'a str,
    status: &'a str,
    detail: &'a str,
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Passed => "PASS",
        CheckStatus::Failed => "FAIL",
        CheckStatus::Skipped => "SKIP",
    }
}

fn report_text(report: &VerifyReport, format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Json => {
            let records: Vec<CheckRecord> = report
                .checks
                .iter()
                .map(|c| CheckRecord { group: c.group, name: c.name, status: status_word(c.status), detail: &c.detail })
                .collect();
            serde_json::to_string_pretty(&records)? + "\n"
        }
        Format::Table => {
            let mut out = String::new();
            for c in &report.checks {
                let scope = c.group.map_or_else(|| "plan".to_string(), |g| format!("group {g}"));
                out += &format!("{:<10}{:<21}{:<6}{}\n", scope, c.name, status_word(c.status), c.detail);
            }
            out
        }
    })
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<()> {
    let h = load(&args.group)?;
    let plan = match &args.plan {
        Some(path) => {
            let record: PlanRecord = serde_json::from_str(&read(path)?)?;
            MeasurementPlan64::from_record(&record, &h)?
        }
        None => build_plan(&h, &args.group)?,
    };
    let opts = VerifyOptions { trials: args.trials, seed: args.seed, ..VerifyOptions::default() };
    let report = verify_plan(&h, &plan, &opts);
    emit(args.group.output.as_deref(), &report_text(&report, args.group.format.unwrap_or(Format::Table))?)?;
    match report.failures().count() {
        0 => Ok(()),
        failed => Err(CliError::Verify { failed }),
    }
}

fn parse_template(text: &str, n: usize) -> CliResult<PauliProduct> {
    let product = if text.chars().any(|c| c.is_ascii_digit()) || text.trim() == "I" {
        PauliProduct::parse_label(text, n)?
    } else {
        text.trim().parse::<PauliProduct>()?
    };
    if product.n_qubits() != n {
        return Err(CliError::Usage(format!("template has {} qubits, expected {n}", product.n_qubits())));
    }
    Ok(product)
}

#[derive(Serialize)]
struct CountReport {
    qubits: usize,
    template: String,
    n_qwc: usize,
    n_commuting: usize,
    formula_qwc: f64,
    formula_commuting: f64,
    formula_match: bool,
}

fn cmd_count(args: &CountArgs) -> CliResult<()> {
    let n = args.qubits;
    let template = match &args.template {
        Some(t) => parse_template(t, n)?,
        None => {
            let axes: Vec<PauliAxis> = (0..n).map(|q| if q < n / 4 { PauliAxis::I } else { PauliAxis::X }).collect();
            PauliProduct::from_axes(&axes)
        }
    };
    let counts = count_compatible(&template, n)?;
    let formula_qwc = 2f64.powf(5.0 * n as f64 / 4.0);
    let formula_commuting = 2f64.powf(2.0 * n as f64 - 1.0);
    let report = CountReport {
        qubits: n,
        template: template.label(),
        n_qwc: counts.n_qwc,
        n_commuting: counts.n_commuting,
        formula_qwc,
        formula_commuting,
        formula_match: counts.n_qwc as f64 == formula_qwc && counts.n_commuting as f64 == formula_commuting,
    };
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Table => format!(
            "template {} on {n} qubits\n{:<11}{:<12}{}\n{:<11}{:<12}{}\n{:<11}{:<12}{}\nformula match: {}\n",
            report.template,
            "",
            "enumerated",
            "formula",
            "QWC",
            report.n_qwc,
            report.formula_qwc,
            "commuting",
            report.n_commuting,
            report.formula_commuting,
            if report.formula_match { "yes" } else { "no" },
        ),
    };
    emit(None, &text)
}

fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Group(a) => cmd_group(a),
        Command::Transform(a) => cmd_transform(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Count(a) => cmd_count(a),
    }
}

fn fail(e: &CliError) -> ExitCode {
    let message = e.to_string().replace('\n', " ");
    eprintln!("error[{}]: {message}", e.kind());
    ExitCode::FAILURE
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            return fail(&CliError::Usage(first.to_string()));
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
