//! The `cadorder` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 data-consistency
//! error. Results go to the output stream and diagnostics to the error stream.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::StatsError;
use crate::heuristics::{
    brown_triple, choose_all, choose_with_cap, evaluate_orderings, BrownTriple, Heuristic, HeuristicReport,
    DEFAULT_ENUMERATION_CAP,
};
use crate::parser::{parse_system, render};
use crate::poly::PolySystem;
use crate::projection::{full_projection, VariableOrdering};
use crate::roots::count_distinct_real_roots;
use crate::stats::{compute_results, emit_report, load_cell_table, Picks, ReportFormat};
use crate::univariate::UnivariatePolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cadorder",
    version,
    about = "Choose a CAD variable ordering with Brown, sotd or ndrr"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run heuristics on a problem and report their choices
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = HeuristicArg::All)]
        heuristic: HeuristicArg,
        #[arg(long, value_enum, default_value_t = AnalyzeFormat::Text)]
        format: AnalyzeFormat,
    },
    /// List every ordering with its sotd and ndrr values
    Orderings { file: PathBuf },
    /// Print the full projection set for one ordering
    Project {
        file: PathBuf,
        /// Ordering as `v1>v2>...>vn`; the last variable is eliminated first
        #[arg(long)]
        order: String,
    },
    /// Count distinct real roots of univariate polynomials
    Roots { file: PathBuf },
    /// Compare heuristic picks against per-ordering cell counts
    Bench {
        #[arg(long)]
        problems: PathBuf,
        #[arg(long)]
        cells: PathBuf,
        #[arg(long, value_enum, default_value_t = BenchFormat::Text)]
        format: BenchFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HeuristicArg {
    Brown,
    Sotd,
    Ndrr,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AnalyzeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchFormat {
    Text,
    Json,
    Csv,
}

/// A failure carrying its exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Analyze {
            file,
            heuristic,
            format,
        } => analyze(&file, heuristic, format),
        Command::Orderings { file } => orderings(&file),
        Command::Project { file, order } => project(&file, &order),
        Command::Roots { file } => roots(&file),
        Command::Bench {
            problems,
            cells,
            format,
        } => bench(&problems, &cells, format),
    };
    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load_system(path: &Path) -> Result<PolySystem, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    variables: Vec<String>,
    polynomials: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brown_triples: Option<BTreeMap<String, BrownTriple>>,
    reports: &'a [HeuristicReport],
}

fn brown_triples(system: &PolySystem) -> Vec<(String, BrownTriple)> {
    system
        .variables()
        .iter()
        .map(|v| (v.to_string(), brown_triple(system, v).expect("system variable")))
        .collect()
}

fn analyze(path: &Path, heuristic: HeuristicArg, format: AnalyzeFormat) -> Result<String, Failure> {
    let system = load_system(path)?;
    let reports = match heuristic {
        HeuristicArg::All => choose_all(&system, DEFAULT_ENUMERATION_CAP),
        HeuristicArg::Brown => choose_with_cap(&system, Heuristic::Brown, DEFAULT_ENUMERATION_CAP).map(|r| vec![r]),
        HeuristicArg::Sotd => choose_with_cap(&system, Heuristic::Sotd, DEFAULT_ENUMERATION_CAP).map(|r| vec![r]),
        HeuristicArg::Ndrr => choose_with_cap(&system, Heuristic::Ndrr, DEFAULT_ENUMERATION_CAP).map(|r| vec![r]),
    }
    .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let with_brown = reports.iter().any(|r| r.heuristic == Heuristic::Brown);

    if format == AnalyzeFormat::Json {
        let doc = AnalyzeJson {
            variables: system.variables().iter().map(|v| v.to_string()).collect(),
            polynomials: system.polynomials().iter().map(render).collect(),
            brown_triples: with_brown.then(|| brown_triples(&system).into_iter().collect()),
            reports: &reports,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        return Ok(s);
    }

    let mut s = String::new();
    for (i, report) in reports.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        s.push_str(&format!("heuristic: {}\n", report.heuristic));
        if report.heuristic == Heuristic::Brown {
            for (v, t) in brown_triples(&system) {
                s.push_str(&format!("  {v}: {t}\n"));
            }
        }
        for (o, value) in &report.per_ordering {
            s.push_str(&format!("  {o}: {value}\n"));
        }
        let cands: Vec<String> = report.candidates.iter().map(|o| o.to_string()).collect();
        s.push_str(&format!("  candidates: {}\n", cands.join(" ")));
        s.push_str(&format!("  chosen: {}\n", report.chosen));
    }
    Ok(s)
}

fn orderings(path: &Path) -> Result<String, Failure> {
    let system = load_system(path)?;
    let metrics =
        evaluate_orderings(&system, DEFAULT_ENUMERATION_CAP).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let width = metrics
        .iter()
        .map(|m| m.ordering.to_string().len())
        .max()
        .unwrap_or(0)
        .max("ordering".len());
    let mut s = format!("{:<width$}  {:>8}  {:>8}\n", "ordering", "sotd", "ndrr");
    for m in metrics {
        s.push_str(&format!(
            "{:<width$}  {:>8}  {:>8}\n",
            m.ordering.to_string(),
            m.sotd,
            m.ndrr
        ));
    }
    Ok(s)
}

fn project(path: &Path, order: &str) -> Result<String, Failure> {
    let system = load_system(path)?;
    let ordering: VariableOrdering = order
        .parse()
        .map_err(|e| Failure::new(EXIT_USAGE, format!("bad --order `{order}`: {e}")))?;
    let ps = full_projection(&system, &ordering).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let mut s = String::new();
    for (k, polys) in ps.levels() {
        s.push_str(&format!("level {k}:\n"));
        for p in polys {
            s.push_str(&render(p));
            s.push('\n');
        }
    }
    Ok(s)
}

fn roots(path: &Path) -> Result<String, Failure> {
    let system = load_system(path)?;
    let mut s = String::new();
    for p in system.polynomials() {
        let vars = p.variables();
        if vars.len() > 1 {
            return Err(Failure::new(
                EXIT_PARSE,
                format!("{}: `{}` is not univariate", path.display(), render(p)),
            ));
        }
        let count = match vars.into_iter().next() {
            None => 0,
            Some(v) => {
                let u = UnivariatePolynomial::from_polynomial(p, &v).expect("single variable");
                count_distinct_real_roots(&u).expect("nonzero polynomial")
            }
        };
        s.push_str(&format!("{count}\n"));
    }
    Ok(s)
}

fn bench(problems: &Path, cells: &Path, format: BenchFormat) -> Result<String, Failure> {
    let data = |m: String| Failure::new(EXIT_DATA, m);
    let entries = fs::read_dir(problems)
        .map_err(|e| data(format!("cannot read problem directory {}: {e}", problems.display())))?;
    let mut files: Vec<(String, PathBuf)> = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| data(e.to_string()))?.path();
        if path.extension().is_some_and(|x| x == "poly") && path.is_file() {
            let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
            files.push((stem, path));
        }
    }
    files.sort();

    let bytes = fs::read(cells).map_err(|e| data(format!("cannot read cell table {}: {e}", cells.display())))?;
    let table = load_cell_table(&bytes).map_err(|e| data(format!("{}: {e}", cells.display())))?;

    let mut picks: BTreeMap<Heuristic, Picks> = BTreeMap::new();
    for (id, path) in &files {
        if table.orderings(id).is_none() {
            return Err(data(format!("problem `{id}` has no rows in {}", cells.display())));
        }
        let system = load_system(path)?;
        let reports =
            choose_all(&system, DEFAULT_ENUMERATION_CAP).map_err(|e| data(format!("{}: {e}", path.display())))?;
        for r in reports {
            picks.entry(r.heuristic).or_default().insert(id.clone(), r.chosen);
        }
    }
    if picks.is_empty() {
        return Err(data(format!("no .poly files in {}", problems.display())));
    }
    let results = compute_results(&table, &picks).map_err(|e| match e {
        StatsError::MissingPick { problem, .. } => {
            data(format!("problem `{problem}` in the cell table has no .poly file"))
        }
        other => data(other.to_string()),
    })?;
    let format = match format {
        BenchFormat::Text => ReportFormat::Text,
        BenchFormat::Json => ReportFormat::Json,
        BenchFormat::Csv => ReportFormat::Csv,
    };
    Ok(emit_report(&results, format))
}
