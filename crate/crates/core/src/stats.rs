//! Comparison statistics over per-ordering cell counts.
//!
//! For each problem the table holds the cell count (or a timeout) of every
//! variable ordering. Given each heuristic's pick per problem we compute how
//! often each pick was the best of the picks, the saving of each pick against
//! the problem's average cell count, and how often a pick avoided a timeout.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::StatsError;
use crate::heuristics::Heuristic;
use crate::projection::VariableOrdering;

pub const CSV_HEADER: [&str; 4] = ["problem", "ordering", "cells", "timeout"];

/// Cell counts per problem and ordering; `None` marks a timeout.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellCountTable {
    problems: BTreeMap<String, BTreeMap<VariableOrdering, Option<u64>>>,
}

/// Chosen ordering per problem id.
pub type Picks = BTreeMap<String, VariableOrdering>;

impl CellCountTable {
    pub fn problem_ids(&self) -> impl Iterator<Item = &str> {
        self.problems.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.problems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn orderings(&self, problem: &str) -> Option<&BTreeMap<VariableOrdering, Option<u64>>> {
        self.problems.get(problem)
    }

    /// `Some(None)` for a timed-out row, `None` for a missing row.
    pub fn cells(&self, problem: &str, ordering: &VariableOrdering) -> Option<Option<u64>> {
        self.problems.get(problem)?.get(ordering).copied()
    }

    pub fn has_timeout(&self, problem: &str) -> bool {
        self.problems
            .get(problem)
            .is_some_and(|rows| rows.values().any(Option::is_none))
    }

    fn pick_cells(&self, problem: &str, pick: &VariableOrdering) -> Result<Option<u64>, StatsError> {
        self.cells(problem, pick).ok_or_else(|| StatsError::DanglingPick {
            problem: problem.to_string(),
            ordering: pick.to_string(),
        })
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Parses and validates the `problem,ordering,cells,timeout` CSV.
pub fn load_cell_table(csv_bytes: &[u8]) -> Result<CellCountTable, StatsError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(csv_bytes);
    let mut records = reader.records();
    match records.next() {
        Some(Ok(h)) if h.iter().eq(CSV_HEADER) => {}
        _ => return Err(StatsError::MissingHeader),
    }
    let mut table = CellCountTable::default();
    for record in records {
        let record = record.map_err(|e| StatsError::Malformed {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let malformed = |message: String| StatsError::Malformed { line, message };
        if record.len() != 4 {
            return Err(malformed(format!("expected 4 fields, found {}", record.len())));
        }
        let problem = record[0].to_string();
        if problem.is_empty() {
            return Err(malformed("empty problem id".into()));
        }
        let ordering: VariableOrdering = record[1]
            .parse()
            .map_err(|e| malformed(format!("bad ordering `{}`: {e}", &record[1])))?;
        let timeout = match &record[3] {
            "0" => false,
            "1" => true,
            other => return Err(malformed(format!("timeout must be 0 or 1, found `{other}`"))),
        };
        let cells = match (&record[2], timeout) {
            ("", true) => None,
            ("", false) => return Err(StatsError::MissingCells { line }),
            (_, true) => return Err(StatsError::CellsWithTimeout { line }),
            (text, false) => match text.parse::<u64>() {
                Ok(n) if n > 0 && text.bytes().all(|b| b.is_ascii_digit()) => Some(n),
                _ => return Err(malformed(format!("cells must be a positive integer, found `{text}`"))),
            },
        };
        let rows = table.problems.entry(problem.clone()).or_default();
        if let Some(existing) = rows.keys().next() {
            let a: BTreeSet<_> = existing.variables().iter().collect();
            let b: BTreeSet<_> = ordering.variables().iter().collect();
            if a != b {
                return Err(StatsError::MixedVariables { problem });
            }
        }
        if rows.contains_key(&ordering) {
            return Err(StatsError::DuplicateRow {
                problem,
                ordering: ordering.to_string(),
            });
        }
        rows.insert(ordering, cells);
    }
    for (problem, rows) in &table.problems {
        let k = rows.keys().next().map_or(0, VariableOrdering::len);
        let expected = factorial(k);
        if rows.len() != expected {
            return Err(StatsError::IncompleteOrderings {
                problem: problem.clone(),
                found: rows.len(),
                expected,
            });
        }
    }
    Ok(table)
}

fn check_picks(table: &CellCountTable, picks: &BTreeMap<Heuristic, Picks>) -> Result<(), StatsError> {
    for (h, by_problem) in picks {
        for (problem, ordering) in by_problem {
            table.pick_cells(problem, ordering)?;
        }
        if let Some(problem) = table.problem_ids().find(|p| !by_problem.contains_key(*p)) {
            return Err(StatsError::MissingPick {
                heuristic: h.to_string(),
                problem: problem.to_string(),
            });
        }
    }
    Ok(())
}

/// Per heuristic, the number of problems on which its pick had no more cells
/// than every other heuristic's pick. Ties credit every tying heuristic.
/// Problems where any pick timed out are skipped.
pub fn best_pick_counts(
    table: &CellCountTable,
    picks: &BTreeMap<Heuristic, Picks>,
) -> Result<BTreeMap<Heuristic, usize>, StatsError> {
    check_picks(table, picks)?;
    let mut counts: BTreeMap<Heuristic, usize> = picks.keys().map(|h| (*h, 0)).collect();
    for problem in table.problem_ids() {
        let scored: Option<Vec<(Heuristic, u64)>> = picks
            .iter()
            .map(|(h, p)| table.cells(problem, &p[problem]).flatten().map(|c| (*h, c)))
            .collect();
        let Some(scored) = scored else { continue };
        let Some(best) = scored.iter().map(|(_, c)| *c).min() else {
            continue;
        };
        for (h, c) in scored {
            if c == best {
                *counts.get_mut(&h).unwrap() += 1;
            }
        }
    }
    Ok(counts)
}

/// Saving of the pick against the mean cell count, as a percentage of that
/// mean, for every problem where no ordering timed out. Positive means fewer
/// cells than average.
pub fn savings_percent(table: &CellCountTable, pick: &Picks) -> Result<BTreeMap<String, BigRational>, StatsError> {
    let mut out = BTreeMap::new();
    for problem in table.problem_ids() {
        if table.has_timeout(problem) {
            continue;
        }
        let ordering = pick.get(problem).ok_or_else(|| StatsError::MissingPick {
            heuristic: "pick".into(),
            problem: problem.to_string(),
        })?;
        let cells = table
            .pick_cells(problem, ordering)?
            .ok_or_else(|| StatsError::PickTimedOut {
                problem: problem.to_string(),
            })?;
        let rows = table.orderings(problem).unwrap();
        let n = BigInt::from(rows.len());
        let sum: BigInt = rows.values().map(|c| BigInt::from(c.unwrap())).sum();
        // (mean - c) / mean * 100 == (sum - n c) * 100 / sum
        let saving = BigRational::new((&sum - n * BigInt::from(cells)) * BigInt::from(100), sum);
        out.insert(problem.to_string(), saving);
    }
    for problem in pick.keys() {
        if table.orderings(problem).is_none() {
            return Err(StatsError::DanglingPick {
                problem: problem.clone(),
                ordering: pick[problem].to_string(),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SavingsSummary {
    pub mean_pct: BigRational,
    pub median_pct: BigRational,
    pub q1_pct: BigRational,
    pub q3_pct: BigRational,
    pub n_problems: usize,
}

/// Linear interpolation between closest ranks at position `(n - 1) * q`.
fn quantile(sorted: &[BigRational], q: &BigRational) -> BigRational {
    let pos = BigRational::from_integer(BigInt::from(sorted.len() - 1)) * q;
    let lo = pos.floor();
    let frac = &pos - &lo;
    let i = lo.to_integer().to_usize().expect("index fits");
    if frac.is_zero() {
        sorted[i].clone()
    } else {
        &sorted[i] + frac * (&sorted[i + 1] - &sorted[i])
    }
}

/// Exact mean plus interpolated median and quartiles.
pub fn summarize(values: &[BigRational]) -> Result<SavingsSummary, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let mut sorted = values.to_vec();
    sorted.sort();
    let n = values.len();
    let sum: BigRational = values.iter().sum();
    let ratio = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    Ok(SavingsSummary {
        mean_pct: sum / BigRational::from_integer(n.into()),
        median_pct: quantile(&sorted, &ratio(1, 2)),
        q1_pct: quantile(&sorted, &ratio(1, 4)),
        q3_pct: quantile(&sorted, &ratio(3, 4)),
        n_problems: n,
    })
}

/// Among problems where some ordering timed out, how many picks finished.
pub fn timeout_avoidance(table: &CellCountTable, pick: &Picks) -> Result<usize, StatsError> {
    let mut avoided = 0;
    for problem in table.problem_ids().filter(|p| table.has_timeout(p)) {
        let Some(ordering) = pick.get(problem) else {
            return Err(StatsError::MissingPick {
                heuristic: "pick".into(),
                problem: problem.to_string(),
            });
        };
        if table.pick_cells(problem, ordering)?.is_some() {
            avoided += 1;
        }
    }
    Ok(avoided)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicStats {
    pub best_pick_count: usize,
    /// `None` when no problem is free of timeouts.
    pub savings: Option<SavingsSummary>,
    pub timeout_avoidance_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchResults {
    pub n_problems: usize,
    pub n_no_timeout: usize,
    pub n_some_timeout: usize,
    pub per_heuristic: BTreeMap<Heuristic, HeuristicStats>,
}

impl BenchResults {
    /// Best-pick count as a percentage of all problems.
    pub fn best_pick_pct(&self, h: Heuristic) -> Option<f64> {
        let s = self.per_heuristic.get(&h)?;
        if self.n_problems == 0 {
            return Some(0.0);
        }
        Some(s.best_pick_count as f64 * 100.0 / self.n_problems as f64)
    }
}

pub fn compute_results(table: &CellCountTable, picks: &BTreeMap<Heuristic, Picks>) -> Result<BenchResults, StatsError> {
    let best = best_pick_counts(table, picks)?;
    let n_some_timeout = table.problem_ids().filter(|p| table.has_timeout(p)).count();
    let mut per_heuristic = BTreeMap::new();
    for (h, pick) in picks {
        let savings: Vec<BigRational> = savings_percent(table, pick)?.into_values().collect();
        per_heuristic.insert(
            *h,
            HeuristicStats {
                best_pick_count: best[h],
                savings: summarize(&savings).ok(),
                timeout_avoidance_count: timeout_avoidance(table, pick)?,
            },
        );
    }
    Ok(BenchResults {
        n_problems: table.len(),
        n_no_timeout: table.len() - n_some_timeout,
        n_some_timeout,
        per_heuristic,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(StatsError::UnknownFormat(other.to_string())),
        }
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Serialize)]
struct JsonHeuristic {
    best_pick_count: usize,
    best_pick_pct: f64,
    mean_saving_pct: Option<f64>,
    median_saving_pct: Option<f64>,
    q1_pct: Option<f64>,
    q3_pct: Option<f64>,
    timeout_avoidance_count: usize,
}

#[derive(Serialize)]
struct JsonTotals {
    n_problems: usize,
    n_no_timeout: usize,
    n_some_timeout: usize,
}

#[derive(Serialize)]
struct JsonReport {
    per_heuristic: BTreeMap<&'static str, JsonHeuristic>,
    totals: JsonTotals,
}

fn json_heuristic(results: &BenchResults, h: Heuristic) -> JsonHeuristic {
    let s = &results.per_heuristic[&h];
    let pick = |f: fn(&SavingsSummary) -> &BigRational| s.savings.as_ref().map(|x| to_f64(f(x)));
    JsonHeuristic {
        best_pick_count: s.best_pick_count,
        best_pick_pct: results.best_pick_pct(h).unwrap(),
        mean_saving_pct: pick(|x| &x.mean_pct),
        median_saving_pct: pick(|x| &x.median_pct),
        q1_pct: pick(|x| &x.q1_pct),
        q3_pct: pick(|x| &x.q3_pct),
        timeout_avoidance_count: s.timeout_avoidance_count,
    }
}

/// Column order of the text tables.
const TEXT_ORDER: [Heuristic; 3] = [Heuristic::Sotd, Heuristic::Ndrr, Heuristic::Brown];

fn pct(r: Option<&BigRational>) -> String {
    r.map_or_else(|| "-".to_string(), |r| format!("{:.2}%", to_f64(r)))
}

fn text_report(results: &BenchResults) -> String {
    let cols: Vec<Heuristic> = TEXT_ORDER
        .into_iter()
        .filter(|h| results.per_heuristic.contains_key(h))
        .collect();
    let mut out = String::new();
    let header = |out: &mut String, width: usize| {
        let _ = write!(out, "{:<10}", "");
        for h in &cols {
            let _ = write!(out, "{:>width$}", h.name());
        }
        out.push('\n');
    };
    let _ = writeln!(
        out,
        "problems: {} ({} with no timeout, {} with some timeout)\n",
        results.n_problems, results.n_no_timeout, results.n_some_timeout
    );

    let _ = writeln!(out, "Best pick among the heuristics");
    header(&mut out, 18);
    let _ = write!(out, "{:<10}", "count");
    for h in &cols {
        let cell = format!(
            "{} ({:.2}%)",
            results.per_heuristic[h].best_pick_count,
            results.best_pick_pct(*h).unwrap()
        );
        let _ = write!(out, "{cell:>18}");
    }
    out.push_str("\n\n");

    let _ = writeln!(
        out,
        "Cell count saving against the problem average ({} problems)",
        results.n_no_timeout
    );
    header(&mut out, 12);
    type Field = fn(&SavingsSummary) -> &BigRational;
    let rows: [(&str, Field); 4] = [
        ("mean", |s| &s.mean_pct),
        ("median", |s| &s.median_pct),
        ("q1", |s| &s.q1_pct),
        ("q3", |s| &s.q3_pct),
    ];
    for (label, field) in rows {
        let _ = write!(out, "{label:<10}");
        for h in &cols {
            let v = results.per_heuristic[h].savings.as_ref().map(field);
            let _ = write!(out, "{:>12}", pct(v));
        }
        out.push('\n');
    }
    out.push('\n');

    let _ = writeln!(
        out,
        "Timeouts avoided ({} problems with some timeout)",
        results.n_some_timeout
    );
    header(&mut out, 12);
    let _ = write!(out, "{:<10}", "avoided");
    for h in &cols {
        let _ = write!(out, "{:>12}", results.per_heuristic[h].timeout_avoidance_count);
    }
    out.push('\n');
    out
}

fn csv_report(results: &BenchResults) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "heuristic",
        "best_pick_count",
        "best_pick_pct",
        "mean_saving_pct",
        "median_saving_pct",
        "q1_pct",
        "q3_pct",
        "timeout_avoidance_count",
    ])
    .expect("in-memory write");
    let opt = |v: Option<f64>| v.map_or_else(String::new, |v| v.to_string());
    for h in results.per_heuristic.keys() {
        let j = json_heuristic(results, *h);
        w.write_record([
            h.name().to_string(),
            j.best_pick_count.to_string(),
            j.best_pick_pct.to_string(),
            opt(j.mean_saving_pct),
            opt(j.median_saving_pct),
            opt(j.q1_pct),
            opt(j.q3_pct),
            j.timeout_avoidance_count.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn emit_report(results: &BenchResults, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => text_report(results),
        ReportFormat::Json => {
            let report = JsonReport {
                per_heuristic: results
                    .per_heuristic
                    .keys()
                    .map(|h| (h.name(), json_heuristic(results, *h)))
                    .collect(),
                totals: JsonTotals {
                    n_problems: results.n_problems,
                    n_no_timeout: results.n_no_timeout,
                    n_some_timeout: results.n_some_timeout,
                },
            };
            let mut s = serde_json::to_string_pretty(&report).expect("serializable");
            s.push('\n');
            s
        }
        ReportFormat::Csv => csv_report(results),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ord(s: &str) -> VariableOrdering {
        s.parse().unwrap()
    }

    const XYZ: [&str; 6] = ["x>y>z", "x>z>y", "y>x>z", "y>z>x", "z>x>y", "z>y>x"];

    fn problem_csv(id: &str, cells: [Option<u64>; 6]) -> String {
        XYZ.iter()
            .zip(cells)
            .map(|(o, c)| match c {
                Some(c) => format!("{id},{o},{c},0\n"),
                None => format!("{id},{o},,1\n"),
            })
            .collect()
    }

    fn table(problems: &[(&str, [Option<u64>; 6])]) -> CellCountTable {
        let mut text = String::from("problem,ordering,cells,timeout\n");
        for (id, cells) in problems {
            text.push_str(&problem_csv(id, *cells));
        }
        load_cell_table(text.as_bytes()).unwrap()
    }

    fn counts(cs: [u64; 6]) -> [Option<u64>; 6] {
        cs.map(Some)
    }

    #[test]
    fn load_examples() {
        let t = table(&[("p1", counts([10, 20, 30, 40, 50, 60]))]);
        assert_eq!(t.len(), 1);
        assert_eq!(t.cells("p1", &ord("y>x>z")), Some(Some(30)));

        let t = table(&[("p1", [Some(1), None, Some(2), Some(3), Some(4), Some(5)])]);
        assert!(t.has_timeout("p1"));
        assert_eq!(t.cells("p1", &ord("x>z>y")), Some(None));

        let mut text = String::from("problem,ordering,cells,timeout\n");
        text.push_str(&problem_csv("p1", counts([1, 2, 3, 4, 5, 6])));
        let five: String = text.lines().take(6).map(|l| format!("{l}\n")).collect();
        assert_eq!(
            load_cell_table(five.as_bytes()),
            Err(StatsError::IncompleteOrderings {
                problem: "p1".into(),
                found: 5,
                expected: 6
            })
        );
    }

    #[test]
    fn load_rejects_inconsistent_rows() {
        assert_eq!(load_cell_table(b""), Err(StatsError::MissingHeader));
        assert_eq!(
            load_cell_table(b"problem,ordering,cells\n"),
            Err(StatsError::MissingHeader)
        );
        let base = "problem,ordering,cells,timeout\n";
        let dup = format!("{base}p,x>y,3,0\np,x>y,4,0\n");
        assert!(matches!(
            load_cell_table(dup.as_bytes()),
            Err(StatsError::DuplicateRow { .. })
        ));
        let with_timeout = format!("{base}p,x>y,3,1\n");
        assert_eq!(
            load_cell_table(with_timeout.as_bytes()),
            Err(StatsError::CellsWithTimeout { line: 2 })
        );
        let missing = format!("{base}p,x>y,,0\n");
        assert_eq!(
            load_cell_table(missing.as_bytes()),
            Err(StatsError::MissingCells { line: 2 })
        );
        let zero = format!("{base}p,x>y,0,0\np,y>x,1,0\n");
        assert!(matches!(
            load_cell_table(zero.as_bytes()),
            Err(StatsError::Malformed { line: 2, .. })
        ));
        let mixed = format!("{base}p,x>y,3,0\np,y>z,4,0\n");
        assert!(matches!(
            load_cell_table(mixed.as_bytes()),
            Err(StatsError::MixedVariables { .. })
        ));
        let bad_flag = format!("{base}p,x>y,3,2\n");
        assert!(matches!(
            load_cell_table(bad_flag.as_bytes()),
            Err(StatsError::Malformed { .. })
        ));
    }

    fn picks3(a: &str, b: &str, c: &str) -> BTreeMap<Heuristic, Picks> {
        [(Heuristic::Brown, a), (Heuristic::Sotd, b), (Heuristic::Ndrr, c)]
            .into_iter()
            .map(|(h, o)| (h, Picks::from([("p1".to_string(), ord(o))])))
            .collect()
    }

    #[test]
    fn best_pick_tie_rules() {
        // x>y>z=20, x>z>y=20, y>x>z=30, y>z>x=10
        let t = table(&[("p1", counts([20, 20, 30, 10, 40, 50]))]);
        let c = best_pick_counts(&t, &picks3("x>y>z", "x>z>y", "y>x>z")).unwrap();
        assert_eq!(c.values().copied().collect::<Vec<_>>(), [1, 1, 0]);
        let c = best_pick_counts(&t, &picks3("y>z>x", "x>y>z", "y>x>z")).unwrap();
        assert_eq!(c.values().copied().collect::<Vec<_>>(), [1, 0, 0]);
        let c = best_pick_counts(&t, &picks3("x>y>z", "x>y>z", "x>y>z")).unwrap();
        assert_eq!(c.values().copied().collect::<Vec<_>>(), [1, 1, 1]);
    }

    #[test]
    fn best_pick_skips_timed_out_picks_and_rejects_dangling() {
        let t = table(&[("p1", [None, Some(5), Some(6), Some(7), Some(8), Some(9)])]);
        let c = best_pick_counts(&t, &picks3("x>y>z", "x>z>y", "y>x>z")).unwrap();
        assert!(c.values().all(|n| *n == 0));
        let mut picks = picks3("x>z>y", "x>z>y", "y>x>z");
        picks
            .get_mut(&Heuristic::Ndrr)
            .unwrap()
            .insert("p9".into(), ord("x>y>z"));
        assert!(matches!(
            best_pick_counts(&t, &picks),
            Err(StatsError::DanglingPick { .. })
        ));
    }

    #[test]
    fn savings_examples() {
        let t = table(&[("p1", counts([10, 20, 30, 40, 50, 60]))]);
        let s = |o: &str| savings_percent(&t, &Picks::from([("p1".into(), ord(o))])).unwrap()["p1"].clone();
        assert_eq!(s("x>z>y"), BigRational::new(300.into(), 7.into()));
        assert_eq!(s("z>y>x"), BigRational::new((-500).into(), 7.into()));
        let t = table(&[("p1", counts([35, 35, 35, 35, 35, 35]))]);
        let s0 = savings_percent(&t, &Picks::from([("p1".into(), ord("x>y>z"))])).unwrap();
        assert!(s0["p1"].is_zero());
    }

    #[test]
    fn savings_skip_problems_with_timeouts() {
        let t = table(&[
            ("p1", counts([10, 20, 30, 40, 50, 60])),
            ("p2", [None, Some(5), Some(6), Some(7), Some(8), Some(9)]),
        ]);
        let pick = Picks::from([("p1".into(), ord("x>y>z")), ("p2".into(), ord("x>y>z"))]);
        let s = savings_percent(&t, &pick).unwrap();
        assert_eq!(s.keys().collect::<Vec<_>>(), ["p1"]);
    }

    #[test]
    fn summarize_examples() {
        let s = summarize(&[r(0), r(10), r(20), r(30), r(40)]).unwrap();
        assert_eq!(
            (s.mean_pct, s.median_pct, s.q1_pct, s.q3_pct),
            (r(20), r(20), r(10), r(30))
        );
        let s = summarize(&[r(5)]).unwrap();
        assert_eq!((s.mean_pct, s.median_pct, s.q1_pct, s.q3_pct), (r(5), r(5), r(5), r(5)));
        let s = summarize(&[r(100), r(0)]).unwrap();
        assert_eq!(
            (s.mean_pct, s.median_pct, s.q1_pct, s.q3_pct),
            (r(50), r(50), r(25), r(75))
        );
        assert_eq!(summarize(&[]), Err(StatsError::EmptyInput));
    }

    #[test]
    fn timeout_avoidance_examples() {
        let t = table(&[
            ("p1", [None, None, Some(6), Some(7), Some(8), Some(9)]),
            ("p2", counts([1, 2, 3, 4, 5, 6])),
        ]);
        let pick = |o: &str| Picks::from([("p1".into(), ord(o)), ("p2".into(), ord("x>y>z"))]);
        assert_eq!(timeout_avoidance(&t, &pick("y>x>z")).unwrap(), 1);
        assert_eq!(timeout_avoidance(&t, &pick("x>z>y")).unwrap(), 0);
    }

    #[test]
    fn report_formats() {
        let t = table(&[("p1", counts([10, 20, 30, 40, 50, 60]))]);
        let results = compute_results(&t, &picks3("x>y>z", "x>z>y", "z>y>x")).unwrap();
        let json: serde_json::Value = serde_json::from_str(&emit_report(&results, ReportFormat::Json)).unwrap();
        for key in ["best_pick_count", "mean_saving_pct", "timeout_avoidance_count"] {
            assert!(json["per_heuristic"]["sotd"].get(key).is_some());
        }
        assert_eq!(json["totals"]["n_problems"], 1);

        let text = emit_report(&results, ReportFormat::Text);
        assert!(text.contains("1 (100.00%)"), "{text}");
        assert!(text.contains("42.86%"), "{text}");
        assert!(text.contains("-71.43%"), "{text}");

        let csv = emit_report(&results, ReportFormat::Csv);
        let mut rdr = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(rdr.records().count(), 3);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
