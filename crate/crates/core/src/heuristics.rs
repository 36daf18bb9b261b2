//! Brown, sotd and ndrr variable-ordering heuristics.
//!
//! All three may tie between several orderings; the reported choice is then
//! the lexicographically least tuple (tuples are written in the reverse order
//! of projection).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::HeuristicError;
use crate::poly::{PolySystem, Variable};
use crate::projection::{full_projection, ProjectionSet, VariableOrdering};
use crate::roots::count_distinct_real_roots;
use crate::univariate::UnivariatePolynomial;

/// Largest variable count for which all orderings are enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Heuristic {
    Brown,
    Sotd,
    Ndrr,
}

impl Heuristic {
    pub const ALL: [Heuristic; 3] = [Heuristic::Brown, Heuristic::Sotd, Heuristic::Ndrr];

    pub fn name(self) -> &'static str {
        match self {
            Heuristic::Brown => "brown",
            Heuristic::Sotd => "sotd",
            Heuristic::Ndrr => "ndrr",
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Heuristic {
    type Err = HeuristicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brown" => Ok(Heuristic::Brown),
            "sotd" => Ok(Heuristic::Sotd),
            "ndrr" => Ok(Heuristic::Ndrr),
            other => Err(HeuristicError::UnknownHeuristic(other.to_string())),
        }
    }
}

/// Every permutation of `vars`, in lexicographic tuple order.
pub fn enumerate_orderings(vars: &[Variable], cap: usize) -> Result<Vec<VariableOrdering>, HeuristicError> {
    if vars.is_empty() {
        return Err(HeuristicError::NoVariables);
    }
    if vars.len() > cap {
        return Err(HeuristicError::TooManyVariables { count: vars.len(), cap });
    }
    let mut sorted = vars.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    permutations(&mut sorted, 0, &mut out);
    out.sort();
    Ok(out.into_iter().map(VariableOrdering::new).collect())
}

fn permutations(items: &mut Vec<Variable>, k: usize, out: &mut Vec<Vec<Variable>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Brown's three criteria for one variable, compared in field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BrownTriple {
    /// Highest degree of the variable in any input polynomial.
    pub crit1: u32,
    /// Highest total degree of an input term containing the variable.
    pub crit2: u32,
    /// Number of input terms containing the variable, summed over polynomials.
    pub crit3: usize,
}

impl fmt::Display for BrownTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.crit1, self.crit2, self.crit3)
    }
}

pub fn brown_triple(system: &PolySystem, v: &Variable) -> Result<BrownTriple, HeuristicError> {
    if !system.variables().contains(v) {
        return Err(HeuristicError::UnknownVariable(v.to_string()));
    }
    let mut t = BrownTriple {
        crit1: 0,
        crit2: 0,
        crit3: 0,
    };
    for p in system.polynomials() {
        t.crit1 = t.crit1.max(p.degree_in(v));
        for (m, _) in p.terms().filter(|(m, _)| m.contains(v)) {
            t.crit2 = t.crit2.max(m.total_degree());
            t.crit3 += 1;
        }
    }
    Ok(t)
}

/// All orderings consistent with eliminating variables in increasing order of
/// their Brown triples. Variables with equal triples may appear in any order.
pub fn brown_candidates(system: &PolySystem) -> Vec<VariableOrdering> {
    let mut ranked: Vec<(BrownTriple, Variable)> = system
        .variables()
        .iter()
        .map(|v| (brown_triple(system, v).expect("system variable"), v.clone()))
        .collect();
    ranked.sort();
    let mut groups: Vec<Vec<Variable>> = Vec::new();
    let mut last: Option<BrownTriple> = None;
    for (t, v) in ranked {
        match groups.last_mut() {
            Some(g) if last == Some(t) => g.push(v),
            _ => groups.push(vec![v]),
        }
        last = Some(t);
    }
    let mut sequences: Vec<Vec<Variable>> = vec![Vec::new()];
    for mut group in groups {
        let mut perms = Vec::new();
        permutations(&mut group, 0, &mut perms);
        sequences = sequences
            .iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut s = prefix.clone();
                    s.extend(p.iter().cloned());
                    s
                })
            })
            .collect();
    }
    let mut out: Vec<VariableOrdering> = sequences
        .into_iter()
        .map(|mut elimination| {
            elimination.reverse();
            VariableOrdering::new(elimination)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Sum of the total degrees of every monomial at every level, input included.
pub fn sotd_value(ps: &ProjectionSet) -> u64 {
    ps.levels()
        .flat_map(|(_, polys)| polys.iter())
        .flat_map(|p| p.terms())
        .map(|(m, _)| u64::from(m.total_degree()))
        .sum()
}

/// Distinct real roots of the univariate level, summed over its polynomials.
pub fn ndrr_value(ps: &ProjectionSet) -> u64 {
    if ps.num_levels() == 0 {
        return 0;
    }
    let v = &ps.ordering().variables()[0];
    ps.level(1)
        .iter()
        .map(|p| {
            let u = UnivariatePolynomial::from_polynomial(p, v).expect("level 1 is univariate");
            count_distinct_real_roots(&u).expect("projection members are nonzero") as u64
        })
        .sum()
}

/// The lexicographically least candidate.
pub fn lex_tiebreak(cands: &[VariableOrdering]) -> Result<VariableOrdering, HeuristicError> {
    cands.iter().min().cloned().ok_or(HeuristicError::EmptyCandidates)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeuristicReport {
    pub heuristic: Heuristic,
    /// Metric per ordering; empty for Brown.
    #[serde(serialize_with = "ser_per_ordering")]
    pub per_ordering: BTreeMap<VariableOrdering, u64>,
    #[serde(serialize_with = "ser_orderings")]
    pub candidates: Vec<VariableOrdering>,
    #[serde(serialize_with = "ser_ordering")]
    pub chosen: VariableOrdering,
}

fn ser_ordering<S: serde::Serializer>(o: &VariableOrdering, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(o)
}

fn ser_orderings<S: serde::Serializer>(os: &[VariableOrdering], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(os.iter().map(|o| o.to_string()))
}

fn ser_per_ordering<S: serde::Serializer>(m: &BTreeMap<VariableOrdering, u64>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(o, v)| (o.to_string(), v)))
}

/// sotd and ndrr for one ordering, from a single projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingMetrics {
    pub ordering: VariableOrdering,
    pub sotd: u64,
    pub ndrr: u64,
}

/// Projects along every ordering and records both projection-based metrics.
pub fn evaluate_orderings(system: &PolySystem, cap: usize) -> Result<Vec<OrderingMetrics>, HeuristicError> {
    enumerate_orderings(system.variables(), cap)?
        .into_iter()
        .map(|ordering| {
            let ps = full_projection(system, &ordering)?;
            Ok(OrderingMetrics {
                sotd: sotd_value(&ps),
                ndrr: ndrr_value(&ps),
                ordering,
            })
        })
        .collect()
}

fn argmin_report(heuristic: Heuristic, per_ordering: BTreeMap<VariableOrdering, u64>) -> HeuristicReport {
    let best = per_ordering.values().copied().min().expect("at least one ordering");
    let candidates: Vec<VariableOrdering> = per_ordering
        .iter()
        .filter(|(_, v)| **v == best)
        .map(|(o, _)| o.clone())
        .collect();
    let chosen = lex_tiebreak(&candidates).expect("argmin is nonempty");
    HeuristicReport {
        heuristic,
        per_ordering,
        candidates,
        chosen,
    }
}

fn brown_report(system: &PolySystem) -> HeuristicReport {
    let candidates = brown_candidates(system);
    let chosen = lex_tiebreak(&candidates).expect("brown candidates are nonempty");
    HeuristicReport {
        heuristic: Heuristic::Brown,
        per_ordering: BTreeMap::new(),
        candidates,
        chosen,
    }
}

pub fn choose(system: &PolySystem, heuristic: Heuristic) -> Result<HeuristicReport, HeuristicError> {
    choose_with_cap(system, heuristic, DEFAULT_ENUMERATION_CAP)
}

pub fn choose_with_cap(
    system: &PolySystem,
    heuristic: Heuristic,
    cap: usize,
) -> Result<HeuristicReport, HeuristicError> {
    if system.variables().is_empty() {
        return Err(HeuristicError::NoVariables);
    }
    let metric: fn(&ProjectionSet) -> u64 = match heuristic {
        Heuristic::Brown => return Ok(brown_report(system)),
        Heuristic::Sotd => sotd_value,
        Heuristic::Ndrr => ndrr_value,
    };
    let per_ordering = enumerate_orderings(system.variables(), cap)?
        .into_iter()
        .map(|o| {
            let ps = full_projection(system, &o)?;
            Ok((o, metric(&ps)))
        })
        .collect::<Result<BTreeMap<_, _>, HeuristicError>>()?;
    Ok(argmin_report(heuristic, per_ordering))
}

/// Reports for all three heuristics, projecting each ordering once.
pub fn choose_all(system: &PolySystem, cap: usize) -> Result<Vec<HeuristicReport>, HeuristicError> {
    if system.variables().is_empty() {
        return Err(HeuristicError::NoVariables);
    }
    let metrics = evaluate_orderings(system, cap)?;
    let sotd = metrics.iter().map(|m| (m.ordering.clone(), m.sotd)).collect();
    let ndrr = metrics.iter().map(|m| (m.ordering.clone(), m.ndrr)).collect();
    Ok(vec![
        brown_report(system),
        argmin_report(Heuristic::Sotd, sotd),
        argmin_report(Heuristic::Ndrr, ndrr),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_system;
    use crate::poly::test_util::v;

    fn ord(s: &str) -> VariableOrdering {
        s.parse().unwrap()
    }

    fn ords(list: &[&str]) -> Vec<VariableOrdering> {
        list.iter().map(|s| ord(s)).collect()
    }

    fn brown_demo() -> PolySystem {
        parse_system("x^4 + y\ny^2*z + 1").unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_orderings(&[v("z"), v("x"), v("y")], 7).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], ord("x>y>z"));
        assert_eq!(all[5], ord("z>y>x"));
        assert_eq!(enumerate_orderings(&[v("x")], 7).unwrap(), ords(&["x"]));
        assert_eq!(
            enumerate_orderings(&[v("w"), v("x"), v("y"), v("z")], 7).unwrap().len(),
            24
        );
        assert_eq!(
            enumerate_orderings(&[v("w"), v("x"), v("y")], 2),
            Err(HeuristicError::TooManyVariables { count: 3, cap: 2 })
        );
        assert_eq!(enumerate_orderings(&[], 7), Err(HeuristicError::NoVariables));
    }

    #[test]
    fn brown_triple_examples() {
        let s = brown_demo();
        let t = |c1, c2, c3| BrownTriple {
            crit1: c1,
            crit2: c2,
            crit3: c3,
        };
        assert_eq!(brown_triple(&s, &v("x")).unwrap(), t(4, 4, 1));
        assert_eq!(brown_triple(&s, &v("y")).unwrap(), t(2, 3, 2));
        assert_eq!(brown_triple(&s, &v("z")).unwrap(), t(1, 3, 1));
        assert_eq!(
            brown_triple(&s, &v("w")),
            Err(HeuristicError::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn brown_candidates_examples() {
        assert_eq!(brown_candidates(&brown_demo()), ords(&["x>y>z"]));
        let s = parse_system("x*y + 1").unwrap();
        assert_eq!(brown_candidates(&s), ords(&["x>y", "y>x"]));
        let s = parse_system("x^2 + 1").unwrap();
        assert_eq!(brown_candidates(&s), ords(&["x"]));
    }

    #[test]
    fn brown_ties_only_permute_within_groups() {
        // a, b tie on (1,1,1); c is (2,2,1) and is eliminated last
        let s = parse_system("vars: a, b, c\na + b + c^2").unwrap();
        assert_eq!(brown_candidates(&s), ords(&["c>a>b", "c>b>a"]));
    }

    #[test]
    fn unused_variable_is_eliminated_first() {
        let s = parse_system("vars: x, y\nx^2 + 1").unwrap();
        assert_eq!(
            brown_triple(&s, &v("y")).unwrap(),
            BrownTriple {
                crit1: 0,
                crit2: 0,
                crit3: 0
            }
        );
        assert_eq!(choose(&s, Heuristic::Brown).unwrap().chosen, ord("x>y"));
    }

    #[test]
    fn sotd_and_ndrr_examples() {
        let s = parse_system("x^2 + y").unwrap();
        let yx = full_projection(&s, &ord("y>x")).unwrap();
        let xy = full_projection(&s, &ord("x>y")).unwrap();
        assert_eq!(sotd_value(&yx), 4);
        assert_eq!(sotd_value(&xy), 5);
        assert_eq!(ndrr_value(&yx), 1);
        assert_eq!(ndrr_value(&xy), 1);

        let s = parse_system("x").unwrap();
        let ps = full_projection(&s, &ord("x")).unwrap();
        assert_eq!(sotd_value(&ps), 1);

        let s = parse_system("x^2 + 1").unwrap();
        let ps = full_projection(&s, &ord("x")).unwrap();
        assert_eq!(ndrr_value(&ps), 0);
    }

    #[test]
    fn lex_tiebreak_examples() {
        assert_eq!(lex_tiebreak(&ords(&["y>x", "x>y"])).unwrap(), ord("x>y"));
        assert_eq!(lex_tiebreak(&ords(&["x>z>y", "x>y>z", "z>x>y"])).unwrap(), ord("x>y>z"));
        assert_eq!(lex_tiebreak(&ords(&["z>y>x"])).unwrap(), ord("z>y>x"));
        assert_eq!(lex_tiebreak(&[]), Err(HeuristicError::EmptyCandidates));
    }

    #[test]
    fn choose_examples() {
        assert_eq!(choose(&brown_demo(), Heuristic::Brown).unwrap().chosen, ord("x>y>z"));

        let s = parse_system("x^2 + y").unwrap();
        let sotd = choose(&s, Heuristic::Sotd).unwrap();
        assert_eq!(sotd.chosen, ord("y>x"));
        assert_eq!(sotd.per_ordering, BTreeMap::from([(ord("y>x"), 4), (ord("x>y"), 5)]));

        let ndrr = choose(&s, Heuristic::Ndrr).unwrap();
        assert_eq!(ndrr.candidates, ords(&["x>y", "y>x"]));
        assert_eq!(ndrr.chosen, ord("x>y"));
    }

    #[test]
    fn choose_all_agrees_with_choose() {
        let s = parse_system("x^2 + y*z - 1\nx - y + z^2").unwrap();
        let all = choose_all(&s, DEFAULT_ENUMERATION_CAP).unwrap();
        for (report, h) in all.iter().zip(Heuristic::ALL) {
            assert_eq!(report, &choose(&s, h).unwrap());
        }
    }

    #[test]
    fn heuristic_names_parse() {
        for h in Heuristic::ALL {
            assert_eq!(h.name().parse::<Heuristic>().unwrap(), h);
        }
        assert!("greedy".parse::<Heuristic>().is_err());
    }
}
