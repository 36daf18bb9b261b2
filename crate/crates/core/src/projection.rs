//! Full projection sets for a fixed variable ordering.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{PolyError, ProjectionError};
use crate::poly::{PolySystem, Polynomial, Variable};
use crate::resultant::{discriminant, resultant};

/// A permutation of the problem variables written in the reverse order of
/// projection: the last entry is eliminated first and the first entry is the
/// variable of the univariate level.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableOrdering(Vec<Variable>);

impl VariableOrdering {
    pub fn new(tuple: Vec<Variable>) -> Self {
        VariableOrdering(tuple)
    }

    pub fn variables(&self) -> &[Variable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if the tuple holds each of `vars` exactly once.
    pub fn is_permutation_of(&self, vars: &[Variable]) -> bool {
        let mine: BTreeSet<&Variable> = self.0.iter().collect();
        mine.len() == self.0.len() && self.0.len() == vars.len() && vars.iter().all(|v| mine.contains(v))
    }

    /// Variables in the order they are eliminated.
    pub fn elimination_order(&self) -> impl Iterator<Item = &Variable> {
        self.0.iter().rev()
    }

    pub fn rename(&self, map: &BTreeMap<Variable, Variable>) -> VariableOrdering {
        VariableOrdering(self.0.iter().map(|v| map.get(v).unwrap_or(v).clone()).collect())
    }
}

impl fmt::Display for VariableOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(">")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VariableOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the `x>y>z` encoding.
impl FromStr for VariableOrdering {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let vars = s
            .split('>')
            .map(|name| Variable::new(name.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let distinct: BTreeSet<&Variable> = vars.iter().collect();
        if distinct.len() != vars.len() {
            return Err(PolyError::DuplicateVariable);
        }
        Ok(VariableOrdering(vars))
    }
}

/// Projection polynomials by level. Level `k` involves only the first `k`
/// variables of the ordering; level `n` is the reduced input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionSet {
    ordering: VariableOrdering,
    // levels[k - 1] holds level k
    levels: Vec<Vec<Polynomial>>,
}

impl ProjectionSet {
    pub fn ordering(&self) -> &VariableOrdering {
        &self.ordering
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Level `k`, 1-based. Panics if `k` is out of range.
    pub fn level(&self, k: usize) -> &[Polynomial] {
        &self.levels[k - 1]
    }

    /// `(k, polynomials)` from level n down to level 1.
    pub fn levels(&self) -> impl Iterator<Item = (usize, &[Polynomial])> {
        self.levels.iter().enumerate().rev().map(|(i, l)| (i + 1, l.as_slice()))
    }
}

/// Canonicalizes, then drops constants and duplicates. The result is sorted.
pub fn reduce<I: IntoIterator<Item = Polynomial>>(polys: I) -> Vec<Polynomial> {
    polys
        .into_iter()
        .filter(|p| !p.is_constant())
        .map(|p| p.canonicalize())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// One projection step eliminating `v`: every coefficient in `v`, the
/// discriminant of each member of degree at least 2, and the resultant of each
/// pair of members that involve `v`. Members free of `v` pass through.
pub fn project_once(level: &[Polynomial], v: &Variable) -> Result<Vec<Polynomial>, ProjectionError> {
    if level.is_empty() {
        return Err(ProjectionError::EmptyLevel);
    }
    let mut out = Vec::new();
    let mut involved = Vec::new();
    for p in level {
        let d = p.degree_in(v);
        if d == 0 {
            out.push(p.clone());
            continue;
        }
        out.extend(p.coefficients_wrt(v));
        if d >= 2 {
            out.push(discriminant(p, v).expect("degree checked"));
        }
        involved.push(p);
    }
    for (i, p) in involved.iter().enumerate() {
        for q in &involved[i + 1..] {
            out.push(resultant(p, q, v).expect("members are nonzero"));
        }
    }
    Ok(reduce(out))
}

/// Projects `system` down to one variable along `ordering`.
pub fn full_projection(system: &PolySystem, ordering: &VariableOrdering) -> Result<ProjectionSet, ProjectionError> {
    if !ordering.is_permutation_of(system.variables()) {
        return Err(ProjectionError::OrderingMismatch {
            ordering: ordering.to_string(),
            variables: system
                .variables()
                .iter()
                .map(Variable::name)
                .collect::<Vec<_>>()
                .join(", "),
        });
    }
    let n = ordering.len();
    let mut top_down = Vec::with_capacity(n);
    top_down.push(reduce(system.polynomials().iter().cloned()));
    for k in (2..=n).rev() {
        let above = top_down.last().unwrap();
        let next = if above.is_empty() {
            Vec::new()
        } else {
            project_once(above, &ordering.variables()[k - 1])?
        };
        top_down.push(next);
    }
    top_down.reverse();
    Ok(ProjectionSet {
        ordering: ordering.clone(),
        levels: top_down,
    })
}
