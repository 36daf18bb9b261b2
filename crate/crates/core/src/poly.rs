//! Sparse multivariate polynomials over the integers.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic over the byte-wise order of variable names. The
//! greatest monomial is the leading term; rendering walks terms from the
//! leading term down.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// A named variable. Ordered byte-wise by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(Arc<str>);

impl Variable {
    pub fn new(name: &str) -> Result<Self, PolyError> {
        if is_identifier(name) {
            Ok(Variable(Arc::from(name)))
        } else {
            Err(PolyError::InvalidVariable(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A power product. Exponents are stored sorted by variable and are never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Variable, u32)>,
    total: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial {
            powers: vec![(v, 1)],
            total: 1,
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeated variables and dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        let powers: Vec<_> = map.into_iter().filter(|(_, e)| *e > 0).collect();
        let total = powers.iter().map(|(_, e)| e).sum();
        Monomial { powers, total }
    }

    pub fn total_degree(&self) -> u32 {
        self.total
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.powers
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> impl Iterator<Item = (&Variable, u32)> {
        self.powers.iter().map(|(v, e)| (v, *e))
    }

    pub fn contains(&self, v: &Variable) -> bool {
        self.exponent(v) > 0
    }

    /// Removes `v` from the monomial, returning the exponent it had.
    pub(crate) fn without(&self, v: &Variable) -> (Monomial, u32) {
        match self.powers.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => {
                let mut powers = self.powers.clone();
                let (_, e) = powers.remove(i);
                (
                    Monomial {
                        powers,
                        total: self.total - e,
                    },
                    e,
                )
            }
            Err(_) => (self.clone(), 0),
        }
    }

    pub(crate) fn with_exponent(&self, v: &Variable, e: u32) -> Monomial {
        let mut powers = self.powers.clone();
        let mut total = self.total;
        match powers.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => {
                total = total - powers[i].1 + e;
                if e == 0 {
                    powers.remove(i);
                } else {
                    powers[i].1 = e;
                }
            }
            Err(i) => {
                if e > 0 {
                    powers.insert(i, (v.clone(), e));
                    total += e;
                }
            }
        }
        Monomial { powers, total }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (&self.powers[i], &other.powers[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    powers.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    powers.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    powers.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        powers.extend_from_slice(&self.powers[i..]);
        powers.extend_from_slice(&other.powers[j..]);
        Monomial {
            powers,
            total: self.total + other.total,
        }
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut powers = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for (v, e) in &self.powers {
            if j < other.powers.len() && other.powers[j].0 == *v {
                let f = other.powers[j].1;
                if f > *e {
                    return None;
                }
                if f < *e {
                    powers.push((v.clone(), e - f));
                }
                j += 1;
            } else if j < other.powers.len() && other.powers[j].0 < *v {
                return None;
            } else {
                powers.push((v.clone(), *e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial {
            powers,
            total: self.total - other.total,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total.cmp(&other.total).then_with(|| {
            let (mut a, mut b) = (self.powers.iter(), other.powers.iter());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                        // the earlier variable carries a positive exponent on one side only
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            o => return o,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial with integer coefficients in any number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Polynomial::from_terms([(Monomial::one(), c.into())])
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::from_terms([(Monomial::var(v), BigInt::one())])
    }

    /// Sums the given terms; repeated monomials are combined and zero
    /// coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            add_term(&mut map, m, c);
        }
        Polynomial { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading (greatest) monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn involves(&self, v: &Variable) -> bool {
        self.terms.keys().any(|m| m.contains(v))
    }

    /// Highest exponent of `v` across all terms; 0 for the zero polynomial.
    pub fn degree_in(&self, v: &Variable) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Highest monomial total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Coefficients with respect to `v`: entry `i` is the coefficient of `v^i`.
    pub fn coefficients_wrt(&self, v: &Variable) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            add_term(&mut out[e as usize].terms, rest, c.clone());
        }
        out
    }

    /// Rebuilds `sum_i coeffs[i] * v^i`.
    pub fn from_coefficients(coeffs: &[Polynomial], v: &Variable) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let e = m.exponent(v) + i as u32;
                add_term(&mut terms, m.with_exponent(v, e), a.clone());
            }
        }
        Polynomial { terms }
    }

    pub fn derivative(&self, v: &Variable) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                add_term(&mut terms, m.with_exponent(v, e - 1), c * BigInt::from(e));
            }
        }
        Polynomial { terms }
    }

    /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content and makes the leading coefficient positive.
    pub fn canonicalize(&self) -> Polynomial {
        let Some(lc) = self.leading_coefficient() else {
            return Polynomial::zero();
        };
        let mut g = self.content();
        if lc.is_negative() {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division. Returns `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(dm)?;
            let (c, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let t = Polynomial::from_terms([(m.clone(), c.clone())]);
            rem = &rem - &(&t * divisor);
            quot.insert(m, c);
        }
        Some(Polynomial { terms: quot })
    }

    /// Substitutes variable names according to `map`; unmapped variables are kept.
    pub fn rename(&self, map: &BTreeMap<Variable, Variable>) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            let m = Monomial::from_powers(m.powers().map(|(v, e)| (map.get(v).unwrap_or(v).clone(), e)));
            (m, c.clone())
        }))
    }
}

fn add_term(map: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().rev().cmp(other.terms.iter().rev())
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial { terms }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), -c);
        }
        Polynomial { terms }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Polynomial { terms }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// A finite system of nonzero polynomials over a fixed variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    variables: Vec<Variable>,
    polynomials: Vec<Polynomial>,
}

impl PolySystem {
    /// `variables` may list variables that occur in no polynomial; it must
    /// cover every variable that does occur. Exact duplicate polynomials are
    /// collapsed, keeping the first occurrence.
    pub fn new(variables: Vec<Variable>, polynomials: Vec<Polynomial>) -> Result<Self, PolyError> {
        let vars: BTreeSet<Variable> = variables.iter().cloned().collect();
        if vars.len() != variables.len() {
            return Err(PolyError::DuplicateVariable);
        }
        if polynomials.is_empty() {
            return Err(PolyError::EmptySystem);
        }
        let mut seen = BTreeSet::new();
        let mut polys = Vec::with_capacity(polynomials.len());
        for p in polynomials {
            if p.is_zero() {
                return Err(PolyError::ZeroPolynomial);
            }
            if let Some(v) = p.variables().into_iter().find(|v| !vars.contains(v)) {
                return Err(PolyError::UndeclaredVariable(v.name().to_string()));
            }
            if seen.insert(p.clone()) {
                polys.push(p);
            }
        }
        Ok(PolySystem {
            variables: vars.into_iter().collect(),
            polynomials: polys,
        })
    }

    /// A system over exactly the variables occurring in `polynomials`.
    pub fn from_polynomials(polynomials: Vec<Polynomial>) -> Result<Self, PolyError> {
        let vars: BTreeSet<Variable> = polynomials.iter().flat_map(|p| p.variables()).collect();
        PolySystem::new(vars.into_iter().collect(), polynomials)
    }

    /// Variables in canonical name order.
    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    pub fn rename(&self, map: &BTreeMap<Variable, Variable>) -> Result<PolySystem, PolyError> {
        PolySystem::new(
            self.variables.iter().map(|v| map.get(v).unwrap_or(v).clone()).collect(),
            self.polynomials.iter().map(|p| p.rename(map)).collect(),
        )
    }
}
