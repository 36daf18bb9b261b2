//! Resultants and discriminants by the subresultant polynomial remainder
//! sequence.
//!
//! The sparse [`Polynomial`] is converted to a recursive dense form with the
//! eliminated variable outermost, the PRS runs there, and the result is
//! converted back.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::PolyError;
use crate::poly::{Polynomial, Variable};

/// Recursive dense polynomial. `Poly(level, cs)` is `sum cs[i] * x_level^i`
/// where every coefficient only involves variables of a greater level.
/// `cs` always has at least two entries and a nonzero last entry, so constants
/// (in every variable) are always `Int`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Rec {
    Int(BigInt),
    Poly(usize, Vec<Rec>),
}

impl Rec {
    fn zero() -> Rec {
        Rec::Int(BigInt::zero())
    }

    fn one() -> Rec {
        Rec::Int(BigInt::one())
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rec::Int(c) if c.is_zero())
    }

    fn level(&self) -> usize {
        match self {
            Rec::Int(_) => usize::MAX,
            Rec::Poly(l, _) => *l,
        }
    }

    fn build(level: usize, mut cs: Vec<Rec>) -> Rec {
        trim(&mut cs);
        match cs.len() {
            0 => Rec::zero(),
            1 => cs.pop().unwrap(),
            _ => Rec::Poly(level, cs),
        }
    }
}

fn trim(cs: &mut Vec<Rec>) {
    while cs.last().is_some_and(Rec::is_zero) {
        cs.pop();
    }
}

fn add(a: &Rec, b: &Rec) -> Rec {
    match (a, b) {
        (Rec::Int(x), Rec::Int(y)) => Rec::Int(x + y),
        (Rec::Poly(la, ca), Rec::Poly(lb, cb)) if la == lb => {
            let n = ca.len().max(cb.len());
            let cs = (0..n)
                .map(|i| match (ca.get(i), cb.get(i)) {
                    (Some(x), Some(y)) => add(x, y),
                    (Some(x), None) | (None, Some(x)) => x.clone(),
                    (None, None) => unreachable!(),
                })
                .collect();
            Rec::build(*la, cs)
        }
        _ if a.level() < b.level() => {
            let Rec::Poly(l, ca) = a else { unreachable!() };
            let mut cs = ca.clone();
            cs[0] = add(&cs[0], b);
            Rec::Poly(*l, cs)
        }
        _ => add(b, a),
    }
}

fn neg(a: &Rec) -> Rec {
    match a {
        Rec::Int(x) => Rec::Int(-x),
        Rec::Poly(l, cs) => Rec::Poly(*l, cs.iter().map(neg).collect()),
    }
}

fn sub(a: &Rec, b: &Rec) -> Rec {
    add(a, &neg(b))
}

fn mul(a: &Rec, b: &Rec) -> Rec {
    if a.is_zero() || b.is_zero() {
        return Rec::zero();
    }
    match (a, b) {
        (Rec::Int(x), Rec::Int(y)) => Rec::Int(x * y),
        (Rec::Poly(la, ca), Rec::Poly(lb, cb)) if la == lb => {
            let mut cs = vec![Rec::zero(); ca.len() + cb.len() - 1];
            for (i, x) in ca.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in cb.iter().enumerate() {
                    if !y.is_zero() {
                        cs[i + j] = add(&cs[i + j], &mul(x, y));
                    }
                }
            }
            Rec::Poly(*la, cs)
        }
        _ if a.level() < b.level() => {
            let Rec::Poly(l, ca) = a else { unreachable!() };
            Rec::Poly(*l, ca.iter().map(|c| mul(c, b)).collect())
        }
        _ => mul(b, a),
    }
}

fn pow(a: &Rec, e: usize) -> Rec {
    let mut acc = Rec::one();
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// `a / b`, or `None` if `b` does not divide `a`.
fn div_exact(a: &Rec, b: &Rec) -> Option<Rec> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(Rec::zero());
    }
    match (a, b) {
        (_, Rec::Int(d)) => div_int(a, d),
        (Rec::Int(_), Rec::Poly(..)) => None,
        (Rec::Poly(la, ca), Rec::Poly(lb, cb)) => {
            if la < lb {
                let cs = ca.iter().map(|c| div_exact(c, b)).collect::<Option<Vec<_>>>()?;
                return Some(Rec::Poly(*la, cs));
            }
            if la > lb {
                return None;
            }
            let db = cb.len() - 1;
            let lcb = cb.last().unwrap();
            let mut r = ca.clone();
            if r.len() - 1 < db {
                return None;
            }
            let mut q = vec![Rec::zero(); r.len() - db];
            while !r.is_empty() && r.len() > db {
                let k = r.len() - 1 - db;
                let qc = div_exact(r.last().unwrap(), lcb)?;
                for (i, c) in cb.iter().enumerate() {
                    r[i + k] = sub(&r[i + k], &mul(&qc, c));
                }
                q[k] = qc;
                trim(&mut r);
            }
            r.is_empty().then(|| Rec::build(*la, q))
        }
    }
}

fn div_int(a: &Rec, d: &BigInt) -> Option<Rec> {
    match a {
        Rec::Int(x) => {
            let (q, r) = x.div_rem(d);
            r.is_zero().then_some(Rec::Int(q))
        }
        Rec::Poly(l, cs) => Some(Rec::Poly(
            *l,
            cs.iter().map(|c| div_int(c, d)).collect::<Option<Vec<_>>>()?,
        )),
    }
}

fn to_rec(p: &Polynomial, vars: &[Variable], level: usize) -> Rec {
    if let Some(c) = p.as_constant() {
        return Rec::Int(c);
    }
    let l = (level..vars.len())
        .find(|&l| p.involves(&vars[l]))
        .expect("variable list covers the polynomial");
    let cs = p
        .coefficients_wrt(&vars[l])
        .iter()
        .map(|c| to_rec(c, vars, l + 1))
        .collect();
    Rec::Poly(l, cs)
}

fn from_rec(r: &Rec, vars: &[Variable]) -> Polynomial {
    match r {
        Rec::Int(c) => Polynomial::constant(c.clone()),
        Rec::Poly(l, cs) => {
            let coeffs: Vec<Polynomial> = cs.iter().map(|c| from_rec(c, vars)).collect();
            Polynomial::from_coefficients(&coeffs, &vars[*l])
        }
    }
}

/// Coefficients in the level-0 variable, lowest degree first.
fn coeffs0(r: Rec) -> Vec<Rec> {
    match r {
        Rec::Poly(0, cs) => cs,
        other if other.is_zero() => Vec::new(),
        other => vec![other],
    }
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials over the
/// coefficient ring: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &[Rec], b: &[Rec]) -> Vec<Rec> {
    let db = b.len() - 1;
    let lcb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut e = a.len().saturating_sub(db);
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = mul(c, lcb);
        }
        for (i, c) in b.iter().enumerate() {
            r[i + k] = sub(&r[i + k], &mul(&lr, c));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = pow(lcb, e);
        for c in r.iter_mut() {
            *c = mul(c, &f);
        }
    }
    r
}

/// Subresultant PRS resultant of two univariate polynomials over the
/// coefficient ring, both of degree at least 1.
fn resultant_prs(a: Vec<Rec>, b: Vec<Rec>) -> Rec {
    let (mut a, mut b) = (a, b);
    let mut negate = false;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            negate = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Rec::one();
    let mut h = Rec::one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        let divisor = mul(&g, &pow(&h, delta));
        b = r
            .iter()
            .map(|c| div_exact(c, &divisor).expect("subresultant division is exact"))
            .collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => div_exact(&pow(&g, delta), &pow(&h, delta - 1)).expect("exact"),
        };
        if b.len() <= 1 {
            break;
        }
    }
    let Some(last) = b.first() else {
        return Rec::zero();
    };
    let da = a.len() - 1;
    let res = if da == 1 {
        last.clone()
    } else {
        div_exact(&pow(last, da), &pow(&h, da - 1)).expect("exact")
    };
    if negate {
        neg(&res)
    } else {
        res
    }
}

/// Resultant of `p` and `q` with respect to `v`.
///
/// Equals the Sylvester determinant. When `q` has degree 0 in `v` the result is
/// `q^deg(p)` (symmetrically for `p`); when both have degree 0 it is 1.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: &Variable) -> Result<Polynomial, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroOperand);
    }
    let (dp, dq) = (p.degree_in(v), q.degree_in(v));
    match (dp, dq) {
        (0, 0) => return Ok(Polynomial::one()),
        (_, 0) => return Ok(q.pow(dp)),
        (0, _) => return Ok(p.pow(dq)),
        _ => {}
    }
    let others: BTreeSet<Variable> = p
        .variables()
        .into_iter()
        .chain(q.variables())
        .filter(|w| w != v)
        .collect();
    let vars: Vec<Variable> = std::iter::once(v.clone()).chain(others).collect();
    let a = coeffs0(to_rec(p, &vars, 0));
    let b = coeffs0(to_rec(q, &vars, 0));
    Ok(from_rec(&resultant_prs(a, b), &vars))
}

/// `resultant(p, dp/dv, v)`, without dividing out the leading coefficient.
pub fn discriminant(p: &Polynomial, v: &Variable) -> Result<Polynomial, PolyError> {
    if p.degree_in(v) < 2 {
        return Err(PolyError::DegreeTooLow);
    }
    resultant(p, &p.derivative(v), v)
}
