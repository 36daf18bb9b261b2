//! Dense univariate polynomials with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::poly::{Monomial, Polynomial, Variable};

/// `coefficients[i]` is the coefficient of `variable^i`. The last stored
/// coefficient is nonzero; the zero polynomial stores none.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    variable: Variable,
    coefficients: Vec<BigRational>,
}

impl UnivariatePolynomial {
    pub fn new(variable: Variable, mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        UnivariatePolynomial { variable, coefficients }
    }

    pub fn from_integers<I, C>(variable: Variable, coefficients: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        UnivariatePolynomial::new(
            variable,
            coefficients
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Views `p` as a polynomial in `v` alone; fails if another variable occurs.
    pub fn from_polynomial(p: &Polynomial, v: &Variable) -> Result<Self, PolyError> {
        if p.variables().iter().any(|w| w != v) {
            return Err(PolyError::NotUnivariate(p.to_string(), v.to_string()));
        }
        let cs = p
            .coefficients_wrt(v)
            .into_iter()
            .map(|c| BigRational::from_integer(c.as_constant().unwrap_or_default()))
            .collect();
        Ok(UnivariatePolynomial::new(v.clone(), cs))
    }

    /// The integer polynomial with the same coefficients; denominators must be 1.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.coefficients.len());
        for (i, c) in self.coefficients.iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            let m = Monomial::from_powers([(self.variable.clone(), i as u32)]);
            terms.push((m, c.to_integer()));
        }
        Some(Polynomial::from_terms(terms))
    }

    pub fn variable(&self) -> &Variable {
        &self.variable
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coefficients.last()
    }

    pub fn derivative(&self) -> Self {
        let cs = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        UnivariatePolynomial::new(self.variable.clone(), cs)
    }

    pub fn neg(&self) -> Self {
        UnivariatePolynomial {
            variable: self.variable.clone(),
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }

    /// Euclidean division over the rationals. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lc = divisor.leading_coefficient().expect("division by zero polynomial");
        let db = divisor.degree();
        let mut r = self.coefficients.clone();
        let mut q = vec![BigRational::zero(); (r.len() + 1).saturating_sub(divisor.coefficients.len())];
        while !r.is_empty() && r.len() > db {
            let k = r.len() - 1 - db;
            let f = r.last().unwrap() / lc;
            for (i, c) in divisor.coefficients.iter().enumerate() {
                r[i + k] -= &f * c;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (
            UnivariatePolynomial::new(self.variable.clone(), q),
            UnivariatePolynomial::new(self.variable.clone(), r),
        )
    }

    /// Scaled to integer coefficients with unit content and positive leading
    /// coefficient.
    pub fn primitive(&self) -> Self {
        let ints = primitive_integers(&self.coefficients);
        UnivariatePolynomial::from_integers(self.variable.clone(), ints)
    }
}

/// Integer coefficient vector proportional to `cs`, with content 1 and a
/// positive leading entry. Empty input stays empty.
pub(crate) fn primitive_integers(cs: &[BigRational]) -> Vec<BigInt> {
    let Some(lc) = cs.last() else {
        return Vec::new();
    };
    let den = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = cs.iter().map(|c| (c * &den).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if lc.is_negative() {
        g = -g;
    }
    for c in ints.iter_mut() {
        *c /= &g;
    }
    ints
}

/// Makes an integer vector primitive, keeping the sign of every entry.
pub(crate) fn remove_content(cs: &mut [BigInt]) {
    let g = cs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in cs.iter_mut() {
            *c /= &g;
        }
    }
}

/// Pseudo-remainder `|lc(b)|^(deg a - deg b + 1) * a mod b` of integer
/// polynomials: a positive multiple of the true remainder.
pub(crate) fn signed_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lcb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut remaining = a.len().saturating_sub(db) as u32;
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lcb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + k] -= &lr * c;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        remaining -= 1;
    }
    let f = num_traits::pow(lcb.clone(), remaining as usize);
    let negate = lcb.is_negative() && (a.len().saturating_sub(db) % 2 == 1);
    for c in r.iter_mut() {
        *c *= &f;
        if negate {
            *c = -&*c;
        }
    }
    r
}

/// Greatest common divisor, integer-primitive with positive leading coefficient.
pub fn univariate_gcd(p: &UnivariatePolynomial, q: &UnivariatePolynomial) -> Result<UnivariatePolynomial, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::GcdOfZeros);
    }
    let mut a = primitive_integers(&p.coefficients);
    let mut b = primitive_integers(&q.coefficients);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let mut r = signed_prem(&a, &b);
        remove_content(&mut r);
        a = b;
        b = r;
    }
    let g: Vec<BigRational> = a.into_iter().map(BigRational::from_integer).collect();
    Ok(UnivariatePolynomial::new(p.variable.clone(), g).primitive())
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match i {
                0 => String::new(),
                1 => self.variable.to_string(),
                _ => format!("{}^{i}", self.variable),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePolynomial({self})")
    }
}

#[cfg(test)]
pub(crate) fn upoly(cs: &[i64]) -> UnivariatePolynomial {
    UnivariatePolynomial::from_integers(Variable::new("x").unwrap(), cs.iter().copied())
}
