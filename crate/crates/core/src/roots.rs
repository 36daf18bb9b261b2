//! Counting distinct real roots with Sturm sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::RootsError;
use crate::univariate::{primitive_integers, remove_content, signed_prem, univariate_gcd, UnivariatePolynomial};

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn squarefree_part(p: &UnivariatePolynomial) -> Result<UnivariatePolynomial, RootsError> {
    if p.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(p.primitive());
    }
    let g = univariate_gcd(p, &p.derivative()).expect("p is nonzero");
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    Ok(q.primitive())
}

/// Canonical Sturm chain over the rationals: `p, p', -rem(p, p'), ...` up to
/// the first constant.
pub fn sturm_sequence(p: &UnivariatePolynomial) -> Result<Vec<UnivariatePolynomial>, RootsError> {
    if p.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    if p.degree() == 0 {
        return Ok(chain);
    }
    chain.push(p.derivative());
    while chain.last().unwrap().degree() > 0 {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    Ok(chain)
}

/// Number of distinct real roots of `p`.
pub fn count_distinct_real_roots(p: &UnivariatePolynomial) -> Result<usize, RootsError> {
    if p.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let mut chain = integer_sturm_chain(primitive_integers(p.coefficients()));
    if chain.last().unwrap().len() > 1 {
        // the chain ended at a nonconstant gcd(p, p'): p has repeated factors
        let sf = squarefree_part(p)?;
        chain = integer_sturm_chain(primitive_integers(sf.coefficients()));
    }
    let at_pos_inf = chain.iter().map(|c| c.last().unwrap().sign_int());
    let at_neg_inf = chain.iter().map(|c| {
        let s = c.last().unwrap().sign_int();
        if (c.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    });
    Ok(sign_variations(at_neg_inf) - sign_variations(at_pos_inf))
}

/// Sturm chain over the integers where every member is a positive multiple
/// of the corresponding member of [`sturm_sequence`]. Members are scaled down
/// by the subresultant factors, which divide exactly. The last member is a
/// multiple of `gcd(p, p')`.
fn integer_sturm_chain(p: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let mut dp: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    remove_content(&mut dp);
    let mut chain = vec![p, dp];
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    while chain.last().unwrap().len() > 1 {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let delta = a.len() - b.len();
        let r = signed_prem(a, b);
        if r.is_empty() {
            break;
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        let next: Vec<BigInt> = r.iter().map(|c| -(c / &divisor)).collect();
        debug_assert!(r.iter().all(|c| (c % &divisor).is_zero()));
        g = b.last().unwrap().abs();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
        };
        chain.push(next);
    }
    chain
}

trait SignInt {
    fn sign_int(&self) -> i8;
}

impl SignInt for BigInt {
    fn sign_int(&self) -> i8 {
        match self.cmp(&BigInt::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }
}

fn sign_variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs.filter(|s| *s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}
