//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use cadorder::{Monomial, PolySystem, Polynomial, Variable};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::Rng;

pub fn var(name: &str) -> Variable {
    Variable::new(name).unwrap()
}

pub fn int(n: i64) -> Polynomial {
    Polynomial::constant(n)
}

/// Random polynomial over `vars` with total degree at most `max_degree`,
/// up to `max_terms` terms and coefficients in `[-9, 9]`.
pub fn random_poly(rng: &mut StdRng, vars: &[Variable], max_degree: u32, max_terms: usize) -> Polynomial {
    let n_terms = rng.gen_range(1..=max_terms);
    let terms = (0..n_terms).map(|_| {
        let mut budget = rng.gen_range(0..=max_degree);
        let mut powers = Vec::new();
        for v in vars {
            if budget == 0 {
                break;
            }
            let e = rng.gen_range(0..=budget);
            budget -= e;
            powers.push((v.clone(), e));
        }
        // shuffle which variable gets the leftover degree
        if budget > 0 {
            let i = rng.gen_range(0..vars.len());
            powers.push((vars[i].clone(), budget));
        }
        let c = loop {
            let c: i64 = rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        (Monomial::from_powers(powers), BigInt::from(c))
    });
    Polynomial::from_terms(terms.collect::<Vec<_>>())
}

/// Like [`random_poly`] but never zero and of degree at least 1 in `v`.
pub fn random_poly_in(
    rng: &mut StdRng,
    vars: &[Variable],
    v: &Variable,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let p = random_poly(rng, vars, max_degree, max_terms);
        if p.degree_in(v) >= 1 {
            return p;
        }
    }
}

/// Random system over `vars` in which every variable occurs.
pub fn random_system(
    rng: &mut StdRng,
    vars: &[Variable],
    max_polys: usize,
    max_degree: u32,
    max_terms: usize,
) -> PolySystem {
    loop {
        let n = rng.gen_range(1..=max_polys);
        let polys: Vec<Polynomial> = (0..n)
            .map(|_| random_poly(rng, vars, max_degree, max_terms))
            .filter(|p| !p.is_zero())
            .collect();
        if polys.is_empty() {
            continue;
        }
        if let Ok(s) = PolySystem::new(vars.to_vec(), polys) {
            let used: std::collections::BTreeSet<Variable> =
                s.polynomials().iter().flat_map(|p| p.variables()).collect();
            if used.len() == vars.len() {
                return s;
            }
        }
    }
}

/// Sylvester matrix of `p` and `q` with respect to `v`.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial, v: &Variable) -> Vec<Vec<Polynomial>> {
    let m = p.degree_in(v) as usize;
    let n = q.degree_in(v) as usize;
    let size = m + n;
    let pc: Vec<Polynomial> = p.coefficients_wrt(v).into_iter().rev().collect();
    let qc: Vec<Polynomial> = q.coefficients_wrt(v).into_iter().rev().collect();
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Polynomial::zero(); size];
        for (i, c) in pc.iter().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Polynomial::zero(); size];
        for (i, c) in qc.iter().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return int(1);
    }
    let mut negate = false;
    let mut prev = int(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

pub fn sylvester_resultant(p: &Polynomial, q: &Polynomial, v: &Variable) -> Polynomial {
    bareiss_determinant(sylvester_matrix(p, q, v))
}

/// `prod (x - a_i)` times `prod (x^2 + b x + c)`, as integer coefficients low to high.
pub fn product_of_factors(linear_roots: &[i64], quadratics: &[(i64, i64)]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(1)];
    let mul = |acc: &[BigInt], f: &[i64]| {
        let mut out = vec![BigInt::zero(); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                out[i + j] += a * BigInt::from(*b);
            }
        }
        out
    };
    for a in linear_roots {
        acc = mul(&acc, &[-a, 1]);
    }
    for (b, c) in quadratics {
        acc = mul(&acc, &[*c, *b, 1]);
    }
    acc
}

/// Quadratic `x^2 + b x + c` with no real roots (`b^2 < 4c`), entries in [-9, 9].
pub fn rootless_quadratic(rng: &mut StdRng) -> (i64, i64) {
    loop {
        let b = rng.gen_range(-9..=9);
        let c = rng.gen_range(-9..=9);
        if b * b < 4 * c {
            return (b, c);
        }
    }
}

/// `k` distinct integers in [-9, 9].
pub fn distinct_roots(rng: &mut StdRng, k: usize) -> Vec<i64> {
    let mut roots = Vec::with_capacity(k);
    while roots.len() < k {
        let a = rng.gen_range(-9..=9);
        if !roots.contains(&a) {
            roots.push(a);
        }
    }
    roots
}

/// Random system over 2 or 3 of `x, y, z` in the size range the invariance
/// suites use (total degree at most 4).
pub fn small_system(seed: u64) -> PolySystem {
    use rand::SeedableRng;
    let mut rng = StdRng::seed_from_u64(seed);
    let all = [var("x"), var("y"), var("z")];
    let n = rng.gen_range(2..=3);
    random_system(&mut rng, &all[..n], 2, 4, 3)
}

/// The variable renaming sending `vars[i]` to `vars[perm[i]]`.
pub fn renaming(vars: &[Variable], perm: &[usize]) -> std::collections::BTreeMap<Variable, Variable> {
    vars.iter()
        .cloned()
        .zip(perm.iter().map(|&i| vars[i].clone()))
        .collect()
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..n {
            let mut p = rest.clone();
            p.insert(i, n - 1);
            out.push(p);
        }
    }
    out
}
