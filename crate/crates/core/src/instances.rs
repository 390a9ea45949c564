//! Families of multipliers used by the verification suites.

use rand::Rng;

use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::groebner::is_m_primary;
use crate::poly::{monomials_of_degree, BiPoly, Bidegree, Monomial};

/// `λ_1 x_1 y_1 + ... + λ_n x_n y_n` with `m = n`.
pub fn lefschetz_form_with(lambdas: &[i64], field: FieldSpec) -> Result<BiPoly> {
    let n = lambdas.len();
    let terms = lambdas
        .iter()
        .enumerate()
        .map(|(i, &l)| ((Monomial::var(n, i), Monomial::var(n, i)), Scalar::from_i64(l, field)));
    let f = BiPoly::from_terms(n, n, field, terms);
    f.require_bidegree()?;
    Ok(f)
}

/// `x_1 y_1 + ... + x_n y_n`.
pub fn lefschetz_form(n: usize, field: FieldSpec) -> BiPoly {
    lefschetz_form_with(&vec![1; n], field).expect("nonzero form")
}

/// `(x_1 y_1 + ... + x_n y_n)^r`.
pub fn lefschetz_power(n: usize, r: u32, field: FieldSpec) -> Result<BiPoly> {
    lefschetz_form(n, field).power(r)
}

/// `Σ_{|β|=d} x_β y^β` in `m = C(n+d-1, d)` x-variables, numbered in
/// lex-descending order of `β`.
pub fn generic_dual(n: usize, d: u32, field: FieldSpec) -> BiPoly {
    let ys = monomials_of_degree(n, d);
    let m = ys.len();
    let terms = ys
        .into_iter()
        .enumerate()
        .map(|(i, y)| ((Monomial::var(m, i), y), Scalar::one(field)));
    BiPoly::from_terms(m, n, field, terms)
}

/// A bihomogeneous form where each monomial of the bidegree occurs with
/// probability 1/2 and a random nonzero coefficient.
pub fn random_bihomogeneous<R: Rng>(
    m: usize,
    n: usize,
    (a, b): Bidegree,
    field: FieldSpec,
    rng: &mut R,
) -> BiPoly {
    let xs = monomials_of_degree(m, a);
    let ys = monomials_of_degree(n, b);
    loop {
        let mut terms = Vec::new();
        for x in &xs {
            for y in &ys {
                if rng.gen_bool(0.5) {
                    terms.push(((x.clone(), y.clone()), random_unit(field, rng)));
                }
            }
        }
        let f = BiPoly::from_terms(m, n, field, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_unit<R: Rng>(field: FieldSpec, rng: &mut R) -> Scalar {
    let v = match field {
        FieldSpec::Rationals => {
            let v: i64 = rng.gen_range(1..=9);
            if rng.gen_bool(0.5) { -v } else { v }
        }
        FieldSpec::PrimeField(p) => rng.gen_range(1..p as i64),
    };
    Scalar::from_i64(v, field)
}

/// Resamples [`random_bihomogeneous`] until `I(f)` is m-primary; returns
/// the form and the number of draws.
pub fn random_m_primary<R: Rng>(
    m: usize,
    n: usize,
    bidegree: Bidegree,
    field: FieldSpec,
    rng: &mut R,
) -> (BiPoly, usize) {
    for attempt in 1.. {
        let f = random_bihomogeneous(m, n, bidegree, field, rng);
        if is_m_primary(&f.coefficient_ideal()) {
            return (f, attempt);
        }
    }
    unreachable!()
}
