//! Sparse multivariate polynomials over the x-variables (`P_0`) and over
//! both variable sets (`P = P_0[y_1..y_n]`).

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Exponent vector. The derived `Ord` is lexicographic with the first
/// variable largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 6]>);

pub type XMonomial = Monomial;
pub type YMonomial = Monomial;
pub type ZMonomial = Monomial;

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support as a bitmask over variable indices.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn with_first_incremented(&self) -> Monomial {
        let mut m = self.clone();
        m.0[0] += 1;
        m
    }

    /// Formats as `x1^2*x3`, or `1` for the empty monomial.
    pub fn fmt_with(&self, var: char) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{e}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// All monomials of degree `d` in `nvars` variables, lex-descending
/// (`v1^d` first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, rest: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(rest);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=rest).rev() {
            prefix.push(e);
            rec(prefix, nvars, rest - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
    out
}

/// `C(n, k)` for small nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials(nvars: usize, d: i64) -> u64 {
    if d < 0 || nvars == 0 {
        return u64::from(nvars == 0 && d == 0);
    }
    binomial(nvars as u64 + d as u64 - 1, nvars as u64 - 1)
}

/// A polynomial in `P_0 = K[x_1..x_m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize, field: FieldSpec) -> Self {
        Poly { nvars, field, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: Scalar, mono: Monomial) -> Self {
        let mut p = Poly::zero(mono.nvars(), c.field());
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize, field: FieldSpec) -> Self {
        Self::term(Scalar::one(field), Monomial::var(nvars, i))
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms(
        nvars: usize,
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Poly::zero(nvars, field);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: Scalar) {
        debug_assert_eq!(mono.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order of the monomials.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree if every term has the same degree; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-&Scalar::one(self.field))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.field);
        }
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars, self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }
}

pub type Bidegree = (u32, u32);

/// A polynomial in `P = K[x_1..x_m, y_1..y_n]` with `deg x_i = (1,0)` and
/// `deg y_i = (0,1)`. The bidegree is recorded at construction when every
/// term shares it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    m: usize,
    n: usize,
    field: FieldSpec,
    terms: BTreeMap<(XMonomial, YMonomial), Scalar>,
    bidegree: Option<Bidegree>,
}

impl BiPoly {
    pub fn from_terms(
        m: usize,
        n: usize,
        field: FieldSpec,
        terms: impl IntoIterator<Item = ((XMonomial, YMonomial), Scalar)>,
    ) -> Self {
        let mut map: BTreeMap<(XMonomial, YMonomial), Scalar> = BTreeMap::new();
        for (k, c) in terms {
            debug_assert_eq!(k.0.nvars(), m);
            debug_assert_eq!(k.1.nvars(), n);
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&k) {
                Some(e) => {
                    let s = &*e + &c;
                    if s.is_zero() {
                        map.remove(&k);
                    } else {
                        *e = s;
                    }
                }
                None => {
                    map.insert(k, c);
                }
            }
        }
        let bidegree = common_bidegree(&map).ok().flatten();
        BiPoly { m, n, field, terms: map, bidegree }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(XMonomial, YMonomial), &Scalar)> {
        self.terms.iter()
    }

    /// The common bidegree, if the polynomial is nonzero and bihomogeneous.
    pub fn bidegree(&self) -> Option<Bidegree> {
        self.bidegree
    }

    /// The bidegree, or the reason there is none.
    pub fn require_bidegree(&self) -> Result<Bidegree> {
        match common_bidegree(&self.terms)? {
            Some(b) => Ok(b),
            None => Err(Error::ZeroPolynomial),
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        BiPoly::from_terms(
            self.m,
            self.n,
            self.field,
            self.terms.iter().chain(&other.terms).map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((xa, ya), ca) in &self.terms {
            for ((xb, yb), cb) in &other.terms {
                products.push(((xa.mul(xb), ya.mul(yb)), ca * cb));
            }
        }
        BiPoly::from_terms(self.m, self.n, self.field, products)
    }

    /// `f^r` for a bihomogeneous `f` and `r >= 1`.
    pub fn power(&self, r: u32) -> Result<BiPoly> {
        if r == 0 {
            return Err(Error::InvalidParameter(
                "power r = 0 does not define a hypersurface".into(),
            ));
        }
        self.require_bidegree()?;
        let mut acc: Option<BiPoly> = None;
        let mut base = self.clone();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc.expect("r >= 1"))
    }

    /// The coefficients `f_beta` in `f = sum f_beta y^beta`, keyed by `y^beta`.
    pub fn y_coefficients(&self) -> BTreeMap<YMonomial, Poly> {
        let mut out: BTreeMap<YMonomial, Poly> = BTreeMap::new();
        for ((x, y), c) in &self.terms {
            out.entry(y.clone())
                .or_insert_with(|| Poly::zero(self.m, self.field))
                .add_term(x.clone(), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Generators of the ideal `I(f)` of all coefficients, ordered by
    /// descending y-monomial.
    pub fn coefficient_ideal(&self) -> Vec<Poly> {
        self.y_coefficients().into_values().rev().collect()
    }
}

fn common_bidegree(
    terms: &BTreeMap<(XMonomial, YMonomial), Scalar>,
) -> Result<Option<Bidegree>> {
    let mut it = terms.keys().rev().map(|(x, y)| (x.degree(), y.degree()));
    let Some(first) = it.next() else {
        return Ok(None);
    };
    for d in it {
        if d != first {
            return Err(Error::NotBihomogeneous { first, second: d });
        }
    }
    Ok(Some(first))
}

/// Free-function form of [`BiPoly::power`].
pub fn bipoly_power(f: &BiPoly, r: u32) -> Result<BiPoly> {
    f.power(r)
}

pub fn y_coefficients(f: &BiPoly) -> BTreeMap<YMonomial, Poly> {
    f.y_coefficients()
}

pub fn coefficient_ideal(f: &BiPoly) -> Vec<Poly> {
    f.coefficient_ideal()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.fmt_with('x'), c));
        write!(f, "{}", crate::parse::format_terms(terms))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|((x, y), c)| {
            let mono = match (x.is_one(), y.is_one()) {
                (true, true) => "1".to_string(),
                (false, true) => x.fmt_with('x'),
                (true, false) => y.fmt_with('y'),
                (false, false) => format!("{}*{}", x.fmt_with('x'), y.fmt_with('y')),
            };
            (mono, c)
        });
        write!(f, "{}", crate::parse::format_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration_is_lex_descending() {
        let b = monomials_of_degree(2, 2);
        let shown: Vec<_> = b.iter().map(|m| m.fmt_with('z')).collect();
        assert_eq!(shown, ["z1^2", "z1*z2", "z2^2"]);
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one(3)]);
        assert_eq!(monomials_of_degree(3, 4).len() as u64, count_monomials(3, 4));
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(count_monomials(2, -1), 0);
        assert_eq!(count_monomials(3, 2), 6);
    }
}
