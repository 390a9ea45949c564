//! Gröbner bases for ideals of `P_0` and for submodules of free
//! `P_0`-modules, and the initial-module decomposition
//! `ini(U_j) = ⊕_u I_{j,u} u` of a presentation.
//!
//! Module terms are ordered position-over-term: the position index (0 is
//! the largest z-monomial) dominates, ties are broken by the [`TermOrder`]
//! on x-monomials. Ideals are handled as rank-one modules.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::field::{FieldSpec, Scalar};
use crate::hilbert::HilbertFunction;
use crate::poly::{monomials_of_degree, Monomial, Poly, ZMonomial};
use crate::presentation::Presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum TermOrder {
    #[default]
    GrevLex,
    Lex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Position-over-term order with the z-basis positions fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ModuleOrder {
    pub term: TermOrder,
}

type Term = (usize, Monomial, Scalar);

/// Sparse module element, terms ascending so the leading term is last.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Vector(Vec<Term>);

impl Vector {
    fn lead(&self) -> Option<&Term> {
        self.0.last()
    }
}

#[derive(Debug, Clone, Copy)]
struct Engine {
    order: TermOrder,
    field: FieldSpec,
    nvars: usize,
}

impl Engine {
    fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    fn vector(&self, comps: &[Poly]) -> Vector {
        let mut terms: Vec<Term> = comps
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| p.terms().map(move |(m, c)| (pos, m.clone(), c.clone())))
            .collect();
        terms.sort_by(|a, b| self.cmp((a.0, &a.1), (b.0, &b.1)));
        Vector(terms)
    }

    fn components(&self, v: &Vector, rank: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.nvars, self.field); rank];
        for (pos, m, c) in &v.0 {
            out[*pos].add_term(m.clone(), c.clone());
        }
        out
    }

    /// `v - c * shift * g`.
    fn axpy(&self, v: &Vector, c: &Scalar, shift: &Monomial, g: &Vector) -> Vector {
        let neg = -c;
        let mut out = Vec::with_capacity(v.0.len() + g.0.len());
        let mut a = v.0.iter().peekable();
        let mut b = g.0.iter().map(|(p, m, x)| (*p, m.mul(shift), x * &neg)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => self.cmp((x.0, &x.1), (y.0, &y.1)),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = &x.2 + &y.2;
                    if !s.is_zero() {
                        out.push((x.0, x.1.clone(), s));
                    }
                }
            }
        }
        Vector(out)
    }

    fn monic(&self, mut v: Vector) -> Vector {
        if let Some(lc) = v.lead().map(|t| t.2.clone()) {
            if !lc.is_one() {
                let inv = lc.inv().unwrap();
                for t in &mut v.0 {
                    t.2 = &t.2 * &inv;
                }
            }
        }
        v
    }

    fn find_divisor<'a>(
        &self,
        basis: &'a [Vector],
        by_pos: &HashMap<usize, Vec<usize>>,
        pos: usize,
        mono: &Monomial,
        skip: Option<usize>,
    ) -> Option<&'a Vector> {
        by_pos.get(&pos)?.iter().copied().filter(|&i| Some(i) != skip).find_map(|i| {
            let lead = basis[i].lead().unwrap();
            lead.1.divides(mono).then_some(&basis[i])
        })
    }

    /// Reduces `v` modulo `basis`; `full` also reduces below the lead.
    fn reduce(
        &self,
        mut v: Vector,
        basis: &[Vector],
        by_pos: &HashMap<usize, Vec<usize>>,
        full: bool,
        skip: Option<usize>,
    ) -> Vector {
        let mut done: Vec<Term> = Vec::new();
        while let Some((pos, mono, c)) = v.lead().cloned() {
            match self.find_divisor(basis, by_pos, pos, &mono, skip) {
                Some(g) => {
                    let (_, gm, gc) = g.lead().unwrap();
                    let factor = &c * &gc.inv().unwrap();
                    let shift = gm.quotient_of(&mono).unwrap();
                    v = self.axpy(&v, &factor, &shift, g);
                }
                None if full => done.push(v.0.pop().unwrap()),
                None => break,
            }
        }
        if full {
            done.reverse();
            v.0.extend(done);
        }
        v
    }

    fn s_vector(&self, f: &Vector, g: &Vector) -> Vector {
        let (_, fm, fc) = f.lead().unwrap();
        let (_, gm, gc) = g.lead().unwrap();
        let l = fm.lcm(gm);
        let f_shift = fm.quotient_of(&l).unwrap();
        let g_shift = gm.quotient_of(&l).unwrap();
        let zero = Vector(Vec::new());
        let scaled_f = self.axpy(&zero, &-&fc.inv().unwrap(), &f_shift, f);
        self.axpy(&scaled_f, &gc.inv().unwrap(), &g_shift, g)
    }

    /// Buchberger with normal selection; the coprime criterion is only
    /// applied in rank one, where it is valid.
    fn buchberger(&self, gens: Vec<Vector>, rank: usize) -> Vec<Vector> {
        let mut basis: Vec<Vector> = Vec::new();
        let mut by_pos: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();

        let insert = |h: Vector,
                      basis: &mut Vec<Vector>,
                      by_pos: &mut HashMap<usize, Vec<usize>>,
                      pending: &mut BTreeSet<(u32, usize, usize)>| {
            let h = self.monic(h);
            let idx = basis.len();
            let (pos, hm, _) = h.lead().unwrap().clone();
            for &i in by_pos.get(&pos).map(Vec::as_slice).unwrap_or(&[]) {
                let gm = &basis[i].lead().unwrap().1;
                if rank == 1 && gm.is_coprime(&hm) {
                    continue;
                }
                pending.insert((gm.lcm(&hm).degree(), i, idx));
            }
            by_pos.entry(pos).or_default().push(idx);
            basis.push(h);
        };

        for g in gens {
            let r = self.reduce(g, &basis, &by_pos, false, None);
            if r.lead().is_some() {
                insert(r, &mut basis, &mut by_pos, &mut pending);
            }
        }

        while let Some(pair) = pending.pop_first() {
            let (_, i, j) = pair;
            let (pos, im, _) = basis[i].lead().unwrap();
            let jm = &basis[j].lead().unwrap().1;
            let l = im.lcm(jm);
            let chain = by_pos[pos].iter().any(|&k| {
                k != i
                    && k != j
                    && basis[k].lead().unwrap().1.divides(&l)
                    && !pending.contains(&pair_key(&basis, i, k))
                    && !pending.contains(&pair_key(&basis, j, k))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis, &by_pos, false, None);
            if r.lead().is_some() {
                insert(r, &mut basis, &mut by_pos, &mut pending);
            }
        }
        self.interreduce(basis)
    }

    /// Minimal, fully reduced, monic, canonically sorted basis.
    fn interreduce(&self, basis: Vec<Vector>) -> Vec<Vector> {
        let leads: Vec<(usize, Monomial)> =
            basis.iter().map(|v| (v.lead().unwrap().0, v.lead().unwrap().1.clone())).collect();
        let keep: Vec<usize> = (0..basis.len())
            .filter(|&i| {
                !(0..basis.len()).any(|k| {
                    k != i
                        && leads[k].0 == leads[i].0
                        && leads[k].1.divides(&leads[i].1)
                        && (leads[k].1 != leads[i].1 || k < i)
                })
            })
            .collect();
        let minimal: Vec<Vector> = keep.iter().map(|&i| basis[i].clone()).collect();
        let mut by_pos: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, v) in minimal.iter().enumerate() {
            by_pos.entry(v.lead().unwrap().0).or_default().push(i);
        }
        let mut out: Vec<Vector> = (0..minimal.len())
            .map(|i| {
                let v = minimal[i].clone();
                let lead = v.0.last().cloned().unwrap();
                let tail = Vector(v.0[..v.0.len() - 1].to_vec());
                let mut red = self.reduce(tail, &minimal, &by_pos, true, Some(i));
                red.0.push(lead);
                self.monic(red)
            })
            .collect();
        out.sort_by(|a, b| self.canonical_cmp(a, b));
        out
    }

    /// Position ascending, then degree ascending, then larger lead first.
    fn canonical_cmp(&self, a: &Vector, b: &Vector) -> Ordering {
        let (pa, ma, _) = a.lead().unwrap();
        let (pb, mb, _) = b.lead().unwrap();
        pa.cmp(pb)
            .then(ma.degree().cmp(&mb.degree()))
            .then_with(|| self.order.cmp(mb, ma))
    }
}

fn pair_key(basis: &[Vector], a: usize, b: usize) -> (u32, usize, usize) {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    let l = basis[i].lead().unwrap().1.lcm(&basis[j].lead().unwrap().1);
    (l.degree(), i, j)
}

/// Reduced Gröbner basis of an ideal of `P_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGB {
    nvars: usize,
    field: FieldSpec,
    order: TermOrder,
    generators: Vec<Poly>,
    basis: Vec<Poly>,
}

impl IdealGB {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Monic, reduced; sorted by degree, larger leading monomial first.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|p| p.degree() == Some(0))
    }

    fn engine(&self) -> Engine {
        Engine { order: self.order, field: self.field, nvars: self.nvars }
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let e = self.engine();
        self.basis
            .iter()
            .map(|p| e.vector(std::slice::from_ref(p)).lead().unwrap().1.clone())
            .collect()
    }

    /// Normal form of `p`.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let e = self.engine();
        let basis: Vec<Vector> = self.basis.iter().map(|b| e.vector(std::slice::from_ref(b))).collect();
        let by_pos = HashMap::from([(0, (0..basis.len()).collect())]);
        let r = e.reduce(e.vector(std::slice::from_ref(p)), &basis, &by_pos, true, None);
        e.components(&r, 1).pop().unwrap()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let e = self.engine();
        let basis: Vec<Vector> = self.basis.iter().map(|b| e.vector(std::slice::from_ref(b))).collect();
        let by_pos = HashMap::from([(0, (0..basis.len()).collect())]);
        (0..basis.len()).all(|i| {
            (i + 1..basis.len()).all(|j| {
                let s = e.s_vector(&basis[i], &basis[j]);
                e.reduce(s, &basis, &by_pos, true, None).0.is_empty()
            })
        })
    }

    pub fn krull_dimension(&self) -> Option<usize> {
        krull_dimension(self)
    }

    pub fn quotient_hilbert(&self, cap: u32) -> HilbertFunction {
        quotient_hilbert(self, cap)
    }

    /// Generators as strings; over `Q` scaled to primitive integer
    /// polynomials with positive leading coefficient.
    pub fn display_basis(&self) -> Vec<String> {
        self.basis.iter().map(|p| primitive_form(p, self.order).to_string()).collect()
    }
}

fn primitive_form(p: &Poly, order: TermOrder) -> Poly {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    if p.field() != FieldSpec::Rationals || p.is_zero() {
        return p.clone();
    }
    let mut lcm = BigInt::one();
    let mut gcd = BigInt::zero();
    for (_, c) in p.terms() {
        let q = c.as_rational().unwrap();
        lcm = lcm.lcm(q.denom());
        gcd = gcd.gcd(q.numer());
    }
    let lead = p.terms().max_by(|a, b| order.cmp(a.0, b.0)).unwrap().1;
    let sign = if lead.as_rational().unwrap().is_negative() { -1 } else { 1 };
    let factor = num_rational::BigRational::new(lcm * sign, gcd.abs());
    p.scale(&Scalar::Rational(factor))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// `nvars` and `field` are taken from the generators, which must be
/// nonempty; use [`IdealGB::zero`] for the zero ideal.
pub fn ideal_gb(gens: &[Poly], order: TermOrder) -> IdealGB {
    let first = gens.first().expect("at least one generator");
    IdealGB::new(first.nvars(), first.field(), gens, order)
}

impl IdealGB {
    pub fn new(nvars: usize, field: FieldSpec, gens: &[Poly], order: TermOrder) -> Self {
        let e = Engine { order, field, nvars };
        let vecs = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| e.vector(std::slice::from_ref(g)))
            .collect();
        let basis = e
            .buchberger(vecs, 1)
            .into_iter()
            .map(|v| e.components(&v, 1).pop().unwrap())
            .collect();
        IdealGB { nvars, field, order, generators: gens.to_vec(), basis }
    }

    pub fn zero(nvars: usize, field: FieldSpec, order: TermOrder) -> Self {
        IdealGB::new(nvars, field, &[], order)
    }
}

/// Whether two ideals are equal.
pub fn ideal_equal(a: &IdealGB, b: &IdealGB) -> bool {
    assert_eq!(a.nvars, b.nvars);
    assert_eq!(a.field, b.field);
    if a.order == b.order {
        return a.basis == b.basis;
    }
    a.basis.iter().all(|p| b.contains(p)) && b.basis.iter().all(|p| a.contains(p))
}

/// Gröbner basis of a submodule of a free module of rank `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleGB {
    rank: usize,
    nvars: usize,
    field: FieldSpec,
    order: ModuleOrder,
    elements: Vec<Vec<Poly>>,
    leads: Vec<(usize, Monomial)>,
}

impl ModuleGB {
    /// Basis of the submodule generated by dense coordinate vectors.
    pub fn new(
        rank: usize,
        nvars: usize,
        field: FieldSpec,
        gens: &[Vec<Poly>],
        order: ModuleOrder,
    ) -> Self {
        let e = Engine { order: order.term, field, nvars };
        let vecs: Vec<Vector> = gens
            .iter()
            .map(|g| {
                assert_eq!(g.len(), rank);
                e.vector(g)
            })
            .filter(|v| v.lead().is_some())
            .collect();
        let basis = e.buchberger(vecs, rank);
        let leads = basis.iter().map(|v| {
            let (p, m, _) = v.lead().unwrap();
            (*p, m.clone())
        });
        ModuleGB {
            rank,
            nvars,
            field,
            order,
            leads: leads.collect(),
            elements: basis.iter().map(|v| e.components(v, rank)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[Vec<Poly>] {
        &self.elements
    }

    /// `(position, leading x-monomial)` of each element.
    pub fn leads(&self) -> &[(usize, Monomial)] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn engine(&self) -> Engine {
        Engine { order: self.order.term, field: self.field, nvars: self.nvars }
    }

    fn vectors(&self) -> (Vec<Vector>, HashMap<usize, Vec<usize>>) {
        let e = self.engine();
        let basis: Vec<Vector> = self.elements.iter().map(|v| e.vector(v)).collect();
        let mut by_pos: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, (p, _)) in self.leads.iter().enumerate() {
            by_pos.entry(*p).or_default().push(i);
        }
        (basis, by_pos)
    }

    /// Normal form of a coordinate vector.
    pub fn reduce(&self, v: &[Poly]) -> Vec<Poly> {
        let e = self.engine();
        let (basis, by_pos) = self.vectors();
        let r = e.reduce(e.vector(v), &basis, &by_pos, true, None);
        e.components(&r, self.rank)
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        self.reduce(v).iter().all(Poly::is_zero)
    }

    /// Every S-vector between elements with equal lead position reduces
    /// to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let e = self.engine();
        let (basis, by_pos) = self.vectors();
        by_pos.values().all(|idx| {
            idx.iter().enumerate().all(|(a, &i)| {
                idx[a + 1..].iter().all(|&j| {
                    let s = e.s_vector(&basis[i], &basis[j]);
                    e.reduce(s, &basis, &by_pos, true, None).0.is_empty()
                })
            })
        })
    }
}

/// Module Gröbner basis of the column module `U_j` of a presentation.
pub fn module_gb(p: &Presentation, order: ModuleOrder) -> ModuleGB {
    let cols: Vec<Vec<Poly>> = (0..p.source_basis().len()).map(|c| p.column_vector(c)).collect();
    ModuleGB::new(p.target_basis().len(), p.m(), p.field(), &cols, order)
}

/// `ini(U_j) = ⊕_u I_{j,u} u`, one entry per target basis monomial in
/// descending order, including zero and unit ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecomposition {
    pub j: i64,
    pub entries: Vec<(ZMonomial, IdealGB)>,
}

impl IdealDecomposition {
    pub fn get(&self, u: &ZMonomial) -> Option<&IdealGB> {
        self.entries.iter().find(|(v, _)| v == u).map(|(_, i)| i)
    }

    /// `Σ_u Hilb(P_0 / I_{j,u})`.
    pub fn hilbert(&self, cap: u32) -> HilbertFunction {
        let parts: Vec<HilbertFunction> =
            self.entries.iter().map(|(_, i)| quotient_hilbert(i, cap)).collect();
        HilbertFunction::sum(&parts, 0)
    }

    /// Krull dimension of `F_j / ini(U_j)`, `None` when it is zero.
    pub fn dimension(&self) -> Option<usize> {
        self.entries.iter().filter_map(|(_, i)| krull_dimension(i)).max()
    }
}

pub fn initial_decomposition(p: &Presentation) -> IdealDecomposition {
    initial_decomposition_with(p, ModuleOrder::default())
}

/// With position-over-term, basis elements led at position `u` span the
/// elements of `U_j` supported at or below `u`; their `u`-coordinates
/// generate `I_{j,u}`.
pub fn initial_decomposition_with(p: &Presentation, order: ModuleOrder) -> IdealDecomposition {
    let gb = module_gb(p, order);
    let entries = p
        .target_basis()
        .monomials()
        .iter()
        .enumerate()
        .map(|(pos, u)| {
            let gens: Vec<Poly> = gb
                .elements
                .iter()
                .zip(&gb.leads)
                .filter(|(_, (lp, _))| *lp == pos)
                .map(|(v, _)| v[pos].clone())
                .collect();
            (u.clone(), IdealGB::new(p.m(), p.field(), &gens, order.term))
        })
        .collect();
    IdealDecomposition { j: p.j(), entries }
}

/// `dim_K (P_0/I)_d` for `d = 0, 1, ...` by counting standard monomials,
/// stopping at the first zero or at `cap`.
pub fn quotient_hilbert(i: &IdealGB, cap: u32) -> HilbertFunction {
    let leads = i.leading_monomials();
    let mut values = Vec::new();
    for d in 0..=cap {
        let count = monomials_of_degree(i.nvars, d)
            .iter()
            .filter(|x| !leads.iter().any(|l| l.divides(x)))
            .count() as u64;
        values.push(count);
        if count == 0 {
            return HilbertFunction::finite(0, values);
        }
    }
    HilbertFunction::truncated(0, values)
}

/// Krull dimension of `P_0/I`, `None` for the unit ideal. Computed on the
/// leading-term ideal as the largest set of variables containing the
/// support of no leading monomial.
pub fn krull_dimension(i: &IdealGB) -> Option<usize> {
    if i.is_unit() {
        return None;
    }
    assert!(i.nvars <= 63, "too many variables for subset enumeration");
    let masks: Vec<u64> = i.leading_monomials().iter().map(Monomial::support_mask).collect();
    (0u64..1 << i.nvars)
        .filter(|s| masks.iter().all(|m| m & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
}

/// Whether the ideal generated by `gens` is primary to `(x_1..x_m)`.
pub fn is_m_primary(gens: &[Poly]) -> bool {
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return false;
    }
    krull_dimension(&ideal_gb(&gens, TermOrder::GrevLex)) == Some(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_bipoly, parse_poly};
    use crate::presentation::build_presentation;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn polys(m: usize, xs: &[&str]) -> Vec<Poly> {
        xs.iter().map(|s| parse_poly(s, m, Q).unwrap()).collect()
    }

    fn gb(m: usize, xs: &[&str]) -> IdealGB {
        ideal_gb(&polys(m, xs), TermOrder::GrevLex)
    }

    #[test]
    fn grevlex_and_lex() {
        let a = Monomial::from_exponents(&[1, 0, 1]);
        let b = Monomial::from_exponents(&[0, 2, 0]);
        // x1*x3 < x2^2 in grevlex, > in lex
        assert_eq!(TermOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(TermOrder::Lex.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn small_ideal_bases() {
        assert_eq!(gb(2, &["x1", "x2"]).display_basis(), ["x1", "x2"]);
        assert_eq!(gb(2, &["x1 + x2", "x1 - x2"]).display_basis(), ["x1", "x2"]);
        assert_eq!(gb(2, &["x2", "x1^2"]).display_basis(), ["x2", "x1^2"]);
        assert!(gb(2, &["x1^2 - x2", "x1*x2 - 1"]).satisfies_buchberger_criterion());
    }

    #[test]
    fn equality_of_ideals() {
        assert!(ideal_equal(&gb(2, &["x1", "x2"]), &gb(2, &["x1 + x2", "x1 - x2"])));
        assert!(!ideal_equal(&gb(2, &["x1"]), &gb(2, &["x1^2"])));
        let lex = ideal_gb(&polys(2, &["x1 + x2", "x1 - x2"]), TermOrder::Lex);
        assert!(ideal_equal(&gb(2, &["x1", "x2"]), &lex));
    }

    #[test]
    fn quotient_hilbert_functions() {
        assert_eq!(gb(2, &["x1", "x2"]).quotient_hilbert(10).values, [1, 0]);
        assert_eq!(gb(2, &["x2", "x1^2"]).quotient_hilbert(10).values, [1, 1, 0]);
        let full = IdealGB::zero(2, Q, TermOrder::GrevLex).quotient_hilbert(4);
        assert_eq!(full.values, [1, 2, 3, 4, 5]);
        assert!(!full.finite_length);
    }

    #[test]
    fn dimensions() {
        assert_eq!(gb(2, &["x1", "x2"]).krull_dimension(), Some(0));
        assert_eq!(gb(2, &["x1^2"]).krull_dimension(), Some(1));
        assert_eq!(gb(2, &["x1^2", "x1*x2"]).krull_dimension(), Some(1));
        assert_eq!(gb(2, &["x1 + 1"]).krull_dimension(), Some(1));
        assert_eq!(gb(2, &["x1 + 1", "x1"]).krull_dimension(), None);
        assert!(is_m_primary(&polys(2, &["x1", "x2"])));
        assert!(!is_m_primary(&polys(2, &["x1"])));
        assert!(is_m_primary(&polys(2, &["x1^2", "2*x1*x2", "x2^2"])));
    }

    #[test]
    fn decomposition_of_diagonal_form() {
        let f = parse_bipoly("x1*y1 + x2*y2", 2, 2, Q).unwrap();
        let p = build_presentation(&f, -3).unwrap();
        let mgb = module_gb(&p, ModuleOrder::default());
        assert!(mgb.satisfies_buchberger_criterion());
        let shown: Vec<(usize, String)> =
            mgb.leads().iter().map(|(pos, m)| (*pos, m.fmt_with('x'))).collect();
        assert_eq!(
            shown,
            [(0, "x1".into()), (0, "x2".into()), (1, "x2".into()), (1, "x1^2".into())]
        );
        let dec = initial_decomposition(&p);
        assert_eq!(dec.entries[0].1.display_basis(), ["x1", "x2"]);
        assert_eq!(dec.entries[1].1.display_basis(), ["x2", "x1^2"]);
        assert_eq!(dec.hilbert(20).values, [2, 1, 0]);
    }

    #[test]
    fn trivial_modules() {
        let x1 = parse_poly("x1", 2, Q).unwrap();
        let zero = Poly::zero(2, Q);
        let single = ModuleGB::new(2, 2, Q, &[vec![x1.clone(), zero.clone()]], ModuleOrder::default());
        assert_eq!(single.elements(), &[vec![x1, zero.clone()]]);
        let empty = ModuleGB::new(2, 2, Q, &[], ModuleOrder::default());
        assert!(empty.is_empty());
        assert!(empty.contains(&[zero.clone(), zero]));
    }
}
