//! Hilbert functions of `H^n(R)_j` (cokernel) and `H^{n-1}(R)_j` (kernel)
//! from the degree slices of a presentation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::groebner::{ideal_gb, initial_decomposition, krull_dimension, IdealDecomposition, TermOrder};
use crate::hilbert::HilbertFunction;
use crate::linalg::rank;
use crate::poly::{count_monomials, BiPoly};
use crate::presentation::{component_matrix, Presentation};
use crate::error::Result;

pub const DEFAULT_CAP: u32 = 60;

/// Dimensions of one x-degree slice of the presentation matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub degree: u32,
    pub rows: u64,
    pub cols: u64,
    pub rank: u64,
}

impl Slice {
    pub fn top(&self) -> u64 {
        self.rows - self.rank
    }

    pub fn sub(&self) -> u64 {
        self.cols - self.rank
    }

    /// The slice sizes match the free-module counts and
    /// `sub - cols + rows - top = 0`.
    pub fn ledger_holds(&self, p: &Presentation) -> bool {
        let i = self.degree as i64;
        let rows = count_monomials(p.m(), i) * p.target_basis().len() as u64;
        let cols = count_monomials(p.m(), i - p.shift() as i64) * p.source_basis().len() as u64;
        rows == self.rows
            && cols == self.cols
            && self.sub() as i64 - self.cols as i64 + self.rows as i64 - self.top() as i64 == 0
    }
}

pub fn slice(p: &Presentation, i: u32) -> Slice {
    let c = component_matrix(p, i);
    Slice {
        degree: i,
        rows: c.matrix.nrows() as u64,
        cols: c.matrix.ncols() as u64,
        rank: rank(&c.matrix) as u64,
    }
}

/// `dim_K H^n(R)_j` in x-degree `i`.
pub fn top_component_dimension(p: &Presentation, i: u32) -> u64 {
    slice(p, i).top()
}

/// `dim_K H^{n-1}(R)_j` in x-degree `i`.
pub fn sub_component_dimension(p: &Presentation, i: u32) -> u64 {
    slice(p, i).sub()
}

/// Memoizing slice cache for one presentation.
struct Scanner<'a> {
    p: &'a Presentation,
    slices: BTreeMap<u32, Slice>,
}

impl<'a> Scanner<'a> {
    fn new(p: &'a Presentation) -> Self {
        Scanner { p, slices: BTreeMap::new() }
    }

    fn get(&mut self, i: u32) -> Slice {
        *self.slices.entry(i).or_insert_with(|| slice(self.p, i))
    }

    /// The cokernel is generated in degree 0, so the first zero ends it.
    fn top(&mut self, cap: u32) -> HilbertFunction {
        let mut values = Vec::new();
        for i in 0..=cap {
            let v = self.get(i).top();
            values.push(v);
            if v == 0 {
                return HilbertFunction::finite(0, values);
            }
        }
        HilbertFunction::truncated(0, values)
    }

    fn first_nonzero_sub(&mut self, cap: u32) -> Option<u32> {
        (self.p.shift()..=cap).find(|&i| self.get(i).sub() > 0)
    }
}

/// Hilbert function of `H^n(R)_j`, scanning x-degrees from 0 until the
/// first zero or `cap`.
pub fn top_hilbert(p: &Presentation, cap: u32) -> HilbertFunction {
    Scanner::new(p).top(cap)
}

/// Least `i <= cap` with `H^{n-1}(R)_j` nonzero in degree `i`.
pub fn first_nonzero_sub_degree(p: &Presentation, cap: u32) -> Option<u32> {
    Scanner::new(p).first_nonzero_sub(cap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub cap: u32,
    /// Report the first nonzero degree of `H^{n-1}` as its regularity.
    pub linear_resolution: bool,
    /// Scan past the cokernel for the first nonzero degree of `H^{n-1}`.
    pub scan_sub: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { cap: DEFAULT_CAP, linear_resolution: false, scan_sub: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub j: i64,
    pub top: HilbertFunction,
    /// `H^{n-1}` on the window from the shift to the last computed degree;
    /// never finite length.
    pub sub: HilbertFunction,
    pub first_nonzero_sub: Option<u32>,
    pub slices: Vec<Slice>,
    pub ledger_ok: bool,
    /// Degrees whose slice breaks the rank-nullity ledger.
    pub ledger_violations: Vec<u32>,
    pub caveat: Option<String>,
}

pub fn cohomology_report(p: &Presentation, opts: ReportOptions) -> CohomologyReport {
    let mut sc = Scanner::new(p);
    let top = sc.top(opts.cap);
    let first = if opts.scan_sub { sc.first_nonzero_sub(opts.cap) } else { None };
    let shift = p.shift();
    let last = sc.slices.keys().next_back().copied().unwrap_or(0);
    let sub_values: Vec<u64> = (shift..=last.max(shift))
        .map(|i| sc.slices.get(&i).map(Slice::sub).unwrap_or(0))
        .collect();
    let mut sub = HilbertFunction::truncated(shift as i64, sub_values);
    if opts.linear_resolution {
        sub.regularity = first.map(i64::from);
    }
    let slices: Vec<Slice> = sc.slices.into_values().collect();
    let ledger_violations: Vec<u32> =
        slices.iter().filter(|s| !s.ledger_holds(p)).map(|s| s.degree).collect();
    let ledger_ok = ledger_violations.is_empty();
    CohomologyReport {
        j: p.j(),
        top,
        sub,
        first_nonzero_sub: first,
        slices,
        ledger_ok,
        ledger_violations,
        caveat: p.field().caveat().map(str::to_string),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    /// The pair compares `j - 1` against `j`.
    pub j: i64,
    pub pass: bool,
    pub first_violation: Option<i64>,
    /// One side hit the degree cap; only the common window was compared.
    pub window_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub hilbert: Vec<(i64, HilbertFunction)>,
    pub pairs: Vec<PairVerdict>,
}

impl MonotonicityReport {
    pub fn pass(&self) -> bool {
        self.pairs.iter().all(|p| p.pass)
    }
}

/// Compares `Hilb(H^n_{j-1}) >= Hilb(H^n_j)` coefficientwise for every
/// adjacent pair in `[j_lo, j_hi]`.
pub fn monotonicity_check(g: &BiPoly, j_lo: i64, j_hi: i64, cap: u32) -> Result<MonotonicityReport> {
    let mut hilbert = Vec::new();
    for j in j_lo..=j_hi {
        let p = Presentation::build(g, j)?;
        hilbert.push((j, top_hilbert(&p, cap)));
    }
    Ok(monotonicity_from(hilbert))
}

/// Pair verdicts for already computed Hilbert functions, sorted by `j`.
pub fn monotonicity_from(hilbert: Vec<(i64, HilbertFunction)>) -> MonotonicityReport {
    let pairs = hilbert
        .windows(2)
        .map(|w| {
            let (lower, upper) = (&w[0].1, &w[1].1);
            let window_only = !lower.finite_length || !upper.finite_length;
            let end = if window_only {
                lower.end().min(upper.end())
            } else {
                lower.end().max(upper.end())
            };
            let first_violation = (0..=end).find(|&i| lower.value(i) < upper.value(i));
            PairVerdict { j: w[1].0, pass: first_violation.is_none(), first_violation, window_only }
        })
        .collect();
    MonotonicityReport { hilbert, pairs }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionBoundReport {
    pub j: i64,
    /// `dim P_0/I(g)`, `None` for the unit ideal.
    pub ideal_dimension: Option<usize>,
    /// `max_u dim P_0/I_{j,u}`, `None` when the cokernel is zero.
    pub cokernel_dimension: Option<usize>,
    pub m_primary: bool,
    /// Only computed when `I(g)` is m-primary.
    pub finite_length: Option<bool>,
    pub pass: bool,
}

/// Checks `dim H^n(R)_j <= dim P_0/I(g)`, and finite length of
/// `H^n(R)_j` whenever `I(g)` is m-primary.
pub fn dimension_bound_check(g: &BiPoly, j: i64, cap: u32) -> Result<DimensionBoundReport> {
    let p = Presentation::build(g, j)?;
    let top = top_hilbert(&p, cap);
    Ok(dimension_bound_from(&p, &initial_decomposition(&p), &top))
}

/// Same check from an already computed decomposition and Hilbert function.
pub fn dimension_bound_from(
    p: &Presentation,
    decomposition: &IdealDecomposition,
    top: &HilbertFunction,
) -> DimensionBoundReport {
    let ideal = ideal_gb(&p.multiplier().coefficient_ideal(), TermOrder::GrevLex);
    let ideal_dimension = krull_dimension(&ideal);
    let m_primary = ideal_dimension == Some(0);
    let cokernel_dimension = decomposition.dimension();
    let finite_length = m_primary.then_some(top.finite_length);
    let pass = cokernel_dimension <= ideal_dimension && finite_length != Some(false);
    DimensionBoundReport { j: p.j(), ideal_dimension, cokernel_dimension, m_primary, finite_length, pass }
}
