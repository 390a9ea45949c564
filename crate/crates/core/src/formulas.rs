//! Closed forms for the diagonal family `f = (λ_1 x_1 y_1 + ... + λ_n x_n y_n)^r`
//! and the linear regularity bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cohomology::top_hilbert;
use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::poly::{count_monomials, BiPoly};
use crate::presentation::Presentation;

/// `C(a, b)` in arbitrary precision; zero for `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::InvalidParameter(format!("binomial with negative upper index {a}")));
    }
    if b < 0 || b > a {
        return Ok(BigInt::zero());
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc = acc * BigInt::from(a - t) / BigInt::from(t + 1);
    }
    Ok(acc)
}

pub fn factorial(a: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::InvalidParameter(format!("factorial of {a}")));
    }
    Ok((1..=a).fold(BigInt::one(), |acc, t| acc * BigInt::from(t)))
}

fn check_family(n: usize, r: u32, j: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let k = -(n as i64) - j;
    if k < 0 {
        return Err(Error::ComponentVanishes { j, n });
    }
    Ok(k)
}

/// `reg H^n(R)_j = -n - j + r - 1`.
pub fn lefschetz_regularity(n: usize, r: u32, j: i64) -> Result<i64> {
    Ok(check_family(n, r, j)? + r as i64 - 1)
}

/// `dim_K H^n(R)_{(i, j)}` for the diagonal family.
pub fn lefschetz_hilbert(n: usize, r: u32, j: i64, i: i64) -> Result<BigInt> {
    let k = check_family(n, r, j)?;
    let (n, r) = (n as i64, r as i64);
    if i < 0 || i > k + r - 1 {
        return Ok(BigInt::zero());
    }
    let first = binom(n + i - 1, i)? * binom(-j - 1, k)?;
    if i < r {
        return Ok(first);
    }
    Ok(first - binom(n + i - r - 1, i - r)? * binom(-j + r - 1, k + r)?)
}

/// First nonzero degree of `H^{n-1}(R)_j`, `-n - j + r + 1`.
pub fn sub_regularity(n: usize, r: u32, j: i64) -> Result<i64> {
    Ok(check_family(n, r, j)? + r as i64 + 1)
}

/// Shape of a pure resolution `0 -> P_0^{β_s}(-d_s) -> ... -> P_0^{β_1}(-d_1) -> P_0^{β_0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionShape {
    pub beta0: BigInt,
    pub twists: Vec<i64>,
}

impl ResolutionShape {
    pub fn new(beta0: BigInt, twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() || twists[0] <= 0 || twists.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "twists {twists:?} must be positive and strictly increasing"
            )));
        }
        if !beta0.is_positive() {
            return Err(Error::InvalidParameter("beta0 must be positive".into()));
        }
        Ok(ResolutionShape { beta0, twists })
    }

    pub fn codimension(&self) -> usize {
        self.twists.len()
    }
}

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `β_i = (-1)^{i+1} β_0 Π_{l≠i} d_l / (d_l - d_i)` for `i = 1..s`.
pub fn herzog_kuhl_betti(shape: &ResolutionShape) -> Result<Vec<BigInt>> {
    let d = &shape.twists;
    (0..d.len())
        .map(|i| {
            let mut v = rat(shape.beta0.clone());
            for (l, &dl) in d.iter().enumerate() {
                if l != i {
                    v = v * rat(dl) / rat(dl - d[i]);
                }
            }
            if i % 2 == 1 {
                v = -v;
            }
            if !v.is_integer() || !v.is_positive() {
                return Err(Error::NotCohenMacaulayShape(format!(
                    "beta_{} = {v} for twists {d:?}",
                    i + 1
                )));
            }
            Ok(v.to_integer())
        })
        .collect()
}

/// `e(M) = β_0 Π d_i / s!`.
pub fn hk_multiplicity(shape: &ResolutionShape) -> BigRational {
    let prod = shape.twists.iter().fold(BigInt::one(), |acc, &d| acc * BigInt::from(d));
    let s = factorial(shape.codimension() as i64).expect("nonnegative");
    BigRational::new(shape.beta0.clone() * prod, s)
}

/// Resolution shape of `H^n(R)_j` for the diagonal family:
/// `β_0 = C(-j-1, -n-j)`, `d_1 = r`, `d_i = r + i - 1 - n - j`.
pub fn top_cohomology_shape(n: usize, r: u32, j: i64) -> Result<ResolutionShape> {
    let k = check_family(n, r, j)?;
    let r = r as i64;
    let twists = (1..=n as i64).map(|i| if i == 1 { r } else { r + i - 1 + k }).collect();
    ResolutionShape::new(binom(-j - 1, k)?, twists)
}

/// `e(H^n(R)_j) = r (-j+r-1)! β_0 / (n! (-n-j+r)!)`.
pub fn top_multiplicity_formula(n: usize, r: u32, j: i64) -> Result<BigRational> {
    let k = check_family(n, r, j)?;
    let r = r as i64;
    let num = BigInt::from(r) * factorial(-j + r - 1)? * binom(-j - 1, k)?;
    let den = factorial(n as i64)? * factorial(k + r)?;
    Ok(BigRational::new(num, den))
}

/// `β_i = (-1)^i r (n-1)! β_0 β_1 / ((i-2)! (n-i)! (-n-j+r+i-1)(n+j-i+1))`
/// for `2 <= i <= n`, exactly as printed in the closed-form corollary.
/// Its sign disagrees with [`herzog_kuhl_betti`]; it is kept for comparison.
pub fn printed_betti_formula(n: usize, r: u32, j: i64, i: usize) -> Result<BigRational> {
    let k = check_family(n, r, j)?;
    if i < 2 || i > n {
        return Err(Error::InvalidParameter(format!("index {i} outside 2..={n}")));
    }
    let (ni, ri, ii) = (n as i64, r as i64, i as i64);
    let beta0 = binom(-j - 1, k)?;
    let beta1 = binom(-j + ri - 1, k + ri)?;
    let mut num = BigInt::from(ri) * factorial(ni - 1)? * beta0 * beta1;
    if i % 2 == 1 {
        num = -num;
    }
    let den = factorial(ii - 2)?
        * factorial(ni - ii)?
        * BigInt::from(k + ri + ii - 1)
        * BigInt::from(ni + j - ii + 1);
    Ok(BigRational::new(num, den))
}

/// Hilbert series `(β_0 + Σ (-1)^i β_i t^{d_i}) / (1-t)^nvars` as a
/// coefficient list, or `None` when the numerator is not divisible.
pub fn hilbert_series_from_resolution(
    shape: &ResolutionShape,
    betti: &[BigInt],
    nvars: usize,
) -> Option<Vec<BigInt>> {
    let top = *shape.twists.last()? as usize;
    let mut num = vec![BigInt::zero(); top + 1];
    num[0] = shape.beta0.clone();
    for (i, (b, &d)) in betti.iter().zip(&shape.twists).enumerate() {
        if i % 2 == 0 {
            num[d as usize] -= b;
        } else {
            num[d as usize] += b;
        }
    }
    for _ in 0..nvars {
        if !num.iter().sum::<BigInt>().is_zero() {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in num.iter_mut() {
            acc += &*c;
            *c = acc.clone();
        }
        num.pop();
    }
    while num.last().is_some_and(Zero::is_zero) {
        num.pop();
    }
    Some(num)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `f = Σ f_i y_i` with `deg f_i = d`; bound `(-n-j+1) d + q`.
    General,
    /// `f = Σ_{|β|=d} x_β y^β`; bound `(-n-j+1) d - 1`.
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSample {
    pub j: i64,
    pub regularity: Option<i64>,
    pub finite_length: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearBoundReport {
    pub kind: BoundKind,
    pub d: u32,
    pub samples: Vec<BoundSample>,
    /// Degrees skipped because the component hit the cap.
    pub excluded: Vec<i64>,
    /// Least `q` with `reg_j <= (-n-j+1) d + q` on every sample with a
    /// regularity; `None` when there is none.
    pub q: Option<i64>,
    pub pass: bool,
}

/// Whether `g = Σ_{|β|=d} c_β x_β y^β` with distinct variables `x_β`
/// covering all y-monomials of degree `d`.
pub fn is_generic_dual(g: &BiPoly) -> bool {
    let Some((a, b)) = g.bidegree() else { return false };
    if a != 1 || count_monomials(g.n(), b as i64) != g.m() as u64 {
        return false;
    }
    let coeffs = g.y_coefficients();
    if coeffs.len() != g.m() {
        return false;
    }
    let mut seen = vec![false; g.m()];
    for p in coeffs.values() {
        if p.len() != 1 {
            return false;
        }
        let (mono, _) = p.terms().next().unwrap();
        let Some(v) = mono.exponents().iter().position(|&e| e == 1) else { return false };
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    true
}

/// Bound kind and the degree `d` it is linear in: the x-degree for the
/// general shape, the y-degree for the generic one.
pub fn bound_shape(g: &BiPoly, generic: bool) -> Result<(BoundKind, u32)> {
    let (a, b) = g.require_bidegree()?;
    if generic {
        if !is_generic_dual(g) {
            return Err(Error::InvalidParameter(
                "polynomial is not of the form sum of x_beta y^beta".into(),
            ));
        }
        Ok((BoundKind::Generic, b))
    } else if b != 1 {
        Err(Error::InvalidParameter(format!("y-degree {b} must be 1 for the general bound")))
    } else {
        Ok((BoundKind::General, a))
    }
}

/// Measures `reg H^n(R)_j` for `j` in `[j_lo, j_hi]` and fits the least
/// offset of the linear bound.
pub fn linear_bound_fit(g: &BiPoly, j_lo: i64, j_hi: i64, generic: bool, cap: u32) -> Result<LinearBoundReport> {
    let mut tops = Vec::new();
    for j in j_lo..=j_hi {
        tops.push((j, top_hilbert(&Presentation::build(g, j)?, cap)));
    }
    fit_bound_samples(g, tops.iter().map(|(j, h)| (*j, h)), generic)
}

/// Fit from Hilbert functions already computed per `j`.
pub fn fit_bound_samples<'a>(
    g: &BiPoly,
    tops: impl IntoIterator<Item = (i64, &'a HilbertFunction)>,
    generic: bool,
) -> Result<LinearBoundReport> {
    let (kind, d) = bound_shape(g, generic)?;
    let samples = tops
        .into_iter()
        .map(|(j, h)| BoundSample { j, regularity: h.regularity, finite_length: h.finite_length })
        .collect();
    Ok(fit_bound(kind, d, g.n(), samples))
}

/// Fit from precomputed samples.
pub fn fit_bound(kind: BoundKind, d: u32, n: usize, samples: Vec<BoundSample>) -> LinearBoundReport {
    let excluded = samples.iter().filter(|s| !s.finite_length).map(|s| s.j).collect();
    let q = samples
        .iter()
        .filter(|s| s.finite_length)
        .filter_map(|s| s.regularity.map(|reg| reg - (-(n as i64) - s.j + 1) * d as i64))
        .max();
    let pass = match kind {
        BoundKind::General => true,
        BoundKind::Generic => q.is_none_or(|q| q <= -1),
    };
    LinearBoundReport { kind, d, samples, excluded, q, pass }
}
