//! Verification suites comparing the rank oracle against Gröbner bases and
//! closed formulas.
//!
//! Every suite expands its parameters into a fixed list of instances, maps
//! them with rayon and collects in input order, so the result does not
//! depend on the thread count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{cohomology_report, dimension_bound_from, monotonicity_from, CohomologyReport, ReportOptions};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::formulas::{
    binom, fit_bound, herzog_kuhl_betti, hilbert_series_from_resolution, hk_multiplicity,
    lefschetz_hilbert, lefschetz_regularity, printed_betti_formula, sub_regularity,
    top_cohomology_shape, top_multiplicity_formula, BoundKind, BoundSample,
};
use crate::groebner::{ideal_equal, initial_decomposition};
use crate::hilbert::HilbertFunction;
use crate::instances::{generic_dual, lefschetz_form, lefschetz_power, random_m_primary};
use crate::poly::BiPoly;
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), pass, detail: detail.into() }
    }
}

/// Outcome for one multiplier at one `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JResult {
    pub suite: String,
    pub f: String,
    pub j: i64,
    pub hilbert: Vec<u64>,
    pub regularity: Option<i64>,
    pub length: Option<u64>,
    pub sub_first_nonzero: Option<u32>,
    pub checks: Vec<Check>,
}

impl JResult {
    fn new(suite: Suite, f: &BiPoly, j: i64, top: &HilbertFunction) -> Self {
        JResult {
            suite: suite.to_string(),
            f: f.to_string(),
            j,
            hilbert: support_values(top),
            regularity: top.regularity,
            length: top.length,
            sub_first_nonzero: None,
            checks: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Hilbert values without the terminating zero of a finite-length module.
pub fn support_values(h: &HilbertFunction) -> Vec<u64> {
    let mut v = h.values.clone();
    if h.finite_length {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    v
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub results: Vec<JResult>,
    pub caveats: Vec<String>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.results.iter().all(JResult::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&JResult, &Check)> {
        self.results
            .iter()
            .flat_map(|r| r.checks.iter().filter(|c| !c.pass).map(move |c| (r, c)))
    }

    fn extend(&mut self, other: SuiteReport) {
        self.results.extend(other.results);
        let caveats: BTreeSet<String> = self.caveats.drain(..).chain(other.caveats).collect();
        self.caveats = caveats.into_iter().collect();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lefschetz,
    Monotonicity,
    Macaulay,
    Prop31,
    Betti,
    Bounds,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Lefschetz, Suite::Monotonicity, Suite::Macaulay, Suite::Prop31, Suite::Betti, Suite::Bounds];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Lefschetz => "lefschetz",
            Suite::Monotonicity => "monotonicity",
            Suite::Macaulay => "macaulay",
            Suite::Prop31 => "prop31",
            Suite::Betti => "betti",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Suite parameters; unset fields fall back to each suite's default grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    pub n: Option<usize>,
    pub r: Option<u32>,
    pub j_range: Option<(i64, i64)>,
    pub field: Option<FieldSpec>,
    pub cap: u32,
    pub seed: u64,
    pub count: Option<usize>,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n: None,
            r: None,
            j_range: None,
            field: None,
            cap: crate::cohomology::DEFAULT_CAP,
            seed: 0,
            count: None,
        }
    }
}

impl VerifyParams {
    fn ns(&self, full: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| full.to_vec(), |n| vec![n])
    }

    fn rs(&self, full: &[u32]) -> Vec<u32> {
        self.r.map_or_else(|| full.to_vec(), |r| vec![r])
    }

    /// `j` values for `n`, defaulting to `[-n-depth, -n]`.
    fn js(&self, n: usize, depth: i64) -> Result<Vec<i64>> {
        let n = n as i64;
        let (lo, hi) = self.j_range.unwrap_or((-n - depth, -n));
        if lo > hi {
            return Err(Error::InvalidParameter(format!("empty j range {lo}..{hi}")));
        }
        if hi > -n {
            return Err(Error::ComponentVanishes { j: hi, n: n as usize });
        }
        Ok((lo..=hi).collect())
    }

    fn field_or(&self, default: FieldSpec) -> FieldSpec {
        self.field.unwrap_or(default)
    }
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<SuiteReport> {
    match suite {
        Suite::Lefschetz => lefschetz_suite(params),
        Suite::Monotonicity => monotonicity_suite(params),
        Suite::Macaulay => macaulay_suite(params),
        Suite::Prop31 => prop31_suite(params),
        Suite::Betti => betti_suite(params),
        Suite::Bounds => bounds_suite(params),
        Suite::All => {
            let mut out = SuiteReport::default();
            for s in Suite::EACH {
                out.extend(run_suite(s, params)?);
            }
            Ok(out)
        }
    }
}

fn caveats_for(fields: impl IntoIterator<Item = FieldSpec>) -> Vec<String> {
    let set: BTreeSet<String> = fields.into_iter().filter_map(|f| f.caveat()).map(str::to_string).collect();
    set.into_iter().collect()
}

fn ledger_check(rep: &CohomologyReport) -> Check {
    Check::new(
        "rank_nullity_ledger",
        rep.ledger_ok,
        if rep.ledger_ok {
            format!("{} slices consistent", rep.slices.len())
        } else {
            format!("inconsistent slices at degrees {:?}", rep.ledger_violations)
        },
    )
}

fn top_only(cap: u32) -> ReportOptions {
    ReportOptions { cap, linear_resolution: false, scan_sub: false }
}

fn lefschetz_grid(params: &VerifyParams) -> Result<Vec<(usize, u32, i64)>> {
    let mut grid = Vec::new();
    for n in params.ns(&[2, 3]) {
        for r in params.rs(&[1, 2, 3]) {
            for j in params.js(n, 5)? {
                grid.push((n, r, j));
            }
        }
    }
    Ok(grid)
}

fn lefschetz_suite(params: &VerifyParams) -> Result<SuiteReport> {
    let field = params.field_or(FieldSpec::Rationals);
    let grid = lefschetz_grid(params)?;
    let results = grid
        .par_iter()
        .map(|&(n, r, j)| lefschetz_instance(n, r, j, field, params.cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { results, caveats: caveats_for([field]) })
}

fn lefschetz_instance(n: usize, r: u32, j: i64, field: FieldSpec, cap: u32) -> Result<JResult> {
    let f = lefschetz_power(n, r, field)?;
    let p = Presentation::build(&f, j)?;
    let rep = cohomology_report(&p, ReportOptions { cap, linear_resolution: true, scan_sub: true });
    let mut out = JResult::new(Suite::Lefschetz, &f, j, &rep.top);
    out.sub_first_nonzero = rep.first_nonzero_sub;

    let reg = lefschetz_regularity(n, r, j)?;
    out.checks.push(Check::new(
        "regularity",
        rep.top.finite_length && rep.top.regularity == Some(reg),
        format!("oracle {:?}, formula {reg}", rep.top.regularity),
    ));

    let end = rep.top.end().max(reg + 1);
    let mut mismatch = None;
    for i in 0..=end {
        let formula = lefschetz_hilbert(n, r, j, i)?;
        let oracle = rep.top.value(i).map(BigInt::from);
        if oracle.as_ref() != Some(&formula) {
            mismatch = Some(format!("degree {i}: oracle {oracle:?}, formula {formula}"));
            break;
        }
    }
    out.checks.push(Check::new(
        "hilbert_function",
        mismatch.is_none(),
        mismatch.unwrap_or_else(|| format!("{} degrees agree", end + 1)),
    ));

    let sub_reg = sub_regularity(n, r, j)?;
    out.checks.push(Check::new(
        "sub_first_nonzero",
        rep.first_nonzero_sub.map(i64::from) == Some(sub_reg),
        format!("oracle {:?}, formula {sub_reg}", rep.first_nonzero_sub),
    ));
    let below = (sub_reg - 1) as u32;
    let at_below = rep
        .slices
        .iter()
        .find(|s| s.degree == below)
        .map(|s| s.sub());
    out.checks.push(Check::new(
        "sub_zero_below",
        at_below == Some(0),
        format!("dimension {at_below:?} in degree {below}"),
    ));
    out.checks.push(ledger_check(&rep));
    Ok(out)
}

fn betti_suite(params: &VerifyParams) -> Result<SuiteReport> {
    let field = params.field_or(FieldSpec::Rationals);
    let grid = lefschetz_grid(params)?;
    let results = grid
        .par_iter()
        .map(|&(n, r, j)| betti_instance(n, r, j, field, params.cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { results, caveats: caveats_for([field]) })
}

fn betti_instance(n: usize, r: u32, j: i64, field: FieldSpec, cap: u32) -> Result<JResult> {
    let f = lefschetz_power(n, r, field)?;
    let p = Presentation::build(&f, j)?;
    let rep = cohomology_report(&p, top_only(cap));
    let mut out = JResult::new(Suite::Betti, &f, j, &rep.top);
    let length = rep.top.length.map(|l| BigRational::from_integer(BigInt::from(l)));

    let shape = top_cohomology_shape(n, r, j)?;
    let printed: Vec<String> = (2..=n)
        .map(|i| printed_betti_formula(n, r, j, i).map(|v| v.to_string()))
        .collect::<Result<_>>()?;
    let betti = herzog_kuhl_betti(&shape);
    out.checks.push(Check::new(
        "herzog_kuhl_betti",
        betti.is_ok(),
        match &betti {
            Ok(b) => format!(
                "beta0 {}, twists {:?}, betti {:?}, closed form for i>=2 {:?}",
                shape.beta0,
                shape.twists,
                b.iter().map(ToString::to_string).collect::<Vec<_>>(),
                printed
            ),
            Err(e) => e.to_string(),
        },
    ));
    let Ok(betti) = betti else { return Ok(out) };

    let k = -(n as i64) - j;
    let beta1 = binom(-j + r as i64 - 1, k + r as i64)?;
    out.checks.push(Check::new(
        "first_betti_binomial",
        betti[0] == beta1,
        format!("herzog-kuhl {}, binomial {beta1}", betti[0]),
    ));

    let euler = betti
        .iter()
        .enumerate()
        .fold(shape.beta0.clone(), |acc, (i, b)| if i % 2 == 0 { acc - b } else { acc + b });
    out.checks.push(Check::new("euler_characteristic", euler == BigInt::from(0), format!("alternating sum {euler}")));

    let formula = top_multiplicity_formula(n, r, j)?;
    out.checks.push(Check::new(
        "multiplicity_formula",
        length.as_ref() == Some(&formula),
        format!("closed form {formula}, oracle length {:?}", rep.top.length),
    ));
    let hk = hk_multiplicity(&shape);
    out.checks.push(Check::new(
        "herzog_kuhl_multiplicity",
        length.as_ref() == Some(&hk),
        format!("herzog-kuhl {hk}, oracle length {:?}", rep.top.length),
    ));

    let series = hilbert_series_from_resolution(&shape, &betti, p.m());
    let oracle: Vec<BigInt> = support_values(&rep.top).into_iter().map(BigInt::from).collect();
    out.checks.push(Check::new(
        "hilbert_series",
        rep.top.finite_length && series.as_ref() == Some(&oracle),
        format!(
            "from resolution {:?}, oracle {:?}",
            series.map(|s| s.iter().map(ToString::to_string).collect::<Vec<_>>()),
            support_values(&rep.top)
        ),
    ));
    out.checks.push(ledger_check(&rep));
    Ok(out)
}

fn diagonal_instances(params: &VerifyParams) -> Result<Vec<(BiPoly, i64)>> {
    let field = params.field_or(FieldSpec::Rationals);
    let mut out = Vec::new();
    for n in params.ns(&[2, 3]) {
        let f = lefschetz_power(n, params.r.unwrap_or(1), field)?;
        for j in params.js(n, 3)? {
            out.push((f.clone(), j));
        }
    }
    Ok(out)
}

fn macaulay_suite(params: &VerifyParams) -> Result<SuiteReport> {
    let inst = diagonal_instances(params)?;
    let fields = inst.iter().map(|(f, _)| f.field()).collect::<Vec<_>>();
    let results = inst
        .par_iter()
        .map(|(f, j)| {
            let p = Presentation::build(f, *j)?;
            let rep = cohomology_report(&p, top_only(params.cap));
            let dec = initial_decomposition(&p);
            let gb_side = dec.hilbert(params.cap);
            let mut out = JResult::new(Suite::Macaulay, f, *j, &rep.top);
            let (pass, detail) = compare_hilbert(&gb_side, &rep.top);
            out.checks.push(Check::new("macaulay", pass, detail));
            out.checks.push(ledger_check(&rep));
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { results, caveats: caveats_for(fields) })
}

/// Degreewise equality over the full support, or over the common window
/// when either side hit the cap.
fn compare_hilbert(a: &HilbertFunction, b: &HilbertFunction) -> (bool, String) {
    let both = a.finite_length && b.finite_length;
    let end = if both { a.end().max(b.end()) } else { a.end().min(b.end()) };
    let pass = a.finite_length == b.finite_length && (0..=end).all(|i| a.value(i) == b.value(i));
    let window = if both { "" } else { " (window)" };
    (pass, format!("initial ideals {:?}, oracle {:?}{window}", support_values(a), support_values(b)))
}

fn prop31_suite(params: &VerifyParams) -> Result<SuiteReport> {
    let inst = diagonal_instances(params)?;
    let fields = inst.iter().map(|(f, _)| f.field()).collect::<Vec<_>>();
    let results = inst
        .par_iter()
        .map(|(f, j)| {
            let p = Presentation::build(f, *j)?;
            let lower = Presentation::build(f, *j - 1)?;
            let rep = cohomology_report(&p, top_only(params.cap));
            let (dec, dec_lower) = rayon::join(|| initial_decomposition(&p), || initial_decomposition(&lower));
            let mut bad = Vec::new();
            for (u, ideal) in &dec.entries {
                let shifted = u.with_first_incremented();
                match dec_lower.get(&shifted) {
                    Some(other) if ideal_equal(ideal, other) => {}
                    _ => bad.push(u.fmt_with('z')),
                }
            }
            let mut out = JResult::new(Suite::Prop31, f, *j, &rep.top);
            out.checks.push(Check::new(
                "shift_equality",
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{} ideals equal at j-1 after multiplying by z1", dec.entries.len())
                } else {
                    format!("differ at {bad:?}")
                },
            ));
            out.checks.push(ledger_check(&rep));
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { results, caveats: caveats_for(fields) })
}

/// The random multipliers of the monotonicity suite, drawn sequentially
/// from the seed.
pub fn monotonicity_instances(params: &VerifyParams) -> Vec<BiPoly> {
    let field = params.field_or(FieldSpec::PrimeField(32003));
    let count = params.count.unwrap_or(20);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..count)
        .map(|t| {
            let n = params.n.unwrap_or(2 + t % 2);
            let bidegree = if (t / 2) % 2 == 0 { (1, 1) } else { (2, 1) };
            random_m_primary(n, n, bidegree, field, &mut rng).0
        })
        .collect()
}

fn monotonicity_suite(params: &VerifyParams) -> Result<SuiteReport> {
    let fs = monotonicity_instances(params);
    let mut tasks = Vec::new();
    for (t, f) in fs.iter().enumerate() {
        for j in params.js(f.n(), 4)? {
            tasks.push((t, j));
        }
    }
    let computed = tasks
        .par_iter()
        .map(|&(t, j)| {
            let f = &fs[t];
            let p = Presentation::build(f, j)?;
            let rep = cohomology_report(&p, top_only(params.cap));
            let dec = initial_decomposition(&p);
            let bound = dimension_bound_from(&p, &dec, &rep.top);
            let mut out = JResult::new(Suite::Monotonicity, f, j, &rep.top);
            out.checks.push(Check::new(
                "dimension_bound",
                bound.pass,
                format!(
                    "dim cokernel {:?} <= dim P0/I(f) {:?}, m-primary {}, finite length {:?}",
                    bound.cokernel_dimension, bound.ideal_dimension, bound.m_primary, bound.finite_length
                ),
            ));
            out.checks.push(ledger_check(&rep));
            Ok((t, out, rep.top))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut results = Vec::with_capacity(computed.len());
    let mut idx = 0;
    while idx < computed.len() {
        let t = computed[idx].0;
        let end = computed[idx..].iter().position(|c| c.0 != t).map_or(computed.len(), |e| idx + e);
        let group = &computed[idx..end];
        let mono = monotonicity_from(group.iter().map(|(_, r, h)| (r.j, h.clone())).collect());
        for (k, (_, r, _)) in group.iter().enumerate() {
            let mut r = r.clone();
            if k > 0 {
                let v = &mono.pairs[k - 1];
                r.checks.insert(
                    0,
                    Check::new(
                        "monotone",
                        v.pass,
                        match v.first_violation {
                            Some(i) => format!("Hilb(j-1) < Hilb(j) in degree {i}"),
                            None if v.window_only => "Hilb(j-1) >= Hilb(j) on the computed window".into(),
                            None => "Hilb(j-1) >= Hilb(j)".into(),
                        },
                    ),
                );
            }
            results.push(r);
        }
        idx = end;
    }
    Ok(SuiteReport { results, caveats: caveats_for(fs.iter().map(BiPoly::field)) })
}

fn bounds_suite(params: &VerifyParams) -> Result<SuiteReport> {
    let field = params.field_or(FieldSpec::Rationals);
    let generic = generic_dual(2, 2, field);
    let diagonal = lefschetz_form(2, field);
    let generic_js = match params.j_range {
        Some(_) => params.js(2, 4)?,
        None => (-6..=-2).collect(),
    };
    let diagonal_js = params.js(2, 3)?;
    let mut tasks: Vec<(BoundKind, &BiPoly, i64)> = Vec::new();
    tasks.extend(generic_js.iter().map(|&j| (BoundKind::Generic, &generic, j)));
    tasks.extend(diagonal_js.iter().map(|&j| (BoundKind::General, &diagonal, j)));

    let computed = tasks
        .par_iter()
        .map(|&(kind, f, j)| {
            let p = Presentation::build(f, j)?;
            let rep = cohomology_report(&p, top_only(params.cap));
            Ok((kind, f, j, rep))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut results = Vec::new();
    for kind in [BoundKind::Generic, BoundKind::General] {
        let group: Vec<_> = computed.iter().filter(|c| c.0 == kind).collect();
        let Some(first) = group.first() else { continue };
        let (a, b) = first.1.require_bidegree()?;
        let d = if kind == BoundKind::Generic { b } else { a };
        let n = first.1.n() as i64;
        let samples = group
            .iter()
            .map(|c| BoundSample { j: c.2, regularity: c.3.top.regularity, finite_length: c.3.top.finite_length })
            .collect();
        let fit = fit_bound(kind, d, first.1.n(), samples);
        for (_, f, j, rep) in group {
            let mut out = JResult::new(Suite::Bounds, f, *j, &rep.top);
            let linear = (-n - j + 1) * d as i64;
            match kind {
                BoundKind::Generic => out.checks.push(Check::new(
                    "generic_bound",
                    rep.top.finite_length && rep.top.regularity.is_none_or(|reg| reg < linear),
                    format!("reg {:?} <= {}", rep.top.regularity, linear - 1),
                )),
                BoundKind::General => out.checks.push(Check::new(
                    "fitted_bound",
                    fit.pass && rep.top.finite_length,
                    format!("reg {:?}, d {d}, fitted q {:?} over the sampled j", rep.top.regularity, fit.q),
                )),
            }
            out.checks.push(ledger_check(rep));
            results.push(out);
        }
    }
    Ok(SuiteReport { results, caveats: caveats_for([field]) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn lefschetz_small() {
        let params = VerifyParams { n: Some(2), r: Some(1), j_range: Some((-6, -2)), ..VerifyParams::default() };
        let rep = run_suite(Suite::Lefschetz, &params).unwrap();
        assert_eq!(rep.results.len(), 5);
        assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        let r3 = &rep.results[3];
        assert_eq!((r3.j, r3.hilbert.as_slice(), r3.regularity), (-3, &[2u64, 1][..], Some(1)));
        assert_eq!(r3.sub_first_nonzero, Some(3));
        assert!(rep.caveats.is_empty());
    }

    #[test]
    fn betti_small() {
        let params = VerifyParams { n: Some(2), r: Some(1), j_range: Some((-3, -3)), ..VerifyParams::default() };
        let rep = run_suite(Suite::Betti, &params).unwrap();
        assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        let hk = &rep.results[0].checks[0];
        assert!(hk.detail.contains("betti [\"3\", \"1\"]"), "{}", hk.detail);
        assert!(hk.detail.contains("[\"-1\"]"), "{}", hk.detail);
    }

    #[test]
    fn macaulay_and_shift() {
        let params = VerifyParams { n: Some(2), j_range: Some((-4, -3)), ..VerifyParams::default() };
        for s in [Suite::Macaulay, Suite::Prop31] {
            let rep = run_suite(s, &params).unwrap();
            assert_eq!(rep.results.len(), 2);
            assert!(rep.pass(), "{s}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn monotone_over_prime_field() {
        let params = VerifyParams { count: Some(2), seed: 3, j_range: Some((-5, -3)), ..VerifyParams::default() };
        let rep = run_suite(Suite::Monotonicity, &params).unwrap();
        assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert_eq!(rep.caveats, ["char-p: Lefschetz theorems assume char 0"]);
        assert_eq!(rep.results.len(), 3 + 3);
        assert_eq!(rep.results[0].checks[0].name, "dimension_bound");
        assert_eq!(rep.results[1].checks[0].name, "monotone");
    }

    #[test]
    fn bounds_default_grid() {
        let rep = run_suite(Suite::Bounds, &VerifyParams::default()).unwrap();
        assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn rejects_positive_j() {
        let params = VerifyParams { n: Some(2), j_range: Some((-3, -1)), ..VerifyParams::default() };
        assert!(matches!(run_suite(Suite::Lefschetz, &params), Err(Error::ComponentVanishes { .. })));
    }
}
