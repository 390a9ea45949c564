//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line;
//! the target exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};

use lcreg_core::{
    build_presentation, initial_decomposition, lefschetz_form, run_suite, z_basis, FieldSpec, JResult,
    Suite, SuiteReport, VerifyParams,
};
use serde_json::Value;

struct Criteria {
    lines: Vec<(u32, bool, String)>,
}

impl Criteria {
    fn record(&mut self, id: u32, failures: Vec<String>, summary: String) {
        let pass = failures.is_empty();
        let detail = if pass { summary } else { failures.join("; ") };
        self.lines.push((id, pass, detail));
    }
}

fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    (0..b).fold(1i128, |acc, i| acc * (a - i) as i128 / (i + 1) as i128) as i64
}

/// Hilbert function of the top module for the diagonal power, written out
/// directly from the binomial expression.
fn expected_hilbert(n: i64, r: i64, j: i64) -> Vec<u64> {
    let k = -n - j;
    let reg = k + r - 1;
    (0..=reg)
        .map(|i| {
            let v = if i < r {
                binom(n + i - 1, i) * binom(-j - 1, k)
            } else {
                binom(n + i - 1, i) * binom(-j - 1, k) - binom(n + i - r - 1, i - r) * binom(-j + r - 1, k + r)
            };
            v as u64
        })
        .collect()
}

fn check_failures(rep: &SuiteReport, names: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for r in &rep.results {
        for name in names {
            match r.checks.iter().find(|c| c.name == *name) {
                Some(c) if c.pass => {}
                Some(c) => out.push(format!("{} j={} {name}: {}", r.f, r.j, c.detail)),
                None => out.push(format!("{} j={} missing {name}", r.f, r.j)),
            }
        }
    }
    out
}

fn family_reports(suite: Suite) -> Vec<((i64, i64), SuiteReport)> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        for r in [1u32, 2, 3] {
            let params = VerifyParams { n: Some(n), r: Some(r), ..VerifyParams::default() };
            out.push(((n as i64, r as i64), run_suite(suite, &params).unwrap()));
        }
    }
    out
}

fn lefschetz_criteria(c: &mut Criteria, reports: &[((i64, i64), SuiteReport)]) {
    let mut reg_fail = Vec::new();
    let mut hilb_fail = Vec::new();
    let mut sub_fail = Vec::new();
    let mut count = 0;
    let mut branch_two = 0;
    for ((n, r), rep) in reports {
        let js: Vec<i64> = rep.results.iter().map(|x| x.j).collect();
        if js != (-n - 5..=-n).collect::<Vec<_>>() {
            reg_fail.push(format!("n={n} r={r}: j grid {js:?}"));
        }
        for res in &rep.results {
            count += 1;
            let (j, k) = (res.j, -n - res.j);
            if res.regularity != Some(k + r - 1) {
                reg_fail.push(format!("n={n} r={r} j={j}: reg {:?}", res.regularity));
            }
            let expected = expected_hilbert(*n, *r, j);
            branch_two += usize::from(expected.len() as i64 > *r);
            if res.hilbert != expected {
                hilb_fail.push(format!("n={n} r={r} j={j}: {:?} vs {expected:?}", res.hilbert));
            }
            if res.sub_first_nonzero != Some((k + r + 1) as u32) {
                sub_fail.push(format!("n={n} r={r} j={j}: first sub {:?}", res.sub_first_nonzero));
            }
        }
        reg_fail.extend(check_failures(rep, &["regularity"]));
        hilb_fail.extend(check_failures(rep, &["hilbert_function"]));
        sub_fail.extend(check_failures(rep, &["sub_first_nonzero", "sub_zero_below"]));
    }
    if branch_two == 0 {
        hilb_fail.push("second branch never exercised".into());
    }
    c.record(1, reg_fail, format!("{count} components, regularity -n-j+r-1"));
    c.record(2, hilb_fail, format!("{count} Hilbert functions, {branch_two} reaching the subtracted branch"));
    c.record(3, sub_fail, format!("{count} components, first H^(n-1) degree -n-j+r+1"));
}

fn betti_criterion(c: &mut Criteria, reports: &[((i64, i64), SuiteReport)]) {
    let mut fail = Vec::new();
    let mut count = 0;
    for ((n, r), rep) in reports {
        for res in &rep.results {
            count += 1;
            let total: u64 = expected_hilbert(*n, *r, res.j).iter().sum();
            if res.length != Some(total) {
                fail.push(format!("n={n} r={r} j={}: length {:?} vs {total}", res.j, res.length));
            }
        }
        fail.extend(check_failures(
            rep,
            &["multiplicity_formula", "herzog_kuhl_multiplicity", "hilbert_series", "euler_characteristic"],
        ));
    }
    c.record(4, fail, format!("{count} components, multiplicity and Hilbert series from the resolution"));
}

fn monotonicity_criteria(c: &mut Criteria, rep: &SuiteReport) {
    let mut by_f: BTreeMap<&str, Vec<&JResult>> = BTreeMap::new();
    for r in &rep.results {
        by_f.entry(&r.f).or_default().push(r);
    }
    let mut fail = Vec::new();
    if by_f.len() != 20 {
        fail.push(format!("{} distinct multipliers", by_f.len()));
    }
    if rep.caveats.is_empty() {
        fail.push("no prime-field caveat".into());
    }
    let mut pairs = 0;
    for (f, rs) in &by_f {
        for w in rs.windows(2) {
            pairs += 1;
            let (lower, upper) = (w[0], w[1]);
            if lower.j + 1 != upper.j {
                fail.push(format!("{f}: non-adjacent {} {}", lower.j, upper.j));
            }
            let get = |h: &[u64], i: usize| h.get(i).copied().unwrap_or(0);
            let len = lower.hilbert.len().max(upper.hilbert.len());
            if let Some(i) = (0..len).find(|&i| get(&lower.hilbert, i) < get(&upper.hilbert, i)) {
                fail.push(format!("{f}: j={} below j={} in degree {i}", lower.j, upper.j));
            }
        }
    }
    fail.extend(check_failures(
        &SuiteReport {
            results: rep.results.iter().filter(|r| r.checks.iter().any(|c| c.name == "monotone")).cloned().collect(),
            caveats: Vec::new(),
        },
        &["monotone"],
    ));
    c.record(5, fail, format!("{} multipliers over F_32003, {pairs} adjacent pairs", by_f.len()));

    let mut fail = check_failures(rep, &["dimension_bound"]);
    let finite = rep.results.iter().filter(|r| r.length.is_some()).count();
    if finite != rep.results.len() {
        fail.push(format!("{} of {} components of finite length", finite, rep.results.len()));
    }
    c.record(8, fail, format!("{} components, all m-primary and of finite length", rep.results.len()));
}

fn macaulay_criteria(c: &mut Criteria, macaulay: &SuiteReport, prop31: &SuiteReport) {
    let fail = check_failures(macaulay, &["macaulay"]);
    c.record(6, fail, format!("{} components of sum x_i y_i", macaulay.results.len()));

    let mut fail = check_failures(prop31, &["shift_equality"]);
    for n in [2usize, 3] {
        let f = lefschetz_form(n, FieldSpec::Rationals);
        for j in -(n as i64) - 3..=-(n as i64) {
            let k = (-(n as i64) - j) as u32;
            let dec = initial_decomposition(&build_presentation(&f, j).unwrap());
            if dec.entries.len() != z_basis(k, n).len() {
                fail.push(format!("n={n} j={j}: {} ideals for {} monomials", dec.entries.len(), z_basis(k, n).len()));
            }
        }
    }
    c.record(7, fail, format!("{} components, every u in B_k", prop31.results.len()));
}

fn bounds_criterion(c: &mut Criteria, rep: &SuiteReport) {
    let generic: Vec<&JResult> =
        rep.results.iter().filter(|r| r.checks.iter().any(|c| c.name == "generic_bound")).collect();
    let mut fail = Vec::new();
    let js: Vec<i64> = generic.iter().map(|r| r.j).collect();
    if js != (-6..=-2).collect::<Vec<_>>() {
        fail.push(format!("j grid {js:?}"));
    }
    for r in &generic {
        match r.regularity {
            Some(reg) if r.length.is_some() && reg < (-2 - r.j + 1) * 2 => {}
            other => fail.push(format!("j={}: reg {other:?}", r.j)),
        }
    }
    fail.extend(check_failures(&SuiteReport { results: generic.into_iter().cloned().collect(), caveats: vec![] }, &[
        "generic_bound",
    ]));
    c.record(9, fail, "generic form of y-degree 2, j in [-6, -2]".into());
}

fn ledger_criterion(c: &mut Criteria, reports: &[&SuiteReport]) {
    let mut fail = Vec::new();
    let mut count = 0;
    for rep in reports {
        count += rep.results.len();
        fail.extend(check_failures(rep, &["rank_nullity_ledger"]));
    }
    c.record(10, fail, format!("{count} computations"));
}

fn verify_all_json() -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lcreg"))
        .args(["verify", "all", "--seed", "7", "--threads", "4"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let mut v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    v.as_object_mut().ok_or("report is not an object")?.remove("timing").ok_or("no timing key")?;
    Ok(v)
}

fn determinism_criterion(c: &mut Criteria) {
    let runs = (verify_all_json(), verify_all_json());
    let fail = match runs {
        (Ok(a), Ok(b)) => {
            let (a, b) = (serde_json::to_vec(&a).unwrap(), serde_json::to_vec(&b).unwrap());
            if a == b { vec![] } else { vec!["reports differ".into()] }
        }
        (Err(e), _) | (_, Err(e)) => vec![e],
    };
    c.record(11, fail, "two runs of `verify all --seed 7 --threads 4` identical without timing".into());
}

fn main() -> ExitCode {
    let mut c = Criteria { lines: Vec::new() };

    let lefschetz = family_reports(Suite::Lefschetz);
    lefschetz_criteria(&mut c, &lefschetz);
    let betti = family_reports(Suite::Betti);
    betti_criterion(&mut c, &betti);

    let defaults = VerifyParams::default();
    let monotonicity = run_suite(Suite::Monotonicity, &defaults).unwrap();
    let macaulay = run_suite(Suite::Macaulay, &defaults).unwrap();
    let prop31 = run_suite(Suite::Prop31, &defaults).unwrap();
    let bounds = run_suite(Suite::Bounds, &defaults).unwrap();

    monotonicity_criteria(&mut c, &monotonicity);
    macaulay_criteria(&mut c, &macaulay, &prop31);
    bounds_criterion(&mut c, &bounds);

    let mut all: Vec<&SuiteReport> = lefschetz.iter().chain(&betti).map(|(_, r)| r).collect();
    all.extend([&monotonicity, &macaulay, &prop31, &bounds]);
    ledger_criterion(&mut c, &all);

    determinism_criterion(&mut c);

    c.lines.sort_by_key(|l| l.0);
    for (id, pass, detail) in &c.lines {
        println!("criterion {id}: {} ({detail})", if *pass { "PASS" } else { "FAIL" });
    }
    let failed: Vec<u32> = c.lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    assert_eq!(c.lines.len(), 11);
    if failed.is_empty() {
        println!("acceptance: 11/11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
