use lcreg_core::verify::support_values;
use lcreg_core::{
    cohomology_report, fit_bound_samples, initial_decomposition, parse_bihomogeneous, run_suite,
    BiPoly, Check, CohomologyReport, FieldSpec, Presentation, ReportOptions, Suite,
    SuiteReport, VerifyParams,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::args::{BoundArgs, Command, Family, Instance, VerifyArgs};
use crate::CliError;

/// Report body without timing.
pub struct Outcome {
    pub config: Value,
    pub results: Vec<Value>,
    pub caveats: Vec<String>,
    pub pass: bool,
}

pub fn run(command: &Command, threads: u32) -> Result<Outcome, CliError> {
    match command {
        Command::Hilbert(inst) => per_j(inst, "hilbert", threads, hilbert_result),
        Command::Regularity(inst) => per_j(inst, "regularity", threads, regularity_result),
        Command::Initial(inst) => per_j(inst, "initial", threads, initial_result),
        Command::Betti(fam) => betti(fam, threads),
        Command::Bound(b) => bound(b, threads),
        Command::Verify(v) => verify(v, threads),
    }
}

fn multiplier(inst: &Instance) -> Result<BiPoly, CliError> {
    let f = parse_bihomogeneous(&inst.f, inst.m, inst.n, inst.field)?;
    Ok(f.power(inst.r)?)
}

fn js(range: Option<(i64, i64)>, n: usize) -> Result<Vec<i64>, CliError> {
    let (lo, hi) = range.ok_or_else(|| CliError::Usage("one of --j or --j-range is required".into()))?;
    if hi > -(n as i64) {
        return Err(CliError::Usage(format!("j = {hi} exceeds -n = {}", -(n as i64))));
    }
    Ok((lo..=hi).collect())
}

fn instance_config(command: &str, inst: &Instance, f: &BiPoly, threads: u32) -> Value {
    json!({
        "command": command,
        "f": f.to_string(),
        "input": inst.f,
        "m": inst.m,
        "n": inst.n,
        "r": inst.r,
        "j_range": inst.range.get(),
        "field": inst.field.to_string(),
        "cap": inst.cap,
        "threads": threads,
        "presentation": inst.presentation,
    })
}

fn pool(threads: u32) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads as usize)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn caveats(field: FieldSpec) -> Vec<String> {
    field.caveat().map(str::to_string).into_iter().collect()
}

fn per_j(
    inst: &Instance,
    command: &str,
    threads: u32,
    each: fn(&Instance, &Presentation) -> Value,
) -> Result<Outcome, CliError> {
    let f = multiplier(inst)?;
    let js = js(inst.range.get(), inst.n)?;
    let config = instance_config(command, inst, &f, threads);
    let results = pool(threads)?.install(|| {
        js.par_iter()
            .map(|&j| -> Result<Value, CliError> {
                let p = Presentation::build(&f, j)?;
                let mut v = each(inst, &p);
                if inst.presentation {
                    v["presentation"] = serde_json::to_value(p.to_record())?;
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(finish(config, results, caveats(inst.field)))
}

fn finish(config: Value, results: Vec<Value>, caveats: Vec<String>) -> Outcome {
    let pass = results.iter().all(|r| {
        r["checks"].as_array().is_none_or(|cs| cs.iter().all(|c| c["pass"] == Value::Bool(true)))
    });
    Outcome { config, results, caveats, pass }
}

fn ledger(rep: &CohomologyReport) -> Check {
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

fn base(p: &Presentation, rep: &CohomologyReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("j".into(), json!(p.j()));
    m.insert("hilbert".into(), json!(support_values(&rep.top)));
    m.insert("finite_length".into(), json!(rep.top.finite_length));
    m.insert("regularity".into(), json!(rep.top.regularity));
    m.insert("length".into(), json!(rep.top.length));
    m.insert("sub_first_nonzero".into(), json!(rep.first_nonzero_sub));
    m.insert("checks".into(), json!([ledger(rep)]));
    m
}

fn hilbert_result(inst: &Instance, p: &Presentation) -> Value {
    let rep = cohomology_report(p, ReportOptions { cap: inst.cap, linear_resolution: false, scan_sub: true });
    let mut m = base(p, &rep);
    m.insert(
        "sub_window".into(),
        json!({ "start": rep.sub.start, "values": rep.sub.values }),
    );
    Value::Object(m)
}

fn regularity_result(inst: &Instance, p: &Presentation) -> Value {
    let rep = cohomology_report(p, ReportOptions { cap: inst.cap, linear_resolution: true, scan_sub: true });
    Value::Object(base(p, &rep))
}

fn initial_result(inst: &Instance, p: &Presentation) -> Value {
    let rep = cohomology_report(p, ReportOptions { cap: inst.cap, linear_resolution: false, scan_sub: false });
    let dec = initial_decomposition(p);
    let gb_side = dec.hilbert(inst.cap);
    let ideals: Vec<Value> = dec
        .entries
        .iter()
        .map(|(u, i)| json!({ "u": u.fmt_with('z'), "generators": i.display_basis() }))
        .collect();
    let mut m = base(p, &rep);
    let agree = support_values(&gb_side) == support_values(&rep.top)
        && gb_side.finite_length == rep.top.finite_length;
    m["checks"].as_array_mut().unwrap().push(json!(Check::new(
        "macaulay",
        agree,
        format!("initial ideals {:?}, oracle {:?}", support_values(&gb_side), support_values(&rep.top)),
    )));
    m.insert("ideals".into(), Value::Array(ideals));
    m.insert("dimension".into(), json!(dec.dimension()));
    Value::Object(m)
}

fn suite_outcome(config: Value, rep: SuiteReport) -> Result<Outcome, CliError> {
    let results = rep.results.iter().map(serde_json::to_value).collect::<Result<Vec<_>, _>>()?;
    Ok(finish(config, results, rep.caveats))
}

fn betti(fam: &Family, threads: u32) -> Result<Outcome, CliError> {
    let (lo, hi) = fam
        .range
        .get()
        .ok_or_else(|| CliError::Usage("one of --j or --j-range is required".into()))?;
    let params = VerifyParams {
        n: Some(fam.n),
        r: Some(fam.r),
        j_range: Some((lo, hi)),
        field: Some(fam.field),
        cap: fam.cap,
        ..VerifyParams::default()
    };
    let config = json!({
        "command": "betti",
        "n": fam.n,
        "r": fam.r,
        "j_range": [lo, hi],
        "field": fam.field.to_string(),
        "cap": fam.cap,
        "threads": threads,
    });
    let rep = pool(threads)?.install(|| run_suite(Suite::Betti, &params))?;
    suite_outcome(config, rep)
}

fn bound(b: &BoundArgs, threads: u32) -> Result<Outcome, CliError> {
    let inst = &b.instance;
    let f = multiplier(inst)?;
    let js = js(inst.range.get(), inst.n)?;
    let mut config = instance_config("bound", inst, &f, threads);
    config["generic"] = json!(b.generic);
    let reports = pool(threads)?.install(|| {
        js.par_iter()
            .map(|&j| -> Result<_, CliError> {
                let p = Presentation::build(&f, j)?;
                let rep = cohomology_report(&p, ReportOptions { cap: inst.cap, linear_resolution: false, scan_sub: false });
                Ok((p, rep))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    let samples = reports.iter().map(|(p, rep)| (p.j(), &rep.top));
    let fit = fit_bound_samples(&f, samples, b.generic)?;
    let results = reports
        .iter()
        .map(|(p, rep)| {
            let mut m = base(p, rep);
            m["checks"].as_array_mut().unwrap().push(json!(Check::new(
                "linear_bound",
                fit.pass && rep.top.finite_length,
                format!("reg {:?}, d {}, fitted q {:?}", rep.top.regularity, fit.d, fit.q),
            )));
            Value::Object(m)
        })
        .collect();
    Ok(finish(config, results, caveats(inst.field)))
}

fn verify(v: &VerifyArgs, threads: u32) -> Result<Outcome, CliError> {
    let params = VerifyParams {
        n: v.n,
        r: v.r,
        j_range: v.j_range,
        field: v.field,
        cap: v.cap,
        seed: v.seed,
        count: v.count,
    };
    let config = json!({
        "command": "verify",
        "suite": v.suite.to_string(),
        "n": v.n,
        "r": v.r,
        "j_range": v.j_range,
        "field": v.field.map(|f| f.to_string()),
        "cap": v.cap,
        "seed": v.seed,
        "count": v.count,
        "threads": threads,
    });
    let rep = pool(threads)?.install(|| run_suite(v.suite, &params))?;
    suite_outcome(config, rep)
}
