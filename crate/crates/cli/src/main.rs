mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use args::{Cli, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] lcreg_core::Error),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
    #[error("serializing report: {0}")]
    Json(#[from] serde_json::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("lcreg: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let start = Instant::now();
    let outcome = run::run(&cli.command, cli.threads)?;
    let elapsed = start.elapsed();
    let text = match cli.format {
        Format::Json => {
            let report = json!({
                "config": outcome.config,
                "results": outcome.results,
                "caveats": outcome.caveats,
                "timing": { "total_ms": elapsed.as_secs_f64() * 1e3, "threads": cli.threads },
            });
            serde_json::to_string_pretty(&report)? + "\n"
        }
        Format::Csv => csv(&outcome.config, &outcome.results)?,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    for r in &outcome.results {
        for c in r["checks"].as_array().into_iter().flatten() {
            if c["pass"] != Value::Bool(true) {
                eprintln!("FAIL j={} {}: {}", r["j"], c["name"].as_str().unwrap_or(""), c["detail"].as_str().unwrap_or(""));
            }
        }
    }
    Ok(outcome.pass)
}

fn config_hash(config: &Value) -> Result<String, CliError> {
    let digest = Sha256::digest(serde_json::to_vec(config)?);
    Ok(digest.iter().take(8).map(|b| format!("{b:02x}")).collect())
}

fn csv(config: &Value, results: &[Value]) -> Result<String, CliError> {
    let hash = config_hash(config)?;
    let mut out = String::from("config-hash,j,regularity,length,hilbert,verdict\n");
    let field = |v: &Value| if v.is_null() { String::new() } else { v.to_string() };
    for r in results {
        let hilbert: Vec<String> =
            r["hilbert"].as_array().into_iter().flatten().map(Value::to_string).collect();
        let pass = r["checks"].as_array().into_iter().flatten().all(|c| c["pass"] == Value::Bool(true));
        out.push_str(&format!(
            "{hash},{},{},{},{},{}\n",
            r["j"],
            field(&r["regularity"]),
            field(&r["length"]),
            hilbert.join(";"),
            if pass { "pass" } else { "fail" }
        ));
    }
    Ok(out)
}
