//! CSV serialization and human-readable summaries.
//!
//! The CSV schema is stable: exactly the columns
//! `run_id,seed,t,gap,bound,feasibility_violation,wall_time`, in that order.
//! Floats are written in shortest round-trip form (`wall_time` with fixed
//! six decimals), so two runs of the same experiment produce byte-identical
//! files apart from the wall-time column.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::runner::RunRecord;

pub const CSV_HEADER: &str = "run_id,seed,t,gap,bound,feasibility_violation,wall_time";

/// Render records to CSV text, preserving their order.
pub fn to_csv(records: &[RunRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{:.6}",
            r.run_id,
            r.seed,
            fmt_num(r.t),
            fmt_num(r.gap),
            fmt_num(r.bound),
            fmt_num(r.feasibility_violation),
            r.wall_time,
        );
    }
    out
}

/// Write records to a CSV file, creating parent directories as needed.
pub fn write_csv(records: &[RunRecord], path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, to_csv(records))?;
    Ok(())
}

/// Read records back from a CSV file produced by [`write_csv`].
pub fn read_csv(path: &Path) -> Result<Vec<RunRecord>> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        Some(h) => {
            return Err(Error::CsvFormat(format!(
                "unexpected header `{h}`, expected `{CSV_HEADER}`"
            )))
        }
        None => return Err(Error::CsvFormat("empty file".into())),
    }
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(Error::CsvFormat(format!(
                "line {}: expected 7 fields, got {}",
                i + 2,
                fields.len()
            )));
        }
        let num = |s: &str, col: &str| -> Result<f64> {
            s.parse::<f64>()
                .map_err(|_| Error::CsvFormat(format!("line {}: bad {col} value `{s}`", i + 2)))
        };
        records.push(RunRecord {
            run_id: fields[0].to_string(),
            seed: fields[1].parse::<u64>().map_err(|_| {
                Error::CsvFormat(format!("line {}: bad seed `{}`", i + 2, fields[1]))
            })?,
            t: num(fields[2], "t")?,
            gap: num(fields[3], "gap")?,
            bound: num(fields[4], "bound")?,
            feasibility_violation: num(fields[5], "feasibility_violation")?,
            wall_time: num(fields[6], "wall_time")?,
        });
    }
    Ok(records)
}

/// Per-checkpoint verdict: does the replication mean respect the bound?
#[derive(Debug, Clone, PartialEq)]
pub struct CheckpointSummary {
    pub t: f64,
    pub mean_gap: f64,
    pub bound: f64,
    pub ratio: f64,
    pub pass: bool,
}

/// Summarize records per checkpoint. Aggregate rows are used when present;
/// otherwise means are recomputed from the raw rows.
pub fn summarize(records: &[RunRecord]) -> Vec<CheckpointSummary> {
    let aggregates: Vec<&RunRecord> = records.iter().filter(|r| r.run_id == "mean").collect();
    let rows: Vec<(f64, f64, f64)> = if aggregates.is_empty() {
        let mut times: Vec<f64> = Vec::new();
        for r in records {
            if !times.contains(&r.t) {
                times.push(r.t);
            }
        }
        times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        times
            .into_iter()
            .map(|t| {
                let group: Vec<&RunRecord> = records.iter().filter(|r| r.t == t).collect();
                let mean = group.iter().map(|r| r.gap).sum::<f64>() / group.len() as f64;
                (t, mean, group[0].bound)
            })
            .collect()
    } else {
        aggregates.iter().map(|r| (r.t, r.gap, r.bound)).collect()
    };
    rows.into_iter()
        .map(|(t, mean_gap, bound)| CheckpointSummary {
            t,
            mean_gap,
            bound,
            ratio: if bound.is_finite() && bound > 0.0 {
                mean_gap / bound
            } else {
                0.0
            },
            pass: mean_gap <= bound,
        })
        .collect()
}

pub fn all_pass(summaries: &[CheckpointSummary]) -> bool {
    summaries.iter().all(|s| s.pass)
}

/// Render the checkpoint table with one PASS/FAIL line per checkpoint.
pub fn render_summary(experiment_id: &str, summaries: &[CheckpointSummary]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "experiment {experiment_id}");
    let _ = writeln!(
        out,
        "{:>12}  {:>14}  {:>14}  {:>8}  result",
        "t", "mean gap", "bound", "ratio"
    );
    for s in summaries {
        let _ = writeln!(
            out,
            "{:>12}  {:>14.6e}  {:>14.6e}  {:>8.4}  {}",
            fmt_num(s.t),
            s.mean_gap,
            s.bound,
            s.ratio,
            if s.pass { "PASS" } else { "FAIL" }
        );
    }
    out
}

/// Integers render bare; everything else uses shortest round-trip form.
fn fmt_num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 9e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}
