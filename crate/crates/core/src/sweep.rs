//! Exponents over a box of multiplicities on a fixed set of lines.

use std::collections::HashMap;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponents::exponents;
use crate::model::{LineForm, Multiarrangement};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parity {
    #[default]
    Any,
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Jsonl,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub lines: Vec<LineForm>,
    pub min: usize,
    pub max: usize,
    pub balanced_only: bool,
    pub parity: Parity,
    pub workers: usize,
    /// Record wall-clock time per instance. Off by default so that output is
    /// reproducible byte for byte.
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(lines: Vec<LineForm>, min: usize, max: usize) -> Self {
        SweepConfig { lines, min, max, balanced_only: false, parity: Parity::Any, workers: 1, timing: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lines.is_empty() {
            return Err(Error::InvalidConfig("no lines given".into()));
        }
        if self.min < 1 || self.max < self.min {
            return Err(Error::InvalidConfig(format!(
                "need 1 <= min <= max, got min = {}, max = {}",
                self.min, self.max
            )));
        }
        if self.workers < 1 {
            return Err(Error::InvalidConfig("worker count must be at least 1".into()));
        }
        Multiarrangement::new(self.lines.clone(), vec![1; self.lines.len()])?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub mults: Vec<usize>,
    pub d1: usize,
    pub d2: usize,
    pub delta: usize,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

/// Every vector in `[min, max]^n`, first coordinate most significant.
pub fn multiplicity_box(n: usize, min: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 || max < min {
        return out;
    }
    let mut cur = vec![min; n];
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max {
                cur[i] += 1;
                break;
            }
            cur[i] = min;
        }
    }
}

fn keep(config: &SweepConfig, mults: &[usize]) -> bool {
    let size: usize = mults.iter().sum();
    let top = mults.iter().copied().max().unwrap_or(0);
    if config.balanced_only && 2 * top >= size {
        return false;
    }
    match config.parity {
        Parity::Any => true,
        Parity::Even => size.is_multiple_of(2),
        Parity::Odd => !size.is_multiple_of(2),
    }
}

fn evaluate(config: &SweepConfig, mults: &[usize]) -> Result<SweepRecord> {
    let start = Instant::now();
    let a = Multiarrangement::new(config.lines.clone(), mults.to_vec())?;
    let r = exponents(&a)?;
    Ok(SweepRecord {
        mults: mults.to_vec(),
        d1: r.pair.d1,
        d2: r.pair.d2,
        delta: r.pair.delta(),
        method: r.method.as_str().to_string(),
        ms: config.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Records in lexicographic order of the multiplicity vector, independent of
/// the worker count.
pub fn sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    let vectors: Vec<Vec<usize>> = multiplicity_box(config.lines.len(), config.min, config.max)
        .into_iter()
        .filter(|m| keep(config, m))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    pool.install(|| vectors.par_iter().map(|m| evaluate(config, m)).collect())
}

pub fn csv_header(n: usize) -> String {
    let mut cols: Vec<String> = (1..=n).map(|i| format!("m{i}")).collect();
    cols.extend(["d1", "d2", "delta", "method", "ms"].map(String::from));
    cols.join(",")
}

pub fn write_records(
    out: &mut impl Write,
    records: &[SweepRecord],
    n: usize,
    format: OutputFormat,
) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{}", csv_header(n))?;
            for r in records {
                let mults: Vec<String> = r.mults.iter().map(|m| m.to_string()).collect();
                let ms = r.ms.map(|v| v.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{},{},{},{}", mults.join(","), r.d1, r.d2, r.delta, r.method, ms)?;
            }
        }
        OutputFormat::Jsonl => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
    }
    Ok(())
}

/// Pairs `(i, j)` of record indices with `mults[j] = mults[i] + δ_H` for
/// some `H` and `|Δ_i − Δ_j| ≠ 1`.
pub fn delta_h_violations(records: &[SweepRecord]) -> Vec<(usize, usize)> {
    let index: HashMap<&[usize], usize> =
        records.iter().enumerate().map(|(i, r)| (r.mults.as_slice(), i)).collect();
    let mut bad = Vec::new();
    for (i, r) in records.iter().enumerate() {
        let mut next = r.mults.clone();
        for h in 0..next.len() {
            next[h] += 1;
            if let Some(&j) = index.get(next.as_slice()) {
                if r.delta.abs_diff(records[j].delta) != 1 {
                    bad.push((i, j));
                }
            }
            next[h] -= 1;
        }
    }
    bad
}
