//! Parallel Laplacian-integrality scan over a range of `n`.
//!
//! Work is cut into chunks; each chunk is computed on a rayon pool and its
//! records are written in ascending `n` before the next chunk starts, so the
//! output does not depend on the worker count.

use std::io::Write;
use std::time::Instant;

use comax_core::quotient::full_spectrum;
use comax_core::Modulus;
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

pub const CSV_HEADER: &str =
    "n,factorization,laplacian_integral,distinct_prime_count,residual_degree,wall_time_ms";

const CHUNK: u64 = 512;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub n: u64,
    pub factorization: String,
    pub laplacian_integral: bool,
    pub distinct_prime_count: usize,
    pub residual_degree: usize,
    /// Only measured when timing is requested, since it breaks reproducibility.
    pub wall_time_ms: Option<f64>,
}

impl ScanRecord {
    pub fn csv_line(&self) -> String {
        let time = self
            .wall_time_ms
            .map(|t| format!("{t:.3}"))
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.factorization,
            self.laplacian_integral,
            self.distinct_prime_count,
            self.residual_degree,
            time
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Filter {
    All,
    Integral,
    Nonintegral,
}

impl Filter {
    fn keeps(self, r: &ScanRecord) -> bool {
        match self {
            Filter::All => true,
            Filter::Integral => r.laplacian_integral,
            Filter::Nonintegral => !r.laplacian_integral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub from: u64,
    pub to: u64,
    pub workers: usize,
    pub filter: Filter,
    pub timing: bool,
    pub limit: u64,
    pub format: ScanFormat,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub scanned: u64,
    pub integral: u64,
    pub written: u64,
}

impl ScanSummary {
    pub fn line(&self) -> String {
        format!(
            "scanned {} values: {} integral, {} non-integral, {} written",
            self.scanned,
            self.integral,
            self.scanned - self.integral,
            self.written
        )
    }
}

/// Quotient-path record for one `n`, without any dense oracle work.
pub fn scan_one(n: u64, timing: bool) -> Result<ScanRecord, CliError> {
    let start = Instant::now();
    let m = Modulus::new(n)?;
    let spec = full_spectrum(&m)?;
    let wall = start.elapsed().as_secs_f64() * 1e3;
    Ok(ScanRecord {
        n,
        factorization: m.factorization_string(),
        laplacian_integral: spec.is_integral(),
        distinct_prime_count: m.distinct_prime_count(),
        residual_degree: spec.residual().degree(),
        wall_time_ms: timing.then_some(wall),
    })
}

pub fn validate(cfg: &ScanConfig) -> Result<(), CliError> {
    if cfg.from < 3 {
        return Err(CliError::Usage(format!(
            "n must be at least 3 (got from = {})",
            cfg.from
        )));
    }
    if cfg.from > cfg.to {
        return Err(CliError::Usage(format!(
            "empty range: from = {} exceeds to = {}",
            cfg.from, cfg.to
        )));
    }
    if cfg.to > cfg.limit {
        return Err(CliError::Usage(format!(
            "to = {} exceeds the scan limit {}",
            cfg.to, cfg.limit
        )));
    }
    if cfg.workers == 0 {
        return Err(CliError::Usage(String::from("workers must be at least 1")));
    }
    Ok(())
}

/// Runs the scan and streams records to `out` in ascending `n`.
pub fn run(cfg: &ScanConfig, out: &mut dyn Write) -> Result<ScanSummary, CliError> {
    validate(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.workers)))?;
    let io = |e| CliError::io("writing scan output", e);
    let mut summary = ScanSummary::default();
    let mut first_json = true;
    match cfg.format {
        ScanFormat::Csv => writeln!(out, "{CSV_HEADER}").map_err(io)?,
        ScanFormat::Json => write!(out, "[").map_err(io)?,
    }
    let mut start = cfg.from;
    while start <= cfg.to {
        let end = cfg.to.min(start + CHUNK - 1);
        let records: Vec<ScanRecord> = pool.install(|| {
            (start..=end)
                .into_par_iter()
                .map(|n| scan_one(n, cfg.timing))
                .collect::<Result<_, _>>()
        })?;
        for r in records {
            summary.scanned += 1;
            summary.integral += r.laplacian_integral as u64;
            if !cfg.filter.keeps(&r) {
                continue;
            }
            summary.written += 1;
            match cfg.format {
                ScanFormat::Csv => writeln!(out, "{}", r.csv_line()).map_err(io)?,
                ScanFormat::Json => {
                    let sep = if first_json { "\n" } else { ",\n" };
                    first_json = false;
                    let line = serde_json::to_string(&r).expect("records serialize");
                    write!(out, "{sep}  {line}").map_err(io)?;
                }
            }
        }
        start = end + 1;
    }
    if cfg.format == ScanFormat::Json {
        writeln!(out, "{}]", if first_json { "" } else { "\n" }).map_err(io)?;
    }
    out.flush().map_err(io)?;
    Ok(summary)
}
