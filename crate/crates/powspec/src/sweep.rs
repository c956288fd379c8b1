//! Parameter grids run in parallel, one independent report per `(k, p)`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use powspec_core::primes::is_prime;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::verify::{run_verification, VerifyConfig};

#[derive(Debug)]
pub struct SweepEntry {
    pub k: u32,
    pub p: u64,
    /// Errors are kept per pair so one failure does not abort the grid.
    pub outcome: std::result::Result<VerificationReport, String>,
}

/// Parses `"A..B"` (inclusive) or a single `"A"`.
pub fn parse_k_range(s: &str) -> Result<RangeInclusive<u32>> {
    let bad = || Error::Usage(format!("k range must look like A..B, got {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: u32 = lo.parse().map_err(|_| bad())?;
    let hi: u32 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Comma-separated list; an empty string is an empty list.
pub fn parse_p_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Usage(format!("not an integer in p list: {t:?}"))))
        .collect()
}

/// Validates the whole grid up front, then runs every pair in parallel.
/// Output order is `k` ascending, then `p` in the given order.
pub fn sweep(ks: RangeInclusive<u32>, ps: &[u64], config: &VerifyConfig) -> Result<Vec<SweepEntry>> {
    if let Some(&p) = ps.iter().find(|&&p| p % 2 == 0 || !is_prime(p)) {
        return Err(Error::Usage(format!("p must be an odd prime, got {p}")));
    }
    if ps.is_empty() {
        return Ok(Vec::new());
    }
    if *ks.start() < 2 {
        return Err(Error::Usage(format!("k must be at least 2, got {}", ks.start())));
    }
    let pairs: Vec<(u32, u64)> = ks.flat_map(|k| ps.iter().map(move |&p| (k, p))).collect();
    Ok(pairs
        .into_par_iter()
        .map(|(k, p)| SweepEntry { k, p, outcome: run_verification(k, p, config, None).map_err(|e| e.to_string()) })
        .collect())
}

/// Fixed-width table, one row per pair.
pub fn summary_table(entries: &[SweepEntry]) -> String {
    let mut s = format!(
        "{:>3} {:>5} {:>6} {:>9} {:>9} {:>5} {:>5} {:>9} {:>8}  {}\n",
        "k", "p", "n", "m_model", "m_true", "pass", "fail", "mismatch", "skipped", "status"
    );
    for e in entries {
        match &e.outcome {
            Ok(r) => {
                let _ = writeln!(
                    s,
                    "{:>3} {:>5} {:>6} {:>9} {:>9} {:>5} {:>5} {:>9} {:>8}  {}",
                    e.k,
                    e.p,
                    r.params.n,
                    r.params.m_model,
                    r.params.m_true,
                    r.summary.pass,
                    r.summary.fail,
                    r.summary.mismatch_reported,
                    r.summary.skipped,
                    if r.passed() { "pass" } else { "fail" }
                );
            }
            Err(msg) => {
                let _ = writeln!(s, "{:>3} {:>5}  error: {msg}", e.k, e.p);
            }
        }
    }
    s
}

/// 2 if any pair errored, else 1 if any report failed, else 0.
pub fn exit_code(entries: &[SweepEntry]) -> i32 {
    if entries.iter().any(|e| e.outcome.is_err()) {
        2
    } else if entries.iter().any(|e| e.outcome.as_ref().is_ok_and(|r| !r.passed())) {
        1
    } else {
        0
    }
}
