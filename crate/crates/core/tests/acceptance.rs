//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Exits 0 after reporting unless `ACCEPTANCE_STRICT=1`, in which case any FAIL exits 1.
//! `ACCEPTANCE_MAX_N` lowers the size caps (default 6); `ACCEPTANCE_ONLY=3,4` runs a subset.

use std::process::ExitCode;

use fused_specht::verify::{run_criterion, SuiteConfig, CRITERIA};

fn main() -> ExitCode {
    let max_n = std::env::var("ACCEPTANCE_MAX_N").ok().and_then(|s| s.parse().ok()).unwrap_or(6);
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|s| s == "1");
    let cfg = SuiteConfig::with_max_n(max_n);
    let only: Option<Vec<usize>> = std::env::var("ACCEPTANCE_ONLY").ok().map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect());
    let ids: Vec<usize> = (1..=CRITERIA.len()).filter(|id| only.as_ref().is_none_or(|o| o.contains(id))).collect();
    let mut failed = 0;
    for &id in &ids {
        let r = run_criterion(id, &cfg);
        let status = if r.passed { "PASS" } else { "FAIL" };
        if !r.passed {
            failed += 1;
        }
        println!("{status} [{:>2}] {} ({:.2}s, {} checks): {}", r.id, r.name, r.elapsed.as_secs_f64(), r.cases, r.detail);
    }
    println!("acceptance: {} passed, {failed} failed", ids.len() - failed);
    if strict && failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
