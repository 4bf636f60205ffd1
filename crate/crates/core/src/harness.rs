//! Parameter sweeps over the claim registry with deterministic reports.
//!
//! A suite expands into independent `(claim_id, params)` instances, which are
//! evaluated on a worker pool and then sorted by claim id and parameter
//! values, so the report bytes do not depend on the worker count. Worker
//! count, output destination and elapsed time are left out of the
//! serialized report.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::claims::{lookup, params, ClaimContext, ClaimResult, Params, REGISTRY};
use crate::error::{Error, Result};
use crate::exact::{is_prime, primes_in};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable consulted for the default worker count.
pub const WORKERS_ENV: &str = "APERY_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::Config(format!("unknown output format '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Claim ids to run; empty means the whole registry.
    pub claims: Vec<String>,
    pub prime_min: u64,
    pub prime_max: u64,
    /// Upper prime bound for the per-`j`/per-`k` lemma sweeps.
    pub lemma_prime_max: u64,
    /// Upper prime bound for `kw-thm62` (its arguments grow like `3 p^2`).
    pub kw_prime_max: u64,
    pub generalization_pairs: Vec<(u64, u32)>,
    pub eta_order: u64,
    /// Seeds `0..identity_samples` for the randomized hypergeometric identities.
    pub identity_samples: u64,
    pub workers: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

/// The part of a [`SuiteConfig`] that determines the results. This is what
/// the report echoes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub claims: Vec<String>,
    pub prime_min: u64,
    pub prime_max: u64,
    pub lemma_prime_max: u64,
    pub kw_prime_max: u64,
    pub generalization_pairs: Vec<(u64, u32)>,
    pub eta_order: u64,
    pub identity_samples: u64,
}

/// `$APERY_WORKERS` if set and positive, else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            claims: Vec::new(),
            prime_min: 3,
            prime_max: 31,
            lemma_prime_max: 31,
            kw_prime_max: 13,
            generalization_pairs: vec![(3, 1), (3, 2), (3, 3), (5, 2), (7, 2)],
            eta_order: 30,
            identity_samples: 200,
            workers: default_workers(),
            output_format: OutputFormat::Json,
            output_path: None,
        }
    }
}

impl SuiteConfig {
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            claims: self.claims.clone(),
            prime_min: self.prime_min,
            prime_max: self.prime_max,
            lemma_prime_max: self.lemma_prime_max,
            kw_prime_max: self.kw_prime_max,
            generalization_pairs: self.generalization_pairs.clone(),
            eta_order: self.eta_order,
            identity_samples: self.identity_samples,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.prime_min < 3 {
            return bad(format!("prime_min must be >= 3, got {}", self.prime_min));
        }
        if self.prime_min > self.prime_max {
            return bad(format!(
                "prime_min {} exceeds prime_max {}",
                self.prime_min, self.prime_max
            ));
        }
        if self.eta_order < 1 {
            return bad("eta_order must be >= 1".into());
        }
        if self.workers < 1 {
            return bad("workers must be >= 1".into());
        }
        if let Some(c) = self.claims.iter().find(|c| lookup(c).is_none()) {
            return bad(format!("unknown claim '{c}'"));
        }
        for &(p, r) in &self.generalization_pairs {
            if p < 3 || !is_prime(p) || r < 1 {
                return bad(format!(
                    "generalization pair ({p}, {r}) needs an odd prime p and r >= 1"
                ));
            }
        }
        Ok(())
    }

    fn selected(&self, id: &str) -> bool {
        self.claims.is_empty() || self.claims.iter().any(|c| c == id)
    }

    /// Every `(claim, params)` instance the suite will evaluate.
    pub fn instances(&self) -> Vec<(String, Params)> {
        let primes = primes_in(self.prime_min, self.prime_max);
        let above3: Vec<u64> = primes.iter().copied().filter(|&p| p > 3).collect();
        let lemma: Vec<u64> = above3
            .iter()
            .copied()
            .filter(|&p| p <= self.lemma_prime_max)
            .collect();
        let kw: Vec<u64> = primes
            .iter()
            .copied()
            .filter(|&p| p <= self.kw_prime_max)
            .collect();
        let cor4: Vec<u64> = primes.iter().copied().filter(|&p| p <= 11).collect();

        let mut out: Vec<(String, Params)> = Vec::new();
        let mut push = |id: &str, ps: &[(&str, i64)]| {
            if self.selected(id) {
                out.push((id.to_string(), params(ps)));
            }
        };
        for &p in &primes {
            push("thm-main2", &[("p", p as i64)]);
            push("conj-kw", &[("p", p as i64)]);
            push("h-membership", &[("p", p as i64)]);
        }
        for &p in &above3 {
            push("thm-main1", &[("p", p as i64)]);
        }
        for &p in &kw {
            for m in 1..=3 {
                for r in 1..=2 {
                    push("kw-thm62", &[("p", p as i64), ("m", m), ("r", r)]);
                }
            }
        }
        for &(p, r) in &self.generalization_pairs {
            push("gen-p3r", &[("p", p as i64), ("r", r as i64)]);
        }
        for &p in &lemma {
            let pi = p as i64;
            let n = (pi - 1) / 2;
            for id in ["eq-three", "lem-morley", "lem7", "split-symmetry"] {
                push(id, &[("p", pi)]);
            }
            for j in 0..pi {
                push("lem5", &[("p", pi), ("j", j)]);
                for k in 0..=n {
                    push("facp", &[("p", pi), ("j", j), ("k", k)]);
                }
            }
        }
        for n in 1..=20 {
            for j in 0..=n {
                push("lem-rutkowski", &[("n", n), ("j", j)]);
            }
            push("f-recursion", &[("n", n)]);
        }
        for m in 1..=20 {
            for j in 0..=10 {
                for k in 0..=10 {
                    push("lem2", &[("m", m), ("j", j), ("k", k)]);
                }
            }
        }
        for &p in &cor4 {
            for m in 1..=8 {
                for j in 0..=10 {
                    push("cor4", &[("m", m), ("j", j), ("p", p as i64)]);
                }
            }
        }
        for n in 0..=200 {
            push("three-route", &[("n", n)]);
        }
        for seed in 0..self.identity_samples as i64 {
            push("transform-357", &[("seed", seed)]);
            push("pfaff-saalschutz", &[("seed", seed)]);
        }
        push("eta-param", &[("order", self.eta_order as i64)]);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A conjectural claim did not hold.
    Finding,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub findings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub config: ConfigEcho,
    pub results: Vec<ClaimResult>,
    pub summary: Summary,
}

pub fn status_of(result: &ClaimResult) -> Status {
    match (result.passed, result.is_conjectural()) {
        (true, _) => Status::Pass,
        (false, true) => Status::Finding,
        (false, false) => Status::Fail,
    }
}

impl VerificationReport {
    /// Sorts results and recomputes the summary.
    pub fn assemble(config: ConfigEcho, mut results: Vec<ClaimResult>) -> Self {
        results.sort_by(|a, b| {
            a.claim_id
                .cmp(&b.claim_id)
                .then_with(|| a.param_key().cmp(&b.param_key()))
        });
        let mut summary = Summary {
            total: results.len(),
            ..Summary::default()
        };
        for r in &results {
            match status_of(r) {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Finding => summary.findings += 1,
            }
        }
        VerificationReport {
            version: TOOL_VERSION.to_string(),
            config,
            results,
            summary,
        }
    }

    /// 0 all pass, 1 proven-claim failure, 2 conjectural findings only.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else if self.summary.findings > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<VerificationReport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// One row per verdict.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        w.write_record([
            "claim_id",
            "params",
            "status",
            "verdict",
            "label",
            "lhs",
            "rhs",
            "p",
            "m",
            "valuation",
            "holds",
        ])
        .map_err(csv_err)?;
        for r in &self.results {
            let ps = format_params(&r.params);
            let status = status_label(status_of(r));
            for (i, v) in r.verdicts.iter().enumerate() {
                let opt = |x: Option<String>| x.unwrap_or_default();
                w.write_record([
                    r.claim_id.as_str(),
                    ps.as_str(),
                    status,
                    &i.to_string(),
                    &v.label,
                    &v.lhs.to_frac_string(),
                    &v.rhs.to_frac_string(),
                    &opt(v.prime.map(|p| p.to_string())),
                    &opt(v.exponent.map(|m| m.to_string())),
                    &opt(v.diff_valuation.map(|x| x.to_string())),
                    if v.holds { "true" } else { "false" },
                ])
                .map_err(csv_err)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// Human-readable listing: one line per instance, then the summary.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let status = status_label(status_of(r)).to_uppercase();
            let _ = writeln!(s, "{status:<7} {} {}", r.claim_id, format_params(&r.params));
            if !r.passed {
                for v in r.verdicts.iter().filter(|v| !v.holds) {
                    let _ = writeln!(s, "        {}", describe_verdict(v));
                }
            }
        }
        let Summary {
            total,
            passed,
            failed,
            findings,
        } = &self.summary;
        let _ = writeln!(
            s,
            "total {total}, passed {passed}, failed {failed}, findings {findings}"
        );
        s
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(self.to_json()),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => Ok(self.to_text()),
        }
    }

    pub fn write_to(&self, path: &Path, format: OutputFormat) -> Result<()> {
        let body = self.render(format)?;
        let mut f = std::fs::File::create(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        f.write_all(body.as_bytes())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Finding => "finding",
    }
}

pub fn format_params(ps: &Params) -> String {
    ps.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn describe_verdict(v: &crate::exact::CongruenceVerdict) -> String {
    let rel = if v.holds { "holds" } else { "FAILS" };
    match (v.prime, v.exponent) {
        (Some(p), Some(m)) => format!(
            "{}: {} == {} (mod {p}^{m}) {rel}, v_{p}(lhs - rhs) = {}",
            v.label,
            v.lhs,
            v.rhs,
            v.diff_valuation.map_or("?".to_string(), |x| x.to_string())
        ),
        _ => format!("{}: {} = {} {rel}", v.label, v.lhs, v.rhs),
    }
}

/// Runs the suite with an arbitrary per-instance evaluator.
pub fn run_suite_with<F>(config: &SuiteConfig, eval: F) -> Result<VerificationReport>
where
    F: Fn(&str, &Params) -> Result<ClaimResult> + Sync,
{
    config.validate()?;
    let instances = config.instances();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let results: Result<Vec<ClaimResult>> =
        pool.install(|| instances.par_iter().map(|(id, ps)| eval(id, ps)).collect());
    Ok(VerificationReport::assemble(config.echo(), results?))
}

pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let ctx = ClaimContext::new();
    run_suite_with(config, |id, ps| ctx.run_claim(id, ps))
}

/// The registry as printable lines.
pub fn registry_listing() -> String {
    let mut s = String::new();
    for c in REGISTRY {
        let params = format!("[{}]", c.params.join(", "));
        let _ = writeln!(s, "{:<17} {params:<10} {}", c.id, c.summary);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut c = SuiteConfig::default();
        assert!(c.validate().is_ok());
        c.prime_min = 2;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        let c = SuiteConfig {
            eta_order: 0,
            ..SuiteConfig::default()
        };
        assert!(c.validate().is_err());
        let c = SuiteConfig {
            workers: 0,
            ..SuiteConfig::default()
        };
        assert!(c.validate().is_err());
        let c = SuiteConfig {
            claims: vec!["nope".into()],
            ..SuiteConfig::default()
        };
        assert!(c.validate().is_err());
        let c = SuiteConfig {
            generalization_pairs: vec![(9, 1)],
            ..SuiteConfig::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn main2_sweep_3_to_13() {
        let c = SuiteConfig {
            claims: vec!["thm-main2".into()],
            prime_max: 13,
            workers: 2,
            ..SuiteConfig::default()
        };
        let report = run_suite(&c).unwrap();
        assert_eq!(report.results.len(), 5);
        assert_eq!(report.summary.passed, 5);
        assert_eq!(report.exit_code(), 0);
        let ps: Vec<i64> = report.results.iter().map(|r| r.params["p"]).collect();
        assert_eq!(ps, vec![3, 5, 7, 11, 13]);
    }

    #[test]
    fn finding_versus_failure() {
        let c = SuiteConfig {
            claims: vec!["gen-p3r".into(), "thm-main2".into()],
            prime_max: 5,
            generalization_pairs: vec![(3, 1), (3, 2)],
            workers: 1,
            ..SuiteConfig::default()
        };
        let ctx = ClaimContext::new();
        let flip = |target: &'static str, r: i64| {
            let ctx = &ctx;
            move |id: &str, ps: &Params| {
                let mut res = ctx.run_claim(id, ps)?;
                if id == target && ps.get("r").copied().unwrap_or(r) == r {
                    res.passed = false;
                }
                Ok(res)
            }
        };
        assert_eq!(
            run_suite_with(&c, flip("gen-p3r", 2)).unwrap().exit_code(),
            2
        );
        assert_eq!(
            run_suite_with(&c, flip("gen-p3r", 1)).unwrap().exit_code(),
            1
        );
        assert_eq!(
            run_suite_with(&c, flip("thm-main2", 0))
                .unwrap()
                .exit_code(),
            1
        );
        assert_eq!(run_suite_with(&c, flip("none", 0)).unwrap().exit_code(), 0);
    }

    #[test]
    fn formats_render() {
        let c = SuiteConfig {
            claims: vec!["lem-morley".into()],
            prime_max: 7,
            workers: 1,
            ..SuiteConfig::default()
        };
        let report = run_suite(&c).unwrap();
        let csv = report.to_csv().unwrap();
        assert!(csv.starts_with("claim_id,params,status"));
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.contains("lem-morley,p=5,pass,0,"));
        let text = report.to_text();
        assert!(text.contains("PASS    lem-morley p=7"));
        assert!(text.ends_with("total 2, passed 2, failed 0, findings 0\n"));
        assert!(!report.to_json().contains("workers"));
    }
}
