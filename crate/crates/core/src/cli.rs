//! Command-line front end. The binary is a one-line wrapper around [`run`].
//!
//! Exit codes: 0 all pass, 1 proven-claim failure, 2 conjectural finding only,
//! 64 usage error, 65 precondition violation, 74 I/O error.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::claims::{is_conjectural, ClaimContext, Params};
use crate::error::Error;
use crate::eta::parametrization_sides;
use crate::harness::{
    describe_verdict, format_params, registry_listing, run_suite_with, OutputFormat, SuiteConfig,
    WORKERS_ENV,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_FINDING: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PRECONDITION: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(
    name = "apery-verify",
    version,
    about = "Exact supercongruence checks for the Apéry-like numbers J2(n)"
)]
struct Cli {
    /// Worker threads (default: $APERY_WORKERS, else all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a single claim instance
    Verify {
        claim_id: String,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        seed: Option<i64>,
        #[arg(long)]
        order: Option<i64>,
    },
    /// Run claims over a range of primes and print a text summary
    Sweep {
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Compare both sides of the eta-quotient parametrization through q^N
    Eta {
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    /// Print the claim registry
    ListClaims,
    /// Run the suite and emit a machine-readable report
    Report {
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value_t = 3)]
    pmin: u64,
    #[arg(long, default_value_t = 31)]
    pmax: u64,
    /// Comma-separated claim ids (default: all)
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    #[arg(long)]
    lemma_pmax: Option<u64>,
    #[arg(long)]
    eta_order: Option<u64>,
    /// Comma-separated p:r pairs for the mod p^(3r) generalization, e.g. 3:2,5:2
    #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
    gen_pairs: Option<Vec<(u64, u32)>>,
    /// Mark every result of this claim as failed (exercises the exit-code contract)
    #[arg(long, hide = true)]
    inject_failure: Option<String>,
}

impl SuiteArgs {
    fn config(&self, workers: Option<usize>) -> SuiteConfig {
        let base = SuiteConfig::default();
        SuiteConfig {
            claims: self.claims.clone(),
            prime_min: self.pmin,
            prime_max: self.pmax,
            lemma_prime_max: self.lemma_pmax.unwrap_or(base.lemma_prime_max),
            eta_order: self.eta_order.unwrap_or(base.eta_order),
            generalization_pairs: self
                .gen_pairs
                .clone()
                .unwrap_or(base.generalization_pairs.clone()),
            workers: workers.unwrap_or(base.workers),
            ..base
        }
    }
}

fn parse_pair(s: &str) -> Result<(u64, u32), String> {
    let (p, r) = s
        .split_once(':')
        .ok_or_else(|| format!("expected p:r, got '{s}'"))?;
    Ok((
        p.parse().map_err(|_| format!("bad prime in '{s}'"))?,
        r.parse().map_err(|_| format!("bad exponent in '{s}'"))?,
    ))
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnknownClaim(_)
        | Error::MalformedParams { .. }
        | Error::Config(_)
        | Error::Parse(_) => EXIT_USAGE,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_PRECONDITION,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    if cli.workers == Some(0) {
        let _ = writeln!(err, "error: --workers must be >= 1 (or set {WORKERS_ENV})");
        return EXIT_USAGE;
    }
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<i32> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match cli.command {
        Command::ListClaims => {
            write!(out, "{}", registry_listing()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            claim_id,
            p,
            n,
            j,
            k,
            m,
            r,
            seed,
            order,
        } => {
            let named = [
                ("p", p),
                ("n", n),
                ("j", j),
                ("k", k),
                ("m", m),
                ("r", r),
                ("seed", seed),
                ("order", order),
            ];
            let ps: Params = named
                .iter()
                .filter_map(|(name, v)| v.map(|v| (name.to_string(), v)))
                .collect();
            let res = ClaimContext::new().run_claim(&claim_id, &ps)?;
            let status = if res.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {} {}",
                res.claim_id,
                format_params(&res.params)
            )
            .map_err(io)?;
            for v in &res.verdicts {
                writeln!(out, "  {}", describe_verdict(v)).map_err(io)?;
            }
            Ok(
                match (res.passed, is_conjectural(&res.claim_id, &res.params)) {
                    (true, _) => EXIT_OK,
                    (false, true) => EXIT_FINDING,
                    (false, false) => EXIT_FAIL,
                },
            )
        }
        Command::Eta { order } => {
            let (lhs, rhs) = parametrization_sides(order)?;
            writeln!(out, "eta quotient: {lhs}").map_err(io)?;
            writeln!(out, "sum J2(n) t^n: {rhs}").map_err(io)?;
            let ok = lhs == rhs && lhs.coeffs().iter().all(|c| c.is_integer());
            writeln!(
                out,
                "{} through q^{order}",
                if ok { "agree" } else { "DISAGREE" }
            )
            .map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Sweep { suite } => {
            let config = suite.config(cli.workers);
            let report = run_with_injection(&config, suite.inject_failure.as_deref(), err)?;
            write!(out, "{}", report.to_text()).map_err(io)?;
            Ok(report.exit_code())
        }
        Command::Report {
            format,
            out: path,
            suite,
        } => {
            let format: OutputFormat = format.parse()?;
            let mut config = suite.config(cli.workers);
            config.output_format = format;
            config.output_path = path.clone();
            let report = run_with_injection(&config, suite.inject_failure.as_deref(), err)?;
            match &path {
                Some(path) => report.write_to(path, format)?,
                None => write!(out, "{}", report.render(format)?).map_err(io)?,
            }
            Ok(report.exit_code())
        }
    }
}

fn run_with_injection(
    config: &SuiteConfig,
    inject: Option<&str>,
    err: &mut dyn Write,
) -> crate::Result<crate::harness::VerificationReport> {
    let start = Instant::now();
    let ctx = ClaimContext::new();
    let report = run_suite_with(config, |id, ps| {
        let mut res = ctx.run_claim(id, ps)?;
        if inject == Some(id) {
            res.passed = false;
        }
        Ok(res)
    })?;
    let _ = writeln!(
        err,
        "{} instances in {:.2}s on {} worker(s)",
        report.summary.total,
        start.elapsed().as_secs_f64(),
        config.workers
    );
    Ok(report)
}
