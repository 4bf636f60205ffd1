//! Run a slice of the claim suite in parallel and print the report in each
//! output format. The JSON bytes do not depend on the worker count.
//!
//! ```bash
//! cargo run --release --example verification_report
//! ```

use apery_congruence::harness::{run_suite, OutputFormat, SuiteConfig};

fn main() -> apery_congruence::Result<()> {
    let config = SuiteConfig {
        claims: vec!["thm-main2".into(), "conj-kw".into(), "gen-p3r".into()],
        prime_max: 13,
        generalization_pairs: vec![(3, 2)],
        ..SuiteConfig::default()
    };
    let report = run_suite(&config)?;
    print!("{}", report.render(OutputFormat::Text)?);
    print!("{}", report.render(OutputFormat::Csv)?);

    let serial = run_suite(&SuiteConfig {
        workers: 1,
        ..config
    })?;
    assert_eq!(serial.to_json(), report.to_json());
    println!(
        "json: {} bytes, exit code {}",
        report.to_json().len(),
        report.exit_code()
    );
    Ok(())
}
