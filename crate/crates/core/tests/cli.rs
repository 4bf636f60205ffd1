use std::process::Command;

use apery_congruence::cli;
use apery_congruence::harness::VerificationReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["apery-verify"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "thm-main2", "--p", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS thm-main2 p=5"), "{out}");

    // main1 needs p > 3
    let (code, _, err) = run(&["verify", "thm-main1", "--p", "3"]);
    assert_eq!(code, 65, "{err}");
    assert_eq!(run(&["verify", "thm-main2", "--p", "9"]).0, 65);

    assert_eq!(run(&["verify", "no-such-claim", "--p", "5"]).0, 64);
    assert_eq!(run(&["verify", "thm-main2"]).0, 64);
    assert_eq!(run(&["verify", "thm-main2", "--p", "5", "--j", "1"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["--workers", "0", "list-claims"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn list_claims_and_eta() {
    let (code, out, _) = run(&["list-claims"]);
    assert_eq!(code, 0);
    for id in [
        "thm-main1",
        "thm-main2",
        "conj-kw",
        "kw-thm62",
        "gen-p3r",
        "lem5",
    ] {
        assert!(out.contains(id), "missing {id}");
    }
    let (code, out, _) = run(&["eta", "--order", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("agree through q^8"), "{out}");
}

#[test]
fn sweep_injection_contract() {
    let base = [
        "sweep",
        "--claims",
        "thm-main2,gen-p3r",
        "--pmax",
        "7",
        "--gen-pairs",
        "3:2",
    ];
    assert_eq!(run(&base).0, 0);
    let with = |id: &str| {
        let mut args = base.to_vec();
        args.extend(["--inject-failure", id]);
        run(&args).0
    };
    assert_eq!(with("gen-p3r"), 2);
    assert_eq!(with("thm-main2"), 1);
    assert_eq!(run(&["sweep", "--pmin", "2"]).0, 64);
    assert_eq!(run(&["sweep", "--claims", "bogus"]).0, 64);
}

#[test]
fn report_to_file_in_each_format() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--claims", "thm-main2,three-route", "--pmax", "13"];

    let json_path = dir.path().join("r.json");
    let mut argv = vec![
        "report",
        "--format",
        "json",
        "--out",
        json_path.to_str().unwrap(),
    ];
    argv.extend(args);
    assert_eq!(run(&argv).0, 0);
    let text = std::fs::read_to_string(&json_path).unwrap();
    let report = VerificationReport::from_json(&text).unwrap();
    assert_eq!(report.summary.total, 5 + 201);
    assert_eq!(report.to_json(), text);

    let (code, csv, _) = run(&[&["report", "--format", "csv"][..], &args].concat());
    assert_eq!(code, 0);
    assert!(csv.starts_with("claim_id,params,status,verdict,label,lhs,rhs,p,m,valuation,holds\n"));

    assert_eq!(
        run(&[&["report", "--format", "xml"][..], &args].concat()).0,
        64
    );
    let missing = dir.path().join("nope").join("r.json");
    let (code, _, _) = run(&[&["report", "--out", missing.to_str().unwrap()][..], &args].concat());
    assert_eq!(code, 74);
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_apery-verify");
    let status = Command::new(bin)
        .args(["verify", "conj-kw", "--p", "7"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = Command::new(bin)
        .args(["verify", "thm-main1", "--p", "3"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(65));
    let out = Command::new(bin)
        .args([
            "--workers",
            "1",
            "report",
            "--claims",
            "thm-main2",
            "--pmax",
            "11",
        ])
        .env("APERY_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = VerificationReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(report.summary.passed, 4);
}
