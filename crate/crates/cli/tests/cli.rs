use std::process::{Command, Output};

use zetalab_cli::output::{
    Approximation, BernoulliEntry, EulerGammaValue, ExactValue, PrimesOutput, Report, VerifyOutput,
};
use zetalab_core::{bernoulli, parse_rational, BoundKind};

fn zetalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetalab")).args(args).output().expect("run zetalab")
}

fn stdout(args: &[&str]) -> String {
    let output = zetalab(args);
    assert_eq!(output.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&output.stderr));
    String::from_utf8(output.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    zetalab(args).status.code().unwrap()
}

#[test]
fn bernoulli_table_text() {
    let text = stdout(&["bernoulli", "7"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[1], "1 -1/2");
    assert_eq!(lines[7], "7 0");
    assert_eq!(stdout(&["bernoulli", "0"]), "0 1\n");
}

#[test]
fn bernoulli_json_and_csv() {
    let rows: Vec<BernoulliEntry> = serde_json::from_str(&stdout(&["bernoulli", "12", "--format", "json"])).unwrap();
    assert_eq!(rows.last().unwrap().value, parse_rational("-691/2730").unwrap());
    assert!(rows.iter().all(|r| r.value == bernoulli(r.n)));
    let csv = stdout(&["bernoulli", "3", "--format", "csv"]);
    assert_eq!(csv, "n,value\n0,1\n1,-1/2\n2,1/6\n3,0\n");
}

#[test]
fn zeta_commands() {
    assert!(stdout(&["zeta", "--exact-even", "2"]).starts_with("zeta(4) = 1/90 * pi^4\n"));

    let dirichlet: Approximation =
        serde_json::from_str(&stdout(&["zeta", "--dirichlet", "2", "--terms", "1", "--format", "json"])).unwrap();
    assert_eq!(dirichlet.re, "1");
    assert!(dirichlet.error.bound <= 1.0 && dirichlet.error.kind == BoundKind::RigorousTail);

    let product: Approximation =
        serde_json::from_str(&stdout(&["zeta", "--euler-product", "2", "--prime-limit", "2", "--format", "json"]))
            .unwrap();
    assert!(product.re.starts_with("1.333333"));
    assert!(product.converged.is_some());

    let rigorous = stdout(&["zeta", "--euler-product", "2", "--rigorous"]);
    assert!(rigorous.contains("(rigorous_tail)"));

    let complex: Approximation =
        serde_json::from_str(&stdout(&["zeta", "--dirichlet", "2", "--imag", "-1", "--format", "json"])).unwrap();
    assert!(complex.im.is_some());
}

#[test]
fn zeta_csv_header_is_fixed() {
    let csv = stdout(&["zeta", "--dirichlet", "3", "--terms", "10", "--format", "csv"]);
    assert!(csv.starts_with("name,method,re,im,error,error_kind,params,converged\n"));
}

#[test]
fn gamma_commands() {
    assert!(stdout(&["gamma", "2.5", "--method", "exact"]).starts_with("gamma(5/2) = 3/4 * sqrt(pi)\n"));
    assert!(stdout(&["gamma", "5", "--method", "exact"]).starts_with("gamma(5) = 24\n"));
    assert!(stdout(&["gamma", "-3/2"]).starts_with("gamma(-3/2) = 4/3 * sqrt(pi)\n"));

    let exact: ExactValue = serde_json::from_str(&stdout(&["gamma", "7/2", "--format", "json"])).unwrap();
    assert_eq!(exact.exact.to_string(), "15/8 * sqrt(pi)");

    let gauss: Approximation =
        serde_json::from_str(&stdout(&["gamma", "1/2", "--method", "gauss", "--terms", "1000", "--format", "json"]))
            .unwrap();
    let value: f64 = gauss.re.parse().unwrap();
    assert!((value - std::f64::consts::PI.sqrt()).abs() <= gauss.error.bound);
}

#[test]
fn gamma_errors() {
    let output = zetalab(&["gamma", "0"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("pole"));
    assert_eq!(code(&["gamma", "-4"]), 2);
    assert_eq!(code(&["gamma", "1/3", "--method", "exact"]), 2);
    assert_eq!(code(&["gamma", "x"]), 2);
}

#[test]
fn euler_gamma_values() {
    assert!(stdout(&["euler-gamma", "1"]).starts_with("euler-gamma(m=1, literal) ~ 1\n"));
    assert!(stdout(&["euler-gamma", "2"]).contains("~ 0.806852819440055"));
    let midpoint: EulerGammaValue =
        serde_json::from_str(&stdout(&["euler-gamma", "100000", "--method", "midpoint", "--format", "json"])).unwrap();
    assert!(midpoint.value.starts_with("0.577215664"));
    assert_eq!(code(&["euler-gamma", "0"]), 2);
}

#[test]
fn verify_outcomes() {
    let single: VerifyOutput = serde_json::from_str(&stdout(&[
        "verify",
        "--identities",
        "reflection",
        "--grid",
        "0.5",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(single.reports.len(), 1);
    assert_eq!(single.reports[0].residual.as_deref(), Some("0"));

    let with_pole = stdout(&["verify", "--identities", "zcot-partial-fraction", "--grid", "pi,1", "--format", "csv"]);
    assert!(with_pole.starts_with("identity,argument,lhs,rhs,residual,params,threshold,status,note\n"));
    assert!(with_pole.contains(",excluded,"));
    assert!(with_pole.contains(",pass,"));

    assert_eq!(code(&["verify", "--identities", "sine-product", "--terms", "10"]), 1);
    assert_eq!(code(&["verify", "--grid", "1,,2"]), 2);
    assert_eq!(code(&["verify", "--identities", "nonsense"]), 2);
}

#[test]
fn default_verify_passes() {
    let text = stdout(&["verify"]);
    assert!(text.trim_end().ends_with("47 passed, 0 failed, 0 excluded"));
}

#[test]
fn report_is_deterministic_in_every_format() {
    for format in ["text", "json", "csv"] {
        assert_eq!(zetalab(&["report", "--format", format]).stdout, zetalab(&["report", "--format", format]).stdout);
    }
    let report: Report = serde_json::from_str(&stdout(&["report", "--format", "json"])).unwrap();
    assert_eq!(report.values.len(), 16);
    let text = stdout(&["report"]);
    assert!(text.lines().any(|l| l == "zeta(6) = 1/945 * pi^6"));
    let csv = stdout(&["report", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("name,exact,decimal"));
    assert_eq!(csv.lines().count(), 17);
}

#[test]
fn primes_listing() {
    let primes: PrimesOutput = serde_json::from_str(&stdout(&["primes", "30", "--format", "json"])).unwrap();
    assert_eq!(primes.primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    assert_eq!(primes.count, 10);
    assert_eq!(stdout(&["primes", "1"]), "");
}

#[test]
fn global_options() {
    assert_eq!(code(&["report", "--digits", "39"]), 2);
    assert_eq!(code(&["report", "--digits", "0"]), 2);
    assert_eq!(code(&["report", "--precision", "16"]), 2);
    assert_eq!(code(&["report", "--format", "xml"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["--help"]), 0);

    let long = stdout(&["zeta", "--exact-even", "1", "--precision", "256", "--digits", "60"]);
    assert!(long.contains("1.64493406684822643647241516664602518921894990120679843773556"));
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("zetalab-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let output = zetalab(&["report", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["report", "--format", "csv"]));
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(code(&["report", "--out", "/nonexistent-dir/x/report.txt"]), 2);
}
