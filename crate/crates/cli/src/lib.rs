//! The `zetalab` command-line tool.
//!
//! [`run`] parses arguments, executes one command and returns what should
//! be printed along with the process exit code: 0 on success, 1 when the
//! identity suite reports a failure, 2 for usage and domain errors.

pub mod args;
pub mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::Parser;
use thiserror::Error;
use zetalab_core::identities::{parse_grid, GridSpec, Verdict};
use zetalab_core::zeta::{euler_factor_magnitudes, CONVERGENCE_EPSILON};
use zetalab_core::{
    bernoulli_table, euler_constant, gamma, gamma_closed_form, gamma_gauss, gamma_weierstrass,
    parse_rational, pi_power_eval, product_convergence_check, run_identity_suite, sieve_primes,
    zeta_dirichlet, zeta_euler_product, zeta_even_exact, ApproxReal, BigRational, BoundedValue,
    Complex, EulerConstantMethod, EulerProductMode, GammaArgument, Identity, PiPowerExact,
    Precision, SuiteConfig, ZetaArgument,
};

use args::{Cli, Command, EulerMethod, GammaArgs, GammaMethod, VerifyArgs, ZetaArgs};
use output::{
    Approximation, BernoulliEntry, Document, EulerGammaValue, ExactValue, PrimesOutput, Report,
    VerifyOutput, VerifySummary,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] zetalab_core::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// What a run produced.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Rendering settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub precision: Precision,
    pub digits: usize,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((document, code)) => {
            let rendered = document.render(cli.output.format);
            match &cli.output.out {
                Some(path) => match std::fs::write(path, &rendered) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(source) => failure(CliError::Io { path: path.display().to_string(), source }),
                },
                None => Outcome { code, stdout: rendered, stderr: String::new() },
            }
        }
        Err(e) => failure(e),
    }
}

fn failure(error: CliError) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {error}\n") }
}

/// Runs the parsed command; the exit code is 1 only for failed verification.
pub fn execute(cli: &Cli) -> Result<(Document, i32), CliError> {
    let precision = Precision::new(cli.output.precision)?;
    let digits = cli.output.digits;
    if digits == 0 || digits > precision.decimal_digits() {
        return Err(CliError::Usage(format!(
            "--digits must be between 1 and {} at {} bits",
            precision.decimal_digits(),
            precision.bits()
        )));
    }
    let settings = Settings { precision, digits };
    let document = match &cli.command {
        Command::Bernoulli { n_max } => bernoulli_command(*n_max),
        Command::Zeta(args) => zeta_command(args, settings)?,
        Command::Gamma(args) => gamma_command(args, settings)?,
        Command::EulerGamma(args) => euler_gamma_command(args.m, args.method, settings)?,
        Command::Verify(args) => return verify_command(args, settings),
        Command::Report => Document::Report(report(settings)),
        Command::Primes { limit } => {
            let primes = sieve_primes(*limit).primes().to_vec();
            Document::Primes(PrimesOutput { limit: *limit, count: primes.len(), primes })
        }
    };
    Ok((document, EXIT_OK))
}

fn bernoulli_command(n_max: usize) -> Document {
    let table = bernoulli_table(n_max);
    Document::Bernoulli(
        table.values().iter().enumerate().map(|(n, b)| BernoulliEntry { n, value: b.clone() }).collect(),
    )
}

fn exact_value(name: String, exact: PiPowerExact, settings: Settings) -> ExactValue {
    let decimal = pi_power_eval(&exact, settings.precision).to_decimal(settings.digits);
    ExactValue { name, exact, decimal }
}

fn zeta_command(args: &ZetaArgs, settings: Settings) -> Result<Document, CliError> {
    let p = settings.precision;
    if let Some(n) = args.exact_even {
        let exact = zeta_even_exact(n)?;
        return Ok(Document::Exact(exact_value(format!("zeta({})", 2 * u64::from(n)), exact, settings)));
    }
    let (re_text, method) = match (&args.dirichlet, &args.euler_product) {
        (Some(s), _) => (s, "dirichlet"),
        (None, Some(s)) => (s, "euler-product"),
        (None, None) => return Err(CliError::Usage("choose --exact-even, --dirichlet or --euler-product".into())),
    };
    let re = parse_rational(re_text)?;
    let im = parse_rational(&args.imag)?;
    let s = ZetaArgument::new(Complex::new(
        ApproxReal::from_rational(&re, p),
        ApproxReal::from_rational(&im, p),
    ))?;
    let name = if im == BigRational::from_integer(0.into()) {
        format!("zeta({re})")
    } else {
        format!("zeta({re} + {im} i)")
    };
    let (value, params, converged) = if method == "dirichlet" {
        let value = zeta_dirichlet(&s, args.terms, p)?;
        (value, BTreeMap::from([("terms".to_string(), args.terms)]), None)
    } else {
        let mode = if args.rigorous { EulerProductMode::Rigorous } else { EulerProductMode::Heuristic };
        let value = zeta_euler_product(&s, args.prime_limit, mode, p)?;
        let magnitudes = euler_factor_magnitudes(&s, &sieve_primes(args.prime_limit));
        let converged = if magnitudes.is_empty() {
            None
        } else {
            Some(product_convergence_check(&magnitudes, CONVERGENCE_EPSILON)?)
        };
        (value, BTreeMap::from([("prime_limit".to_string(), args.prime_limit)]), converged)
    };
    Ok(Document::Approximation(complex_approximation(name, method, value, params, converged, settings)))
}

fn complex_approximation(
    name: String,
    method: &str,
    value: BoundedValue<Complex>,
    params: BTreeMap<String, u64>,
    converged: Option<bool>,
    settings: Settings,
) -> Approximation {
    let im = (!value.value.is_real()).then(|| value.value.im.to_decimal(settings.digits));
    Approximation {
        name,
        method: method.to_string(),
        re: value.value.re.to_decimal(settings.digits),
        im,
        error: value.error,
        params,
        converged,
    }
}

fn gamma_command(args: &GammaArgs, settings: Settings) -> Result<Document, CliError> {
    let p = settings.precision;
    let s = parse_rational(&args.s)?;
    let arg = GammaArgument::exact(s.clone())?;
    let name = format!("gamma({s})");
    let closed = || {
        gamma_closed_form(&arg).ok_or_else(|| {
            CliError::Usage(format!("gamma({s}) has no closed form; use --method auto, gauss or weierstrass"))
        })
    };
    let numeric = |method: &str, value: BoundedValue, params: BTreeMap<String, u64>| {
        Document::Approximation(Approximation {
            name: name.clone(),
            method: method.to_string(),
            re: value.value.to_decimal(settings.digits),
            im: None,
            error: value.error,
            params,
            converged: None,
        })
    };
    let x = ApproxReal::from_rational(&s, p);
    let terms = BTreeMap::from([("terms".to_string(), args.terms)]);
    Ok(match args.method {
        GammaMethod::Exact => Document::Exact(exact_value(name.clone(), closed()?, settings)),
        GammaMethod::Auto => match gamma_closed_form(&arg) {
            Some(exact) => Document::Exact(exact_value(name.clone(), exact, settings)),
            None => numeric("auto", gamma(&arg, p)?, BTreeMap::new()),
        },
        GammaMethod::Gauss => numeric("gauss", gamma_gauss(&x, args.terms, p)?, terms),
        GammaMethod::Weierstrass => numeric("weierstrass", gamma_weierstrass(&x, args.terms, p)?, terms),
    })
}

fn euler_gamma_command(m: u64, method: EulerMethod, settings: Settings) -> Result<Document, CliError> {
    let (method, label) = match method {
        EulerMethod::Literal => (EulerConstantMethod::Literal, "literal"),
        EulerMethod::Midpoint => (EulerConstantMethod::Midpoint, "midpoint"),
        EulerMethod::EulerMaclaurin => (EulerConstantMethod::EulerMaclaurin, "euler-maclaurin"),
    };
    let value = euler_constant(m, method, settings.precision)?;
    Ok(Document::EulerGamma(EulerGammaValue {
        m: value.m_used,
        method: label.to_string(),
        value: value.value.to_decimal(settings.digits),
        error: value.error,
    }))
}

fn verify_command(args: &VerifyArgs, settings: Settings) -> Result<(Document, i32), CliError> {
    let grid = match &args.grid {
        Some(text) => GridSpec::Points(parse_grid(text)?),
        None => GridSpec::Default,
    };
    let identities = match &args.identities {
        Some(text) => text.split(',').map(str::parse).collect::<Result<Vec<Identity>, _>>()?,
        None => Vec::new(),
    };
    let config = SuiteConfig { precision: settings.precision, grid, identities, terms: args.terms, ..SuiteConfig::default() };
    let reports = run_identity_suite(&config);
    let count = |f: fn(&Verdict) -> bool| reports.iter().filter(|r| f(&r.verdict)).count();
    let summary = VerifySummary {
        passed: count(|v| matches!(v, Verdict::Pass)),
        failed: count(|v| matches!(v, Verdict::Fail)),
        excluded: count(|v| matches!(v, Verdict::Excluded(_))),
    };
    let code = if summary.failed > 0 { EXIT_VERIFY_FAILED } else { EXIT_OK };
    let reports = reports.iter().map(|r| r.to_record(settings.digits)).collect();
    Ok((Document::Verify(VerifyOutput { reports, summary }), code))
}

/// The sixteen classical values: `ζ(2..8)`, `B_0..B_7` and four half-integer
/// Gamma values.
pub fn report(settings: Settings) -> Report {
    let mut values = Vec::with_capacity(16);
    for n in 1..=4u32 {
        let exact = zeta_even_exact(n).expect("n >= 1");
        values.push(exact_value(format!("zeta({})", 2 * n), exact, settings));
    }
    for (n, b) in bernoulli_table(7).values().iter().enumerate() {
        values.push(exact_value(format!("B_{n}"), PiPowerExact::rational(b.clone()), settings));
    }
    for s in ["3/2", "5/2", "7/2", "-1/2"] {
        let arg = GammaArgument::exact(parse_rational(s).expect("literal")).expect("not a pole");
        let exact = gamma_closed_form(&arg).expect("half-integer");
        values.push(exact_value(format!("gamma({s})"), exact, settings));
    }
    Report { values }
}
