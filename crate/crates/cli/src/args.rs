use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "zetalab", version, about = "Exact and high-precision zeta, Bernoulli and Gamma values")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Working precision in bits.
    #[arg(long, default_value_t = 128, global = true)]
    pub precision: usize,

    /// Significant digits for approximate values.
    #[arg(long, default_value_t = 15, global = true)]
    pub digits: usize,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bernoulli numbers B_0 ..= B_N as exact rationals.
    Bernoulli {
        n_max: usize,
    },
    /// The Riemann zeta function.
    Zeta(ZetaArgs),
    /// The Gamma function.
    Gamma(GammaArgs),
    /// Euler's constant from the first M harmonic terms.
    EulerGamma(EulerGammaArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Exact closed forms of the classical values, with decimals.
    Report,
    /// Primes up to a limit.
    Primes {
        limit: u64,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("method").required(true).args(["exact_even", "dirichlet", "euler_product"])))]
pub struct ZetaArgs {
    /// Exact zeta(2n) for this n.
    #[arg(long, value_name = "N")]
    pub exact_even: Option<u32>,

    /// Truncated Dirichlet series at real part S.
    #[arg(long, value_name = "S")]
    pub dirichlet: Option<String>,

    /// Truncated Euler product at real part S.
    #[arg(long, value_name = "S")]
    pub euler_product: Option<String>,

    /// Imaginary part of s.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub imag: String,

    /// Terms of the Dirichlet series.
    #[arg(long, default_value_t = 10_000)]
    pub terms: u64,

    /// Largest prime in the Euler product.
    #[arg(long, default_value_t = 10_000)]
    pub prime_limit: u64,

    /// Report the proven remaining-product bound instead of the estimate.
    #[arg(long)]
    pub rigorous: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GammaMethod {
    Auto,
    Exact,
    Gauss,
    Weierstrass,
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    /// Argument: integer, decimal or p/q.
    #[arg(allow_hyphen_values = true)]
    pub s: String,

    #[arg(long, value_enum, default_value_t = GammaMethod::Auto)]
    pub method: GammaMethod,

    /// Product length for the gauss and weierstrass methods.
    #[arg(long, default_value_t = 10_000)]
    pub terms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EulerMethod {
    Literal,
    Midpoint,
    EulerMaclaurin,
}

#[derive(Debug, Args)]
pub struct EulerGammaArgs {
    pub m: u64,

    #[arg(long, value_enum, default_value_t = EulerMethod::Literal)]
    pub method: EulerMethod,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated points such as `0.5,1/4,pi/3`; per-identity defaults otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,

    /// Comma-separated identity names; all when omitted.
    #[arg(long)]
    pub identities: Option<String>,

    /// Override every series and product length.
    #[arg(long)]
    pub terms: Option<u64>,
}
