use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    cot_halving_check, partial_fraction_tail_bound, reflection_check, reflection_neg_check,
    sine_product, sine_product_tail_bound, zcot_bernoulli, zcot_direct, zcot_partial_fraction,
    zcot_series_tail_bound, zcot_zeta_series,
};
use crate::error::{Error, Result};
use crate::gamma::GammaArgument;
use crate::numcore::{parse_rational, ApproxReal, BigRational, ErrorBound, Precision};

/// The identities the suite knows how to check, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    ZcotBernoulli,
    ZcotPartialFraction,
    ZcotZetaSeries,
    CotHalving,
    SineProduct,
    Reflection,
    ReflectionNeg,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::ZcotBernoulli,
        Identity::ZcotPartialFraction,
        Identity::ZcotZetaSeries,
        Identity::CotHalving,
        Identity::SineProduct,
        Identity::Reflection,
        Identity::ReflectionNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::ZcotBernoulli => "zcot-bernoulli",
            Identity::ZcotPartialFraction => "zcot-partial-fraction",
            Identity::ZcotZetaSeries => "zcot-zeta-series",
            Identity::CotHalving => "cot-halving",
            Identity::SineProduct => "sine-product",
            Identity::Reflection => "reflection",
            Identity::ReflectionNeg => "reflection-neg",
        }
    }

    fn default_points(self) -> &'static [&'static str] {
        match self {
            Identity::ZcotBernoulli
            | Identity::ZcotPartialFraction
            | Identity::ZcotZetaSeries
            | Identity::CotHalving => &["0.1", "0.5", "1", "1.5", "2", "2.5", "3"],
            Identity::SineProduct => &["0.25", "0.5", "0.75", "1", "1.5", "2.5"],
            Identity::Reflection => &["0.1", "0.25", "0.5", "0.75", "1.5", "2.5", "-0.5"],
            Identity::ReflectionNeg => &["0.25", "0.5", "0.75", "1.5", "2.5", "-0.5"],
        }
    }

    /// Distance from `x` to the nearest point where this identity breaks
    /// down (a pole, or the edge of a series' disc of convergence).
    fn pole_distance(self, x: f64) -> f64 {
        use std::f64::consts::{FRAC_PI_2, PI};
        let to_multiple = |unit: f64| (x / unit - (x / unit).round()).abs() * unit;
        match self {
            Identity::ZcotBernoulli | Identity::ZcotZetaSeries => PI - x.abs(),
            Identity::ZcotPartialFraction => {
                let j = (x / PI).round();
                if j == 0.0 {
                    (x.abs() - PI).abs()
                } else {
                    (x - j * PI).abs()
                }
            }
            Identity::CotHalving => to_multiple(FRAC_PI_2),
            Identity::SineProduct => f64::INFINITY,
            Identity::Reflection | Identity::ReflectionNeg => to_multiple(1.0),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s.trim())
            .ok_or_else(|| Error::parse(format!("unknown identity {s:?}")))
    }
}

/// Largest residual accepted per identity at the default truncation
/// parameters, with how it was obtained.
///
/// Each value is the worst residual measured over the default grid at
/// 128 bits, times ten, rounded up to a power of ten. The halving check
/// measures exactly zero, so it uses the `10^-(p/4)` rounding allowance.
pub const THRESHOLDS: [(Identity, f64, &str); 7] = [
    (Identity::ZcotBernoulli, 1e-5, "worst 2.0e-7 at z = 3, 200 terms"),
    (Identity::ZcotPartialFraction, 1e-2, "worst 1.8e-4 at z = 3, 10^4 terms"),
    (Identity::ZcotZetaSeries, 1e-5, "worst 2.0e-7 at z = 3, 200 terms"),
    (Identity::CotHalving, 1e-32, "all residuals 0 at 6 levels; 10^-(p/4) at p = 128"),
    (Identity::SineProduct, 1e-2, "worst 6.3e-4 at s = 5/2, 10^4 factors"),
    (Identity::Reflection, 1e-4, "worst 2.4e-6 at s = 1/4 and 3/4, 10^5 Weierstrass factors"),
    (Identity::ReflectionNeg, 1e-4, "worst 1.8e-6 at s = 3/4, 10^5 Weierstrass factors"),
];

pub fn threshold_for(identity: Identity) -> f64 {
    THRESHOLDS.iter().find(|(i, _, _)| *i == identity).map(|t| t.1).unwrap_or(0.0)
}

/// Suite outcome for one report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Produced by a single check outside the suite.
    Unchecked,
    Pass,
    Fail,
    /// The point was not evaluated; the string says why.
    Excluded(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Unchecked => "unchecked",
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Excluded(_) => "excluded",
        }
    }
}

/// Both sides of one identity at one argument.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub identity: Identity,
    pub argument: String,
    pub lhs: Option<ApproxReal>,
    pub rhs: Option<ApproxReal>,
    /// `|lhs - rhs|` at working precision.
    pub residual: Option<ApproxReal>,
    /// Truncation parameters (terms, levels, factors) used.
    pub params: BTreeMap<String, u64>,
    /// Truncation plus rounding budget for the residual, where known.
    pub budget: Option<ErrorBound>,
    pub threshold: Option<f64>,
    pub verdict: Verdict,
}

impl ResidualReport {
    pub(crate) fn evaluated(
        identity: Identity,
        argument: String,
        lhs: ApproxReal,
        rhs: ApproxReal,
        params: BTreeMap<String, u64>,
        budget: ErrorBound,
    ) -> Self {
        let residual = (&lhs - &rhs).abs();
        ResidualReport {
            identity,
            argument,
            lhs: Some(lhs),
            rhs: Some(rhs),
            residual: Some(residual),
            params,
            budget: Some(budget),
            threshold: None,
            verdict: Verdict::Unchecked,
        }
    }

    fn excluded(identity: Identity, argument: String, reason: String) -> Self {
        ResidualReport {
            identity,
            argument,
            lhs: None,
            rhs: None,
            residual: None,
            params: BTreeMap::new(),
            budget: None,
            threshold: None,
            verdict: Verdict::Excluded(reason),
        }
    }

    pub fn residual_f64(&self) -> Option<f64> {
        self.residual.as_ref().map(ApproxReal::to_f64)
    }

    /// Flat, serializable form with values rendered to `digits`
    /// significant digits.
    pub fn to_record(&self, digits: usize) -> ResidualRecord {
        let render = |v: &Option<ApproxReal>| v.as_ref().map(|x| x.to_decimal(digits));
        ResidualRecord {
            identity: self.identity.name().to_string(),
            argument: self.argument.clone(),
            lhs: render(&self.lhs),
            rhs: render(&self.rhs),
            residual: self.residual.as_ref().map(|r| r.to_decimal(6)),
            params: self.params.clone(),
            threshold: self.threshold,
            status: self.verdict.label().to_string(),
            note: match &self.verdict {
                Verdict::Excluded(reason) => Some(reason.clone()),
                _ => None,
            },
        }
    }
}

/// Serialized residual report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualRecord {
    pub identity: String,
    pub argument: String,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub residual: Option<String>,
    pub params: BTreeMap<String, u64>,
    pub threshold: Option<f64>,
    pub status: String,
    pub note: Option<String>,
}

/// One argument of the grid: a rational, or a rational multiple of π.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridPoint {
    Rational(BigRational),
    PiMultiple(BigRational),
}

impl GridPoint {
    pub fn to_approx(&self, precision: Precision) -> ApproxReal {
        match self {
            GridPoint::Rational(r) => ApproxReal::from_rational(r, precision),
            GridPoint::PiMultiple(r) => {
                &ApproxReal::from_rational(r, precision) * &ApproxReal::pi(precision)
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_approx(Precision::default()).to_f64()
    }

    pub fn gamma_argument(&self, precision: Precision) -> Result<GammaArgument> {
        match self {
            GridPoint::Rational(r) => GammaArgument::exact(r.clone()),
            GridPoint::PiMultiple(_) => GammaArgument::real(self.to_approx(precision)),
        }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridPoint::Rational(r) => write!(f, "{r}"),
            GridPoint::PiMultiple(r) => write!(f, "{r}*pi"),
        }
    }
}

impl FromStr for GridPoint {
    type Err = Error;

    /// Rationals (`0.5`, `1/4`) or multiples of π (`pi`, `-pi/2`, `3*pi/4`).
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let Some((before, after)) = compact.split_once("pi") else {
            return Ok(GridPoint::Rational(parse_rational(&compact)?));
        };
        let numerator = match before {
            "" | "+" => BigRational::from_integer(1.into()),
            "-" => BigRational::from_integer((-1).into()),
            c => parse_rational(c)?,
        };
        let value = match after {
            "" => numerator,
            d => match d.strip_prefix('/') {
                Some(den) => numerator / parse_rational(den)?,
                None => return Err(Error::parse(format!("bad pi multiple {text:?}"))),
            },
        };
        if value.denom() == &num_bigint::BigInt::from(0) {
            return Err(Error::domain("zero denominator"));
        }
        Ok(GridPoint::PiMultiple(value))
    }
}

/// Parses a comma-separated grid such as `0.1,0.5,pi/4`.
pub fn parse_grid(text: &str) -> Result<Vec<GridPoint>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(str::parse).collect()
}

/// Where to evaluate each identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum GridSpec {
    /// The built-in per-identity grids, all at least `10^-3` from poles.
    #[default]
    Default,
    /// The same points for every selected identity.
    Points(Vec<GridPoint>),
}

/// Suite parameters; `terms` overrides every series and product length.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub precision: Precision,
    pub grid: GridSpec,
    /// Identities to run; empty means all.
    pub identities: Vec<Identity>,
    pub terms: Option<u64>,
    pub series_terms: u32,
    pub partial_fraction_terms: u64,
    pub halving_levels: u32,
    pub sine_terms: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            precision: Precision::default(),
            grid: GridSpec::Default,
            identities: Vec::new(),
            terms: None,
            series_terms: 200,
            partial_fraction_terms: 10_000,
            halving_levels: 6,
            sine_terms: 10_000,
        }
    }
}

const POLE_MARGIN: f64 = 1e-3;

fn evaluate(identity: Identity, point: &GridPoint, config: &SuiteConfig) -> Result<ResidualReport> {
    let p = config.precision;
    let z = point.to_approx(p);
    let zf = z.to_f64();
    let series_terms = config.terms.map_or(config.series_terms, |t| t.min(u64::from(u32::MAX)) as u32);
    let mut report = match identity {
        Identity::ZcotBernoulli | Identity::ZcotZetaSeries => {
            let lhs = zcot_direct(&z);
            let rhs = if identity == Identity::ZcotBernoulli {
                zcot_bernoulli(&z, series_terms, p)?
            } else {
                zcot_zeta_series(&z, series_terms, p)?
            };
            let budget = zcot_series_tail_bound(zf, series_terms)
                .plus(ErrorBound::rigorous(lhs.rounding_slack(4 * u64::from(series_terms) + 8)));
            let params = BTreeMap::from([("terms".to_string(), u64::from(series_terms))]);
            ResidualReport::evaluated(identity, String::new(), lhs, rhs, params, budget)
        }
        Identity::ZcotPartialFraction => {
            let terms = config.terms.unwrap_or(config.partial_fraction_terms);
            let lhs = zcot_direct(&z);
            let rhs = zcot_partial_fraction(&z, terms, p)?;
            let budget = partial_fraction_tail_bound(zf, terms)
                .plus(ErrorBound::rigorous(lhs.rounding_slack(4 * terms + 8)));
            let params = BTreeMap::from([("terms".to_string(), terms)]);
            ResidualReport::evaluated(identity, String::new(), lhs, rhs, params, budget)
        }
        Identity::CotHalving => {
            let levels = config.terms.map_or(config.halving_levels, |t| t.clamp(1, 20) as u32);
            cot_halving_check(&z, levels, p)?
        }
        Identity::SineProduct => {
            let terms = config.terms.unwrap_or(config.sine_terms);
            let pi = ApproxReal::pi(p);
            let lhs = (&pi * &z).sin();
            let rhs = sine_product(&z, terms, p);
            let budget = sine_product_tail_bound(zf, terms, rhs.to_f64())
                .plus(ErrorBound::rigorous(ApproxReal::one(p).rounding_slack(4 * terms + 8)));
            let params = BTreeMap::from([("factors".to_string(), terms)]);
            ResidualReport::evaluated(identity, String::new(), lhs, rhs, params, budget)
        }
        Identity::Reflection => reflection_check(&point.gamma_argument(p)?, p)?,
        Identity::ReflectionNeg => reflection_neg_check(&point.gamma_argument(p)?, p)?,
    };
    report.argument = point.to_string();
    Ok(report)
}

fn judge(identity: Identity, point: &GridPoint, config: &SuiteConfig) -> ResidualReport {
    let distance = identity.pole_distance(point.to_f64());
    if distance < POLE_MARGIN {
        return ResidualReport::excluded(
            identity,
            point.to_string(),
            format!("within {POLE_MARGIN:e} of a pole or convergence boundary of {identity}"),
        );
    }
    match evaluate(identity, point, config) {
        Ok(mut report) => {
            let threshold = threshold_for(identity);
            let residual = report.residual_f64().unwrap_or(f64::INFINITY);
            report.threshold = Some(threshold);
            report.verdict = if residual <= threshold { Verdict::Pass } else { Verdict::Fail };
            report
        }
        Err(e) => ResidualReport::excluded(identity, point.to_string(), e.to_string()),
    }
}

/// Runs every selected identity over its grid.
///
/// Points are evaluated in parallel; output is ordered by identity, then
/// by argument value. Per-point failures are recorded in the reports.
pub fn run_identity_suite(config: &SuiteConfig) -> Vec<ResidualReport> {
    let identities: Vec<Identity> = if config.identities.is_empty() {
        Identity::ALL.to_vec()
    } else {
        let mut chosen = config.identities.clone();
        chosen.sort();
        chosen.dedup();
        chosen
    };
    let mut tasks = Vec::new();
    for identity in identities {
        let mut points: Vec<GridPoint> = match &config.grid {
            GridSpec::Default => identity
                .default_points()
                .iter()
                .map(|s| s.parse().expect("built-in grid point"))
                .collect(),
            GridSpec::Points(points) => points.clone(),
        };
        points.sort_by(|a, b| a.to_f64().total_cmp(&b.to_f64()));
        tasks.extend(points.into_iter().map(|p| (identity, p)));
    }
    tasks.par_iter().map(|(identity, point)| judge(*identity, point, config)).collect()
}
