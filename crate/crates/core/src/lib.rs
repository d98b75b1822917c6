//! Exact and arbitrary-precision evaluation of the Riemann zeta function at
//! even integers, the Bernoulli numbers, the Gamma function and Euler's
//! constant, plus a suite that checks the classical identities linking
//! them (reflection formulae, the sine product, and three expansions of
//! `z cot z`).
//!
//! Exact quantities are [`BigRational`]s or [`PiPowerExact`] values.
//! Numerical ones are [`ApproxReal`]s paired with an [`ErrorBound`] that
//! says whether the truncation error is proven or estimated.

pub mod bernoulli;
mod error;
pub mod gamma;
pub mod identities;
pub mod numcore;
pub mod zeta;

pub use bernoulli::{bernoulli, bernoulli_table, BernoulliTable};
pub use error::{Error, Result};
pub use gamma::{
    euler_constant, gamma, gamma_closed_form, gamma_exact, gamma_gauss, gamma_weierstrass, EulerConstantMethod,
    EulerGamma, GammaArgument, GammaClass,
};
pub use identities::{run_identity_suite, Identity, ResidualReport, SuiteConfig};
pub use numcore::{
    double_factorial, make_rational, parse_rational, pi_power_eval, sieve_primes, ApproxReal,
    BigRational, BoundKind, BoundedValue, Complex, ErrorBound, PiPowerExact, Precision, PrimeList,
    DEFAULT_PRECISION, MIN_PRECISION,
};
pub use zeta::{
    product_convergence_check, zeta_dirichlet, zeta_euler_product, zeta_even_exact,
    zeta_tail_bound, EulerProductMode, ZetaArgument,
};
