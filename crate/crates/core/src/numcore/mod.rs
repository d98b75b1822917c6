//! Number types shared by every evaluator: exact rationals, exact
//! rational multiples of powers of π, arbitrary-precision reals, truncation
//! error bounds, and the prime sieve.

mod approx;
mod bound;
mod pi_power;
mod primes;
mod rational;

pub use approx::{ApproxReal, Complex, Precision, DEFAULT_PRECISION, MIN_PRECISION};
pub use bound::{BoundKind, BoundedValue, ErrorBound};
pub use pi_power::{pi_power_eval, PiPowerExact};
pub use primes::{sieve_primes, PrimeList};
pub(crate) use rational::{is_half_integer, is_integer};
pub use rational::{double_factorial, make_rational, parse_rational, BigRational};
