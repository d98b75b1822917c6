use std::fmt;

use serde::{Deserialize, Serialize};

use super::approx::ApproxReal;

/// How an [`ErrorBound`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Derived from a stated inequality (integral test, geometric tail).
    RigorousTail,
    /// Estimated from differences between truncation levels.
    Heuristic,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::RigorousTail => "rigorous_tail",
            BoundKind::Heuristic => "heuristic",
        })
    }
}

/// A constant `C` with `|f - g| <= C`, tagged with its provenance.
///
/// Bounds are stored as `f64` and rounded outward by one ulp when they
/// come from a higher-precision computation. They cover truncation only;
/// rounding is accounted for separately through
/// [`ApproxReal::rounding_slack`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorBound {
    pub bound: f64,
    pub kind: BoundKind,
}

impl ErrorBound {
    pub fn new(bound: f64, kind: BoundKind) -> Self {
        let bound = if bound.is_nan() { f64::INFINITY } else { bound.abs() };
        ErrorBound { bound, kind }
    }

    pub fn rigorous(bound: f64) -> Self {
        Self::new(bound, BoundKind::RigorousTail)
    }

    pub fn heuristic(bound: f64) -> Self {
        Self::new(bound, BoundKind::Heuristic)
    }

    /// A bound computed at high precision, rounded up to an `f64`.
    pub fn rigorous_from(bound: &ApproxReal) -> Self {
        let magnitude = bound.abs();
        let nearest = magnitude.to_f64();
        if !nearest.is_finite() || ApproxReal::from_f64(nearest, magnitude.precision()) >= magnitude {
            Self::rigorous(nearest)
        } else {
            Self::rigorous(round_up(nearest))
        }
    }

    pub fn exact() -> Self {
        Self::rigorous(0.0)
    }

    /// Sum of two bounds; heuristic if either part is.
    pub fn plus(self, other: ErrorBound) -> Self {
        let kind = if self.kind == BoundKind::Heuristic || other.kind == BoundKind::Heuristic {
            BoundKind::Heuristic
        } else {
            BoundKind::RigorousTail
        };
        ErrorBound::new(round_up(self.bound + other.bound), kind)
    }

    pub fn scaled(self, factor: f64) -> Self {
        ErrorBound::new(round_up(self.bound * factor.abs()), self.kind)
    }
}

fn round_up(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        x
    } else {
        x.next_up()
    }
}

/// A numerical value and the truncation bound that goes with it.
#[derive(Clone, Debug)]
pub struct BoundedValue<T = ApproxReal> {
    pub value: T,
    pub error: ErrorBound,
}

impl<T> BoundedValue<T> {
    pub fn new(value: T, error: ErrorBound) -> Self {
        BoundedValue { value, error }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_nonnegative() {
        assert_eq!(ErrorBound::rigorous(-0.5).bound, 0.5);
        assert_eq!(ErrorBound::heuristic(f64::NAN).bound, f64::INFINITY);
    }

    #[test]
    fn rigorous_from_rounds_up_only_when_inexact() {
        let p = crate::numcore::Precision::default();
        assert_eq!(ErrorBound::rigorous_from(&ApproxReal::one(p)).bound, 1.0);
        let third = ApproxReal::one(p) / ApproxReal::from_u64(3, p);
        let bound = ErrorBound::rigorous_from(&third).bound;
        assert!(ApproxReal::from_f64(bound, p) >= third);
        assert!(bound - 1.0 / 3.0 <= f64::EPSILON);
    }

    #[test]
    fn combining_downgrades_to_heuristic() {
        let a = ErrorBound::rigorous(1e-3);
        let b = ErrorBound::heuristic(1e-4);
        assert_eq!(a.plus(a).kind, BoundKind::RigorousTail);
        let c = a.plus(b);
        assert_eq!(c.kind, BoundKind::Heuristic);
        assert!(c.bound >= 1.1e-3);
    }
}
