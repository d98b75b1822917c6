use super::*;
use crate::numcore::parse_rational;

fn p() -> Precision {
    Precision::new(128).unwrap()
}

fn x(v: f64) -> ApproxReal {
    ApproxReal::from_f64(v, p())
}

#[test]
fn zero_argument() {
    assert_eq!(zcot_bernoulli(&x(0.0), 10, p()).unwrap().to_f64(), 1.0);
    assert_eq!(zcot_zeta_series(&x(0.0), 10, p()).unwrap().to_f64(), 1.0);
    assert_eq!(zcot_partial_fraction(&x(0.0), 10, p()).unwrap().to_f64(), 1.0);
    assert!(sine_product(&x(0.0), 10, p()).is_zero());
}

#[test]
fn series_radius_is_enforced() {
    let pi = ApproxReal::pi(p());
    assert!(matches!(zcot_bernoulli(&pi, 10, p()), Err(Error::Domain(_))));
    assert!(matches!(zcot_zeta_series(&x(-3.2), 10, p()), Err(Error::Domain(_))));
    assert!(zcot_partial_fraction(&(&pi + &pi), 10, p()).is_err());
}

#[test]
fn coefficients_agree_exactly() {
    for n in 1..=30 {
        assert_eq!(zcot_bernoulli_coefficient(n), zcot_zeta_coefficient(n).unwrap(), "n = {n}");
    }
    // -1/3 z^2 - 1/45 z^4 - ...
    assert_eq!(zcot_bernoulli_coefficient(1), parse_rational("-1/3").unwrap());
    assert_eq!(zcot_bernoulli_coefficient(2), parse_rational("-1/45").unwrap());
}

#[test]
fn sine_product_vanishes_at_integers() {
    for s in [1.0, 2.0, -3.0] {
        assert!(sine_product(&x(s), 50, p()).is_zero());
    }
}

#[test]
fn halving_rejects_multiples_of_half_pi() {
    let half_pi = &ApproxReal::pi(p()) / &x(2.0);
    let err = cot_halving_check(&half_pi, 3, p()).unwrap_err();
    assert!(err.to_string().contains("doubling"), "{err}");
    assert!(cot_halving_check(&ApproxReal::pi(p()), 3, p()).is_err());
    assert!(cot_halving_check(&x(1.0), 0, p()).is_err());
    assert!(cot_halving_check(&x(1.0), 21, p()).is_err());
}

#[test]
fn reflection_rejects_integers() {
    let two = GammaArgument::exact(parse_rational("2").unwrap()).unwrap();
    assert!(reflection_check(&two, p()).is_err());
    let zero_ish = GammaArgument::exact(parse_rational("3").unwrap()).unwrap();
    assert!(reflection_neg_check(&zero_ish, p()).is_err());
}

#[test]
fn grid_parsing() {
    let g = parse_grid("0.5, 1/4, pi, -pi/2, 3*pi/4").unwrap();
    assert_eq!(g.len(), 5);
    assert_eq!(g[1], GridPoint::Rational(parse_rational("1/4").unwrap()));
    assert!((g[2].to_f64() - std::f64::consts::PI).abs() < 1e-15);
    assert!((g[3].to_f64() + std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    assert!((g[4].to_f64() - 0.75 * std::f64::consts::PI).abs() < 1e-15);
    assert!(parse_grid("").unwrap().is_empty());
    assert!(parse_grid("0.5,,1").is_err());
    assert!(parse_grid("pi/").is_err());
    assert!(parse_grid("pix").is_err());
    assert_eq!("reflection".parse::<Identity>().unwrap(), Identity::Reflection);
    assert!("nope".parse::<Identity>().is_err());
}
