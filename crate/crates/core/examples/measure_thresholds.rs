//! Prints the measurements the identity-suite thresholds and the Gamma
//! tolerances were frozen from.
//!
//!     cargo run --release -p zetalab-core --example measure_thresholds

use zetalab_core::identities::Verdict;
use zetalab_core::{
    euler_constant, gamma_gauss, gamma_weierstrass, run_identity_suite, ApproxReal,
    EulerConstantMethod, Precision, SuiteConfig,
};

fn main() {
    let p = Precision::default();
    println!("identity suite, default grid, {p}");
    for report in run_identity_suite(&SuiteConfig::default()) {
        let budget = report.budget.map(|b| b.bound).unwrap_or(f64::NAN);
        let status = match &report.verdict {
            Verdict::Excluded(why) => format!("excluded: {why}"),
            v => v.label().to_string(),
        };
        println!(
            "  {:<22} {:>8}  residual {:>10.3e}  budget {:>10.3e}  {}",
            report.identity.name(),
            report.argument,
            report.residual_f64().unwrap_or(f64::NAN),
            budget,
            status
        );
    }

    let sqrt_pi = ApproxReal::sqrt_pi(p);
    let half = ApproxReal::from_f64(0.5, p);
    println!("Gauss product at s = 1/2");
    for h in [100u64, 1_000, 10_000] {
        let g = gamma_gauss(&half, h, p).unwrap();
        let err = (&g.value - &sqrt_pi).abs().to_f64();
        println!("  h = {h:>6}  |G_h - sqrt(pi)| = {err:.4e}  reported {:.4e}  ratio {:.8}", g.error.bound, g.error.bound / err);
    }

    println!("Weierstrass product, 10^4 factors");
    for (s, exact) in [(1.5, &sqrt_pi * &half), (-0.5, -(&sqrt_pi + &sqrt_pi))] {
        let g = gamma_weierstrass(&ApproxReal::from_f64(s, p), 10_000, p).unwrap();
        let err = (&g.value - &exact).abs().to_f64();
        println!("  s = {s:>5}  actual error {err:.4e}  reported {:.4e}  ratio {:.8}", g.error.bound, g.error.bound / err);
    }

    println!("Gauss vs Weierstrass at h = N = 10^4");
    for s in [0.25, 0.5, 1.5, 2.5, std::f64::consts::PI] {
        let x = if s == std::f64::consts::PI { ApproxReal::pi(p) } else { ApproxReal::from_f64(s, p) };
        let a = gamma_gauss(&x, 10_000, p).unwrap();
        let b = gamma_weierstrass(&x, 10_000, p).unwrap();
        let gap = (&a.value - &b.value).abs().to_f64();
        println!(
            "  s = {s:<8.5}  gap {gap:.4e}  summed errors {:.4e}",
            a.error.bound + b.error.bound
        );
    }

    println!("Euler's constant");
    for (m, method) in [
        (1_000_000, EulerConstantMethod::Literal),
        (1_000_000, EulerConstantMethod::Midpoint),
        (100, EulerConstantMethod::EulerMaclaurin),
    ] {
        let g = euler_constant(m, method, p).unwrap();
        println!("  m = {m:>8} {method:?}: {}  error {:.3e}", g.value.to_decimal(20), g.error.bound);
    }
}
