//! Analytic derivatives of V₁ against central finite differences.

use rand::{rngs::StdRng, Rng, SeedableRng};
use std::f64::consts::PI;
use vacuakit::inflation::slow_roll_report;
use vacuakit::PotentialParams;

fn central(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

#[test]
fn first_and_second_derivatives_match_finite_differences() {
    let p = PotentialParams::baseline();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let phi = rng.gen_range(-2.0 * PI..4.0 * PI);
        let fd1 = central(|x| p.v1(x), phi, 1e-6);
        let fd2 = central(|x| p.dv1(x), phi, 1e-6);
        assert!(rel_err(p.dv1(phi), fd1) < 1e-6, "dv1 at {phi}");
        assert!(rel_err(p.d2v1(phi), fd2) < 1e-6, "d2v1 at {phi}");
    }
}

#[test]
fn finite_difference_error_shrinks_quadratically() {
    let p = PotentialParams::baseline();
    for phi in [0.3, 2.2, 4.9] {
        let e1 = (central(|x| p.v1(x), phi, 1e-2) - p.dv1(phi)).abs();
        let e2 = (central(|x| p.v1(x), phi, 5e-3) - p.dv1(phi)).abs();
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio} at {phi}");
    }
}

#[test]
fn slow_roll_ratios_agree_with_finite_difference_derivatives() {
    let p = PotentialParams::baseline();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..50 {
        let phi = rng.gen_range(-3.0..9.0);
        let r = slow_roll_report(&p, phi).unwrap();
        let v = p.v1(phi);
        let d1 = central(|x| p.v1(x), phi, 1e-5);
        let d2 = (p.v1(phi + 1e-4) - 2.0 * v + p.v1(phi - 1e-4)) / 1e-8;
        let mt2 = 1.0 / (8.0 * PI);
        let eps = 0.5 * mt2 * (d1 / v).powi(2);
        let eta = mt2 * d2 / v;
        assert!(rel_err(r.epsilon, eps) < 1e-6, "epsilon at {phi}");
        assert!(rel_err(r.eta, eta) < 1e-6, "eta at {phi}");
    }
}
