use proptest::prelude::*;
use qvac_core::motional::{
    motional_force_time_domain, thermal_friction_force, thermal_susceptibility,
    vacuum_susceptibility,
};
use qvac_core::stencil::FIFTH_DERIVATIVE_WEIGHTS;
use qvac_core::{ThermalState, Trajectory};

/// Least-squares amplitudes `(a, b)` of `a sin Ωt + b cos Ωt`.
fn fit(points: &[(f64, f64)], omega: f64) -> (f64, f64) {
    let (mut ss, mut sc, mut cc, mut fs, mut fc) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(t, f) in points {
        let (s, c) = (omega * t).sin_cos();
        ss += s * s;
        sc += s * c;
        cc += c * c;
        fs += f * s;
        fc += f * c;
    }
    let det = ss * cc - sc * sc;
    ((fs * cc - fc * sc) / det, (fc * ss - fs * sc) / det)
}

#[test]
fn sinusoid_matches_vacuum_susceptibility() {
    let (omega, dt, q0, area) = (1e9, 1e-11, 1e-9, 1e-4);
    let traj = Trajectory::sample(20_001, dt, |t| q0 * (omega * t).sin()).unwrap();
    let force = motional_force_time_domain(&traj, area).unwrap();
    let points: Vec<_> = force.interior().collect();
    let (a, b) = fit(&points, omega);
    let chi = vacuum_susceptibility(omega, area)
        .unwrap()
        .susceptibility
        .value;
    let expected = chi.norm() * q0;
    let amplitude = a.hypot(b);
    assert!(
        ((amplitude - expected) / expected).abs() < 1e-6,
        "{amplitude} vs {expected}"
    );
    // F = -k q⁽⁵⁾ is in antiphase with cos Ωt.
    assert!(b < 0.0 && a.abs() < 1e-3 * b.abs());
}

#[test]
fn friction_matches_thermal_susceptibility() {
    let (omega, dt, q0, area) = (1e6, 1e-8, 1e-9, 1.0);
    let state = ThermalState::new(300.0).unwrap();
    let traj = Trajectory::sample(20_001, dt, |t| q0 * (omega * t).sin()).unwrap();
    let force = thermal_friction_force(&traj, area, state).unwrap();
    let (a, b) = fit(&force.interior().collect::<Vec<_>>(), omega);
    let chi = thermal_susceptibility(omega, area, state)
        .unwrap()
        .susceptibility
        .value;
    assert!((a.hypot(b) / (chi.norm() * q0) - 1.0).abs() < 1e-8);
    assert!(b > 0.0);
}

#[test]
fn generic_polynomials_stay_at_rounding_floor() {
    let dt = 1e-11;
    let coefficients = [3.1e-9, -1.7e2, 4.4e12, -9.9e21, 2.3e31];
    let q = |t: f64| coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c);
    let traj = Trajectory::sample(200, dt, q).unwrap();
    let force = motional_force_time_domain(&traj, 1.0).unwrap();
    let qmax = traj.positions().iter().fold(0.0f64, |m, q| m.max(q.abs()));
    let wsum: f64 = FIFTH_DERIVATIVE_WEIGHTS.iter().map(|w| w.abs()).sum();
    let k = vacuum_susceptibility(1.0, 1.0)
        .unwrap()
        .susceptibility
        .value
        .im;
    let floor = k * wsum * 8.0 * f64::EPSILON * qmax / dt.powi(5);
    assert!(force.max_abs() <= floor, "{} > {floor}", force.max_abs());
}

proptest! {
    #[test]
    fn dyadic_polynomials_give_zero_force(c in prop::array::uniform5(-1000i32..=1000), shift in 0usize..10) {
        let dt = 1.0 / 128.0;
        let coefficients: Vec<f64> = c.iter().map(|&c| c as f64 / 1024.0).collect();
        let q = |t: f64| coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c);
        let traj = Trajectory::with_start((0..100).map(|i| q((i + shift) as f64 * dt)).collect(), shift as f64 * dt, dt).unwrap();
        let force = motional_force_time_domain(&traj, 1e-4).unwrap();
        prop_assert_eq!(force.max_abs(), 0.0);
    }
}
