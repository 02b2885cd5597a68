use std::f64::consts::PI;

use qvac_core::constants::{BOLTZMANN, HBAR, SPEED_OF_LIGHT};
use qvac_core::noise::{fano_factor, make_squeezed, monte_carlo_difference};
use qvac_core::thermal::{energy_density, mode_energy_first_law};
use qvac_core::{BeamSplitterSetup, QuadratureState, ThermalState};

fn setup(squeeze: f64) -> BeamSplitterSetup {
    let port_b = if squeeze == 1.0 {
        QuadratureState::vacuum(1.0).unwrap()
    } else {
        make_squeezed(1.0, squeeze).unwrap()
    };
    BeamSplitterSetup::new(1e6, port_b).unwrap()
}

#[test]
fn monte_carlo_within_three_sigma() {
    let trials = 100_000;
    let bound = 3.0 * (2.0 / trials as f64).sqrt();
    for (squeeze, seed) in [(1.0, 1), (0.5, 2), (0.25, 3)] {
        let s = setup(squeeze);
        let mc = monte_carlo_difference(&s, trials, seed).unwrap();
        assert!(
            (mc.fano - fano_factor(&s)).abs() < bound,
            "s={squeeze}: {}",
            mc.fano
        );
    }
}

#[test]
fn monte_carlo_unbiased_over_seeds() {
    for squeeze in [1.0, 0.5] {
        let s = setup(squeeze);
        let mean: f64 = (0..20)
            .map(|seed| monte_carlo_difference(&s, 100_000, seed).unwrap().fano)
            .sum::<f64>()
            / 20.0;
        assert!((mean - squeeze).abs() < 1e-2, "{mean}");
    }
}

#[test]
fn thermal_density_is_three_halves_of_planck_integral() {
    let state = ThermalState::new(300.0).unwrap();
    let kt = BOLTZMANN * 300.0;
    let scale = SPEED_OF_LIGHT.powi(3) * PI * PI;
    // ∫ ħω n(ω) ω²/π²c³ dω by composite Simpson up to 60 k_BT/ħ.
    let (n, xmax) = (60_000, 60.0);
    let h = xmax / n as f64;
    let mut sum = 0.0;
    for i in 1..n {
        let omega = i as f64 * h * kt / HBAR;
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * mode_energy_first_law(omega, state).unwrap() * omega * omega / scale;
    }
    let planck = sum * h / 3.0 * kt / HBAR;
    let stefan = PI * PI * kt.powi(4) / (15.0 * (HBAR * SPEED_OF_LIGHT).powi(3));
    assert!((planck / stefan - 1.0).abs() < 1e-9);
    let thermal = energy_density(0.0, state).unwrap().thermal;
    assert!((planck / thermal - 2.0 / 3.0).abs() < 1e-6);
}
