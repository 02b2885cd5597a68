//! Mean energy of a field mode and the cutoff energy density of the field.
//!
//! Two laws are exposed side by side: the first (`E = n ħω`) without and the
//! second (`E = (1/2 + n) ħω`) with the zero-point contribution. Only the
//! second one reaches the classical equipartition value `k_B T` at high
//! temperature without an offset.

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::{BOLTZMANN, HBAR, SPEED_OF_LIGHT};
use crate::error::{non_negative, positive, Result};

/// Above this value of `ħω/k_BT` the Bose factor is evaluated as `exp(-x)`.
const ASYMPTOTIC_RATIO: f64 = 700.0;

/// Temperature of a field in thermal equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermalState {
    temperature: f64,
}

impl ThermalState {
    pub const ZERO: ThermalState = ThermalState { temperature: 0.0 };

    pub fn new(temperature: f64) -> Result<Self> {
        non_negative("temperature", temperature)?;
        Ok(Self { temperature })
    }

    /// Temperature in kelvin.
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Temperature frequency `θ = 2π k_B T / ħ` in rad/s. It is also the first
    /// non-zero Matsubara frequency.
    pub fn temperature_frequency(&self) -> f64 {
        2.0 * PI * BOLTZMANN * self.temperature / HBAR
    }

    /// Thermal energy `k_B T` in joules.
    pub fn thermal_energy(&self) -> f64 {
        BOLTZMANN * self.temperature
    }

    pub fn is_zero(&self) -> bool {
        self.temperature == 0.0
    }

    /// `ħω / k_B T`, or `None` at zero temperature.
    fn reduced_frequency(&self, omega: f64) -> Option<f64> {
        (!self.is_zero()).then(|| HBAR * omega / self.thermal_energy())
    }
}

fn check_omega(omega: f64) -> Result<f64> {
    positive("omega", omega)
}

/// Mean number of photons `1 / (exp(ħω/k_BT) - 1)` in a mode of angular
/// frequency `omega`. Zero at `T = 0`.
pub fn mean_photon_number(omega: f64, state: ThermalState) -> Result<f64> {
    check_omega(omega)?;
    Ok(match state.reduced_frequency(omega) {
        None => 0.0,
        Some(x) if x > ASYMPTOTIC_RATIO => (-x).exp(),
        Some(x) => 1.0 / x.exp_m1(),
    })
}

/// Planck's first law: `n ħω`, with no zero-point term.
pub fn mode_energy_first_law(omega: f64, state: ThermalState) -> Result<f64> {
    Ok(mean_photon_number(omega, state)? * HBAR * omega)
}

/// Planck's second law: `(1/2 + n) ħω`. At `T = 0` this is the zero-point
/// energy `ħω/2`.
pub fn mode_energy_second_law(omega: f64, state: ThermalState) -> Result<f64> {
    Ok((0.5 + mean_photon_number(omega, state)?) * HBAR * omega)
}

/// Thermal weight `coth(ħω / 2k_BT)` that turns the vacuum energy `ħω` of a
/// mode into `ħω coth(ħω/2k_BT) = 2 (1/2 + n) ħω`. Equal to 1 at `T = 0`.
pub fn thermal_weight(omega: f64, state: ThermalState) -> Result<f64> {
    check_omega(omega)?;
    Ok(match state.reduced_frequency(omega) {
        None => 1.0,
        Some(x) => 1.0 / (0.5 * x).tanh(),
    })
}

/// Energy density of the field with a high-frequency cutoff, split into its
/// two addends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyDensity {
    /// Zero-point term `ħ ω_max⁴ / 8π²c³`, J/m³.
    pub vacuum: f64,
    /// Thermal term `ħ θ⁴ / 160π²c³`, J/m³.
    pub thermal: f64,
}

impl EnergyDensity {
    pub fn total(&self) -> f64 {
        self.vacuum + self.thermal
    }
}

/// Energy density `e = ħ (20 ω_max⁴ + θ⁴) / 160π²c³`.
///
/// The thermal addend equals `π² (k_BT)⁴ / 10 ħ³c³`. That is 3/2 of the
/// Stefan-Boltzmann energy density `π² (k_BT)⁴ / 15 ħ³c³` obtained by
/// integrating `ħω n(ω) ω²/π²c³` over all frequencies.
pub fn energy_density(omega_max: f64, state: ThermalState) -> Result<EnergyDensity> {
    non_negative("omega_max", omega_max)?;
    let prefactor = HBAR / (160.0 * PI * PI * SPEED_OF_LIGHT.powi(3));
    Ok(EnergyDensity {
        vacuum: prefactor * 20.0 * omega_max.powi(4),
        thermal: prefactor * state.temperature_frequency().powi(4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn state_for_ratio(omega: f64, ratio: f64) -> ThermalState {
        ThermalState::new(HBAR * omega / (BOLTZMANN * ratio)).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn photon_number_examples() {
        assert_eq!(mean_photon_number(1e15, ThermalState::ZERO).unwrap(), 0.0);
        let w = 3e13;
        let n = mean_photon_number(w, state_for_ratio(w, 2f64.ln())).unwrap();
        assert!(rel(n, 1.0) < 1e-12);
        // 1/(e^0.01 - 1) evaluated with 30-digit arithmetic.
        let n = mean_photon_number(w, state_for_ratio(w, 0.01)).unwrap();
        assert!(rel(n, 99.500_833_331_944_45) < 1e-11, "{n}");
    }

    #[test]
    fn rejects_bad_frequency() {
        let t = ThermalState::new(300.0).unwrap();
        assert!(mean_photon_number(0.0, t).is_err());
        assert!(mean_photon_number(-1.0, t).is_err());
        assert!(mean_photon_number(f64::NAN, t).is_err());
        assert!(mode_energy_second_law(f64::INFINITY, t).is_err());
        assert!(ThermalState::new(-1.0).is_err());
    }

    #[test]
    fn asymptotic_branch_has_no_overflow() {
        let w = 1e15;
        let n = mean_photon_number(w, state_for_ratio(w, 710.0)).unwrap();
        assert!(n > 0.0 && rel(n, (-710f64).exp()) < 1e-12);
        // continuity across the branch point
        let below = mean_photon_number(w, state_for_ratio(w, 699.999)).unwrap();
        let above = mean_photon_number(w, state_for_ratio(w, 700.001)).unwrap();
        assert!(below > above);
    }

    #[test]
    fn first_law_examples() {
        let w = 2e14;
        assert_eq!(mode_energy_first_law(w, ThermalState::ZERO).unwrap(), 0.0);
        let e = mode_energy_first_law(w, state_for_ratio(w, 2f64.ln())).unwrap();
        assert!(rel(e, HBAR * w) < 1e-12);
        // x/(e^x - 1) = 1 - x/2 + ... at x = 1e-4
        let s = state_for_ratio(w, 1e-4);
        let e = mode_energy_first_law(w, s).unwrap();
        assert!(rel(e, s.thermal_energy() * (1.0 - 0.5e-4)) < 1e-8);
    }

    #[test]
    fn second_law_examples() {
        let w = 2e14;
        let e0 = mode_energy_second_law(w, ThermalState::ZERO).unwrap();
        assert_eq!(e0, 0.5 * HBAR * w);
        let s = state_for_ratio(w, 0.01);
        let e = mode_energy_second_law(w, s).unwrap();
        assert!(rel(e, s.thermal_energy()) < 1e-5);
    }

    #[test]
    fn thermal_weight_examples() {
        let w = 5e13;
        assert_eq!(thermal_weight(w, ThermalState::ZERO).unwrap(), 1.0);
        let c = thermal_weight(w, state_for_ratio(w, 2.0)).unwrap();
        assert!(rel(c, 1.313_035_285_499_331_3) < 1e-13);
        // Laurent expansion coth(y) = 1/y + y/3 at small argument
        let s = state_for_ratio(w, 1e-6);
        let c = thermal_weight(w, s).unwrap();
        assert!(rel(c, 2.0 * s.thermal_energy() / (HBAR * w)) < 1e-12);
    }

    #[test]
    fn energy_density_examples() {
        let e = energy_density(0.0, ThermalState::ZERO).unwrap();
        assert_eq!(e.total(), 0.0);
        let e = energy_density(1e16, ThermalState::ZERO).unwrap();
        assert!(rel(e.vacuum, 495.706_164_395_752_8) < 1e-12);
        assert_eq!(e.thermal, 0.0);
        let e = energy_density(0.0, ThermalState::new(300.0).unwrap()).unwrap();
        assert!(rel(e.thermal, 9.192_365_915_987_223e-6) < 1e-12);
        assert!(energy_density(-1.0, ThermalState::ZERO).is_err());
    }

    #[test]
    fn temperature_frequency_definition() {
        let s = ThermalState::new(300.0).unwrap();
        assert!(rel(s.temperature_frequency(), 2.467_790_255_153_060_5e14) < 1e-14);
    }

    proptest! {
        #[test]
        fn zero_point_offset(w in 1e9f64..1e17, t in 0.0f64..1e5) {
            let s = ThermalState::new(t).unwrap();
            let diff = mode_energy_second_law(w, s).unwrap() - mode_energy_first_law(w, s).unwrap();
            let scale = mode_energy_second_law(w, s).unwrap();
            prop_assert!((diff - 0.5 * HBAR * w).abs() <= 4.0 * f64::EPSILON * scale);
        }

        #[test]
        fn coth_identity(w in 1e9f64..1e17, t in 1e-3f64..1e5) {
            let s = ThermalState::new(t).unwrap();
            let lhs = HBAR * w * thermal_weight(w, s).unwrap();
            let rhs = 2.0 * mode_energy_second_law(w, s).unwrap();
            prop_assert!(rel(lhs, rhs) < 1e-12);
        }

        #[test]
        fn photon_number_monotone(w in 1e10f64..1e16, t in 1.0f64..1e4) {
            let s = ThermalState::new(t).unwrap();
            let hotter = ThermalState::new(t * 1.01).unwrap();
            let n = mean_photon_number(w, s).unwrap();
            prop_assume!(n > 1e-300);
            prop_assert!(mean_photon_number(w, hotter).unwrap() > n);
            prop_assert!(mean_photon_number(w * 1.01, s).unwrap() < n);
        }

        #[test]
        fn classical_limit_bound(x in 1e-6f64..0.1) {
            let w = 1e12;
            let s = state_for_ratio(w, x);
            let dev = (mode_energy_second_law(w, s).unwrap() / s.thermal_energy() - 1.0).abs();
            prop_assert!(dev <= x * x / 10.0);
        }

        #[test]
        fn energy_density_scaling(w in 1e10f64..1e17, t in 1.0f64..1e4) {
            let a = energy_density(w, ThermalState::ZERO).unwrap().vacuum;
            let b = energy_density(2.0 * w, ThermalState::ZERO).unwrap().vacuum;
            prop_assert!(rel(b, 16.0 * a) < 1e-14);
            let a = energy_density(0.0, ThermalState::new(t).unwrap()).unwrap().thermal;
            let b = energy_density(0.0, ThermalState::new(2.0 * t).unwrap()).unwrap().thermal;
            prop_assert!(rel(b, 16.0 * a) < 1e-14);
        }
    }
}
