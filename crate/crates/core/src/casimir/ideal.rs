use std::f64::consts::PI;

use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{positive, Result};

/// `ħcπ²/240L⁴`, N/m².
pub fn ideal_force_per_area(length: f64) -> Result<f64> {
    positive("length", length)?;
    Ok(HBAR * SPEED_OF_LIGHT * PI * PI / (240.0 * length.powi(4)))
}

/// `ħcπ²/720L³`, J/m².
pub fn ideal_energy_per_area(length: f64) -> Result<f64> {
    positive("length", length)?;
    Ok(HBAR * SPEED_OF_LIGHT * PI * PI / (720.0 * length.powi(3)))
}

/// Casimir force between perfect plane mirrors, `F = ħcπ²A/240L⁴` (N).
pub fn ideal_force(length: f64, area: f64) -> Result<f64> {
    positive("area", area)?;
    Ok(area * ideal_force_per_area(length)?)
}

/// Casimir energy between perfect plane mirrors, `E = ħcπ²A/720L³` (J).
pub fn ideal_energy(length: f64, area: f64) -> Result<f64> {
    positive("area", area)?;
    Ok(area * ideal_energy_per_area(length)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_square_centimetre_at_one_micron() {
        let f = ideal_force(1e-6, 1e-4).unwrap();
        assert!((f / 1.300_125_772_447_753_7e-7 - 1.0).abs() < 1e-13, "{f}");
        let e = ideal_energy(1e-6, 1e-4).unwrap();
        assert!((e / 4.333_752_574_825_845_7e-14 - 1.0).abs() < 1e-13, "{e}");
    }

    #[test]
    fn energy_is_force_times_length_over_three() {
        for l in [1e-8, 3e-7, 1e-6, 2.5e-5] {
            let f = ideal_force(l, 2e-4).unwrap();
            let e = ideal_energy(l, 2e-4).unwrap();
            assert!((e / (f * l / 3.0) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn inverse_fourth_power() {
        let f1 = ideal_force(1e-6, 1e-4).unwrap();
        let f2 = ideal_force(2e-6, 1e-4).unwrap();
        assert_eq!(f2, f1 / 16.0);
    }

    #[test]
    fn domain_errors() {
        assert!(ideal_force(0.0, 1.0).is_err());
        assert!(ideal_force(1.0, -1.0).is_err());
        assert!(ideal_energy(f64::NAN, 1.0).is_err());
    }
}
