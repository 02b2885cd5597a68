//! CODATA 2018 constants. `c`, `ħ` and `k_B` are exact in the 2019 SI.

/// Reduced Planck constant ħ in J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum in m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Boltzmann constant in J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// The three constants used throughout the library, bundled for callers that
/// want to pass them around or print them.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: HBAR,
        c: SPEED_OF_LIGHT,
        k_b: BOLTZMANN,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codata_values() {
        let k = PhysicalConstants::default();
        assert_eq!(k.hbar, 1.054571817e-34);
        assert_eq!(k.c, 299792458.0);
        assert_eq!(k.k_b, 1.380649e-23);
    }
}
