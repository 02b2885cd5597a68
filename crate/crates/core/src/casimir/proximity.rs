//! Sphere-plane force from the proximity (Derjaguin) approximation.
//!
//! The force between a sphere of radius `R` and a plane at closest distance
//! `L` is `F = 2πR · E_pp(L)/A`, where `E_pp/A` is the plane-plane energy per
//! unit area for the same mirrors and temperature. The prefactor `2πR` is
//! the standard Derjaguin coefficient.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{positive, Result};
use crate::mirror::CavityReflection;
use crate::thermal::ThermalState;

use super::{lifshitz, CavityConfig, Flag, ForceResult};

/// Proximity results are flagged when `R <= PROXIMITY_RATIO · L`.
pub const PROXIMITY_RATIO: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpherePlaneConfig {
    /// Sphere radius `R`, m.
    pub radius: f64,
    /// Distance of closest approach `L`, m.
    pub length: f64,
    pub temperature: ThermalState,
    pub mirrors: CavityReflection,
}

impl SpherePlaneConfig {
    pub fn new(
        radius: f64,
        length: f64,
        temperature: ThermalState,
        mirrors: CavityReflection,
    ) -> Result<Self> {
        positive("radius", radius)?;
        positive("length", length)?;
        Ok(Self {
            radius,
            length,
            temperature,
            mirrors,
        })
    }

    pub fn proximity_ok(&self) -> bool {
        self.radius > PROXIMITY_RATIO * self.length
    }
}

/// Sphere-plane force. In the returned [`ForceResult`], `energy` is the
/// plane-plane energy per unit area at `L` (J/m²) and both η factors equal
/// the plane-plane `η_E` at `L`.
pub fn sphere_plane_force(config: &SpherePlaneConfig) -> Result<ForceResult> {
    let plane = CavityConfig::new(config.length, 1.0, config.temperature, config.mirrors)?;
    let ratios = lifshitz::ratios(&plane)?;
    let energy_per_area = ratios.eta_e * super::ideal_energy_per_area(config.length)?;
    let mut flags = Vec::new();
    if !config.proximity_ok() {
        flags.push(Flag::ProximityRadiusNotLarge);
    }
    if let Some((_, contributing)) = ratios.matsubara {
        if contributing < 10 {
            flags.push(Flag::FewMatsubaraTerms);
        }
    }
    Ok(ForceResult {
        force: 2.0 * PI * config.radius * energy_per_area,
        energy: energy_per_area,
        eta_e: ratios.eta_e,
        eta_f: ratios.eta_e,
        numerical_error: ratios.error,
        flags,
        thermal: None,
    })
}
