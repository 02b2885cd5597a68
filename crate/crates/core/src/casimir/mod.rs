//! Casimir force and energy between two plane mirrors.
//!
//! Sign conventions: forces are positive when attractive and energies are
//! reported positive, `E = ħcπ²A/720L³` for perfect mirrors. The binding
//! energy of the cavity is the negative of the reported value.
//!
//! Real mirrors are handled with the scattering formula written on the
//! imaginary frequency axis, where the integrand is smooth and exponentially
//! decaying:
//!
//! ```text
//! E/A = -(ħ/2π) Σ_p ∫_0^∞ dξ ∫ d²k/4π² ln(1 - r_p(iξ, k) e^{-2κL})
//! ```
//!
//! At finite temperature the frequency integral becomes a Matsubara sum,
//! `(ħ/2π)∫dξ → k_BT Σ'_n` over `ξ_n = 2πn k_BT/ħ` with the `n = 0` term
//! halved. Reported "energies" at `T > 0` are free energies.

mod ideal;
mod lifshitz;
mod proximity;
mod sweep;

use serde::Serialize;

use crate::error::{positive, Result};
use crate::mirror::CavityReflection;
use crate::thermal::ThermalState;

pub use ideal::{ideal_energy, ideal_energy_per_area, ideal_force, ideal_force_per_area};
pub use lifshitz::{real_mirror_energy, real_mirror_force, thermal_force, MatsubaraPolicy};
pub use proximity::{sphere_plane_force, SpherePlaneConfig};
pub use sweep::{eta_sweep, log_spaced, EtaRow};

/// Plane-plane results are flagged when `A <= PLANE_LIMIT_RATIO · L²`.
pub const PLANE_LIMIT_RATIO: f64 = 100.0;

/// Validity warnings attached to results. They never block a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// `A ≫ L²` does not hold; edge effects are not negligible.
    PlaneLimitViolated,
    /// Fewer than ten Matsubara terms contribute (high-temperature regime).
    FewMatsubaraTerms,
    /// `R ≫ L` does not hold for the proximity mapping.
    ProximityRadiusNotLarge,
}

impl Flag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Flag::PlaneLimitViolated => "plane_limit_violated",
            Flag::FewMatsubaraTerms => "few_matsubara_terms",
            Flag::ProximityRadiusNotLarge => "proximity_radius_not_large",
        }
    }
}

/// Plane-plane cavity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityConfig {
    /// Mirror separation `L`, m.
    pub length: f64,
    /// Mirror area `A`, m².
    pub area: f64,
    pub temperature: ThermalState,
    pub mirrors: CavityReflection,
}

impl CavityConfig {
    pub fn new(
        length: f64,
        area: f64,
        temperature: ThermalState,
        mirrors: CavityReflection,
    ) -> Result<Self> {
        positive("length", length)?;
        positive("area", area)?;
        Ok(Self {
            length,
            area,
            temperature,
            mirrors,
        })
    }

    /// Same cavity at another distance.
    pub fn with_length(&self, length: f64) -> Result<Self> {
        Self::new(length, self.area, self.temperature, self.mirrors)
    }

    pub fn with_temperature(&self, temperature: ThermalState) -> Self {
        Self {
            temperature,
            ..*self
        }
    }

    pub fn with_mirrors(&self, mirrors: CavityReflection) -> Self {
        Self { mirrors, ..*self }
    }

    pub fn plane_limit_ok(&self) -> bool {
        self.area > PLANE_LIMIT_RATIO * self.length * self.length
    }
}

/// Finite-temperature metadata of a [`ForceResult`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermalCorrection {
    /// `η_T = F(T)/F(0)` for the same mirrors.
    pub eta_t: f64,
    /// `E(T)/E(0)` for the same mirrors.
    pub eta_t_energy: f64,
    /// Matsubara terms summed.
    pub matsubara_terms: usize,
    /// Terms whose relative contribution exceeded the truncation threshold.
    pub contributing_terms: usize,
}

/// Force and energy of a cavity with their ratios to the ideal values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForceResult {
    /// Force in N, positive when attractive.
    pub force: f64,
    /// Energy in J, positive as in `E = ħcπ²A/720L³`.
    pub energy: f64,
    pub eta_e: f64,
    pub eta_f: f64,
    /// Relative error estimate from quadrature and summation.
    pub numerical_error: f64,
    pub flags: Vec<Flag>,
    pub thermal: Option<ThermalCorrection>,
}

impl ForceResult {
    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}
