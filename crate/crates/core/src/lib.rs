//! Numerical models of quantum-vacuum observables.
//!
//! The crate is organised by physical subsystem:
//!
//! - [`thermal`]: Planck's two laws for the mean energy of a field mode, the
//!   thermal weight `coth(ħω/2k_BT)` and the cutoff vacuum energy density.
//! - [`mirror`]: reflection amplitudes of perfect and plasma-model mirrors,
//!   and the Airy function of a Fabry-Perot cavity.
//! - [`casimir`]: Casimir force and energy between plane mirrors, ideal and
//!   real (finite conductivity, finite temperature), the correction factors
//!   η and the sphere-plane proximity mapping.
//! - [`motional`]: inertia of Casimir energy and the dissipative reaction of
//!   vacuum and thermal fields on a moving mirror.
//! - [`noise`]: quadrature fluctuations at a beam splitter and photon-noise
//!   statistics, with a seeded Monte-Carlo check.
//!
//! All quantities are SI. Unit conveniences live in the command-line crate.

pub mod casimir;
pub mod constants;
mod error;
pub mod mirror;
pub mod motional;
pub mod noise;
pub mod presets;
pub mod quadrature;
pub mod stencil;
pub mod thermal;

pub use casimir::{
    eta_sweep, ideal_energy, ideal_force, real_mirror_energy, real_mirror_force,
    sphere_plane_force, thermal_force, CavityConfig, EtaRow, Flag, ForceResult, SpherePlaneConfig,
    ThermalCorrection,
};
pub use constants::PhysicalConstants;
pub use error::{Error, Result};
pub use mirror::{CavityReflection, MirrorModel, ModeCoordinate, Polarization};
pub use motional::{Susceptibility, Trajectory};
pub use noise::{BeamSplitterSetup, QuadratureState};
pub use presets::{Material, MaterialPresets};
pub use thermal::ThermalState;

/// Library version embedded in machine-readable output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
