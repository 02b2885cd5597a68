//! Imaginary-axis scattering formula for real mirrors.
//!
//! Wavevectors are measured in units of `1/2L`: `u = 2κL`, so that the
//! round-trip factor is `e^{-u}` and the mirrors enter only through
//! `2Lω_p/c`. Results therefore depend on `L/λ_p` and `θL/c` alone.
//!
//! At `T = 0`, with `ξ/c = κ t` and `k = κ √(1 - t²)`:
//!
//! ```text
//! E/A = ħc/(32π²L³) ∫_0^∞ du u² ∫_0^1 dt Σ_p -ln(1 - r_p e^{-u})
//! F/A = ħc/(32π²L⁴) ∫_0^∞ du u³ ∫_0^1 dt Σ_p r_p e^{-u} / (1 - r_p e^{-u})
//! ```
//!
//! For perfect mirrors the double integrals are `2π⁴/45` and `2π⁴/15`, which
//! normalise the η factors. At `T > 0`, with `u_n = 2Lξ_n/c`:
//!
//! ```text
//! E/A = k_BT/(8πL²) Σ'_n ∫_{u_n}^∞ du u  Σ_p -ln(1 - r_p e^{-u})
//! F/A = k_BT/(8πL³) Σ'_n ∫_{u_n}^∞ du u² Σ_p r_p e^{-u} / (1 - r_p e^{-u})
//! ```

use std::f64::consts::PI;

use crate::constants::{BOLTZMANN, HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::mirror::{CavityReflection, MirrorModel, Polarization};
use crate::quadrature::Integrator;

use super::{ideal, CavityConfig, Flag, ForceResult, ThermalCorrection};

/// Truncation of the Matsubara sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraPolicy {
    pub min_terms: usize,
    /// Stop once a term's contribution relative to the running sum drops
    /// below this value (energy and force both).
    pub relative_cutoff: f64,
    pub max_terms: usize,
}

impl Default for MatsubaraPolicy {
    fn default() -> Self {
        Self {
            min_terms: 20,
            relative_cutoff: 1e-10,
            max_terms: 200_000,
        }
    }
}

/// Below this many contributing terms a result carries
/// [`Flag::FewMatsubaraTerms`].
const FEW_TERMS: usize = 10;

const OUTER_TOL: f64 = 1e-10;
const INNER_TOL: f64 = 1e-12;

/// `2π⁴/45`: energy double integral for perfect mirrors.
fn perfect_energy_integral() -> f64 {
    2.0 * PI.powi(4) / 45.0
}

/// `2π⁴/15`: force double integral for perfect mirrors.
fn perfect_force_integral() -> f64 {
    2.0 * PI.powi(4) / 15.0
}

/// The cavity expressed in `1/2L` units.
#[derive(Debug, Clone, Copy)]
struct ScaledCavity {
    mirror1: MirrorModel,
    mirror2: MirrorModel,
    wp1: Option<f64>,
    wp2: Option<f64>,
}

impl ScaledCavity {
    fn new(mirrors: &CavityReflection, length: f64) -> Self {
        let scale = |m: &MirrorModel| m.plasma_wavenumber().map(|k| 2.0 * length * k);
        Self {
            mirror1: mirrors.mirror1,
            mirror2: mirrors.mirror2,
            wp1: scale(&mirrors.mirror1),
            wp2: scale(&mirrors.mirror2),
        }
    }

    fn product(&self, xi: f64, k: f64, p: Polarization) -> f64 {
        self.mirror1.amplitude_scaled(xi, k, self.wp1, p)
            * self.mirror2.amplitude_scaled(xi, k, self.wp2, p)
    }

    /// Sums `-ln(1 - r e^{-u})` and `r e^{-u}/(1 - r e^{-u})` over polarizations.
    fn spectral_terms(&self, xi: f64, k: f64, u: f64) -> (f64, f64) {
        let decay = (-u).exp();
        Polarization::ALL.iter().fold((0.0, 0.0), |(e, f), &p| {
            let x = self.product(xi, k, p) * decay;
            (e - (-x).ln_1p(), f + x / (1.0 - x))
        })
    }
}

/// η factors with their combined relative error.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ratios {
    pub eta_e: f64,
    pub eta_f: f64,
    pub error: f64,
    /// (terms summed, contributing terms) for Matsubara sums.
    pub matsubara: Option<(usize, usize)>,
}

impl Ratios {
    const IDEAL: Ratios = Ratios {
        eta_e: 1.0,
        eta_f: 1.0,
        error: 0.0,
        matsubara: None,
    };
}

/// Zero-temperature η factors.
fn zero_temperature_ratios(config: &CavityConfig) -> Result<Ratios> {
    if config.mirrors.is_perfect() {
        return Ok(Ratios::IDEAL);
    }
    let cavity = ScaledCavity::new(&config.mirrors, config.length);
    let inner = Integrator {
        rel_tol: INNER_TOL,
        abs_tol: 1e-300,
        initial_panels: 2,
        ..Integrator::default()
    };
    let outer = Integrator {
        rel_tol: OUTER_TOL,
        initial_panels: 8,
        ..Integrator::default()
    };

    let angular = |u: f64, force: bool| -> Result<(f64, f64)> {
        if u == 0.0 || (-u).exp() == 0.0 {
            return Ok((0.0, 0.0));
        }
        let est = inner.integrate(
            |t| {
                let s = ((1.0 - t) * (1.0 + t)).sqrt();
                let (e, f) = cavity.spectral_terms(u * t, u * s, u);
                if force {
                    f
                } else {
                    e
                }
            },
            0.0,
            1.0,
        )?;
        Ok((est.value, est.error))
    };

    let energy = outer.try_integrate_to_infinity_with_errors(
        |u| angular(u, false).map(|(v, e)| (u * u * v, u * u * e)),
        0.0,
        2.0,
    )?;
    let force = outer.try_integrate_to_infinity_with_errors(
        |u| angular(u, true).map(|(v, e)| (u.powi(3) * v, u.powi(3) * e)),
        0.0,
        3.0,
    )?;
    let error = energy.relative_error().max(force.relative_error());
    Ok(Ratios {
        eta_e: energy.value / perfect_energy_integral(),
        eta_f: force.value / perfect_force_integral(),
        error,
        matsubara: None,
    })
}

/// Finite-temperature η factors from the Matsubara sum.
fn matsubara_ratios(config: &CavityConfig, policy: &MatsubaraPolicy) -> Result<Ratios> {
    let length = config.length;
    let cavity = ScaledCavity::new(&config.mirrors, length);
    let step = 2.0 * length * config.temperature.temperature_frequency() / SPEED_OF_LIGHT;
    let integrator = Integrator {
        rel_tol: OUTER_TOL,
        abs_tol: 1e-300,
        initial_panels: 4,
        ..Integrator::default()
    };

    let term = |n: usize| -> Result<(f64, f64, f64, f64)> {
        let un = step * n as f64;
        let energy = integrator.integrate_to_infinity(
            |v| {
                let u = un + v;
                let k = (v * (2.0 * un + v)).sqrt();
                u * cavity.spectral_terms(un, k, u).0
            },
            0.0,
            1.0,
        )?;
        let force = integrator.integrate_to_infinity(
            |v| {
                let u = un + v;
                let k = (v * (2.0 * un + v)).sqrt();
                u * u * cavity.spectral_terms(un, k, u).1
            },
            0.0,
            1.0,
        )?;
        Ok((energy.value, energy.error, force.value, force.error))
    };

    let mut energy_terms = Vec::new();
    let mut force_terms = Vec::new();
    let (mut sum_e, mut sum_f, mut err_e, mut err_f) = (0.0, 0.0, 0.0, 0.0);
    let mut n = 0usize;
    loop {
        if n >= policy.max_terms {
            return Err(Error::NonConvergence(format!(
                "Matsubara sum did not converge within {} terms (2ξ_1 L/c = {step:e}); \
                 use the zero-temperature evaluation for such low temperatures",
                policy.max_terms
            )));
        }
        let weight = if n == 0 { 0.5 } else { 1.0 };
        let (e, de, f, df) = term(n)?;
        let (e, f) = (weight * e, weight * f);
        sum_e += e;
        sum_f += f;
        err_e += weight * de;
        err_f += weight * df;
        energy_terms.push(e);
        force_terms.push(f);
        n += 1;
        let negligible = |t: f64, s: f64| t.abs() <= policy.relative_cutoff * s.abs();
        if n >= policy.min_terms && negligible(e, sum_e) && negligible(f, sum_f) {
            break;
        }
    }

    // η = (k_BT/8πL²)Σ' / (ħcπ²/720L³), and likewise for the force with 240/L⁴.
    let kt_over_hbar_c = BOLTZMANN * config.temperature.temperature() / (HBAR * SPEED_OF_LIGHT);
    let energy_scale = kt_over_hbar_c * length * 720.0 / (8.0 * PI * PI * PI);
    let force_scale = kt_over_hbar_c * length * 240.0 / (8.0 * PI * PI * PI);

    // Remaining tail: terms fall off at least geometrically with ratio e^{-step}.
    let ratio = (-step).exp();
    let tail =
        |last: f64, sum: f64| last.abs() * ratio / (1.0 - ratio).max(f64::MIN_POSITIVE) / sum.abs();
    let last_e = *energy_terms.last().expect("at least one term");
    let last_f = *force_terms.last().expect("at least one term");
    let error =
        (err_e / sum_e.abs() + tail(last_e, sum_e)).max(err_f / sum_f.abs() + tail(last_f, sum_f));

    let contributing = force_terms
        .iter()
        .zip(&energy_terms)
        .filter(|(f, e)| {
            f.abs() > policy.relative_cutoff * sum_f.abs()
                || e.abs() > policy.relative_cutoff * sum_e.abs()
        })
        .count();

    Ok(Ratios {
        eta_e: energy_scale * sum_e,
        eta_f: force_scale * sum_f,
        error,
        matsubara: Some((n, contributing)),
    })
}

pub(crate) fn ratios(config: &CavityConfig) -> Result<Ratios> {
    if config.temperature.is_zero() {
        zero_temperature_ratios(config)
    } else {
        matsubara_ratios(config, &MatsubaraPolicy::default())
    }
}

fn assemble(
    config: &CavityConfig,
    ratios: Ratios,
    thermal: Option<ThermalCorrection>,
) -> Result<ForceResult> {
    let mut flags = Vec::new();
    if !config.plane_limit_ok() {
        flags.push(Flag::PlaneLimitViolated);
    }
    if let Some((_, contributing)) = ratios.matsubara {
        if contributing < FEW_TERMS {
            flags.push(Flag::FewMatsubaraTerms);
        }
    }
    Ok(ForceResult {
        force: ratios.eta_f * ideal::ideal_force(config.length, config.area)?,
        energy: ratios.eta_e * ideal::ideal_energy(config.length, config.area)?,
        eta_e: ratios.eta_e,
        eta_f: ratios.eta_f,
        numerical_error: ratios.error,
        flags,
        thermal,
    })
}

fn require_zero_temperature(config: &CavityConfig) -> Result<()> {
    if config.temperature.is_zero() {
        Ok(())
    } else {
        Err(Error::domain(
            "zero-temperature evaluation called with T > 0; use thermal_force",
        ))
    }
}

/// Energy of a cavity of real mirrors at `T = 0`. Perfect cavities take the
/// closed form; everything else is integrated on the imaginary axis.
pub fn real_mirror_energy(config: &CavityConfig) -> Result<ForceResult> {
    require_zero_temperature(config)?;
    assemble(config, zero_temperature_ratios(config)?, None)
}

/// Force of a cavity of real mirrors at `T = 0`. Same evaluation as
/// [`real_mirror_energy`]; both fields are filled in either case.
pub fn real_mirror_force(config: &CavityConfig) -> Result<ForceResult> {
    real_mirror_energy(config)
}

/// Force and free energy at the cavity's temperature, with the thermal
/// correction `η_T = F(T)/F(0)` in [`ForceResult::thermal`].
pub fn thermal_force(config: &CavityConfig) -> Result<ForceResult> {
    if config.temperature.is_zero() {
        let thermal = ThermalCorrection {
            eta_t: 1.0,
            eta_t_energy: 1.0,
            matsubara_terms: 0,
            contributing_terms: 0,
        };
        return assemble(config, zero_temperature_ratios(config)?, Some(thermal));
    }
    let hot = matsubara_ratios(config, &MatsubaraPolicy::default())?;
    let cold = zero_temperature_ratios(config)?;
    let (terms, contributing) = hot.matsubara.expect("Matsubara evaluation");
    let thermal = ThermalCorrection {
        eta_t: hot.eta_f / cold.eta_f,
        eta_t_energy: hot.eta_e / cold.eta_e,
        matsubara_terms: terms,
        contributing_terms: contributing,
    };
    assemble(config, hot, Some(thermal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thermal::ThermalState;

    fn plasma_cavity(length: f64, lambda: f64, t: f64) -> CavityConfig {
        CavityConfig::new(
            length,
            1e-4,
            ThermalState::new(t).unwrap(),
            CavityReflection::symmetric(MirrorModel::from_plasma_wavelength(lambda).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn perfect_mirrors_use_closed_form() {
        let c =
            CavityConfig::new(1e-6, 1e-4, ThermalState::ZERO, CavityReflection::perfect()).unwrap();
        let r = real_mirror_force(&c).unwrap();
        assert_eq!((r.eta_e, r.eta_f, r.numerical_error), (1.0, 1.0, 0.0));
        assert_eq!(r.force, ideal::ideal_force(1e-6, 1e-4).unwrap());
    }

    #[test]
    fn quadrature_reproduces_perfect_normalisation() {
        // A perfect/perfect cavity pushed through the integrals instead of
        // the closed form.
        let c =
            CavityConfig::new(1e-6, 1e-4, ThermalState::ZERO, CavityReflection::perfect()).unwrap();
        let mut cavity = ScaledCavity::new(&c.mirrors, c.length);
        cavity.wp1 = None;
        cavity.wp2 = None;
        let est = Integrator::default()
            .integrate_to_infinity(
                |u| u * u * cavity.spectral_terms(0.3 * u, 0.9 * u, u).0,
                0.0,
                2.0,
            )
            .unwrap();
        assert!((est.value / perfect_energy_integral() - 1.0).abs() < 1e-11);
        let est = Integrator::default()
            .integrate_to_infinity(
                |u| u.powi(3) * cavity.spectral_terms(0.3 * u, 0.9 * u, u).1,
                0.0,
                3.0,
            )
            .unwrap();
        assert!((est.value / perfect_force_integral() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn plasma_long_and_short_distance() {
        let far = real_mirror_energy(&plasma_cavity(10e-6, 136e-9, 0.0)).unwrap();
        assert!(far.eta_e > 0.99 && far.eta_e < 1.0, "{}", far.eta_e);
        let near = real_mirror_energy(&plasma_cavity(0.1e-6, 136e-9, 0.0)).unwrap();
        assert!(near.eta_e < 0.9, "{}", near.eta_e);
        assert!(near.numerical_error < 1e-8, "{}", near.numerical_error);
    }

    #[test]
    fn zero_temperature_rejects_hot_config() {
        assert!(real_mirror_force(&plasma_cavity(1e-6, 136e-9, 300.0)).is_err());
    }

    #[test]
    fn thermal_at_zero_temperature_is_real_mirror_force() {
        let c = plasma_cavity(0.5e-6, 136e-9, 0.0);
        let a = thermal_force(&c).unwrap();
        let b = real_mirror_force(&c).unwrap();
        assert_eq!(a.force.to_bits(), b.force.to_bits());
        assert_eq!(a.thermal.unwrap().eta_t, 1.0);
    }

    #[test]
    fn high_temperature_limit_is_classical() {
        // Perfect mirrors, n = 0 term only: F/A = ζ(3) k_BT / (4πL³)
        let l = 50e-6;
        let c = CavityConfig::new(
            l,
            1.0,
            ThermalState::new(300.0).unwrap(),
            CavityReflection::perfect(),
        )
        .unwrap();
        let r = thermal_force(&c).unwrap();
        let zeta3 = 1.202_056_903_159_594_3;
        let classical = zeta3 * BOLTZMANN * 300.0 / (4.0 * PI * l.powi(3));
        assert!(
            (r.force / classical - 1.0).abs() < 1e-6,
            "{} vs {classical}",
            r.force
        );
        assert!(r.has_flag(Flag::FewMatsubaraTerms));
    }
}
