//! Mechanical effects of vacuum and thermal radiation pressure: the inertia
//! of Casimir energy and the dissipative reaction on a moving mirror.
//!
//! In the Fourier domain the reaction force is `F[Ω] = χ[Ω] q[Ω]`. For a
//! perfect plane mirror of area `A` (leading order, `A ≫ c²/Ω²`):
//!
//! ```text
//! thermal field, θ ≫ Ω:  χ = i ħA θ⁴ Ω / 240π²c⁴    F(t) = +ħA θ⁴ q'(t) / 240π²c⁴
//! vacuum, T = 0:          χ = i ħA Ω⁵ / 60π²c⁴      F(t) = -ħA q⁽⁵⁾(t) / 60π²c⁴
//! ```
//!
//! The thermal expression keeps the sign with which it is usually quoted,
//! `+q'`, even though it describes friction. The vacuum reaction vanishes
//! for every polynomial motion of degree four or less, in particular for
//! uniform velocity and uniform acceleration.
//!
//! A scalar field in two dimensions gives a force proportional to `q'''`
//! (susceptibility ∝ Ω³); that case has no prefactor here and is not
//! implemented.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::casimir::{ideal_energy, ideal_force};
use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{positive, Error, Result};
use crate::stencil;
use crate::thermal::ThermalState;

/// A condition `X ≫ Y` is taken to hold when `X > VALIDITY_RATIO · Y`.
pub const VALIDITY_RATIO: f64 = 100.0;

/// Relative tolerance on the time step when reading `(t, q)` series.
const UNIFORM_STEP_TOLERANCE: f64 = 1e-6;

/// Mass correction `μ = (E_Cas - F_Cas L)/c²` of a cavity stressed by the
/// Casimir force. Always negative, since `E_Cas = F_Cas L / 3`.
pub fn casimir_inertia_mass(length: f64, area: f64) -> Result<f64> {
    let e = ideal_energy(length, area)?;
    let f = ideal_force(length, area)?;
    Ok((e - f * length) / (SPEED_OF_LIGHT * SPEED_OF_LIGHT))
}

/// Linear response of the radiation-pressure force to motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Susceptibility {
    /// Mechanical frequency Ω, rad/s.
    pub omega: f64,
    /// χ[Ω] in N/m.
    #[serde(serialize_with = "serialize_complex")]
    pub value: Complex64,
}

fn serialize_complex<S: serde::Serializer>(
    z: &Complex64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &z.re)?;
    st.serialize_field("im", &z.im)?;
    st.end()
}

/// Advisory domain flags of the asymptotic susceptibilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MotionalValidity {
    /// `A ≫ c²/Ω²`.
    pub large_area: bool,
    /// `θ ≫ Ω` for the thermal law, `θ = 0` for the vacuum law.
    pub temperature_regime: bool,
}

impl MotionalValidity {
    pub fn all_ok(&self) -> bool {
        self.large_area && self.temperature_regime
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SusceptibilityResult {
    pub susceptibility: Susceptibility,
    pub validity: MotionalValidity,
}

fn large_area(area: f64, omega: f64) -> bool {
    area > VALIDITY_RATIO * (SPEED_OF_LIGHT / omega).powi(2)
}

fn thermal_coefficient(area: f64, theta: f64) -> f64 {
    HBAR * area * theta.powi(4) / (240.0 * PI * PI * SPEED_OF_LIGHT.powi(4))
}

fn vacuum_coefficient(area: f64) -> f64 {
    HBAR * area / (60.0 * PI * PI * SPEED_OF_LIGHT.powi(4))
}

/// Thermal-field susceptibility `χ = i ħA θ⁴ Ω / 240π²c⁴`.
pub fn thermal_susceptibility(
    omega: f64,
    area: f64,
    state: ThermalState,
) -> Result<SusceptibilityResult> {
    positive("omega", omega)?;
    positive("area", area)?;
    let theta = state.temperature_frequency();
    Ok(SusceptibilityResult {
        susceptibility: Susceptibility {
            omega,
            value: Complex64::new(0.0, thermal_coefficient(area, theta) * omega),
        },
        validity: MotionalValidity {
            large_area: large_area(area, omega),
            temperature_regime: theta > VALIDITY_RATIO * omega,
        },
    })
}

/// Vacuum susceptibility `χ = i ħA Ω⁵ / 60π²c⁴`.
pub fn vacuum_susceptibility(omega: f64, area: f64) -> Result<SusceptibilityResult> {
    positive("omega", omega)?;
    positive("area", area)?;
    Ok(SusceptibilityResult {
        susceptibility: Susceptibility {
            omega,
            value: Complex64::new(0.0, vacuum_coefficient(area) * omega.powi(5)),
        },
        validity: MotionalValidity {
            large_area: large_area(area, omega),
            temperature_regime: true,
        },
    })
}

/// Uniformly sampled mirror position `q(t_i)`, `t_i = start + i·dt`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    positions: Vec<f64>,
    start: f64,
    dt: f64,
}

impl Trajectory {
    pub fn new(positions: Vec<f64>, dt: f64) -> Result<Self> {
        Self::with_start(positions, 0.0, dt)
    }

    pub fn with_start(positions: Vec<f64>, start: f64, dt: f64) -> Result<Self> {
        positive("dt", dt)?;
        if !start.is_finite() {
            return Err(Error::domain("start time must be finite"));
        }
        if positions.len() < stencil::WIDTH {
            return Err(Error::domain(format!(
                "trajectory needs at least {} samples, got {}",
                stencil::WIDTH,
                positions.len()
            )));
        }
        if let Some(bad) = positions.iter().position(|q| !q.is_finite()) {
            return Err(Error::domain(format!(
                "position sample {bad} is not finite"
            )));
        }
        Ok(Self {
            positions,
            start,
            dt,
        })
    }

    /// Samples `q(t)` at `count` points with step `dt` from `t = 0`.
    pub fn sample(count: usize, dt: f64, q: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new((0..count).map(|i| q(i as f64 * dt)).collect(), dt)
    }

    /// Builds a trajectory from explicit `(t, q)` pairs, checking that the
    /// time step is uniform.
    pub fn from_pairs(times: &[f64], positions: &[f64]) -> Result<Self> {
        if times.len() != positions.len() {
            return Err(Error::domain("time and position columns differ in length"));
        }
        if times.len() < 2 {
            return Err(Error::domain(format!(
                "trajectory needs at least {} samples, got {}",
                stencil::WIDTH,
                times.len()
            )));
        }
        let n = times.len();
        let dt = (times[n - 1] - times[0]) / (n - 1) as f64;
        positive("time step", dt)?;
        for (i, w) in times.windows(2).enumerate() {
            if ((w[1] - w[0]) - dt).abs() > UNIFORM_STEP_TOLERANCE * dt {
                return Err(Error::domain(format!(
                    "non-uniform time step between samples {i} and {}: {} vs mean {dt}",
                    i + 1,
                    w[1] - w[0]
                )));
            }
        }
        Self::with_start(positions.to_vec(), times[0], dt)
    }

    /// Parses two-column `t q` text. Columns may be separated by whitespace
    /// or a comma; blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut times = Vec::new();
        let mut positions = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|e| Error::Parse {
                    line: idx + 1,
                    message: format!("{s:?}: {e}"),
                })
            };
            match fields.as_slice() {
                [t, q] => {
                    times.push(parse(t)?);
                    positions.push(parse(q)?);
                }
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!("expected two columns, found {}", fields.len()),
                    })
                }
            }
        }
        Self::from_pairs(&times, &positions)
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn time(&self, i: usize) -> f64 {
        self.start + i as f64 * self.dt
    }
}

/// Force samples aligned with a trajectory. Boundary samples, where the
/// stencil does not fit, are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForceSeries {
    pub times: Vec<f64>,
    pub force: Vec<Option<f64>>,
}

impl ForceSeries {
    /// `(t, F)` for the valid interior samples.
    pub fn interior(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.times
            .iter()
            .zip(&self.force)
            .filter_map(|(&t, f)| f.map(|f| (t, f)))
    }

    pub fn max_abs(&self) -> f64 {
        self.interior().fold(0.0, |m, (_, f)| m.max(f.abs()))
    }
}

fn series(traj: &Trajectory, force: Vec<Option<f64>>) -> ForceSeries {
    ForceSeries {
        times: (0..traj.len()).map(|i| traj.time(i)).collect(),
        force,
    }
}

/// Vacuum reaction `F(t) = -ħA q⁽⁵⁾(t) / 60π²c⁴` from the 11-point stencil.
pub fn motional_force_time_domain(traj: &Trajectory, area: f64) -> Result<ForceSeries> {
    positive("area", area)?;
    let k = vacuum_coefficient(area);
    let d5 = stencil::fifth_derivative(traj.positions(), traj.dt());
    Ok(series(
        traj,
        d5.into_iter().map(|d| d.map(|d| -k * d)).collect(),
    ))
}

/// Thermal friction `F(t) = ħA θ⁴ q'(t) / 240π²c⁴`, sign as quoted.
pub fn thermal_friction_force(
    traj: &Trajectory,
    area: f64,
    state: ThermalState,
) -> Result<ForceSeries> {
    positive("area", area)?;
    let k = thermal_coefficient(area, state.temperature_frequency());
    let d1 = stencil::first_derivative(traj.positions(), traj.dt());
    Ok(series(
        traj,
        d1.into_iter().map(|d| d.map(|d| k * d)).collect(),
    ))
}
