//! Python module `qvac`.
//!
//! All quantities are SI: metres, square metres, kelvin, rad/s. Domain errors
//! raise `ValueError`; quadrature or series failures raise
//! `qvac.NonConvergenceError`, a subclass of `ArithmeticError`.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use qvac_core::motional::{self, casimir_inertia_mass as core_inertia};
use qvac_core::noise::{self, MonteCarloEstimate};
use qvac_core::thermal as core_thermal;
use qvac_core::{
    CavityConfig, CavityReflection, Material, MaterialPresets, SpherePlaneConfig, ThermalState,
};

create_exception!(qvac, NonConvergenceError, PyArithmeticError);

fn py_err(e: qvac_core::Error) -> PyErr {
    match e {
        qvac_core::Error::NonConvergence(msg) => NonConvergenceError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn state(temperature: f64) -> PyResult<ThermalState> {
    ThermalState::new(temperature).map_err(py_err)
}

fn reflection(material: &str) -> PyResult<CavityReflection> {
    let m = Material::parse(material, &MaterialPresets::default()).map_err(py_err)?;
    Ok(CavityReflection::symmetric(m.mirror()))
}

/// Force, energy and reduction factors of one configuration.
#[pyclass(frozen, get_all, module = "qvac")]
#[derive(Clone)]
pub struct ForceResult {
    /// N, positive when attractive.
    force: f64,
    /// J for plane-plane; J/m² (plane-plane energy per area) for sphere-plane.
    energy: f64,
    eta_e: f64,
    eta_f: f64,
    numerical_error: f64,
    flags: Vec<String>,
    eta_t: Option<f64>,
    eta_t_energy: Option<f64>,
    matsubara_terms: Option<usize>,
}

impl From<qvac_core::ForceResult> for ForceResult {
    fn from(r: qvac_core::ForceResult) -> Self {
        Self {
            force: r.force,
            energy: r.energy,
            eta_e: r.eta_e,
            eta_f: r.eta_f,
            numerical_error: r.numerical_error,
            flags: r.flags.iter().map(|f| f.as_str().to_string()).collect(),
            eta_t: r.thermal.map(|t| t.eta_t),
            eta_t_energy: r.thermal.map(|t| t.eta_t_energy),
            matsubara_terms: r.thermal.map(|t| t.matsubara_terms),
        }
    }
}

#[pymethods]
impl ForceResult {
    fn __repr__(&self) -> String {
        format!(
            "ForceResult(force={:e}, energy={:e}, eta_e={}, eta_f={}, flags={:?})",
            self.force, self.energy, self.eta_e, self.eta_f, self.flags
        )
    }
}

/// Plane-plane cavity of two identical mirrors.
#[pyclass(frozen, module = "qvac")]
pub struct Cavity {
    config: CavityConfig,
}

#[pymethods]
impl Cavity {
    /// `material` is `"perfect"`, `"plasma:<nm>"`, `"gold"` or `"copper"`.
    #[new]
    #[pyo3(signature = (length, area, temperature = 0.0, material = "perfect"))]
    fn new(length: f64, area: f64, temperature: f64, material: &str) -> PyResult<Self> {
        let config = CavityConfig::new(length, area, state(temperature)?, reflection(material)?)
            .map_err(py_err)?;
        Ok(Self { config })
    }

    #[getter]
    fn length(&self) -> f64 {
        self.config.length
    }

    #[getter]
    fn area(&self) -> f64 {
        self.config.area
    }

    #[getter]
    fn temperature(&self) -> f64 {
        self.config.temperature.temperature()
    }

    fn plane_limit_ok(&self) -> bool {
        self.config.plane_limit_ok()
    }

    /// Force and (free) energy at the cavity temperature.
    fn force(&self, py: Python<'_>) -> PyResult<ForceResult> {
        let config = self.config;
        py.detach(|| qvac_core::thermal_force(&config))
            .map(Into::into)
            .map_err(py_err)
    }
}

/// Sphere of radius `radius` at closest distance `length` from a plane.
#[pyclass(frozen, module = "qvac")]
pub struct SpherePlane {
    config: SpherePlaneConfig,
}

#[pymethods]
impl SpherePlane {
    #[new]
    #[pyo3(signature = (radius, length, temperature = 0.0, material = "perfect"))]
    fn new(radius: f64, length: f64, temperature: f64, material: &str) -> PyResult<Self> {
        let config =
            SpherePlaneConfig::new(radius, length, state(temperature)?, reflection(material)?)
                .map_err(py_err)?;
        Ok(Self { config })
    }

    fn force(&self, py: Python<'_>) -> PyResult<ForceResult> {
        let config = self.config;
        py.detach(|| qvac_core::sphere_plane_force(&config))
            .map(Into::into)
            .map_err(py_err)
    }
}

#[pyclass(frozen, get_all, module = "qvac")]
#[derive(Clone)]
pub struct EtaRow {
    length: f64,
    eta_plasma: f64,
    eta_thermal: f64,
    eta_full: f64,
    eta_product: f64,
    numerical_error: f64,
}

#[pymethods]
impl EtaRow {
    /// `|η_full - η_product| / η_full`.
    fn product_deviation(&self) -> f64 {
        (self.eta_full - self.eta_product).abs() / self.eta_full
    }

    fn __repr__(&self) -> String {
        format!(
            "EtaRow(length={:e}, eta_plasma={}, eta_thermal={}, eta_full={})",
            self.length, self.eta_plasma, self.eta_thermal, self.eta_full
        )
    }
}

/// Uniformly sampled mirror trajectory.
#[pyclass(frozen, module = "qvac")]
pub struct Trajectory {
    inner: qvac_core::Trajectory,
}

#[pymethods]
impl Trajectory {
    #[new]
    #[pyo3(signature = (positions, dt, start = 0.0))]
    fn new(positions: Vec<f64>, dt: f64, start: f64) -> PyResult<Self> {
        let inner = qvac_core::Trajectory::with_start(positions, start, dt).map_err(py_err)?;
        Ok(Self { inner })
    }

    /// Parses two-column `t q` text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = qvac_core::Trajectory::parse(text).map_err(py_err)?;
        Ok(Self { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn dt(&self) -> f64 {
        self.inner.dt()
    }

    fn times(&self) -> Vec<f64> {
        (0..self.inner.len()).map(|i| self.inner.time(i)).collect()
    }

    fn positions(&self) -> Vec<f64> {
        self.inner.positions().to_vec()
    }

    /// Vacuum reaction force per sample; `None` where the stencil does not fit.
    fn motional_force(&self, area: f64) -> PyResult<Vec<Option<f64>>> {
        Ok(motional::motional_force_time_domain(&self.inner, area)
            .map_err(py_err)?
            .force)
    }

    /// Thermal friction force per sample.
    fn thermal_friction(&self, area: f64, temperature: f64) -> PyResult<Vec<Option<f64>>> {
        Ok(
            motional::thermal_friction_force(&self.inner, area, state(temperature)?)
                .map_err(py_err)?
                .force,
        )
    }
}

/// Intense beam of `na` photons mixed with a squeezed vacuum.
#[pyclass(frozen, module = "qvac")]
pub struct BeamSplitter {
    setup: qvac_core::BeamSplitterSetup,
}

#[pymethods]
impl BeamSplitter {
    #[new]
    #[pyo3(signature = (na, squeeze = 1.0))]
    fn new(na: f64, squeeze: f64) -> PyResult<Self> {
        let port_b = noise::make_squeezed(1.0, squeeze).map_err(py_err)?;
        let setup = qvac_core::BeamSplitterSetup::new(na, port_b).map_err(py_err)?;
        Ok(Self { setup })
    }

    #[getter]
    fn linearized(&self) -> bool {
        self.setup.linearized()
    }

    fn difference_variance(&self) -> f64 {
        noise::difference_variance(&self.setup)
    }

    fn fano_factor(&self) -> f64 {
        noise::fano_factor(&self.setup)
    }

    /// Returns `(mean, variance, fano)` of the sampled difference count.
    #[pyo3(signature = (trials, seed = 0))]
    fn monte_carlo(&self, trials: usize, seed: u64) -> PyResult<(f64, f64, f64)> {
        let MonteCarloEstimate {
            mean,
            variance,
            fano,
            ..
        } = noise::monte_carlo_difference(&self.setup, trials, seed).map_err(py_err)?;
        Ok((mean, variance, fano))
    }
}

#[pyfunction]
fn ideal_force(length: f64, area: f64) -> PyResult<f64> {
    qvac_core::ideal_force(length, area).map_err(py_err)
}

#[pyfunction]
fn ideal_energy(length: f64, area: f64) -> PyResult<f64> {
    qvac_core::ideal_energy(length, area).map_err(py_err)
}

/// Reduction factors on `points` log-spaced distances in `[lmin, lmax]`.
#[pyfunction]
#[pyo3(signature = (lmin, lmax, points, material = "gold", temperature = 300.0))]
fn eta_sweep(
    py: Python<'_>,
    lmin: f64,
    lmax: f64,
    points: usize,
    material: &str,
    temperature: f64,
) -> PyResult<Vec<EtaRow>> {
    let mirror = Material::parse(material, &MaterialPresets::default())
        .map_err(py_err)?
        .mirror();
    let state = state(temperature)?;
    let rows = py
        .detach(|| qvac_core::eta_sweep(lmin, lmax, points, mirror, state))
        .map_err(py_err)?;
    Ok(rows
        .into_iter()
        .map(|r| EtaRow {
            length: r.length,
            eta_plasma: r.eta_plasma,
            eta_thermal: r.eta_thermal,
            eta_full: r.eta_full,
            eta_product: r.eta_product,
            numerical_error: r.numerical_error,
        })
        .collect())
}

#[pyfunction]
fn mean_photon_number(omega: f64, temperature: f64) -> PyResult<f64> {
    core_thermal::mean_photon_number(omega, state(temperature)?).map_err(py_err)
}

#[pyfunction]
fn mode_energy_first_law(omega: f64, temperature: f64) -> PyResult<f64> {
    core_thermal::mode_energy_first_law(omega, state(temperature)?).map_err(py_err)
}

#[pyfunction]
fn mode_energy_second_law(omega: f64, temperature: f64) -> PyResult<f64> {
    core_thermal::mode_energy_second_law(omega, state(temperature)?).map_err(py_err)
}

#[pyfunction]
fn thermal_weight(omega: f64, temperature: f64) -> PyResult<f64> {
    core_thermal::thermal_weight(omega, state(temperature)?).map_err(py_err)
}

/// `(vacuum, thermal)` energy density in J/m³.
#[pyfunction]
fn energy_density(omega_max: f64, temperature: f64) -> PyResult<(f64, f64)> {
    let e = core_thermal::energy_density(omega_max, state(temperature)?).map_err(py_err)?;
    Ok((e.vacuum, e.thermal))
}

/// χ[Ω] in N/m for the vacuum field.
#[pyfunction]
fn vacuum_susceptibility(omega: f64, area: f64) -> PyResult<Complex64> {
    Ok(motional::vacuum_susceptibility(omega, area)
        .map_err(py_err)?
        .susceptibility
        .value)
}

/// χ[Ω] in N/m for the thermal field.
#[pyfunction]
fn thermal_susceptibility(omega: f64, area: f64, temperature: f64) -> PyResult<Complex64> {
    let r = motional::thermal_susceptibility(omega, area, state(temperature)?).map_err(py_err)?;
    Ok(r.susceptibility.value)
}

#[pyfunction]
fn casimir_inertia_mass(length: f64, area: f64) -> PyResult<f64> {
    core_inertia(length, area).map_err(py_err)
}

#[pymodule]
fn qvac(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", qvac_core::VERSION)?;
    m.add(
        "NonConvergenceError",
        m.py().get_type::<NonConvergenceError>(),
    )?;
    m.add_class::<ForceResult>()?;
    m.add_class::<Cavity>()?;
    m.add_class::<SpherePlane>()?;
    m.add_class::<EtaRow>()?;
    m.add_class::<Trajectory>()?;
    m.add_class::<BeamSplitter>()?;
    m.add_function(wrap_pyfunction!(ideal_force, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_energy, m)?)?;
    m.add_function(wrap_pyfunction!(eta_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(mean_photon_number, m)?)?;
    m.add_function(wrap_pyfunction!(mode_energy_first_law, m)?)?;
    m.add_function(wrap_pyfunction!(mode_energy_second_law, m)?)?;
    m.add_function(wrap_pyfunction!(thermal_weight, m)?)?;
    m.add_function(wrap_pyfunction!(energy_density, m)?)?;
    m.add_function(wrap_pyfunction!(vacuum_susceptibility, m)?)?;
    m.add_function(wrap_pyfunction!(thermal_susceptibility, m)?)?;
    m.add_function(wrap_pyfunction!(casimir_inertia_mass, m)?)?;
    Ok(())
}
