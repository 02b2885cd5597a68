//! Command-line front end of `qvac`.
//!
//! Units at the boundary: lengths in μm, plane-plane areas in cm², motional
//! areas in m², temperatures in K, angular frequencies in rad/s. Everything
//! is converted to SI before calling into [`qvac_core`].

pub mod output;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use qvac_core::motional::{
    motional_force_time_domain, thermal_friction_force, thermal_susceptibility,
    vacuum_susceptibility,
};
use qvac_core::noise::{difference_variance, fano_factor, make_squeezed, monte_carlo_difference};
use qvac_core::thermal::{
    energy_density, mean_photon_number, mode_energy_first_law, mode_energy_second_law,
    thermal_weight,
};
use qvac_core::{
    eta_sweep, ideal_energy, ideal_force, sphere_plane_force, thermal_force, BeamSplitterSetup,
    CavityConfig, CavityReflection, ForceResult, Material, MaterialPresets, SpherePlaneConfig,
    ThermalState, Trajectory,
};
use thiserror::Error;

pub use output::{Field, Format, Record};

/// Environment variable naming a preset file, overridden by `--presets`.
pub const PRESETS_ENV: &str = "QVAC_PRESETS";

const UM: f64 = 1e-6;
const CM2: f64 = 1e-4;

pub fn version() -> &'static str {
    concat!("qvac ", env!("CARGO_PKG_VERSION"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qvac_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit code: 3 for numerical non-convergence, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(qvac_core::Error::NonConvergence(_)) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qvac",
    version,
    about = "Casimir forces, motional radiation pressure and photon noise",
    after_help = "Units: lengths in μm, plane-plane areas in cm², motional areas in m², \
                  temperatures in K, angular frequencies in rad/s.\n\
                  Exit codes: 0 success, 2 argument or domain error, 3 numerical non-convergence."
)]
pub struct Cli {
    /// Output format: CSV with a header row, or one JSON object per line.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Material preset file with `name = <plasma wavelength in nm>` lines.
    #[arg(long, env = PRESETS_ENV, global = true)]
    pub presets: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Casimir force and energy between perfect mirrors.
    Ideal(IdealArgs),
    /// Plane-plane force with plasma and thermal corrections.
    Force(ForceArgs),
    /// Sweep of the reduction factors over log-spaced distances.
    Eta(EtaArgs),
    /// Sphere-plane force from the proximity rule.
    Psphere(SphereArgs),
    /// Radiation-pressure force on a mirror following a sampled trajectory.
    Motional(MotionalArgs),
    /// Vacuum and thermal motional susceptibilities.
    Chi(ChiArgs),
    /// Photon-number-difference noise behind a beam splitter.
    Noise(NoiseArgs),
    /// Mean photon number and mode energy of one field mode.
    Planck(PlanckArgs),
    /// Field energy density with a frequency cutoff.
    Density(DensityArgs),
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Mirror separation, μm.
    #[arg(long)]
    pub length_um: f64,
    /// Mirror area, cm².
    #[arg(long, default_value_t = 1.0)]
    pub area_cm2: f64,
}

#[derive(Debug, Args)]
pub struct ForceArgs {
    /// Mirror separation, μm.
    #[arg(long)]
    pub length_um: f64,
    /// Mirror area, cm².
    #[arg(long, default_value_t = 1.0)]
    pub area_cm2: f64,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 0.0)]
    pub temperature_k: f64,
    /// `perfect`, `plasma:<λ_p in nm>` or a preset name.
    #[arg(long, default_value = "perfect")]
    pub material: String,
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    /// Smallest separation, μm.
    #[arg(long, default_value_t = 0.1)]
    pub lmin_um: f64,
    /// Largest separation, μm.
    #[arg(long, default_value_t = 10.0)]
    pub lmax_um: f64,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    /// `perfect`, `plasma:<λ_p in nm>` or a preset name.
    #[arg(long, default_value = "gold")]
    pub material: String,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 300.0)]
    pub temperature_k: f64,
}

#[derive(Debug, Args)]
pub struct SphereArgs {
    /// Sphere radius, μm.
    #[arg(long)]
    pub radius_um: f64,
    /// Distance of closest approach, μm.
    #[arg(long)]
    pub length_um: f64,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 0.0)]
    pub temperature_k: f64,
    /// `perfect`, `plasma:<λ_p in nm>` or a preset name.
    #[arg(long, default_value = "perfect")]
    pub material: String,
}

#[derive(Debug, Args)]
pub struct MotionalArgs {
    /// Two-column `t q` text file (s, m), uniform time step.
    #[arg(long)]
    pub trajectory_file: PathBuf,
    /// Mirror area, m².
    #[arg(long, default_value_t = 1.0)]
    pub area_m2: f64,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 0.0)]
    pub temperature_k: f64,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    /// Mechanical angular frequency Ω, rad/s.
    #[arg(long)]
    pub omega: f64,
    /// Mirror area, m².
    #[arg(long, default_value_t = 1.0)]
    pub area_m2: f64,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 0.0)]
    pub temperature_k: f64,
}

#[derive(Debug, Args)]
pub struct NoiseArgs {
    /// Mean photon number of the intense beam.
    #[arg(long, default_value_t = 1e6)]
    pub na: f64,
    /// Squeeze factor of the in-phase quadrature in the other port; 1 is vacuum.
    #[arg(long, default_value_t = 1.0)]
    pub squeeze: f64,
    /// Monte-Carlo trials (at least 1000).
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct PlanckArgs {
    /// Mode angular frequency, rad/s.
    #[arg(long)]
    pub omega: f64,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 0.0)]
    pub temperature_k: f64,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    /// Cutoff angular frequency, rad/s.
    #[arg(long)]
    pub omega_max: f64,
    /// Field temperature, K.
    #[arg(long = "temperature-K", default_value_t = 0.0)]
    pub temperature_k: f64,
}

/// Runs `cli` and returns its rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let records = records(cli)?;
    Ok(output::render(&records, cli.format))
}

/// Runs `cli` and returns the result records.
pub fn records(cli: &Cli) -> Result<Vec<Record>, CliError> {
    let presets = || load_presets(cli.presets.as_deref());
    match &cli.command {
        Command::Ideal(a) => ideal(a).map(|r| vec![r]),
        Command::Force(a) => force(a, &presets()?).map(|r| vec![r]),
        Command::Eta(a) => eta(a, &presets()?),
        Command::Psphere(a) => psphere(a, &presets()?).map(|r| vec![r]),
        Command::Motional(a) => motional(a),
        Command::Chi(a) => chi(a).map(|r| vec![r]),
        Command::Noise(a) => noise(a).map(|r| vec![r]),
        Command::Planck(a) => planck(a).map(|r| vec![r]),
        Command::Density(a) => density(a).map(|r| vec![r]),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_presets(path: Option<&Path>) -> Result<MaterialPresets, CliError> {
    match path {
        Some(p) => Ok(MaterialPresets::parse(&read(p)?)?),
        None => Ok(MaterialPresets::default()),
    }
}

fn mirrors(
    material: &str,
    presets: &MaterialPresets,
) -> Result<(Material, CavityReflection), CliError> {
    let m = Material::parse(material, presets)?;
    let r = CavityReflection::symmetric(m.mirror());
    Ok((m, r))
}

fn force_outputs(record: Record, r: &ForceResult) -> Record {
    let thermal = r.thermal.expect("thermal metadata");
    let mut record = record
        .output("force_N", r.force)
        .output("energy_J", r.energy)
        .output("eta_E", r.eta_e)
        .output("eta_F", r.eta_f)
        .output("eta_T", thermal.eta_t)
        .output("eta_T_energy", thermal.eta_t_energy)
        .output("matsubara_terms", thermal.matsubara_terms)
        .error(r.numerical_error);
    for f in &r.flags {
        record = record.flag(f.as_str());
    }
    record
}

fn ideal(a: &IdealArgs) -> Result<Record, CliError> {
    let (l, area) = (a.length_um * UM, a.area_cm2 * CM2);
    let config = CavityConfig::new(l, area, ThermalState::ZERO, CavityReflection::perfect())?;
    Ok(Record::default()
        .input("length_um", a.length_um)
        .input("area_cm2", a.area_cm2)
        .output("force_N", ideal_force(l, area)?)
        .output("energy_J", ideal_energy(l, area)?)
        .flag_if(!config.plane_limit_ok(), "plane_limit_violated"))
}

fn force(a: &ForceArgs, presets: &MaterialPresets) -> Result<Record, CliError> {
    let (material, reflection) = mirrors(&a.material, presets)?;
    let config = CavityConfig::new(
        a.length_um * UM,
        a.area_cm2 * CM2,
        ThermalState::new(a.temperature_k)?,
        reflection,
    )?;
    let r = thermal_force(&config)?;
    let record = Record::default()
        .input("length_um", a.length_um)
        .input("area_cm2", a.area_cm2)
        .input("temperature_K", a.temperature_k)
        .input("material", material.to_string());
    Ok(force_outputs(record, &r))
}

fn eta(a: &EtaArgs, presets: &MaterialPresets) -> Result<Vec<Record>, CliError> {
    let material = Material::parse(&a.material, presets)?;
    let state = ThermalState::new(a.temperature_k)?;
    let rows = eta_sweep(
        a.lmin_um * UM,
        a.lmax_um * UM,
        a.points,
        material.mirror(),
        state,
    )?;
    Ok(rows
        .iter()
        .map(|row| {
            Record::default()
                .input("length_um", row.length / UM)
                .input("material", material.to_string())
                .input("temperature_K", a.temperature_k)
                .output("eta_plasma", row.eta_plasma)
                .output("eta_thermal", row.eta_thermal)
                .output("eta_full", row.eta_full)
                .output("eta_product", row.eta_product)
                .output("product_deviation", row.product_deviation())
                .error(row.numerical_error)
        })
        .collect())
}

fn psphere(a: &SphereArgs, presets: &MaterialPresets) -> Result<Record, CliError> {
    let (material, reflection) = mirrors(&a.material, presets)?;
    let config = SpherePlaneConfig::new(
        a.radius_um * UM,
        a.length_um * UM,
        ThermalState::new(a.temperature_k)?,
        reflection,
    )?;
    let r = sphere_plane_force(&config)?;
    let mut record = Record::default()
        .input("radius_um", a.radius_um)
        .input("length_um", a.length_um)
        .input("temperature_K", a.temperature_k)
        .input("material", material.to_string())
        .output("force_N", r.force)
        .output("plane_energy_per_area_J_m2", r.energy)
        .output("eta", r.eta_e)
        .error(r.numerical_error);
    for f in &r.flags {
        record = record.flag(f.as_str());
    }
    Ok(record)
}

fn motional(a: &MotionalArgs) -> Result<Vec<Record>, CliError> {
    let traj = Trajectory::parse(&read(&a.trajectory_file)?)?;
    let state = ThermalState::new(a.temperature_k)?;
    let vacuum = motional_force_time_domain(&traj, a.area_m2)?;
    let thermal = thermal_friction_force(&traj, a.area_m2, state)?;
    let file = a.trajectory_file.display().to_string();
    let rows = traj.positions().iter().enumerate().filter_map(|(i, &q)| {
        let (fv, ft) = (vacuum.force[i]?, thermal.force[i]?);
        Some(
            Record::default()
                .input("trajectory_file", file.as_str())
                .input("area_m2", a.area_m2)
                .input("temperature_K", a.temperature_k)
                .output("time_s", traj.time(i))
                .output("position_m", q)
                .output("vacuum_force_N", fv)
                .output("thermal_force_N", ft),
        )
    });
    Ok(rows.collect())
}

fn chi(a: &ChiArgs) -> Result<Record, CliError> {
    let state = ThermalState::new(a.temperature_k)?;
    let v = vacuum_susceptibility(a.omega, a.area_m2)?;
    let t = thermal_susceptibility(a.omega, a.area_m2, state)?;
    Ok(Record::default()
        .input("omega_rad_s", a.omega)
        .input("area_m2", a.area_m2)
        .input("temperature_K", a.temperature_k)
        .output("vacuum_chi_re_N_m", v.susceptibility.value.re)
        .output("vacuum_chi_im_N_m", v.susceptibility.value.im)
        .output("thermal_chi_re_N_m", t.susceptibility.value.re)
        .output("thermal_chi_im_N_m", t.susceptibility.value.im)
        .flag_if(!v.validity.large_area, "area_not_large")
        .flag_if(!t.validity.temperature_regime, "temperature_not_high"))
}

fn noise(a: &NoiseArgs) -> Result<Record, CliError> {
    let port_b = make_squeezed(1.0, a.squeeze)?;
    let setup = BeamSplitterSetup::new(a.na, port_b)?;
    let mc = monte_carlo_difference(&setup, a.trials, a.seed)?;
    Ok(Record::default()
        .input("na", a.na)
        .input("squeeze", a.squeeze)
        .input("trials", a.trials)
        .input("seed", a.seed)
        .output("variance_analytic", difference_variance(&setup))
        .output("fano_analytic", fano_factor(&setup))
        .output("mean_mc", mc.mean)
        .output("variance_mc", mc.variance)
        .output("fano_mc", mc.fano)
        .flag_if(!setup.linearized(), "not_linearized"))
}

fn planck(a: &PlanckArgs) -> Result<Record, CliError> {
    let state = ThermalState::new(a.temperature_k)?;
    Ok(Record::default()
        .input("omega_rad_s", a.omega)
        .input("temperature_K", a.temperature_k)
        .output("mean_photon_number", mean_photon_number(a.omega, state)?)
        .output("first_law_J", mode_energy_first_law(a.omega, state)?)
        .output("second_law_J", mode_energy_second_law(a.omega, state)?)
        .output("thermal_weight", thermal_weight(a.omega, state)?))
}

fn density(a: &DensityArgs) -> Result<Record, CliError> {
    let e = energy_density(a.omega_max, ThermalState::new(a.temperature_k)?)?;
    Ok(Record::default()
        .input("omega_max_rad_s", a.omega_max)
        .input("temperature_K", a.temperature_k)
        .output("vacuum_J_m3", e.vacuum)
        .output("thermal_J_m3", e.thermal)
        .output("total_J_m3", e.total()))
}
