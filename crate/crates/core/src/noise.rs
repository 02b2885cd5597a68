//! Photon noise behind a beam splitter.
//!
//! A field mode is described by two quadratures `𝓔 = 𝓔₁ cos ωt + 𝓔₂ sin ωt`
//! with `Δ𝓔₁ Δ𝓔₂ ≥ 𝓔₀²`. An intense beam of `⟨n_a⟩` photons enters port
//! `a`; in the linearised regime the difference `n = n_c - n_d` of the two
//! output counts fluctuates as `δn ≈ |𝒜| δℬ₁`, where `ℬ₁` is the in-phase
//! quadrature entering the other input port `b`. Normalising so that
//! `|𝒜|² = ⟨n_a⟩/𝓔₀²`:
//!
//! ```text
//! Δn² = ⟨n_a⟩ Δℬ₁² / 𝓔₀²
//! ```
//!
//! Vacuum in port `b` gives Poissonian noise, `Δn² = ⟨n_a⟩`; a squeezed
//! `ℬ₁` gives sub-Poissonian noise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{positive, Error, Result};

/// Below this many photons the linearised model is flagged.
pub const LINEARIZED_MIN_PHOTONS: f64 = 100.0;

/// Minimum number of Monte-Carlo trials.
pub const MIN_TRIALS: usize = 1000;

/// Relative slack on the Heisenberg bound, for states that saturate it.
const HEISENBERG_SLACK: f64 = 1e-12;

/// Gaussian statistics of the two quadratures of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureState {
    mean1: f64,
    mean2: f64,
    var1: f64,
    var2: f64,
    vacuum_scale: f64,
}

impl QuadratureState {
    /// Checks the Heisenberg bound `√var1 √var2 ≥ 𝓔₀²`.
    pub fn new(mean1: f64, mean2: f64, var1: f64, var2: f64, vacuum_scale: f64) -> Result<Self> {
        positive("vacuum scale", vacuum_scale)?;
        positive("var1", var1)?;
        positive("var2", var2)?;
        if !(mean1.is_finite() && mean2.is_finite()) {
            return Err(Error::domain("quadrature means must be finite"));
        }
        let e2 = vacuum_scale * vacuum_scale;
        if var1.sqrt() * var2.sqrt() < e2 * (1.0 - HEISENBERG_SLACK) {
            return Err(Error::domain(format!(
                "Heisenberg bound violated: √({var1:e})·√({var2:e}) < {e2:e}"
            )));
        }
        Ok(Self {
            mean1,
            mean2,
            var1,
            var2,
            vacuum_scale,
        })
    }

    /// Vacuum: zero means, both variances `𝓔₀²`.
    pub fn vacuum(vacuum_scale: f64) -> Result<Self> {
        let e2 = vacuum_scale * vacuum_scale;
        Self::new(0.0, 0.0, e2, e2, vacuum_scale)
    }

    pub fn mean1(&self) -> f64 {
        self.mean1
    }

    pub fn mean2(&self) -> f64 {
        self.mean2
    }

    pub fn var1(&self) -> f64 {
        self.var1
    }

    pub fn var2(&self) -> f64 {
        self.var2
    }

    pub fn vacuum_scale(&self) -> f64 {
        self.vacuum_scale
    }
}

/// Minimum-uncertainty squeezed vacuum: `var1 = s 𝓔₀²`, `var2 = 𝓔₀²/s`.
pub fn make_squeezed(vacuum_scale: f64, squeeze_factor: f64) -> Result<QuadratureState> {
    positive("squeeze factor", squeeze_factor)?;
    positive("vacuum scale", vacuum_scale)?;
    let e2 = vacuum_scale * vacuum_scale;
    QuadratureState::new(
        0.0,
        0.0,
        squeeze_factor * e2,
        e2 / squeeze_factor,
        vacuum_scale,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BeamSplitterSetup {
    mean_photon_number_a: f64,
    port_b: QuadratureState,
}

impl BeamSplitterSetup {
    pub fn new(mean_photon_number_a: f64, port_b: QuadratureState) -> Result<Self> {
        positive("mean photon number in port a", mean_photon_number_a)?;
        Ok(Self {
            mean_photon_number_a,
            port_b,
        })
    }

    pub fn mean_photon_number_a(&self) -> f64 {
        self.mean_photon_number_a
    }

    pub fn port_b(&self) -> &QuadratureState {
        &self.port_b
    }

    /// `⟨n_a⟩ ≫ 1`, taken as `⟨n_a⟩ ≥ 100`.
    pub fn linearized(&self) -> bool {
        self.mean_photon_number_a >= LINEARIZED_MIN_PHOTONS
    }

    /// `|𝒜|` in units where `δn = |𝒜| δℬ₁`.
    fn gain(&self) -> f64 {
        (self.mean_photon_number_a).sqrt() / self.port_b.vacuum_scale
    }
}

/// Variance of `n_c - n_d`: `⟨n_a⟩ var1_b / 𝓔₀²`.
pub fn difference_variance(setup: &BeamSplitterSetup) -> f64 {
    let e2 = setup.port_b.vacuum_scale * setup.port_b.vacuum_scale;
    setup.mean_photon_number_a * setup.port_b.var1 / e2
}

/// `Δn² / ⟨n_a⟩`; 1 for Poissonian noise.
pub fn fano_factor(setup: &BeamSplitterSetup) -> f64 {
    setup.port_b.var1 / (setup.port_b.vacuum_scale * setup.port_b.vacuum_scale)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub trials: usize,
    pub seed: u64,
    pub mean: f64,
    /// Unbiased sample variance of `δn`.
    pub variance: f64,
    /// `variance / ⟨n_a⟩`.
    pub fano: f64,
}

/// Samples `δn = |𝒜| δℬ₁` with `δℬ₁ ~ N(0, var1_b)`.
///
/// The generator is ChaCha8 seeded with `seed` through
/// `SeedableRng::seed_from_u64`, and normals come from `rand_distr`'s
/// ziggurat `StandardNormal`, so a seed fixes the output bit for bit.
/// Moments are accumulated with Welford's update in draw order.
pub fn monte_carlo_difference(
    setup: &BeamSplitterSetup,
    trials: usize,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials < MIN_TRIALS {
        return Err(Error::domain(format!(
            "need at least {MIN_TRIALS} trials, got {trials}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = setup.port_b.var1.sqrt();
    let gain = setup.gain();
    let (mut mean, mut m2) = (0.0f64, 0.0f64);
    for i in 0..trials {
        let z: f64 = rng.sample(StandardNormal);
        let dn = gain * sigma * z;
        let delta = dn - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (dn - mean);
    }
    let variance = m2 / (trials - 1) as f64;
    Ok(MonteCarloEstimate {
        trials,
        seed,
        mean,
        variance,
        fano: variance / setup.mean_photon_number_a,
    })
}
