//! Distance sweep of the energy correction factors.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{positive, Error, Result};
use crate::mirror::{CavityReflection, MirrorModel};
use crate::thermal::ThermalState;

use super::{lifshitz, CavityConfig};

/// One row of an η sweep. All factors are energy ratios `E/E_Cas`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaRow {
    /// Distance, m.
    pub length: f64,
    /// Imperfect reflection alone: chosen mirrors at `T = 0`.
    pub eta_plasma: f64,
    /// Temperature alone: perfect mirrors at `T`.
    pub eta_thermal: f64,
    /// Both effects: chosen mirrors at `T`.
    pub eta_full: f64,
    /// `eta_plasma · eta_thermal`.
    pub eta_product: f64,
    /// Largest relative error estimate of the three evaluations.
    pub numerical_error: f64,
}

impl EtaRow {
    /// `|η_full - η_plasma η_thermal| / η_full`.
    pub fn product_deviation(&self) -> f64 {
        ((self.eta_full - self.eta_product) / self.eta_full).abs()
    }
}

/// `points` log-spaced values from `min` to `max` inclusive.
pub fn log_spaced(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    positive("minimum", min)?;
    positive("maximum", max)?;
    if min >= max {
        return Err(Error::domain(format!("need min < max, got {min} >= {max}")));
    }
    if points < 2 {
        return Err(Error::domain("a sweep needs at least 2 points"));
    }
    let (lo, hi) = (min.ln(), max.ln());
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|i| match i {
            0 => min,
            i if i == points - 1 => max,
            i => (lo + (hi - lo) * i as f64 / last).exp(),
        })
        .collect())
}

fn eta_row(length: f64, mirror: MirrorModel, temperature: ThermalState) -> Result<EtaRow> {
    let real = CavityReflection::symmetric(mirror);
    let base = CavityConfig::new(length, 1.0, ThermalState::ZERO, real)?;
    let plasma = lifshitz::ratios(&base)?;
    let thermal = lifshitz::ratios(
        &base
            .with_mirrors(CavityReflection::perfect())
            .with_temperature(temperature),
    )?;
    let full = lifshitz::ratios(&base.with_temperature(temperature))?;
    Ok(EtaRow {
        length,
        eta_plasma: plasma.eta_e,
        eta_thermal: thermal.eta_e,
        eta_full: full.eta_e,
        eta_product: plasma.eta_e * thermal.eta_e,
        numerical_error: plasma.error.max(thermal.error).max(full.error),
    })
}

/// Energy correction factors on a log-spaced distance grid for identical
/// mirrors of model `mirror` at `temperature`. Rows are evaluated in
/// parallel and returned in grid order; each row is independent of the
/// thread schedule.
pub fn eta_sweep(
    min_length: f64,
    max_length: f64,
    points: usize,
    mirror: MirrorModel,
    temperature: ThermalState,
) -> Result<Vec<EtaRow>> {
    log_spaced(min_length, max_length, points)?
        .into_par_iter()
        .map(|l| eta_row(l, mirror, temperature))
        .collect()
}
