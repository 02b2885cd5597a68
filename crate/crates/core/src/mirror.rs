//! Reflection amplitudes of single mirrors and the Airy function of a cavity.
//!
//! Amplitudes are evaluated on the imaginary frequency axis `ω = iξ`, where
//! they are real. Perfect mirrors use the convention `r_TE = -1`,
//! `r_TM = +1`. Casimir observables only involve the product of the two
//! mirrors' amplitudes, which is `+1` for a perfect cavity in both
//! polarizations.
//!
//! Plasma mirrors follow `ε(iξ) = 1 + ω_p²/ξ²`. With
//! `κ = √(ξ²/c² + k²)` and `κ_m = √(ε ξ²/c² + k²)`:
//!
//! ```text
//! r_TE = (κ - κ_m) / (κ + κ_m)
//! r_TM = (ε κ - κ_m) / (ε κ + κ_m)
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{non_negative, positive, Error, Result};

/// Plasma wavelength of the gold/copper preset, in metres.
pub const GOLD_COPPER_PLASMA_WAVELENGTH: f64 = 136e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Polarization {
    TE,
    TM,
}

impl Polarization {
    pub const ALL: [Polarization; 2] = [Polarization::TE, Polarization::TM];
}

/// Reflection response of one mirror.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum MirrorModel {
    Perfect,
    /// Lossless plasma; `plasma_frequency` in rad/s.
    Plasma {
        plasma_frequency: f64,
    },
}

impl MirrorModel {
    pub fn plasma(plasma_frequency: f64) -> Result<Self> {
        positive("plasma frequency", plasma_frequency)?;
        Ok(MirrorModel::Plasma { plasma_frequency })
    }

    /// Plasma mirror from its plasma wavelength `λ_p = 2πc/ω_p` in metres.
    pub fn from_plasma_wavelength(wavelength: f64) -> Result<Self> {
        positive("plasma wavelength", wavelength)?;
        Self::plasma(2.0 * PI * SPEED_OF_LIGHT / wavelength)
    }

    /// The "gold/copper" preset, `λ_p = 136 nm`.
    pub fn gold_copper() -> Self {
        Self::from_plasma_wavelength(GOLD_COPPER_PLASMA_WAVELENGTH).expect("preset is valid")
    }

    pub fn plasma_frequency(&self) -> Option<f64> {
        match *self {
            MirrorModel::Perfect => None,
            MirrorModel::Plasma { plasma_frequency } => Some(plasma_frequency),
        }
    }

    pub fn plasma_wavelength(&self) -> Option<f64> {
        self.plasma_frequency()
            .map(|wp| 2.0 * PI * SPEED_OF_LIGHT / wp)
    }

    /// Amplitude in arbitrary but consistent wavevector units: `xi_c` is
    /// `ξ/c`, `k` the transverse wavevector and `wp_c` is `ω_p/c`, all in the
    /// same unit. `xi_c = 0` is allowed (static limit).
    pub(crate) fn amplitude_scaled(
        &self,
        xi_c: f64,
        k: f64,
        wp_c: Option<f64>,
        p: Polarization,
    ) -> f64 {
        match (wp_c, p) {
            (None, Polarization::TE) => -1.0,
            (None, Polarization::TM) => 1.0,
            (Some(wp), p) => plasma_amplitude(xi_c * xi_c, k * k, wp * wp, p),
        }
    }

    /// `ω_p/c` in 1/m, or `None` for a perfect mirror.
    pub(crate) fn plasma_wavenumber(&self) -> Option<f64> {
        self.plasma_frequency().map(|wp| wp / SPEED_OF_LIGHT)
    }
}

/// Cancellation-free forms of the plasma Fresnel amplitudes. `q2 = ξ²/c²`,
/// `k2 = k²`, `wp2 = ω_p²/c²`; `ε q2 = q2 + wp2`.
fn plasma_amplitude(q2: f64, k2: f64, wp2: f64, p: Polarization) -> f64 {
    let kappa = (q2 + k2).sqrt();
    let kappa_m = (q2 + k2 + wp2).sqrt();
    let sum = kappa + kappa_m;
    match p {
        // κ - κ_m = -wp2 / (κ + κ_m)
        Polarization::TE => -wp2 / (sum * sum),
        // multiply through by q2: (q2+wp2)κ - q2 κ_m = wp2 (κ - q2/(κ+κ_m))
        Polarization::TM => {
            let den = (q2 + wp2) * kappa + q2 * kappa_m;
            if den == 0.0 {
                // q2 = k2 = 0: normal incidence at zero frequency
                1.0
            } else {
                wp2 * (kappa - q2 / sum) / den
            }
        }
    }
}

/// Reflection amplitude of `model` at imaginary frequency `xi` (rad/s) and
/// transverse wavevector `k` (1/m). Real, within `[-1, 1]`.
pub fn reflection_amplitude_imaginary(
    model: MirrorModel,
    xi: f64,
    k: f64,
    p: Polarization,
) -> Result<f64> {
    positive("xi", xi)?;
    non_negative("k", k)?;
    Ok(model.amplitude_scaled(xi / SPEED_OF_LIGHT, k, model.plasma_wavenumber(), p))
}

/// The two mirrors of a plane cavity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityReflection {
    pub mirror1: MirrorModel,
    pub mirror2: MirrorModel,
}

impl CavityReflection {
    pub fn new(mirror1: MirrorModel, mirror2: MirrorModel) -> Self {
        Self { mirror1, mirror2 }
    }

    /// Two identical mirrors.
    pub fn symmetric(mirror: MirrorModel) -> Self {
        Self::new(mirror, mirror)
    }

    pub fn perfect() -> Self {
        Self::symmetric(MirrorModel::Perfect)
    }

    pub fn is_perfect(&self) -> bool {
        self.mirror1 == MirrorModel::Perfect && self.mirror2 == MirrorModel::Perfect
    }

    /// `r_p = r_{1,p} r_{2,p}` on the imaginary axis.
    pub fn product_imaginary(&self, xi: f64, k: f64, p: Polarization) -> Result<f64> {
        Ok(reflection_amplitude_imaginary(self.mirror1, xi, k, p)?
            * reflection_amplitude_imaginary(self.mirror2, xi, k, p)?)
    }

    /// Real-axis product `r_p(ω, κ)`. Only perfect mirrors are available on
    /// the real axis; plasma mirrors are evaluated on the imaginary axis only.
    pub fn product_real(&self, mode: &ModeCoordinate, p: Polarization) -> Result<Complex64> {
        if !mode.is_real_axis() {
            return Err(Error::domain(
                "real-axis product needs a real-frequency mode",
            ));
        }
        if !self.is_perfect() {
            return Err(Error::Unsupported(
                "real-axis amplitudes are only implemented for perfect mirrors".into(),
            ));
        }
        let single = MirrorModel::Perfect.amplitude_scaled(0.0, 0.0, None, p);
        Ok(Complex64::new(single * single, 0.0))
    }

    /// Airy function of the cavity for a real-axis mode.
    pub fn airy_function(
        &self,
        mode: &ModeCoordinate,
        length: f64,
        p: Polarization,
    ) -> Result<f64> {
        airy_function(self.product_real(mode, p)?, mode.kappa(), length)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Frequency {
    /// Real angular frequency ω, rad/s.
    Real(f64),
    /// Imaginary-axis frequency ξ (ω = iξ), rad/s.
    Imaginary(f64),
}

/// A field mode impinging on the cavity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeCoordinate {
    frequency: Frequency,
    kappa: f64,
    transverse_wavevector: f64,
    incidence_angle: Option<f64>,
}

impl ModeCoordinate {
    /// Propagating mode of frequency `omega` at `incidence_angle` from the
    /// normal: `κ = (ω/c) cos θ`, `k = (ω/c) sin θ`.
    pub fn real(omega: f64, incidence_angle: f64) -> Result<Self> {
        positive("omega", omega)?;
        if !(0.0..=PI / 2.0).contains(&incidence_angle) {
            return Err(Error::domain(format!(
                "incidence angle must lie in [0, π/2], got {incidence_angle}"
            )));
        }
        let q = omega / SPEED_OF_LIGHT;
        Ok(Self {
            frequency: Frequency::Real(omega),
            kappa: q * incidence_angle.cos(),
            transverse_wavevector: q * incidence_angle.sin(),
            incidence_angle: Some(incidence_angle),
        })
    }

    /// Imaginary-axis mode: `κ = √(ξ²/c² + k²)`.
    pub fn imaginary(xi: f64, k: f64) -> Result<Self> {
        positive("xi", xi)?;
        non_negative("k", k)?;
        Ok(Self {
            frequency: Frequency::Imaginary(xi),
            kappa: (xi / SPEED_OF_LIGHT).hypot(k),
            transverse_wavevector: k,
            incidence_angle: None,
        })
    }

    pub fn frequency(&self) -> Frequency {
        self.frequency
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn transverse_wavevector(&self) -> f64 {
        self.transverse_wavevector
    }

    pub fn incidence_angle(&self) -> Option<f64> {
        self.incidence_angle
    }

    pub fn is_real_axis(&self) -> bool {
        matches!(self.frequency, Frequency::Real(_))
    }
}

/// Airy function `g = (1 - |r|²) / |1 - r e^{2iκL}|²` of a cavity of length
/// `length` with round-trip amplitude product `r`, for longitudinal
/// wavevector `kappa`.
///
/// Lossless mirrors (`|r| = 1`) give 0 off resonance and are singular on it.
pub fn airy_function(r: Complex64, kappa: f64, length: f64) -> Result<f64> {
    positive("length", length)?;
    non_negative("kappa", kappa)?;
    let modulus = r.norm();
    if !modulus.is_finite() || modulus > 1.0 + 1e-12 {
        return Err(Error::domain(format!("|r| must be <= 1, got {modulus}")));
    }
    let round_trip = r * Complex64::from_polar(1.0, 2.0 * kappa * length);
    let den = (Complex64::new(1.0, 0.0) - round_trip).norm_sqr();
    let num = (1.0 - modulus * modulus).max(0.0);
    if den <= 1e-24 {
        return if num == 0.0 {
            Err(Error::SingularResonance)
        } else {
            Err(Error::domain("Airy denominator underflow"))
        };
    }
    Ok(num / den)
}
