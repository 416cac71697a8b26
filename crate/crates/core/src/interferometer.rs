//! Photon routing through the three interferometer set-ups.
//!
//! The beam splitter is an ideal 50/50 and the phase shifter exactly
//! cancels its pi/2 phase; neither is configurable. The detectors project
//! onto parity eigenstates: D1 registers even photons, D2 odd photons.
//!
//! * `closed_loop` / `open_loop`: a coherent outcome routes by the parity
//!   the foil excitation imprinted on the photon; a localized foil at
//!   `X_loc` sends the photon to D2 with probability `sin^2(2 k X_loc)`.
//! * `semi_closed`: two extra massive mirrors close the loop, so localized
//!   outcomes cannot reach D2 while odd excitations still do; it serves as
//!   the control topology.

use crate::constants;
use crate::error::{Error, Result};
use crate::oscillator::Parity;
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};

/// Beam-splitter reflectivity; fixed by the symmetry argument.
pub const BEAM_SPLITTER_REFLECTIVITY: f64 = 0.5;

/// Phase (rad) the shifter cancels between the reflected and transmitted
/// arms.
pub const PHASE_SHIFTER_CANCELLATION: f64 = FRAC_PI_2;

/// Geometry of the loop around the interaction region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    /// Empty interaction region; both optical paths are one and the same.
    ClosedLoop,
    /// The foil blocks the region; photons reflect off both sides.
    OpenLoop,
    /// Loop closed by auxiliary mirrors: blind to localization signals.
    SemiClosed,
}

impl Topology {
    pub fn label(self) -> &'static str {
        match self {
            Topology::ClosedLoop => "closed_loop",
            Topology::OpenLoop => "open_loop",
            Topology::SemiClosed => "semi_closed",
        }
    }
}

/// Probing photon, stored by wavelength (m); wavenumber and energy derive
/// from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonProbe {
    wavelength: f64,
}

impl PhotonProbe {
    pub fn new(wavelength: f64) -> Result<Self> {
        if !(wavelength > 0.0 && wavelength.is_finite()) {
            return Err(Error::Domain(format!(
                "photon wavelength must be positive, got {wavelength}"
            )));
        }
        Ok(Self { wavelength })
    }

    /// Wavelength (m).
    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// Wavenumber `k = 2 pi / lambda` (1/m).
    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    /// Photon energy `E = hbar c k` (J).
    pub fn energy(&self) -> f64 {
        constants::HBAR * constants::SPEED_OF_LIGHT * self.wavenumber()
    }
}

/// The interferometer as configured for a run.
///
/// `mirror_transmittance` exists as a placeholder only: routing treats the
/// foil as fully reflecting and validation rejects any nonzero value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferometerConfig {
    pub topology: Topology,
    pub photon: PhotonProbe,
    pub mirror_transmittance: f64,
}

impl InterferometerConfig {
    pub fn new(topology: Topology, photon: PhotonProbe) -> Self {
        Self {
            topology,
            photon,
            mirror_transmittance: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mirror_transmittance != 0.0 {
            return Err(Error::Validation {
                field: "interferometer.mirror_transmittance",
                reason: format!(
                    "partial transmittance is not modeled; must be 0, got {}",
                    self.mirror_transmittance
                ),
            });
        }
        Ok(())
    }
}

/// Detector that registered the photon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Detector {
    /// Even-parity output port.
    D1,
    /// Odd-parity output port.
    D2,
}

impl Detector {
    /// Parity the detector projects onto.
    pub fn measured_parity(self) -> Parity {
        match self {
            Detector::D1 => Parity::Even,
            Detector::D2 => Parity::Odd,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Detector::D1 => "D1",
            Detector::D2 => "D2",
        }
    }
}

/// State of the foil-photon system when the photon reaches the output
/// beam splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScatterOutcome {
    /// Unitary evolution: the foil ended in a definite-parity level and the
    /// photon carries the matching parity.
    Coherent { foil_parity: Parity },
    /// A localization event pinned the foil at `x_loc` (m) before probing.
    Localized { x_loc: f64 },
}

/// Intensity fractions `(I1, I2) = (cos^2(2 k X_loc), sin^2(2 k X_loc))`
/// at the two detectors for a foil localized at `x_loc`. They sum to one.
pub fn localization_intensity_ratio(x_loc: f64, k: f64) -> (f64, f64) {
    let phase = 2.0 * k * x_loc;
    (phase.cos().powi(2), phase.sin().powi(2))
}

/// Representative suppression of the localization signal when the ground
/// width is not large against the wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Suppression {
    /// The tangent argument `4 pi W / lambda`.
    pub argument: f64,
    /// `I2 / I1 = tan^2(4 pi W / lambda)` at `X_loc = W`.
    pub i2_over_i1: f64,
    /// True when the argument exceeds 1, i.e. the signal is no longer
    /// suppressed by the width-to-wavelength ratio.
    pub unsuppressed: bool,
}

/// `I2 / I1 = tan^2(4 pi W / lambda)`: the localization signal at a
/// representative displacement of one ground width. Arguments too close to
/// a tangent pole are rejected rather than evaluated.
pub fn suppression_factor(width: f64, wavelength: f64) -> Result<Suppression> {
    if !(width > 0.0 && wavelength > 0.0) {
        return Err(Error::Domain(
            "width and wavelength must be positive".into(),
        ));
    }
    let argument = 4.0 * PI * width / wavelength;
    if argument.cos().abs() < 1e-9 {
        return Err(Error::SingularInput(format!(
            "tan^2 pole: 4 pi W / lambda = {argument:.9e} sits at pi/2 (mod pi)"
        )));
    }
    Ok(Suppression {
        argument,
        i2_over_i1: argument.tan().powi(2),
        unsuppressed: argument > 1.0,
    })
}

/// Routes one photon to a detector given the system outcome.
///
/// Coherent outcomes route deterministically by parity in every topology.
/// Localized outcomes are Bernoulli on `sin^2(2 k X_loc)` in the open and
/// closed loops, and always reach D1 in the semi-closed control.
pub fn route_photon<R: Rng + ?Sized>(
    config: &InterferometerConfig,
    outcome: ScatterOutcome,
    rng: &mut R,
) -> Detector {
    match outcome {
        ScatterOutcome::Coherent { foil_parity } => match foil_parity {
            Parity::Even => Detector::D1,
            Parity::Odd => Detector::D2,
        },
        ScatterOutcome::Localized { x_loc } => match config.topology {
            Topology::SemiClosed => Detector::D1,
            Topology::ClosedLoop | Topology::OpenLoop => {
                let (_, d2_fraction) =
                    localization_intensity_ratio(x_loc, config.photon.wavenumber());
                if rng.random::<f64>() < d2_fraction {
                    Detector::D2
                } else {
                    Detector::D1
                }
            }
        },
    }
}
