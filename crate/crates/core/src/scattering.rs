//! Closed-form photon-foil scattering probabilities.
//!
//! Everything here is a function of the Lamb-Dicke parameter alone. The
//! squared kick matrix elements are Poisson weights with mean `eta^2`, so
//! the level-resolved sums collapse to elementary closed forms:
//!
//! * recoilless (Debye-Waller) probability `P_00 = exp(-eta^2)`,
//! * total even/odd excitation probabilities
//!   `exp(-eta^2) cosh(eta^2)` and `exp(-eta^2) sinh(eta^2)`,
//! * ground-density-averaged antisymmetric output fraction
//!   `(1 - exp(-2 eta^2)) / 2` for a localized foil,
//! * the signal-to-noise ratio `R` and its upper bound
//!   `R_bound = 2 / (1 + exp(-eta^2))`.
//!
//! Overall coupling strength (polarizability prefactor times the total
//! scattering probability) is folded into a single `efficiency` in [0, 1];
//! it scales absolute event rates only and cancels in every ratio.

use crate::constants;
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Dimensionless scattering efficiency: the product of the interaction
/// prefactor and the total scattering probability, applied multiplicatively
/// to absolute rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterCoupling {
    efficiency: f64,
}

impl Default for ScatterCoupling {
    fn default() -> Self {
        Self { efficiency: 1.0 }
    }
}

impl ScatterCoupling {
    pub fn new(efficiency: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&efficiency) || efficiency.is_nan() {
            return Err(Error::Validation {
                field: "coupling.efficiency",
                reason: format!("must lie in [0, 1], got {efficiency}"),
            });
        }
        Ok(Self { efficiency })
    }

    pub fn efficiency(&self) -> f64 {
        self.efficiency
    }
}

/// Which form of the excitation probabilities to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcitationMode {
    /// Full closed form, valid for every `eta`.
    Exact,
    /// Second-order Lamb-Dicke expansion `(1 - eta^2, eta^2)`; trustworthy
    /// only for `eta <= LAMB_DICKE_ETA_MAX`.
    LambDicke,
}

/// Largest `eta` for which the quadratic Lamb-Dicke expansion is considered
/// valid (error bounded by `eta^4`).
pub const LAMB_DICKE_ETA_MAX: f64 = 0.3;

/// True when `eta` is inside the Lamb-Dicke validity range.
pub fn lamb_dicke_valid(eta: f64) -> bool {
    eta <= LAMB_DICKE_ETA_MAX
}

/// Relative scattering probabilities out of the ground state (before any
/// efficiency scaling): recoilless `p00`, total even `p_even_total`
/// (includes `p00`) and total odd `p_odd_total`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterProbabilities {
    pub p00: f64,
    pub p_even_total: f64,
    pub p_odd_total: f64,
    pub eta: f64,
}

/// Debye-Waller factor `P_00 = exp(-eta^2)`: the probability that
/// reflection leaves the foil in its initial level.
pub fn debye_waller(eta: f64) -> f64 {
    (-eta * eta).exp()
}

/// Even/odd excitation probabilities in the requested mode.
pub fn excitation_probabilities(eta: f64, mode: ExcitationMode) -> Result<ScatterProbabilities> {
    if !(eta >= 0.0 && eta.is_finite()) {
        return Err(Error::Domain(format!(
            "Lamb-Dicke parameter must be >= 0, got {eta}"
        )));
    }
    let eta2 = eta * eta;
    let (p00, p_even_total, p_odd_total) = match mode {
        ExcitationMode::Exact => (
            (-eta2).exp(),
            (-eta2).exp() * eta2.cosh(),
            (-eta2).exp() * eta2.sinh(),
        ),
        ExcitationMode::LambDicke => (1.0 - eta2, 1.0 - eta2, eta2),
    };
    Ok(ScatterProbabilities {
        p00,
        p_even_total,
        p_odd_total,
        eta,
    })
}

/// Fraction of the output intensity reaching the odd-parity detector when
/// the foil is localized, averaged over the ground-state position density:
/// `int f(X) sin^2(2 k X) dX = (1 - exp(-2 eta^2)) / 2`.
pub fn d2_fraction_localized(eta: f64) -> f64 {
    -0.5 * (-2.0 * eta * eta).exp_m1()
}

/// Signal-to-noise ratio `R = (1 - P_even_total) / d2_fraction_localized`.
///
/// `eta = 0` is a removable 0/0 point; use [`ratio_r_limit_zero`] there.
pub fn ratio_r(eta: f64, mode: ExcitationMode) -> Result<f64> {
    if eta == 0.0 {
        return Err(Error::SingularInput(
            "ratio R is 0/0 at eta = 0; its analytic limit is 1".into(),
        ));
    }
    let p = excitation_probabilities(eta, mode)?;
    Ok((1.0 - p.p_even_total) / d2_fraction_localized(eta))
}

/// Analytic `eta -> 0` limit of [`ratio_r`]; equals 1 in both modes.
pub fn ratio_r_limit_zero(_mode: ExcitationMode) -> f64 {
    1.0
}

/// Upper bound of `R`: `(1 - P_00) / d2_fraction_localized`, which
/// simplifies to `2 / (1 + exp(-eta^2))` (verified against the ratio form
/// in the tests). Monotone from 1 (`eta -> 0`) to 2 (`eta -> inf`).
pub fn r_bound(eta: f64) -> Result<f64> {
    if eta == 0.0 {
        return Err(Error::SingularInput(
            "R_bound is 0/0 at eta = 0; its analytic limit is 1".into(),
        ));
    }
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::Domain(format!(
            "Lamb-Dicke parameter must be > 0, got {eta}"
        )));
    }
    Ok(2.0 / (1.0 + (-eta * eta).exp()))
}

/// Analytic `eta -> 0` limit of [`r_bound`].
pub fn r_bound_limit_zero() -> f64 {
    1.0
}

/// `R_bound` evaluated from the physical parameters instead of `eta`:
/// `2 (1 - exp(-8 pi^2 / (lambda a)^2)) / (1 - exp(-16 pi^2 / (lambda a)^2))`
/// with `a = sqrt(m omega / hbar)`. Algebraically identical to
/// [`r_bound`] at `eta = (4 pi / lambda) sqrt(hbar / (2 m omega))`; kept as
/// an independent route for cross-checking.
pub fn r_bound_from_parameters(mass: f64, omega: f64, wavelength: f64) -> Result<f64> {
    if !(mass > 0.0 && omega > 0.0 && wavelength > 0.0) {
        return Err(Error::Domain(
            "mass, omega and wavelength must all be positive".into(),
        ));
    }
    let a_sq = mass * omega / constants::HBAR;
    let x = 8.0 * PI * PI / (wavelength * wavelength * a_sq);
    Ok(2.0 * (-x).exp_m1() / (-2.0 * x).exp_m1())
}

/// Boundaries of the qualitative interpolation regimes.
pub const R_QUALITATIVE_LOW_ETA: f64 = 0.3;
pub const R_QUALITATIVE_HIGH_ETA: f64 = 1.5;

/// Rough expected shape of the measurable `R`: equals `R_bound` below
/// `eta = 0.3`, half of it above `eta = 1.5`, and blends with a monotone
/// cubic in `log eta` in between. This reproduces a qualitative curve, not
/// a derived formula; the exact interior maximum is reported by the scan
/// command rather than asserted.
pub fn r_qualitative(eta: f64) -> Result<f64> {
    let bound = r_bound(eta)?;
    let factor = if eta < R_QUALITATIVE_LOW_ETA {
        1.0
    } else if eta > R_QUALITATIVE_HIGH_ETA {
        0.5
    } else {
        let t = (eta.ln() - R_QUALITATIVE_LOW_ETA.ln())
            / (R_QUALITATIVE_HIGH_ETA.ln() - R_QUALITATIVE_LOW_ETA.ln());
        let s = t * t * (3.0 - 2.0 * t);
        1.0 - 0.5 * s
    };
    Ok(bound * factor)
}
