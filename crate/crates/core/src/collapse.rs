//! Induced-localization models: event rates, waiting times and localized
//! positions.
//!
//! A localization event pins the foil's center of mass to a point `X_loc`
//! drawn from the ground-state density and leaves it there for the rest of
//! the trial. Rates scale with the constituent count: linearly for the
//! GRW-style model, as a configurable power otherwise. The trade-off that
//! a heavier foil collapses faster but spreads less is reported through
//! [`MassWidthTradeoff`], not asserted, because the balance is model
//! dependent.

use crate::error::Result;
use crate::oscillator::FoilOscillator;
use rand::Rng;

/// Canonical GRW localization rate per constituent particle (1/s).
pub const GRW_RATE_PER_PARTICLE: f64 = 1e-15;

/// How the total localization rate scales with particle count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CollapseVariant {
    /// No localization ever occurs.
    None,
    /// Rate proportional to particle count.
    Grw,
    /// Rate proportional to `count^exponent`; covers separation-dependent
    /// models for which no specific functional form is fixed.
    PowerLaw { exponent: f64 },
}

/// Localization model: a scaling variant plus the per-particle rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseModel {
    pub variant: CollapseVariant,
    pub per_particle_rate: f64,
}

impl CollapseModel {
    /// Model with no localization.
    pub fn none() -> Self {
        Self {
            variant: CollapseVariant::None,
            per_particle_rate: 0.0,
        }
    }

    /// GRW-style model at the canonical 1e-15 /s per-particle rate.
    pub fn grw_default() -> Self {
        Self::grw(GRW_RATE_PER_PARTICLE)
    }

    /// GRW-style model with an explicit per-particle rate (1/s).
    pub fn grw(per_particle_rate: f64) -> Self {
        Self {
            variant: CollapseVariant::Grw,
            per_particle_rate,
        }
    }

    /// Power-law model `rate = per_particle_rate * count^exponent`.
    pub fn power_law(per_particle_rate: f64, exponent: f64) -> Self {
        Self {
            variant: CollapseVariant::PowerLaw { exponent },
            per_particle_rate,
        }
    }

    /// Total localization rate (1/s) for a foil of `particle_count`
    /// constituents (>= 1).
    pub fn collapse_rate(&self, particle_count: f64) -> f64 {
        debug_assert!(particle_count >= 1.0);
        match self.variant {
            CollapseVariant::None => 0.0,
            CollapseVariant::Grw => particle_count * self.per_particle_rate,
            CollapseVariant::PowerLaw { exponent } => {
                self.per_particle_rate * particle_count.powf(exponent)
            }
        }
    }

    /// Samples the first localization event inside an observation window.
    ///
    /// Constant-rate (Poisson) waiting time: `P(collapse) = 1 - exp(-rate *
    /// window)`. Only the first event matters, since rates of interest make
    /// a second event in the same window negligible.
    pub fn sample_collapse<R: Rng + ?Sized>(
        &self,
        particle_count: f64,
        window: f64,
        rng: &mut R,
    ) -> CollapseEvent {
        let rate = self.collapse_rate(particle_count);
        if rate <= 0.0 {
            return CollapseEvent::NoCollapse;
        }
        // 1 - U lies in (0, 1], keeping the log finite; rate = inf gives t = 0.
        let u: f64 = rng.random();
        let t = -(1.0 - u).ln() / rate;
        if t <= window {
            CollapseEvent::CollapseAt { time: t }
        } else {
            CollapseEvent::NoCollapse
        }
    }
}

/// Outcome of waiting one observation window for a localization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CollapseEvent {
    NoCollapse,
    /// Localization at `time` seconds into the window.
    CollapseAt { time: f64 },
}

impl CollapseEvent {
    pub fn is_collapse(&self) -> bool {
        matches!(self, CollapseEvent::CollapseAt { .. })
    }
}

/// Localized position: the ground-state density is the distribution of
/// `X_loc`, so this simply delegates to the oscillator's position sampler.
pub fn sample_localized_position<R: Rng + ?Sized>(
    foil: &FoilOscillator,
    rng: &mut R,
) -> Result<f64> {
    foil.sample_position(rng)
}

/// Expected number of localization events over `trials` windows.
pub fn expected_event_count(rate: f64, window: f64, trials: f64) -> f64 {
    trials * -(-rate * window).exp_m1()
}

/// Both sides of the mass/width trade-off for one foil configuration:
/// raising the mass raises the rate but shrinks the ground-state spread.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassWidthTradeoff {
    /// Total localization rate (1/s).
    pub rate: f64,
    /// Ground-state width W(0) (m), the scale of the position separation.
    pub ground_width: f64,
}

/// Reports rate and width together so scans can expose the trade-off.
pub fn mass_width_tradeoff(model: &CollapseModel, foil: &FoilOscillator) -> MassWidthTradeoff {
    MassWidthTradeoff {
        rate: model.collapse_rate(foil.particle_count()),
        ground_width: foil.with_level(0).width(),
    }
}
