//! Shared fixtures for the criterion benchmarks.

use foilsim_core::collapse::CollapseModel;
use foilsim_core::constants;
use foilsim_core::experiment::{ExperimentPlan, DEFAULT_ANOMALY_THRESHOLD};
use foilsim_core::{
    FoilOscillator, InterferometerConfig, PhotonProbe, ScatterCoupling, Topology,
};
use std::f64::consts::PI;

/// Reference foil: 1e15 nucleons at 10 Hz.
pub fn reference_foil() -> FoilOscillator {
    FoilOscillator::from_particles(1e15, constants::omega_from_hz(10.0)).unwrap()
}

/// Photon whose elastic kick on [`reference_foil`] hits the given eta.
pub fn photon_for_eta(foil: &FoilOscillator, eta: f64) -> PhotonProbe {
    PhotonProbe::new(4.0 * PI * foil.ground_rms() / eta).unwrap()
}

/// Single-photon plan at eta = 0.3 with a half-life collapse rate.
pub fn reference_plan(trials: u64) -> ExperimentPlan {
    let foil = reference_foil();
    let photon = photon_for_eta(&foil, 0.3);
    ExperimentPlan {
        config: InterferometerConfig::new(Topology::OpenLoop, photon),
        foil,
        model: CollapseModel::grw(7e-16),
        coupling: ScatterCoupling::default(),
        photons_per_pulse: 1,
        observation_window: 1.0,
        trials,
        master_seed: 0xbe7c,
        anomaly_threshold: DEFAULT_ANOMALY_THRESHOLD,
    }
}
