//! Physics kernels and a Monte-Carlo engine for a symmetry-probing
//! interferometer experiment: single photons reflect off a thin mirror foil
//! whose center-of-mass sits in a harmonic trap, and the output beam splitter
//! projects onto parity eigenstates (detectors D1 = even, D2 = odd).
//!
//! A spontaneous-localization event pins the foil to a definite position and
//! breaks the amplitude symmetry, so a fraction of the light leaks into D2
//! beyond the calculable odd-excitation background. The crate provides
//!
//! * closed-form scattering probabilities (Debye-Waller factor, even/odd
//!   excitation probabilities, localized-signal fraction, signal-to-noise
//!   ratios) together with independent quadrature oracles,
//! * photon routing through the three interferometer topologies,
//! * localization-rate models and event sampling,
//! * a reproducible, seed-stable Monte-Carlo engine for single-photon and
//!   multi-photon-pulse runs, and
//! * feasibility calculators for the mirror foil itself (reflectance,
//!   absorption, clamped-plate frequency, inventory).
//!
//! All quantities are SI internally; unit conversions happen at the
//! command-line boundary (see the `foilsim` binary).

pub mod collapse;
pub mod constants;
pub mod error;
pub mod experiment;
pub mod feasibility;
pub mod interferometer;
pub mod oscillator;
pub mod quadrature;
pub mod rng;
pub mod scattering;

pub use error::{Error, Result};
pub use interferometer::{Detector, InterferometerConfig, PhotonProbe, Topology};
pub use oscillator::{FoilOscillator, KickSpec, Parity};
pub use scattering::{ExcitationMode, ScatterCoupling};
