//! Monte-Carlo engine for the two experimental procedures.
//!
//! * Single-photon trials: one photon per observation window; many
//!   repetitions measure the even/odd output ratio and its deviations.
//! * Multi-photon pulses: `N` independent photons per window; a coherent
//!   pulse yields at most one odd click, while a localization event sprays
//!   a classical fraction `sin^2(2 k X_loc)` of the whole pulse into D2,
//!   so an anomalous D2 multiplicity tags the event.
//!
//! Reproducibility contract: every trial draws from its own generator
//! derived from `(master_seed, trial_id)`, so record streams are
//! bit-identical for a given plan no matter how many workers execute them
//! or in which order they finish.

use crate::collapse::{sample_localized_position, CollapseEvent, CollapseModel};
use crate::error::{Error, Result};
use crate::interferometer::{route_photon, Detector, InterferometerConfig, ScatterOutcome};
use crate::oscillator::{sample_level_after_kick, FoilOscillator, KickSpec, Parity};
use crate::rng::derive_rng;
use crate::scattering::{excitation_probabilities, ExcitationMode, ScatterCoupling};
use rand::Rng;
use rayon::prelude::*;
use std::io::{self, Write};

/// Full configuration of one Monte-Carlo run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentPlan {
    pub config: InterferometerConfig,
    pub foil: FoilOscillator,
    pub model: CollapseModel,
    pub coupling: ScatterCoupling,
    /// Photons per pulse; 1 selects the single-photon procedure.
    pub photons_per_pulse: u32,
    /// Observation window per trial (s); doubles as the pulse duration in
    /// pulse mode.
    pub observation_window: f64,
    pub trials: u64,
    pub master_seed: u64,
    /// D2 clicks per pulse at or above which the pulse is flagged
    /// anomalous. A coherent pulse produces at most one, hence the default
    /// of 2.
    pub anomaly_threshold: u32,
}

/// Default anomalous-pulse threshold (one more than any coherent pulse can
/// produce).
pub const DEFAULT_ANOMALY_THRESHOLD: u32 = 2;

impl ExperimentPlan {
    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        if self.trials < 1 {
            return Err(Error::Validation {
                field: "experiment.trials",
                reason: "must be >= 1".into(),
            });
        }
        if self.photons_per_pulse < 1 {
            return Err(Error::Validation {
                field: "experiment.photons_per_pulse",
                reason: "must be >= 1".into(),
            });
        }
        if !(self.observation_window > 0.0 && self.observation_window.is_finite()) {
            return Err(Error::Validation {
                field: "experiment.observation_window",
                reason: format!("must be positive, got {}", self.observation_window),
            });
        }
        if self.anomaly_threshold < 1 {
            return Err(Error::Validation {
                field: "experiment.anomaly_threshold",
                reason: "must be >= 1".into(),
            });
        }
        if self.foil.level() != 0 {
            return Err(Error::Validation {
                field: "foil.level",
                reason: "trials start from the ground state; level must be 0".into(),
            });
        }
        Ok(())
    }

    /// Lamb-Dicke parameter of the plan's elastic photon kick.
    pub fn eta(&self) -> f64 {
        let kick = KickSpec::elastic_reflection(self.config.photon.wavenumber(), Parity::Even)
            .expect("photon wavenumber is positive");
        self.foil.lamb_dicke(&kick)
    }

    /// Per-photon inelastic interaction probability `P_int`: the exact odd
    /// excitation probability times the scattering efficiency.
    pub fn p_inelastic(&self) -> f64 {
        let p = excitation_probabilities(self.eta(), ExcitationMode::Exact)
            .expect("eta is >= 0 by construction");
        p.p_odd_total * self.coupling.efficiency()
    }
}

/// Outcome of one single-photon trial.
///
/// Optional fields are absent where they make no sense: `collapse_time` and
/// `x_loc` without a localization, `foil_level` after one, `photon_parity`
/// and `detector` when the photon never scattered.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventRecord {
    pub trial_id: u64,
    pub collapsed: bool,
    pub collapse_time: Option<f64>,
    pub x_loc: Option<f64>,
    pub foil_level: Option<u32>,
    pub photon_parity: Option<Parity>,
    pub detector: Option<Detector>,
}

/// Outcome of one multi-photon pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseRecord {
    pub trial_id: u64,
    pub collapsed: bool,
    pub collapse_time: Option<f64>,
    pub x_loc: Option<f64>,
    pub d1: u32,
    pub d2: u32,
    pub unscattered: u32,
    pub anomalous: bool,
}

/// Aggregated detector statistics.
///
/// `d1 + d2` counts scattered photons only; unscattered photons are kept
/// separate. The collapsed/coherent splits are diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DetectorTally {
    pub d1: u64,
    pub d2: u64,
    pub unscattered: u64,
    /// `d2 / (d1 + d2)`, zero when nothing scattered.
    pub d2_fraction: f64,
    /// Binomial standard error of `d2_fraction`.
    pub d2_std_error: f64,
    pub anomalous_pulses: u64,
    pub collapse_events: u64,
    pub coherent_d1: u64,
    pub coherent_d2: u64,
    pub collapsed_d1: u64,
    pub collapsed_d2: u64,
}

impl DetectorTally {
    fn finalize(mut self) -> Self {
        let scattered = self.d1 + self.d2;
        if scattered > 0 {
            let n = scattered as f64;
            let p = self.d2 as f64 / n;
            self.d2_fraction = p;
            self.d2_std_error = (p * (1.0 - p) / n).sqrt();
        }
        self
    }
}

/// Pulse-assumption check thresholds: pass below 0.01, warn below 0.1,
/// fail at or above 0.1.
pub const ASSUMPTION_PASS_BELOW: f64 = 0.01;
/// See [`ASSUMPTION_PASS_BELOW`].
pub const ASSUMPTION_FAIL_AT: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

impl CheckStatus {
    fn of(value: f64) -> Self {
        if value < ASSUMPTION_PASS_BELOW {
            CheckStatus::Pass
        } else if value < ASSUMPTION_FAIL_AT {
            CheckStatus::Warn
        } else {
            CheckStatus::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Warn => "warn",
            CheckStatus::Fail => "fail",
        }
    }
}

/// Validity report for the multi-photon pulse limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseAssumptionReport {
    /// `N * P_int`: expected inelastic interactions per pulse.
    pub n_p_int: f64,
    /// Pulse duration over the oscillator period.
    pub duration_over_period: f64,
    pub interaction_status: CheckStatus,
    pub duration_status: CheckStatus,
    /// Single-photon runs are exempt from both limits.
    pub single_photon: bool,
}

impl PulseAssumptionReport {
    pub fn overall(&self) -> CheckStatus {
        if self.single_photon {
            return CheckStatus::Pass;
        }
        match (self.interaction_status, self.duration_status) {
            (CheckStatus::Fail, _) | (_, CheckStatus::Fail) => CheckStatus::Fail,
            (CheckStatus::Warn, _) | (_, CheckStatus::Warn) => CheckStatus::Warn,
            _ => CheckStatus::Pass,
        }
    }
}

/// Evaluates the pulse-limit figures for a plan. Single-photon plans
/// always pass; the limits only constrain genuine pulses.
pub fn check_pulse_assumptions(plan: &ExperimentPlan) -> PulseAssumptionReport {
    let n_p_int = plan.photons_per_pulse as f64 * plan.p_inelastic();
    let period = 2.0 * std::f64::consts::PI / plan.foil.omega();
    let duration_over_period = plan.observation_window / period;
    let single_photon = plan.photons_per_pulse == 1;
    if single_photon {
        PulseAssumptionReport {
            n_p_int,
            duration_over_period,
            interaction_status: CheckStatus::Pass,
            duration_status: CheckStatus::Pass,
            single_photon,
        }
    } else {
        PulseAssumptionReport {
            n_p_int,
            duration_over_period,
            interaction_status: CheckStatus::of(n_p_int),
            duration_status: CheckStatus::of(duration_over_period),
            single_photon,
        }
    }
}

/// Runs one single-photon trial. The plan must already be validated.
///
/// Draw order within the trial's private stream: collapse waiting time,
/// then (if localized) the position, then the scattering-efficiency coin,
/// then level sampling or routing.
pub fn run_single_photon_trial(plan: &ExperimentPlan, trial_id: u64) -> EventRecord {
    let mut rng = derive_rng(plan.master_seed, trial_id);
    let collapse = plan.model.sample_collapse(
        plan.foil.particle_count(),
        plan.observation_window,
        &mut rng,
    );
    let efficiency = plan.coupling.efficiency();
    match collapse {
        CollapseEvent::CollapseAt { time } => {
            let x_loc = sample_localized_position(&plan.foil, &mut rng)
                .expect("validated plans keep the foil in the ground state");
            let scattered = rng.random::<f64>() < efficiency;
            let detector = scattered
                .then(|| route_photon(&plan.config, ScatterOutcome::Localized { x_loc }, &mut rng));
            EventRecord {
                trial_id,
                collapsed: true,
                collapse_time: Some(time),
                x_loc: Some(x_loc),
                foil_level: None,
                photon_parity: detector.map(Detector::measured_parity),
                detector,
            }
        }
        CollapseEvent::NoCollapse => {
            let scattered = rng.random::<f64>() < efficiency;
            if !scattered {
                return EventRecord {
                    trial_id,
                    collapsed: false,
                    collapse_time: None,
                    x_loc: None,
                    foil_level: Some(0),
                    photon_parity: None,
                    detector: None,
                };
            }
            let level = sample_level_after_kick(plan.eta(), &mut rng);
            let foil_parity = Parity::of_level(level);
            let detector = route_photon(
                &plan.config,
                ScatterOutcome::Coherent { foil_parity },
                &mut rng,
            );
            // parity bookkeeping: the photon leaves with the foil's parity,
            // so their product is always even
            assert_eq!(
                detector.measured_parity(),
                foil_parity,
                "coherent routing must preserve the photon/foil parity product"
            );
            EventRecord {
                trial_id,
                collapsed: false,
                collapse_time: None,
                x_loc: None,
                foil_level: Some(level),
                photon_parity: Some(foil_parity),
                detector: Some(detector),
            }
        }
    }
}

/// Runs one multi-photon pulse. The plan must already be validated and
/// needs `photons_per_pulse >= 2`.
///
/// In the coherent branch the pulse limit `N * P_int << 1` is enforced
/// structurally: the engine draws whether *one* inelastic event happened
/// (probability `1 - (1 - P_int)^scattered`) and routes every other photon
/// elastically, so no coherent pulse can produce two D2 clicks. Plans
/// outside the limit are rejected instead of simulated.
pub fn run_pulse(plan: &ExperimentPlan, trial_id: u64) -> Result<PulseRecord> {
    let n = plan.photons_per_pulse;
    let n_p_int = n as f64 * plan.p_inelastic();
    if n_p_int >= ASSUMPTION_FAIL_AT {
        return Err(Error::PulseAssumption {
            n_p_int,
            limit: ASSUMPTION_FAIL_AT,
        });
    }
    let mut rng = derive_rng(plan.master_seed, trial_id);
    let collapse = plan.model.sample_collapse(
        plan.foil.particle_count(),
        plan.observation_window,
        &mut rng,
    );
    let efficiency = plan.coupling.efficiency();
    let mut d1 = 0u32;
    let mut d2 = 0u32;
    let mut unscattered = 0u32;
    let (collapsed, collapse_time, x_loc) = match collapse {
        CollapseEvent::CollapseAt { time } => {
            // one shared localized position for the whole pulse
            let x_loc = sample_localized_position(&plan.foil, &mut rng)
                .expect("validated plans keep the foil in the ground state");
            for _ in 0..n {
                if rng.random::<f64>() < efficiency {
                    match route_photon(&plan.config, ScatterOutcome::Localized { x_loc }, &mut rng)
                    {
                        Detector::D1 => d1 += 1,
                        Detector::D2 => d2 += 1,
                    }
                } else {
                    unscattered += 1;
                }
            }
            (true, Some(time), Some(x_loc))
        }
        CollapseEvent::NoCollapse => {
            let mut scattered = 0u32;
            for _ in 0..n {
                if rng.random::<f64>() < efficiency {
                    scattered += 1;
                } else {
                    unscattered += 1;
                }
            }
            let p_odd = excitation_probabilities(plan.eta(), ExcitationMode::Exact)
                .expect("eta >= 0")
                .p_odd_total;
            // P(at least one inelastic among the scattered) = 1 - (1 - p)^s
            let p_one_inelastic = -(f64::from(scattered) * (1.0 - p_odd).ln()).exp_m1();
            if scattered > 0 && rng.random::<f64>() < p_one_inelastic {
                d2 = 1;
                d1 = scattered - 1;
            } else {
                d1 = scattered;
            }
            (false, None, None)
        }
    };
    Ok(PulseRecord {
        trial_id,
        collapsed,
        collapse_time,
        x_loc,
        d1,
        d2,
        unscattered,
        anomalous: d2 >= plan.anomaly_threshold,
    })
}

/// Record stream of a run; single-photon and pulse modes produce different
/// record shapes.
#[derive(Debug, Clone, PartialEq)]
pub enum RunOutput {
    SinglePhoton(Vec<EventRecord>),
    Pulses(Vec<PulseRecord>),
}

impl RunOutput {
    /// Aggregate statistics of the stream.
    pub fn tally(&self) -> Result<DetectorTally> {
        match self {
            RunOutput::SinglePhoton(records) => aggregate(records),
            RunOutput::Pulses(pulses) => aggregate_pulses(pulses),
        }
    }
}

/// Executes the whole plan, fanning trials across the current rayon pool.
/// Records come back ordered by `trial_id` whatever the execution order.
pub fn run(plan: &ExperimentPlan) -> Result<RunOutput> {
    plan.validate()?;
    if plan.photons_per_pulse == 1 {
        let records: Vec<EventRecord> = (0..plan.trials)
            .into_par_iter()
            .map(|trial_id| run_single_photon_trial(plan, trial_id))
            .collect();
        Ok(RunOutput::SinglePhoton(records))
    } else {
        let pulses: Vec<PulseRecord> = (0..plan.trials)
            .into_par_iter()
            .map(|trial_id| run_pulse(plan, trial_id))
            .collect::<Result<_>>()?;
        Ok(RunOutput::Pulses(pulses))
    }
}

/// Tally of a single-photon record stream.
pub fn aggregate(records: &[EventRecord]) -> Result<DetectorTally> {
    if records.is_empty() {
        return Err(Error::EmptyInput("aggregate needs at least one record"));
    }
    let mut t = DetectorTally::default();
    for r in records {
        if r.collapsed {
            t.collapse_events += 1;
        }
        match r.detector {
            Some(Detector::D1) => {
                t.d1 += 1;
                if r.collapsed {
                    t.collapsed_d1 += 1;
                } else {
                    t.coherent_d1 += 1;
                }
            }
            Some(Detector::D2) => {
                t.d2 += 1;
                if r.collapsed {
                    t.collapsed_d2 += 1;
                } else {
                    t.coherent_d2 += 1;
                }
            }
            None => t.unscattered += 1,
        }
    }
    Ok(t.finalize())
}

/// Tally of a pulse record stream.
pub fn aggregate_pulses(pulses: &[PulseRecord]) -> Result<DetectorTally> {
    if pulses.is_empty() {
        return Err(Error::EmptyInput("aggregate needs at least one pulse"));
    }
    let mut t = DetectorTally::default();
    for p in pulses {
        t.d1 += u64::from(p.d1);
        t.d2 += u64::from(p.d2);
        t.unscattered += u64::from(p.unscattered);
        if p.collapsed {
            t.collapse_events += 1;
            t.collapsed_d1 += u64::from(p.d1);
            t.collapsed_d2 += u64::from(p.d2);
        } else {
            t.coherent_d1 += u64::from(p.d1);
            t.coherent_d2 += u64::from(p.d2);
        }
        if p.anomalous {
            t.anomalous_pulses += 1;
        }
    }
    Ok(t.finalize())
}

/// Column header of the single-photon event CSV.
pub const EVENT_CSV_COLUMNS: &str =
    "trial_id,collapsed,collapse_time_s,x_loc_m,foil_level,photon_parity,detector";

/// Column header of the pulse CSV.
pub const PULSE_CSV_COLUMNS: &str =
    "trial_id,collapsed,collapse_time_s,x_loc_m,d1,d2,unscattered,anomalous";

fn fmt_opt_float(v: Option<f64>) -> String {
    v.map(|x| format!("{x:e}")).unwrap_or_default()
}

/// Writes the event stream as CSV (header plus one line per trial, '.'
/// decimal separator, scientific notation for floats, empty fields for
/// absent values).
pub fn write_event_csv<W: Write>(w: &mut W, records: &[EventRecord]) -> io::Result<()> {
    writeln!(w, "{EVENT_CSV_COLUMNS}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.trial_id,
            r.collapsed,
            fmt_opt_float(r.collapse_time),
            fmt_opt_float(r.x_loc),
            r.foil_level.map(|n| n.to_string()).unwrap_or_default(),
            r.photon_parity.map(Parity::label).unwrap_or_default(),
            r.detector.map(Detector::label).unwrap_or_default(),
        )?;
    }
    Ok(())
}

/// Writes the pulse stream as CSV; same conventions as
/// [`write_event_csv`].
pub fn write_pulse_csv<W: Write>(w: &mut W, pulses: &[PulseRecord]) -> io::Result<()> {
    writeln!(w, "{PULSE_CSV_COLUMNS}")?;
    for p in pulses {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            p.trial_id,
            p.collapsed,
            fmt_opt_float(p.collapse_time),
            fmt_opt_float(p.x_loc),
            p.d1,
            p.d2,
            p.unscattered,
            p.anomalous,
        )?;
    }
    Ok(())
}
