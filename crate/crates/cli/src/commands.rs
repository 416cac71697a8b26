//! The four subcommands: parameter scans, Monte-Carlo runs, feasibility
//! reports.

use crate::config::RawConfig;
use crate::error::AppError;
use foilsim_core::collapse::{expected_event_count, CollapseModel, GRW_RATE_PER_PARTICLE};
use foilsim_core::constants;
use foilsim_core::experiment::{
    check_pulse_assumptions, run, write_event_csv, write_pulse_csv, CheckStatus, ExperimentPlan,
    RunOutput, DEFAULT_ANOMALY_THRESHOLD,
};
use foilsim_core::feasibility::{
    self, feasibility_report, max_omega_for_resolution, FeasibilityInputs, MirrorGeometry,
    MirrorMaterial, PlateShape, DEFAULT_MARGIN,
};
use foilsim_core::scattering::{
    self, d2_fraction_localized, debye_waller, excitation_probabilities, lamb_dicke_valid,
    r_bound, r_qualitative, ExcitationMode, ScatterCoupling,
};
use foilsim_core::{FoilOscillator, InterferometerConfig, PhotonProbe, Topology};
use num_complex::Complex64;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

fn create_out(path: &Path) -> Result<BufWriter<File>, AppError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| AppError::io(path, &e))
}

fn write_provenance<W: Write>(
    w: &mut W,
    command: &str,
    cfg: &RawConfig,
    seed: u64,
) -> std::io::Result<()> {
    writeln!(w, "# foilsim {command}")?;
    writeln!(w, "# config_hash: {}", cfg.hash())?;
    writeln!(w, "# seed: {seed}")
}

/// Effective seed: `[experiment] seed` unless overridden on the command line
/// (the override is already folded into the config).
fn seed_of(cfg: &RawConfig) -> Result<u64, AppError> {
    cfg.count_or("experiment", "seed", 0)
}

// ---------------------------------------------------------------- scan-eta

pub fn cmd_scan_eta(cfg: &RawConfig, out: &Path) -> Result<(), AppError> {
    cfg.check_known_keys("scan", &["eta_min", "eta_max", "steps", "spacing"])?;
    let eta_min = cfg.f64_or("scan", "eta_min", 0.01)?;
    let eta_max = cfg.f64_or("scan", "eta_max", 3.0)?;
    let steps = cfg.count_or("scan", "steps", 300)? as usize;
    let spacing = cfg.str_or("scan", "spacing", "log").to_string();
    if !(eta_min > 0.0 && eta_min < eta_max) {
        return Err(AppError::validation(format!(
            "scan range must satisfy 0 < eta_min < eta_max, got [{eta_min}, {eta_max}]"
        )));
    }
    if steps < 2 {
        return Err(cfg.invalid("scan", "steps", "must be >= 2"));
    }
    let grid: Vec<f64> = match spacing.as_str() {
        "log" => {
            let (lo, hi) = (eta_min.ln(), eta_max.ln());
            (0..steps)
                .map(|i| (lo + (hi - lo) * i as f64 / (steps - 1) as f64).exp())
                .collect()
        }
        "linear" => (0..steps)
            .map(|i| eta_min + (eta_max - eta_min) * i as f64 / (steps - 1) as f64)
            .collect(),
        other => {
            return Err(cfg.invalid(
                "scan",
                "spacing",
                &format!("must be `log` or `linear`, got `{other}`"),
            ))
        }
    };

    let mut w = create_out(out)?;
    let io = |e| AppError::io(out, &e);
    write_provenance(&mut w, "scan-eta", cfg, seed_of(cfg)?).map_err(io)?;
    writeln!(
        w,
        "eta,r_bound,r_qualitative,p00,p_odd_exact,d2_fraction_localized"
    )
    .map_err(io)?;
    let mut peak = (0.0f64, 0.0f64);
    for eta in grid {
        let p = excitation_probabilities(eta, ExcitationMode::Exact)?;
        let rq = r_qualitative(eta)?;
        if rq > peak.1 {
            peak = (eta, rq);
        }
        writeln!(
            w,
            "{:e},{:e},{:e},{:e},{:e},{:e}",
            eta,
            r_bound(eta)?,
            rq,
            p.p00,
            p.p_odd_total,
            d2_fraction_localized(eta)
        )
        .map_err(io)?;
    }
    w.flush().map_err(io)?;
    println!(
        "scan-eta: {steps} rows -> {} (qualitative R peaks at eta = {:.3})",
        out.display(),
        peak.0
    );
    Ok(())
}

// --------------------------------------------------------- scan-resolution

pub fn cmd_scan_resolution(cfg: &RawConfig, out: &Path) -> Result<(), AppError> {
    cfg.check_known_keys(
        "resolution_scan",
        &["particles_min", "particles_max", "steps", "wavelengths_nm", "margin"],
    )?;
    let p_min = cfg.f64_or("resolution_scan", "particles_min", 1e6)?;
    let p_max = cfg.f64_or("resolution_scan", "particles_max", 1e15)?;
    let steps = cfg.count_or("resolution_scan", "steps", 30)? as usize;
    let margin = cfg.f64_or("resolution_scan", "margin", DEFAULT_MARGIN)?;
    let wavelengths: Vec<f64> = cfg
        .str_or("resolution_scan", "wavelengths_nm", "0.1,1000")
        .split(',')
        .map(|s| {
            s.trim().parse::<f64>().map_err(|_| {
                cfg.invalid("resolution_scan", "wavelengths_nm", "must be a comma-separated list of numbers")
            })
        })
        .collect::<Result<_, _>>()?;
    if !(p_min >= 1.0 && p_min < p_max) {
        return Err(AppError::validation(format!(
            "particle range must satisfy 1 <= min < max, got [{p_min}, {p_max}]"
        )));
    }
    for &nm in &wavelengths {
        if !(0.1..=1000.0).contains(&nm) {
            return Err(cfg.invalid(
                "resolution_scan",
                "wavelengths_nm",
                &format!("wavelengths must lie in the usable band 0.1-1000 nm, got {nm}"),
            ));
        }
    }

    let mut w = create_out(out)?;
    let io = |e| AppError::io(out, &e);
    write_provenance(&mut w, "scan-resolution", cfg, seed_of(cfg)?).map_err(io)?;
    writeln!(w, "particles,wavelength_nm,mass_kg,omega_max_rad_s,resolution").map_err(io)?;
    for i in 0..steps {
        let particles = p_min * (p_max / p_min).powf(i as f64 / (steps - 1) as f64);
        let mass = constants::mass_from_particles(particles);
        for &nm in &wavelengths {
            let lambda = constants::wavelength_from_nm(nm);
            let photon = PhotonProbe::new(lambda)?;
            let omega_max = max_omega_for_resolution(mass, lambda, margin);
            let resolution = constants::HBAR * omega_max / photon.energy();
            writeln!(w, "{particles:e},{nm:e},{mass:e},{omega_max:e},{resolution:e}").map_err(io)?;
        }
    }
    w.flush().map_err(io)?;
    println!("scan-resolution: {steps} particle points -> {}", out.display());
    Ok(())
}

// ----------------------------------------------------------------- shared

const FOIL_KEYS: &[&str] = &["particles", "mass_kg", "frequency_hz", "omega_rad_s", "level"];

fn build_foil(cfg: &RawConfig) -> Result<FoilOscillator, AppError> {
    cfg.check_known_keys("foil", FOIL_KEYS)?;
    let omega = match (cfg.f64("foil", "frequency_hz")?, cfg.f64("foil", "omega_rad_s")?) {
        (Some(_), Some(_)) => {
            return Err(cfg.invalid("foil", "omega_rad_s", "conflicts with foil.frequency_hz; give one"))
        }
        (Some(hz), None) => constants::omega_from_hz(hz),
        (None, Some(omega)) => omega,
        (None, None) => return Err(AppError::validation("missing foil.frequency_hz (or foil.omega_rad_s)")),
    };
    let foil = match (cfg.f64("foil", "particles")?, cfg.f64("foil", "mass_kg")?) {
        (Some(_), Some(_)) => {
            return Err(cfg.invalid("foil", "mass_kg", "conflicts with foil.particles; give one"))
        }
        (Some(count), None) => FoilOscillator::from_particles(count, omega)?,
        (None, Some(mass)) => FoilOscillator::new(mass, omega)?,
        (None, None) => return Err(AppError::validation("missing foil.particles (or foil.mass_kg)")),
    };
    let level = cfg.count_or("foil", "level", 0)? as u32;
    Ok(foil.with_level(level))
}

fn build_photon(cfg: &RawConfig) -> Result<PhotonProbe, AppError> {
    cfg.check_known_keys("photon", &["wavelength_nm"])?;
    let nm = cfg.require_f64("photon", "wavelength_nm")?;
    PhotonProbe::new(constants::wavelength_from_nm(nm))
        .map_err(|e| cfg.invalid("photon", "wavelength_nm", &e.to_string()))
}

fn build_topology(cfg: &RawConfig) -> Result<Topology, AppError> {
    cfg.check_known_keys("interferometer", &["topology"])?;
    match cfg.str_or("interferometer", "topology", "open_loop") {
        "closed_loop" => Ok(Topology::ClosedLoop),
        "open_loop" => Ok(Topology::OpenLoop),
        "semi_closed" => Ok(Topology::SemiClosed),
        other => Err(cfg.invalid(
            "interferometer",
            "topology",
            &format!("must be closed_loop, open_loop or semi_closed, got `{other}`"),
        )),
    }
}

fn build_collapse(cfg: &RawConfig) -> Result<CollapseModel, AppError> {
    cfg.check_known_keys("collapse", &["model", "per_particle_rate", "exponent"])?;
    let rate = cfg.f64_or("collapse", "per_particle_rate", GRW_RATE_PER_PARTICLE)?;
    if rate < 0.0 {
        return Err(cfg.invalid("collapse", "per_particle_rate", "must be >= 0"));
    }
    match cfg.str_or("collapse", "model", "none") {
        "none" => Ok(CollapseModel::none()),
        "grw" => Ok(CollapseModel::grw(rate)),
        "power_law" => Ok(CollapseModel::power_law(
            rate,
            cfg.f64_or("collapse", "exponent", 1.0)?,
        )),
        other => Err(cfg.invalid(
            "collapse",
            "model",
            &format!("must be none, grw or power_law, got `{other}`"),
        )),
    }
}

fn build_plan(cfg: &RawConfig) -> Result<ExperimentPlan, AppError> {
    cfg.check_known_keys(
        "experiment",
        &["photons_per_pulse", "observation_window_s", "trials", "seed", "anomaly_threshold"],
    )?;
    cfg.check_known_keys("coupling", &["efficiency"])?;
    let plan = ExperimentPlan {
        config: InterferometerConfig::new(build_topology(cfg)?, build_photon(cfg)?),
        foil: build_foil(cfg)?,
        model: build_collapse(cfg)?,
        coupling: ScatterCoupling::new(cfg.f64_or("coupling", "efficiency", 1.0)?)?,
        photons_per_pulse: cfg.count_or("experiment", "photons_per_pulse", 1)? as u32,
        observation_window: cfg.f64_or("experiment", "observation_window_s", 1.0)?,
        trials: cfg.require_count("experiment", "trials")?,
        master_seed: seed_of(cfg)?,
        anomaly_threshold: cfg.count_or("experiment", "anomaly_threshold", u64::from(DEFAULT_ANOMALY_THRESHOLD))?
            as u32,
    };
    plan.validate()?;
    Ok(plan)
}

// ----------------------------------------------------------------- simulate

pub fn cmd_simulate(
    cfg: &RawConfig,
    out: &Path,
    workers: Option<usize>,
    force: bool,
) -> Result<(), AppError> {
    let plan = build_plan(cfg)?;
    let report = check_pulse_assumptions(&plan);
    let eta = plan.eta();
    println!("pulse-assumption report:");
    println!(
        "  N * P_int        = {:e}  [{}]",
        report.n_p_int,
        report.interaction_status.label()
    );
    println!(
        "  window / period  = {:e}  [{}]",
        report.duration_over_period,
        report.duration_status.label()
    );
    if report.single_photon {
        println!("  single-photon run: limits do not apply");
    }
    if !lamb_dicke_valid(eta) {
        println!(
            "  note: eta = {eta:.3} exceeds {}; quadratic expansions are unreliable there",
            scattering::LAMB_DICKE_ETA_MAX
        );
    }
    if report.overall() == CheckStatus::Fail {
        if !force {
            return Err(AppError::assumption(format!(
                "N * P_int = {:e}, window/period = {:e}; rerun with --force to override the advisory checks",
                report.n_p_int, report.duration_over_period
            )));
        }
        println!("  continuing despite failed checks (--force)");
    }

    let execute = || run(&plan);
    let output = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| AppError::validation(format!("cannot build worker pool: {e}")))?
            .install(execute),
        None => execute(),
    }?;

    let mut w = create_out(out)?;
    let io = |e| AppError::io(out, &e);
    write_provenance(&mut w, "simulate", cfg, plan.master_seed).map_err(io)?;
    match &output {
        RunOutput::SinglePhoton(records) => write_event_csv(&mut w, records).map_err(io)?,
        RunOutput::Pulses(pulses) => write_pulse_csv(&mut w, pulses).map_err(io)?,
    }
    w.flush().map_err(io)?;

    let tally = output.tally()?;
    let rate = plan.model.collapse_rate(plan.foil.particle_count());
    let expected_collapses =
        expected_event_count(rate, plan.observation_window, plan.trials as f64);
    println!("simulate summary:");
    println!("  mode             = {}", if plan.photons_per_pulse == 1 { "single_photon" } else { "pulse" });
    println!("  trials           = {}", plan.trials);
    println!("  eta              = {eta:e}");
    println!("  p00 (Debye-Waller) = {:e}", debye_waller(eta));
    println!("  d1 / d2 / unscattered = {} / {} / {}", tally.d1, tally.d2, tally.unscattered);
    println!(
        "  d2_fraction      = {:e} +- {:e}",
        tally.d2_fraction, tally.d2_std_error
    );
    println!(
        "  collapse events  = {} (expected {:e})",
        tally.collapse_events, expected_collapses
    );
    println!(
        "  coherent d2 / collapsed d2 = {} / {}",
        tally.coherent_d2, tally.collapsed_d2
    );
    println!("  anomalous pulses = {}", tally.anomalous_pulses);
    println!("  events -> {}", out.display());
    Ok(())
}

// -------------------------------------------------------------- feasibility

const MIRROR_KEYS: &[&str] = &[
    "preset",
    "thickness_m",
    "lateral_size_m",
    "shape",
    "surrounding_index",
    "surrounding_extinction",
    "margin",
    "refractive_index",
    "extinction",
    "youngs_modulus_pa",
    "density_kg_m3",
    "poisson_ratio",
    "atomic_volume_m3",
];

fn build_material(cfg: &RawConfig) -> Result<MirrorMaterial, AppError> {
    let mut material = match cfg.str_or("mirror", "preset", "") {
        "" => feasibility::presets::metal_xray(),
        name => feasibility::presets::by_name(name).ok_or_else(|| {
            cfg.invalid("mirror", "preset", &format!("unknown preset `{name}` (metal_xray, metal_red)"))
        })?,
    };
    if let Some(v) = cfg.f64("mirror", "refractive_index")? {
        material.refractive_index = v;
    }
    if let Some(v) = cfg.f64("mirror", "extinction")? {
        material.extinction = v;
    }
    if let Some(v) = cfg.f64("mirror", "youngs_modulus_pa")? {
        material.youngs_modulus = v;
    }
    if let Some(v) = cfg.f64("mirror", "density_kg_m3")? {
        material.density = v;
    }
    if let Some(v) = cfg.f64("mirror", "poisson_ratio")? {
        material.poisson_ratio = v;
    }
    if let Some(v) = cfg.f64("mirror", "atomic_volume_m3")? {
        material.atomic_volume = v;
    }
    material.validate()?;
    Ok(material)
}

pub fn cmd_feasibility(cfg: &RawConfig, out: Option<&Path>) -> Result<(), AppError> {
    cfg.check_known_keys("mirror", MIRROR_KEYS)?;
    let foil = build_foil(cfg)?;
    let photon = build_photon(cfg)?;
    let material = build_material(cfg)?;
    let geometry = MirrorGeometry {
        thickness: cfg.require_f64("mirror", "thickness_m")?,
        lateral_size: cfg.require_f64("mirror", "lateral_size_m")?,
        shape: match cfg.str_or("mirror", "shape", "rectangular") {
            "rectangular" => PlateShape::RectangularClamped,
            "circular" => PlateShape::CircularClamped,
            other => {
                return Err(cfg.invalid(
                    "mirror",
                    "shape",
                    &format!("must be rectangular or circular, got `{other}`"),
                ))
            }
        },
    };
    geometry.validate()?;
    let inputs = FeasibilityInputs {
        foil,
        photon,
        material,
        geometry,
        surrounding_index: Complex64::new(
            cfg.f64_or("mirror", "surrounding_index", 1.0)?,
            cfg.f64_or("mirror", "surrounding_extinction", 0.0)?,
        ),
        margin: cfg.f64_or("mirror", "margin", DEFAULT_MARGIN)?,
    };
    let rows = feasibility_report(&inputs)?;

    println!("feasibility report (config {}):", cfg.hash());
    println!("  {:<32} {:>13} {:>13} {:>6}", "condition", "value", "threshold", "status");
    for row in &rows {
        let threshold = row
            .threshold
            .map_or_else(|| "-".to_string(), |t| format!("{t:.3e}"));
        println!(
            "  {:<32} {:>13.6e} {:>13} {:>6}",
            row.name,
            row.value,
            threshold,
            row.status.label()
        );
    }

    if let Some(path) = out {
        let mut w = create_out(path)?;
        let io = |e| AppError::io(path, &e);
        write_provenance(&mut w, "feasibility", cfg, seed_of(cfg)?).map_err(io)?;
        writeln!(w, "name,value,threshold,status").map_err(io)?;
        for row in &rows {
            writeln!(
                w,
                "{},{:e},{},{}",
                row.name,
                row.value,
                row.threshold.map(|t| format!("{t:e}")).unwrap_or_default(),
                row.status.label()
            )
            .map_err(io)?;
        }
        w.flush().map_err(io)?;
        println!("  rows -> {}", path.display());
    }
    Ok(())
}
