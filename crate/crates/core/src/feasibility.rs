//! Experimental-design calculators for the mirror foil.
//!
//! Closed-form figures a designer needs before committing to parameters:
//! the energy-resolution demand and the ground-width condition it follows
//! from, the momentum-conservation bound on energy transfer (whose ratio
//! to the maximal level spacing is the universal `8 pi^2`), normal-incidence
//! boundary reflectance from complex refractive indices, internal
//! absorption through the extinction coefficient, the clamped-plate
//! fundamental frequency, and the atom-count/thickness inventory.
//!
//! Strict inequalities ("much smaller than") are operationalized with a
//! configurable margin factor, default 10, always reported next to the
//! pass/fail verdict.

use crate::constants;
use crate::error::{Error, Result};
use crate::interferometer::PhotonProbe;
use crate::oscillator::FoilOscillator;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Default factor by which a ">>" condition must be exceeded to pass.
pub const DEFAULT_MARGIN: f64 = 10.0;

/// Clamped-edge fundamental-mode coefficient, rectangular plate.
pub const RECTANGULAR_CLAMPED_COEFF: f64 = 1.654;

/// Clamped-edge fundamental-mode coefficient, circular plate.
pub const CIRCULAR_CLAMPED_COEFF: f64 = 0.4694;

/// Optical and mechanical properties of the mirror material.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorMaterial {
    /// Real part of the refractive index.
    pub refractive_index: f64,
    /// Imaginary part of the refractive index (extinction coefficient).
    pub extinction: f64,
    /// Young's modulus (Pa).
    pub youngs_modulus: f64,
    /// Mass density (kg/m^3).
    pub density: f64,
    /// Poisson ratio, in [0, 0.5).
    pub poisson_ratio: f64,
    /// Volume per constituent atom (m^3).
    pub atomic_volume: f64,
}

impl MirrorMaterial {
    pub fn validate(&self) -> Result<()> {
        let check = |ok: bool, field: &'static str, reason: String| {
            if ok {
                Ok(())
            } else {
                Err(Error::Validation { field, reason })
            }
        };
        check(
            self.refractive_index > 0.0,
            "material.refractive_index",
            format!("must be > 0, got {}", self.refractive_index),
        )?;
        check(
            self.extinction >= 0.0,
            "material.extinction",
            format!("must be >= 0, got {}", self.extinction),
        )?;
        check(
            self.youngs_modulus > 0.0,
            "material.youngs_modulus",
            format!("must be > 0, got {}", self.youngs_modulus),
        )?;
        check(
            self.density > 0.0,
            "material.density",
            format!("must be > 0, got {}", self.density),
        )?;
        check(
            (0.0..0.5).contains(&self.poisson_ratio),
            "material.poisson_ratio",
            format!("must lie in [0, 0.5), got {}", self.poisson_ratio),
        )?;
        check(
            self.atomic_volume > 0.0,
            "material.atomic_volume",
            format!("must be > 0, got {}", self.atomic_volume),
        )
    }

    /// Complex refractive index `N = n + i kappa`.
    pub fn complex_index(&self) -> Complex64 {
        Complex64::new(self.refractive_index, self.extinction)
    }

    /// Longitudinal sound velocity `C_L = sqrt(E / (rho (1 - nu^2)))` (m/s).
    pub fn sound_velocity(&self) -> f64 {
        (self.youngs_modulus / (self.density * (1.0 - self.poisson_ratio.powi(2)))).sqrt()
    }
}

/// Standard presets. Mechanical constants are ordinary metal values
/// (E ~ 2e11 Pa, rho ~ 8e3 kg/m^3, nu = 0.3), which reproduce the ~10-100 Hz
/// fundamental for a 100 Angstrom x 1 mm plate. Extinction coefficients are
/// typical tabulated values: ~1e-6 in the x-ray band, ~10 for metals in the
/// red.
pub mod presets {
    use super::MirrorMaterial;

    /// Generic metal probed with x-rays (index of refraction essentially 1).
    pub fn metal_xray() -> MirrorMaterial {
        MirrorMaterial {
            refractive_index: 1.0,
            extinction: 1e-6,
            youngs_modulus: 2e11,
            density: 8e3,
            poisson_ratio: 0.3,
            atomic_volume: 1e-29,
        }
    }

    /// Generic metal probed with red light.
    pub fn metal_red() -> MirrorMaterial {
        MirrorMaterial {
            refractive_index: 1.5,
            extinction: 10.0,
            youngs_modulus: 2e11,
            density: 8e3,
            poisson_ratio: 0.3,
            atomic_volume: 1e-29,
        }
    }

    /// Preset lookup by name.
    pub fn by_name(name: &str) -> Option<MirrorMaterial> {
        match name {
            "metal_xray" => Some(metal_xray()),
            "metal_red" => Some(metal_red()),
            _ => None,
        }
    }
}

/// Plate outline; both are clamped at the edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlateShape {
    RectangularClamped,
    CircularClamped,
}

impl PlateShape {
    pub fn coefficient(self) -> f64 {
        match self {
            PlateShape::RectangularClamped => RECTANGULAR_CLAMPED_COEFF,
            PlateShape::CircularClamped => CIRCULAR_CLAMPED_COEFF,
        }
    }
}

/// Mirror plate geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorGeometry {
    /// Thickness h (m).
    pub thickness: f64,
    /// Lateral dimension L (m).
    pub lateral_size: f64,
    pub shape: PlateShape,
}

impl MirrorGeometry {
    pub fn validate(&self) -> Result<()> {
        if self.thickness.is_nan() || self.thickness <= 0.0 {
            return Err(Error::Validation {
                field: "geometry.thickness",
                reason: format!("must be > 0, got {}", self.thickness),
            });
        }
        if self.lateral_size.is_nan() || self.lateral_size <= 0.0 {
            return Err(Error::Validation {
                field: "geometry.lateral_size",
                reason: format!("must be > 0, got {}", self.lateral_size),
            });
        }
        Ok(())
    }

    /// Thin-plate slenderness h/L; flagged when above 0.01.
    pub fn slenderness(&self) -> f64 {
        self.thickness / self.lateral_size
    }
}

/// Detector energy resolution needed to separate non-excitation events:
/// `hbar omega / E_photon`.
pub fn energy_resolution_required(foil: &FoilOscillator, photon: &PhotonProbe) -> f64 {
    constants::HBAR * foil.omega() / photon.energy()
}

/// Verdict on the ground-width condition `sqrt(hbar/(m omega)) >> lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolutionCheck {
    /// `sqrt(hbar / (m omega)) / lambda`.
    pub ratio: f64,
    pub margin: f64,
    pub pass: bool,
}

/// Checks the high-resolution regime at the given margin (>= 1): the
/// ground width must exceed the wavelength by at least `margin`.
pub fn high_resolution_condition(
    foil: &FoilOscillator,
    photon: &PhotonProbe,
    margin: f64,
) -> Result<ResolutionCheck> {
    if !(margin >= 1.0 && margin.is_finite()) {
        return Err(Error::Validation {
            field: "margin",
            reason: format!("must be >= 1, got {margin}"),
        });
    }
    let width = (constants::HBAR / (foil.mass() * foil.omega())).sqrt();
    let ratio = width / photon.wavelength();
    Ok(ResolutionCheck {
        ratio,
        margin,
        pass: ratio >= margin,
    })
}

/// Largest oscillator angular frequency satisfying the ground-width
/// condition at the given margin: `omega_max = hbar / (m (margin lambda)^2)`.
pub fn max_omega_for_resolution(mass: f64, wavelength: f64, margin: f64) -> f64 {
    constants::HBAR / (mass * (margin * wavelength).powi(2))
}

/// Momentum-conservation bound on the energy a photon can deposit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyTransfer {
    /// `2 (hbar k)^2 / m` (J).
    pub energy: f64,
    /// The same bound divided by the maximal allowed level spacing
    /// `hbar^2 / (m lambda^2)`; identically `8 pi^2` whatever the inputs.
    pub ratio_to_spacing_bound: f64,
}

/// Maximum recoil energy transfer and its universal ratio to the spacing
/// bound.
pub fn max_energy_transfer(photon: &PhotonProbe, mass: f64) -> EnergyTransfer {
    let hbar_k = constants::HBAR * photon.wavenumber();
    let energy = 2.0 * hbar_k * hbar_k / mass;
    let spacing_bound = constants::HBAR * constants::HBAR / (mass * photon.wavelength().powi(2));
    EnergyTransfer {
        energy,
        ratio_to_spacing_bound: energy / spacing_bound,
    }
}

/// Normal-incidence boundary reflectance `|(N1 - N2) / (N1 + N2)|^2`
/// between media of complex indices `N1` and `N2`.
pub fn boundary_reflectance(n1: Complex64, n2: Complex64) -> Result<f64> {
    let sum = n1 + n2;
    if sum.norm_sqr() == 0.0 {
        return Err(Error::DegenerateInput(
            "refractive indices sum to zero; reflectance is undefined".into(),
        ));
    }
    Ok(((n1 - n2) / sum).norm_sqr())
}

/// Internal absorption `1 - exp(-2 k kappa x)` over a propagation
/// distance `path` (m) in the material.
pub fn absorption(photon: &PhotonProbe, material: &MirrorMaterial, path: f64) -> f64 {
    debug_assert!(path >= 0.0);
    -(-2.0 * photon.wavenumber() * material.extinction * path).exp_m1()
}

/// Fundamental clamped-plate frequency `coeff * C_L h / L^2` (Hz).
pub fn plate_frequency(material: &MirrorMaterial, geometry: &MirrorGeometry) -> f64 {
    geometry.shape.coefficient() * material.sound_velocity() * geometry.thickness
        / geometry.lateral_size.powi(2)
}

/// Foil thickness bookkeeping from the atom count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoilInventory {
    /// Film thickness `count * atomic_volume / area` (m).
    pub thickness: f64,
    /// Thickness in units of one atomic layer (`cbrt(atomic_volume)`).
    pub atom_layers: f64,
}

/// Thickness and layer count of a foil of `particle_count` atoms of the
/// given atomic volume (m^3) spread over `area` (m^2).
pub fn foil_inventory(particle_count: f64, atomic_volume: f64, area: f64) -> Result<FoilInventory> {
    if !(particle_count > 0.0 && atomic_volume > 0.0 && area > 0.0) {
        return Err(Error::Domain(
            "particle count, atomic volume and area must all be positive".into(),
        ));
    }
    let thickness = particle_count * atomic_volume / area;
    Ok(FoilInventory {
        thickness,
        atom_layers: thickness / atomic_volume.cbrt(),
    })
}

/// Verdict for one feasibility report row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Warn,
    Fail,
    /// Informational figure with no pass criterion.
    Info,
}

impl RowStatus {
    pub fn label(self) -> &'static str {
        match self {
            RowStatus::Pass => "pass",
            RowStatus::Warn => "warn",
            RowStatus::Fail => "fail",
            RowStatus::Info => "info",
        }
    }
}

/// One checked condition: name, figure, threshold it was compared against
/// (absent for informational rows), verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionRow {
    pub name: &'static str,
    pub value: f64,
    pub threshold: Option<f64>,
    pub status: RowStatus,
}

/// Everything the combined report needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityInputs {
    pub foil: FoilOscillator,
    pub photon: PhotonProbe,
    pub material: MirrorMaterial,
    pub geometry: MirrorGeometry,
    /// Complex index of the medium surrounding the mirror.
    pub surrounding_index: Complex64,
    /// Margin applied to ">>" conditions.
    pub margin: f64,
}

/// Absorption verdict thresholds: negligible below 1%, serious above 50%.
pub const ABSORPTION_PASS_BELOW: f64 = 0.01;
/// See [`ABSORPTION_PASS_BELOW`].
pub const ABSORPTION_FAIL_AT: f64 = 0.5;

/// Builds the combined feasibility report: one row per checked condition,
/// in a fixed order suitable for text and CSV rendering.
pub fn feasibility_report(inputs: &FeasibilityInputs) -> Result<Vec<ConditionRow>> {
    inputs.material.validate()?;
    inputs.geometry.validate()?;
    let mut rows = Vec::new();

    let res = high_resolution_condition(&inputs.foil, &inputs.photon, inputs.margin)?;
    rows.push(ConditionRow {
        name: "ground_width_over_wavelength",
        value: res.ratio,
        threshold: Some(res.margin),
        status: if res.pass { RowStatus::Pass } else { RowStatus::Fail },
    });

    rows.push(ConditionRow {
        name: "energy_resolution_required",
        value: energy_resolution_required(&inputs.foil, &inputs.photon),
        threshold: None,
        status: RowStatus::Info,
    });

    let transfer = max_energy_transfer(&inputs.photon, inputs.foil.mass());
    rows.push(ConditionRow {
        name: "max_energy_transfer_hz",
        value: transfer.energy / (2.0 * PI * constants::HBAR),
        threshold: None,
        status: RowStatus::Info,
    });
    rows.push(ConditionRow {
        name: "transfer_to_spacing_ratio",
        value: transfer.ratio_to_spacing_bound,
        threshold: None,
        status: RowStatus::Info,
    });

    let reflectance = boundary_reflectance(inputs.material.complex_index(), inputs.surrounding_index)?;
    rows.push(ConditionRow {
        name: "boundary_reflectance",
        value: reflectance,
        threshold: Some(0.0),
        // an index-matched mirror cannot reflect at all
        status: if reflectance > 0.0 { RowStatus::Pass } else { RowStatus::Fail },
    });

    let abs = absorption(&inputs.photon, &inputs.material, inputs.geometry.thickness);
    rows.push(ConditionRow {
        name: "absorption",
        value: abs,
        threshold: Some(ABSORPTION_PASS_BELOW),
        status: if abs < ABSORPTION_PASS_BELOW {
            RowStatus::Pass
        } else if abs < ABSORPTION_FAIL_AT {
            RowStatus::Warn
        } else {
            RowStatus::Fail
        },
    });

    let f_plate = plate_frequency(&inputs.material, &inputs.geometry);
    rows.push(ConditionRow {
        name: "plate_frequency_hz",
        value: f_plate,
        threshold: None,
        status: RowStatus::Info,
    });
    let f_requested = inputs.foil.omega() / (2.0 * PI);
    let f_ratio = f_plate / f_requested;
    rows.push(ConditionRow {
        name: "plate_over_requested_frequency",
        value: f_ratio,
        threshold: Some(1.0),
        status: if (0.5..=2.0).contains(&f_ratio) {
            RowStatus::Pass
        } else if (0.1..=10.0).contains(&f_ratio) {
            RowStatus::Warn
        } else {
            RowStatus::Fail
        },
    });

    let area = inputs.geometry.lateral_size.powi(2);
    let inventory = foil_inventory(
        inputs.foil.particle_count(),
        inputs.material.atomic_volume,
        area,
    )?;
    rows.push(ConditionRow {
        name: "foil_thickness_m",
        value: inventory.thickness,
        threshold: None,
        status: RowStatus::Info,
    });
    rows.push(ConditionRow {
        name: "foil_atom_layers",
        value: inventory.atom_layers,
        threshold: None,
        status: RowStatus::Info,
    });

    let slenderness = inputs.geometry.slenderness();
    rows.push(ConditionRow {
        name: "slenderness_h_over_l",
        value: slenderness,
        threshold: Some(0.01),
        status: if slenderness <= 0.01 { RowStatus::Pass } else { RowStatus::Warn },
    });

    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn xray() -> PhotonProbe {
        PhotonProbe::new(constants::wavelength_from_nm(0.1)).unwrap()
    }

    fn red() -> PhotonProbe {
        PhotonProbe::new(constants::wavelength_from_nm(700.0)).unwrap()
    }

    #[test]
    fn energy_resolution_reference_point() {
        // omega = 1e5 rad/s with a 0.1 nm photon -> ~5.3e-15
        let foil = FoilOscillator::new(1e-19, 1e5).unwrap();
        let r = energy_resolution_required(&foil, &xray());
        assert_relative_eq!(r, 5.31e-15, max_relative = 1e-2);
        // linear in omega
        let foil2 = FoilOscillator::new(1e-19, 2e5).unwrap();
        assert_relative_eq!(
            energy_resolution_required(&foil2, &xray()),
            2.0 * r,
            max_relative = 1e-12
        );
    }

    #[test]
    fn high_resolution_boundary_cases() {
        // m omega = 1e-16: ratio ~ 10.3 -> pass at margin 10
        let foil = FoilOscillator::new(1e-19, 1e3).unwrap();
        let check = high_resolution_condition(&foil, &xray(), DEFAULT_MARGIN).unwrap();
        assert_relative_eq!(check.ratio, 10.27, max_relative = 1e-2);
        assert!(check.pass);
        // m omega = 1e-14: ratio ~ 1 -> fail
        let foil = FoilOscillator::new(1e-19, 1e5).unwrap();
        let check = high_resolution_condition(&foil, &xray(), DEFAULT_MARGIN).unwrap();
        assert_relative_eq!(check.ratio, 1.027, max_relative = 1e-2);
        assert!(!check.pass);
        // shrinking the wavelength always passes eventually
        let tiny = PhotonProbe::new(1e-15).unwrap();
        assert!(high_resolution_condition(&foil, &tiny, DEFAULT_MARGIN)
            .unwrap()
            .pass);
        assert!(high_resolution_condition(&foil, &xray(), 0.5).is_err());
    }

    #[test]
    fn max_omega_inverts_the_condition() {
        let mass = 1e-19;
        let omega = max_omega_for_resolution(mass, 1e-10, DEFAULT_MARGIN);
        let foil = FoilOscillator::new(mass, omega).unwrap();
        let check = high_resolution_condition(&foil, &xray(), DEFAULT_MARGIN).unwrap();
        assert_relative_eq!(check.ratio, DEFAULT_MARGIN, max_relative = 1e-12);
    }

    #[test]
    fn transfer_reference_point_and_universal_ratio() {
        // 1e8 nucleons, x-ray: ~8e5 Hz equivalent
        let mass = constants::mass_from_particles(1e8);
        let t = max_energy_transfer(&xray(), mass);
        let as_hz = t.energy / (2.0 * PI * constants::HBAR);
        assert!((as_hz - 8e5).abs() / 8e5 < 0.2, "as_hz = {as_hz:e}");
        assert_relative_eq!(t.ratio_to_spacing_bound, 8.0 * PI * PI, max_relative = 1e-12);
        // heavier mirror, smaller transfer
        let t2 = max_energy_transfer(&xray(), 1e3 * mass);
        assert_relative_eq!(t2.energy, t.energy / 1e3, max_relative = 1e-12);
        assert_relative_eq!(t2.ratio_to_spacing_bound, 8.0 * PI * PI, max_relative = 1e-12);
    }

    #[test]
    fn reflectance_reference_points() {
        let n15 = Complex64::new(1.5, 0.0);
        let n10 = Complex64::new(1.0, 0.0);
        assert_relative_eq!(
            boundary_reflectance(n15, n10).unwrap(),
            0.04,
            max_relative = 1e-12
        );
        // index-matched: no reflection
        assert_eq!(boundary_reflectance(n15, n15).unwrap(), 0.0);
        // symmetric under swap
        let a = Complex64::new(2.3, 0.7);
        let b = Complex64::new(1.1, 0.01);
        assert_relative_eq!(
            boundary_reflectance(a, b).unwrap(),
            boundary_reflectance(b, a).unwrap(),
            max_relative = 1e-14
        );
        assert!(boundary_reflectance(n15, -n15).is_err());
    }

    #[test]
    fn absorption_reference_points() {
        let path = 1e-8; // 100 Angstrom
        let xray_abs = absorption(&xray(), &presets::metal_xray(), path);
        assert!(xray_abs < 0.01, "x-ray absorption {xray_abs}");
        assert_relative_eq!(xray_abs, 1.26e-3, max_relative = 2e-2);
        let red_abs = absorption(&red(), &presets::metal_red(), path);
        assert!(red_abs > 0.5, "red absorption {red_abs}");
        assert_relative_eq!(red_abs, 0.834, max_relative = 2e-2);
        assert_eq!(absorption(&xray(), &presets::metal_xray(), 0.0), 0.0);
    }

    #[test]
    fn plate_frequency_reference_point_and_scaling() {
        let material = presets::metal_xray();
        let geometry = MirrorGeometry {
            thickness: 1e-8,
            lateral_size: 1e-3,
            shape: PlateShape::RectangularClamped,
        };
        let f = plate_frequency(&material, &geometry);
        assert_relative_eq!(f, 86.7, max_relative = 1e-2);
        assert!((10.0..=100.0).contains(&f));
        // doubling h doubles f; doubling L quarters f
        let thick = MirrorGeometry {
            thickness: 2e-8,
            ..geometry
        };
        assert_relative_eq!(plate_frequency(&material, &thick), 2.0 * f, max_relative = 1e-12);
        let wide = MirrorGeometry {
            lateral_size: 2e-3,
            ..geometry
        };
        assert_relative_eq!(plate_frequency(&material, &wide), f / 4.0, max_relative = 1e-12);
        // circular/rectangular ratio is the coefficient ratio
        let circular = MirrorGeometry {
            shape: PlateShape::CircularClamped,
            ..geometry
        };
        assert_relative_eq!(
            plate_frequency(&material, &circular) / f,
            CIRCULAR_CLAMPED_COEFF / RECTANGULAR_CLAMPED_COEFF,
            max_relative = 1e-12
        );
    }

    #[test]
    fn inventory_layer_counts() {
        // atoms the size of a 10 Angstrom cube on a 1 mm^2 mirror
        let volume = 1e-27;
        let inv = foil_inventory(1e15, volume, 1e-6).unwrap();
        assert_relative_eq!(inv.atom_layers, 1000.0, max_relative = 1e-12);
        let inv = foil_inventory(1e13, volume, 1e-6).unwrap();
        assert_relative_eq!(inv.atom_layers, 10.0, max_relative = 1e-12);
        assert_relative_eq!(inv.thickness, 1e-8, max_relative = 1e-12);
        assert!(foil_inventory(1e13, volume, 0.0).is_err());
    }

    #[test]
    fn absorption_monotonicity() {
        let material = presets::metal_xray();
        let a1 = absorption(&xray(), &material, 1e-8);
        let a2 = absorption(&xray(), &material, 2e-8);
        assert!(a2 > a1);
        let mut thicker_kappa = material;
        thicker_kappa.extinction *= 3.0;
        assert!(absorption(&xray(), &thicker_kappa, 1e-8) > a1);
        assert!(absorption(&red(), &material, 1e-8) < a1); // smaller k
    }

    #[test]
    fn material_validation() {
        let mut m = presets::metal_xray();
        assert!(m.validate().is_ok());
        m.poisson_ratio = 0.5;
        assert!(m.validate().is_err());
        m.poisson_ratio = 0.3;
        m.density = 0.0;
        assert!(m.validate().is_err());
    }

    #[test]
    fn combined_report_for_the_worked_xray_design() {
        let foil = FoilOscillator::from_particles(1e15, constants::omega_from_hz(87.0)).unwrap();
        let inputs = FeasibilityInputs {
            foil,
            photon: xray(),
            material: presets::metal_xray(),
            geometry: MirrorGeometry {
                thickness: 1e-8,
                lateral_size: 1e-3,
                shape: PlateShape::RectangularClamped,
            },
            surrounding_index: Complex64::new(1.5, 0.0),
            margin: DEFAULT_MARGIN,
        };
        let rows = feasibility_report(&inputs).unwrap();
        let get = |name: &str| rows.iter().find(|r| r.name == name).unwrap();
        assert!((10.0..=100.0).contains(&get("plate_frequency_hz").value));
        assert_eq!(get("absorption").status, RowStatus::Pass);
        assert_eq!(get("plate_over_requested_frequency").status, RowStatus::Pass);
        assert_eq!(get("slenderness_h_over_l").status, RowStatus::Pass);
        assert_relative_eq!(
            get("transfer_to_spacing_ratio").value,
            8.0 * PI * PI,
            max_relative = 1e-12
        );
    }

    #[test]
    fn red_preset_report_flags_absorption() {
        let foil = FoilOscillator::from_particles(1e15, constants::omega_from_hz(87.0)).unwrap();
        let inputs = FeasibilityInputs {
            foil,
            photon: red(),
            material: presets::metal_red(),
            geometry: MirrorGeometry {
                thickness: 1e-8,
                lateral_size: 1e-3,
                shape: PlateShape::RectangularClamped,
            },
            surrounding_index: Complex64::new(1.0, 0.0),
            margin: DEFAULT_MARGIN,
        };
        let rows = feasibility_report(&inputs).unwrap();
        let abs = rows.iter().find(|r| r.name == "absorption").unwrap();
        assert_eq!(abs.status, RowStatus::Fail);
        assert!(abs.value > 0.5);
    }
}
