//! Physical constants and unit conventions.
//!
//! Source: CODATA 2018 recommended values (Tiesinga et al., Rev. Mod. Phys.
//! 93, 025010 (2021)), truncated to the precision used throughout.
//!
//! Everything inside this workspace is SI: meters, kilograms, seconds,
//! joules, radians per second for angular frequencies. Convenience units
//! (nm, Hz, particle counts) are converted exactly once, at the CLI
//! boundary, through the helpers below. Every numeric module obtains its
//! constants from here and nowhere else.

/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054_571_8e-34;

/// Speed of light in vacuum (m/s). Exact by definition.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Average nucleon mass (kg); used to convert particle counts to foil mass.
pub const NUCLEON_MASS: f64 = 1.672_62e-27;

/// Vacuum permittivity (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Fixed table of the constants above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Speed of light (m/s).
    pub c: f64,
    /// Average nucleon mass (kg).
    pub nucleon_mass: f64,
    /// Vacuum permittivity (F/m).
    pub vacuum_permittivity: f64,
}

/// Returns the fixed constant table. Values never change at run time.
pub const fn constants() -> PhysicalConstants {
    PhysicalConstants {
        hbar: HBAR,
        c: SPEED_OF_LIGHT,
        nucleon_mass: NUCLEON_MASS,
        vacuum_permittivity: VACUUM_PERMITTIVITY,
    }
}

/// Wavelength in meters from nanometers.
pub fn wavelength_from_nm(nm: f64) -> f64 {
    nm * 1e-9
}

/// Angular frequency (rad/s) from an ordinary frequency in Hz.
pub fn omega_from_hz(hz: f64) -> f64 {
    2.0 * std::f64::consts::PI * hz
}

/// Foil mass (kg) from a nucleon count.
pub fn mass_from_particles(count: f64) -> f64 {
    count * NUCLEON_MASS
}
