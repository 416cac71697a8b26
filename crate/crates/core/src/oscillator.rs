//! Quantum harmonic oscillator description of the foil's center-of-mass
//! mode.
//!
//! The foil is a two-sided mirror bound in a harmonic trap. Reflecting a
//! photon of wavenumber `k` transfers wavenumber `k_transfer = 2k`, split
//! into a symmetric (cosine) and an antisymmetric (sine) kick. The matrix
//! elements `<n|cos(k_transfer x)|0>` and `<n|sin(k_transfer x)|0>` carry
//! the whole scattering problem; this module provides them in closed form
//! via ladder operators and, independently, by adaptive quadrature over
//! explicitly evaluated Hermite functions.
//!
//! The single dimensionless knob is the Lamb-Dicke parameter
//! `eta = k_transfer * sqrt(hbar / (2 m omega))`.

use crate::constants;
use crate::error::{Error, Result};
use crate::quadrature::adaptive_simpson;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use std::f64::consts::PI;

/// Spatial parity of a state or kick component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Even under reflection about the symmetry axis.
    Even,
    /// Odd under reflection about the symmetry axis.
    Odd,
}

impl Parity {
    /// Parity of oscillator level `n`.
    pub fn of_level(n: u32) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    /// Label used in CSV output.
    pub fn label(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Harmonically bound center-of-mass mode of the mirror foil.
///
/// Mass and angular frequency are SI (kg, rad/s). `level` is the occupied
/// state; scattering always starts from the ground state, but the width
/// formula supports excited levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoilOscillator {
    mass: f64,
    omega: f64,
    particles: f64,
    level: u32,
}

impl FoilOscillator {
    /// Oscillator of the given mass (kg) and angular frequency (rad/s).
    pub fn new(mass: f64, omega: f64) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::Domain(format!("foil mass must be positive, got {mass}")));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::Domain(format!(
                "foil angular frequency must be positive, got {omega}"
            )));
        }
        Ok(Self {
            mass,
            omega,
            particles: mass / constants::NUCLEON_MASS,
            level: 0,
        })
    }

    /// Oscillator specified by nucleon count instead of mass.
    pub fn from_particles(count: f64, omega: f64) -> Result<Self> {
        if !(count >= 1.0 && count.is_finite()) {
            return Err(Error::Domain(format!(
                "particle count must be >= 1, got {count}"
            )));
        }
        let mut foil = Self::new(constants::mass_from_particles(count), omega)?;
        foil.particles = count;
        Ok(foil)
    }

    /// Same oscillator occupying level `n`.
    pub fn with_level(mut self, level: u32) -> Self {
        self.level = level;
        self
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Nucleon count (exact when constructed via [`Self::from_particles`]).
    pub fn particle_count(&self) -> f64 {
        self.particles
    }

    /// Ground-state position variance `<x^2>_0 = hbar / (2 m omega)` (m^2).
    pub fn ground_variance(&self) -> f64 {
        constants::HBAR / (2.0 * self.mass * self.omega)
    }

    /// RMS ground-state position spread `sqrt(<x^2>_0)` (m).
    pub fn ground_rms(&self) -> f64 {
        self.ground_variance().sqrt()
    }

    /// Width `W(n) = sqrt(hbar (n + 1/2) / (m omega / 2))` of the occupied
    /// level; differs from [`Self::ground_rms`] by exactly `sqrt(2)` at
    /// `n = 0`.
    pub fn width(&self) -> f64 {
        2.0 * (self.level as f64 + 0.5).sqrt() * self.ground_rms()
    }

    /// Lamb-Dicke parameter `eta = k_transfer * sqrt(hbar / (2 m omega))`.
    pub fn lamb_dicke(&self, kick: &KickSpec) -> f64 {
        kick.k_transfer() * self.ground_rms()
    }

    /// Ground-state probability density `f(x) = (a/sqrt(pi)) exp(-a^2 x^2)`
    /// with `a = sqrt(m omega / hbar)` (1/m). Only the ground level carries
    /// a density here; excited levels are rejected.
    pub fn ground_density(&self, x: f64) -> Result<f64> {
        self.require_ground("ground_density is defined for the ground state only")?;
        let a = 1.0 / (constants::HBAR / (self.mass * self.omega)).sqrt();
        Ok(a / PI.sqrt() * (-(a * x).powi(2)).exp())
    }

    /// Draws a position from the ground-state density: Gaussian with mean 0
    /// and variance `hbar / (2 m omega)`.
    pub fn sample_position<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<f64> {
        self.require_ground("position sampling is defined for the ground state only")?;
        let normal = Normal::new(0.0, self.ground_rms())
            .expect("ground_rms is positive and finite by construction");
        Ok(normal.sample(rng))
    }

    fn require_ground(&self, reason: &'static str) -> Result<()> {
        if self.level != 0 {
            return Err(Error::UnsupportedLevel {
                level: self.level,
                reason,
            });
        }
        Ok(())
    }
}

/// Momentum kick delivered by a reflected photon, split by parity.
///
/// `k_transfer` is the wavenumber change of the photon (1/m); for elastic
/// reflection it equals twice the photon wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KickSpec {
    k_transfer: f64,
    parity: Parity,
}

impl KickSpec {
    pub fn new(k_transfer: f64, parity: Parity) -> Result<Self> {
        if !(k_transfer >= 0.0 && k_transfer.is_finite()) {
            return Err(Error::Domain(format!(
                "kick wavenumber transfer must be >= 0, got {k_transfer}"
            )));
        }
        Ok(Self { k_transfer, parity })
    }

    /// Kick from elastic reflection of a photon with wavenumber `k`:
    /// `k_transfer = 2k`.
    pub fn elastic_reflection(wavenumber: f64, parity: Parity) -> Result<Self> {
        Self::new(2.0 * wavenumber, parity)
    }

    pub fn k_transfer(&self) -> f64 {
        self.k_transfer
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

/// Exact kick matrix element `<n|cos(k x)|0>` (symmetric) or
/// `<n|sin(k x)|0>` (antisymmetric) as a function of the Lamb-Dicke
/// parameter, from the ladder-operator closed form
/// `<n|exp(i eta (a + a^dag))|0> = exp(-eta^2/2) (i eta)^n / sqrt(n!)`.
///
/// The cosine element is nonzero only for even `n`, the sine element only
/// for odd `n`; the surviving magnitude is `exp(-eta^2/2) eta^n / sqrt(n!)`
/// with sign `(-1)^(n/2)`. Evaluated in log space so that large `n` neither
/// overflows `n!` nor underflows prematurely.
pub fn kick_matrix_element(n: u32, eta: f64, parity: Parity) -> Result<f64> {
    if !(eta >= 0.0 && eta.is_finite()) {
        return Err(Error::Domain(format!(
            "Lamb-Dicke parameter must be >= 0, got {eta}"
        )));
    }
    if Parity::of_level(n) != parity {
        return Ok(0.0);
    }
    let sign = if (n / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    if n == 0 {
        return Ok(sign * (-eta * eta / 2.0).exp());
    }
    if eta == 0.0 {
        return Ok(0.0);
    }
    let log_mag = -eta * eta / 2.0 + n as f64 * eta.ln() - 0.5 * ln_factorial(n);
    Ok(sign * log_mag.exp())
}

fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Oscillator level distribution after one elastic reflection: the squared
/// elements form a Poisson distribution with mean `eta^2` over all levels
/// (both parities combined). Sampled by inverting the CDF term by term,
/// which is exact and handles `eta = 0` (always level 0).
pub fn sample_level_after_kick<R: Rng + ?Sized>(eta: f64, rng: &mut R) -> u32 {
    let lambda = eta * eta;
    let u: f64 = rng.random();
    let mut p = (-lambda).exp();
    let mut cdf = p;
    let mut n = 0u32;
    while u >= cdf {
        n += 1;
        p *= lambda / n as f64;
        cdf += p;
        if n > 100_000 {
            break; // unreachable for any eta of interest; guards infinite loop
        }
    }
    n
}

/// Normalized harmonic-oscillator eigenfunction `h_n` in the dimensionless
/// coordinate `xi = x / sqrt(hbar / (m omega))`, evaluated by the stable
/// normalized three-term recurrence
/// `h_{k+1} = sqrt(2/(k+1)) xi h_k - sqrt(k/(k+1)) h_{k-1}`.
///
/// Raw Hermite polynomials overflow near `n = 150`; the normalized form
/// stays O(1) up to the levels used here.
pub fn hermite_function(n: u32, xi: f64) -> f64 {
    let h0 = PI.powf(-0.25) * (-xi * xi / 2.0).exp();
    if n == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = std::f64::consts::SQRT_2 * xi * h0;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * xi * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Maximum level accepted by the quadrature oracle.
pub const ORACLE_MAX_LEVEL: u32 = 200;

/// Error budget the oracle must meet; exceeding it is an error, not a
/// silently degraded result.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Independent quadrature oracle for [`kick_matrix_element`]: evaluates
/// `int Psi_n(x) trig(k_transfer x) Psi_0(x) dx` directly with explicit
/// Hermite functions and adaptive Simpson quadrature, never touching the
/// ladder-operator form.
pub fn kick_matrix_element_numeric(n: u32, foil: &FoilOscillator, kick: &KickSpec) -> Result<f64> {
    if n > ORACLE_MAX_LEVEL {
        return Err(Error::Domain(format!(
            "oracle supports levels up to {ORACLE_MAX_LEVEL}, got {n}"
        )));
    }
    // In xi units the kick argument is k_transfer * x = sqrt(2) eta xi.
    let scaled_kick = std::f64::consts::SQRT_2 * foil.lamb_dicke(kick);
    let parity = kick.parity();
    let integrand = move |xi: f64| {
        let trig = match parity {
            Parity::Even => (scaled_kick * xi).cos(),
            Parity::Odd => (scaled_kick * xi).sin(),
        };
        hermite_function(n, xi) * hermite_function(0, xi) * trig
    };
    // h_0 cuts the integrand below 1e-30 past |xi| ~ 12 for every level.
    let q = adaptive_simpson(&integrand, -12.0, 12.0, 1e-12);
    if q.error_estimate > ORACLE_TOLERANCE {
        return Err(Error::QuadratureAccuracy {
            estimate: q.error_estimate,
            tolerance: ORACLE_TOLERANCE,
        });
    }
    Ok(q.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::derive_rng;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn foil_1e15_particles(freq_hz: f64) -> FoilOscillator {
        FoilOscillator::from_particles(1e15, constants::omega_from_hz(freq_hz)).unwrap()
    }

    #[test]
    fn rejects_invalid_inputs() {
        assert!(FoilOscillator::new(-1.0, 1.0).is_err());
        assert!(FoilOscillator::new(1.0, 0.0).is_err());
        assert!(FoilOscillator::from_particles(0.5, 1.0).is_err());
        assert!(KickSpec::new(-1.0, Parity::Even).is_err());
    }

    #[test]
    fn width_is_sqrt2_times_ground_rms() {
        let foil = foil_1e15_particles(10.0);
        assert_eq!(foil.width(), std::f64::consts::SQRT_2 * foil.ground_rms());
        // occupied levels widen the state
        let excited = foil.with_level(3);
        assert!(excited.width() > foil.width());
        assert_relative_eq!(
            excited.width(),
            (2.0 * constants::HBAR * 3.5 / (foil.mass() * foil.omega())).sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn lamb_dicke_xray_matches_frequency_relation() {
        // 1e15 nucleons at 12.6 Hz probed by a 0.1 nm photon. The coarse
        // one-digit relation f = 0.1 / eta^2 Hz predicts eta = 0.089; the
        // exact coefficient is 4 pi hbar / (lambda^2 m) = 0.0792, so direct
        // evaluation gives eta = 0.0793.
        let foil = foil_1e15_particles(12.6);
        let lambda = constants::wavelength_from_nm(0.1);
        let kick = KickSpec::elastic_reflection(2.0 * PI / lambda, Parity::Even).unwrap();
        let eta = foil.lamb_dicke(&kick);
        assert_relative_eq!(eta, 0.0793, max_relative = 2e-3);
        let eta_coarse = (0.1f64 / 12.6).sqrt();
        assert!((eta - eta_coarse).abs() / eta_coarse < 0.15);
        // exact identity behind the relation: f * eta^2 = 4 pi hbar / (lambda^2 m)
        let coeff = 4.0 * PI * constants::HBAR / (lambda * lambda * foil.mass());
        assert_relative_eq!(12.6 * eta * eta, coeff, max_relative = 1e-12);
    }

    #[test]
    fn lamb_dicke_zero_transfer() {
        let foil = foil_1e15_particles(10.0);
        let kick = KickSpec::new(0.0, Parity::Even).unwrap();
        assert_eq!(foil.lamb_dicke(&kick), 0.0);
    }

    #[test]
    fn lamb_dicke_red_light_coefficient_round_trip() {
        // For red light on 1e15 nucleons the one-digit relation is
        // f = 1e-9 / eta^2 Hz. Fixing f from that relation and re-deriving
        // eta directly must land within the coefficient's rounding (the
        // exact coefficient is 1.617e-9).
        let lambda = constants::wavelength_from_nm(700.0);
        let eta_target = 0.5;
        let f = 1e-9 / (eta_target * eta_target);
        let foil = foil_1e15_particles(f);
        let kick = KickSpec::elastic_reflection(2.0 * PI / lambda, Parity::Even).unwrap();
        let eta = foil.lamb_dicke(&kick);
        let coeff = 4.0 * PI * constants::HBAR / (lambda * lambda * foil.mass());
        // one-significant-figure coefficient: within a factor of 2
        assert!(coeff / 1e-9 > 0.5 && coeff / 1e-9 < 2.0, "coeff = {coeff:e}");
        // exact round trip through the exact coefficient
        assert_relative_eq!(eta, eta_target * (coeff / 1e-9).sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn lamb_dicke_depends_only_on_mass_omega_product() {
        let kick = KickSpec::new(1e10, Parity::Even).unwrap();
        let a = FoilOscillator::new(1e-12, 100.0).unwrap();
        let b = FoilOscillator::new(1e-10, 1.0).unwrap();
        assert_relative_eq!(a.lamb_dicke(&kick), b.lamb_dicke(&kick), max_relative = 1e-14);
    }

    #[test]
    fn ground_density_normalization_and_moment() {
        let foil = foil_1e15_particles(10.0);
        let a = 1.0 / (constants::HBAR / (foil.mass() * foil.omega())).sqrt();
        assert_relative_eq!(
            foil.ground_density(0.0).unwrap(),
            a / PI.sqrt(),
            max_relative = 1e-14
        );
        let lim = 10.0 / a;
        let norm = adaptive_simpson(&|x| foil.ground_density(x).unwrap(), -lim, lim, 1e-13);
        assert_abs_diff_eq!(norm.value, 1.0, epsilon = 1e-10);
        let second = adaptive_simpson(
            &|x| x * x * foil.ground_density(x).unwrap(),
            -lim,
            lim,
            1e-16,
        );
        assert_relative_eq!(second.value, foil.ground_variance(), max_relative = 1e-9);
    }

    #[test]
    fn ground_density_rejects_excited_level() {
        let foil = foil_1e15_particles(10.0).with_level(1);
        assert!(matches!(
            foil.ground_density(0.0),
            Err(Error::UnsupportedLevel { level: 1, .. })
        ));
        let mut rng = derive_rng(1, 0);
        assert!(foil.sample_position(&mut rng).is_err());
    }

    #[test]
    fn parity_selection_is_exact() {
        for eta in [0.05, 0.3, 1.0, 2.5] {
            assert_eq!(kick_matrix_element(1, eta, Parity::Even).unwrap(), 0.0);
            assert_eq!(kick_matrix_element(3, eta, Parity::Even).unwrap(), 0.0);
            assert_eq!(kick_matrix_element(2, eta, Parity::Odd).unwrap(), 0.0);
            assert_eq!(kick_matrix_element(0, eta, Parity::Odd).unwrap(), 0.0);
        }
    }

    #[test]
    fn elastic_element_at_unit_eta() {
        let amp = kick_matrix_element(0, 1.0, Parity::Even).unwrap();
        assert_relative_eq!(amp, (-0.5f64).exp(), max_relative = 1e-14);
    }

    #[test]
    fn identity_kick_leaves_ground_state() {
        assert_eq!(kick_matrix_element(0, 0.0, Parity::Even).unwrap(), 1.0);
        assert_eq!(kick_matrix_element(2, 0.0, Parity::Even).unwrap(), 0.0);
    }

    #[test]
    fn rejects_negative_eta() {
        assert!(kick_matrix_element(0, -0.1, Parity::Even).is_err());
    }

    #[test]
    fn log_space_evaluation_survives_large_levels() {
        // direct eta^n / sqrt(n!) would overflow n! at n = 171
        let amp = kick_matrix_element(200, 2.5, Parity::Even).unwrap();
        assert!(amp.is_finite());
        assert!(amp.abs() < 1e-60);
    }

    #[test]
    fn numeric_oracle_identity_kick() {
        let foil = foil_1e15_particles(10.0);
        let kick = KickSpec::new(0.0, Parity::Even).unwrap();
        let v = kick_matrix_element_numeric(0, &foil, &kick).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn numeric_oracle_matches_closed_form_spot_checks() {
        let foil = foil_1e15_particles(10.0);
        let lambda = 4.0 * PI * foil.ground_rms() / 1.0; // eta = 1 at this wavelength
        let k = 2.0 * PI / lambda;
        for (n, parity) in [(0, Parity::Even), (1, Parity::Odd), (2, Parity::Even), (7, Parity::Odd)] {
            let kick = KickSpec::elastic_reflection(k, parity).unwrap();
            let eta = foil.lamb_dicke(&kick);
            let exact = kick_matrix_element(n, eta, parity).unwrap();
            let numeric = kick_matrix_element_numeric(n, &foil, &kick).unwrap();
            assert_abs_diff_eq!(numeric, exact, epsilon = 1e-9);
        }
    }

    #[test]
    fn numeric_oracle_completeness_sum() {
        // sum of squared quadrature elements over both parities; the level
        // distribution is Poisson with mean eta^2 = 1, so levels past 40
        // contribute < 1e-40. The 1e-8 budget covers ~80 accumulated
        // quadrature errors of <= 1e-9 each; the closed-form sum is checked
        // at 1e-9 with n_max = 200 in the acceptance suite.
        let foil = foil_1e15_particles(10.0);
        let lambda = 4.0 * PI * foil.ground_rms(); // eta = 1
        let k = 2.0 * PI / lambda;
        let mut sum = 0.0;
        for n in 0..=40u32 {
            for parity in [Parity::Even, Parity::Odd] {
                let kick = KickSpec::elastic_reflection(k, parity).unwrap();
                let amp = kick_matrix_element_numeric(n, &foil, &kick).unwrap();
                sum += amp * amp;
            }
        }
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn numeric_oracle_rejects_levels_beyond_cap() {
        let foil = foil_1e15_particles(10.0);
        let kick = KickSpec::new(0.0, Parity::Even).unwrap();
        assert!(kick_matrix_element_numeric(ORACLE_MAX_LEVEL + 1, &foil, &kick).is_err());
    }

    #[test]
    fn hermite_functions_are_orthonormal_spot_checks() {
        for (m, n) in [(0u32, 0u32), (3, 3), (17, 17), (0, 2), (5, 9)] {
            let q = adaptive_simpson(
                &|xi| hermite_function(m, xi) * hermite_function(n, xi),
                -12.0,
                12.0,
                1e-12,
            );
            let expected = if m == n { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(q.value, expected, epsilon = 1e-10);
        }
    }

    #[test]
    fn position_sampling_statistics() {
        let foil = foil_1e15_particles(10.0);
        let mut rng = derive_rng(0xfeed, 0);
        let n = 1_000_000usize;
        let sigma = foil.ground_rms();
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            let x = foil.sample_position(&mut rng).unwrap();
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        // 5 sigma of the standard error of the mean and of the variance
        let mean_tol = 5.0 * sigma / (n as f64).sqrt();
        assert!(mean.abs() < mean_tol, "mean {mean:e} vs tol {mean_tol:e}");
        let var_tol = 5.0 * foil.ground_variance() * (2.0 / n as f64).sqrt();
        assert!(
            (var - foil.ground_variance()).abs() < var_tol,
            "var {var:e} vs {:e}",
            foil.ground_variance()
        );
    }

    #[test]
    fn position_sampling_is_reproducible() {
        let foil = foil_1e15_particles(10.0);
        let draw = |seed, stream| {
            let mut rng = derive_rng(seed, stream);
            (0..32)
                .map(|_| foil.sample_position(&mut rng).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(9, 4), draw(9, 4));
        assert_ne!(draw(9, 4), draw(9, 5));
    }

    #[test]
    fn level_sampling_matches_poisson_weights() {
        let eta: f64 = 0.8;
        let lambda = eta * eta;
        let mut rng = derive_rng(0xabc, 0);
        let n = 200_000usize;
        let mut counts = [0u32; 8];
        for _ in 0..n {
            let level = sample_level_after_kick(eta, &mut rng);
            if (level as usize) < counts.len() {
                counts[level as usize] += 1;
            }
        }
        let mut weight = (-lambda).exp();
        for (k, &c) in counts.iter().enumerate() {
            let expected = weight * n as f64;
            let tol = 5.0 * (expected.max(1.0)).sqrt();
            assert!(
                ((c as f64) - expected).abs() < tol,
                "level {k}: {c} vs {expected}"
            );
            weight *= lambda / (k as f64 + 1.0);
        }
    }

    #[test]
    fn level_sampling_at_zero_eta_is_always_ground() {
        let mut rng = derive_rng(3, 3);
        for _ in 0..1000 {
            assert_eq!(sample_level_after_kick(0.0, &mut rng), 0);
        }
    }
}
