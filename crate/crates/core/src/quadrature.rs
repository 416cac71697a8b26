//! Adaptive quadrature used by the numerical oracles.
//!
//! Plain adaptive Simpson with Richardson error control. The oracles only
//! ever integrate smooth, exponentially decaying integrands over finite
//! windows, where this converges quickly and the accumulated |S2 - S1|/15
//! estimate is reliable.

/// Integral value together with the accumulated error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
}

/// Integrates `f` over `[a, b]`, subdividing until each panel meets its
/// share of `tol`. Depth is capped; the returned estimate reflects any
/// panels that hit the cap, so callers can judge the result.
///
/// The interval is pre-split into fixed panels before any adaptivity, so
/// an integrand whose structure happens to vanish at the coarse sample
/// points (e.g. an odd-node eigenfunction that is zero at the midpoint and
/// negligible at both ends) cannot fool the termination test into an early
/// zero.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Quadrature {
    const MAX_DEPTH: u32 = 36;
    const PANELS: u32 = 64;
    let step = (b - a) / f64::from(PANELS);
    let panel_tol = tol / f64::from(PANELS);
    let mut value = 0.0;
    let mut est = 0.0;
    for i in 0..PANELS {
        let lo = a + f64::from(i) * step;
        let hi = if i == PANELS - 1 { b } else { lo + step };
        let flo = f(lo);
        let fhi = f(hi);
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        let whole = simpson(lo, hi, flo, fmid, fhi);
        value += recurse(f, lo, hi, flo, fmid, fhi, whole, panel_tol, MAX_DEPTH, &mut est);
    }
    Quadrature {
        value,
        error_estimate: est,
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    est: &mut f64,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        *est += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    let half = 0.5 * tol;
    recurse(f, a, m, fa, flm, fm, left, half, depth - 1, est)
        + recurse(f, m, b, fm, frm, fb, right, half, depth - 1, est)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        let q = adaptive_simpson(&|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12);
        // antiderivative x^4/4 - x^2 + x
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (1.0 / 4.0 - 1.0 - 1.0);
        assert!((q.value - exact).abs() < 1e-10);
    }

    #[test]
    fn gaussian_integral() {
        let q = adaptive_simpson(&|x: f64| (-x * x).exp(), -12.0, 12.0, 1e-12);
        assert!((q.value - PI.sqrt()).abs() < 1e-10);
        assert!(q.error_estimate < 1e-9);
    }

    #[test]
    fn oscillatory_gaussian() {
        // int exp(-x^2) cos(bx) dx = sqrt(pi) exp(-b^2/4)
        let b = 7.0;
        let q = adaptive_simpson(&|x: f64| (-x * x).exp() * (b * x).cos(), -12.0, 12.0, 1e-12);
        let exact = PI.sqrt() * (-b * b / 4.0).exp();
        assert!((q.value - exact).abs() < 1e-10);
    }

    #[test]
    fn odd_structure_with_vanishing_coarse_samples() {
        // x exp(-x^2) sin(bx) is zero at -12, 0, 12; a naive adaptive pass
        // sees nothing. int = sqrt(pi) (b/2) exp(-b^2/4)
        let b = std::f64::consts::SQRT_2;
        let q = adaptive_simpson(
            &|x: f64| x * (-x * x).exp() * (b * x).sin(),
            -12.0,
            12.0,
            1e-12,
        );
        let exact = PI.sqrt() * b / 2.0 * (-b * b / 4.0).exp();
        assert!((q.value - exact).abs() < 1e-11, "got {}", q.value);
    }
}
