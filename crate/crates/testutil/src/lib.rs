//! Numerical oracles used by the test suites.
//!
//! Everything here is deliberately independent of the main library: the
//! quadrature, finite-difference, and order-statistic helpers re-derive
//! quantities from first principles so that closed forms in the library can
//! be checked against a second implementation path.

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Classic recursive bisection: a panel is accepted when the two-half Simpson
/// estimate agrees with the whole-panel estimate to `15 * tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), fm)
    }
    #[allow(clippy::too_many_arguments)] // panel state threaded through the recursion
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (left, flm) = simpson(f, a, fa, m, fm);
        let (right, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, left, flm, 0.5 * tol, depth - 1)
                + recurse(f, m, fm, b, fb, right, frm, 0.5 * tol, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, fm) = simpson(&f, a, fa, b, fb);
    recurse(&f, a, fa, b, fb, whole, fm, tol, 60)
}

/// Quadrature with interior breakpoints (kinks of the integrand).
///
/// `points` need not be sorted or inside `[a, b]`; out-of-range entries are
/// dropped. Each smooth piece is integrated separately.
pub fn integrate_split<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    points: &[f64],
    tol: f64,
) -> f64 {
    let mut cuts: Vec<f64> = points.iter().copied().filter(|p| *p > a && *p < b).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut lo = a;
    let mut total = 0.0;
    for c in cuts {
        total += integrate(&f, lo, c, tol);
        lo = c;
    }
    total + integrate(&f, lo, b, tol)
}

/// Central-difference second derivative of `f` along coordinate pair `(i, j)`
/// of a two-argument function, step `h` in each direction.
pub fn second_partial<F: Fn(f64, f64) -> f64>(f: F, x: f64, y: f64, i: usize, j: usize, h: f64) -> f64 {
    match (i, j) {
        (0, 0) => (f(x + h, y) - 2.0 * f(x, y) + f(x - h, y)) / (h * h),
        (1, 1) => (f(x, y + h) - 2.0 * f(x, y) + f(x, y - h)) / (h * h),
        _ => (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h),
    }
}

/// Two-pass sample mean.
pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Two-pass sample variance with divisor `n` (maximum-likelihood convention).
pub fn variance_ml(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / xs.len() as f64
}

/// Two-pass sample variance with divisor `n - 1`.
pub fn variance_unbiased(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
}

/// Argmin of `f` over a uniform grid of `steps + 1` points on `[lo, hi]`.
pub fn grid_argmin<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, steps: usize) -> f64 {
    let mut best_x = lo;
    let mut best = f64::INFINITY;
    for k in 0..=steps {
        let x = lo + (hi - lo) * k as f64 / steps as f64;
        let v = f(x);
        if v < best {
            best = v;
            best_x = x;
        }
    }
    best_x
}

/// Brute-force median: sort, then midpoint of the central pair for even sizes.
pub fn median_brute(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomial_exactly() {
        // Simpson is exact for cubics; the adaptive wrapper must not spoil it.
        let v = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12);
        // antiderivative x^4/4 - x^2 + x evaluated at 3 and -1
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
        assert!((v - exact).abs() < 1e-10, "{v} vs {exact}");
    }

    #[test]
    fn integrates_gaussian_density_to_one() {
        let inv = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        let v = integrate(|x| inv * (-0.5 * x * x).exp(), -40.0, 40.0, 1e-10);
        assert!((v - 1.0).abs() < 1e-9, "{v}");
    }

    #[test]
    fn split_handles_kink() {
        // integral of |x| on [-1, 2] = 0.5 + 2 = 2.5
        let v = integrate_split(|x: f64| x.abs(), -1.0, 2.0, &[0.0], 1e-12);
        assert!((v - 2.5).abs() < 1e-10, "{v}");
    }

    #[test]
    fn median_even_is_midpoint() {
        assert_eq!(median_brute(&[4.0, 1.0, 3.0, 2.0]), 2.5);
        assert_eq!(median_brute(&[1.0, 5.0, 2.0]), 2.0);
    }

    #[test]
    fn second_partials_of_quadratic() {
        let f = |x: f64, y: f64| 3.0 * x * x + 2.0 * x * y - y * y;
        assert!((second_partial(f, 0.3, -0.2, 0, 0, 1e-4) - 6.0).abs() < 1e-5);
        assert!((second_partial(f, 0.3, -0.2, 1, 1, 1e-4) + 2.0).abs() < 1e-5);
        assert!((second_partial(f, 0.3, -0.2, 0, 1, 1e-4) - 2.0).abs() < 1e-5);
    }
}
