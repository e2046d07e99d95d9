//! Small shared numerical kernels: tridiagonal solves, Sturm counts,
//! cubic splines, scalar root finding and least squares.

/// Solve a tridiagonal system with the Thomas algorithm.
///
/// `lower[i]` multiplies `x[i]` in row `i+1`, `upper[i]` multiplies `x[i+1]`
/// in row `i`. Requires a diagonally dominant (or otherwise LU-stable)
/// system; the PDE stepper's matrices qualify. Returns `None` on a zero
/// pivot.
pub fn tridiag_solve(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
) -> Option<Vec<f64>> {
    let n = diag.len();
    assert_eq!(rhs.len(), n);
    assert_eq!(lower.len(), n.saturating_sub(1));
    assert_eq!(upper.len(), n.saturating_sub(1));
    if n == 0 {
        return Some(Vec::new());
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    if diag[0] == 0.0 {
        return None;
    }
    c[0] = if n > 1 { upper[0] / diag[0] } else { 0.0 };
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let denom = diag[i] - lower[i - 1] * c[i - 1];
        if denom == 0.0 {
            return None;
        }
        if i < n - 1 {
            c[i] = upper[i] / denom;
        }
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / denom;
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        let next = x[i + 1];
        x[i] -= c[i] * next;
    }
    Some(x)
}

/// Solve a tridiagonal system by LU with partial pivoting.
///
/// Stable for the nearly singular shifted systems that arise in inverse
/// iteration, where plain Thomas elimination can lose the solution.
pub fn tridiag_solve_pivoting(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
) -> Option<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Some(Vec::new());
    }
    // Band storage with fill-in: rows carry (sub, diag, super, super2).
    let mut a = vec![0.0; n]; // sub-diagonal entry of row i (column i-1)
    let mut b = diag.to_vec();
    let mut c = vec![0.0; n]; // super-diagonal (column i+1)
    let mut d = vec![0.0; n]; // second super-diagonal fill-in (column i+2)
    for i in 0..n - 1 {
        a[i + 1] = lower[i];
        c[i] = upper[i];
    }
    let mut x = rhs.to_vec();
    for i in 0..n - 1 {
        // Pivot between rows i and i+1 on column i.
        if a[i + 1].abs() > b[i].abs() {
            std::mem::swap(&mut b[i], &mut a[i + 1]);
            // After the swap b[i] holds the old a[i+1]; fix the rest of both rows.
            let (ci, bi1) = (c[i], b[i + 1]);
            c[i] = bi1;
            b[i + 1] = ci;
            let (di, ci1) = (d[i], c[i + 1]);
            d[i] = ci1;
            c[i + 1] = di;
            x.swap(i, i + 1);
        }
        if b[i] == 0.0 {
            return None;
        }
        let m = a[i + 1] / b[i];
        b[i + 1] -= m * c[i];
        c[i + 1] -= m * d[i];
        x[i + 1] -= m * x[i];
        a[i + 1] = 0.0;
    }
    if b[n - 1] == 0.0 {
        return None;
    }
    // Back substitution.
    x[n - 1] /= b[n - 1];
    if n >= 2 {
        x[n - 2] = (x[n - 2] - c[n - 2] * x[n - 1]) / b[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (x[i] - c[i] * x[i + 1] - d[i] * x[i + 2]) / b[i];
    }
    Some(x)
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly
/// below `lambda`, via the Sturm sequence (signs of LDLᵀ pivots).
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let guard = 1e-300;
    let mut count = 0usize;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue of a symmetric tridiagonal matrix by Sturm bisection.
pub fn largest_eigenvalue(diag: &[f64], off: &[f64], tol: f64) -> f64 {
    let n = diag.len();
    assert!(n > 0);
    // Gershgorin bounds.
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let e_l = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let e_r = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - e_l - e_r);
        hi = hi.max(diag[i] + e_l + e_r);
    }
    lo -= 1.0;
    hi += 1.0;
    // The largest eigenvalue is the unique point where the count of
    // eigenvalues below crosses n-1 -> n.
    let mut a = lo;
    let mut b = hi;
    for _ in 0..200 {
        if b - a <= tol.max(2.0 * f64::EPSILON * b.abs().max(1.0)) {
            break;
        }
        let mid = 0.5 * (a + b);
        if sturm_count(diag, off, mid) >= n {
            b = mid;
        } else {
            a = mid;
        }
    }
    0.5 * (a + b)
}

/// Bisection for a root of `f` on `[a, b]`; requires a sign change.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64, max_iter: usize) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (a + b);
        if b - a <= tol {
            return Some(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}

/// Natural cubic spline interpolant through `(x[i], y[i])` with strictly
/// increasing knots. Evaluation clamps to the end intervals (linear-free
/// cubic extrapolation is never needed by callers, which guard the range).
#[derive(Debug, Clone)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    second: Vec<f64>,
}

impl CubicSpline {
    pub fn natural(x: Vec<f64>, y: Vec<f64>) -> Self {
        let n = x.len();
        assert!(n >= 2);
        assert_eq!(n, y.len());
        if n == 2 {
            return Self { x, y, second: vec![0.0; 2] };
        }
        // Tridiagonal system for interior second derivatives.
        let m = n - 2;
        let mut lower = vec![0.0; m.saturating_sub(1)];
        let mut diag = vec![0.0; m];
        let mut upper = vec![0.0; m.saturating_sub(1)];
        let mut rhs = vec![0.0; m];
        for i in 0..m {
            let h0 = x[i + 1] - x[i];
            let h1 = x[i + 2] - x[i + 1];
            diag[i] = 2.0 * (h0 + h1);
            if i + 1 < m {
                upper[i] = h1;
                lower[i] = h1;
            }
            rhs[i] = 6.0 * ((y[i + 2] - y[i + 1]) / h1 - (y[i + 1] - y[i]) / h0);
        }
        let interior = tridiag_solve(&lower, &diag, &upper, &rhs).expect("spline system");
        let mut second = vec![0.0; n];
        second[1..n - 1].copy_from_slice(&interior);
        Self { x, y, second }
    }

    fn segment(&self, t: f64) -> usize {
        match self.x.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(i) => i.min(self.x.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.x.len() - 2),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - t) / h;
        let b = (t - self.x[i]) / h;
        a * self.y[i]
            + b * self.y[i + 1]
            + ((a * a * a - a) * self.second[i] + (b * b * b - b) * self.second[i + 1]) * h * h
                / 6.0
    }

    pub fn deriv(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - t) / h;
        let b = (t - self.x[i]) / h;
        (self.y[i + 1] - self.y[i]) / h
            + ((3.0 * b * b - 1.0) * self.second[i + 1] - (3.0 * a * a - 1.0) * self.second[i])
                * h
                / 6.0
    }
}

/// Least-squares line `y ≈ intercept + slope·x`; returns
/// `(intercept, slope, rms_residual)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    assert!(xs.len() == ys.len() && xs.len() >= 2);
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let mut ss = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - intercept - slope * x;
        ss += r * r;
    }
    (intercept, slope, (ss / n).sqrt())
}

/// Trapezoid rule over uniformly spaced samples.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let inner: f64 = values[1..values.len() - 1].iter().sum();
    h * (0.5 * values[0] + inner + 0.5 * values[values.len() - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn thomas_solves_reference_system() {
        // [2 1 0; 1 2 1; 0 1 2] x = [4, 8, 8] -> x = [1, 2, 3]
        let x = tridiag_solve(&[1.0, 1.0], &[2.0, 2.0, 2.0], &[1.0, 1.0], &[4.0, 8.0, 8.0])
            .unwrap();
        assert_relative_eq!(x[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(x[1], 2.0, max_relative = 1e-14);
        assert_relative_eq!(x[2], 3.0, max_relative = 1e-14);
    }

    #[test]
    fn pivoting_handles_small_leading_pivot() {
        // Leading diagonal entry tiny: Thomas degrades, pivoted LU stays exact.
        let lower = [1.0, 1.0];
        let diag = [1e-14, 2.0, 2.0];
        let upper = [1.0, 1.0];
        // Exact solution x = [1, 2, 3].
        let rhs = [1e-14 + 2.0, 1.0 + 4.0 + 3.0, 2.0 + 6.0];
        let x = tridiag_solve_pivoting(&lower, &diag, &upper, &rhs).unwrap();
        assert_relative_eq!(x[0], 1.0, max_relative = 1e-10);
        assert_relative_eq!(x[1], 2.0, max_relative = 1e-10);
        assert_relative_eq!(x[2], 3.0, max_relative = 1e-10);
    }

    #[test]
    fn sturm_count_matches_known_spectrum() {
        // diag 2, off -1 (n=3): eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2).
        let d = [2.0, 2.0, 2.0];
        let e = [-1.0, -1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 2.5), 2);
        assert_eq!(sturm_count(&d, &e, 4.0), 3);
        let top = largest_eigenvalue(&d, &e, 1e-12);
        assert_relative_eq!(top, 2.0 + std::f64::consts::SQRT_2, epsilon = 1e-10);
    }

    #[test]
    fn spline_reproduces_cubic_derivative_to_second_order() {
        let xs: Vec<f64> = (0..81).map(|i| i as f64 * 0.05).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| (1.5 * x).sin()).collect();
        let sp = CubicSpline::natural(xs, ys);
        let v = sp.eval(1.234);
        assert_relative_eq!(v, (1.5f64 * 1.234).sin(), epsilon = 1e-6);
        let d = sp.deriv(1.234);
        assert_relative_eq!(d, 1.5 * (1.5f64 * 1.234).cos(), epsilon = 1e-4);
    }

    #[test]
    fn linear_fit_recovers_exact_line() {
        let xs: Vec<f64> = (0..50).map(|i| i as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 3.0 - 2.0 * x).collect();
        let (a, b, rms) = linear_fit(&xs, &ys);
        assert_relative_eq!(a, 3.0, epsilon = 1e-12);
        assert_relative_eq!(b, -2.0, epsilon = 1e-12);
        assert!(rms < 1e-12);
    }
}
