//! Reaction nonlinearities: homogeneous ignition bases, compactly supported
//! perturbations, and the mixed reaction `f(x,u)` they compose.
//!
//! A mixed reaction satisfies hypotheses (F1)-(F3):
//! * (F1) `f >= 0` Lipschitz, `f(x,0) = f(x,1) = 0`;
//! * (F2) `f(x,u) = f0(u)` for `|x| >= L` with `f0` an ignition reaction,
//!   vanishing on `[0, theta0]` and at the upper equilibrium, positive in
//!   between, non-increasing on the last `theta1` of its range;
//! * (F3) `a(x) = f_u(x,0) >= 0` exists and `f` is linearly pinched near
//!   `u = 0`: `(1-eps) a(x) u <= f(x,u) <= (a(x)+eps) u` on `[0, zeta(eps)]`.
//!
//! All evaluators are pure; every type here is immutable after construction
//! and safe to share across threads.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReactionError {
    #[error("zeta = {zeta} must lie in (0, theta0) = (0, {theta0})")]
    ZetaOutOfRange { zeta: f64, theta0: f64 },
    #[error("amplitude {0} must be >= 0")]
    NegativeAmplitude(f64),
    #[error("half width {0} must be > 0")]
    NonPositiveHalfWidth(f64),
    #[error("delta = {delta} must lie in (0, theta0) = (0, {theta0})")]
    DeltaOutOfRange { delta: f64, theta0: f64 },
    #[error("table needs at least two strictly increasing knots")]
    BadTable,
}

/// Piecewise-linear interpolant of a sample table, zero outside the knots.
#[derive(Debug, Clone)]
pub struct PiecewiseLinear {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl PiecewiseLinear {
    pub fn new(points: &[(f64, f64)]) -> Result<Self, ReactionError> {
        if points.len() < 2 {
            return Err(ReactionError::BadTable);
        }
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        if pts.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(ReactionError::BadTable);
        }
        Ok(Self {
            xs: pts.iter().map(|p| p.0).collect(),
            ys: pts.iter().map(|p| p.1).collect(),
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x < self.xs[0] || x > self.xs[n - 1] {
            return 0.0;
        }
        let i = match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => return self.ys[i],
            Err(i) => i - 1,
        };
        let t = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
        self.ys[i] * (1.0 - t) + self.ys[i + 1] * t
    }

    /// Exact supremum over `[a, b]`: a piecewise-linear function attains its
    /// max at a knot or at an interval endpoint.
    pub fn max_on(&self, a: f64, b: f64) -> f64 {
        if b < a {
            return 0.0;
        }
        let mut m = self.eval(a).max(self.eval(b));
        // Values outside the knot range are zero by convention.
        if b < self.xs[0] || a > *self.xs.last().unwrap() {
            return 0.0;
        }
        if a < self.xs[0] || b > *self.xs.last().unwrap() {
            m = m.max(0.0);
        }
        for (x, y) in self.xs.iter().zip(&self.ys) {
            if *x >= a && *x <= b {
                m = m.max(*y);
            }
        }
        m
    }

    pub fn knot_range(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }
}

#[derive(Debug, Clone)]
enum IgnitionKind {
    /// `(u - theta0)(1 - u)` on `[theta0, 1]`, zero elsewhere.
    Quadratic { theta0: f64 },
    /// `(1 - u)` on `[theta0, 1]`, zero elsewhere. Discontinuous at
    /// `theta0`; closed-form spreading speed `(1 - theta0)/sqrt(theta0)`.
    PiecewiseConstant { theta0: f64 },
    Table(PiecewiseLinear),
    /// Sup-mollification `f_delta(u) = max over [u-delta, u+delta] of base`.
    Perturbed { base: Box<IgnitionKind>, delta: f64 },
}

impl IgnitionKind {
    fn eval(&self, u: f64) -> f64 {
        match self {
            IgnitionKind::Quadratic { theta0 } => {
                if u <= *theta0 || u >= 1.0 {
                    0.0
                } else {
                    (u - theta0) * (1.0 - u)
                }
            }
            IgnitionKind::PiecewiseConstant { theta0 } => {
                if u >= *theta0 && u <= 1.0 {
                    1.0 - u
                } else {
                    0.0
                }
            }
            // Raw interpolation: user tables may be invalid, and the
            // validator is the place that catches it.
            IgnitionKind::Table(t) => t.eval(u),
            IgnitionKind::Perturbed { base, delta } => {
                base.max_on_interval(u - delta, u + delta)
            }
        }
    }

    /// Exact `max of f0 over [a, b]`, exploiting the structure of each kind.
    fn max_on_interval(&self, a: f64, b: f64) -> f64 {
        if b < a {
            return 0.0;
        }
        match self {
            IgnitionKind::Quadratic { theta0 } => {
                let lo = a.max(*theta0);
                let hi = b.min(1.0);
                if lo > hi {
                    return 0.0;
                }
                let peak = 0.5 * (theta0 + 1.0);
                let at = if peak >= lo && peak <= hi {
                    peak
                } else if peak < lo {
                    lo
                } else {
                    hi
                };
                self.eval(at).max(self.eval(lo)).max(self.eval(hi))
            }
            IgnitionKind::PiecewiseConstant { theta0 } => {
                let lo = a.max(*theta0);
                if lo > b || lo > 1.0 {
                    0.0
                } else {
                    1.0 - lo
                }
            }
            IgnitionKind::Table(t) => t.max_on(a, b),
            IgnitionKind::Perturbed { base, delta } => {
                base.max_on_interval(a - delta, b + delta)
            }
        }
    }
}

/// A homogeneous ignition nonlinearity `f0`.
///
/// Vanishes on `[0, theta0]` and above the upper equilibrium (`1` for plain
/// reactions, `1 + delta` for sup-mollified ones), is positive in between,
/// and is non-increasing on the last `theta1` below the equilibrium.
#[derive(Debug, Clone)]
pub struct IgnitionReaction {
    theta0: f64,
    theta1: f64,
    lipschitz: f64,
    upper: f64,
    is_lipschitz: bool,
    kind: IgnitionKind,
}

impl IgnitionReaction {
    /// Default smooth base: `f0(u) = (u - theta0)(1 - u)` on `[theta0, 1]`.
    pub fn quadratic(theta0: f64) -> Self {
        assert!(theta0 > 0.0 && theta0 < 1.0);
        Self {
            theta0,
            // The parabola peaks at (1 + theta0)/2, so the non-increasing
            // stretch below 1 has width (1 - theta0)/2.
            theta1: 0.5 * (1.0 - theta0),
            lipschitz: 1.0 - theta0,
            upper: 1.0,
            is_lipschitz: true,
            kind: IgnitionKind::Quadratic { theta0 },
        }
    }

    /// Discontinuous test-only oracle `f0(u) = (1 - u)` on `[theta0, 1]`.
    ///
    /// Not Lipschitz (jump at `theta0`); validators skip (F1) for it. Its
    /// spreading speed is exactly `(1 - theta0)/sqrt(theta0)`.
    pub fn piecewise_constant(theta0: f64) -> Self {
        assert!(theta0 > 0.0 && theta0 < 1.0);
        Self {
            theta0,
            theta1: 1.0 - theta0,
            lipschitz: 1.0,
            upper: 1.0,
            is_lipschitz: false,
            kind: IgnitionKind::PiecewiseConstant { theta0 },
        }
    }

    /// Tabulated base; caller supplies the hypothesis metadata.
    pub fn from_table(
        points: &[(f64, f64)],
        theta0: f64,
        theta1: f64,
        lipschitz: f64,
    ) -> Result<Self, ReactionError> {
        Ok(Self {
            theta0,
            theta1,
            lipschitz,
            upper: 1.0,
            is_lipschitz: true,
            kind: IgnitionKind::Table(PiecewiseLinear::new(points)?),
        })
    }

    pub fn eval(&self, u: f64) -> f64 {
        self.kind.eval(u)
    }

    /// Exact `max of f0 over [a, b]`.
    pub fn max_on_interval(&self, a: f64, b: f64) -> f64 {
        self.kind.max_on_interval(a, b)
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// Upper equilibrium: 1 for plain reactions, `1 + delta` after
    /// `perturb_ignition`.
    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn is_lipschitz(&self) -> bool {
        self.is_lipschitz
    }
}

/// Sup-mollification `f_delta(u) = max over [u-delta, u+delta] of f0`.
///
/// `f_delta` is an ignition reaction with threshold `theta0 - delta`,
/// positivity support `[theta0 - delta, upper + delta]`, the same Lipschitz
/// bound, and `f_delta >= f0` pointwise.
pub fn perturb_ignition(
    f0: &IgnitionReaction,
    delta: f64,
) -> Result<IgnitionReaction, ReactionError> {
    if !(delta > 0.0 && delta < f0.theta0) {
        return Err(ReactionError::DeltaOutOfRange { delta, theta0: f0.theta0 });
    }
    Ok(IgnitionReaction {
        theta0: f0.theta0 - delta,
        theta1: f0.theta1,
        lipschitz: f0.lipschitz,
        upper: f0.upper + delta,
        is_lipschitz: f0.is_lipschitz,
        kind: IgnitionKind::Perturbed { base: Box::new(f0.kind.clone()), delta },
    })
}

#[derive(Debug, Clone)]
enum PerturbationKind {
    Zero,
    SquareWell { amplitude: f64 },
    Table(PiecewiseLinear),
}

/// The compactly supported linearization `a(x) = f_u(x, 0) >= 0`.
#[derive(Debug, Clone)]
pub struct Perturbation {
    support_half_width: f64,
    bound: f64,
    kind: PerturbationKind,
}

impl Perturbation {
    pub fn zero(half_width: f64) -> Self {
        Self { support_half_width: half_width, bound: 0.0, kind: PerturbationKind::Zero }
    }

    pub fn square_well(amplitude: f64, half_width: f64) -> Result<Self, ReactionError> {
        if amplitude < 0.0 {
            return Err(ReactionError::NegativeAmplitude(amplitude));
        }
        if half_width <= 0.0 {
            return Err(ReactionError::NonPositiveHalfWidth(half_width));
        }
        if amplitude == 0.0 {
            return Ok(Self::zero(half_width));
        }
        Ok(Self {
            support_half_width: half_width,
            bound: amplitude,
            kind: PerturbationKind::SquareWell { amplitude },
        })
    }

    /// Tabulated perturbation. `half_width` is the claimed support radius;
    /// the validator checks the table actually vanishes beyond it.
    pub fn from_table(points: &[(f64, f64)], half_width: f64) -> Result<Self, ReactionError> {
        if half_width <= 0.0 {
            return Err(ReactionError::NonPositiveHalfWidth(half_width));
        }
        let table = PiecewiseLinear::new(points)?;
        let bound = points.iter().fold(0.0f64, |m, p| m.max(p.1));
        Ok(Self {
            support_half_width: half_width,
            bound,
            kind: PerturbationKind::Table(table),
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.kind {
            PerturbationKind::Zero => 0.0,
            PerturbationKind::SquareWell { amplitude } => {
                if x.abs() <= self.support_half_width {
                    *amplitude
                } else {
                    0.0
                }
            }
            PerturbationKind::Table(t) => t.eval(x),
        }
    }

    pub fn support_half_width(&self) -> f64 {
        self.support_half_width
    }

    /// Upper bound on `a(x)`.
    pub fn bound(&self) -> f64 {
        self.bound
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.kind, PerturbationKind::Zero) || self.bound == 0.0
    }
}

/// The mixed reaction `f(x,u) = f0(u) + a(x) g(u)` with
/// `g(u) = clamp(min(u, zeta (1-u)/(1-zeta)), 0, 1)`.
///
/// `g(u) = u` on `[0, zeta]`, so `f(x,u) = a(x) u` exactly there: the
/// reaction has an exact linear zone, satisfying (F3) with equality and the
/// hypothesis of the explicit bump solution.
#[derive(Debug, Clone)]
pub struct MixedReaction {
    base: IgnitionReaction,
    perturbation: Perturbation,
    zeta: f64,
    lipschitz: f64,
}

impl MixedReaction {
    pub fn eval(&self, x: f64, u: f64) -> f64 {
        self.base.eval(u) + self.perturbation.eval(x) * self.coupling(u)
    }

    /// The coupling profile `g(u)`.
    pub fn coupling(&self, u: f64) -> f64 {
        if u <= 0.0 || u >= 1.0 {
            return 0.0;
        }
        let z = self.zeta;
        u.min(z * (1.0 - u) / (1.0 - z)).clamp(0.0, 1.0)
    }

    pub fn base(&self) -> &IgnitionReaction {
        &self.base
    }

    pub fn perturbation(&self) -> &Perturbation {
        &self.perturbation
    }

    /// `zeta(eps)` from (F3). The construction has an exact linear zone, so
    /// the same `zeta` works for every `eps > 0`.
    pub fn zeta_of_eps(&self, _eps: f64) -> f64 {
        self.zeta
    }

    /// Width of the exact linear zone: `f(x,u) = a(x) u` on `[0, zeta]`.
    pub fn exact_linear_zone(&self) -> Option<f64> {
        Some(self.zeta)
    }

    /// Lipschitz bound for `f(x, .)`, uniform in `x`.
    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn support_half_width(&self) -> f64 {
        self.perturbation.support_half_width()
    }
}

/// Build the canonical square-well mixed reaction.
///
/// `a = amplitude` on `[-half_width, half_width]`, zero outside;
/// `f(x, u) = a(x) u` exactly on `[0, zeta]`.
pub fn build_square_well(
    f0: IgnitionReaction,
    amplitude: f64,
    half_width: f64,
    zeta: f64,
) -> Result<MixedReaction, ReactionError> {
    let perturbation = Perturbation::square_well(amplitude, half_width)?;
    mix(f0, perturbation, zeta)
}

/// Compose an arbitrary base and perturbation with the standard coupling.
pub fn mix(
    f0: IgnitionReaction,
    perturbation: Perturbation,
    zeta: f64,
) -> Result<MixedReaction, ReactionError> {
    if !(zeta > 0.0 && zeta < f0.theta0) {
        return Err(ReactionError::ZetaOutOfRange { zeta, theta0: f0.theta0 });
    }
    let coupling_lip = 1.0f64.max(zeta / (1.0 - zeta));
    let lipschitz = f0.lipschitz + perturbation.bound() * coupling_lip;
    Ok(MixedReaction { base: f0, perturbation, zeta, lipschitz })
}

/// Hypothesis tag for a sampled violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Hypothesis {
    F1,
    F2,
    F3,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub hypothesis: Hypothesis,
    pub x: Option<f64>,
    pub u: Option<f64>,
    pub measured: f64,
    pub detail: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Sampling resolution for the hypothesis checks.
#[derive(Debug, Clone, Copy)]
pub struct SamplingGrid {
    pub u_samples: usize,
    pub x_samples: usize,
    /// Half-width of the sampled x-window; must exceed the support radius.
    pub x_radius: f64,
    /// Tolerance for exact-zero claims.
    pub tol: f64,
}

impl SamplingGrid {
    pub fn with_radius(x_radius: f64) -> Self {
        SamplingGrid { u_samples: 2001, x_samples: 4001, x_radius, tol: 1e-12 }
    }
}

impl Default for SamplingGrid {
    fn default() -> Self {
        Self::with_radius(6.0)
    }
}

const MAX_VIOLATIONS: usize = 10_000;

/// Sampled check of (F1)-(F3). Violations are data, not errors; the check
/// is deterministic for a fixed grid.
pub fn validate_hypotheses(
    r: &MixedReaction,
    eps_list: &[f64],
    grid: &SamplingGrid,
) -> ValidationReport {
    let mut violations = Vec::new();
    let radius = grid.x_radius.max(2.0 * r.support_half_width());
    let xs: Vec<f64> = linspace(-radius, radius, grid.x_samples);
    let upper = r.base.upper();
    let us: Vec<f64> = linspace(0.0, upper, grid.u_samples);
    let gamma = r.lipschitz();
    let half_width = r.support_half_width();
    let tol = grid.tol;

    let push = |violations: &mut Vec<Violation>, v: Violation| {
        if violations.len() < MAX_VIOLATIONS {
            violations.push(v);
        }
    };

    for &x in &xs {
        // (F1) equilibria.
        let f_at_0 = r.eval(x, 0.0);
        if f_at_0.abs() > tol {
            push(&mut violations, Violation {
                hypothesis: Hypothesis::F1,
                x: Some(x),
                u: Some(0.0),
                measured: f_at_0,
                detail: "f(x, 0) != 0",
            });
        }
        let f_at_1 = r.eval(x, 1.0);
        if f_at_1.abs() > tol && (upper - 1.0).abs() < tol {
            push(&mut violations, Violation {
                hypothesis: Hypothesis::F1,
                x: Some(x),
                u: Some(1.0),
                measured: f_at_1,
                detail: "f(x, 1) != 0",
            });
        }
        // (F3) linearization sign and support.
        let a = r.perturbation.eval(x);
        if a < -tol {
            push(&mut violations, Violation {
                hypothesis: Hypothesis::F3,
                x: Some(x),
                u: None,
                measured: a,
                detail: "a(x) < 0",
            });
        }
        if x.abs() >= half_width * (1.0 + 1e-12) + tol && a.abs() > tol {
            push(&mut violations, Violation {
                hypothesis: Hypothesis::F2,
                x: Some(x),
                u: None,
                measured: a,
                detail: "a(x) != 0 beyond the support radius",
            });
        }
    }

    // (F1) nonnegativity and Lipschitz continuity in u, (F2) homogeneity
    // beyond the support. The x-loop is subsampled for the 2-D checks to
    // keep the default grids inside a second of runtime.
    let x_stride = (grid.x_samples / 257).max(1);
    let center = (grid.x_samples - 1) / 2;
    for (k, &x) in xs.iter().enumerate() {
        // Stride through the interior but always hit x = 0 and the
        // homogeneous region |x| >= L.
        let on_stride = (k as i64 - center as i64).rem_euclid(x_stride as i64) == 0;
        let dense = on_stride || x.abs() >= half_width;
        if !dense {
            continue;
        }
        let mut prev: Option<(f64, f64)> = None;
        for &u in &us {
            let f = r.eval(x, u);
            if f < -tol {
                push(&mut violations, Violation {
                    hypothesis: Hypothesis::F1,
                    x: Some(x),
                    u: Some(u),
                    measured: f,
                    detail: "f(x, u) < 0",
                });
            }
            if r.base.is_lipschitz() {
                if let Some((u_prev, f_prev)) = prev {
                    let ratio = (f - f_prev).abs() - gamma * (u - u_prev).abs();
                    if ratio > tol.max(1e-9) {
                        push(&mut violations, Violation {
                            hypothesis: Hypothesis::F1,
                            x: Some(x),
                            u: Some(u),
                            measured: (f - f_prev).abs() / (u - u_prev).abs(),
                            detail: "sampled Lipschitz quotient exceeds the declared bound",
                        });
                    }
                }
            }
            if x.abs() >= half_width * (1.0 + 1e-12) + tol {
                let f0 = r.base.eval(u);
                if (f - f0).abs() > tol {
                    push(&mut violations, Violation {
                        hypothesis: Hypothesis::F2,
                        x: Some(x),
                        u: Some(u),
                        measured: f - f0,
                        detail: "f(x, u) != f0(u) beyond the support radius",
                    });
                }
            }
            prev = Some((u, f));
        }
    }

    // (F2) on the base reaction itself.
    for &u in &us {
        let f0 = r.base.eval(u);
        if u <= r.base.theta0() + tol || u >= upper - tol {
            if f0.abs() > tol {
                push(&mut violations, Violation {
                    hypothesis: Hypothesis::F2,
                    x: None,
                    u: Some(u),
                    measured: f0,
                    detail: "f0 fails to vanish outside (theta0, upper)",
                });
            }
        } else if u > r.base.theta0() + 1e-6 && u < upper - 1e-6 && f0 <= 0.0 {
            push(&mut violations, Violation {
                hypothesis: Hypothesis::F2,
                x: None,
                u: Some(u),
                measured: f0,
                detail: "f0 not positive on (theta0, upper)",
            });
        }
    }
    // Monotone tail of f0.
    let tail_lo = upper - r.base.theta1();
    let mut prev: Option<(f64, f64)> = None;
    for &u in us.iter().filter(|&&u| u >= tail_lo) {
        let f0 = r.base.eval(u);
        if let Some((u_prev, f_prev)) = prev {
            if f0 - f_prev > tol.max(gamma * (u - u_prev) * 1e-6) {
                push(&mut violations, Violation {
                    hypothesis: Hypothesis::F2,
                    x: None,
                    u: Some(u),
                    measured: f0 - f_prev,
                    detail: "f0 increases on the declared monotone tail",
                });
            }
        }
        prev = Some((u, f0));
    }

    // (F3) linear pinching below zeta(eps).
    for &eps in eps_list {
        let zeta = r.zeta_of_eps(eps);
        let u_lin: Vec<f64> = linspace(0.0, zeta, 256);
        for (k, &x) in xs.iter().enumerate() {
            if (k as i64 - center as i64).rem_euclid(x_stride as i64) != 0 {
                continue;
            }
            let a = r.perturbation.eval(x);
            for &u in &u_lin {
                let f = r.eval(x, u);
                let lo = (1.0 - eps) * a * u;
                let hi = (a + eps) * u;
                if f < lo - tol || f > hi + tol {
                    push(&mut violations, Violation {
                        hypothesis: Hypothesis::F3,
                        x: Some(x),
                        u: Some(u),
                        measured: f,
                        detail: "f escapes the (F3) linear pinch below zeta",
                    });
                }
            }
        }
    }

    ValidationReport { passed: violations.is_empty(), violations }
}

pub(crate) fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let h = (b - a) / (n - 1) as f64;
    (0..n).map(|i| a + i as f64 * h).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn default_well() -> MixedReaction {
        build_square_well(IgnitionReaction::quadratic(0.25), 1.0, 1.0, 0.1).unwrap()
    }

    #[test]
    fn unperturbed_well_reduces_to_base() {
        let r = build_square_well(IgnitionReaction::quadratic(0.25), 0.0, 1.0, 0.1).unwrap();
        for &(x, u) in &[(0.0, 0.05), (0.5, 0.5), (-3.0, 0.9), (2.0, 0.25)] {
            assert_eq!(r.eval(x, u), r.base().eval(u));
        }
        assert!(r.perturbation().is_trivial());
    }

    #[test]
    fn well_is_exactly_linear_below_zeta() {
        let r = default_well();
        // u below both theta0 and zeta: f = a(x) u exactly.
        assert_eq!(r.eval(0.0, 0.05), 0.05);
        assert_eq!(r.eval(0.5, 0.05), 0.05);
        assert_eq!(r.eval(1.5, 0.05), 0.0);
        assert_eq!(r.eval(-1.5, 0.05), 0.0);
    }

    #[test]
    fn well_value_matches_hand_arithmetic_above_zeta() {
        // f(0, 0.5) = f0(0.5) + g(0.5), g(0.5) = min(0.5, 0.1*0.5/0.9) = 1/18.
        let r = default_well();
        let f0 = (0.5 - 0.25) * (1.0 - 0.5);
        assert_relative_eq!(r.eval(0.0, 0.5), f0 + 1.0 / 18.0, epsilon = 1e-15);
    }

    #[test]
    fn coupling_minus_identity_vanishes_below_zeta() {
        let r = default_well();
        for &u in &[0.0, 0.01, 0.05, 0.0999, 0.1] {
            assert_eq!(r.coupling(u), u.min(0.1 * (1.0 - u) / 0.9));
            if u <= 0.1 {
                assert_eq!(r.eval(0.3, u) - 1.0 * u, r.base().eval(u));
            }
        }
    }

    #[test]
    fn square_well_rejects_bad_parameters() {
        let f0 = IgnitionReaction::quadratic(0.25);
        assert!(matches!(
            build_square_well(f0.clone(), 1.0, 1.0, 0.3),
            Err(ReactionError::ZetaOutOfRange { .. })
        ));
        assert!(matches!(
            build_square_well(f0.clone(), -0.5, 1.0, 0.1),
            Err(ReactionError::NegativeAmplitude(_))
        ));
        assert!(matches!(
            build_square_well(f0, 1.0, 0.0, 0.1),
            Err(ReactionError::NonPositiveHalfWidth(_))
        ));
    }

    #[test]
    fn validate_accepts_the_square_well() {
        let r = default_well();
        let report = validate_hypotheses(&r, &[0.1, 0.5], &SamplingGrid::default());
        assert!(report.passed, "violations: {:?}", &report.violations[..report.violations.len().min(5)]);
    }

    #[test]
    fn validate_flags_planted_negativity() {
        // Table base dipping below zero near u = 0.5.
        let f0 = IgnitionReaction::from_table(
            &[(0.25, 0.0), (0.4, 0.1), (0.5, -0.01), (0.6, 0.1), (1.0, 0.0)],
            0.25,
            0.4,
            1.2,
        )
        .unwrap();
        let r = mix(f0, Perturbation::square_well(1.0, 1.0).unwrap(), 0.1).unwrap();
        let report = validate_hypotheses(&r, &[], &SamplingGrid::default());
        assert!(!report.passed);
        assert!(report
            .violations
            .iter()
            .any(|v| v.hypothesis == Hypothesis::F1 && (v.u.unwrap() - 0.5).abs() < 1e-2 && v.measured < 0.0));
    }

    #[test]
    fn validate_flags_support_overflow() {
        // Table perturbation extending to 2L while claiming support L = 1.
        let a = Perturbation::from_table(&[(-2.0, 1.0), (2.0, 1.0)], 1.0).unwrap();
        let r = mix(IgnitionReaction::quadratic(0.25), a, 0.1).unwrap();
        let report = validate_hypotheses(&r, &[], &SamplingGrid::default());
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| {
            v.hypothesis == Hypothesis::F2
                && v.x.map(|x| x.abs() > 1.0 && x.abs() <= 2.0).unwrap_or(false)
        }));
    }

    #[test]
    fn perturbed_threshold_and_support_shift() {
        let f0 = IgnitionReaction::quadratic(0.25);
        let fd = perturb_ignition(&f0, 0.1).unwrap();
        assert_relative_eq!(fd.theta0(), 0.15);
        assert_relative_eq!(fd.upper(), 1.1);
        // Vanishes below the shifted threshold.
        for &u in &[0.0, 0.05, 0.1, 0.149] {
            assert_eq!(fd.eval(u), 0.0);
        }
        // Positive inside (theta0 - delta, 1 + delta).
        for &u in &[0.2, 0.5, 0.99, 1.05] {
            assert!(fd.eval(u) > 0.0, "f_delta({u}) should be positive");
        }
        assert_eq!(fd.eval(1.1), 0.0);
    }

    #[test]
    fn perturbed_value_matches_dense_scan_oracle() {
        // Scalar max of f0 over a fine v-grid as the independent oracle.
        let f0 = IgnitionReaction::quadratic(0.25);
        let fd = perturb_ignition(&f0, 0.1).unwrap();
        for &u in &[0.1, 0.2, 0.3, 0.6, 0.95, 1.05] {
            let oracle = linspace(u - 0.1, u + 0.1, 20_001)
                .into_iter()
                .map(|v| f0.eval(v))
                .fold(0.0f64, f64::max);
            assert_relative_eq!(fd.eval(u), oracle, epsilon = 1e-8);
        }
        assert!(fd.eval(0.2) > 0.0);
    }

    #[test]
    fn perturbation_tends_to_base_as_delta_vanishes() {
        let f0 = IgnitionReaction::quadratic(0.25);
        let mut worst_prev = f64::INFINITY;
        for &delta in &[0.1, 0.01, 0.001] {
            let fd = perturb_ignition(&f0, delta).unwrap();
            let worst = linspace(0.0, 1.2, 601)
                .into_iter()
                .map(|u| (fd.eval(u) - f0.eval(u)).abs())
                .fold(0.0f64, f64::max);
            assert!(worst < worst_prev);
            worst_prev = worst;
        }
        assert!(worst_prev < 2e-3);
    }

    #[test]
    fn perturb_rejects_out_of_range_delta() {
        let f0 = IgnitionReaction::quadratic(0.25);
        assert!(perturb_ignition(&f0, 0.0).is_err());
        assert!(perturb_ignition(&f0, 0.25).is_err());
        assert!(perturb_ignition(&f0, -0.1).is_err());
    }

    proptest! {
        #[test]
        fn random_square_wells_validate(
            theta0 in 0.1f64..0.6,
            amp in 0.0f64..2.0,
            half_width in 0.3f64..2.0,
            zeta_frac in 0.1f64..0.9,
        ) {
            let zeta = zeta_frac * theta0;
            let r = build_square_well(IgnitionReaction::quadratic(theta0), amp, half_width, zeta).unwrap();
            let grid = SamplingGrid { u_samples: 201, x_samples: 401, ..SamplingGrid::with_radius(2.0 * half_width + 2.0) };
            let report = validate_hypotheses(&r, &[0.25], &grid);
            prop_assert!(report.passed, "{:?}", &report.violations[..report.violations.len().min(3)]);
        }

        #[test]
        fn sup_mollification_is_monotone_in_delta(
            d1 in 0.01f64..0.12,
            d2 in 0.12f64..0.24,
            u in -0.1f64..1.3,
        ) {
            let f0 = IgnitionReaction::quadratic(0.25);
            let fa = perturb_ignition(&f0, d1).unwrap();
            let fb = perturb_ignition(&f0, d2).unwrap();
            prop_assert!(fa.eval(u) <= fb.eval(u) + 1e-14);
            prop_assert!(f0.eval(u) <= fa.eval(u) + 1e-14);
        }

        #[test]
        fn extension_convention_is_zero_outside_unit_range(
            x in -3.0f64..3.0,
            u in prop_oneof![(-5.0f64..-1e-9), (1.0f64 + 1e-9..5.0)],
        ) {
            let r = build_square_well(IgnitionReaction::quadratic(0.25), 1.0, 1.0, 0.1).unwrap();
            prop_assert_eq!(r.eval(x, u), r.base().eval(u));
            if u < 0.0 || u > 1.0 {
                prop_assert_eq!(r.base().eval(u), 0.0);
            }
        }
    }
}
