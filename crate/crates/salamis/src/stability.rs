//! Fixed points of the map, their stability, and settle times.
//!
//! Fixed points are found by two independent routes that must agree: a
//! closed-form quartic reduction in x solved by the polynomial root finder,
//! and damped 2D Newton iteration from a grid of starts. Each point is
//! classified under two schemes at once: the trace/determinant rules of
//! continuous-time systems ("paper scheme") and the eigenvalue-modulus rule
//! that is the correct criterion for maps ("discrete scheme"). The two can
//! disagree — a point can be a trace/determinant saddle and still attract
//! every nearby orbit because both moduli are below one.

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::model::{derive_coefficients, jacobian_at, MapCoefficients, ModelParams, State};
use crate::num::Real;
use crate::poly::Polynomial;

/// Fixed-point residual bar (max-norm of step(s) - s).
pub const RESIDUAL_BAR: f64 = 1e-10;

/// Two fixed points closer than this (max-norm) are the same root.
pub const POINT_DEDUP_TOL: f64 = 1e-8;

/// Required agreement between the quartic and Newton routes.
pub const CROSS_CHECK_TOL: f64 = 1e-6;

/// Default square search region per axis.
pub const DEFAULT_SEARCH_BOX: (f64, f64) = (-2.0, 3.0);

/// Newton multistart grid is this many starts per axis.
pub const NEWTON_GRID: usize = 16;

/// Step budget for settle-time measurements.
pub const SETTLE_BUDGET: usize = 10_000;

/// Square search region applied to both coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBox<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Default for SearchBox<T> {
    fn default() -> Self {
        Self {
            lo: T::of(DEFAULT_SEARCH_BOX.0),
            hi: T::of(DEFAULT_SEARCH_BOX.1),
        }
    }
}

impl<T: Real> SearchBox<T> {
    pub fn contains(&self, s: &State<T>) -> bool {
        s.x >= self.lo && s.x <= self.hi && s.y >= self.lo && s.y <= self.hi
    }
}

/// A located fixed point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint<T> {
    pub location: State<T>,
    /// Max-norm of step(s) - s at the reported location.
    pub residual: T,
    /// Both coordinates in [0,1].
    pub admissible: bool,
}

/// Stability labels in the trace/determinant style.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaperClass {
    Center,
    Saddle,
    Node,
    Spiral,
    Degenerate,
}

impl fmt::Display for PaperClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaperClass::Center => "center",
            PaperClass::Saddle => "saddle",
            PaperClass::Node => "node",
            PaperClass::Spiral => "spiral",
            PaperClass::Degenerate => "degenerate",
        })
    }
}

/// Stability labels from eigenvalue moduli relative to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscreteClass {
    StableNode,
    StableSpiral,
    UnstableNode,
    UnstableSpiral,
    Saddle,
    NonHyperbolic,
}

impl DiscreteClass {
    pub fn is_stable(&self) -> bool {
        matches!(self, DiscreteClass::StableNode | DiscreteClass::StableSpiral)
    }
}

impl fmt::Display for DiscreteClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiscreteClass::StableNode => "stable-node",
            DiscreteClass::StableSpiral => "stable-spiral",
            DiscreteClass::UnstableNode => "unstable-node",
            DiscreteClass::UnstableSpiral => "unstable-spiral",
            DiscreteClass::Saddle => "saddle",
            DiscreteClass::NonHyperbolic => "non-hyperbolic",
        })
    }
}

/// Full linearization record at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityVerdict<T> {
    pub jacobian: Mat2<T>,
    pub trace: T,
    pub determinant: T,
    pub discriminant: T,
    pub eigenvalues: [Complex<T>; 2],
    pub paper_scheme: PaperClass,
    pub discrete_scheme: DiscreteClass,
}

impl<T: Real> StabilityVerdict<T> {
    /// Largest eigenvalue modulus.
    pub fn spectral_radius(&self) -> T {
        self.eigenvalues[0].norm().max(self.eigenvalues[1].norm())
    }
}

/// One fixed point with its verdict, labelled by the scenario it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointReport<T> {
    pub point: FixedPoint<T>,
    pub verdict: StabilityVerdict<T>,
    pub scenario: String,
}

/// Outcome of a settle-time measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SettleOutcome {
    /// Smallest t with the whole window [t, t+W] inside the epsilon ball.
    Settled(usize),
    /// Budget exhausted without a sustained window.
    NotSettled,
    /// The orbit overflowed; index of the last in-range state.
    Diverged { last_valid: usize },
}

impl SettleOutcome {
    pub fn step(&self) -> Option<usize> {
        match self {
            SettleOutcome::Settled(t) => Some(*t),
            _ => None,
        }
    }
}

/// Closed-form reduction of the fixed-point system to a polynomial in x.
///
/// With u = x - x^2, the y equation gives y = a_y - c_y u, and substituting
/// into the x equation collects into a degree <= 4 polynomial whose real
/// roots are exactly the fixed-point x coordinates:
///
/// ```text
/// P(x) = a_x - c_x [ (a_y - a_y^2) + c_y (2 a_y - 1) u - c_y^2 u^2 ] - x
/// ```
pub fn quartic_coefficients<T: Real>(coeffs: &MapCoefficients<T>) -> Polynomial<T> {
    let MapCoefficients { a_x, c_x, a_y, c_y } = *coeffs;
    let one = T::one();
    let two = T::of(2.0);
    let cxy = c_x * c_y;
    let cxy2 = c_x * c_y * c_y;
    Polynomial::new(vec![
        a_x - c_x * (a_y - a_y * a_y),
        -one - cxy * (two * a_y - one),
        cxy * (two * a_y - one) + cxy2,
        -two * cxy2,
        cxy2,
    ])
}

/// y coordinate paired with a fixed-point x coordinate.
fn paired_y<T: Real>(coeffs: &MapCoefficients<T>, x: T) -> T {
    coeffs.a_y - coeffs.c_y * x * (T::one() - x)
}

fn residual_at<T: Real>(coeffs: &MapCoefficients<T>, s: State<T>) -> T {
    coeffs.apply(s).dist_max(&s)
}

/// A few full-system Newton steps to push the residual to rounding level.
fn polish_2d<T: Real>(coeffs: &MapCoefficients<T>, mut s: State<T>) -> State<T> {
    let one = T::one();
    let two = T::of(2.0);
    for _ in 0..8 {
        let f = coeffs.apply(s);
        let (fx, fy) = (f.x - s.x, f.y - s.y);
        let j12 = coeffs.c_x * (two * s.y - one);
        let j21 = coeffs.c_y * (two * s.x - one);
        // (J - I) d = -F with J antidiagonal
        let det = one - j12 * j21;
        if det == T::zero() {
            break;
        }
        let dx = (fx + j12 * fy) / det;
        let dy = (fy + j21 * fx) / det;
        let next = State::new(s.x + dx, s.y + dy);
        if !next.is_finite() {
            break;
        }
        s = next;
        if dx.abs() < T::of(1e-15) && dy.abs() < T::of(1e-15) {
            break;
        }
    }
    s
}

fn quartic_route<T: Real>(coeffs: &MapCoefficients<T>, bx: &SearchBox<T>) -> Vec<State<T>> {
    quartic_coefficients(coeffs)
        .real_roots(bx.lo, bx.hi)
        .into_iter()
        .map(|x| polish_2d(coeffs, State::new(x, paired_y(coeffs, x))))
        .filter(|s| bx.contains(s))
        .collect()
}

fn newton_route<T: Real>(coeffs: &MapCoefficients<T>, bx: &SearchBox<T>) -> Vec<State<T>> {
    let one = T::one();
    let two = T::of(2.0);
    let width = bx.hi - bx.lo;
    let n = T::of(NEWTON_GRID as f64);
    let mut found: Vec<State<T>> = Vec::new();
    for i in 0..NEWTON_GRID {
        for j in 0..NEWTON_GRID {
            let mut s = State::new(
                bx.lo + width * (T::of(i as f64) + T::of(0.5)) / n,
                bx.lo + width * (T::of(j as f64) + T::of(0.5)) / n,
            );
            let mut converged = false;
            for _ in 0..100 {
                let f = coeffs.apply(s);
                let (fx, fy) = (f.x - s.x, f.y - s.y);
                let j12 = coeffs.c_x * (two * s.y - one);
                let j21 = coeffs.c_y * (two * s.x - one);
                let det = one - j12 * j21;
                if det == T::zero() || !det.is_finite() {
                    break;
                }
                let dx = (fx + j12 * fy) / det;
                let dy = (fy + j21 * fx) / det;
                s = State::new(s.x + dx, s.y + dy);
                if !s.is_finite() || s.x.abs() > T::of(1e8) || s.y.abs() > T::of(1e8) {
                    break;
                }
                if dx.abs() < T::of(1e-13) && dy.abs() < T::of(1e-13) {
                    converged = true;
                    break;
                }
            }
            if !converged || residual_at(coeffs, s) >= T::of(1e-9) {
                continue;
            }
            let s = polish_2d(coeffs, s);
            if bx.contains(&s)
                && !found
                    .iter()
                    .any(|q| q.dist_max(&s) < T::of(POINT_DEDUP_TOL))
            {
                found.push(s);
            }
        }
    }
    found.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap());
    found
}

/// Directed Hausdorff-style set agreement in the max norm.
fn sets_agree<T: Real>(a: &[State<T>], b: &[State<T>], tol: T) -> bool {
    let close = |p: &State<T>, set: &[State<T>]| {
        set.iter()
            .any(|q| p.dist_max(q) <= tol)
    };
    a.iter().all(|p| close(p, b)) && b.iter().all(|q| close(q, a))
}

/// All fixed points inside the search box, sorted by x ascending, each
/// cross-checked between the quartic and Newton routes.
pub fn fixed_points<T: Real>(
    params: &ModelParams<T>,
    search_box: SearchBox<T>,
) -> Result<Vec<FixedPoint<T>>> {
    let coeffs = derive_coefficients(params)?;
    fixed_points_of(&coeffs, search_box)
}

/// Same as [`fixed_points`], starting from derived coefficients.
pub fn fixed_points_of<T: Real>(
    coeffs: &MapCoefficients<T>,
    search_box: SearchBox<T>,
) -> Result<Vec<FixedPoint<T>>> {
    if !(search_box.lo.is_finite() && search_box.hi.is_finite() && search_box.lo < search_box.hi) {
        return Err(Error::Config("search box must be finite with lo < hi".into()));
    }
    let quartic = quartic_route(coeffs, &search_box);
    let newton = newton_route(coeffs, &search_box);
    if !sets_agree(&quartic, &newton, T::of(CROSS_CHECK_TOL)) {
        return Err(Error::SolverInconsistency {
            detail: format!(
                "quartic route found {} root(s), newton route {} root(s), disagreeing beyond {:e}",
                quartic.len(),
                newton.len(),
                CROSS_CHECK_TOL
            ),
        });
    }
    let mut points: Vec<FixedPoint<T>> = Vec::new();
    for s in quartic {
        if points
            .iter()
            .any(|p| p.location.dist_max(&s) < T::of(POINT_DEDUP_TOL))
        {
            continue;
        }
        let residual = residual_at(coeffs, s);
        if residual >= T::of(RESIDUAL_BAR) {
            return Err(Error::SolverInconsistency {
                detail: format!("fixed point ({}, {}) residual {} above bar", s.x, s.y, residual),
            });
        }
        let admissible =
            s.x >= T::zero() && s.x <= T::one() && s.y >= T::zero() && s.y <= T::one();
        points.push(FixedPoint {
            location: s,
            residual,
            admissible,
        });
    }
    points.sort_by(|a, b| a.location.x.partial_cmp(&b.location.x).unwrap());
    Ok(points)
}

/// Eigenvalues of a 2x2 matrix, ordered by (re, im) descending.
pub fn eigenvalues_2x2<T: Real>(m: &Mat2<T>) -> [Complex<T>; 2] {
    m.eigenvalues()
}

/// Classify a linearization under both schemes.
///
/// Paper scheme: |det| <= tol is degenerate; det < 0 a saddle; det > 0 with
/// negative discriminant a center (zero trace) or spiral (nonzero trace);
/// det > 0 with nonnegative discriminant a node.
///
/// Discrete scheme: both moduli below 1-tol is stable (node for a real pair,
/// spiral for a complex pair), both above 1+tol unstable, one on each side a
/// saddle, any modulus within tol of 1 non-hyperbolic.
pub fn classify<T: Real>(m: &Mat2<T>, tol: T) -> StabilityVerdict<T> {
    let trace = m.trace();
    let determinant = m.det();
    let discriminant = m.discriminant();
    let eigenvalues = m.eigenvalues();

    let paper_scheme = if determinant.abs() <= tol {
        PaperClass::Degenerate
    } else if determinant < T::zero() {
        PaperClass::Saddle
    } else if discriminant < T::zero() {
        if trace.abs() <= tol {
            PaperClass::Center
        } else {
            PaperClass::Spiral
        }
    } else {
        PaperClass::Node
    };

    let complex_pair = eigenvalues[0].im != T::zero();
    let moduli = [eigenvalues[0].norm(), eigenvalues[1].norm()];
    let one = T::one();
    let near_one = |r: T| (r - one).abs() <= tol;
    let discrete_scheme = if near_one(moduli[0]) || near_one(moduli[1]) {
        DiscreteClass::NonHyperbolic
    } else if moduli[0] < one && moduli[1] < one {
        if complex_pair {
            DiscreteClass::StableSpiral
        } else {
            DiscreteClass::StableNode
        }
    } else if moduli[0] > one && moduli[1] > one {
        if complex_pair {
            DiscreteClass::UnstableSpiral
        } else {
            DiscreteClass::UnstableNode
        }
    } else {
        DiscreteClass::Saddle
    };

    StabilityVerdict {
        jacobian: *m,
        trace,
        determinant,
        discriminant,
        eigenvalues,
        paper_scheme,
        discrete_scheme,
    }
}

/// Default classification tolerance.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Smallest t such that the orbit stays within `epsilon` of `target` (max
/// norm) for every step in [t, t+window].
pub fn settle_time<T: Real>(
    coeffs: &MapCoefficients<T>,
    initial: State<T>,
    target: State<T>,
    epsilon: T,
    window: usize,
) -> Result<SettleOutcome> {
    if epsilon <= T::zero() {
        return Err(Error::Config("epsilon must be positive".into()));
    }
    if window == 0 {
        return Err(Error::Config("window must be at least 1".into()));
    }
    let guard = T::of(crate::model::OVERFLOW_GUARD);
    let mut s = initial;
    let mut run_start: Option<usize> = None;
    for t in 0..=(SETTLE_BUDGET + window) {
        if s.dist_max(&target) < epsilon {
            let start = *run_start.get_or_insert(t);
            if t - start >= window {
                return Ok(SettleOutcome::Settled(start));
            }
        } else {
            run_start = None;
        }
        s = coeffs.apply(s);
        if !s.is_finite() || s.x.abs() > guard || s.y.abs() > guard {
            return Ok(SettleOutcome::Diverged { last_valid: t });
        }
    }
    Ok(SettleOutcome::NotSettled)
}

/// Locate all fixed points and classify each.
pub fn analyze<T: Real>(
    params: &ModelParams<T>,
    scenario: &str,
) -> Result<Vec<FixedPointReport<T>>> {
    let coeffs = derive_coefficients(params)?;
    let points = fixed_points_of(&coeffs, SearchBox::default())?;
    Ok(points
        .into_iter()
        .map(|point| {
            let jac = jacobian_at(&coeffs, point.location);
            FixedPointReport {
                point,
                verdict: classify(&jac, T::of(CLASSIFY_TOL)),
                scenario: scenario.to_string(),
            }
        })
        .collect())
}
