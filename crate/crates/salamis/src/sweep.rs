//! Single-parameter attractor sweeps, period detection, Lyapunov exponents,
//! and the branch-crossing locator.

use crate::error::{Error, Result};
use crate::model::{
    derive_coefficients, jacobian_at, MapCoefficients, ModelParams, ParamId, State,
};
use crate::num::Real;

/// Default number of discarded warm-up steps.
pub const DEFAULT_TRANSIENT: usize = 500;

/// Default number of retained samples.
pub const DEFAULT_SAMPLES: usize = 200;

/// Default per-coordinate divergence threshold for sweeps.
pub const DEFAULT_DIVERGENCE_THRESHOLD: f64 = 1e6;

/// Max-norm tolerance for declaring two samples equal in period detection.
pub const PERIOD_TOL: f64 = 1e-6;

/// Largest period searched before declaring a sample set aperiodic.
pub const PERIOD_MAX: usize = 64;

/// Default iteration counts for the tangent-vector Lyapunov estimate.
pub const LYAPUNOV_ITERATIONS: usize = 5000;
pub const LYAPUNOV_TRANSIENT: usize = 500;

/// Bracket shrink target for the crossing locator.
pub const CROSSING_TOL: f64 = 1e-6;

/// Configuration of one parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig<T> {
    pub parameter: ParamId,
    pub lo: T,
    pub hi: T,
    pub points: usize,
    pub transient: usize,
    pub samples: usize,
    pub initial: State<T>,
    pub divergence_threshold: T,
    pub lyapunov: bool,
}

impl<T: Real> SweepConfig<T> {
    pub fn new(parameter: ParamId, lo: T, hi: T, points: usize) -> Self {
        Self {
            parameter,
            lo,
            hi,
            points,
            transient: DEFAULT_TRANSIENT,
            samples: DEFAULT_SAMPLES,
            initial: State::new(T::of(0.5), T::of(0.5)),
            divergence_threshold: T::of(DEFAULT_DIVERGENCE_THRESHOLD),
            lyapunov: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::Config("sweep range must be finite with lo < hi".into()));
        }
        if self.points < 2 {
            return Err(Error::Config("sweep needs at least 2 grid points".into()));
        }
        if self.transient < 1 || self.samples < 1 {
            return Err(Error::Config("transient and samples must be at least 1".into()));
        }
        if !self.initial.is_finite() {
            return Err(Error::Config("sweep initial state must be finite".into()));
        }
        Ok(())
    }

    /// Evenly spaced grid, endpoints included.
    pub fn grid(&self) -> Vec<T> {
        let n = self.points;
        let span = self.hi - self.lo;
        let denom = T::of((n - 1) as f64);
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    self.hi
                } else {
                    self.lo + span * T::of(i as f64) / denom
                }
            })
            .collect()
    }
}

/// Long-run characterization of the attractor at one parameter value.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult<T> {
    pub value: T,
    /// Post-transient samples (empty if the orbit diverged in the transient).
    pub samples: Vec<State<T>>,
    /// Detected period; `None` means aperiodic (or diverged).
    pub period: Option<usize>,
    /// Largest Lyapunov exponent (natural log per step) when enabled.
    pub lyapunov: Option<T>,
    pub diverged: bool,
}

impl<T: Real> SweepResult<T> {
    /// Aperiodic, bounded, and exponentially separating: the operational
    /// chaos criterion.
    pub fn is_chaotic(&self) -> bool {
        !self.diverged
            && self.period.is_none()
            && self.lyapunov.is_some_and(|l| l > T::of(0.01))
    }
}

/// Smallest period p <= p_max such that samples repeat with shift p within
/// `tol` in the max norm; `None` means aperiodic. Needs at least 2*p_max
/// samples.
pub fn detect_period<T: Real>(
    samples: &[State<T>],
    tol: T,
    p_max: usize,
) -> Result<Option<usize>> {
    if samples.len() < 2 * p_max {
        return Err(Error::InsufficientSamples {
            got: samples.len(),
            need: 2 * p_max,
        });
    }
    Ok(first_period(samples, tol, p_max))
}

fn first_period<T: Real>(samples: &[State<T>], tol: T, p_max: usize) -> Option<usize> {
    let n = samples.len();
    'outer: for p in 1..=p_max.min(n.saturating_sub(1)) {
        for k in 0..n - p {
            if samples[k + p].dist_max(&samples[k]) >= tol {
                continue 'outer;
            }
        }
        return Some(p);
    }
    None
}

/// Iterate past the transient, collect samples, detect the period, and
/// optionally estimate the Lyapunov exponent — for one parameter value.
fn characterize<T: Real>(
    params: &ModelParams<T>,
    config: &SweepConfig<T>,
    value: T,
) -> Result<SweepResult<T>> {
    let p = params.with(config.parameter, value);
    let coeffs = derive_coefficients(&p)?;
    let thresh = config.divergence_threshold;
    let over = |s: &State<T>| !s.is_finite() || s.x.abs() > thresh || s.y.abs() > thresh;

    let mut s = config.initial;
    for _ in 0..config.transient {
        s = coeffs.apply(s);
        if over(&s) {
            return Ok(SweepResult {
                value,
                samples: Vec::new(),
                period: None,
                lyapunov: None,
                diverged: true,
            });
        }
    }
    let mut samples = Vec::with_capacity(config.samples);
    for _ in 0..config.samples {
        s = coeffs.apply(s);
        if over(&s) {
            return Ok(SweepResult {
                value,
                samples,
                period: None,
                lyapunov: None,
                diverged: true,
            });
        }
        samples.push(s);
    }
    // Cap the searchable period by the sample count.
    let p_max = PERIOD_MAX.min(samples.len() / 2);
    let period = if p_max == 0 {
        None
    } else {
        first_period(&samples, T::of(PERIOD_TOL), p_max)
    };
    let lyapunov = if config.lyapunov {
        lyapunov_max_with(
            &coeffs,
            config.initial,
            LYAPUNOV_ITERATIONS,
            LYAPUNOV_TRANSIENT,
            thresh,
        )
        .ok()
    } else {
        None
    };
    Ok(SweepResult {
        value,
        samples,
        period,
        lyapunov,
        diverged: false,
    })
}

/// Characterize the attractor at each grid value of one parameter. Values
/// outside [0,1] are swept verbatim (exploration-mode validation). Output
/// order follows the grid.
pub fn sweep<T: Real>(
    params: &ModelParams<T>,
    config: &SweepConfig<T>,
) -> Result<Vec<SweepResult<T>>> {
    config.validate()?;
    config
        .grid()
        .into_iter()
        .map(|v| characterize(params, config, v))
        .collect()
}

/// Largest Lyapunov exponent by tangent-vector iteration: evolve a unit
/// vector by the Jacobian along the orbit, renormalizing each step, and
/// average the log growth after the transient.
pub fn lyapunov_max<T: Real>(
    coeffs: &MapCoefficients<T>,
    initial: State<T>,
    iterations: usize,
    transient: usize,
) -> Result<T> {
    lyapunov_max_with(
        coeffs,
        initial,
        iterations,
        transient,
        T::of(DEFAULT_DIVERGENCE_THRESHOLD),
    )
}

fn lyapunov_max_with<T: Real>(
    coeffs: &MapCoefficients<T>,
    initial: State<T>,
    iterations: usize,
    transient: usize,
    threshold: T,
) -> Result<T> {
    if iterations <= transient {
        return Err(Error::Config("iterations must exceed transient".into()));
    }
    let over = |s: &State<T>| !s.is_finite() || s.x.abs() > threshold || s.y.abs() > threshold;
    let mut s = initial;
    for t in 0..transient {
        s = coeffs.apply(s);
        if over(&s) {
            return Err(Error::Diverged { last_valid: t });
        }
    }
    let mut v = [T::one(), T::zero()];
    let mut acc = T::zero();
    let n = iterations - transient;
    for t in 0..n {
        let w = jacobian_at(coeffs, s).mul_vec(v);
        let norm = (w[0] * w[0] + w[1] * w[1]).sqrt();
        // ln(0) = -inf is the honest answer for a tangent vector annihilated
        // by a singular Jacobian
        acc = acc + norm.ln();
        if norm > T::zero() {
            v = [w[0] / norm, w[1] / norm];
        }
        s = coeffs.apply(s);
        if over(&s) {
            return Err(Error::Diverged {
                last_valid: transient + t,
            });
        }
    }
    Ok(acc / T::of(n as f64))
}

/// Asymptotic attractor coordinates at one parameter value, requiring a
/// period-1 attractor.
fn attractor_point<T: Real>(
    params: &ModelParams<T>,
    parameter: ParamId,
    value: T,
) -> Result<State<T>> {
    let config = SweepConfig::new(parameter, value, value + T::of(1.0), 2);
    let r = characterize(params, &config, value)?;
    if r.diverged || r.period != Some(1) {
        return Err(Error::NonPeriodOneAttractor {
            parameter: parameter.name(),
            value: value.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(*r.samples.last().expect("period-1 result has samples"))
}

/// Critical parameter value where the two players' asymptotic coordinates
/// cross: bisection on g(v) = x*(v) - y*(v) over the bracket, where (x*, y*)
/// is the period-1 attractor at v. Both endpoints must have period-1
/// attractors with g of opposite signs; an endpoint with g = 0 is returned
/// directly.
pub fn crossing_point<T: Real>(
    params: &ModelParams<T>,
    parameter: ParamId,
    bracket: (T, T),
) -> Result<T> {
    let (mut lo, mut hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Config("bracket must be finite with lo < hi".into()));
    }
    let g = |v: T| -> Result<T> {
        let s = attractor_point(params, parameter, v)?;
        Ok(s.x - s.y)
    };
    let mut g_lo = g(lo)?;
    let g_hi = g(hi)?;
    if g_lo == T::zero() {
        return Ok(lo);
    }
    if g_hi == T::zero() {
        return Ok(hi);
    }
    if (g_lo < T::zero()) == (g_hi < T::zero()) {
        return Err(Error::NoCrossing {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    let tol = T::of(CROSSING_TOL);
    let half = T::of(0.5);
    while hi - lo > tol {
        let mid = (lo + hi) * half;
        if mid == lo || mid == hi {
            break;
        }
        let g_mid = g(mid)?;
        if g_mid == T::zero() {
            return Ok(mid);
        }
        if (g_mid < T::zero()) == (g_lo < T::zero()) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * half)
}
