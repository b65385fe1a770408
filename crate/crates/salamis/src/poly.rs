//! Real root isolation for low-degree polynomials.
//!
//! Roots on an interval are located two ways at once: a uniform sign-change
//! scan, and bisection between the critical points obtained by recursing on
//! the derivative (which also catches tangent double roots). Every candidate
//! is polished with Newton steps and must pass a residual bar relative to the
//! coefficient scale.

use crate::num::Real;

/// Dense polynomial, coefficients in ascending order of degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Number of uniform scan subintervals.
pub const SCAN_SUBINTERVALS: usize = 4096;

/// Two roots closer than this (in x) collapse into one.
pub const ROOT_DEDUP_TOL: f64 = 1e-8;

/// Accepted residual is `RESIDUAL_REL * scale` where scale bounds the
/// magnitude of the polynomial's terms over the interval.
pub const RESIDUAL_REL: f64 = 1e-12;

impl<T: Real> Polynomial<T> {
    /// Build from ascending coefficients, trimming leading (high-degree)
    /// zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && *coeffs.last().unwrap() == T::zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: T) -> T {
        let mut acc = T::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial<T> {
        if self.coeffs.len() == 1 {
            return Polynomial::new(vec![T::zero()]);
        }
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * T::of(i as f64))
            .collect();
        Polynomial::new(d)
    }

    /// Bound on the magnitude of any term over [lo, hi].
    fn scale(&self, lo: T, hi: T) -> T {
        let bound = lo.abs().max(hi.abs()).max(T::one());
        let mut pow = T::one();
        let mut acc = T::zero();
        for &c in &self.coeffs {
            acc = acc + c.abs() * pow;
            pow = pow * bound;
        }
        acc.max(T::one())
    }

    /// All real roots in [lo, hi], ascending, deduplicated, each polished to
    /// a residual below `RESIDUAL_REL * scale`. An empty result is valid.
    pub fn real_roots(&self, lo: T, hi: T) -> Vec<T> {
        assert!(lo.is_finite() && hi.is_finite() && lo < hi, "bad interval");
        let n = self.degree();
        if n == 0 {
            return Vec::new(); // constant: no isolated roots reported
        }
        if n == 1 {
            let r = -self.coeffs[0] / self.coeffs[1];
            return if r >= lo && r <= hi { vec![r] } else { Vec::new() };
        }

        let scale = self.scale(lo, hi);
        let residual_bar = T::of(RESIDUAL_REL) * scale;
        let mut candidates: Vec<T> = Vec::new();

        // Uniform sign-change scan.
        let m = T::of(SCAN_SUBINTERVALS as f64);
        let width = hi - lo;
        let mut prev_x = lo;
        let mut prev_f = self.eval(lo);
        for i in 1..=SCAN_SUBINTERVALS {
            let x = lo + width * T::of(i as f64) / m;
            let f = self.eval(x);
            if prev_f == T::zero() {
                candidates.push(prev_x);
            } else if (prev_f < T::zero()) != (f < T::zero()) {
                candidates.push(self.bisect(prev_x, x, prev_f, f));
            }
            prev_x = x;
            prev_f = f;
        }
        if prev_f == T::zero() {
            candidates.push(prev_x);
        }

        // Monotonic segments between critical points; recursion depth is the
        // degree, so at most 3 levels for a quartic.
        let crits = self.derivative().real_roots(lo, hi);
        let mut breaks = vec![lo];
        breaks.extend(crits.iter().copied());
        breaks.push(hi);
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a >= b {
                continue;
            }
            let (fa, fb) = (self.eval(a), self.eval(b));
            if fa == T::zero() {
                candidates.push(a);
            }
            if fb == T::zero() {
                candidates.push(b);
            }
            if (fa < T::zero()) != (fb < T::zero()) {
                candidates.push(self.bisect(a, b, fa, fb));
            }
        }
        // Tangent (even-multiplicity) roots sit at critical points where the
        // value itself is tiny; the sign scan cannot see them.
        for &t in &crits {
            if self.eval(t).abs() < residual_bar {
                candidates.push(t);
            }
        }

        let mut roots: Vec<T> = candidates
            .into_iter()
            .map(|r| self.newton_polish(r, lo, hi))
            .filter(|&r| {
                r >= lo - T::of(1e-9) && r <= hi + T::of(1e-9) && self.eval(r).abs() < residual_bar
            })
            .collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let dedup = T::of(ROOT_DEDUP_TOL);
        let mut out: Vec<T> = Vec::new();
        for r in roots {
            if out.last().is_none_or(|&p| r - p > dedup) {
                out.push(r);
            }
        }
        out
    }

    fn bisect(&self, mut lo: T, mut hi: T, mut flo: T, _fhi: T) -> T {
        let half = T::of(0.5);
        for _ in 0..200 {
            let mid = (lo + hi) * half;
            if mid == lo || mid == hi {
                return mid;
            }
            let fm = self.eval(mid);
            if fm == T::zero() {
                return mid;
            }
            if (fm < T::zero()) == (flo < T::zero()) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        (lo + hi) * half
    }

    fn newton_polish(&self, mut x: T, lo: T, hi: T) -> T {
        let d = self.derivative();
        let slack = T::of(1e-6);
        for _ in 0..60 {
            let f = self.eval(x);
            let df = d.eval(x);
            if df == T::zero() {
                break;
            }
            let nx = x - f / df;
            if !nx.is_finite() || nx < lo - slack || nx > hi + slack || nx == x {
                break;
            }
            x = nx;
        }
        x
    }
}
