//! Minimal 2x2 real matrix with closed-form eigenvalues.

use num_complex::Complex;

use crate::num::Real;

/// Row-major 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T> {
    pub m11: T,
    pub m12: T,
    pub m21: T,
    pub m22: T,
}

impl<T: Real> Mat2<T> {
    pub fn new(m11: T, m12: T, m21: T, m22: T) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn trace(&self) -> T {
        self.m11 + self.m22
    }

    pub fn det(&self) -> T {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// trace^2 - 4 det, the discriminant of the characteristic polynomial.
    pub fn discriminant(&self) -> T {
        let tr = self.trace();
        tr * tr - T::of(4.0) * self.det()
    }

    /// Roots of lambda^2 - trace*lambda + det, ordered by (re, im) descending.
    pub fn eigenvalues(&self) -> [Complex<T>; 2] {
        let half = T::of(0.5);
        let mid = self.trace() * half;
        let disc = self.discriminant();
        if disc >= T::zero() {
            let r = disc.sqrt() * half;
            [
                Complex::new(mid + r, T::zero()),
                Complex::new(mid - r, T::zero()),
            ]
        } else {
            let r = (-disc).sqrt() * half;
            [Complex::new(mid, r), Complex::new(mid, -r)]
        }
    }

    pub fn mul_vec(&self, v: [T; 2]) -> [T; 2] {
        [
            self.m11 * v[0] + self.m12 * v[1],
            self.m21 * v[0] + self.m22 * v[1],
        ]
    }
}
