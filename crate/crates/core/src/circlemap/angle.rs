use std::fmt;

use crate::scalar::Scalar;

/// Reduces `x` into `[0, 2pi)`.
///
/// Values that land on `2pi` after rounding are mapped to `0`.
#[inline]
pub fn canonicalize<T: Scalar>(x: T) -> T {
    let tau = T::TAU();
    let r = x - tau * (x / tau).floor();
    if r >= tau || r < T::zero() {
        T::zero()
    } else {
        r
    }
}

/// Reduces `x` into `(-pi, pi]`.
#[inline]
pub fn wrap_to_pi<T: Scalar>(x: T) -> T {
    let r = canonicalize(x);
    if r > T::PI() {
        r - T::TAU()
    } else {
        r
    }
}

/// Length of the shorter arc between two angles, in `[0, pi]`.
#[inline]
pub fn circle_distance<T: Scalar>(a: T, b: T) -> T {
    wrap_to_pi(a - b).abs()
}

/// A point of the unit circle, stored as its canonical angle in `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle<T>(T);

impl<T: Scalar> Angle<T> {
    pub fn new(radians: T) -> Self {
        Angle(canonicalize(radians))
    }

    pub fn zero() -> Self {
        Angle(T::zero())
    }

    #[inline]
    pub fn radians(self) -> T {
        self.0
    }

    pub fn distance(self, other: Angle<T>) -> T {
        circle_distance(self.0, other.0)
    }

    pub fn cos_sin(self) -> (T, T) {
        (self.0.cos(), self.0.sin())
    }
}

impl<T: Scalar> fmt::Display for Angle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
