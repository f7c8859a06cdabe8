use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanarPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> PlanarPoint<T> {
    pub const fn new(x: T, y: T) -> Self {
        PlanarPoint { x, y }
    }

    pub fn origin() -> Self {
        PlanarPoint::new(T::zero(), T::zero())
    }

    /// Unit vector at angle `theta`.
    pub fn unit(theta: T) -> Self {
        PlanarPoint::new(theta.cos(), theta.sin())
    }

    pub fn from_polar(r: T, theta: T) -> Self {
        PlanarPoint::new(r * theta.cos(), r * theta.sin())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Self) -> T {
        (self - o).norm()
    }

    /// `atan2(y, x)` in `(-pi, pi]`.
    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<T: Scalar> Add for PlanarPoint<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        PlanarPoint::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> Sub for PlanarPoint<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        PlanarPoint::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Mul<T> for PlanarPoint<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        PlanarPoint::new(self.x * s, self.y * s)
    }
}

impl<T: Scalar> Neg for PlanarPoint<T> {
    type Output = Self;
    fn neg(self) -> Self {
        PlanarPoint::new(-self.x, -self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle<T> {
    pub center: PlanarPoint<T>,
    pub radius: T,
}

impl<T: Scalar> Circle<T> {
    pub fn new(center: PlanarPoint<T>, radius: T) -> Self {
        Circle { center, radius }
    }

    /// Inside or on the circle, with relative slack `rel` and the same absolute slack.
    pub fn contains_with(&self, p: PlanarPoint<T>, rel: T) -> bool {
        self.center.dist(p) <= self.radius * (T::one() + rel) + rel
    }

    pub fn contains(&self, p: PlanarPoint<T>) -> bool {
        self.contains_with(p, T::tol(T::tolerances().containment))
    }

    /// Point of the circle at angle `phi` about its center.
    pub fn point_at(&self, phi: T) -> PlanarPoint<T> {
        self.center + PlanarPoint::unit(phi) * self.radius
    }

    /// Ray parameter `s > 0` with `|origin + s dir - center| = radius`, for
    /// `origin` inside the circle and unit `dir`.
    pub fn ray_exit(&self, origin: PlanarPoint<T>, dir: PlanarPoint<T>) -> T {
        let w = origin - self.center;
        let b = w.dot(dir);
        let c = w.norm_sq() - self.radius * self.radius;
        let disc = (b * b - c).max(T::zero()).sqrt();
        if b > T::zero() {
            // avoids cancellation in -b + disc
            if disc + b == T::zero() {
                T::zero()
            } else {
                -c / (b + disc)
            }
        } else {
            disc - b
        }
    }
}
