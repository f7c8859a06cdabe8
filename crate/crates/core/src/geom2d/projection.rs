//! Radial projection from the anchor onto a surrounding circle, and its
//! restriction to the domain boundary.

use super::domain::PlanarDomain;
use super::point::{Circle, PlanarPoint};
use crate::circlemap::Angle;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Angle (about the circle center) where the ray from the anchor through `q`
/// leaves `circle`.
pub fn project_to_circle<T: Scalar>(
    domain: &PlanarDomain<T>,
    circle: &Circle<T>,
    q: PlanarPoint<T>,
) -> Result<Angle<T>> {
    let o = domain.anchor();
    let v = q - o;
    let r = v.norm();
    if r <= T::tol(T::tolerances().coincidence) {
        return Err(Error::UndefinedDirection);
    }
    if !domain.contains(q)? {
        return Err(Error::OutsideDomain {
            x: q.x.as_f64(),
            y: q.y.as_f64(),
        });
    }
    Ok(circle_exit_angle(circle, o, v * (T::one() / r)))
}

fn circle_exit_angle<T: Scalar>(circle: &Circle<T>, origin: PlanarPoint<T>, dir: PlanarPoint<T>) -> Angle<T> {
    let s = circle.ray_exit(origin, dir);
    Angle::new((origin + dir * s - circle.center).angle())
}

/// The boundary homeomorphism `dh: boundary -> circle` and its inverse for a
/// star-shaped domain inside a circle.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryHomeo<T> {
    domain: PlanarDomain<T>,
    circle: Circle<T>,
}

impl<T: Scalar> BoundaryHomeo<T> {
    pub fn new(domain: PlanarDomain<T>, circle: Circle<T>) -> Result<Self> {
        if !(domain.anchor().dist(circle.center) < circle.radius) {
            return Err(Error::InvalidArgument(
                "surrounding circle must contain the anchor in its interior".into(),
            ));
        }
        Ok(BoundaryHomeo { domain, circle })
    }

    pub fn domain(&self) -> &PlanarDomain<T> {
        &self.domain
    }

    pub fn circle(&self) -> &Circle<T> {
        &self.circle
    }

    /// `dh(b)`: boundary point to circle angle.
    pub fn forward(&self, b: PlanarPoint<T>) -> Result<Angle<T>> {
        project_to_circle(&self.domain, &self.circle, b)
    }

    /// `dh^-1(phi)`: circle angle to the boundary point on the same ray from the anchor.
    pub fn inverse(&self, phi: T) -> Result<PlanarPoint<T>> {
        self.domain.boundary_point(self.direction_of(phi))
    }

    /// Direction (about the anchor) of the circle point at `phi`, in `(-pi, pi]`.
    pub fn direction_of(&self, phi: T) -> T {
        (self.circle.point_at(phi) - self.domain.anchor()).angle()
    }

    /// Circle angle hit by the ray from the anchor in direction `theta`.
    pub fn circle_angle_of(&self, theta: T) -> Angle<T> {
        circle_exit_angle(&self.circle, self.domain.anchor(), PlanarPoint::unit(theta))
    }

    /// Polar coordinates `(t, phi)` of `q` in the unit disc model: `phi` is the
    /// projection angle and `t` the distance to the anchor as a fraction of
    /// the boundary distance along the same ray. The anchor itself maps to `t = 0`.
    pub fn disc_coordinates(&self, q: PlanarPoint<T>) -> Result<(T, Angle<T>)> {
        let o = self.domain.anchor();
        let v = q - o;
        let r = v.norm();
        if r <= T::tol(T::tolerances().coincidence) {
            return Ok((T::zero(), Angle::zero()));
        }
        let b = self.domain.boundary_point(v.angle())?;
        let t = r / b.dist(o);
        let slack = T::tol(T::tolerances().inside_slack);
        if t > T::one() + slack {
            return Err(Error::OutsideDomain {
                x: q.x.as_f64(),
                y: q.y.as_f64(),
            });
        }
        Ok((t.min(T::one()), circle_exit_angle(&self.circle, o, v * (T::one() / r))))
    }
}
