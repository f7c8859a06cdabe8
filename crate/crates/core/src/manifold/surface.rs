//! Surfaces with a pole `o` and closed-form exponential/logarithm maps at `o`.
//!
//! Points are stored in the model's natural coordinates: the plane itself,
//! the Poincare disc, or ambient 3-space for the paraboloid
//! `z = (x^2 + y^2) / 2`. Tangent vectors at the pole use geodesic polar
//! coordinates `(r, theta)`; the "chart" variants work with Cartesian
//! tangent vectors instead.

use crate::circlemap::Angle;
use crate::error::{Error, Result};
use crate::geom2d::PlanarPoint;
use crate::scalar::{Scalar, NEWTON_MAX_ITER};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PoleSurface<T> {
    Euclidean,
    /// Constant curvature `kappa < 0`, Poincare disc coordinates.
    Hyperbolic {
        kappa: T,
    },
    /// `z = (x^2 + y^2) / 2` with the pole at the apex.
    Paraboloid,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector<T> {
    pub r: T,
    pub theta: Angle<T>,
}

impl<T: Scalar> TangentVector<T> {
    pub fn new(r: T, theta: T) -> Result<Self> {
        if !(r >= T::zero()) || !r.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tangent length must be finite and >= 0, got {r}"
            )));
        }
        Ok(TangentVector {
            r,
            theta: Angle::new(theta),
        })
    }

    pub fn to_cartesian(self) -> PlanarPoint<T> {
        PlanarPoint::from_polar(self.r, self.theta.radians())
    }

    pub fn from_cartesian(v: PlanarPoint<T>) -> Self {
        let r = v.norm();
        let theta = if r == T::zero() {
            Angle::zero()
        } else {
            Angle::new(v.angle())
        };
        TangentVector { r, theta }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfacePoint<T> {
    Plane(PlanarPoint<T>),
    Poincare(PlanarPoint<T>),
    Ambient { x: T, y: T, z: T },
}

impl<T: Scalar> SurfacePoint<T> {
    /// Coordinates padded with `z = 0` for the planar models.
    pub fn components(&self) -> [T; 3] {
        match *self {
            SurfacePoint::Plane(p) | SurfacePoint::Poincare(p) => [p.x, p.y, T::zero()],
            SurfacePoint::Ambient { x, y, z } => [x, y, z],
        }
    }

    /// Number of meaningful coordinates (2 or 3).
    pub fn dimension(&self) -> usize {
        match self {
            SurfacePoint::Ambient { .. } => 3,
            _ => 2,
        }
    }

    /// Euclidean distance of the coordinate vectors.
    pub fn coordinate_distance(&self, other: &Self) -> T {
        let (a, b) = (self.components(), other.components());
        let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    }
}

/// Arclength of the paraboloid meridian from the apex to horizontal radius `rho`:
/// `s(rho) = (rho sqrt(1 + rho^2) + asinh(rho)) / 2`.
pub fn meridian_arclength<T: Scalar>(rho: T) -> T {
    (rho * (T::one() + rho * rho).sqrt() + rho.asinh()) / T::lit(2.0)
}

/// Inverse of [`meridian_arclength`] on `[0, inf)` by Newton's method,
/// safeguarded by the bracket `[0, min(s, sqrt(2 s))]`.
pub fn meridian_radius<T: Scalar>(s: T) -> Result<T> {
    if !(s >= T::zero()) || !s.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "arclength must be finite and >= 0, got {s}"
        )));
    }
    if s == T::zero() {
        return Ok(T::zero());
    }
    let two = T::lit(2.0);
    let mut lo = T::zero();
    let mut hi = s.min((two * s).sqrt());
    // s is convex, so Newton started right of the root decreases monotonically
    let mut rho = hi;
    let stop = T::tol(T::tolerances().newton_step);
    for _ in 0..NEWTON_MAX_ITER {
        let f = meridian_arclength(rho) - s;
        if f == T::zero() {
            return Ok(rho);
        }
        if f > T::zero() {
            hi = rho;
        } else {
            lo = rho;
        }
        let mut next = rho - f / (T::one() + rho * rho).sqrt();
        if !(next > lo && next < hi) {
            next = (lo + hi) / two;
        }
        let step = (next - rho).abs();
        rho = next;
        if step <= stop * rho.max(T::one()) {
            return Ok(rho);
        }
    }
    Err(Error::NewtonNonConvergence(s.as_f64()))
}

impl<T: Scalar> PoleSurface<T> {
    pub fn hyperbolic(kappa: T) -> Result<Self> {
        if !(kappa < T::zero()) || !kappa.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "hyperbolic curvature must be negative, got {kappa}"
            )));
        }
        Ok(PoleSurface::Hyperbolic { kappa })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PoleSurface::Euclidean => "euclidean",
            PoleSurface::Hyperbolic { .. } => "hyperbolic",
            PoleSurface::Paraboloid => "paraboloid",
        }
    }

    pub fn is_flat(&self) -> bool {
        matches!(self, PoleSurface::Euclidean)
    }

    pub fn pole(&self) -> SurfacePoint<T> {
        match self {
            PoleSurface::Euclidean => SurfacePoint::Plane(PlanarPoint::origin()),
            PoleSurface::Hyperbolic { .. } => SurfacePoint::Poincare(PlanarPoint::origin()),
            PoleSurface::Paraboloid => SurfacePoint::Ambient {
                x: T::zero(),
                y: T::zero(),
                z: T::zero(),
            },
        }
    }

    /// Checks that `q` belongs to this model and satisfies its constraint.
    pub fn validate(&self, q: &SurfacePoint<T>) -> Result<()> {
        let tol = T::tol(T::tolerances().model_constraint);
        match (self, q) {
            (PoleSurface::Euclidean, SurfacePoint::Plane(p)) if p.is_finite() => Ok(()),
            (PoleSurface::Hyperbolic { .. }, SurfacePoint::Poincare(u)) => {
                if u.norm() < T::one() {
                    Ok(())
                } else {
                    Err(Error::ModelConstraint(format!(
                        "Poincare point has norm {} >= 1",
                        u.norm()
                    )))
                }
            }
            (PoleSurface::Paraboloid, &SurfacePoint::Ambient { x, y, z }) => {
                let want = (x * x + y * y) / T::lit(2.0);
                if (z - want).abs() <= tol * (T::one() + z.abs()) {
                    Ok(())
                } else {
                    Err(Error::ModelConstraint(format!("z = {z} but (x^2 + y^2)/2 = {want}")))
                }
            }
            _ => Err(Error::ModelConstraint(format!(
                "point {q:?} does not belong to the {} model",
                self.name()
            ))),
        }
    }

    /// `exp_o` on a tangent vector in geodesic polar coordinates.
    pub fn exp_o(&self, v: TangentVector<T>) -> Result<SurfacePoint<T>> {
        let (c, s) = v.theta.cos_sin();
        Ok(match *self {
            PoleSurface::Euclidean => SurfacePoint::Plane(PlanarPoint::new(v.r * c, v.r * s)),
            PoleSurface::Hyperbolic { kappa } => {
                let rp = poincare_radius(kappa, v.r);
                SurfacePoint::Poincare(PlanarPoint::new(rp * c, rp * s))
            }
            PoleSurface::Paraboloid => {
                let rho = meridian_radius(v.r)?;
                SurfacePoint::Ambient {
                    x: rho * c,
                    y: rho * s,
                    z: rho * rho / T::lit(2.0),
                }
            }
        })
    }

    /// `exp_o^-1`; the pole maps to `r = 0, theta = 0`.
    pub fn log_o(&self, q: &SurfacePoint<T>) -> Result<TangentVector<T>> {
        self.validate(q)?;
        let (r, dir) = match (*self, *q) {
            (PoleSurface::Euclidean, SurfacePoint::Plane(p)) => (p.norm(), p),
            (PoleSurface::Hyperbolic { kappa }, SurfacePoint::Poincare(u)) => (geodesic_radius(kappa, u.norm()), u),
            (PoleSurface::Paraboloid, SurfacePoint::Ambient { x, y, .. }) => {
                let p = PlanarPoint::new(x, y);
                (meridian_arclength(p.norm()), p)
            }
            _ => unreachable!("validated above"),
        };
        let theta = if dir.norm() == T::zero() {
            Angle::zero()
        } else {
            Angle::new(dir.angle())
        };
        Ok(TangentVector { r, theta })
    }

    /// `exp_o` on a Cartesian tangent vector. Identity for the Euclidean model.
    pub fn exp_chart(&self, v: PlanarPoint<T>) -> Result<SurfacePoint<T>> {
        let r = v.norm();
        Ok(match *self {
            PoleSurface::Euclidean => SurfacePoint::Plane(v),
            PoleSurface::Hyperbolic { kappa } => {
                if r == T::zero() {
                    return Ok(self.pole());
                }
                SurfacePoint::Poincare(v * (poincare_radius(kappa, r) / r))
            }
            PoleSurface::Paraboloid => {
                if r == T::zero() {
                    return Ok(self.pole());
                }
                let rho = meridian_radius(r)?;
                let h = v * (rho / r);
                SurfacePoint::Ambient {
                    x: h.x,
                    y: h.y,
                    z: rho * rho / T::lit(2.0),
                }
            }
        })
    }

    /// `exp_o^-1` as a Cartesian tangent vector. Identity for the Euclidean model.
    pub fn log_chart(&self, q: &SurfacePoint<T>) -> Result<PlanarPoint<T>> {
        self.validate(q)?;
        Ok(match (*self, *q) {
            (PoleSurface::Euclidean, SurfacePoint::Plane(p)) => p,
            (PoleSurface::Hyperbolic { kappa }, SurfacePoint::Poincare(u)) => {
                let n = u.norm();
                if n == T::zero() {
                    return Ok(PlanarPoint::origin());
                }
                u * (geodesic_radius(kappa, n) / n)
            }
            (PoleSurface::Paraboloid, SurfacePoint::Ambient { x, y, .. }) => {
                let p = PlanarPoint::new(x, y);
                let rho = p.norm();
                if rho == T::zero() {
                    return Ok(PlanarPoint::origin());
                }
                p * (meridian_arclength(rho) / rho)
            }
            _ => unreachable!("validated above"),
        })
    }

    /// Distance between two points of the model: Euclidean distance in the
    /// plane, the hyperbolic distance in the Poincare disc, and the ambient
    /// chord on the paraboloid (a lower bound for its geodesic distance that
    /// agrees with it to second order). Points from another model give NaN.
    pub fn model_distance(&self, a: &SurfacePoint<T>, b: &SurfacePoint<T>) -> T {
        match (*self, *a, *b) {
            (PoleSurface::Hyperbolic { kappa }, SurfacePoint::Poincare(u), SurfacePoint::Poincare(v)) => {
                let denom = ((T::one() - u.norm_sq()) * (T::one() - v.norm_sq())).sqrt();
                T::lit(2.0) * (u.dist(v) / denom).asinh() / (-kappa).sqrt()
            }
            (PoleSurface::Euclidean, SurfacePoint::Plane(_), SurfacePoint::Plane(_))
            | (PoleSurface::Paraboloid, SurfacePoint::Ambient { .. }, SurfacePoint::Ambient { .. }) => {
                a.coordinate_distance(b)
            }
            _ => T::nan(),
        }
    }

    /// Geodesic distance from the pole.
    pub fn distance_from_pole(&self, q: &SurfacePoint<T>) -> Result<T> {
        Ok(self.log_o(q)?.r)
    }

    /// A constant `c > 0` with `|exp(a) - exp(b)| >= c |a - b|` in model
    /// coordinates for all tangent vectors of length at most `rmax`.
    ///
    /// For a radial chart `v -> g(|v|) v/|v|` with `g` increasing,
    /// `c = inf min(g'(r), g(r)/r)` over `[0, rmax]` works; the ambient
    /// `z` of the paraboloid only adds distance.
    pub fn chart_distortion_lower_bound(&self, rmax: T) -> Result<T> {
        let half = T::lit(0.5);
        Ok(match *self {
            PoleSurface::Euclidean => T::one(),
            PoleSurface::Hyperbolic { kappa } => {
                let k = (-kappa).sqrt();
                // g' = (k/2) sech^2(k r / 2) decreases and is below g(r)/r
                let sech = T::one() / (k * rmax * half).cosh();
                k * half * sech * sech
            }
            PoleSurface::Paraboloid => {
                // g = s^-1, g' = 1/sqrt(1 + rho^2) decreases and is below g(r)/r
                let rho = meridian_radius(rmax)?;
                T::one() / (T::one() + rho * rho).sqrt()
            }
        })
    }
}

fn poincare_radius<T: Scalar>(kappa: T, r: T) -> T {
    (r * (-kappa).sqrt() / T::lit(2.0)).tanh()
}

fn geodesic_radius<T: Scalar>(kappa: T, rp: T) -> T {
    T::lit(2.0) * rp.atanh() / (-kappa).sqrt()
}
