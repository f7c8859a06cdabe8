//! `H = exp_o o psi o log_o` for a region around the pole of a surface.

use super::domain::GeodesicDomain;
use super::surface::{PoleSurface, SurfacePoint};
use crate::circlemap::CircleMap;
use crate::error::Result;
use crate::extend::{DomainExtension, Strategy};
use crate::geom2d::Circle;
use crate::scalar::Scalar;

/// Extension of a boundary map of `dV` to all of `V`, built by pulling `V`
/// back to the tangent plane at the pole and extending there.
///
/// Boundary maps are given in the geodesic polar angle, so the pulled-back
/// map `exp^-1 o f o exp` has the same lift as `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceExtension<T, M> {
    surface: PoleSurface<T>,
    domain: GeodesicDomain<T>,
    planar: DomainExtension<T, M>,
}

impl<T: Scalar, M: CircleMap<T>> SurfaceExtension<T, M> {
    pub fn new(domain: GeodesicDomain<T>, f: M, strategy: Strategy) -> Result<Self> {
        let circle = domain.pulled_back().circumscribed_circle()?;
        Self::with_circle(domain, circle, f, strategy)
    }

    /// As [`SurfaceExtension::new`] with the circle around the pulled-back
    /// domain given explicitly.
    pub fn with_circle(domain: GeodesicDomain<T>, circle: Circle<T>, f: M, strategy: Strategy) -> Result<Self> {
        let planar = DomainExtension::with_circle(domain.pulled_back().clone(), circle, f, strategy)?;
        Ok(SurfaceExtension {
            surface: *domain.surface(),
            domain,
            planar,
        })
    }

    pub fn surface(&self) -> &PoleSurface<T> {
        &self.surface
    }

    pub fn domain(&self) -> &GeodesicDomain<T> {
        &self.domain
    }

    /// The extension `psi` on the pulled-back domain.
    pub fn planar(&self) -> &DomainExtension<T, M> {
        &self.planar
    }

    /// `f(b(theta))` on the surface.
    pub fn apply_boundary_map(&self, theta: T) -> Result<SurfacePoint<T>> {
        self.domain.boundary_point(self.planar.boundary_map().lift(theta)?)
    }

    /// `H(q)`; always a point of `dV`.
    pub fn eval(&self, q: &SurfacePoint<T>) -> Result<SurfacePoint<T>> {
        let v = self.surface.log_chart(q)?;
        self.surface.exp_chart(self.planar.eval(v)?)
    }
}

pub fn extend_on_surface<T: Scalar, M: CircleMap<T>>(
    domain: GeodesicDomain<T>,
    f: M,
    strategy: Strategy,
) -> Result<SurfaceExtension<T, M>> {
    SurfaceExtension::new(domain, f, strategy)
}
