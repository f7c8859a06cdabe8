use super::surface::{PoleSurface, SurfacePoint, TangentVector};
use crate::circlemap::LiftExpr;
use crate::error::Result;
use crate::geom2d::PlanarDomain;
use crate::scalar::Scalar;

/// A region `V` around the pole, given by its boundary in geodesic polar
/// coordinates: `dV = { exp_o(rho_g(theta), theta) }`.
///
/// Geodesic convexity on curved models is taken on trust; the construction
/// only needs `log_o(V)` to be star-shaped about the origin, which holds by
/// definition.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicDomain<T> {
    surface: PoleSurface<T>,
    pulled_back: PlanarDomain<T>,
}

impl<T: Scalar> GeodesicDomain<T> {
    pub fn new(surface: PoleSurface<T>, rho_g: LiftExpr) -> Result<Self> {
        let pulled_back = PlanarDomain::radial(rho_g)?;
        Ok(GeodesicDomain { surface, pulled_back })
    }

    pub fn surface(&self) -> &PoleSurface<T> {
        &self.surface
    }

    pub fn rho_g(&self) -> &LiftExpr {
        match self.pulled_back.shape() {
            crate::geom2d::Shape::Radial(rho) => rho,
            _ => unreachable!("pulled-back domains are radial"),
        }
    }

    /// `V_0 = log_o(V)` as a radial planar domain anchored at the origin.
    pub fn pulled_back(&self) -> &PlanarDomain<T> {
        &self.pulled_back
    }

    pub fn boundary_radius(&self, theta: T) -> Result<T> {
        Ok(self.rho_g().eval(theta)?)
    }

    pub fn boundary_point(&self, theta: T) -> Result<SurfacePoint<T>> {
        self.surface
            .exp_o(TangentVector::new(self.boundary_radius(theta)?, theta)?)
    }

    /// `exp_o(s rho_g(theta), theta)`, the point at fraction `s` of the way
    /// from the pole to the boundary.
    pub fn polar_point(&self, s: T, theta: T) -> Result<SurfacePoint<T>> {
        self.surface
            .exp_o(TangentVector::new(s * self.boundary_radius(theta)?, theta)?)
    }

    pub fn contains(&self, q: &SurfacePoint<T>) -> Result<bool> {
        self.pulled_back.contains(self.surface.log_chart(q)?)
    }

    /// Largest geodesic radius of the boundary, sampled on `n` directions.
    pub fn max_radius(&self, n: usize) -> Result<T> {
        let tau = T::TAU();
        let mut best = T::zero();
        for k in 0..n.max(1) {
            best = best.max(self.boundary_radius(tau * T::lit(k as f64) / T::lit(n as f64))?);
        }
        Ok(best)
    }
}

/// `V_0 = exp_o^-1(V)`: a radial planar domain with the same radial function.
pub fn pull_back_domain<T: Scalar>(domain: &GeodesicDomain<T>) -> PlanarDomain<T> {
    domain.pulled_back().clone()
}
