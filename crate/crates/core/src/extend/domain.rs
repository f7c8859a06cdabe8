//! Transport of a disc extension to a star-shaped planar domain:
//! `psi = dh^-1 o G' o h`, with `G'` extending the conjugated boundary map.

use super::conjugate::ConjugatedMap;
use super::disc::{DiscExtension, Strategy};
use crate::circlemap::{fixed_points, Angle, CircleMap};
use crate::error::{Error, Result};
use crate::geom2d::{BoundaryHomeo, Circle, PlanarDomain, PlanarPoint};
use crate::scalar::Scalar;

/// Residual used to locate the fixed point the extension is anchored to.
/// Tighter than [`crate::Tolerances::fixed_point`] so that the transported
/// point passes the disc-extension check with room to spare.
pub const ANCHOR_ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct DomainExtension<T, M> {
    disc: DiscExtension<T, ConjugatedMap<T, M>>,
    /// Fixed point of `f` in the boundary parametrization.
    fixed_param: Angle<T>,
}

impl<T: Scalar, M: CircleMap<T>> DomainExtension<T, M> {
    /// Extension of `f` (a circle map in the angular parametrization of the
    /// boundary about the anchor) using the domain's circumscribed circle.
    pub fn new(domain: PlanarDomain<T>, f: M, strategy: Strategy) -> Result<Self> {
        let circle = domain.circumscribed_circle()?;
        Self::with_circle(domain, circle, f, strategy)
    }

    pub fn with_circle(domain: PlanarDomain<T>, circle: Circle<T>, f: M, strategy: Strategy) -> Result<Self> {
        let root_tol = T::tol(ANCHOR_ROOT_TOL.max(T::tolerances().bisection_width));
        let p = fixed_points(&f, root_tol)?
            .representative()
            .ok_or(Error::NoFixedPoint)?;
        let homeo = BoundaryHomeo::new(domain, circle)?;
        let p_circle = homeo.forward(homeo.domain().boundary_point(p.radians())?)?;
        let disc = DiscExtension::new(strategy, ConjugatedMap::new(homeo, f), p_circle)?;
        Ok(DomainExtension { disc, fixed_param: p })
    }

    pub fn homeo(&self) -> &BoundaryHomeo<T> {
        self.disc.map().homeo()
    }

    pub fn domain(&self) -> &PlanarDomain<T> {
        self.homeo().domain()
    }

    pub fn circle(&self) -> &Circle<T> {
        self.homeo().circle()
    }

    pub fn strategy(&self) -> Strategy {
        self.disc.strategy()
    }

    /// The boundary map `f` in the angular parametrization.
    pub fn boundary_map(&self) -> &M {
        self.disc.map().inner()
    }

    /// The conjugated circle map `f'`.
    pub fn conjugated(&self) -> &ConjugatedMap<T, M> {
        self.disc.map()
    }

    pub fn disc_extension(&self) -> &DiscExtension<T, ConjugatedMap<T, M>> {
        &self.disc
    }

    /// The fixed point `p` of `f` the construction is anchored to.
    pub fn fixed_param(&self) -> Angle<T> {
        self.fixed_param
    }

    /// `f(b(theta))` as a boundary point.
    pub fn apply_boundary_map(&self, theta: T) -> Result<PlanarPoint<T>> {
        self.domain().boundary_point(self.boundary_map().lift(theta)?)
    }

    /// `psi(q)`; always a boundary point.
    pub fn eval(&self, q: PlanarPoint<T>) -> Result<PlanarPoint<T>> {
        let (t, phi) = self.homeo().disc_coordinates(q)?;
        let image = self.disc.eval_polar(t, phi.radians())?;
        self.homeo().inverse(image.radians())
    }
}

/// Extension `psi: C -> dC` of a boundary map with a fixed point.
pub fn extend_domain<T: Scalar, M: CircleMap<T>>(
    domain: PlanarDomain<T>,
    f: M,
    strategy: Strategy,
) -> Result<DomainExtension<T, M>> {
    DomainExtension::new(domain, f, strategy)
}
