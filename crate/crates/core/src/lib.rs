//! Extensions of circle and boundary maps without interior fixed points.
//!
//! A continuous map `f` of the unit circle with a fixed point extends to the
//! closed disc without fixed points in the interior; the construction carries
//! over to star-shaped planar domains by radial projection onto a surrounding
//! circle, and to regions around the pole of a surface through `exp_o`.
//!
//! The geometry is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix it to `f64`, which is what the verification layer uses.

// `!(x > 0)` is used on purpose: it rejects NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circlemap;
pub mod error;
pub mod extend;
pub mod geom2d;
pub mod manifold;
pub mod scalar;
pub mod verify;

pub use circlemap::{
    canonicalize, circle_distance, fixed_point_residual, fixed_points, make_circle_map, wrap_to_pi, CircleMap,
    FixedPointSet, LiftExpr,
};
pub use error::{Error, Result};
pub use extend::{
    conjugate_boundary_map, extend_disc_collapse0, extend_disc_rotation, extend_domain, witness_identity_extension,
    Strategy,
};
pub use geom2d::{min_enclosing_circle, project_to_circle};
pub use manifold::{extend_on_surface, pull_back_domain};
pub use scalar::{Scalar, Tolerances};

pub type Angle = circlemap::Angle<f64>;
pub type LiftedCircleMap = circlemap::LiftedCircleMap<f64>;
pub type PlanarPoint = geom2d::PlanarPoint<f64>;
pub type Circle = geom2d::Circle<f64>;
pub type PlanarDomain = geom2d::PlanarDomain<f64>;
pub type BoundaryHomeo = geom2d::BoundaryHomeo<f64>;
pub type PoleSurface = manifold::PoleSurface<f64>;
pub type SurfacePoint = manifold::SurfacePoint<f64>;
pub type TangentVector = manifold::TangentVector<f64>;
pub type GeodesicDomain = manifold::GeodesicDomain<f64>;
pub type DomainExtension<M> = extend::DomainExtension<f64, M>;
pub type DiscExtension<M> = extend::DiscExtension<f64, M>;
pub type SurfaceExtension<M> = manifold::SurfaceExtension<f64, M>;
pub type WitnessExtension = extend::WitnessExtension<f64>;
