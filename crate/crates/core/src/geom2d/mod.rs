//! Planar primitives: star-shaped domains, the minimum enclosing circle,
//! ray casting from the anchor and the radial projections onto a circle.

pub mod domain;
pub mod mec;
pub mod point;
pub mod projection;

pub use domain::{polygon_kernel, PlanarDomain, RayHit, Shape};
pub use mec::{circumcircle, min_enclosing_circle, min_enclosing_circle_with_rng, DEFAULT_MEC_SEED};
pub use point::{Circle, PlanarPoint};
pub use projection::{project_to_circle, BoundaryHomeo};
