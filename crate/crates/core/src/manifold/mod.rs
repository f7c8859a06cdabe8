//! Surfaces with a pole and the extension pipeline through `exp_o`.

pub mod domain;
pub mod pipeline;
pub mod surface;

pub use domain::{pull_back_domain, GeodesicDomain};
pub use pipeline::{extend_on_surface, SurfaceExtension};
pub use surface::{meridian_arclength, meridian_radius, PoleSurface, SurfacePoint, TangentVector};
