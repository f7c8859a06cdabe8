//! Extension constructions: disc extensions of circle maps with a fixed
//! point and their conjugation to star-shaped planar domains.

pub mod conjugate;
pub mod disc;
pub mod domain;
pub mod witness;

pub use conjugate::{conjugate_boundary_map, ConjugatedMap};
pub use disc::{extend_disc_collapse0, extend_disc_rotation, DiscExtension, RotationSchedule, Strategy};
pub use domain::{extend_domain, DomainExtension};
pub use witness::{witness_identity_extension, WitnessExtension};
