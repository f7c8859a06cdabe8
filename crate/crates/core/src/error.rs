use thiserror::Error;

pub use crate::circlemap::expr::{EvalError, ParseError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error("expression is not a circle-map lift: F(2pi) - F(0) = {span} is {residual:e} away from a multiple of 2pi")]
    NonIntegerWinding { span: f64, residual: f64 },

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("direction undefined: point coincides with the anchor")]
    UndefinedDirection,

    #[error("point ({x}, {y}) lies outside the domain")]
    OutsideDomain { x: f64, y: f64 },

    #[error("ray at angle {theta} does not meet the boundary")]
    RayMiss { theta: f64 },

    #[error("boundary map has no fixed point")]
    NoFixedPoint,

    #[error("angle {angle} is not fixed by the boundary map (residual {residual:e})")]
    NotFixed { angle: f64, residual: f64 },

    #[error("strategy `{strategy}` needs a degree-0 boundary map, got degree {degree}")]
    StrategyInapplicable { strategy: &'static str, degree: i64 },

    #[error("surface model constraint violated: {0}")]
    ModelConstraint(String),

    #[error("meridian inversion did not converge for arclength {0}")]
    NewtonNonConvergence(f64),

    #[error("sampled map jumps by {step} >= pi between samples {index} and {next}; sampling too coarse to unwrap")]
    UnwrapAmbiguity { index: usize, next: usize, step: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
