//! Floating-point scalar abstraction and the tolerance record.

use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point type the geometry is generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display + Default + Send + Sync + 'static
{
    /// Tolerances calibrated for this precision.
    fn tolerances() -> &'static Tolerances;

    /// Converts an `f64` literal. Panics only for values not representable at all.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn tol(x: f64) -> Self {
        Self::lit(x)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn tolerances() -> &'static Tolerances {
        &Tolerances::DOUBLE
    }
}

impl Scalar for f32 {
    fn tolerances() -> &'static Tolerances {
        &Tolerances::SINGLE
    }
}

/// Number of intervals of the uniform grid used for lift analysis
/// (degree check, fixed-point bracketing, positivity of radial functions).
pub const ANALYSIS_GRID: usize = 4096;

/// Every named numeric threshold of the library.
///
/// All comparisons go through one of these; `DOUBLE` is the reference
/// record, `SINGLE` loosens it for `f32` instantiations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed deviation of `F(2pi) - F(0)` from `2pi * degree`.
    pub winding: f64,
    /// Residual at which a circle point counts as fixed when building an extension.
    pub fixed_point: f64,
    /// Bracket width at which fixed-point bisection stops.
    pub bisection_width: f64,
    /// Roots closer than `dedup_factor * tol` are merged.
    pub dedup_factor: f64,
    /// Relative slack of the enclosing-circle containment test inside Welzl.
    pub mec_contains: f64,
    /// Relative slack for "point lies in circle" checks on finished circles.
    pub containment: f64,
    /// Minimum distance of the anchor from the boundary.
    pub anchor_margin: f64,
    /// Relative slack when testing that a point lies inside a domain.
    pub inside_slack: f64,
    /// Angular nudge applied to rays that graze a polygon vertex or edge.
    pub ray_nudge: f64,
    /// Parameter slack when accepting a ray-segment hit at a segment end.
    pub segment_slack: f64,
    /// Distance below which a point coincides with the anchor.
    pub coincidence: f64,
    /// Relative step size at which the meridian Newton iteration stops.
    pub newton_step: f64,
    /// Allowed violation of a surface model constraint.
    pub model_constraint: f64,
}

impl Tolerances {
    pub const DOUBLE: Tolerances = Tolerances {
        winding: 1e-9,
        fixed_point: 1e-9,
        bisection_width: 1e-12,
        dedup_factor: 10.0,
        mec_contains: 1e-14,
        containment: 1e-9,
        anchor_margin: 1e-9,
        inside_slack: 1e-9,
        ray_nudge: 1e-12,
        segment_slack: 1e-12,
        coincidence: 1e-14,
        newton_step: 4.0 * f64::EPSILON,
        model_constraint: 1e-9,
    };

    pub const SINGLE: Tolerances = Tolerances {
        winding: 1e-4,
        fixed_point: 1e-4,
        bisection_width: 1e-6,
        dedup_factor: 10.0,
        mec_contains: 1e-6,
        containment: 1e-5,
        anchor_margin: 1e-5,
        inside_slack: 1e-5,
        ray_nudge: 1e-5,
        segment_slack: 1e-6,
        coincidence: 1e-6,
        newton_step: 4.0 * f32::EPSILON as f64,
        model_constraint: 1e-5,
    };
}

/// Newton iterations allowed before the meridian inversion reports failure.
pub const NEWTON_MAX_ITER: usize = 100;
