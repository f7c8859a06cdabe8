//! Numerical checks of extension maps: fixed-point scanning, boundary
//! restriction error, oscillation at a point and degree estimation, plus a
//! deterministic report format.
//!
//! Everything here is double precision.

pub mod degree;
pub mod oscillation;
pub mod report;
pub mod scan;

pub use degree::{estimate_degree, sample_boundary_map};
pub use oscillation::{oscillation_profile, oscillation_profile_with, OscillationProfile, MIN_RING_SAMPLES};
pub use report::{validate_report_json, CandidateRecord, VerificationReport};
pub use scan::{scan_fixed_points, scan_with, CoarseSample, FixedPointCandidate, ScanConfig, ScanOutcome};

use crate::circlemap::CircleMap;
use crate::error::Result;
use crate::extend::{DiscExtension, DomainExtension, WitnessExtension};
use crate::geom2d::{PlanarDomain, PlanarPoint, Shape};
use crate::manifold::{GeodesicDomain, SurfaceExtension, SurfacePoint};

/// Flag set when more than half of the coarse grid consists of candidates.
pub const FLAG_IDENTITY_LIKE: &str = "identity-like";
/// Flag set when some cell stopped refining because of the evaluation budget.
pub const FLAG_BUDGET_EXHAUSTED: &str = "refinement-budget-exhausted";

/// A point type with a distance, used to measure residuals.
pub trait Metric: Copy + Send + Sync {
    fn distance(&self, other: &Self) -> f64;

    /// Coordinates for output: `(x, y)` or `(x, y, z)`.
    fn coords(&self) -> Vec<f64>;
}

impl Metric for PlanarPoint<f64> {
    fn distance(&self, other: &Self) -> f64 {
        self.dist(*other)
    }

    fn coords(&self) -> Vec<f64> {
        vec![self.x, self.y]
    }
}

impl Metric for SurfacePoint<f64> {
    fn distance(&self, other: &Self) -> f64 {
        self.coordinate_distance(other)
    }

    fn coords(&self) -> Vec<f64> {
        let c = self.components();
        c[..self.dimension()].to_vec()
    }
}

/// A map of a region into itself (or into its boundary).
pub trait SelfMap<P>: Sync {
    fn apply(&self, p: &P) -> Result<P>;
}

impl<P, F> SelfMap<P> for F
where
    F: Fn(&P) -> Result<P> + Sync,
{
    fn apply(&self, p: &P) -> Result<P> {
        self(p)
    }
}

impl<M: CircleMap<f64>> SelfMap<PlanarPoint<f64>> for DomainExtension<f64, M> {
    fn apply(&self, p: &PlanarPoint<f64>) -> Result<PlanarPoint<f64>> {
        self.eval(*p)
    }
}

impl<M: CircleMap<f64>> SelfMap<PlanarPoint<f64>> for DiscExtension<f64, M> {
    fn apply(&self, p: &PlanarPoint<f64>) -> Result<PlanarPoint<f64>> {
        self.eval_point(*p)
    }
}

impl SelfMap<PlanarPoint<f64>> for WitnessExtension<f64> {
    fn apply(&self, p: &PlanarPoint<f64>) -> Result<PlanarPoint<f64>> {
        self.eval(*p)
    }
}

impl<M: CircleMap<f64>> SelfMap<SurfacePoint<f64>> for SurfaceExtension<f64, M> {
    fn apply(&self, p: &SurfacePoint<f64>) -> Result<SurfacePoint<f64>> {
        self.eval(p)
    }
}

/// A region star-shaped about a center, addressed in polar coordinates
/// relative to its boundary.
pub trait PolarRegion<P>: Sync {
    /// The point at fraction `s` of the way from the center to the boundary
    /// in direction `theta`.
    fn polar_point(&self, s: f64, theta: f64) -> Result<P>;

    fn boundary_point(&self, theta: f64) -> Result<P>;

    /// Distance between two points of the region, used for residuals.
    fn distance(&self, a: &P, b: &P) -> f64;

    /// Distance from `p` to the boundary (for curved surfaces, measured in
    /// the tangent plane at the pole).
    fn boundary_distance(&self, p: &P) -> Result<f64>;
}

/// Number of boundary samples used for distances to radial boundaries.
const RADIAL_DISTANCE_SAMPLES: usize = 4096;

impl PolarRegion<PlanarPoint<f64>> for PlanarDomain<f64> {
    fn polar_point(&self, s: f64, theta: f64) -> Result<PlanarPoint<f64>> {
        let o = self.anchor();
        Ok(o + (self.boundary_point(theta)? - o) * s)
    }

    fn boundary_point(&self, theta: f64) -> Result<PlanarPoint<f64>> {
        PlanarDomain::boundary_point(self, theta)
    }

    fn distance(&self, a: &PlanarPoint<f64>, b: &PlanarPoint<f64>) -> f64 {
        a.dist(*b)
    }

    fn boundary_distance(&self, p: &PlanarPoint<f64>) -> Result<f64> {
        Ok(match self.shape() {
            Shape::Disc { center, radius } => (radius - p.dist(*center)).abs(),
            Shape::Polygon(v) => polyline_distance(*p, v),
            Shape::Radial(_) => polyline_distance(*p, &self.domain_boundary_samples(RADIAL_DISTANCE_SAMPLES)?),
        })
    }
}

impl PolarRegion<SurfacePoint<f64>> for GeodesicDomain<f64> {
    fn polar_point(&self, s: f64, theta: f64) -> Result<SurfacePoint<f64>> {
        GeodesicDomain::polar_point(self, s, theta)
    }

    fn boundary_point(&self, theta: f64) -> Result<SurfacePoint<f64>> {
        GeodesicDomain::boundary_point(self, theta)
    }

    /// The surface's own distance where it has a closed form (see
    /// [`crate::manifold::PoleSurface::model_distance`]).
    fn distance(&self, a: &SurfacePoint<f64>, b: &SurfacePoint<f64>) -> f64 {
        self.surface().model_distance(a, b)
    }

    fn boundary_distance(&self, p: &SurfacePoint<f64>) -> Result<f64> {
        let v = self.surface().log_chart(p)?;
        self.pulled_back().boundary_distance(&v)
    }
}

/// Distance from `q` to the closed polyline through `verts`.
fn polyline_distance(q: PlanarPoint<f64>, verts: &[PlanarPoint<f64>]) -> f64 {
    let n = verts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (verts[i], verts[(i + 1) % n]);
            let ab = b - a;
            let len2 = ab.norm_sq();
            let u = if len2 > 0.0 {
                ((q - a).dot(ab) / len2).clamp(0.0, 1.0)
            } else {
                0.0
            };
            q.dist(a + ab * u)
        })
        .fold(f64::INFINITY, f64::min)
}

/// `max_k dist(map(b(theta_k)), f_b(theta_k))` over `theta_k = 2 pi k / n`,
/// where `f_b(theta)` is the prescribed image of the boundary point `b(theta)`.
pub fn boundary_error<P, M, R, F>(map: &M, region: &R, f_b: F, n: usize) -> Result<f64>
where
    P: Metric,
    M: SelfMap<P> + ?Sized,
    R: PolarRegion<P> + ?Sized,
    F: Fn(f64) -> Result<P>,
{
    if n < 3 {
        return Err(crate::Error::InvalidArgument(format!(
            "need at least 3 boundary samples, got {n}"
        )));
    }
    let mut worst = 0.0f64;
    for k in 0..n {
        let theta = std::f64::consts::TAU * k as f64 / n as f64;
        let got = map.apply(&region.boundary_point(theta)?)?;
        let err = got.distance(&f_b(theta)?);
        worst = if err.is_nan() { f64::NAN } else { worst.max(err) };
    }
    Ok(worst)
}
