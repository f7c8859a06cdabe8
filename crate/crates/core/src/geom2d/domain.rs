//! Star-shaped planar regions with an anchor (focus) and their angular
//! boundary parametrization `theta -> b(theta)` about the anchor.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mec::{min_enclosing_circle, min_enclosing_circle_with_rng};
use super::point::{Circle, PlanarPoint};
use crate::circlemap::LiftExpr;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ANALYSIS_GRID};

/// Boundary samples fed to the enclosing-circle computation for radial shapes.
pub const RADIAL_CIRCLE_SAMPLES: usize = 1024;
/// Denser samples used to widen that circle over the arcs between samples.
pub const RADIAL_COVER_SAMPLES: usize = 16384;

#[derive(Debug, Clone, PartialEq)]
pub enum Shape<T> {
    Disc {
        center: PlanarPoint<T>,
        radius: T,
    },
    /// Simple polygon, counterclockwise.
    Polygon(Vec<PlanarPoint<T>>),
    /// `{ r (cos t, sin t) : 0 <= r <= rho(t) }`, star-shaped about the origin.
    Radial(LiftExpr),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanarDomain<T> {
    shape: Shape<T>,
    anchor: PlanarPoint<T>,
}

/// Result of casting a ray from the anchor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayHit<T> {
    pub point: PlanarPoint<T>,
    /// Set when the ray grazed a vertex and was re-cast at a nudged angle.
    pub nudged: bool,
}

impl<T: Scalar> PlanarDomain<T> {
    /// Disc anchored at its center.
    pub fn disc(center: PlanarPoint<T>, radius: T) -> Result<Self> {
        if !(radius > T::zero()) || !radius.is_finite() || !center.is_finite() {
            return Err(Error::InvalidDomain(format!(
                "disc radius must be positive and finite, got {radius}"
            )));
        }
        Ok(PlanarDomain {
            shape: Shape::Disc { center, radius },
            anchor: center,
        })
    }

    pub fn unit_disc() -> Self {
        Self::disc(PlanarPoint::origin(), T::one()).expect("unit disc is valid")
    }

    /// Simple polygon with nonempty kernel, anchored at the average of the
    /// kernel's vertices. Clockwise input is reversed.
    pub fn polygon(vertices: Vec<PlanarPoint<T>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidDomain("polygon needs at least 3 vertices".into()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidDomain("polygon vertex is not finite".into()));
        }
        let mut vertices = vertices;
        let area = signed_area(&vertices);
        if area == T::zero() {
            return Err(Error::InvalidDomain("polygon has zero area".into()));
        }
        if area < T::zero() {
            vertices[1..].reverse();
        }
        check_simple(&vertices)?;
        let kernel = polygon_kernel(&vertices);
        if kernel.len() < 3 {
            return Err(Error::InvalidDomain("polygon is not star-shaped: empty kernel".into()));
        }
        let n = T::lit(kernel.len() as f64);
        let sum = kernel.iter().fold(PlanarPoint::origin(), |acc, &p| acc + p);
        let anchor = sum * (T::one() / n);
        let domain = PlanarDomain {
            shape: Shape::Polygon(vertices),
            anchor,
        };
        domain.check_anchor(anchor)?;
        Ok(domain)
    }

    /// Radial region about the origin. `rho` must be positive, finite and
    /// `2pi`-periodic on the analysis grid.
    pub fn radial(rho: LiftExpr) -> Result<Self> {
        let tau = T::TAU();
        let n = T::lit(ANALYSIS_GRID as f64);
        let mut min = T::infinity();
        for j in 0..=ANALYSIS_GRID {
            let r = rho.eval(tau * T::lit(j as f64) / n)?;
            if !r.is_finite() {
                return Err(Error::InvalidDomain(format!("radial function `{rho}` is not finite")));
            }
            min = min.min(r);
        }
        if !(min > T::zero()) {
            return Err(Error::InvalidDomain(format!(
                "radial function `{rho}` must stay positive (minimum {min})"
            )));
        }
        let seam = (rho.eval(tau)? - rho.eval(T::zero())?).abs();
        if seam > T::tol(T::tolerances().winding) {
            return Err(Error::InvalidDomain(format!(
                "radial function `{rho}` is not 2pi-periodic"
            )));
        }
        Ok(PlanarDomain {
            shape: Shape::Radial(rho),
            anchor: PlanarPoint::origin(),
        })
    }

    /// Replaces the anchor after checking that it is a strict star center.
    pub fn with_anchor(mut self, anchor: PlanarPoint<T>) -> Result<Self> {
        self.check_anchor(anchor)?;
        self.anchor = anchor;
        Ok(self)
    }

    fn check_anchor(&self, o: PlanarPoint<T>) -> Result<()> {
        let margin = T::tol(T::tolerances().anchor_margin);
        if !o.is_finite() {
            return Err(Error::InvalidDomain("anchor is not finite".into()));
        }
        match &self.shape {
            Shape::Disc { center, radius } => {
                if o.dist(*center) > *radius - margin {
                    return Err(Error::InvalidDomain("anchor must lie strictly inside the disc".into()));
                }
            }
            Shape::Polygon(v) => {
                let n = v.len();
                for i in 0..n {
                    let (a, b) = (v[i], v[(i + 1) % n]);
                    let e = b - a;
                    if e.cross(o - a) / e.norm() < margin {
                        return Err(Error::InvalidDomain(
                            "anchor must lie strictly inside the polygon kernel".into(),
                        ));
                    }
                }
            }
            Shape::Radial(_) => {
                if o.norm() != T::zero() {
                    return Err(Error::InvalidDomain("radial domains are anchored at the origin".into()));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Shape<T> {
        &self.shape
    }

    pub fn anchor(&self) -> PlanarPoint<T> {
        self.anchor
    }

    /// Kernel of a polygon domain (convex, counterclockwise); `None` for other shapes.
    pub fn kernel(&self) -> Option<Vec<PlanarPoint<T>>> {
        match &self.shape {
            Shape::Polygon(v) => Some(polygon_kernel(v)),
            _ => None,
        }
    }

    /// Advisory convexity check: all consecutive edge cross products share a sign.
    pub fn is_convex(&self) -> bool {
        match &self.shape {
            Shape::Polygon(v) => {
                let n = v.len();
                (0..n).all(|i| {
                    let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
                    (b - a).cross(c - b) >= T::zero()
                })
            }
            _ => true,
        }
    }

    /// The unique boundary point on the ray from the anchor at angle `theta`.
    pub fn ray_boundary_intersection(&self, theta: T) -> Result<RayHit<T>> {
        let o = self.anchor;
        match &self.shape {
            Shape::Disc { center, radius } => {
                let d = PlanarPoint::unit(theta);
                let s = Circle::new(*center, *radius).ray_exit(o, d);
                Ok(RayHit {
                    point: o + d * s,
                    nudged: false,
                })
            }
            Shape::Radial(rho) => Ok(RayHit {
                point: o + PlanarPoint::from_polar(rho.eval(theta)?, theta),
                nudged: false,
            }),
            Shape::Polygon(v) => {
                if let Some(p) = polygon_exit(v, o, theta) {
                    return Ok(RayHit {
                        point: p,
                        nudged: false,
                    });
                }
                let nudged = theta + T::tol(T::tolerances().ray_nudge);
                polygon_exit(v, o, nudged)
                    .map(|p| RayHit { point: p, nudged: true })
                    .ok_or(Error::RayMiss { theta: theta.as_f64() })
            }
        }
    }

    /// `b(theta)`.
    #[inline]
    pub fn boundary_point(&self, theta: T) -> Result<PlanarPoint<T>> {
        Ok(self.ray_boundary_intersection(theta)?.point)
    }

    /// Distance from the anchor to the boundary along direction `theta`.
    pub fn boundary_radius(&self, theta: T) -> Result<T> {
        Ok(self.boundary_point(theta)?.dist(self.anchor))
    }

    /// All distinct boundary crossings of the ray at `theta` (polygons only;
    /// other shapes report their single crossing).
    pub fn ray_boundary_hits(&self, theta: T) -> Result<Vec<PlanarPoint<T>>> {
        match &self.shape {
            Shape::Polygon(v) => {
                let mut hits = polygon_hits(v, self.anchor, theta);
                let merge = T::tol(T::tolerances().containment);
                hits.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
                let mut out: Vec<PlanarPoint<T>> = Vec::new();
                for (_, p) in hits {
                    if out.last().is_none_or(|q| q.dist(p) > merge) {
                        out.push(p);
                    }
                }
                Ok(out)
            }
            _ => Ok(vec![self.boundary_point(theta)?]),
        }
    }

    /// `b(2pi k / n)` for `k = 0..n`.
    pub fn domain_boundary_samples(&self, n: usize) -> Result<Vec<PlanarPoint<T>>> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "need at least 3 boundary samples, got {n}"
            )));
        }
        let tau = T::TAU();
        (0..n)
            .map(|k| self.boundary_point(tau * T::lit(k as f64) / T::lit(n as f64)))
            .collect()
    }

    /// Inside or on the boundary, with relative slack.
    pub fn contains(&self, q: PlanarPoint<T>) -> Result<bool> {
        let v = q - self.anchor;
        let r = v.norm();
        if r <= T::tol(T::tolerances().coincidence) {
            return Ok(true);
        }
        let slack = T::tol(T::tolerances().inside_slack);
        let rb = self.boundary_radius(v.angle())?;
        Ok(r <= rb * (T::one() + slack) + slack)
    }

    /// Smallest circle containing the domain: the disc itself, the MEC of the
    /// polygon vertices, or for radial shapes the MEC of
    /// [`RADIAL_CIRCLE_SAMPLES`] boundary samples widened to cover
    /// [`RADIAL_COVER_SAMPLES`] denser ones.
    pub fn circumscribed_circle(&self) -> Result<Circle<T>> {
        self.circumscribe(|pts| min_enclosing_circle(pts))
    }

    /// As [`Self::circumscribed_circle`], shuffling with a ChaCha8 stream seeded by `seed`.
    pub fn circumscribed_circle_seeded(&self, seed: u64) -> Result<Circle<T>> {
        self.circumscribed_circle_with_rng(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn circumscribed_circle_with_rng<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Circle<T>> {
        self.circumscribe(|pts| min_enclosing_circle_with_rng(pts, rng))
    }

    fn circumscribe(&self, mec: impl FnOnce(&[PlanarPoint<T>]) -> Circle<T>) -> Result<Circle<T>> {
        match &self.shape {
            Shape::Disc { center, radius } => Ok(Circle::new(*center, *radius)),
            Shape::Polygon(v) => Ok(mec(v)),
            Shape::Radial(_) => {
                let samples = self.domain_boundary_samples(RADIAL_CIRCLE_SAMPLES)?;
                let mut circle = mec(&samples);
                for p in self.domain_boundary_samples(RADIAL_COVER_SAMPLES)? {
                    circle.radius = circle.radius.max(circle.center.dist(p));
                }
                Ok(circle)
            }
        }
    }
}

fn signed_area<T: Scalar>(v: &[PlanarPoint<T>]) -> T {
    let n = v.len();
    let twice = (0..n).fold(T::zero(), |acc, i| acc + v[i].cross(v[(i + 1) % n]));
    twice / T::lit(2.0)
}

fn check_simple<T: Scalar>(v: &[PlanarPoint<T>]) -> Result<()> {
    let n = v.len();
    for i in 0..n {
        if v[i] == v[(i + 1) % n] {
            return Err(Error::InvalidDomain("polygon has a repeated vertex".into()));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            // adjacent edges share a vertex by construction
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            if segments_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) {
                return Err(Error::InvalidDomain("polygon is not simple".into()));
            }
        }
    }
    Ok(())
}

fn segments_touch<T: Scalar>(a: PlanarPoint<T>, b: PlanarPoint<T>, c: PlanarPoint<T>, d: PlanarPoint<T>) -> bool {
    let orient = |p: PlanarPoint<T>, q: PlanarPoint<T>, r: PlanarPoint<T>| (q - p).cross(r - p);
    let on_segment = |p: PlanarPoint<T>, q: PlanarPoint<T>, r: PlanarPoint<T>| {
        r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
    };
    let (d1, d2) = (orient(c, d, a), orient(c, d, b));
    let (d3, d4) = (orient(a, b, c), orient(a, b, d));
    if ((d1 > T::zero() && d2 < T::zero()) || (d1 < T::zero() && d2 > T::zero()))
        && ((d3 > T::zero() && d4 < T::zero()) || (d3 < T::zero() && d4 > T::zero()))
    {
        return true;
    }
    (d1 == T::zero() && on_segment(c, d, a))
        || (d2 == T::zero() && on_segment(c, d, b))
        || (d3 == T::zero() && on_segment(a, b, c))
        || (d4 == T::zero() && on_segment(a, b, d))
}

/// Intersection of the inner half-planes of a counterclockwise polygon's
/// edges, by successive convex clipping of a bounding box.
pub fn polygon_kernel<T: Scalar>(v: &[PlanarPoint<T>]) -> Vec<PlanarPoint<T>> {
    let (mut lo, mut hi) = (v[0], v[0]);
    for p in v {
        lo = PlanarPoint::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = PlanarPoint::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let pad = (hi - lo).norm() + T::one();
    let mut region = vec![
        PlanarPoint::new(lo.x - pad, lo.y - pad),
        PlanarPoint::new(hi.x + pad, lo.y - pad),
        PlanarPoint::new(hi.x + pad, hi.y + pad),
        PlanarPoint::new(lo.x - pad, hi.y + pad),
    ];
    let n = v.len();
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        region = clip_left_of(&region, a, b);
        if region.is_empty() {
            break;
        }
    }
    region
}

fn clip_left_of<T: Scalar>(poly: &[PlanarPoint<T>], a: PlanarPoint<T>, b: PlanarPoint<T>) -> Vec<PlanarPoint<T>> {
    let e = b - a;
    let side = |p: PlanarPoint<T>| e.cross(p - a);
    let mut out = Vec::with_capacity(poly.len() + 1);
    let m = poly.len();
    for i in 0..m {
        let (p, q) = (poly[i], poly[(i + 1) % m]);
        let (sp, sq) = (side(p), side(q));
        if sp >= T::zero() {
            out.push(p);
        }
        if (sp >= T::zero()) != (sq >= T::zero()) {
            let t = sp / (sp - sq);
            out.push(p + (q - p) * t);
        }
    }
    out
}

fn polygon_hits<T: Scalar>(v: &[PlanarPoint<T>], o: PlanarPoint<T>, theta: T) -> Vec<(T, PlanarPoint<T>)> {
    let d = PlanarPoint::unit(theta);
    let slack = T::tol(T::tolerances().segment_slack);
    let n = v.len();
    let mut hits = Vec::new();
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        let e = b - a;
        let denom = d.cross(e);
        if denom == T::zero() {
            continue;
        }
        let w = a - o;
        let s = w.cross(e) / denom;
        let u = w.cross(d) / denom;
        if s > T::zero() && u >= -slack && u <= T::one() + slack {
            let u = u.max(T::zero()).min(T::one());
            hits.push((s, a + e * u));
        }
    }
    hits
}

fn polygon_exit<T: Scalar>(v: &[PlanarPoint<T>], o: PlanarPoint<T>, theta: T) -> Option<PlanarPoint<T>> {
    polygon_hits(v, o, theta)
        .into_iter()
        .min_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"))
        .map(|(_, p)| p)
}
