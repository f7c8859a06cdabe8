//! Minimum enclosing circle, randomized incremental (Welzl, move-to-front
//! formulation after Nayuki). Expected linear time.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::point::{Circle, PlanarPoint};
use crate::scalar::Scalar;

/// Seed used when the caller does not supply a generator.
pub const DEFAULT_MEC_SEED: u64 = 0x5EED_C1C1E;

/// Smallest circle containing every point, with the default seed.
///
/// Panics on an empty slice.
pub fn min_enclosing_circle<T: Scalar>(points: &[PlanarPoint<T>]) -> Circle<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_MEC_SEED);
    min_enclosing_circle_with_rng(points, &mut rng)
}

pub fn min_enclosing_circle_with_rng<T: Scalar, R: Rng + ?Sized>(points: &[PlanarPoint<T>], rng: &mut R) -> Circle<T> {
    assert!(!points.is_empty(), "enclosing circle of an empty set");
    let mut shuffled = points.to_vec();
    shuffled.shuffle(rng);
    let eps = T::tol(T::tolerances().mec_contains);

    let mut circle = Circle::new(shuffled[0], T::zero());
    for i in 1..shuffled.len() {
        let p = shuffled[i];
        if !inside(&circle, p, eps) {
            circle = with_one_boundary_point(&shuffled[..i], p, eps);
        }
    }
    circle
}

#[inline]
fn inside<T: Scalar>(c: &Circle<T>, p: PlanarPoint<T>, eps: T) -> bool {
    c.center.dist(p) <= c.radius * (T::one() + eps)
}

fn with_one_boundary_point<T: Scalar>(points: &[PlanarPoint<T>], p: PlanarPoint<T>, eps: T) -> Circle<T> {
    let mut c = Circle::new(p, T::zero());
    for i in 0..points.len() {
        let q = points[i];
        if !inside(&c, q, eps) {
            c = if c.radius == T::zero() {
                diameter_circle(p, q)
            } else {
                with_two_boundary_points(&points[..i], p, q, eps)
            };
        }
    }
    c
}

fn with_two_boundary_points<T: Scalar>(
    points: &[PlanarPoint<T>],
    p: PlanarPoint<T>,
    q: PlanarPoint<T>,
    eps: T,
) -> Circle<T> {
    let base = diameter_circle(p, q);
    let pq = q - p;
    let mut left: Option<Circle<T>> = None;
    let mut right: Option<Circle<T>> = None;
    for &r in points {
        if inside(&base, r, eps) {
            continue;
        }
        let side = pq.cross(r - p);
        let Some(c) = circumcircle(p, q, r) else {
            continue;
        };
        let offset = pq.cross(c.center - p);
        if side > T::zero() {
            if left.is_none_or(|l| offset > pq.cross(l.center - p)) {
                left = Some(c);
            }
        } else if side < T::zero() && right.is_none_or(|rc| offset < pq.cross(rc.center - p)) {
            right = Some(c);
        }
    }
    match (left, right) {
        (None, None) => base,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                l
            } else {
                r
            }
        }
    }
}

fn diameter_circle<T: Scalar>(a: PlanarPoint<T>, b: PlanarPoint<T>) -> Circle<T> {
    let half = T::lit(0.5);
    let center = PlanarPoint::new((a.x + b.x) * half, (a.y + b.y) * half);
    Circle::new(center, center.dist(a).max(center.dist(b)))
}

/// Circle through three points; `None` when they are collinear.
pub fn circumcircle<T: Scalar>(a: PlanarPoint<T>, b: PlanarPoint<T>, c: PlanarPoint<T>) -> Option<Circle<T>> {
    // translate to the bounding-box center for conditioning
    let two = T::lit(2.0);
    let ox = (a.x.min(b.x).min(c.x) + a.x.max(b.x).max(c.x)) / two;
    let oy = (a.y.min(b.y).min(c.y) + a.y.max(b.y).max(c.y)) / two;
    let o = PlanarPoint::new(ox, oy);
    let (a, b, c) = (a - o, b - o, c - o);
    let d = (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y)) * two;
    if d == T::zero() {
        return None;
    }
    let (na, nb, nc) = (a.norm_sq(), b.norm_sq(), c.norm_sq());
    let x = (na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d;
    let y = (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d;
    let center = PlanarPoint::new(x, y);
    let r = center.dist(a).max(center.dist(b)).max(center.dist(c));
    if !r.is_finite() {
        return None;
    }
    Some(Circle::new(center + o, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = PlanarPoint<f64>;

    #[test]
    fn single_point() {
        let c = min_enclosing_circle(&[P::new(0.0, 0.0)]);
        assert_eq!(c.center, P::new(0.0, 0.0));
        assert_eq!(c.radius, 0.0);
    }

    #[test]
    fn diameter_pair() {
        let c = min_enclosing_circle(&[P::new(-1.0, 0.0), P::new(1.0, 0.0)]);
        assert!(c.center.norm() < 1e-15);
        assert!((c.radius - 1.0).abs() < 1e-15);
    }

    #[test]
    fn acute_triangle() {
        let c = min_enclosing_circle(&[P::new(0.0, 0.0), P::new(2.0, 0.0), P::new(1.0, 3.0)]);
        assert!((c.center.x - 1.0).abs() < 1e-12);
        assert!((c.center.y - 4.0 / 3.0).abs() < 1e-12);
        assert!((c.radius - 5.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn square_vertices() {
        let sq = [
            P::new(1.0, 1.0),
            P::new(-1.0, 1.0),
            P::new(-1.0, -1.0),
            P::new(1.0, -1.0),
        ];
        let c = min_enclosing_circle(&sq);
        assert!(c.center.norm() < 1e-15);
        assert!((c.radius - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn collinear_and_duplicates() {
        let pts = [
            P::new(0.0, 0.0),
            P::new(1.0, 1.0),
            P::new(1.0, 1.0),
            P::new(3.0, 3.0),
            P::new(2.0, 2.0),
        ];
        let c = min_enclosing_circle(&pts);
        assert!((c.center.x - 1.5).abs() < 1e-12 && (c.center.y - 1.5).abs() < 1e-12);
        assert!((c.radius - 1.5 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn seed_independent_result() {
        let pts: Vec<P> = (0..40)
            .map(|k| {
                let a = k as f64 * 2.399963;
                P::new(a.cos() * (1.0 + 0.01 * k as f64), a.sin())
            })
            .collect();
        let a = min_enclosing_circle_with_rng(&pts, &mut ChaCha8Rng::seed_from_u64(1));
        let b = min_enclosing_circle_with_rng(&pts, &mut ChaCha8Rng::seed_from_u64(2));
        assert!(a.center.dist(b.center) < 1e-12);
        assert!((a.radius - b.radius).abs() < 1e-12);
    }

    #[test]
    fn single_precision() {
        let c = min_enclosing_circle(&[
            PlanarPoint::new(0.0f32, 0.0),
            PlanarPoint::new(2.0, 0.0),
            PlanarPoint::new(1.0, 3.0),
        ]);
        assert!((c.radius - 5.0 / 3.0).abs() < 1e-5);
    }
}
