//! Slow, independent reference computations for the test suites.
//!
//! Nothing here shares code with `fpfree-core`; every routine is written
//! from first principles over plain `f64` tuples so that it can serve as
//! an oracle for the production algorithms.

/// Smallest enclosing circle by exhaustive search over all support pairs
/// and triples. Returns `(cx, cy, r)`. O(n^4), fine for n <= 12.
pub fn brute_force_enclosing_circle(points: &[(f64, f64)]) -> (f64, f64, f64) {
    assert!(!points.is_empty());
    if points.len() == 1 {
        return (points[0].0, points[0].1, 0.0);
    }
    let covers = |c: (f64, f64, f64)| {
        points
            .iter()
            .all(|p| ((p.0 - c.0).powi(2) + (p.1 - c.1).powi(2)).sqrt() <= c.2 * (1.0 + 1e-12) + 1e-12)
    };
    let mut best: Option<(f64, f64, f64)> = None;
    let mut consider = |c: (f64, f64, f64)| {
        if covers(c) && best.is_none_or(|b| c.2 < b.2) {
            best = Some(c);
        }
    };
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (points[i], points[j]);
            let cx = 0.5 * (a.0 + b.0);
            let cy = 0.5 * (a.1 + b.1);
            let r = 0.5 * ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
            consider((cx, cy, r));
            for &c in &points[j + 1..] {
                if let Some(c) = circumcircle(a, b, c) {
                    consider(c);
                }
            }
        }
    }
    best.expect("some pair or triple always covers the set")
}

fn circumcircle(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Option<(f64, f64, f64)> {
    // Solve |x-a|^2 = |x-b|^2 = |x-c|^2 by Cramer's rule.
    let a11 = 2.0 * (b.0 - a.0);
    let a12 = 2.0 * (b.1 - a.1);
    let a21 = 2.0 * (c.0 - a.0);
    let a22 = 2.0 * (c.1 - a.1);
    let r1 = b.0 * b.0 + b.1 * b.1 - a.0 * a.0 - a.1 * a.1;
    let r2 = c.0 * c.0 + c.1 * c.1 - a.0 * a.0 - a.1 * a.1;
    let det = a11 * a22 - a12 * a21;
    if det.abs() < 1e-14 {
        return None;
    }
    let x = (r1 * a22 - a12 * r2) / det;
    let y = (a11 * r2 - r1 * a21) / det;
    let r = ((x - a.0).powi(2) + (y - a.1).powi(2)).sqrt();
    Some((x, y, r))
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `eps`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, eps: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, eps, 60)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)
}

/// Arclength of the paraboloid meridian `z = u^2 / 2` from the apex to
/// horizontal radius `rho`, by quadrature of `sqrt(1 + u^2)`.
pub fn paraboloid_meridian_length(rho: f64) -> f64 {
    adaptive_simpson(&|u: f64| (1.0 + u * u).sqrt(), 0.0, rho, 1e-14)
}

/// Distance from `q` to the closed polyline through `vertices`.
pub fn polyline_distance(q: (f64, f64), vertices: &[(f64, f64)]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| segment_distance(q, vertices[i], vertices[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

fn segment_distance(q: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (ex, ey) = (b.0 - a.0, b.1 - a.1);
    let len2 = ex * ex + ey * ey;
    let u = if len2 == 0.0 {
        0.0
    } else {
        (((q.0 - a.0) * ex + (q.1 - a.1) * ey) / len2).clamp(0.0, 1.0)
    };
    let (px, py) = (a.0 + u * ex, a.1 + u * ey);
    ((q.0 - px).powi(2) + (q.1 - py).powi(2)).sqrt()
}

/// Lower bound on the distance from `q` to the star-shaped curve
/// `theta -> rho(theta) (cos theta, sin theta)`: distance to an `n`-gon
/// inscribed in the curve, minus the largest chord-to-arc deviation
/// measured at the segment midpoints (doubled for slack).
pub fn radial_curve_distance_lower_bound<F: Fn(f64) -> f64>(q: (f64, f64), rho: &F, n: usize) -> f64 {
    RadialCurve::new(rho, n).distance_lower_bound(q)
}

/// The inscribed polygon of [`radial_curve_distance_lower_bound`], built
/// once for repeated queries.
#[derive(Debug, Clone)]
pub struct RadialCurve {
    verts: Vec<(f64, f64)>,
    sag: f64,
    longest_edge: f64,
}

impl RadialCurve {
    pub fn new<F: Fn(f64) -> f64>(rho: &F, n: usize) -> Self {
        let tau = std::f64::consts::TAU;
        let at = |th: f64| {
            let r = rho(th);
            (r * th.cos(), r * th.sin())
        };
        let verts: Vec<(f64, f64)> = (0..n).map(|k| at(tau * k as f64 / n as f64)).collect();
        let mut sag = 0.0f64;
        let mut longest_edge = 0.0f64;
        for k in 0..n {
            let (a, b) = (verts[k], verts[(k + 1) % n]);
            let mid = at(tau * (k as f64 + 0.5) / n as f64);
            sag = sag.max(segment_distance(mid, a, b));
            longest_edge = longest_edge.max(((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt());
        }
        RadialCurve {
            verts,
            sag,
            longest_edge,
        }
    }

    pub fn distance_lower_bound(&self, q: (f64, f64)) -> f64 {
        let d2: Vec<f64> = self
            .verts
            .iter()
            .map(|v| (q.0 - v.0).powi(2) + (q.1 - v.1).powi(2))
            .collect();
        let nearest = d2.iter().cloned().fold(f64::INFINITY, f64::min).sqrt();
        // a segment can only beat the nearest vertex if one of its ends is
        // within `nearest + longest_edge` of q
        let reach = (nearest + self.longest_edge).powi(2);
        let n = self.verts.len();
        let mut best = nearest;
        for k in 0..n {
            let j = (k + 1) % n;
            if d2[k] <= reach || d2[j] <= reach {
                best = best.min(segment_distance(q, self.verts[k], self.verts[j]));
            }
        }
        best - 2.0 * self.sag
    }
}
