use std::f64::consts::{PI, TAU};

use super::{Metric, SelfMap};
use crate::error::{Error, Result};
use crate::geom2d::PlanarPoint;

/// Smallest ring size accepted by [`oscillation_profile`].
pub const MIN_RING_SAMPLES: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct OscillationProfile<P> {
    pub center: P,
    /// `(delta, osc)` with `delta` strictly decreasing.
    pub entries: Vec<(f64, f64)>,
}

impl<P> OscillationProfile<P> {
    /// Oscillation recorded for `delta`, if present.
    pub fn at(&self, delta: f64) -> Option<f64> {
        self.entries.iter().find(|(d, _)| *d == delta).map(|(_, o)| *o)
    }
}

/// Offsets of the sample layout for a ball of radius `delta`: the center,
/// `m` equally spaced points on the rim and `m` points on a golden-angle
/// spiral filling the inside.
fn layout(delta: f64, m: usize) -> Vec<PlanarPoint<f64>> {
    let golden = PI * (3.0 - 5f64.sqrt());
    let mut pts = Vec::with_capacity(2 * m + 1);
    pts.push(PlanarPoint::origin());
    pts.extend((0..m).map(|k| PlanarPoint::from_polar(delta, TAU * k as f64 / m as f64)));
    pts.extend(
        (0..m).map(|k| PlanarPoint::from_polar(delta * ((k as f64 + 0.5) / m as f64).sqrt(), golden * k as f64)),
    );
    pts
}

/// Largest distance between the images of sample points in each
/// `delta`-ball around `at` (planar points).
pub fn oscillation_profile<M>(
    map: &M,
    at: PlanarPoint<f64>,
    deltas: &[f64],
    m: usize,
) -> Result<OscillationProfile<PlanarPoint<f64>>>
where
    M: SelfMap<PlanarPoint<f64>> + ?Sized,
{
    oscillation_profile_with(map, at, deltas, m, |offset| Ok(at + offset))
}

/// As [`oscillation_profile`], with `place` turning a planar offset from the
/// center into a point (e.g. through a chart of a surface).
pub fn oscillation_profile_with<P, M, F>(
    map: &M,
    at: P,
    deltas: &[f64],
    m: usize,
    place: F,
) -> Result<OscillationProfile<P>>
where
    P: Metric,
    M: SelfMap<P> + ?Sized,
    F: Fn(PlanarPoint<f64>) -> Result<P>,
{
    if m < MIN_RING_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "oscillation needs at least {MIN_RING_SAMPLES} ring samples, got {m}"
        )));
    }
    if deltas.iter().any(|d| !(*d > 0.0) || !d.is_finite()) || deltas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument(
            "deltas must be positive and strictly decreasing".into(),
        ));
    }
    let mut entries = Vec::with_capacity(deltas.len());
    for &delta in deltas {
        let images = layout(delta, m)
            .into_iter()
            .map(|o| map.apply(&place(o)?))
            .collect::<Result<Vec<P>>>()?;
        let mut osc = 0.0f64;
        for (i, a) in images.iter().enumerate() {
            for b in &images[i + 1..] {
                osc = osc.max(a.distance(b));
            }
        }
        entries.push((delta, osc));
    }
    Ok(OscillationProfile { center: at, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlemap::{Angle, LiftedCircleMap};
    use crate::extend::DiscExtension;

    type P = PlanarPoint<f64>;

    #[test]
    fn constant_map() {
        let c = |_: &P| Ok(P::new(0.2, 0.1));
        let p = oscillation_profile(&c, P::new(0.3, 0.3), &[0.1, 0.01], 32).unwrap();
        assert_eq!(p.entries, vec![(0.1, 0.0), (0.01, 0.0)]);
    }

    #[test]
    fn lipschitz_bound() {
        let f = |q: &P| Ok(P::new(2.0 * q.x - q.y, 0.5 * q.y + q.x));
        let l = 2.36; // spectral norm of [[2, -1], [1, 0.5]] is about 2.351
        let p = oscillation_profile(&f, P::new(0.1, -0.4), &[0.1, 0.01, 0.001], 64).unwrap();
        for (d, o) in p.entries {
            assert!(o <= l * 2.0 * d + 1e-12);
        }
    }

    #[test]
    fn rotation_identity_is_discontinuous_at_center() {
        let id = LiftedCircleMap::parse("t").unwrap();
        let g = DiscExtension::rotation(&id, Angle::zero()).unwrap();
        let p = oscillation_profile(&g, P::origin(), &[0.1, 0.01, 0.001], 64).unwrap();
        assert!(p.at(0.001).unwrap() >= 1.9);
    }

    #[test]
    fn collapse_is_continuous_at_center() {
        let f = LiftedCircleMap::parse("0.8*sin(t)").unwrap();
        let g = DiscExtension::collapse0(&f, Angle::zero()).unwrap();
        let p = oscillation_profile(&g, P::origin(), &[0.1, 0.01, 0.001], 64).unwrap();
        assert!(p.at(0.001).unwrap() <= 0.05);
    }

    #[test]
    fn argument_checks() {
        let id = |q: &P| Ok(*q);
        assert!(oscillation_profile(&id, P::origin(), &[0.1], 16).is_err());
        assert!(oscillation_profile(&id, P::origin(), &[0.01, 0.1], 32).is_err());
        assert!(oscillation_profile(&id, P::origin(), &[0.1, 0.0], 32).is_err());
    }
}
