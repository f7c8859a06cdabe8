use crate::circlemap::{wrap_to_pi, CircleMap};
use crate::error::Result;
use crate::geom2d::BoundaryHomeo;
use crate::scalar::Scalar;

/// The circle map `f' = dh o f o dh^-1` on the surrounding circle, where `f`
/// acts on the domain boundary through the angular parametrization about
/// the anchor.
///
/// The lift is assembled from continuous lifts of `dh` and `dh^-1`: both move
/// angles by less than `pi/2` (the anchor is inside the circle), so each
/// shift is recovered exactly by wrapping into `(-pi, pi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugatedMap<T, M> {
    homeo: BoundaryHomeo<T>,
    inner: M,
}

impl<T: Scalar, M: CircleMap<T>> ConjugatedMap<T, M> {
    pub fn new(homeo: BoundaryHomeo<T>, inner: M) -> Self {
        ConjugatedMap { homeo, inner }
    }

    pub fn homeo(&self) -> &BoundaryHomeo<T> {
        &self.homeo
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<T: Scalar, M: CircleMap<T>> CircleMap<T> for ConjugatedMap<T, M> {
    fn lift(&self, phi: T) -> Result<T> {
        let domain = self.homeo.domain();
        let o = domain.anchor();
        // dh^-1(phi) and its boundary parameter
        let b = self.homeo.inverse(phi)?;
        let theta = (b - o).angle();
        let x = phi + wrap_to_pi(theta - phi);
        // f on the boundary, then dh
        let y = self.inner.lift(x)?;
        let fb = domain.boundary_point(y)?;
        let image = self.homeo.circle_angle_of((fb - o).angle()).radians();
        Ok(y + wrap_to_pi(image - y))
    }

    fn degree(&self) -> i64 {
        self.inner.degree()
    }
}

/// Builds `f'` for a domain inside `circle`.
pub fn conjugate_boundary_map<T: Scalar, M: CircleMap<T>>(homeo: BoundaryHomeo<T>, f: M) -> ConjugatedMap<T, M> {
    ConjugatedMap::new(homeo, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlemap::{fixed_points, Angle, FixedPointSet, LiftExpr, LiftedCircleMap};
    use crate::geom2d::{Circle, PlanarDomain, PlanarPoint};
    use std::f64::consts::{PI, TAU};

    type P = PlanarPoint<f64>;

    fn map(src: &str) -> LiftedCircleMap<f64> {
        LiftedCircleMap::parse(src).unwrap()
    }

    fn square() -> PlanarDomain<f64> {
        PlanarDomain::polygon(vec![
            P::new(-1.0, -1.0),
            P::new(1.0, -1.0),
            P::new(1.0, 1.0),
            P::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    fn homeo(d: PlanarDomain<f64>) -> BoundaryHomeo<f64> {
        let c = d.circumscribed_circle().unwrap();
        BoundaryHomeo::new(d, c).unwrap()
    }

    #[test]
    fn unit_disc_conjugation_is_trivial() {
        let f = map("t + 0.5*sin(t)");
        let h = BoundaryHomeo::new(PlanarDomain::unit_disc(), Circle::new(P::origin(), 1.0)).unwrap();
        let g = conjugate_boundary_map(h, &f);
        for k in 0..100 {
            let phi = -3.0 + 0.13 * k as f64;
            assert!((g.lift(phi).unwrap() - f.lift(phi).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_stays_identity() {
        let radial = PlanarDomain::<f64>::radial(LiftExpr::parse("2 + cos(t)").unwrap()).unwrap();
        for d in [square(), radial] {
            let g = conjugate_boundary_map(homeo(d), map("t"));
            for k in 0..200 {
                let phi = TAU * k as f64 / 200.0;
                assert!((g.lift(phi).unwrap() - phi).abs() < 1e-12);
            }
            assert_eq!(fixed_points(&g, 1e-9).unwrap(), FixedPointSet::AllFixed);
        }
    }

    #[test]
    fn square_half_turn_commutes_with_projection() {
        // q -> -q is a symmetry of the square about the anchor and of its
        // circumscribed circle, so conjugating the half turn gives a half turn
        let g = conjugate_boundary_map(homeo(square()), map("t + pi"));
        for k in 0..256 {
            let phi = TAU * k as f64 / 256.0;
            let got = g.eval(phi).unwrap();
            assert!(got.distance(Angle::new(phi + PI)) < 1e-12, "{phi}");
        }
    }

    #[test]
    fn lift_is_continuous_and_keeps_degree() {
        let d = PlanarDomain::<f64>::radial(LiftExpr::parse("2 + cos(t)").unwrap()).unwrap();
        for (src, deg) in [("2*t + 0.3*sin(t)", 2), ("-t", -1), ("0.8*sin(t)", 0)] {
            let g = conjugate_boundary_map(homeo(d.clone()), map(src));
            assert_eq!(g.degree(), deg);
            let n = 2048;
            let mut prev = g.lift(0.0).unwrap();
            for k in 1..=n {
                let cur = g.lift(TAU * k as f64 / n as f64).unwrap();
                assert!((cur - prev).abs() < 0.1, "{src} jumps at {k}");
                prev = cur;
            }
            let span = g.lift(TAU).unwrap() - g.lift(0.0).unwrap();
            assert!((span - TAU * deg as f64).abs() < 1e-9, "{src}: {span}");
        }
    }

    #[test]
    fn fixed_points_transport() {
        let d = square().with_anchor(P::new(0.2, -0.3)).unwrap();
        let h = homeo(d.clone());
        let f = map("t + 0.5*sin(t)");
        let g = conjugate_boundary_map(h.clone(), &f);
        for p in [0.0, PI] {
            let image = h.forward(d.boundary_point(p).unwrap()).unwrap();
            let residual = crate::circlemap::fixed_point_residual(&g, image.radians()).unwrap();
            assert!(residual < 1e-9, "{p}: {residual}");
        }
    }
}
