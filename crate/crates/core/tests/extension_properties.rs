use std::f64::consts::TAU;

use fpfree_core::circlemap::{fixed_point_residual, fixed_points, FixedPointSet, LiftedCircleMap};
use fpfree_core::extend::{conjugate_boundary_map, extend_domain, Strategy};
use fpfree_core::geom2d::{BoundaryHomeo, PlanarDomain, PlanarPoint};
use fpfree_core::LiftExpr;
use proptest::prelude::*;

type P = PlanarPoint<f64>;

fn domains() -> Vec<PlanarDomain<f64>> {
    vec![
        PlanarDomain::unit_disc(),
        PlanarDomain::polygon(vec![
            P::new(-1.0, -1.0),
            P::new(1.0, -1.0),
            P::new(1.0, 1.0),
            P::new(-1.0, 1.0),
        ])
        .unwrap(),
        PlanarDomain::radial(LiftExpr::parse("2 + cos(t)").unwrap()).unwrap(),
        PlanarDomain::polygon(vec![
            P::new(-2.0, -1.0),
            P::new(2.0, -1.0),
            P::new(2.0, 1.0),
            P::new(0.3, 0.3),
            P::new(0.0, 2.0),
            P::new(-0.3, 0.3),
            P::new(-2.0, 1.0),
        ])
        .unwrap(),
    ]
}

fn lift(degree: i64, amp: f64, shift: f64) -> LiftedCircleMap<f64> {
    LiftedCircleMap::parse(&format!("{degree}*t + {amp}*sin(t + {shift}) + {shift}")).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn extension_restricts_to_boundary_map(
        degree in prop::sample::select(vec![-2i64, 0, 2, 3]),
        amp in 0.0..0.9f64,
        shift in -3.0..3.0f64,
    ) {
        let f = lift(degree, amp, shift);
        for d in domains() {
            let strategies: &[Strategy] = if degree == 0 { &[Strategy::Rotation, Strategy::Collapse0] } else { &[Strategy::Rotation] };
            for &strategy in strategies {
                let psi = extend_domain(d.clone(), &f, strategy).unwrap();
                for k in 0..128 {
                    let th = TAU * k as f64 / 128.0;
                    let err = psi.eval(d.boundary_point(th).unwrap()).unwrap().dist(psi.apply_boundary_map(th).unwrap());
                    prop_assert!(err <= 1e-9, "{} {}", strategy, err);
                }
            }
        }
    }

    #[test]
    fn fixed_points_are_transported(
        degree in prop::sample::select(vec![-1i64, 0, 2]),
        amp in 0.0..0.9f64,
        shift in -3.0..3.0f64,
    ) {
        let f = lift(degree, amp, shift);
        let FixedPointSet::Discrete(fixed) = fixed_points(&f, 1e-12).unwrap() else {
            return Err(TestCaseError::fail("expected isolated fixed points"));
        };
        for d in domains() {
            let h = BoundaryHomeo::new(d.clone(), d.circumscribed_circle().unwrap()).unwrap();
            let g = conjugate_boundary_map(h.clone(), &f);
            for p in &fixed {
                let image = h.forward(d.boundary_point(p.radians()).unwrap()).unwrap();
                prop_assert!(fixed_point_residual(&g, image.radians()).unwrap() <= 1e-9);
            }
        }
    }
}
