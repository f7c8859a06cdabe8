use std::f64::consts::TAU;
use std::time::Instant;

use fpfree_core::circlemap::{CircleMap, LiftedCircleMap};
use fpfree_core::extend::{extend_domain, Strategy};
use fpfree_core::geom2d::{PlanarDomain, PlanarPoint};
use fpfree_core::manifold::{extend_on_surface, GeodesicDomain, PoleSurface};
use fpfree_core::verify::{estimate_degree, sample_boundary_map, scan_fixed_points, PolarRegion, SelfMap};
use fpfree_core::LiftExpr;

type P = PlanarPoint<f64>;

#[test]
fn planted_translation_is_found_everywhere() {
    // z -> z + c with |c| = 1e-5: every grid point is a candidate at tol 1e-4
    let c = P::from_polar(1e-5, 0.7);
    let f = |q: &P| Ok(*q + c);
    let d = PlanarDomain::unit_disc();
    let out = scan_fixed_points(&f, &d, 512, 1e-4).unwrap();
    assert!(out.identity_like());
    assert_eq!(out.candidates.len(), 512 * 512);
    for s in &out.samples {
        assert!(s.residual <= 1e-4);
    }
}

#[test]
fn reported_candidates_reevaluate_below_tol() {
    let c = P::new(-0.2, 0.45);
    let f = |q: &P| Ok(c + (*q - c) * 0.25);
    let d = PlanarDomain::unit_disc();
    let out = scan_fixed_points(&f, &d, 64, 1e-6).unwrap();
    assert!(!out.candidates.is_empty());
    for cand in &out.candidates {
        let r = f(&cand.location).unwrap().dist(cand.location);
        assert!(r <= 1e-6);
    }
    assert!(out.candidates.windows(2).all(|w| w[0].residual <= w[1].residual));
}

#[test]
fn degrees_agree_with_sampling() {
    for (src, d) in [
        ("-2*t + 0.3*sin(t)", -2),
        ("-t", -1),
        ("0.8*sin(t)", 0),
        ("t + 0.5*sin(t)", 1),
        ("2*t + 0.3*sin(t)", 2),
        ("3*t + 0.4*sin(2*t)", 3),
    ] {
        let f = LiftedCircleMap::parse(src).unwrap();
        assert_eq!(f.degree(), d);
        assert_eq!(
            estimate_degree(&sample_boundary_map(&f, 1024).unwrap()).unwrap(),
            d,
            "{src}"
        );
    }
}

#[test]
fn degree_is_multiplicative_under_composition() {
    let lifts = ["-2*t + 0.2*sin(t)", "-t", "0.5*sin(t)", "t + 0.3*sin(t)", "2*t"];
    for a in lifts {
        for b in lifts {
            let f = LiftedCircleMap::parse(a).unwrap();
            let g = LiftedCircleMap::parse(b).unwrap();
            let samples: Vec<_> = (0..1024)
                .map(|k| f.eval(g.lift(TAU * k as f64 / 1024.0).unwrap()).unwrap())
                .collect();
            assert_eq!(estimate_degree(&samples).unwrap(), f.degree() * g.degree(), "{a} o {b}");
        }
    }
}

#[test]
fn full_resolution_scan_of_curved_extension() {
    let start = Instant::now();
    let d = GeodesicDomain::new(
        PoleSurface::hyperbolic(-1.0).unwrap(),
        LiftExpr::parse("2 + cos(t)").unwrap(),
    )
    .unwrap();
    let h = extend_on_surface(
        d.clone(),
        LiftedCircleMap::parse("t + 0.5*sin(t)").unwrap(),
        Strategy::Rotation,
    )
    .unwrap();
    let out = scan_fixed_points(&h, &d, 512, 1e-6).unwrap();
    assert!(
        out.candidates.is_empty(),
        "{:?}",
        &out.candidates[..out.candidates.len().min(3)]
    );
    eprintln!(
        "scan took {:?}, {} evaluations, flags {:?}",
        start.elapsed(),
        out.evaluations,
        out.flags
    );
}

#[test]
fn planar_extension_margin() {
    let sq = PlanarDomain::polygon(vec![
        P::new(-1.0, -1.0),
        P::new(1.0, -1.0),
        P::new(1.0, 1.0),
        P::new(-1.0, 1.0),
    ])
    .unwrap();
    let psi = extend_domain(
        sq.clone(),
        LiftedCircleMap::parse("0.8*sin(t)").unwrap(),
        Strategy::Collapse0,
    )
    .unwrap();
    let out = scan_fixed_points(&psi, &sq, 128, 1e-6).unwrap();
    assert!(out.candidates.is_empty());
    for s in &out.samples {
        let margin = sq.boundary_distance(&s.point).unwrap();
        assert!(psi.apply(&s.point).unwrap().dist(s.point) >= margin - 1e-9);
    }
}
