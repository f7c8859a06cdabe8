//! Builds the extension described by a scenario and runs the checks on it.

use std::f64::consts::TAU;

use fpfree_core::circlemap::{fixed_points, FixedPointSet};
use fpfree_core::geom2d::Shape;
use fpfree_core::verify::{
    boundary_error, estimate_degree, oscillation_profile_with, sample_boundary_map, scan_with, CandidateRecord, Metric,
    PolarRegion, ScanConfig, SelfMap, VerificationReport,
};
use fpfree_core::{
    Circle, CircleMap, DomainExtension, LiftedCircleMap, PlanarDomain, PlanarPoint, Scalar, SurfaceExtension,
    SurfacePoint, WitnessExtension,
};

use crate::error::{CliError, CliResult};
use crate::scenario::{DomainSpec, Scenario, StrategyChoice};

/// Samples of `F(b(theta))` against `f(b(theta))` for the boundary error.
pub const BOUNDARY_SAMPLES: usize = 1024;
/// Samples used to estimate the degree of the boundary map.
pub const DEGREE_SAMPLES: usize = 1024;

pub const FLAG_MEC: &str = "MEC-as-circumscribed";
pub const FLAG_ASSUMED_CONVEX: &str = "assumed-convex";
/// The constructed map takes values in the boundary, not just in the region.
pub const FLAG_IMAGE_IN_BOUNDARY: &str = "image-in-boundary";
pub const FLAG_WITNESS: &str = "witness-calibration";
pub const FLAG_DEGREE_MISMATCH: &str = "degree-mismatch";
pub const FLAG_DEGREE_UNRESOLVED: &str = "degree-unresolved";

pub enum Pipeline {
    Planar(DomainExtension<LiftedCircleMap>),
    Surface(SurfaceExtension<LiftedCircleMap>),
    Witness {
        domain: PlanarDomain,
        map: WitnessExtension,
    },
}

/// Coordinates of one coarse grid point and its image.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRow {
    pub point: Vec<f64>,
    pub image: Vec<f64>,
}

pub struct Evaluation {
    pub report: VerificationReport,
    pub samples: Vec<SampleRow>,
    /// Dimension of the sample coordinates (2 or 3).
    pub dimension: usize,
}

fn witness(domain: &PlanarDomain, s: &Scenario) -> CliResult<Pipeline> {
    let Shape::Disc { center, radius } = *domain.shape() else {
        return Err(CliError::Inapplicable(
            "the witness map is defined on discs only".into(),
        ));
    };
    if domain.anchor() != center {
        return Err(CliError::Inapplicable(
            "the witness map needs the anchor at the disc center".into(),
        ));
    }
    if fixed_points(&s.map, f64::tolerances().fixed_point)? != FixedPointSet::AllFixed || s.map.degree() != 1 {
        return Err(CliError::Inapplicable(format!(
            "the witness map extends the identity, not `{}`",
            s.lift_source()
        )));
    }
    Ok(Pipeline::Witness {
        domain: domain.clone(),
        map: WitnessExtension::on_disc(center, radius, s.witness_v)?,
    })
}

impl Pipeline {
    pub fn build(s: &Scenario) -> CliResult<Self> {
        match (&s.domain, s.strategy) {
            (DomainSpec::Planar(d), StrategyChoice::Witness) => witness(d, s),
            (DomainSpec::Geodesic(_), StrategyChoice::Witness) => Err(CliError::Inapplicable(
                "the witness map is defined on planar discs only".into(),
            )),
            (DomainSpec::Planar(d), StrategyChoice::Extension(strategy)) => {
                let circle = d.circumscribed_circle_seeded(s.seed)?;
                Ok(Pipeline::Planar(DomainExtension::with_circle(
                    d.clone(),
                    circle,
                    s.map.clone(),
                    strategy,
                )?))
            }
            (DomainSpec::Geodesic(g), StrategyChoice::Extension(strategy)) => {
                let circle = g.pulled_back().circumscribed_circle_seeded(s.seed)?;
                Ok(Pipeline::Surface(SurfaceExtension::with_circle(
                    g.clone(),
                    circle,
                    s.map.clone(),
                    strategy,
                )?))
            }
        }
    }

    /// The planar picture: the domain (pulled back for surfaces) and its circle.
    pub fn planar_domain(&self) -> &PlanarDomain {
        match self {
            Pipeline::Planar(e) => e.domain(),
            Pipeline::Surface(e) => e.planar().domain(),
            Pipeline::Witness { domain, .. } => domain,
        }
    }

    pub fn circle(&self) -> Circle {
        match self {
            Pipeline::Planar(e) => *e.circle(),
            Pipeline::Surface(e) => *e.planar().circle(),
            Pipeline::Witness { domain, .. } => match *domain.shape() {
                Shape::Disc { center, radius } => Circle::new(center, radius),
                _ => unreachable!("witness pipelines live on discs"),
            },
        }
    }

    /// The map in planar coordinates (the tangent chart at the pole for surfaces).
    pub fn eval_planar(&self, q: PlanarPoint) -> CliResult<PlanarPoint> {
        Ok(match self {
            Pipeline::Planar(e) => e.eval(q)?,
            Pipeline::Surface(e) => {
                let m = e.surface();
                m.log_chart(&e.eval(&m.exp_chart(q)?)?)?
            }
            Pipeline::Witness { map, .. } => map.eval(q)?,
        })
    }

    pub fn evaluate(&self, s: &Scenario) -> CliResult<Evaluation> {
        let mut flags = Vec::new();
        let eval = match self {
            Pipeline::Planar(e) => {
                if !matches!(e.domain().shape(), Shape::Disc { .. }) {
                    flags.push(FLAG_MEC);
                }
                flags.push(FLAG_IMAGE_IN_BOUNDARY);
                let o = e.domain().anchor();
                run_checks(e, e.domain(), |th| e.apply_boundary_map(th), o, |v| Ok(o + v), s)?
            }
            Pipeline::Surface(e) => {
                flags.push(FLAG_MEC);
                flags.push(FLAG_IMAGE_IN_BOUNDARY);
                if !e.surface().is_flat() {
                    flags.push(FLAG_ASSUMED_CONVEX);
                }
                let m = *e.surface();
                run_checks(
                    e,
                    e.domain(),
                    |th| e.apply_boundary_map(th),
                    m.pole(),
                    |v| m.exp_chart(v),
                    s,
                )?
            }
            Pipeline::Witness { domain, map } => {
                flags.push(FLAG_WITNESS);
                let o = domain.anchor();
                run_checks(map, domain, |th| domain.boundary_point(th), o, |v| Ok(o + v), s)?
            }
        };
        let mut eval = eval;
        match estimate_degree(&sample_boundary_map(&s.map, DEGREE_SAMPLES)?) {
            Ok(d) if d == s.map.degree() => {}
            Ok(_) => flags.push(FLAG_DEGREE_MISMATCH),
            Err(_) => flags.push(FLAG_DEGREE_UNRESOLVED),
        }
        for f in flags {
            eval.report.add_flag(f);
        }
        eval.report.lift = s.lift_source().to_string();
        eval.report.strategy = s.strategy.name().to_string();
        eval.report.degree = s.map.degree();
        Ok(eval)
    }
}

fn run_checks<P, M, R, F, G>(map: &M, region: &R, f_b: F, center: P, place: G, s: &Scenario) -> CliResult<Evaluation>
where
    P: Metric + HasDimension,
    M: SelfMap<P>,
    R: PolarRegion<P>,
    F: Fn(f64) -> fpfree_core::Result<P>,
    G: Fn(PlanarPoint) -> fpfree_core::Result<P>,
{
    let boundary_error = boundary_error(map, region, f_b, BOUNDARY_SAMPLES)?;
    let config = ScanConfig::new(s.verify.grid_n, s.verify.tol)?;
    let scan = scan_with(map, region, &config)?;
    let profile = oscillation_profile_with(map, center, &s.verify.deltas, s.oscillation_samples(), place)?;
    let mut report = VerificationReport {
        boundary_error,
        candidates: scan.candidates.iter().map(CandidateRecord::from).collect(),
        flags: scan.flags.clone(),
        ..VerificationReport::default()
    };
    report.set_oscillation(&profile);
    let samples = scan
        .samples
        .iter()
        .map(|c| SampleRow {
            point: c.point.coords(),
            image: c.image.coords(),
        })
        .collect();
    Ok(Evaluation {
        report,
        samples,
        dimension: center.dimension(),
    })
}

/// Number of output coordinates of a point type.
pub trait HasDimension {
    fn dimension(&self) -> usize;
}

impl HasDimension for PlanarPoint {
    fn dimension(&self) -> usize {
        2
    }
}

impl HasDimension for SurfacePoint {
    fn dimension(&self) -> usize {
        SurfacePoint::dimension(self)
    }
}

/// `b(theta_k)` for `k = 0..n`, in planar (chart) coordinates.
pub fn boundary_polyline(domain: &PlanarDomain, n: usize) -> CliResult<Vec<PlanarPoint>> {
    Ok((0..n)
        .map(|k| domain.boundary_point(TAU * k as f64 / n as f64))
        .collect::<fpfree_core::Result<_>>()?)
}
