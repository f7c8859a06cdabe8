//! Scenario files: JSON input describing a domain, a boundary map, a
//! strategy and verification settings.
//!
//! ```json
//! {
//!   "surface": {"model": "hyperbolic", "kappa": -1.0},
//!   "domain": {"rho_g": "2 + cos(t)"},
//!   "boundary_map": {"lift": "t + 0.5*sin(t)"},
//!   "strategy": "rotation",
//!   "verify": {"grid_n": 64, "tol": 1e-6, "deltas": [0.1, 0.01, 0.001]},
//!   "seed": 0
//! }
//! ```
//!
//! Without `surface` the domain is planar and tagged by `shape`:
//! `{"shape": "disc", "center": [x, y], "radius": r}`,
//! `{"shape": "polygon", "vertices": [[x, y], ...]}` or
//! `{"shape": "radial", "rho": "<expr in t>"}`, each with an optional
//! `"anchor": [x, y]`.

use std::fmt;
use std::path::Path;

use fpfree_core::extend::Strategy;
use fpfree_core::verify::MIN_RING_SAMPLES;
use fpfree_core::{GeodesicDomain, LiftExpr, LiftedCircleMap, PlanarDomain, PlanarPoint, PoleSurface};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const DEFAULT_GRID_N: usize = 64;
pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_DELTAS: [f64; 3] = [0.1, 0.01, 0.001];
/// Shift of the witness map when the scenario gives none.
pub const DEFAULT_WITNESS_V: [f64; 2] = [0.3, 0.0];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    surface: Option<RawSurface>,
    domain: Value,
    boundary_map: RawBoundaryMap,
    strategy: Option<String>,
    witness_v: Option<[f64; 2]>,
    #[serde(default)]
    verify: RawVerify,
    #[serde(default)]
    seed: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    model: String,
    kappa: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBoundaryMap {
    lift: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawVerify {
    grid_n: usize,
    tol: f64,
    deltas: Vec<f64>,
}

impl Default for RawVerify {
    fn default() -> Self {
        RawVerify {
            grid_n: DEFAULT_GRID_N,
            tol: DEFAULT_TOL,
            deltas: DEFAULT_DELTAS.to_vec(),
        }
    }
}

fn default_radius() -> f64 {
    1.0
}

#[derive(Debug, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase", deny_unknown_fields)]
enum RawPlanarDomain {
    Disc {
        #[serde(default)]
        center: [f64; 2],
        #[serde(default = "default_radius")]
        radius: f64,
        anchor: Option<[f64; 2]>,
    },
    Polygon {
        vertices: Vec<[f64; 2]>,
        anchor: Option<[f64; 2]>,
    },
    Radial {
        rho: String,
        anchor: Option<[f64; 2]>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGeodesicDomain {
    rho_g: String,
}

/// How the boundary map is extended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyChoice {
    Extension(Strategy),
    /// `z -> z + (1 - |z|) v` on a disc; needs the identity boundary map.
    Witness,
}

impl StrategyChoice {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s {
            "witness" => Ok(StrategyChoice::Witness),
            other => other.parse().map(StrategyChoice::Extension).map_err(|_| {
                CliError::Invalid(format!(
                    "unknown strategy `{other}` (expected rotation, collapse0 or witness)"
                ))
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StrategyChoice::Extension(s) => s.name(),
            StrategyChoice::Witness => "witness",
        }
    }
}

impl fmt::Display for StrategyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    Planar(PlanarDomain),
    Geodesic(GeodesicDomain),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySettings {
    pub grid_n: usize,
    pub tol: f64,
    pub deltas: Vec<f64>,
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub domain: DomainSpec,
    pub map: LiftedCircleMap,
    pub strategy: StrategyChoice,
    pub witness_v: PlanarPoint,
    pub verify: VerifySettings,
    pub seed: u64,
}

/// Command-line overrides applied after loading.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub strategy: Option<String>,
    pub grid_n: Option<usize>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
}

fn invalid(e: impl fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn parse_expr(src: &str) -> CliResult<LiftExpr> {
    LiftExpr::parse(src).map_err(|e| CliError::Core(e.into()))
}

fn point([x, y]: [f64; 2]) -> PlanarPoint {
    PlanarPoint::new(x, y)
}

fn with_anchor(d: PlanarDomain, anchor: Option<[f64; 2]>) -> CliResult<PlanarDomain> {
    match anchor {
        Some(a) => Ok(d.with_anchor(point(a))?),
        None => Ok(d),
    }
}

fn parse_surface(raw: RawSurface) -> CliResult<PoleSurface> {
    match (raw.model.as_str(), raw.kappa) {
        ("euclidean", None) => Ok(PoleSurface::Euclidean),
        ("paraboloid", None) => Ok(PoleSurface::Paraboloid),
        ("hyperbolic", Some(k)) => PoleSurface::hyperbolic(k).map_err(invalid),
        ("hyperbolic", None) => Err(invalid("hyperbolic surface needs `kappa`")),
        ("euclidean" | "paraboloid", Some(_)) => Err(invalid("`kappa` is only allowed for the hyperbolic model")),
        (other, _) => Err(invalid(format!(
            "unknown surface model `{other}` (expected euclidean, hyperbolic or paraboloid)"
        ))),
    }
}

fn parse_planar(v: Value) -> CliResult<PlanarDomain> {
    let raw: RawPlanarDomain = serde_json::from_value(v).map_err(|e| invalid(format!("domain: {e}")))?;
    match raw {
        RawPlanarDomain::Disc { center, radius, anchor } => {
            with_anchor(PlanarDomain::disc(point(center), radius)?, anchor)
        }
        RawPlanarDomain::Polygon { vertices, anchor } => with_anchor(
            PlanarDomain::polygon(vertices.into_iter().map(point).collect())?,
            anchor,
        ),
        RawPlanarDomain::Radial { rho, anchor } => with_anchor(PlanarDomain::radial(parse_expr(&rho)?)?, anchor),
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let raw: RawScenario = serde_json::from_str(text).map_err(invalid)?;
        let domain = match raw.surface {
            Some(surface) => {
                let surface = parse_surface(surface)?;
                let g: RawGeodesicDomain =
                    serde_json::from_value(raw.domain).map_err(|e| invalid(format!("domain: {e}")))?;
                DomainSpec::Geodesic(GeodesicDomain::new(surface, parse_expr(&g.rho_g)?)?)
            }
            None => DomainSpec::Planar(parse_planar(raw.domain)?),
        };
        let map = LiftedCircleMap::parse(&raw.boundary_map.lift)?;
        let strategy = StrategyChoice::parse(raw.strategy.as_deref().unwrap_or("rotation"))?;
        if raw.witness_v.is_some() && strategy != StrategyChoice::Witness {
            return Err(invalid("`witness_v` is only used by the witness strategy"));
        }
        let scenario = Scenario {
            domain,
            map,
            strategy,
            witness_v: point(raw.witness_v.unwrap_or(DEFAULT_WITNESS_V)),
            verify: VerifySettings {
                grid_n: raw.verify.grid_n,
                tol: raw.verify.tol,
                deltas: raw.verify.deltas,
            },
            seed: raw.seed,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn apply(mut self, o: &Overrides) -> CliResult<Self> {
        if let Some(s) = &o.strategy {
            self.strategy = StrategyChoice::parse(s)?;
        }
        if let Some(n) = o.grid_n {
            self.verify.grid_n = n;
        }
        if let Some(t) = o.tol {
            self.verify.tol = t;
        }
        if let Some(s) = o.seed {
            self.seed = s;
        }
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> CliResult<()> {
        let v = &self.verify;
        if v.grid_n < 16 {
            return Err(invalid(format!("verify.grid_n must be at least 16, got {}", v.grid_n)));
        }
        if !(v.tol > 0.0) || !v.tol.is_finite() {
            return Err(invalid(format!("verify.tol must be positive, got {}", v.tol)));
        }
        if v.deltas.iter().any(|d| !(*d > 0.0) || !d.is_finite()) || v.deltas.windows(2).any(|w| w[1] >= w[0]) {
            return Err(invalid("verify.deltas must be positive and strictly decreasing"));
        }
        let n = self.witness_v.norm();
        if !(n > 0.0 && n <= 1.0) {
            return Err(invalid(format!("witness_v must satisfy 0 < |v| <= 1, got {n}")));
        }
        Ok(())
    }

    pub fn lift_source(&self) -> &str {
        self.map.expr().source()
    }

    /// Ring size for oscillation profiles.
    pub fn oscillation_samples(&self) -> usize {
        2 * MIN_RING_SAMPLES
    }
}
