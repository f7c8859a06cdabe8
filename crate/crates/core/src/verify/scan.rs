//! Grid scan for interior fixed points with adaptive refinement.
//!
//! The region is sampled on a polar grid of cell centers strictly inside the
//! boundary. A cell is subdivided when its center residual `|F(z) - z|` is
//! small compared to `safety * diameter * L`, with `L` a sampled Lipschitz
//! bound for the residual, so that cells which might hide a zero get a closer
//! look. Nothing here is a proof; the guarantee is only as good as `L`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::TAU;

use rayon::prelude::*;

use super::{Metric, PolarRegion, SelfMap, FLAG_BUDGET_EXHAUSTED, FLAG_IDENTITY_LIKE};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    /// Cells per polar direction; at least 16.
    pub grid_n: usize,
    /// Residual at or below which a point is reported.
    pub tol: f64,
    /// Multiplier on `diameter * L` in the refinement test.
    pub lipschitz_safety: f64,
    /// Cells are not split below this diameter.
    pub min_cell_diameter: f64,
    /// Relative band next to the boundary that is never sampled.
    pub boundary_margin: f64,
    /// Fraction of coarse candidates above which the map counts as identity-like.
    pub identity_fraction: f64,
    /// Map evaluations allowed while refining one coarse cell.
    pub cell_budget: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            grid_n: 64,
            tol: 1e-6,
            lipschitz_safety: 8.0,
            min_cell_diameter: 1e-8,
            boundary_margin: 1e-6,
            identity_fraction: 0.5,
            cell_budget: 256,
        }
    }
}

impl ScanConfig {
    pub fn new(grid_n: usize, tol: f64) -> Result<Self> {
        let config = ScanConfig {
            grid_n,
            tol,
            ..ScanConfig::default()
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_n < 16 {
            return Err(Error::InvalidArgument(format!(
                "grid_n must be at least 16, got {}",
                self.grid_n
            )));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if !(self.boundary_margin > 0.0 && self.boundary_margin < 1.0) {
            return Err(Error::InvalidArgument("boundary margin must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointCandidate<P> {
    pub location: P,
    /// `|F(z) - z|`.
    pub residual: f64,
    /// Distance from the location to the boundary.
    pub margin: f64,
}

/// One coarse grid point with its image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoarseSample<P> {
    pub point: P,
    pub image: P,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutcome<P> {
    /// Sorted by residual, ascending.
    pub candidates: Vec<FixedPointCandidate<P>>,
    pub flags: Vec<String>,
    /// Coarse samples, radial index major.
    pub samples: Vec<CoarseSample<P>>,
    /// Total number of map evaluations.
    pub evaluations: usize,
}

impl<P> ScanOutcome<P> {
    pub fn identity_like(&self) -> bool {
        self.flags.iter().any(|f| f == FLAG_IDENTITY_LIKE)
    }
}

/// Scans with default settings apart from `grid_n` and `tol`.
pub fn scan_fixed_points<P, M, R>(map: &M, region: &R, grid_n: usize, tol: f64) -> Result<ScanOutcome<P>>
where
    P: Metric,
    M: SelfMap<P> + ?Sized,
    R: PolarRegion<P> + ?Sized,
{
    scan_with(map, region, &ScanConfig::new(grid_n, tol)?)
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    s0: f64,
    s1: f64,
    t0: f64,
    t1: f64,
}

impl Cell {
    fn center(&self) -> (f64, f64) {
        ((self.s0 + self.s1) / 2.0, (self.t0 + self.t1) / 2.0)
    }

    fn children(&self) -> [Cell; 4] {
        let (sm, tm) = self.center();
        [
            Cell {
                s1: sm,
                t1: tm,
                ..*self
            },
            Cell {
                s1: sm,
                t0: tm,
                ..*self
            },
            Cell {
                s0: sm,
                t1: tm,
                ..*self
            },
            Cell {
                s0: sm,
                t0: tm,
                ..*self
            },
        ]
    }
}

struct Evaluated<P> {
    point: P,
    image: P,
    residual: f64,
}

fn evaluate<P, M, R>(map: &M, region: &R, s: f64, theta: f64) -> Result<Evaluated<P>>
where
    P: Metric,
    M: SelfMap<P> + ?Sized,
    R: PolarRegion<P> + ?Sized,
{
    let point = region.polar_point(s, theta)?;
    let image = map.apply(&point)?;
    Ok(Evaluated {
        residual: region.distance(&image, &point),
        point,
        image,
    })
}

/// Twice the largest center-to-corner distance.
fn diameter<P: Metric, R: PolarRegion<P> + ?Sized>(region: &R, cell: &Cell, center: &P) -> Result<f64> {
    let mut d = 0.0f64;
    for (s, t) in [
        (cell.s0, cell.t0),
        (cell.s0, cell.t1),
        (cell.s1, cell.t0),
        (cell.s1, cell.t1),
    ] {
        d = d.max(region.distance(center, &region.polar_point(s, t)?));
    }
    Ok(2.0 * d)
}

/// Lipschitz estimate for the residual from two evaluated points.
fn slope<P: Metric, R: PolarRegion<P> + ?Sized>(region: &R, a: &Evaluated<P>, b: &Evaluated<P>) -> f64 {
    let d = region.distance(&a.point, &b.point);
    if d > 0.0 {
        (region.distance(&a.image, &b.image) + d) / d
    } else {
        0.0
    }
}

struct Refinement<P> {
    found: Vec<(P, f64)>,
    evaluations: usize,
    exhausted: bool,
}

/// A cell waiting to be split, ordered so that the smallest center residual
/// pops first (ties broken by insertion order).
struct Pending {
    residual: f64,
    seq: usize,
    cell: Cell,
    diam: f64,
    lip: f64,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .residual
            .total_cmp(&self.residual)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Best-first refinement of one coarse cell: the most suspicious cell is
/// split first, so a real fixed point is approached directly even when the
/// budget runs out elsewhere. Child diameters are taken as half the parent's.
fn refine<P, M, R>(
    map: &M,
    region: &R,
    config: &ScanConfig,
    root: Cell,
    residual: f64,
    diam: f64,
    lip: f64,
) -> Result<Refinement<P>>
where
    P: Metric,
    M: SelfMap<P> + ?Sized,
    R: PolarRegion<P> + ?Sized,
{
    let mut out = Refinement {
        found: Vec::new(),
        evaluations: 0,
        exhausted: false,
    };
    let mut seq = 0;
    let mut heap = BinaryHeap::from([Pending {
        residual,
        seq,
        cell: root,
        diam,
        lip,
    }]);
    while let Some(Pending { cell, diam, lip, .. }) = heap.pop() {
        if out.evaluations + 4 > config.cell_budget {
            out.exhausted = true;
            break;
        }
        let children = cell.children();
        let mut evals = Vec::with_capacity(4);
        for c in &children {
            let (s, t) = c.center();
            evals.push(evaluate(map, region, s, t)?);
        }
        out.evaluations += 4;
        let mut child_lip = lip;
        for a in 0..4 {
            for b in a + 1..4 {
                child_lip = child_lip.max(slope(region, &evals[a], &evals[b]));
            }
        }
        let child_diam = diam / 2.0;
        for (c, e) in children.iter().zip(&evals) {
            if e.residual <= config.tol {
                out.found.push((e.point, e.residual));
            }
            if child_diam > config.min_cell_diameter && e.residual < config.lipschitz_safety * child_diam * child_lip {
                seq += 1;
                heap.push(Pending {
                    residual: e.residual,
                    seq,
                    cell: *c,
                    diam: child_diam,
                    lip: child_lip,
                });
            }
        }
    }
    Ok(out)
}

/// Scans `region` for points with `|F(z) - z| <= tol`.
///
/// Coarse points are `polar_point(s_i, theta_j)` with
/// `s_i = (i + 1/2)/n * (1 - margin)` and `theta_j = 2 pi (j + 1/2)/n`.
/// Grid evaluation and refinement run in parallel; results are merged in
/// index order, so the outcome does not depend on the thread count.
pub fn scan_with<P, M, R>(map: &M, region: &R, config: &ScanConfig) -> Result<ScanOutcome<P>>
where
    P: Metric,
    M: SelfMap<P> + ?Sized,
    R: PolarRegion<P> + ?Sized,
{
    config.validate()?;
    let n = config.grid_n;
    let ds = (1.0 - config.boundary_margin) / n as f64;
    let dt = TAU / n as f64;
    let cell = |k: usize| {
        let (i, j) = (k / n, k % n);
        Cell {
            s0: i as f64 * ds,
            s1: (i + 1) as f64 * ds,
            t0: j as f64 * dt,
            t1: (j + 1) as f64 * dt,
        }
    };

    let coarse: Vec<Evaluated<P>> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (s, t) = cell(k).center();
            evaluate(map, region, s, t)
        })
        .collect::<Result<_>>()?;
    let mut evaluations = n * n;

    let mut flags = Vec::new();
    let coarse_hits: Vec<usize> = (0..n * n).filter(|&k| coarse[k].residual <= config.tol).collect();
    let mut found: Vec<(P, f64)> = coarse_hits
        .iter()
        .map(|&k| (coarse[k].point, coarse[k].residual))
        .collect();

    if coarse_hits.len() as f64 > config.identity_fraction * (n * n) as f64 {
        flags.push(FLAG_IDENTITY_LIKE.to_string());
    } else {
        let lipschitz = |k: usize| {
            let (i, j) = (k / n, k % n);
            let mut neighbors = vec![i * n + (j + 1) % n, i * n + (j + n - 1) % n];
            if i > 0 {
                neighbors.push(k - n);
            }
            if i + 1 < n {
                neighbors.push(k + n);
            }
            neighbors
                .into_iter()
                .map(|m| slope(region, &coarse[k], &coarse[m]))
                .fold(0.0, f64::max)
        };
        let refinements: Vec<Option<Refinement<P>>> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let c = cell(k);
                let lip = lipschitz(k);
                let diam = diameter(region, &c, &coarse[k].point)?;
                if diam > config.min_cell_diameter && coarse[k].residual < config.lipschitz_safety * diam * lip {
                    refine(map, region, config, c, coarse[k].residual, diam, lip).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()?;
        let mut exhausted = false;
        for r in refinements.into_iter().flatten() {
            evaluations += r.evaluations;
            exhausted |= r.exhausted;
            found.extend(r.found);
        }
        if exhausted {
            flags.push(FLAG_BUDGET_EXHAUSTED.to_string());
        }
    }

    let mut candidates = found
        .into_par_iter()
        .map(|(location, residual)| {
            Ok(FixedPointCandidate {
                location,
                residual,
                margin: region.boundary_distance(&location)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    candidates.sort_by(|a, b| a.residual.total_cmp(&b.residual));

    let samples = coarse
        .into_iter()
        .map(|e| CoarseSample {
            point: e.point,
            image: e.image,
            residual: e.residual,
        })
        .collect();
    Ok(ScanOutcome {
        candidates,
        flags,
        samples,
        evaluations,
    })
}
