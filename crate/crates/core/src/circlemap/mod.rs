//! Circle self-maps given by lifts: degree and fixed points.
//!
//! A map `f: S -> S` is represented by a real function `F` with
//! `F(x + 2pi) = F(x) + 2pi d`; `d` is the degree. Fixed points of `f` are
//! the roots of `F(x) - x - 2pi k` over integers `k`, which turns every
//! question about `f` into one-dimensional root finding.

pub mod angle;
pub mod expr;

use std::marker::PhantomData;

pub use angle::{canonicalize, circle_distance, wrap_to_pi, Angle};
pub use expr::{EvalError, Expr, LiftExpr, ParseError};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ANALYSIS_GRID};

/// A continuous self-map of the circle, evaluable through a lift.
pub trait CircleMap<T: Scalar>: Send + Sync {
    /// Value of the lift at `theta`. Defined on all of the real line.
    fn lift(&self, theta: T) -> Result<T>;

    fn degree(&self) -> i64;

    /// `canonicalize(F(theta))`.
    fn eval(&self, theta: T) -> Result<Angle<T>> {
        Ok(Angle::new(self.lift(theta)?))
    }
}

impl<T: Scalar, M: CircleMap<T> + ?Sized> CircleMap<T> for &M {
    fn lift(&self, theta: T) -> Result<T> {
        (**self).lift(theta)
    }

    fn degree(&self) -> i64 {
        (**self).degree()
    }
}

/// Circle map backed by a parsed lift expression with a verified degree.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedCircleMap<T> {
    lift: LiftExpr,
    degree: i64,
    _scalar: PhantomData<fn() -> T>,
}

impl<T: Scalar> LiftedCircleMap<T> {
    /// Checks that `lift` is total on the analysis grid of `[0, 2pi]` and that
    /// it winds an integer number of times, then records the degree.
    pub fn new(lift: LiftExpr) -> Result<Self> {
        let tau = T::TAU();
        let n = T::lit(ANALYSIS_GRID as f64);
        for j in 0..=ANALYSIS_GRID {
            lift.eval(tau * T::lit(j as f64) / n)?;
        }
        let span = lift.eval(tau)? - lift.eval(T::zero())?;
        let turns = (span / tau).round();
        let residual = (span - tau * turns).abs();
        if residual > T::tol(T::tolerances().winding) {
            return Err(Error::NonIntegerWinding {
                span: span.as_f64(),
                residual: residual.as_f64(),
            });
        }
        let degree = turns.to_i64().ok_or(Error::NonIntegerWinding {
            span: span.as_f64(),
            residual: f64::INFINITY,
        })?;
        Ok(LiftedCircleMap {
            lift,
            degree,
            _scalar: PhantomData,
        })
    }

    pub fn parse(source: &str) -> Result<Self> {
        Self::new(LiftExpr::parse(source)?)
    }

    pub fn expr(&self) -> &LiftExpr {
        &self.lift
    }
}

impl<T: Scalar> CircleMap<T> for LiftedCircleMap<T> {
    #[inline]
    fn lift(&self, theta: T) -> Result<T> {
        Ok(self.lift.eval(theta)?)
    }

    fn degree(&self) -> i64 {
        self.degree
    }
}

/// Builds the circle map of a lift expression.
pub fn make_circle_map<T: Scalar>(lift: LiftExpr) -> Result<LiftedCircleMap<T>> {
    LiftedCircleMap::new(lift)
}

/// Result of a fixed-point search on the circle.
#[derive(Debug, Clone, PartialEq)]
pub enum FixedPointSet<T> {
    /// Isolated fixed points, ascending in `[0, 2pi)`.
    Discrete(Vec<Angle<T>>),
    /// Every grid angle is fixed within tolerance (e.g. the identity).
    AllFixed,
    Empty,
}

impl<T: Scalar> FixedPointSet<T> {
    pub fn is_empty(&self) -> bool {
        matches!(self, FixedPointSet::Empty)
    }

    /// The fixed point extensions anchor to: the smallest discrete root, or
    /// angle 0 when every point is fixed.
    pub fn representative(&self) -> Option<Angle<T>> {
        match self {
            FixedPointSet::Discrete(v) => v.first().copied(),
            FixedPointSet::AllFixed => Some(Angle::zero()),
            FixedPointSet::Empty => None,
        }
    }
}

/// Distance from `F(theta) - theta` to the nearest multiple of `2pi`.
pub fn fixed_point_residual<T: Scalar, M: CircleMap<T> + ?Sized>(map: &M, theta: T) -> Result<T> {
    let d = map.lift(theta)? - theta;
    Ok(wrap_to_pi(d).abs())
}

/// Locates the fixed points of `map` to residual `tol`.
///
/// `g_k(x) = F(x) - x - 2pi k` is sampled on the analysis grid for every `k`
/// the lift can reach; sign changes are refined by bisection and samples
/// already within `tol` are accepted as they are.
pub fn fixed_points<T: Scalar, M: CircleMap<T> + ?Sized>(map: &M, tol: T) -> Result<FixedPointSet<T>> {
    assert!(tol > T::zero(), "fixed-point tolerance must be positive");
    let tau = T::TAU();
    let n = ANALYSIS_GRID;
    let nf = T::lit(n as f64);
    let thetas: Vec<T> = (0..=n).map(|j| tau * T::lit(j as f64) / nf).collect();
    let disp = thetas
        .iter()
        .map(|&x| Ok(map.lift(x)? - x))
        .collect::<Result<Vec<T>>>()?;

    let worst = disp
        .iter()
        .map(|&d| (d - tau * (d / tau).round()).abs())
        .fold(T::zero(), T::max);
    if worst <= tol {
        return Ok(FixedPointSet::AllFixed);
    }

    let reach = disp.iter().fold(T::zero(), |m, d| m.max(d.abs())) + tau;
    let kmax = (reach / tau).floor().to_i64().unwrap_or(0);
    let width = T::tol(T::tolerances().bisection_width);

    let mut roots = Vec::new();
    for k in -kmax..=kmax {
        let shift = tau * T::lit(k as f64);
        let g = |j: usize| disp[j] - shift;
        for (j, &theta) in thetas.iter().enumerate().take(n + 1) {
            if g(j).abs() <= tol {
                roots.push(theta);
            }
        }
        for j in 0..n {
            let (ga, gb) = (g(j), g(j + 1));
            if ga.abs() <= tol || gb.abs() <= tol || (ga > T::zero()) == (gb > T::zero()) {
                continue;
            }
            let gk = |x: T| -> Result<T> { Ok(map.lift(x)? - x - shift) };
            let root = bisect(gk, thetas[j], thetas[j + 1], ga, width)?;
            if gk(root)?.abs() <= tol {
                roots.push(root);
            }
        }
    }

    let mut roots: Vec<T> = roots.into_iter().map(canonicalize).collect();
    roots.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    let merge = tol * T::lit(T::tolerances().dedup_factor);
    let mut unique: Vec<T> = Vec::with_capacity(roots.len());
    for r in roots {
        if unique.last().is_none_or(|&last| r - last > merge) {
            unique.push(r);
        }
    }
    if unique.len() > 1 && circle_distance(unique[0], *unique.last().unwrap()) <= merge {
        unique.pop();
    }
    if unique.is_empty() {
        Ok(FixedPointSet::Empty)
    } else {
        Ok(FixedPointSet::Discrete(unique.into_iter().map(Angle::new).collect()))
    }
}

fn bisect<T: Scalar>(g: impl Fn(T) -> Result<T>, mut a: T, mut b: T, ga: T, width: T) -> Result<T> {
    let positive_at_a = ga > T::zero();
    let mut best = (a, ga.abs());
    for _ in 0..200 {
        if b - a <= width {
            break;
        }
        let m = a + (b - a) / T::lit(2.0);
        let gm = g(m)?;
        if gm.abs() < best.1 {
            best = (m, gm.abs());
        }
        if gm == T::zero() {
            return Ok(m);
        }
        if (gm > T::zero()) == positive_at_a {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(best.0)
}
