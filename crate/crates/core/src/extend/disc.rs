//! Extensions of a circle map with a fixed point to the closed unit disc,
//! landing on the unit circle.

use std::fmt;
use std::str::FromStr;

use crate::circlemap::{fixed_point_residual, Angle, CircleMap};
use crate::error::{Error, Result};
use crate::geom2d::PlanarPoint;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Rotate the circle of radius `t` by `i(t)`, project radially to the
    /// unit circle, then apply `f`. Center goes to the fixed point.
    Rotation,
    /// Straight-line homotopy of degree-0 lifts from the fixed point to `f`.
    Collapse0,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Rotation => "rotation",
            Strategy::Collapse0 => "collapse0",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotation" => Ok(Strategy::Rotation),
            "collapse0" => Ok(Strategy::Collapse0),
            other => Err(Error::InvalidArgument(format!(
                "unknown strategy `{other}` (expected `rotation` or `collapse0`)"
            ))),
        }
    }
}

/// The rotation schedule `i: [0, 1] -> [0, 2pi]`, `i(t) = 2pi t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RotationSchedule;

impl RotationSchedule {
    #[inline]
    pub fn angle<T: Scalar>(self, t: T) -> T {
        T::TAU() * t
    }
}

/// An extension `G: D -> S` of a circle map `f` with fixed point `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscExtension<T, M> {
    strategy: Strategy,
    map: M,
    fixed: Angle<T>,
    schedule: RotationSchedule,
    /// `2pi k` with `F(p) - 2pi k = p`; used by the collapse strategy.
    lift_shift: T,
}

impl<T: Scalar, M: CircleMap<T>> DiscExtension<T, M> {
    /// Fails when `p` is not fixed by `map` or when the strategy does not
    /// apply to the map's degree.
    pub fn new(strategy: Strategy, map: M, p: Angle<T>) -> Result<Self> {
        let residual = fixed_point_residual(&map, p.radians())?;
        if residual > T::tol(T::tolerances().fixed_point) {
            return Err(Error::NotFixed {
                angle: p.radians().as_f64(),
                residual: residual.as_f64(),
            });
        }
        if strategy == Strategy::Collapse0 && map.degree() != 0 {
            return Err(Error::StrategyInapplicable {
                strategy: Strategy::Collapse0.name(),
                degree: map.degree(),
            });
        }
        let turns = ((map.lift(p.radians())? - p.radians()) / T::TAU()).round();
        Ok(DiscExtension {
            strategy,
            map,
            fixed: p,
            schedule: RotationSchedule,
            lift_shift: T::TAU() * turns,
        })
    }

    pub fn rotation(map: M, p: Angle<T>) -> Result<Self> {
        Self::new(Strategy::Rotation, map, p)
    }

    pub fn collapse0(map: M, p: Angle<T>) -> Result<Self> {
        Self::new(Strategy::Collapse0, map, p)
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn map(&self) -> &M {
        &self.map
    }

    pub fn fixed_point(&self) -> Angle<T> {
        self.fixed
    }

    /// `G` at the disc point with polar coordinates `(t, phi)`, `t` in `[0, 1]`.
    pub fn eval_polar(&self, t: T, phi: T) -> Result<Angle<T>> {
        if !(t >= T::zero() && t <= T::one()) {
            return Err(Error::InvalidArgument(format!("disc radius {t} outside [0, 1]")));
        }
        if t == T::zero() {
            return Ok(self.fixed);
        }
        match self.strategy {
            Strategy::Rotation => self.map.eval(phi + self.schedule.angle(t)),
            Strategy::Collapse0 => {
                let p = self.fixed.radians();
                let lifted = self.map.lift(phi)? - self.lift_shift;
                Ok(Angle::new(p + t * (lifted - p)))
            }
        }
    }

    /// `G` on the unit disc as a planar map into the unit circle.
    pub fn eval_point(&self, z: PlanarPoint<T>) -> Result<PlanarPoint<T>> {
        let slack = T::tol(T::tolerances().inside_slack);
        let r = z.norm();
        if r > T::one() + slack {
            return Err(Error::OutsideDomain {
                x: z.x.as_f64(),
                y: z.y.as_f64(),
            });
        }
        let phi = if r == T::zero() { T::zero() } else { z.angle() };
        let a = self.eval_polar(r.min(T::one()), phi)?;
        Ok(PlanarPoint::unit(a.radians()))
    }
}

/// Rotation extension of `f` at disc point `(t, phi)`.
pub fn extend_disc_rotation<T: Scalar, M: CircleMap<T>>(f: M, p: Angle<T>, t: T, phi: T) -> Result<Angle<T>> {
    DiscExtension::rotation(f, p)?.eval_polar(t, phi)
}

/// Degree-0 collapse extension of `f` at disc point `(t, phi)`.
pub fn extend_disc_collapse0<T: Scalar, M: CircleMap<T>>(f: M, p: Angle<T>, t: T, phi: T) -> Result<Angle<T>> {
    DiscExtension::collapse0(f, p)?.eval_polar(t, phi)
}
