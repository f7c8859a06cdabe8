use crate::error::{Error, Result};
use crate::geom2d::PlanarPoint;
use crate::scalar::Scalar;

/// Calibration map of the closed unit disc: `z -> z + (1 - |z|) v`.
///
/// Identity on the boundary, no interior fixed point for `0 < |v| <= 1`.
pub fn witness_identity_extension<T: Scalar>(v: PlanarPoint<T>, z: PlanarPoint<T>) -> Result<PlanarPoint<T>> {
    WitnessExtension::new(v)?.eval(z)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessExtension<T> {
    shift: PlanarPoint<T>,
    center: PlanarPoint<T>,
    radius: T,
}

impl<T: Scalar> WitnessExtension<T> {
    pub fn new(v: PlanarPoint<T>) -> Result<Self> {
        Self::on_disc(PlanarPoint::origin(), T::one(), v)
    }

    /// The same map conjugated onto the disc of given center and radius.
    pub fn on_disc(center: PlanarPoint<T>, radius: T, v: PlanarPoint<T>) -> Result<Self> {
        let n = v.norm();
        if !(n > T::zero() && n <= T::one()) {
            return Err(Error::InvalidArgument(format!(
                "witness shift must satisfy 0 < |v| <= 1, got {n}"
            )));
        }
        if !(radius > T::zero()) {
            return Err(Error::InvalidArgument("witness disc radius must be positive".into()));
        }
        Ok(WitnessExtension {
            shift: v,
            center,
            radius,
        })
    }

    pub fn shift(&self) -> PlanarPoint<T> {
        self.shift
    }

    pub fn eval(&self, q: PlanarPoint<T>) -> Result<PlanarPoint<T>> {
        let z = (q - self.center) * (T::one() / self.radius);
        let r = z.norm();
        if r > T::one() + T::tol(T::tolerances().inside_slack) {
            return Err(Error::OutsideDomain {
                x: q.x.as_f64(),
                y: q.y.as_f64(),
            });
        }
        let w = z + self.shift * (T::one() - r.min(T::one()));
        Ok(self.center + w * self.radius)
    }
}
