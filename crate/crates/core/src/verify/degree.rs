use std::f64::consts::{PI, TAU};

use crate::circlemap::{wrap_to_pi, Angle, CircleMap};
use crate::error::{Error, Result};

/// Smallest sample count accepted by [`estimate_degree`].
pub const MIN_DEGREE_SAMPLES: usize = 64;

/// `f(2 pi k / n)` for `k = 0..n`.
pub fn sample_boundary_map<M: CircleMap<f64> + ?Sized>(f: &M, n: usize) -> Result<Vec<Angle<f64>>> {
    (0..n).map(|k| f.eval(TAU * k as f64 / n as f64)).collect()
}

/// Degree of a circle map from its values at `theta_k = 2 pi k / n`.
///
/// Consecutive values, including the step from the last sample back to the
/// first, are unwrapped by the shortest signed angle; the total is a whole
/// number of turns. Steps of `pi` or more are ambiguous and rejected.
pub fn estimate_degree(samples: &[Angle<f64>]) -> Result<i64> {
    let n = samples.len();
    if n < MIN_DEGREE_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_DEGREE_SAMPLES} samples to estimate a degree, got {n}"
        )));
    }
    let mut total = 0.0;
    for k in 0..n {
        let next = (k + 1) % n;
        let step = wrap_to_pi(samples[next].radians() - samples[k].radians());
        if step.abs() >= PI {
            return Err(Error::UnwrapAmbiguity { index: k, next, step });
        }
        total += step;
    }
    Ok((total / TAU).round() as i64)
}
