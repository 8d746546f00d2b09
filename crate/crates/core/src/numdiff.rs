//! Numerical differentiation of holomorphic black boxes.
//!
//! The workhorse is trapezoidal sampling of the Cauchy integral on a
//! small circle: for a map holomorphic on a neighbourhood of `z0` the
//! rule is spectrally accurate, so Taylor coefficients up to moderate
//! order come back at close to machine precision. Central differences
//! with one Richardson step are kept as a cheap independent cross-check.

use crate::error::{Error, Result};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Samples on the extraction circle. 64 keeps the aliasing error below
/// rounding for coefficients of a self-map up to order ~8.
const CIRCLE_SAMPLES: usize = 64;

/// Taylor coefficients `a_0..a_m` of `f` at `z0`, extracted on a circle
/// of the given radius. The circle must stay inside the domain of `f`;
/// for self-maps of the disk use `radius < 1 - |z0|`.
pub fn circle_taylor<F>(f: F, z0: Complex64, m: usize, radius: f64) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if radius <= 0.0 {
        return Err(Error::InvalidParameter { what: "extraction radius must be positive" });
    }
    let n = CIRCLE_SAMPLES.max(4 * (m + 1));
    let mut samples = Vec::with_capacity(n);
    for j in 0..n {
        let t = 2.0 * PI * j as f64 / n as f64;
        samples.push(f(z0 + Complex64::from_polar(radius, t))?);
    }
    let mut coeffs = Vec::with_capacity(m + 1);
    for order in 0..=m {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &v) in samples.iter().enumerate() {
            let t = 2.0 * PI * (j as f64) * (order as f64) / n as f64;
            acc += v * Complex64::from_polar(1.0, -t);
        }
        coeffs.push(acc / (n as f64 * radius.powi(order as i32)));
    }
    Ok(coeffs)
}

/// `f'(z0)` via the circle rule.
pub fn circle_derivative<F>(f: F, z0: Complex64, radius: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    Ok(circle_taylor(f, z0, 1, radius)?[1])
}

/// A safe extraction radius around an interior point.
pub fn safe_radius(z0: Complex64) -> f64 {
    (0.25 * (1.0 - z0.norm())).clamp(1e-6, 0.1)
}

/// Central differences at steps 1e-5 and 5e-6 with one Richardson
/// extrapolation step; the independent oracle for the circle rule.
pub fn central_derivative_richardson<F>(f: F, z0: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let d = |h: f64| -> Result<Complex64> {
        let hp = Complex64::new(h, 0.0);
        Ok((f(z0 + hp)? - f(z0 - hp)?) / (2.0 * h))
    };
    let d1 = d(1e-5)?;
    let d2 = d(5e-6)?;
    Ok((d2 * 4.0 - d1) / 3.0)
}

/// Second derivative with the same two-step Richardson scheme.
pub fn central_second_derivative_richardson<F>(f: F, z0: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let d = |h: f64| -> Result<Complex64> {
        let hp = Complex64::new(h, 0.0);
        Ok((f(z0 + hp)? - f(z0)? * 2.0 + f(z0 - hp)?) / (h * h))
    };
    let d1 = d(1e-4)?;
    let d2 = d(5e-5)?;
    Ok((d2 * 4.0 - d1) / 3.0)
}

/// Limit of a complex sequence `x_m` sampled at geometrically shrinking
/// parameters `t_m = 2^-m`, assuming an affine error model `x(t) ~ L + c t`.
/// Returns the extrapolated limit together with the smallest successive
/// increment, which serves as the confidence estimate.
pub fn richardson_limit(samples: &[Complex64]) -> Result<(Complex64, f64)> {
    if samples.len() < 3 {
        return Err(Error::InvalidParameter { what: "need at least 3 samples to extrapolate" });
    }
    let extrapolated: Vec<Complex64> =
        samples.windows(2).map(|w| w[1] * 2.0 - w[0]).collect();
    let mut best = f64::INFINITY;
    let mut value = *extrapolated.last().unwrap();
    for w in extrapolated.windows(2) {
        let inc = (w[1] - w[0]).norm();
        if inc < best {
            best = inc;
            value = w[1];
        }
    }
    Ok((value, best))
}
