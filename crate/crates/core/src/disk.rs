//! Geometric primitives of the Poincaré disk: the automorphisms
//! `gamma_w`, the hyperbolic distance, horocycles, Stolz regions, and
//! Euclidean disk images under Möbius maps.
//!
//! Everything in this module is a pure function of immutable values.
//! Near-boundary inputs are accepted up to the construction margin but
//! amplify rounding through `1/(1 - |z|^2)`; [`DiskPoint::conditioning`]
//! exposes that factor so callers can widen tolerances.

use crate::error::{Error, Result};
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Default construction margin for interior points.
pub const DISK_MARGIN: f64 = 1e-12;
/// Accepted deviation of a boundary point from unit modulus.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// A point of the open unit disk, `|z| < 1 - margin`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiskPoint {
    value: Complex64,
}

impl DiskPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        Self::with_margin(value, DISK_MARGIN)
    }

    /// Construct with a caller-chosen margin (the boundary functionals
    /// degenerate like `1/(1-|z|)`, so the margin is a conditioning
    /// choice, not a correctness one).
    pub fn with_margin(value: Complex64, margin: f64) -> Result<Self> {
        let modulus = value.norm();
        if modulus < 1.0 - margin {
            Ok(Self { value })
        } else {
            Err(Error::NotInDisk { modulus, margin })
        }
    }

    pub fn origin() -> Self {
        Self { value: Complex64::new(0.0, 0.0) }
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(Complex64::new(x, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    /// Error amplification factor `1/(1 - |z|^2)` of the Julia-type
    /// functionals at this point.
    pub fn conditioning(&self) -> f64 {
        1.0 / (1.0 - self.value.norm_sqr())
    }
}

/// A point of the unit circle. The constructor renormalizes to exact
/// unit modulus so horocycle functionals stay exact in the tangency
/// direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPoint {
    value: Complex64,
}

impl BoundaryPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if (modulus - 1.0).abs() <= BOUNDARY_TOL {
            Ok(Self { value: value / modulus })
        } else {
            Err(Error::NotOnBoundary { modulus })
        }
    }

    pub fn from_angle(t: f64) -> Self {
        Self { value: Complex64::from_polar(1.0, t) }
    }

    pub fn one() -> Self {
        Self { value: Complex64::new(1.0, 0.0) }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }
}

/// `gamma_w(z) = (z - w)/(1 - conj(w) z)`, the automorphism of the disk
/// vanishing at `w`. Defined for any `z` with `1 - conj(w) z != 0`; maps
/// the disk to the disk and the circle to the circle.
pub fn gamma(w: Complex64, z: Complex64) -> Result<Complex64> {
    let den = Complex64::new(1.0, 0.0) - w.conj() * z;
    if den.norm() < 1e-300 {
        return Err(Error::Pole { denominator: den.norm() });
    }
    Ok((z - w) / den)
}

/// Inverse of `gamma_w`: `(z + w)/(1 + conj(w) z)`.
pub fn gamma_inv(w: Complex64, z: Complex64) -> Result<Complex64> {
    gamma(-w, z)
}

/// `gamma_w` without the pole guard, for internal use where `|w| < 1`
/// and `|z| <= 1` make the denominator bounded below.
pub(crate) fn gamma_raw(w: Complex64, z: Complex64) -> Complex64 {
    (z - w) / (Complex64::new(1.0, 0.0) - w.conj() * z)
}

/// Pseudo-hyperbolic distance `|gamma_w(z)|`.
pub fn pseudo_hyperbolic_distance(z: &DiskPoint, w: &DiskPoint) -> f64 {
    gamma_raw(w.value(), z.value()).norm()
}

/// Poincaré distance `omega(z, w) = artanh |gamma_w(z)|`.
///
/// Computed as artanh of the pseudo-hyperbolic distance rather than via
/// the log form, for small-argument accuracy.
pub fn poincare_distance(z: &DiskPoint, w: &DiskPoint) -> f64 {
    pseudo_hyperbolic_distance(z, w).atanh()
}

/// Horocycle `E(sigma, R)`: the sublevel set `|sigma - z|^2/(1 - |z|^2) < R`.
#[derive(Clone, Copy, Debug)]
pub struct Horocycle {
    pub center: BoundaryPoint,
    pub radius: f64,
}

impl Horocycle {
    pub fn new(center: BoundaryPoint, radius: f64) -> Result<Self> {
        if radius > 0.0 {
            Ok(Self { center, radius })
        } else {
            Err(Error::InvalidParameter { what: "horocycle radius must be positive" })
        }
    }

    pub fn contains(&self, z: &DiskPoint) -> bool {
        horocycle_functional(&self.center, z) < self.radius
    }
}

/// The horocycle functional `|sigma - z|^2/(1 - |z|^2)`; membership in
/// `E(sigma, R)` is `value < R`.
pub fn horocycle_functional(sigma: &BoundaryPoint, z: &DiskPoint) -> f64 {
    horocycle_functional_value(sigma.value(), z.value())
}

/// Same functional on raw values (callers pass interior map values that
/// are not typed as `DiskPoint`).
pub fn horocycle_functional_value(sigma: Complex64, z: Complex64) -> f64 {
    (sigma - z).norm_sqr() / (1.0 - z.norm_sqr())
}

/// A Euclidean disk, used for horocycle geometry and Möbius images.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EuclideanDisk {
    pub center: Complex64,
    pub radius: f64,
}

impl EuclideanDisk {
    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() < self.radius
    }
}

/// Euclidean form of a horocycle: the disk of radius `R/(R+1)` internally
/// tangent to the unit circle at the center, so its Euclidean center is
/// `sigma/(R+1)`.
pub fn horocycle_euclidean(h: &Horocycle) -> EuclideanDisk {
    let r = h.radius / (h.radius + 1.0);
    EuclideanDisk { center: h.center.value() / (h.radius + 1.0), radius: r }
}

/// Stolz region `K(tau, M)`: `|tau - z|/(1 - |z|) < M`. Empty whenever
/// `M <= 1` because `|tau - z| >= 1 - |z|`.
#[derive(Clone, Copy, Debug)]
pub struct StolzRegion {
    pub vertex: BoundaryPoint,
    pub amplitude: f64,
}

impl StolzRegion {
    pub fn new(vertex: BoundaryPoint, amplitude: f64) -> Self {
        Self { vertex, amplitude }
    }

    pub fn is_empty(&self) -> bool {
        self.amplitude <= 1.0
    }
}

pub fn stolz_contains(k: &StolzRegion, z: &DiskPoint) -> bool {
    let zv = z.value();
    (k.vertex.value() - zv).norm() / (1.0 - zv.norm()) < k.amplitude
}

/// Image of a Euclidean disk under the involution
/// `phi_a(z) = (a - z)/(1 - conj(a) z)`, assuming the pole `1/conj(a)`
/// lies outside the closed disk (true whenever the disk sits inside the
/// unit disk and `|a| < 1`).
pub fn mobius_disk_image(a: Complex64, d: &EuclideanDisk) -> Result<EuclideanDisk> {
    let c = d.center;
    let r = d.radius;
    let den = (Complex64::new(1.0, 0.0) - a.conj() * c).norm_sqr() - a.norm_sqr() * r * r;
    if den <= 0.0 {
        return Err(Error::Pole { denominator: den });
    }
    let center = ((a - c) * (Complex64::new(1.0, 0.0) - a * c.conj()) - a * r * r) / den;
    let radius = (1.0 - a.norm_sqr()) * r / den;
    Ok(EuclideanDisk { center, radius })
}
