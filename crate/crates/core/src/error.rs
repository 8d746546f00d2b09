use core::fmt;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Point failed the open-disk invariant `|z| < 1 - margin`.
    NotInDisk { modulus: f64, margin: f64 },
    /// Point is not within tolerance of the unit circle.
    NotOnBoundary { modulus: f64 },
    /// A Möbius denominator `1 - conj(w) z` collapsed.
    Pole { denominator: f64 },
    /// An interior evaluation reached the boundary numerically, so the
    /// map is not a self-map of the open disk at this point.
    BoundaryValueReached { modulus: f64 },
    /// Construction spot-check found `|f| > 1 + tol` inside the disk.
    NotASelfMap { max_modulus: f64 },
    /// Too many difference-quotient stages for a product of this degree.
    DegreeExhausted { degree: usize, requested: usize },
    /// Synthetic division left a remainder above the certification bound.
    DeflationResidual { residual: f64 },
    /// The root finder stopped without meeting the residual contract.
    RootFinding { residual: f64, iterations: usize },
    /// A constructed map failed its certificate (boundary modulus,
    /// degree count, or pointwise agreement).
    Certification { detail: &'static str, value: f64 },
    /// A `1 - |.|^2` denominator degenerated; the map behaves like an
    /// automorphism at this point.
    AutomorphismDegeneracy { denominator: f64 },
    /// The operation is undefined for disk automorphisms.
    AutomorphismInput,
    /// A dilation difference came out negative beyond tolerance,
    /// signalling inconsistent inputs.
    NegativeBetaStar { value: f64 },
    /// Radial extrapolation did not settle.
    InconclusiveLimit { spread: f64 },
    /// A finite boundary dilation coefficient was required.
    InfiniteBeta,
    /// Derivatives that were required to vanish do not.
    VanishingOrder { order: usize, magnitude: f64 },
    /// A claimed fixed point (interior or boundary) is not fixed.
    FixedPointMismatch { distance: f64 },
    /// A Cowen–Pommerenke denominator is not positive.
    NonPositiveDenominator { index: usize, value: f64 },
    /// Not enough Taylor data for the requested formula.
    InsufficientTaylor { needed: usize, got: usize },
    /// Catch-all precondition failure.
    InvalidParameter { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInDisk { modulus, margin } => {
                write!(f, "point with |z| = {modulus} violates |z| < 1 - {margin}")
            }
            Error::NotOnBoundary { modulus } => {
                write!(f, "point with |z| = {modulus} is not on the unit circle")
            }
            Error::Pole { denominator } => {
                write!(f, "Möbius denominator collapsed to {denominator}")
            }
            Error::BoundaryValueReached { modulus } => {
                write!(f, "interior value reached the boundary (|f(z)| = {modulus})")
            }
            Error::NotASelfMap { max_modulus } => {
                write!(f, "not a self-map of the disk: sampled |f| up to {max_modulus}")
            }
            Error::DegreeExhausted { degree, requested } => write!(
                f,
                "cannot build {requested} difference-quotient stages from degree {degree}"
            ),
            Error::DeflationResidual { residual } => {
                write!(f, "deflation remainder {residual} above certification bound")
            }
            Error::RootFinding { residual, iterations } => write!(
                f,
                "root finder stalled after {iterations} iterations (best residual {residual})"
            ),
            Error::Certification { detail, value } => {
                write!(f, "certification failed: {detail} ({value})")
            }
            Error::AutomorphismDegeneracy { denominator } => {
                write!(f, "degenerate 1-|.|^2 denominator {denominator}")
            }
            Error::AutomorphismInput => write!(f, "operation undefined for disk automorphisms"),
            Error::NegativeBetaStar { value } => {
                write!(f, "dilation difference {value} negative beyond tolerance")
            }
            Error::InconclusiveLimit { spread } => {
                write!(f, "radial extrapolation inconclusive (spread {spread})")
            }
            Error::InfiniteBeta => write!(f, "finite boundary dilation coefficient required"),
            Error::VanishingOrder { order, magnitude } => write!(
                f,
                "derivative of order {order} should vanish but has magnitude {magnitude}"
            ),
            Error::FixedPointMismatch { distance } => {
                write!(f, "claimed fixed point misses by {distance}")
            }
            Error::NonPositiveDenominator { index, value } => {
                write!(f, "non-positive denominator {value} at boundary point {index}")
            }
            Error::InsufficientTaylor { needed, got } => {
                write!(f, "need {needed} derivatives, got {got}")
            }
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
