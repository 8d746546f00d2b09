//! Boundary dilation coefficients: exact values for rational inner maps,
//! radial-limit extrapolation for black boxes, the dilation of a
//! difference quotient, and the full recursion along a chain.

use crate::blaschke::BlaschkeProduct;
use crate::chain::DeltaChain;
use crate::disk::{gamma_raw, BoundaryPoint, DiskPoint};
use crate::error::{Error, Result};
use crate::numdiff::richardson_limit;
use crate::selfmap::SelfMap;
use alloc::vec::Vec;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMethod {
    Exact,
    RadialExtrapolated,
}

/// The boundary dilation coefficient of a map at a boundary point,
/// together with the associated boundary value `tau` and an error
/// estimate for extrapolated results.
///
/// `beta` is `f64::INFINITY` when the dilation is infinite, in which
/// case there is no distinguished `tau`. Downstream inequality checks
/// widen their tolerances by `confidence`.
#[derive(Clone, Copy, Debug)]
pub struct BoundaryDilation {
    pub sigma: BoundaryPoint,
    pub tau: Option<BoundaryPoint>,
    pub beta: f64,
    pub method: BetaMethod,
    pub confidence: f64,
}

impl BoundaryDilation {
    pub fn is_finite(&self) -> bool {
        self.beta.is_finite()
    }

    /// The boundary value, required finite.
    pub fn tau_value(&self) -> Result<Complex64> {
        self.tau.map(|t| t.value()).ok_or(Error::InfiniteBeta)
    }
}

/// Exact dilation of a finite Blaschke product: `beta = |B'(sigma)|` and
/// `tau = B(sigma)`. Finite products have finite dilation on the whole
/// circle, so this cannot fail.
pub fn beta_exact(b: &BlaschkeProduct, sigma: &BoundaryPoint) -> BoundaryDilation {
    let s = sigma.value();
    let tau = b.eval(s).expect("validated products have no poles on the closed disk");
    let beta = b.derivative(s).expect("validated products have no poles on the closed disk").norm();
    BoundaryDilation {
        sigma: *sigma,
        tau: Some(BoundaryPoint::new(tau).expect("Blaschke boundary values are unimodular")),
        beta,
        method: BetaMethod::Exact,
        confidence: 0.0,
    }
}

/// Exact dilation for any exact-rational self-map. Rational maps whose
/// boundary value at `sigma` is interior have infinite dilation there.
pub fn exact_dilation(f: &SelfMap, sigma: &BoundaryPoint) -> Result<BoundaryDilation> {
    if let Some(b) = f.blaschke() {
        return Ok(beta_exact(b, sigma));
    }
    let r = f.rational().ok_or(Error::InvalidParameter {
        what: "exact dilation needs an exact-rational map",
    })?;
    let s = sigma.value();
    let v = r.eval(s)?;
    if (v.norm() - 1.0).abs() > 1e-9 {
        return Ok(BoundaryDilation {
            sigma: *sigma,
            tau: None,
            beta: f64::INFINITY,
            method: BetaMethod::Exact,
            confidence: 0.0,
        });
    }
    Ok(BoundaryDilation {
        sigma: *sigma,
        tau: Some(BoundaryPoint::new(v / v.norm()).expect("renormalized")),
        beta: r.derivative(s)?.norm(),
        method: BetaMethod::Exact,
        confidence: 0.0,
    })
}

/// Radial sampling range `r_m = 1 - 2^-m`. Closer samples underflow the
/// `1 - r` precision budget.
const RADIAL_M_LO: i32 = 8;
const RADIAL_M_HI: i32 = 40;
/// Values past this cap with sustained growth are classified infinite.
const INFINITE_CAP: f64 = 1e8;

/// Estimate the dilation as the radial limit of `(1 - |f(r sigma)|)/(1 - r)`,
/// with Richardson extrapolation under an affine error model in `1 - r`
/// (finite products are analytic across the circle, which justifies it).
/// The extrapolation increment is reported as `confidence`; a sequence
/// that neither settles nor grows is rejected as inconclusive.
pub fn beta_radial(f: &SelfMap, sigma: &BoundaryPoint) -> Result<BoundaryDilation> {
    let s = sigma.value();
    let mut quotients = Vec::with_capacity((RADIAL_M_HI - RADIAL_M_LO + 1) as usize);
    let mut tau_sample = None;
    for m in RADIAL_M_LO..=RADIAL_M_HI {
        let one_minus_r = 2.0_f64.powi(-m);
        let fz = f.eval(s * (1.0 - one_minus_r))?;
        let t = (1.0 - fz.norm()) / one_minus_r;
        quotients.push(t);
        if fz.norm() > 1e-3 {
            tau_sample = Some(fz / fz.norm());
        }
        // divergence: growing past the cap with sustained factor > 1.5
        let n = quotients.len();
        if t > INFINITE_CAP && n >= 3 {
            let a = quotients[n - 3];
            let b = quotients[n - 2];
            if b / a > 1.5 && t / b > 1.5 {
                return Ok(BoundaryDilation {
                    sigma: *sigma,
                    tau: None,
                    beta: f64::INFINITY,
                    method: BetaMethod::RadialExtrapolated,
                    confidence: f64::INFINITY,
                });
            }
        }
    }

    let complexified: Vec<Complex64> =
        quotients.iter().map(|&q| Complex64::new(q, 0.0)).collect();
    let (value, confidence) = richardson_limit(&complexified)?;
    let beta = value.re;
    if !beta.is_finite() || beta > INFINITE_CAP {
        return Ok(BoundaryDilation {
            sigma: *sigma,
            tau: None,
            beta: f64::INFINITY,
            method: BetaMethod::RadialExtrapolated,
            confidence: f64::INFINITY,
        });
    }
    if confidence > 0.02 * beta.abs().max(1.0) {
        return Err(Error::InconclusiveLimit { spread: confidence });
    }
    let tau = tau_sample.map(|t| BoundaryPoint::new(t).expect("normalized sample"));
    Ok(BoundaryDilation {
        sigma: *sigma,
        tau,
        beta,
        method: BetaMethod::RadialExtrapolated,
        confidence: confidence + 1e-14 * (1.0 + beta.abs()),
    })
}

/// Exact dilation when the map structure allows it, radial otherwise.
pub fn boundary_dilation(f: &SelfMap, sigma: &BoundaryPoint) -> Result<BoundaryDilation> {
    if f.is_exact() {
        exact_dilation(f, sigma)
    } else {
        beta_radial(f, sigma)
    }
}

/// The dilation of the difference quotient `Delta_w f` at `sigma`:
///
/// `beta* = beta (1-|f(w)|^2)/|f(sigma)-f(w)|^2 - (1-|w|^2)/|sigma-w|^2`.
///
/// Nonnegative by the Julia lemma; zero (at one point, hence every
/// point) exactly for automorphisms. A value below `-1e-9` signals
/// inconsistent inputs (a beta that is too small, or the wrong boundary
/// value) and is rejected.
pub fn beta_star(
    f: &SelfMap,
    sigma: &BoundaryPoint,
    f_sigma: &BoundaryPoint,
    beta: f64,
    w: &DiskPoint,
) -> Result<f64> {
    if !beta.is_finite() {
        return Err(Error::InfiniteBeta);
    }
    let fw = f.eval(w.value())?;
    if fw.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: fw.norm() });
    }
    let value = beta * (1.0 - fw.norm_sqr()) / (f_sigma.value() - fw).norm_sqr()
        - (1.0 - w.value().norm_sqr()) / (sigma.value() - w.value()).norm_sqr();
    if value < -1e-9 * beta.max(1.0) {
        return Err(Error::NegativeBetaStar { value });
    }
    Ok(value)
}

/// Dilations and boundary values of every stage of a chain.
#[derive(Clone, Debug)]
pub struct BetaChain {
    pub sigma: BoundaryPoint,
    /// `betas[h]` is the dilation of stage `h` at `sigma`; index 0 is the
    /// base map.
    pub betas: Vec<f64>,
    /// Unimodular boundary values of the stages at `sigma`.
    pub boundary_values: Vec<Complex64>,
    /// Propagated error estimate of the final beta (0 for exact bases).
    pub confidence: f64,
}

/// Run the dilation and boundary-value recursions down a chain:
///
/// `beta_h = beta_{h-1} (1-|v|^2)/|u - v|^2 - (1-|w_h|^2)/|sigma - w_h|^2`,
/// `u_h = conj(u) sigma (u - v)/(conj(u) - conj(v)) (conj(sigma) - conj(w_h))/(sigma - w_h)`,
///
/// with `u` the previous boundary value and `v` the previous stage's
/// value at the new point. Every beta stays finite and nonnegative when
/// the base dilation is finite.
pub fn beta_chain(
    chain: &DeltaChain,
    sigma: &BoundaryPoint,
    base: Option<&BoundaryDilation>,
) -> Result<BetaChain> {
    let base_dil = match base {
        Some(d) => {
            if (d.sigma.value() - sigma.value()).norm() > 1e-12 {
                return Err(Error::InvalidParameter {
                    what: "supplied dilation is for another sigma",
                });
            }
            *d
        }
        None => boundary_dilation(chain.base(), sigma)?,
    };
    if !base_dil.is_finite() {
        return Err(Error::InfiniteBeta);
    }
    let s = sigma.value();
    let mut betas = Vec::with_capacity(chain.k() + 1);
    let mut values = Vec::with_capacity(chain.k() + 1);
    let mut confidence = base_dil.confidence;
    betas.push(base_dil.beta);
    values.push(base_dil.tau_value()?);

    for h in 1..=chain.k() {
        let u = values[h - 1];
        let v = chain.value_at(h - 1);
        let w = chain.points()[h - 1].value();
        let sep = (u - v).norm_sqr();
        if sep < 1e-28 {
            return Err(Error::BoundaryValueReached { modulus: v.norm() });
        }
        let amplify = (1.0 - v.norm_sqr()) / sep;
        let beta = betas[h - 1] * amplify - (1.0 - w.norm_sqr()) / (s - w).norm_sqr();
        if beta < -1e-9 * betas[h - 1].max(1.0) {
            return Err(Error::NegativeBetaStar { value: beta });
        }
        confidence *= amplify;
        // unimodular product form of the boundary value; renormalize to
        // keep long chains from drifting
        let bv = u.conj() * s * (u - v) / (u.conj() - v.conj()) * (s.conj() - w.conj()) / (s - w);
        values.push(bv / bv.norm());
        betas.push(beta);
    }
    Ok(BetaChain { sigma: *sigma, betas, boundary_values: values, confidence })
}

/// The boundary value a map must take at `sigma` so that the k-fold
/// difference quotient based at `z0` has boundary value 1 there:
/// the Möbius pullback of `gamma_{z0}(sigma)^k`.
pub fn fixed_point_condition(z0: &DiskPoint, k: u32, sigma: &BoundaryPoint) -> BoundaryPoint {
    let z = z0.value();
    let g = gamma_raw(z, sigma.value());
    let p = g.powu(k);
    let value = (p + z) / (Complex64::new(1.0, 0.0) + z.conj() * p);
    BoundaryPoint::new(value).expect("Möbius image of a boundary point is unimodular")
}
