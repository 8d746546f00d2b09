//! Iterated hyperbolic difference quotients.
//!
//! A chain caches every intermediate stage because every downstream
//! formula (the dilation recursion, boundary values, lower bounds)
//! consumes every stage. For exact-rational bases each stage is built by
//! exact deflation: the numerator of `gamma_{g(w)} o g` is divisible by
//! `(z - w)` and — for inner maps — the denominator by `(1 - conj(w) z)`;
//! both factors are removed by synthetic division, so the stage is a
//! reduced rational map of degree exactly one less and evaluating it
//! anywhere (including at the base point itself) involves no cancelling
//! quotient. Black-box bases get closure stages with a derivative branch
//! across the diagonal.

use crate::disk::{gamma_raw, DiskPoint};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::blaschke::RationalMap;
use crate::numdiff;
use crate::sample::disk_grid;
use crate::selfmap::{MapFn, SelfMap, TaylorData, COINCIDENCE_THRESHOLD};
use alloc::sync::Arc;
use alloc::vec::Vec;
use num_complex::Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Remainder bound for the deflation certificates, relative to the
/// coefficient scale.
const DEFLATION_TOL: f64 = 1e-9;

/// Samples for the per-stage self-map spot-check on black-box chains.
const STAGE_SPOT_SAMPLES: usize = 256;

/// One difference-quotient stage `Delta_w g` together with `g(w)`.
pub(crate) fn delta_stage(g: &SelfMap, w: &DiskPoint) -> Result<(SelfMap, Complex64)> {
    let wv = w.value();
    let v = g.eval(wv)?;
    if v.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: v.norm() });
    }

    if g.is_exact() {
        let (num, den): (Polynomial, Polynomial) = if let Some(b) = g.blaschke() {
            (b.numerator(), b.denominator())
        } else {
            let r = g.rational().expect("exact maps are Blaschke or rational");
            (r.num().clone(), r.den().clone())
        };

        // numerator of gamma_v o g vanishes at w; divide it out
        let p = &num - &den.scale(v);
        let (q, rem) = p.deflate(wv);
        let scale = p.coeff_scale().max(1.0);
        if rem.norm() > DEFLATION_TOL * scale {
            return Err(Error::DeflationResidual { residual: rem.norm() / scale });
        }

        let e = &den - &num.scale(v.conj());
        let (stage_num, stage_den) = if wv.norm() < 1e-300 {
            // gamma_0(z) = z: the denominator keeps its (degree-dropping)
            // form unchanged
            (q, e)
        } else {
            // for inner maps e has a root at 1/conj(w); removing it keeps
            // the stage reduced. (z - 1/conj(w)) = -(1/conj(w))(1 - conj(w) z)
            let mirror = ONE / wv.conj();
            let (e2, rem2) = e.deflate(mirror);
            if rem2.norm() <= DEFLATION_TOL * e.coeff_scale().max(1.0) {
                (q.scale(-wv.conj()), e2)
            } else {
                (&q * &Polynomial::new(alloc::vec![ONE, -wv.conj()]), e)
            }
        };

        let degree = g.blaschke_degree().map(|d| d - 1);
        if let Some(dd) = degree {
            let got = stage_num.degree().unwrap_or(0).max(stage_den.degree().unwrap_or(0));
            if got != dd {
                return Err(Error::Certification {
                    detail: "stage degree after deflation",
                    value: got as f64,
                });
            }
        }
        let stage = SelfMap::from_parts(RationalMap::new_reduced(stage_num, stage_den)?, degree);
        return Ok((stage, v));
    }

    // black-box stage: quotient closure with a derivative branch on the
    // diagonal
    let (f, df) = g.closure().expect("non-exact maps carry closures");
    let f_for_deriv = f.clone();
    let df_for_deriv = df.clone();
    let deriv_at = move |z: Complex64| -> Complex64 {
        match &df_for_deriv {
            Some(d) => d(z),
            None => {
                let g = &f_for_deriv;
                numdiff::circle_derivative(|u| Ok(g(u)), z, numdiff::safe_radius(z))
                    .unwrap_or(Complex64::new(0.0, 0.0))
            }
        }
    };
    let fc = f.clone();
    let stage_fn: MapFn = Arc::new(move |z: Complex64| {
        let gz = gamma_raw(wv, z);
        if gz.norm() < COINCIDENCE_THRESHOLD {
            let fz = fc(z);
            let d = deriv_at(z);
            return d * (1.0 - z.norm_sqr()) / (1.0 - fz.norm_sqr());
        }
        gamma_raw(v, fc(z)) / gz
    });
    // each black-box stage must itself map the disk into the closed disk
    let mut worst = 0.0f64;
    for z in disk_grid(STAGE_SPOT_SAMPLES, 0.995) {
        worst = worst.max(stage_fn(z).norm());
    }
    if worst > 1.0 + 1e-9 {
        return Err(Error::NotASelfMap { max_modulus: worst });
    }
    Ok((SelfMap::from_closure_parts(stage_fn, None), v))
}

/// Base map, base points `w_1..w_k`, and all cached stages
/// `Delta_{w_h,...,w_1} f` with the values each stage construction
/// consumed.
#[derive(Clone, Debug)]
pub struct DeltaChain {
    points: Vec<DiskPoint>,
    stages: Vec<SelfMap>,
    values_at_points: Vec<Complex64>,
}

/// Build the chain of iterated difference quotients of `f` at the given
/// base points. A Blaschke product of degree `d` supports at most `d-1`
/// stages — one more would be a unimodular constant, not a self-map.
pub fn delta_chain(f: &SelfMap, points: &[DiskPoint]) -> Result<DeltaChain> {
    if points.is_empty() {
        return Err(Error::InvalidParameter { what: "chain needs at least one base point" });
    }
    if let Some(d) = f.blaschke_degree() {
        if points.len() >= d {
            return Err(Error::DegreeExhausted { degree: d, requested: points.len() });
        }
    }
    let mut stages = Vec::with_capacity(points.len() + 1);
    stages.push(f.clone());
    let mut chain =
        DeltaChain { points: points.to_vec(), stages, values_at_points: Vec::new() };
    for (i, w) in points.iter().enumerate() {
        let (stage, _) = delta_stage(&chain.stages[i], w)?;
        // the cached value goes through the hybrid evaluator, not the
        // stage polynomial: deep coefficient chains lose digits that the
        // iterated quotient over exact base evaluations does not
        let v = chain.eval_stage(i, w.value())?;
        if v.norm() >= 1.0 - 1e-12 {
            return Err(Error::BoundaryValueReached { modulus: v.norm() });
        }
        chain.values_at_points.push(v);
        chain.stages.push(stage);
    }
    Ok(chain)
}

/// Pseudo-hyperbolic separation below which stage evaluation switches
/// from the iterated quotient to the deflated form.
const NEAR_POINT: f64 = 1e-3;

impl DeltaChain {
    /// Number of base points (= number of built stages).
    pub fn k(&self) -> usize {
        self.points.len()
    }

    pub fn base(&self) -> &SelfMap {
        &self.stages[0]
    }

    pub fn points(&self) -> &[DiskPoint] {
        &self.points
    }

    /// `Delta_{w_h,...,w_1} f`; index 0 is the base map.
    pub fn stage(&self, h: usize) -> &SelfMap {
        &self.stages[h]
    }

    pub fn stages(&self) -> &[SelfMap] {
        &self.stages
    }

    /// `Delta_{w_i,...,w_1} f (w_{i+1})`, the value consumed when stage
    /// `i+1` was built (0-based `i`).
    pub fn value_at(&self, i: usize) -> Complex64 {
        self.values_at_points[i]
    }

    /// Evaluate stage `h` at `z`.
    ///
    /// For exact bases at points separated from every base point, the
    /// iterated quotient over the cached values is used: it only touches
    /// factored base evaluations and stays accurate for deep chains,
    /// where the deflated polynomial coefficients slowly lose digits.
    /// Near a base point the quotient cancels and the deflated form
    /// (which is regular there) takes over.
    pub fn eval_stage(&self, h: usize, z: Complex64) -> Result<Complex64> {
        if h == 0 || !self.stages[0].is_exact() {
            return self.stages[h].eval(z);
        }
        let separated = self.points[..h]
            .iter()
            .all(|w| gamma_raw(w.value(), z).norm() >= NEAR_POINT);
        if !separated {
            return self.stages[h].eval(z);
        }
        let mut val = self.stages[0].eval(z)?;
        for i in 0..h {
            let v = self.values_at_points[i];
            let denom = gamma_raw(self.points[i].value(), z);
            val = gamma_raw(v, val) / denom;
        }
        Ok(val)
    }
}

/// Closed-form difference-quotient data at the origin, from derivatives
/// of `f` at 0 alone.
#[derive(Clone, Copy, Debug)]
pub struct OriginTaylorDeltas {
    /// `Delta_0 f(0) = f^h(0)`.
    pub delta0_at_0: Complex64,
    /// `(Delta_0 f)^h(0)`.
    pub delta0_h_at_0: Complex64,
    /// `(Delta_0 f)''(0)`.
    pub delta0_second_at_0: Complex64,
    /// `(Delta_{0,0} f)^h(0)`; `None` when `Delta_0 f` is an
    /// automorphism (for example `f = z^2`), where the defining
    /// denominator vanishes identically.
    pub delta00_h_at_0: Option<Complex64>,
}

/// Closed forms for the first two iterated quotients at the origin.
///
/// Needs `f(0), f'(0), f''(0), f'''(0)`. Each step divides by a
/// `1 - |.|^2`; if any of those degenerates the map behaves like an
/// automorphism at the corresponding stage and the formulas are
/// rejected.
pub fn taylor_delta0(t: &TaylorData) -> Result<OriginTaylorDeltas> {
    if t.point().norm() > 1e-15 {
        return Err(Error::InvalidParameter { what: "taylor_delta0 needs data at the origin" });
    }
    if t.order() < 3 {
        return Err(Error::InsufficientTaylor { needed: 4, got: t.order() + 1 });
    }
    let f0 = t.derivative(0)?;
    let f1 = t.derivative(1)?;
    let f2 = t.derivative(2)?;
    let f3 = t.derivative(3)?;

    let d0 = 1.0 - f0.norm_sqr();
    if d0 < 1e-12 {
        return Err(Error::AutomorphismDegeneracy { denominator: d0 });
    }
    let fh0 = f1 / d0;

    let dh = 1.0 - fh0.norm_sqr();
    if dh < 1e-12 {
        return Err(Error::AutomorphismDegeneracy { denominator: dh });
    }
    let delta0_h = (f2 / (2.0 * d0) + f0.conj() * fh0 * fh0) / dh;

    let delta0_pp =
        (f3 / 3.0 + f0.conj() * fh0 * f2 * 2.0 + f0.conj() * f0.conj() * fh0 * fh0 * f1 * 2.0) / d0;

    let dhh = 1.0 - delta0_h.norm_sqr();
    let delta00_h = if dhh < 1e-12 {
        None
    } else {
        Some((delta0_pp / (2.0 * dh) + fh0.conj() * delta0_h * delta0_h) / dhh)
    };

    Ok(OriginTaylorDeltas {
        delta0_at_0: fh0,
        delta0_h_at_0: delta0_h,
        delta0_second_at_0: delta0_pp,
        delta00_h_at_0: delta00_h,
    })
}

/// `(Delta_{w0} f)^h(0)` by the two-term quotient formula; routes through
/// [`taylor_delta0`] when `w0 = 0`.
pub fn general_delta_derivative(f: &SelfMap, w0: &DiskPoint) -> Result<Complex64> {
    let w = w0.value();
    if w.norm() < 1e-15 {
        let t = f.taylor_at(Complex64::new(0.0, 0.0), 3)?;
        return Ok(taylor_delta0(&t)?.delta0_h_at_0);
    }
    let f0 = f.eval(Complex64::new(0.0, 0.0))?;
    let fp0 = f.derivative(Complex64::new(0.0, 0.0))?;
    let fw = f.eval(w)?;
    if fw.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: fw.norm() });
    }
    let den = ONE - fw.conj() * f0;
    let value_at_0 = ((f0 - fw) / den) / (-w);
    let d = 1.0 - value_at_0.norm_sqr();
    if d < 1e-12 {
        return Err(Error::AutomorphismDegeneracy { denominator: d });
    }
    let t1 = (fw - f0 - fp0 * w) / (w * w) / den;
    let t2 = (fw - f0) / w * (fw.conj() * fp0 - w.conj() * den) / (den * den);
    Ok((t1 + t2) / d)
}
