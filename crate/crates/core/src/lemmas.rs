//! Structured verifiers for the Julia-type inequalities: the classical
//! lemma and its horocycle form, the two-point and multipoint versions
//! built on difference-quotient chains, Mercer's Euclidean disk, the
//! angular-derivative lower-bound ladders, and the Cowen–Pommerenke
//! family for interior plus boundary fixed points.
//!
//! Every check returns a [`VerificationReport`] carrying both sides, the
//! gap, a pass/fail flag at the checking tolerance, an equality flag at
//! the (coarser) equality tolerance, and — when the map's Blaschke
//! degree is structurally known — the expected equality classification.
//! A mismatch between observed and expected equality is a defect in the
//! inputs or the implementation, never something to ignore.

use crate::boundary::{beta_star, BetaChain, BoundaryDilation};
use crate::chain::{delta_chain, delta_stage, DeltaChain};
use crate::disk::{
    gamma_raw, horocycle_euclidean, horocycle_functional_value, mobius_disk_image, BoundaryPoint,
    DiskPoint, EuclideanDisk, Horocycle,
};
use crate::error::{Error, Result};
use crate::numdiff::richardson_limit;
use crate::selfmap::SelfMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Checking and equality-classification tolerances. `check` is the slack
/// allowed below zero for a gap; `equality` classifies a gap as an
/// equality case, relative to `max(1, |rhs|)`.
///
/// Radial-path inputs scale both by the dilation's confidence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub check: f64,
    pub equality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { check: 1e-9, equality: 1e-7 }
    }
}

impl Tolerances {
    pub fn widened(&self, confidence: f64) -> Tolerances {
        if confidence.is_finite() && confidence > 0.0 {
            Tolerances {
                check: self.check + 2.0 * confidence,
                equality: self.equality + 2.0 * confidence,
            }
        } else {
            *self
        }
    }
}

/// Echo of the inputs a report was produced from.
#[derive(Clone, Debug, Default)]
pub struct InputEcho {
    pub map: String,
    pub sigma: Option<Complex64>,
    pub z: Option<Complex64>,
    pub w: Option<Complex64>,
    pub points: Vec<Complex64>,
    pub k: Option<usize>,
}

impl InputEcho {
    pub fn for_map(f: &SelfMap) -> Self {
        Self { map: f.describe(), ..Self::default() }
    }
}

/// Outcome of one inequality check.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; nonnegative (within tolerance) when the inequality holds.
    pub gap: f64,
    pub holds: bool,
    pub equality: bool,
    /// Expected equality classification from the known Blaschke degree,
    /// when the structure is known.
    pub equality_expected: Option<bool>,
    pub tolerances: Tolerances,
    pub inputs: InputEcho,
    pub note: Option<String>,
}

impl VerificationReport {
    fn from_sides(
        name: &'static str,
        lhs: f64,
        rhs: f64,
        tol: Tolerances,
        equality_expected: Option<bool>,
        inputs: InputEcho,
    ) -> Self {
        let gap = rhs - lhs;
        Self {
            name,
            lhs,
            rhs,
            gap,
            holds: gap >= -tol.check,
            equality: gap.abs() <= tol.equality * rhs.abs().max(1.0),
            equality_expected,
            tolerances: tol,
            inputs,
            note: None,
        }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }

    /// Holds, and the observed equality classification matches the
    /// expected one whenever the latter is known.
    pub fn consistent(&self) -> bool {
        self.holds && self.equality_expected.map_or(true, |e| e == self.equality)
    }
}

fn interior_value(f: &SelfMap, z: Complex64) -> Result<Complex64> {
    let v = f.eval(z)?;
    if v.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: v.norm() });
    }
    Ok(v)
}

/// Classical Julia inequality at `sigma`:
/// `|tau - f(z)|^2/(1-|f(z)|^2) <= beta |sigma - z|^2/(1-|z|^2)`,
/// with equality (anywhere, hence everywhere) exactly for automorphisms.
pub fn check_julia(
    f: &SelfMap,
    dil: &BoundaryDilation,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let tau = dil.tau_value()?;
    let fz = interior_value(f, z.value())?;
    let lhs = (tau - fz).norm_sqr() / (1.0 - fz.norm_sqr());
    let rhs = dil.beta * horocycle_functional_value(dil.sigma.value(), z.value());
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(dil.sigma.value());
    inputs.z = Some(z.value());
    Ok(VerificationReport::from_sides(
        "julia",
        lhs,
        rhs,
        tol.widened(dil.confidence),
        f.is_automorphism(),
        inputs,
    ))
}

/// Horocycle form of the Julia lemma: points sampled on the boundary
/// circle of `E(sigma, R)` must land in `E(tau, beta R)`. The report's
/// `lhs` is the worst image functional over the samples and `rhs` is
/// `beta R`.
pub fn check_horocycle_image(
    f: &SelfMap,
    dil: &BoundaryDilation,
    radius: f64,
    samples: usize,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if samples == 0 {
        return Err(Error::InvalidParameter { what: "need at least one sample" });
    }
    let tau = dil.tau_value()?;
    let horo = Horocycle::new(dil.sigma, radius)?;
    let disk = horocycle_euclidean(&horo);
    let mut worst = f64::NEG_INFINITY;
    for i in 0..samples {
        // midpoint angles never hit the tangency point sigma itself
        let t = 2.0 * core::f64::consts::PI * (i as f64 + 0.5) / samples as f64;
        let z = disk.center + disk.radius * Complex64::from_polar(1.0, t);
        if z.norm() >= 1.0 - 1e-12 {
            continue;
        }
        let fz = interior_value(f, z)?;
        worst = worst.max(horocycle_functional_value(tau, fz));
    }
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(dil.sigma.value());
    Ok(VerificationReport::from_sides(
        "horocycle-image",
        worst,
        dil.beta * radius,
        tol.widened(dil.confidence),
        f.is_automorphism(),
        inputs,
    ))
}

fn multipoint_inner(
    chain: &DeltaChain,
    bchain: &BetaChain,
    z: &DiskPoint,
    tol: &Tolerances,
    name: &'static str,
) -> Result<VerificationReport> {
    let k = chain.k();
    let beta_k = bchain.betas[k];
    let bv_k = bchain.boundary_values[k];
    let stage_z = chain.eval_stage(k, z.value())?;
    if stage_z.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: stage_z.norm() });
    }
    let lhs = (bv_k - stage_z).norm_sqr() / (1.0 - stage_z.norm_sqr());
    let rhs = beta_k * horocycle_functional_value(bchain.sigma.value(), z.value());
    let mut inputs = InputEcho::for_map(chain.base());
    inputs.sigma = Some(bchain.sigma.value());
    inputs.z = Some(z.value());
    inputs.points = chain.points().iter().map(|p| p.value()).collect();
    inputs.k = Some(k);
    let expected = chain.base().blaschke_degree().map(|d| d == k + 1);
    let mut report = VerificationReport::from_sides(
        name,
        lhs,
        rhs,
        tol.widened(bchain.confidence),
        expected,
        inputs,
    );
    if chain.base().blaschke_degree().is_none() {
        report = report.with_note(String::from(
            "assumed: map is not a Blaschke product of degree <= k (not verifiable for black boxes)",
        ));
    }
    Ok(report)
}

/// Multipoint Julia inequality at the final stage of a chain, with
/// equality (anywhere, hence everywhere) exactly for Blaschke products
/// of degree `k + 1`.
pub fn check_multipoint_julia(
    chain: &DeltaChain,
    bchain: &BetaChain,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if chain.k() < 1 {
        return Err(Error::InvalidParameter { what: "chain must have at least one point" });
    }
    multipoint_inner(chain, bchain, z, tol, "multipoint-julia")
}

/// Two-point Julia inequality
/// `|f*(sigma,w) - f*(z,w)|^2/(1-|f*(z,w)|^2) <= beta* |sigma-z|^2/(1-|z|^2)`;
/// the length-one chain special case, with equality exactly for Blaschke
/// products of degree 2. Automorphisms are rejected (their quotient is a
/// unimodular constant and both sides degenerate).
pub fn check_two_point_julia(
    f: &SelfMap,
    dil: &BoundaryDilation,
    z: &DiskPoint,
    w: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if f.is_automorphism() == Some(true) {
        return Err(Error::AutomorphismInput);
    }
    let chain = delta_chain(f, &[*w])?;
    let bchain = crate::boundary::beta_chain(&chain, &dil.sigma, Some(dil))?;
    let mut report = multipoint_inner(&chain, &bchain, z, tol, "two-point-julia")?;
    report.inputs.w = Some(w.value());
    Ok(report)
}

/// The Euclidean disk that the two-point Julia inequality confines
/// `f(z)` to, computed the geometric way: the horocycle of the quotient
/// map, scaled by `phi_w(z)`, pushed through the involution
/// `phi_{f(w)}`. Used as the independent oracle for [`mercer_disk`].
pub fn two_point_julia_disk(
    f: &SelfMap,
    dil: &BoundaryDilation,
    w: &DiskPoint,
    z: &DiskPoint,
) -> Result<EuclideanDisk> {
    let tau = dil.tau_value()?;
    let fw = interior_value(f, w.value())?;
    let fstar_sw = gamma_raw(fw, tau) / gamma_raw(w.value(), dil.sigma.value());
    let bst = beta_star(f, &dil.sigma, &BoundaryPoint::new(tau)?, dil.beta, w)?;
    let lam = (1.0 - z.value().norm_sqr()) / (dil.sigma.value() - z.value()).norm_sqr();
    // E(f*(sigma,w), bst/lam) as a Euclidean disk, scaled by phi_w(z)
    let phi_wz = -gamma_raw(w.value(), z.value());
    let center = fstar_sw * (lam / (bst + lam)) * phi_wz;
    let radius = (bst / (bst + lam)) * phi_wz.norm();
    mobius_disk_image(fw, &EuclideanDisk { center, radius })
}

/// The disk of Mercer's Euclidean restatement of the two-point Julia
/// lemma, from the closed-form center and radius.
#[derive(Clone, Copy, Debug)]
pub struct MercerDisk {
    pub center: Complex64,
    pub radius: f64,
    pub contains: bool,
}

/// Closed-form center/radius of the disk containing `f(z)`, plus the
/// containment verdict `|f(z) - c_w(z)| < r_w(z) + tol`.
pub fn mercer_disk(
    f: &SelfMap,
    dil: &BoundaryDilation,
    w: &DiskPoint,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<MercerDisk> {
    if f.is_automorphism() == Some(true) {
        return Err(Error::AutomorphismInput);
    }
    let tau = dil.tau_value()?;
    let fw = interior_value(f, w.value())?;
    let fstar_sw = gamma_raw(fw, tau) / gamma_raw(w.value(), dil.sigma.value());
    let bst = beta_star(f, &dil.sigma, &BoundaryPoint::new(tau)?, dil.beta, w)?;
    let lam = (1.0 - z.value().norm_sqr()) / (dil.sigma.value() - z.value()).norm_sqr();
    let phi_wz = -gamma_raw(w.value(), z.value());
    let u = fstar_sw * phi_wz;
    let a = fw;
    let den1 = ONE - a.conj() * u;
    let ell = (1.0 - a.norm_sqr() * phi_wz.norm_sqr()) / den1.norm_sqr();
    let weight = bst / (bst * ell + lam);
    let center = u * (1.0 - a.norm_sqr()) / (den1 * den1) * weight - gamma_raw(a, u);
    let radius = phi_wz.norm() * (1.0 - a.norm_sqr()) / den1.norm_sqr() * weight;
    let fz = interior_value(f, z.value())?;
    let contains = (fz - center).norm() < radius + tol.widened(dil.confidence).check;
    Ok(MercerDisk { center, radius, contains })
}

/// [`mercer_disk`] as a report: `lhs = |f(z) - c|`, `rhs = r`. Equality
/// (the value landing on the disk boundary) is expected exactly for
/// degree-2 products, where the underlying two-point inequality is an
/// identity.
pub fn mercer_report(
    f: &SelfMap,
    dil: &BoundaryDilation,
    w: &DiskPoint,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let disk = mercer_disk(f, dil, w, z, tol)?;
    let fz = f.eval(z.value())?;
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(dil.sigma.value());
    inputs.z = Some(z.value());
    inputs.w = Some(w.value());
    Ok(VerificationReport::from_sides(
        "mercer",
        (fz - disk.center).norm(),
        disk.radius,
        tol.widened(dil.confidence),
        f.blaschke_degree().map(|d| d == 2),
        inputs,
    ))
}

/// Partial sums of an angular-derivative lower bound. Terms are
/// nonnegative, so the partial sums are nondecreasing and every entry is
/// a valid lower bound for the dilation.
#[derive(Clone, Debug)]
pub struct EstimateLadder {
    /// `terms[j]` is the bound using stages up to `j`.
    pub terms: Vec<f64>,
    pub final_bound: f64,
}

fn ladder_generic(
    chain: &DeltaChain,
    bchain: &BetaChain,
    w_last: &DiskPoint,
    sharp: bool,
) -> Result<EstimateLadder> {
    let k = chain.k();
    let s = bchain.sigma.value();
    let mut terms = Vec::with_capacity(k + 1);
    let mut partial = 0.0;
    let mut product = 1.0;
    for j in 0..=k {
        let w_next = if j < k { chain.points()[j].value() } else { w_last.value() };
        let v = if j < k { chain.value_at(j) } else { chain.eval_stage(k, w_last.value())? };
        if v.norm() >= 1.0 - 1e-12 {
            return Err(Error::BoundaryValueReached { modulus: v.norm() });
        }
        let factor = if sharp {
            let u = bchain.boundary_values[j];
            (u - v).norm_sqr() / (1.0 - v.norm_sqr())
        } else {
            (1.0 - v.norm()) / (1.0 + v.norm())
        };
        product *= factor;
        partial += (1.0 - w_next.norm_sqr()) / (s - w_next).norm_sqr() * product;
        terms.push(partial);
    }
    Ok(EstimateLadder { final_bound: partial, terms })
}

/// Sharp lower-bound ladder for `beta_f(sigma)` over the points
/// `w_1..w_k` of the chain plus a final point: term `j` multiplies the
/// squared boundary gaps of stages `0..j`. Equality of the final bound
/// with `beta` holds exactly for Blaschke products of degree `k + 1`
/// (the chain covers the first `k` points; the final point only ever
/// evaluates the last stage, so the equality case is reachable).
pub fn lower_bound_ladder(
    chain: &DeltaChain,
    bchain: &BetaChain,
    w_last: &DiskPoint,
) -> Result<EstimateLadder> {
    ladder_generic(chain, bchain, w_last, true)
}

/// The weaker `(1-|v|)/(1+|v|)` ladder, termwise below
/// [`lower_bound_ladder`]; at all-zero points it only consumes the stage
/// values at the origin.
pub fn lower_bound_simplified(
    chain: &DeltaChain,
    bchain: &BetaChain,
    w_last: &DiskPoint,
) -> Result<EstimateLadder> {
    ladder_generic(chain, bchain, w_last, false)
}

/// Truncated series mode of the simplified ladder at all-zero points:
/// keeps extending the chain until a term drops below `min_term` or the
/// stage budget is exhausted. For a Blaschke product the terms vanish
/// exactly once the stages run out of degree, so the series is finite;
/// for black boxes each stage costs conditioning, and the series stops
/// early (with a still-valid partial sum) once stage construction
/// reports the noise has taken over.
pub fn lower_bound_series(f: &SelfMap, cap: usize, min_term: f64) -> Result<EstimateLadder> {
    let mut terms = Vec::new();
    let mut partial = 0.0;
    let mut product = 1.0;
    let mut stage = f.clone();
    let origin = DiskPoint::origin();
    for j in 0..=cap {
        let v = stage.eval(Complex64::new(0.0, 0.0))?;
        if v.norm() >= 1.0 - 1e-12 {
            // unimodular-constant stage: every further term is zero
            break;
        }
        let term = product * (1.0 - v.norm()) / (1.0 + v.norm());
        partial += term;
        terms.push(partial);
        if term < min_term {
            break;
        }
        product *= (1.0 - v.norm()) / (1.0 + v.norm());
        if stage.blaschke_degree() == Some(1) && j < cap {
            // the next stage would be a unimodular constant
            break;
        }
        if j < cap {
            match delta_stage(&stage, &origin) {
                Ok((next, _)) => stage = next,
                // every partial sum is a valid bound; stop here rather
                // than push the chain past its conditioning budget
                Err(Error::NotASelfMap { .. }) => break,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(EstimateLadder { final_bound: partial, terms })
}

fn interior_fixed_point_check(f: &SelfMap, z0: &DiskPoint) -> Result<()> {
    let fz0 = f.eval(z0.value())?;
    let miss = (fz0 - z0.value()).norm();
    if miss > 1e-10 {
        return Err(Error::FixedPointMismatch { distance: miss });
    }
    Ok(())
}

/// Cowen–Pommerenke estimate for a map with an interior fixed point
/// `z0` and boundary fixed points `sigma_j` with dilations `beta_j`:
///
/// `sum 1/(beta_j - 1) <= (1 - |f'(z0)|^2)/|1 - f'(z0)|^2`,
///
/// with equality exactly for Blaschke products of degree `n + 1`.
pub fn cowen_pommerenke(
    f: &SelfMap,
    z0: &DiskPoint,
    data: &[(BoundaryPoint, f64)],
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if f.is_automorphism() == Some(true) {
        return Err(Error::AutomorphismInput);
    }
    if data.is_empty() {
        return Err(Error::InvalidParameter { what: "need at least one boundary fixed point" });
    }
    interior_fixed_point_check(f, z0)?;
    let mut lhs = 0.0;
    for (j, (sigma, beta)) in data.iter().enumerate() {
        if !beta.is_finite() {
            return Err(Error::InfiniteBeta);
        }
        let fs = f.eval(sigma.value())?;
        if (fs - sigma.value()).norm() > 1e-8 {
            return Err(Error::FixedPointMismatch { distance: (fs - sigma.value()).norm() });
        }
        // beta > 1 is forced at a boundary fixed point of a map with an
        // interior fixed point; anything else is inconsistent input
        if *beta <= 1.0 + 1e-12 {
            return Err(Error::NonPositiveDenominator { index: j, value: beta - 1.0 });
        }
        lhs += 1.0 / (beta - 1.0);
    }
    let fp = f.derivative(z0.value())?;
    let den = (ONE - fp).norm_sqr();
    if den < 1e-24 {
        return Err(Error::AutomorphismDegeneracy { denominator: den });
    }
    let rhs = (1.0 - fp.norm_sqr()) / den;
    let mut inputs = InputEcho::for_map(f);
    inputs.z = Some(z0.value());
    inputs.points = data.iter().map(|(s, _)| s.value()).collect();
    Ok(VerificationReport::from_sides(
        "cowen-pommerenke",
        lhs,
        rhs,
        *tol,
        f.blaschke_degree().map(|d| d == data.len() + 1),
        inputs,
    ))
}

/// Cowen–Pommerenke with a multiple interior fixed point: `f(z0) = z0`,
/// `f'(z0) = ... = f^(k-1)(z0) = 0`, and boundary points satisfying the
/// k-fold difference-quotient condition (see
/// [`crate::boundary::fixed_point_condition`]). Then
///
/// `sum_j 1/((1 + 2 Re[(f(s_j)-s_j) conj(z0) / |f(s_j)-z0|^2]) beta_j - k)
///     <= (1-|c|^2)/|1-c|^2`,  `c = f^(k)(z0)/k! (1-|z0|^2)^(k-1)`,
///
/// with equality exactly for Blaschke products of degree `n + k`.
pub fn cowen_pommerenke_multiple(
    f: &SelfMap,
    z0: &DiskPoint,
    k: usize,
    data: &[(BoundaryPoint, f64)],
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidParameter { what: "k must be at least 1" });
    }
    if data.is_empty() {
        return Err(Error::InvalidParameter { what: "need at least one boundary point" });
    }
    if let Some(d) = f.blaschke_degree() {
        if d <= k {
            return Err(Error::DegreeExhausted { degree: d, requested: k });
        }
    }
    interior_fixed_point_check(f, z0)?;
    // vanishing derivatives up to order k-1, by Taylor extraction
    let t = f.taylor_at(z0.value(), k)?;
    for j in 1..k {
        let m = t.derivative(j)?.norm();
        if m > 1e-8 {
            return Err(Error::VanishingOrder { order: j, magnitude: m });
        }
    }
    let z0v = z0.value();
    let mut lhs = 0.0;
    for (j, (sigma, beta)) in data.iter().enumerate() {
        if !beta.is_finite() {
            return Err(Error::InfiniteBeta);
        }
        let fs = f.eval(sigma.value())?;
        let want = crate::boundary::fixed_point_condition(z0, k as u32, sigma);
        if (fs - want.value()).norm() > 1e-8 {
            return Err(Error::FixedPointMismatch { distance: (fs - want.value()).norm() });
        }
        let correction = 1.0 + 2.0 * ((fs - sigma.value()) * z0v.conj()).re / (fs - z0v).norm_sqr();
        let den = correction * beta - k as f64;
        if den <= 0.0 {
            return Err(Error::NonPositiveDenominator { index: j, value: den });
        }
        lhs += 1.0 / den;
    }
    let mut factorial = 1.0;
    for j in 1..=k {
        factorial *= j as f64;
    }
    let c = t.derivative(k)? / factorial * (1.0 - z0v.norm_sqr()).powi(k as i32 - 1);
    let den = (ONE - c).norm_sqr();
    if den < 1e-24 {
        return Err(Error::AutomorphismDegeneracy { denominator: den });
    }
    let rhs = (1.0 - c.norm_sqr()) / den;
    let mut inputs = InputEcho::for_map(f);
    inputs.z = Some(z0v);
    inputs.k = Some(k);
    inputs.points = data.iter().map(|(s, _)| s.value()).collect();
    Ok(VerificationReport::from_sides(
        "cp-multiple",
        lhs,
        rhs,
        *tol,
        f.blaschke_degree().map(|d| d == data.len() + k),
        inputs,
    ))
}

/// Julia inequality for `Delta_0 f` when `f(0) = 0`:
/// `|f(sigma)/sigma - f(z)/z|^2 / (1 - |f(z)/z|^2) <= (beta - 1) ...`,
/// using `f'(0)` at `z = 0`. When `sigma` is also fixed, the
/// fixed-point form `|1 - f'(0)|^2/(1 - |f'(0)|^2) <= beta - 1` is folded
/// into the same report. Equality cases are degree-2 products.
pub fn check_origin_julia(
    f: &SelfMap,
    dil: &BoundaryDilation,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if f.is_automorphism() == Some(true) {
        return Err(Error::AutomorphismInput);
    }
    let f0 = f.eval(Complex64::new(0.0, 0.0))?;
    if f0.norm() > 1e-10 {
        return Err(Error::FixedPointMismatch { distance: f0.norm() });
    }
    let tau = dil.tau_value()?;
    let s = dil.sigma.value();
    let boundary_q = tau * s.conj();
    let q = if z.value().norm() > 1e-15 {
        f.eval(z.value())? / z.value()
    } else {
        f.derivative(z.value())?
    };
    if q.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: q.norm() });
    }
    let lhs = (boundary_q - q).norm_sqr() / (1.0 - q.norm_sqr());
    let rhs = (dil.beta - 1.0) * horocycle_functional_value(s, z.value());
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(s);
    inputs.z = Some(z.value());
    let mut report = VerificationReport::from_sides(
        "origin-julia",
        lhs,
        rhs,
        tol.widened(dil.confidence),
        f.blaschke_degree().map(|d| d == 2),
        inputs,
    );
    if (tau - s).norm() < 1e-8 {
        // boundary fixed point: the f'(0) form must hold as well
        let fp = f.derivative(Complex64::new(0.0, 0.0))?;
        let lhs3 = (ONE - fp).norm_sqr() / (1.0 - fp.norm_sqr());
        let rhs3 = dil.beta - 1.0;
        let ok = rhs3 - lhs3 >= -tol.widened(dil.confidence).check;
        report.holds = report.holds && ok;
        report = report.with_note(format!("fixed-point form: lhs {lhs3} rhs {rhs3}"));
    }
    Ok(report)
}

/// The two-step origin chain (`k = 2`, both points 0) for `f(0) = 0`:
/// Julia's inequality for `Delta_{0,0} f`, whose dilation is
/// `(1-|f'(0)|^2)/|f(sigma)/sigma - f'(0)|^2 (beta - 1) - 1`. Equality
/// cases are degree-3 products.
pub fn check_origin_julia_two_step(
    f: &SelfMap,
    dil: &BoundaryDilation,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if let Some(d) = f.blaschke_degree() {
        if d <= 2 {
            return Err(Error::DegreeExhausted { degree: d, requested: 2 });
        }
    }
    let f0 = f.eval(Complex64::new(0.0, 0.0))?;
    if f0.norm() > 1e-10 {
        return Err(Error::FixedPointMismatch { distance: f0.norm() });
    }
    let tau = dil.tau_value()?;
    let s = dil.sigma.value();
    let fp0 = f.derivative(Complex64::new(0.0, 0.0))?;
    if fp0.norm() >= 1.0 - 1e-12 {
        return Err(Error::AutomorphismDegeneracy { denominator: 1.0 - fp0.norm_sqr() });
    }
    // boundary value of the second stage
    let bq = s.conj() * (tau * s.conj() - fp0) / (ONE - fp0.conj() * tau * s.conj());
    // interior value of the second stage
    let q = if z.value().norm() > 1e-15 {
        let f_over_z = f.eval(z.value())? / z.value();
        ((f_over_z - fp0) / z.value()) / (ONE - fp0.conj() * f_over_z)
    } else {
        let t = f.taylor_at(Complex64::new(0.0, 0.0), 2)?;
        t.derivative(2)? / (2.0 * (1.0 - fp0.norm_sqr()))
    };
    if q.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: q.norm() });
    }
    let lhs = (bq - q).norm_sqr() / (1.0 - q.norm_sqr());
    let dilation2 =
        (1.0 - fp0.norm_sqr()) / (tau * s.conj() - fp0).norm_sqr() * (dil.beta - 1.0) - 1.0;
    let rhs = dilation2 * horocycle_functional_value(s, z.value());
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(s);
    inputs.z = Some(z.value());
    Ok(VerificationReport::from_sides(
        "origin-julia-two-step",
        lhs,
        rhs,
        tol.widened(dil.confidence),
        f.blaschke_degree().map(|d| d == 3),
        inputs,
    ))
}

/// Julia inequality for the k-fold origin quotient of a map vanishing to
/// order `k` at 0:
/// `|f(sigma)/sigma^k - f(z)/z^k|^2/(1-|f(z)/z^k|^2) <= (beta - k) ...`,
/// using `f^(k)(0)/k!` at `z = 0`. Equality cases are degree `k+1`
/// products.
pub fn check_origin_julia_order_k(
    f: &SelfMap,
    k: usize,
    dil: &BoundaryDilation,
    z: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidParameter { what: "k must be at least 1" });
    }
    if let Some(d) = f.blaschke_degree() {
        if d <= k {
            return Err(Error::DegreeExhausted { degree: d, requested: k });
        }
    }
    let t = f.taylor_at(Complex64::new(0.0, 0.0), k)?;
    for j in 0..k {
        let m = t.derivative(j)?.norm();
        if m > 1e-8 {
            return Err(Error::VanishingOrder { order: j, magnitude: m });
        }
    }
    let tau = dil.tau_value()?;
    let s = dil.sigma.value();
    let boundary_q = tau * s.conj().powu(k as u32);
    let q = if z.value().norm() > 1e-15 {
        f.eval(z.value())? / z.value().powu(k as u32)
    } else {
        let mut factorial = 1.0;
        for j in 1..=k {
            factorial *= j as f64;
        }
        t.derivative(k)? / factorial
    };
    if q.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: q.norm() });
    }
    let lhs = (boundary_q - q).norm_sqr() / (1.0 - q.norm_sqr());
    let rhs = (dil.beta - k as f64) * horocycle_functional_value(s, z.value());
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(s);
    inputs.z = Some(z.value());
    inputs.k = Some(k);
    Ok(VerificationReport::from_sides(
        "origin-julia-order-k",
        lhs,
        rhs,
        tol.widened(dil.confidence),
        f.blaschke_degree().map(|d| d == k + 1),
        inputs,
    ))
}

/// Boundary regularity of the difference quotient: both radial limits
///
/// `lim (f*(sigma,w) - f*(r sigma, w))/(sigma - r sigma)` and
/// `lim d/dz f*(r sigma, w)`
///
/// must equal `f*(sigma,w) conj(sigma) beta*`. The report's `lhs` is the
/// worse of the two deviations and `rhs` the allowed tolerance from the
/// extrapolation confidence.
pub fn check_two_point_jwc(
    f: &SelfMap,
    dil: &BoundaryDilation,
    w: &DiskPoint,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    if f.is_automorphism() == Some(true) {
        return Err(Error::AutomorphismInput);
    }
    let tau = dil.tau_value()?;
    let s = dil.sigma.value();
    let fw = interior_value(f, w.value())?;
    let fstar_sw = gamma_raw(fw, tau) / gamma_raw(w.value(), s);
    let bst = beta_star(f, &dil.sigma, &BoundaryPoint::new(tau)?, dil.beta, w)?;
    let target = fstar_sw * s.conj() * bst;

    let (stage, _) = delta_stage(f, w)?;
    let hi = if f.is_exact() { 26 } else { 18 };
    let mut dq = Vec::new();
    let mut dv = Vec::new();
    for m in 6..=hi {
        let one_minus_r = 2.0_f64.powi(-m);
        let zr = s * (1.0 - one_minus_r);
        let sv = stage.eval(zr)?;
        dq.push((fstar_sw - sv) / (s - zr));
        dv.push(stage.derivative(zr)?);
    }
    let (dq_lim, dq_conf) = richardson_limit(&dq)?;
    let (dv_lim, dv_conf) = richardson_limit(&dv)?;
    let spread = dq_conf.max(dv_conf);
    if spread > 0.05 * target.norm().max(1.0) {
        return Err(Error::InconclusiveLimit { spread });
    }
    let lhs = (dq_lim - target).norm().max((dv_lim - target).norm());
    let rhs = 100.0 * (spread + dil.confidence) + tol.check;
    let mut inputs = InputEcho::for_map(f);
    inputs.sigma = Some(s);
    inputs.w = Some(w.value());
    let mut report = VerificationReport::from_sides("two-point-jwc", lhs, rhs, *tol, None, inputs);
    report.equality = report.holds;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke::BlaschkeProduct;
    use crate::boundary::{beta_chain, beta_exact, boundary_dilation};
    use crate::sample::SplitMix64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(c(re, im)).unwrap()
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn random_product(rng: &mut SplitMix64, degree: usize) -> BlaschkeProduct {
        let zeros: Vec<Complex64> = (0..degree).map(|_| rng.in_disk(0.85)).collect();
        BlaschkeProduct::new(rng.next_f64() * 6.28, zeros).unwrap()
    }

    #[test]
    fn julia_automorphism_equality() {
        let g = BlaschkeProduct::gamma_map(c(0.5, 0.0)).unwrap();
        let dil = beta_exact(&g, &BoundaryPoint::one());
        assert!((dil.beta - 3.0).abs() < 1e-13);
        let f = SelfMap::from_blaschke(g);
        let mut rng = SplitMix64::new(1);
        for _ in 0..20 {
            let z = DiskPoint::new(rng.in_disk(0.9)).unwrap();
            let r = check_julia(&f, &dil, &z, &tol()).unwrap();
            assert!(r.holds && r.equality && r.equality_expected == Some(true));
            assert!(r.gap.abs() < 1e-10);
        }
    }

    #[test]
    fn julia_square_strict() {
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let r = check_julia(&f, &dil, &DiskPoint::origin(), &tol()).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-14);
        assert!((r.rhs - 2.0).abs() < 1e-14);
        assert!(r.holds && !r.equality && r.equality_expected == Some(false));

        // radial approach: the gap shrinks like (1-r)^3 but stays
        // positive; the identity case is never reached
        let mut prev_gap = f64::INFINITY;
        for m in 3..12 {
            let z = DiskPoint::new(c(1.0 - 2.0_f64.powi(-m), 0.0)).unwrap();
            let r = check_julia(&f, &dil, &z, &tol()).unwrap();
            assert!(r.holds);
            assert!(r.gap > 0.0 && r.gap < prev_gap);
            if m <= 6 {
                assert!(!r.equality, "gap {} still macroscopic", r.gap);
            }
            prev_gap = r.gap;
        }
    }

    #[test]
    fn horocycle_image_cases() {
        // rotation: image functional equals R on the boundary circle
        let rot = BlaschkeProduct::rotation(0.7);
        let dil = beta_exact(&rot, &BoundaryPoint::one());
        let f = SelfMap::from_blaschke(rot);
        let r = check_horocycle_image(&f, &dil, 0.8, 500, &tol()).unwrap();
        assert!(r.holds && r.equality && r.equality_expected == Some(true));

        // z^2 with R = 1: strictly inside E(1, 2)
        let sq = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let dil = beta_exact(sq.blaschke().unwrap(), &BoundaryPoint::one());
        let r = check_horocycle_image(&sq, &dil, 1.0, 1000, &tol()).unwrap();
        assert!(r.holds && r.equality_expected == Some(false));

        // automorphism: boundary goes to boundary, gap 0
        let g = BlaschkeProduct::gamma_map(c(0.5, 0.0)).unwrap();
        let dil = beta_exact(&g, &BoundaryPoint::one());
        let f = SelfMap::from_blaschke(g);
        for radius in [0.5, 1.0, 2.0] {
            let r = check_horocycle_image(&f, &dil, radius, 400, &tol()).unwrap();
            assert!(r.holds && r.equality);
        }
    }

    #[test]
    fn two_point_equality_for_degree_two() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..20 {
            let b = random_product(&mut rng, 2);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let dil = beta_exact(&b, &sigma);
            let f = SelfMap::from_blaschke(b);
            let z = DiskPoint::new(rng.in_disk(0.85)).unwrap();
            let w = DiskPoint::new(rng.in_disk(0.85)).unwrap();
            let r = check_two_point_julia(&f, &dil, &z, &w, &tol()).unwrap();
            assert!(r.holds, "gap {}", r.gap);
            assert!(r.equality && r.equality_expected == Some(true), "gap {}", r.gap);
        }
    }

    #[test]
    fn two_point_strict_for_cube() {
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(3));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let mut rng = SplitMix64::new(5);
        for _ in 0..20 {
            let z = DiskPoint::new(rng.in_disk(0.8)).unwrap();
            let w = DiskPoint::new(rng.in_disk(0.8)).unwrap();
            let r = check_two_point_julia(&f, &dil, &z, &w, &tol()).unwrap();
            assert!(r.holds && !r.equality && r.equality_expected == Some(false));
        }
    }

    #[test]
    fn two_point_with_zero_base_reduces_to_origin_julia() {
        // w = 0, f = z^2, sigma = 1: both reduce to Julia for Delta_0 f = z
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let z = dp(0.3, -0.2);
        let two = check_two_point_julia(&f, &dil, &z, &DiskPoint::origin(), &tol()).unwrap();
        let cor = check_origin_julia(&f, &dil, &z, &tol()).unwrap();
        assert!((two.lhs - cor.lhs).abs() < 1e-12);
        assert!((two.rhs - cor.rhs).abs() < 1e-12);
        assert!(two.equality && cor.equality);
    }

    #[test]
    fn multipoint_reduces_to_two_point_at_k1() {
        let mut rng = SplitMix64::new(7);
        let b = random_product(&mut rng, 3);
        let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
        let dil = beta_exact(&b, &sigma);
        let f = SelfMap::from_blaschke(b);
        let z = DiskPoint::new(rng.in_disk(0.8)).unwrap();
        let w = DiskPoint::new(rng.in_disk(0.8)).unwrap();
        let two = check_two_point_julia(&f, &dil, &z, &w, &tol()).unwrap();
        let chain = delta_chain(&f, &[w]).unwrap();
        let bc = beta_chain(&chain, &sigma, Some(&dil)).unwrap();
        let multi = check_multipoint_julia(&chain, &bc, &z, &tol()).unwrap();
        assert_eq!(two.lhs.to_bits(), multi.lhs.to_bits(), "identical code path");
        assert_eq!(two.rhs.to_bits(), multi.rhs.to_bits());
    }

    #[test]
    fn multipoint_equality_classification() {
        let mut rng = SplitMix64::new(9);
        for k in 1..=3usize {
            // degree k+1: equality everywhere
            let b = random_product(&mut rng, k + 1);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let f = SelfMap::from_blaschke(b);
            for _ in 0..10 {
                let pts: Vec<DiskPoint> =
                    (0..k).map(|_| DiskPoint::new(rng.in_disk(0.8)).unwrap()).collect();
                let chain = delta_chain(&f, &pts).unwrap();
                let bc = beta_chain(&chain, &sigma, None).unwrap();
                let z = DiskPoint::new(rng.in_disk(0.85)).unwrap();
                let r = check_multipoint_julia(&chain, &bc, &z, &tol()).unwrap();
                assert!(r.holds, "gap {}", r.gap);
                assert!(r.equality, "degree k+1 should be the equality case, gap {}", r.gap);
                assert_eq!(r.equality_expected, Some(true));
            }
            // degree k+2: strict at generic points
            let b = random_product(&mut rng, k + 2);
            let f = SelfMap::from_blaschke(b);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            for _ in 0..10 {
                let pts: Vec<DiskPoint> =
                    (0..k).map(|_| DiskPoint::new(rng.in_disk(0.8)).unwrap()).collect();
                let chain = delta_chain(&f, &pts).unwrap();
                let bc = beta_chain(&chain, &sigma, None).unwrap();
                let z = DiskPoint::new(rng.in_disk(0.85)).unwrap();
                let r = check_multipoint_julia(&chain, &bc, &z, &tol()).unwrap();
                assert!(r.holds && r.equality_expected == Some(false));
                assert!(!r.equality, "degree k+2 generically strict, gap {}", r.gap);
            }
        }
    }

    #[test]
    fn mercer_contains_and_matches_disk_image() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..100 {
            let b = random_product(&mut rng, 3);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let dil = beta_exact(&b, &sigma);
            let f = SelfMap::from_blaschke(b);
            let w = DiskPoint::new(rng.in_disk(0.7)).unwrap();
            let z = DiskPoint::new(rng.in_disk(0.7)).unwrap();
            let m = mercer_disk(&f, &dil, &w, &z, &tol()).unwrap();
            assert!(m.contains, "containment is the content of the lemma");
            let oracle = two_point_julia_disk(&f, &dil, &w, &z).unwrap();
            assert!((m.center - oracle.center).norm() < 1e-8, "centers disagree");
            assert!((m.radius - oracle.radius).abs() < 1e-8, "radii disagree");
        }
    }

    #[test]
    fn mercer_w_zero_fixed_origin_reduction() {
        // w = 0 and f(0) = 0: phi_{f(w)} = -id, the disk is the mirrored
        // horocycle disk of the origin-Julia form
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let z = dp(0.4, 0.1);
        let m = mercer_disk(&f, &dil, &DiskPoint::origin(), &z, &tol()).unwrap();
        let oracle = two_point_julia_disk(&f, &dil, &DiskPoint::origin(), &z).unwrap();
        assert!((m.center - oracle.center).norm() < 1e-12);
        assert!((m.radius - oracle.radius).abs() < 1e-12);
        assert!(m.contains);
    }

    #[test]
    fn ladder_cube_examples() {
        // f = z^3, sigma = 1, all points 0: partial sums 1, 2, 3 and
        // final equals beta exactly (degree = k+1)
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(3));
        let sigma = BoundaryPoint::one();
        let chain = delta_chain(&f, &[DiskPoint::origin(), DiskPoint::origin()]).unwrap();
        let bc = beta_chain(&chain, &sigma, None).unwrap();
        let ladder = lower_bound_ladder(&chain, &bc, &DiskPoint::origin()).unwrap();
        assert!((ladder.terms[0] - 1.0).abs() < 1e-12);
        assert!((ladder.terms[1] - 2.0).abs() < 1e-12);
        assert!((ladder.terms[2] - 3.0).abs() < 1e-12);
        assert!((ladder.final_bound - bc.betas[0]).abs() < 1e-10);
    }

    #[test]
    fn ladder_monotone_and_bounded() {
        let mut rng = SplitMix64::new(13);
        for _ in 0..40 {
            let d = 3 + (rng.next_u64() % 4) as usize;
            let b = random_product(&mut rng, d);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let dil = beta_exact(&b, &sigma);
            let f = SelfMap::from_blaschke(b);
            let k = 1 + (rng.next_u64() as usize % (d - 2).max(1)).min(d - 2);
            let pts: Vec<DiskPoint> =
                (0..k).map(|_| DiskPoint::new(rng.in_disk(0.8)).unwrap()).collect();
            let w_last = DiskPoint::new(rng.in_disk(0.8)).unwrap();
            let chain = delta_chain(&f, &pts).unwrap();
            let bc = beta_chain(&chain, &sigma, Some(&dil)).unwrap();
            let sharp = lower_bound_ladder(&chain, &bc, &w_last).unwrap();
            let weak = lower_bound_simplified(&chain, &bc, &w_last).unwrap();
            let mut prev = 0.0;
            for (i, t) in sharp.terms.iter().enumerate() {
                assert!(*t >= prev - 1e-12, "partial sums nondecreasing");
                assert!(weak.terms[i] <= *t + 1e-12, "simplified is termwise below sharp");
                prev = *t;
            }
            assert!(sharp.final_bound <= dil.beta + 1e-9 * dil.beta.max(1.0));
        }
    }

    #[test]
    fn simplified_k0_and_k1_forms() {
        // k = 0 at w = 0 is (1-|f(0)|)/(1+|f(0)|)
        let mut rng = SplitMix64::new(15);
        let b = random_product(&mut rng, 3);
        let f0 = b.eval(c(0.0, 0.0)).unwrap().norm();
        let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
        let f = SelfMap::from_blaschke(b);
        let series = lower_bound_series(&f, 0, 1e-12).unwrap();
        assert!((series.terms[0] - (1.0 - f0) / (1.0 + f0)).abs() < 1e-13);

        // k = 1 at w = 0 reproduces the 2/(1+|f^h(0)|) improvement
        let chain = delta_chain(&f, &[DiskPoint::origin()]).unwrap();
        let bc = beta_chain(&chain, &sigma, None).unwrap();
        let ladder = lower_bound_simplified(&chain, &bc, &DiskPoint::origin()).unwrap();
        let fh0 =
            crate::selfmap::hyperbolic_derivative(&f, &DiskPoint::origin()).unwrap().norm();
        let expect = (1.0 - f0) / (1.0 + f0) * (1.0 + (1.0 - fh0) / (1.0 + fh0));
        assert!((ladder.terms[1] - expect).abs() < 1e-12);
    }

    #[test]
    fn simplified_square_equality() {
        // f = z^2, k = 1 at 0: bound = 1 + 1 = 2 = beta(1)
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let sigma = BoundaryPoint::one();
        let chain = delta_chain(&f, &[DiskPoint::origin()]).unwrap();
        let bc = beta_chain(&chain, &sigma, None).unwrap();
        let ladder = lower_bound_simplified(&chain, &bc, &DiskPoint::origin()).unwrap();
        assert!((ladder.final_bound - 2.0).abs() < 1e-13);
    }

    #[test]
    fn series_truncates() {
        // black-box non-product: series must terminate by the term floor
        let f = SelfMap::black_box(|z| (z * z + z * z * z) / 2.0).unwrap();
        let series = lower_bound_series(&f, 64, 1e-12).unwrap();
        assert!(series.terms.len() <= 65);
        let dil = boundary_dilation(
            &SelfMap::black_box(|z| (z * z + z * z * z) / 2.0).unwrap(),
            &BoundaryPoint::one(),
        )
        .unwrap();
        assert!(series.final_bound <= dil.beta + 1e-6);
    }

    #[test]
    fn cowen_pommerenke_worked_examples() {
        // f = z(z+1/2)/(1+z/2): sigma = 1, beta = 4/3, sum = 3 = rhs
        let b = BlaschkeProduct::new(0.0, alloc::vec![c(0.0, 0.0), c(-0.5, 0.0)]).unwrap();
        let dil = beta_exact(&b, &BoundaryPoint::one());
        let f = SelfMap::from_blaschke(b);
        let r = cowen_pommerenke(
            &f,
            &DiskPoint::origin(),
            &[(BoundaryPoint::one(), dil.beta)],
            &tol(),
        )
        .unwrap();
        assert!((r.lhs - 3.0).abs() < 1e-10);
        assert!((r.rhs - 3.0).abs() < 1e-10);
        assert!(r.holds && r.equality && r.equality_expected == Some(true));

        // f = z^2: z0 = 0, sigma = 1, beta = 2: 1 = 1
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let r = cowen_pommerenke(&f, &DiskPoint::origin(), &[(BoundaryPoint::one(), 2.0)], &tol())
            .unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-12 && (r.rhs - 1.0).abs() < 1e-12);
        assert!(r.equality);

        // f = z^3: boundary fixed points 1 and -1, beta = 3 each
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(3));
        let data =
            [(BoundaryPoint::one(), 3.0), (BoundaryPoint::new(c(-1.0, 0.0)).unwrap(), 3.0)];
        let r = cowen_pommerenke(&f, &DiskPoint::origin(), &data, &tol()).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-12 && (r.rhs - 1.0).abs() < 1e-12);
        assert!(r.equality && r.equality_expected == Some(true));
    }

    #[test]
    fn cowen_pommerenke_rejects_bad_inputs() {
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        // not a fixed point of the boundary
        assert!(matches!(
            cowen_pommerenke(
                &f,
                &DiskPoint::origin(),
                &[(BoundaryPoint::from_angle(1.0), 2.0)],
                &tol()
            ),
            Err(Error::FixedPointMismatch { .. })
        ));
        // beta <= 1 cannot happen at a genuine boundary fixed point
        assert!(matches!(
            cowen_pommerenke(&f, &DiskPoint::origin(), &[(BoundaryPoint::one(), 1.0)], &tol()),
            Err(Error::NonPositiveDenominator { .. })
        ));
        // interior point not fixed
        assert!(matches!(
            cowen_pommerenke(&f, &dp(0.3, 0.0), &[(BoundaryPoint::one(), 2.0)], &tol()),
            Err(Error::FixedPointMismatch { .. })
        ));
    }

    #[test]
    fn cp_multiple_origin_witness() {
        // f = z^2 (z+1/2)/(1+z/2): k = 2, sigma = 1, beta = 7/3, 3 = 3
        let b = BlaschkeProduct::new(0.0, alloc::vec![c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)])
            .unwrap();
        let dil = beta_exact(&b, &BoundaryPoint::one());
        assert!((dil.beta - 7.0 / 3.0).abs() < 1e-12);
        let f = SelfMap::from_blaschke(b);
        let r = cowen_pommerenke_multiple(
            &f,
            &DiskPoint::origin(),
            2,
            &[(BoundaryPoint::one(), dil.beta)],
            &tol(),
        )
        .unwrap();
        assert!((r.lhs - 3.0).abs() < 1e-9, "lhs {}", r.lhs);
        assert!((r.rhs - 3.0).abs() < 1e-9, "rhs {}", r.rhs);
        assert!(r.equality && r.equality_expected == Some(true));
    }

    #[test]
    fn cp_multiple_k1_reduces_to_plain() {
        let b = BlaschkeProduct::new(0.0, alloc::vec![c(0.0, 0.0), c(-0.5, 0.0)]).unwrap();
        let dil = beta_exact(&b, &BoundaryPoint::one());
        let f = SelfMap::from_blaschke(b);
        let plain = cowen_pommerenke(
            &f,
            &DiskPoint::origin(),
            &[(BoundaryPoint::one(), dil.beta)],
            &tol(),
        )
        .unwrap();
        let multi = cowen_pommerenke_multiple(
            &f,
            &DiskPoint::origin(),
            1,
            &[(BoundaryPoint::one(), dil.beta)],
            &tol(),
        )
        .unwrap();
        assert!((plain.lhs - multi.lhs).abs() < 1e-12);
        assert!((plain.rhs - multi.rhs).abs() < 1e-9);
    }

    #[test]
    fn origin_julia_examples() {
        // f = z^2: equality at degree 2, lhs = 1 = beta - 1
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let r = check_origin_julia(&f, &dil, &DiskPoint::origin(), &tol()).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-13 && (r.rhs - 1.0).abs() < 1e-13);
        assert!(r.holds && r.equality);

        // f = z^3: strict, lhs = 1 < 2
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(3));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let r = check_origin_julia(&f, &dil, &DiskPoint::origin(), &tol()).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-13 && (r.rhs - 2.0).abs() < 1e-13);
        assert!(r.holds && !r.equality);

        // f = z(z+1/2)/(1+z/2): equality with lhs = 1/3 = beta - 1
        let b = BlaschkeProduct::new(0.0, alloc::vec![c(0.0, 0.0), c(-0.5, 0.0)]).unwrap();
        let dil = beta_exact(&b, &BoundaryPoint::one());
        let f = SelfMap::from_blaschke(b);
        let r = check_origin_julia(&f, &dil, &DiskPoint::origin(), &tol()).unwrap();
        assert!((r.lhs - 1.0 / 3.0).abs() < 1e-13);
        assert!(r.equality);
    }

    #[test]
    fn origin_julia_two_step_cases() {
        // z^3: reduces to the order-2 form; equality at degree 3
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(3));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let mut rng = SplitMix64::new(17);
        for _ in 0..10 {
            let z = DiskPoint::new(rng.in_disk(0.8)).unwrap();
            let r2 = check_origin_julia_two_step(&f, &dil, &z, &tol()).unwrap();
            let rk = check_origin_julia_order_k(&f, 2, &dil, &z, &tol()).unwrap();
            assert!(r2.holds && r2.equality, "gap {}", r2.gap);
            assert!((r2.lhs - rk.lhs).abs() < 1e-10 && (r2.rhs - rk.rhs).abs() < 1e-10);
        }

        // generic degree-3 with a zero at the origin: equality
        for _ in 0..10 {
            let zeros = alloc::vec![c(0.0, 0.0), rng.in_disk(0.7), rng.in_disk(0.7)];
            let b = BlaschkeProduct::new(0.0, zeros).unwrap();
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let dil = beta_exact(&b, &sigma);
            let f = SelfMap::from_blaschke(b);
            let z = DiskPoint::new(rng.in_disk(0.8)).unwrap();
            let r = check_origin_julia_two_step(&f, &dil, &z, &tol()).unwrap();
            assert!(r.holds && r.equality, "gap {}", r.gap);
        }

        // non-product self-map: strict
        let f = SelfMap::black_box(|z| (z + z * z + z * z * z) / 3.0).unwrap();
        let dil = boundary_dilation(&f, &BoundaryPoint::one()).unwrap();
        let r = check_origin_julia_two_step(&f, &dil, &dp(0.2, 0.3), &tol()).unwrap();
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn origin_julia_order_k_examples() {
        // f = z^3, k = 2, z = 0: lhs = 1 = rhs = beta - 2
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(3));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let r = check_origin_julia_order_k(&f, 2, &dil, &DiskPoint::origin(), &tol()).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-12 && (r.rhs - 1.0).abs() < 1e-12);
        assert!(r.equality);

        // z^2 g with an extra automorphism factor: equality at degree 3
        let mut rng = SplitMix64::new(19);
        let b =
            BlaschkeProduct::new(0.0, alloc::vec![c(0.0, 0.0), c(0.0, 0.0), c(0.3, 0.0)]).unwrap();
        let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
        let dil = beta_exact(&b, &sigma);
        let f = SelfMap::from_blaschke(b);
        let z = DiskPoint::new(rng.in_disk(0.8)).unwrap();
        let r = check_origin_julia_order_k(&f, 2, &dil, &z, &tol()).unwrap();
        assert!(r.holds && r.equality, "gap {}", r.gap);

        // (z^3+z^4)/2 with k=3: strict
        let f = SelfMap::black_box(|z| (z * z * z + z * z * z * z) / 2.0).unwrap();
        let dil = boundary_dilation(&f, &BoundaryPoint::one()).unwrap();
        let r = check_origin_julia_order_k(&f, 3, &dil, &dp(0.25, -0.15), &tol()).unwrap();
        assert!(r.holds && !r.equality);

        // vanishing-order precondition enforced
        let g = SelfMap::black_box(|z| (z + z * z * z) / 2.0).unwrap();
        let dil_g = boundary_dilation(&g, &BoundaryPoint::one()).unwrap();
        assert!(matches!(
            check_origin_julia_order_k(&g, 2, &dil_g, &DiskPoint::origin(), &tol()),
            Err(Error::VanishingOrder { .. })
        ));
    }

    #[test]
    fn two_point_jwc_cases() {
        // f = z^2, w = 0: the quotient map is z, both limits are 1
        let f = SelfMap::from_blaschke(BlaschkeProduct::monomial(2));
        let dil = beta_exact(f.blaschke().unwrap(), &BoundaryPoint::one());
        let r = check_two_point_jwc(&f, &dil, &DiskPoint::origin(), &tol()).unwrap();
        assert!(r.holds, "deviation {} allowed {}", r.lhs, r.rhs);

        // random degree-3 products at random w
        let mut rng = SplitMix64::new(21);
        for _ in 0..10 {
            let b = random_product(&mut rng, 3);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let dil = beta_exact(&b, &sigma);
            let f = SelfMap::from_blaschke(b);
            let w = DiskPoint::new(rng.in_disk(0.7)).unwrap();
            let r = check_two_point_jwc(&f, &dil, &w, &tol()).unwrap();
            assert!(r.holds, "deviation {} allowed {}", r.lhs, r.rhs);
            assert!(r.lhs < 1e-5, "limits should agree tightly, got {}", r.lhs);
        }

        // automorphisms rejected
        let g = SelfMap::from_blaschke(BlaschkeProduct::gamma_map(c(0.4, 0.0)).unwrap());
        let dil = beta_exact(g.blaschke().unwrap(), &BoundaryPoint::one());
        assert!(matches!(
            check_two_point_jwc(&g, &dil, &DiskPoint::origin(), &tol()),
            Err(Error::AutomorphismInput)
        ));
    }

    #[test]
    fn soundness_sweep_over_random_inputs() {
        // every check holds on random admissible inputs
        let mut rng = SplitMix64::new(23);
        for i in 0..200usize {
            let d = 2 + (i % 5);
            let b = random_product(&mut rng, d);
            let sigma = BoundaryPoint::new(rng.on_circle()).unwrap();
            let dil = beta_exact(&b, &sigma);
            let f = SelfMap::from_blaschke(b);
            let z = DiskPoint::new(rng.in_disk(0.85)).unwrap();
            let w = DiskPoint::new(rng.in_disk(0.85)).unwrap();
            assert!(check_julia(&f, &dil, &z, &tol()).unwrap().holds);
            assert!(check_two_point_julia(&f, &dil, &z, &w, &tol()).unwrap().holds);
            assert!(mercer_report(&f, &dil, &w, &z, &tol()).unwrap().holds);
            let k = 1 + (i % (d - 1));
            let pts: Vec<DiskPoint> =
                (0..k).map(|_| DiskPoint::new(rng.in_disk(0.8)).unwrap()).collect();
            let chain = delta_chain(&f, &pts).unwrap();
            let bc = beta_chain(&chain, &sigma, Some(&dil)).unwrap();
            assert!(check_multipoint_julia(&chain, &bc, &z, &tol()).unwrap().holds);
            let ladder = lower_bound_ladder(&chain, &bc, &w).unwrap();
            assert!(ladder.final_bound <= dil.beta + 1e-9 * dil.beta.max(1.0));
        }
    }
}
