//! Finite Blaschke products in factored form, disk automorphisms,
//! rational self-maps, conjugation, and the Herglotz-sum construction.
//!
//! A product is stored as `(theta, zeros)` and only expanded to
//! polynomial numerator/denominator when an operation needs it: the
//! factored form is numerically stable and makes the degree exact.

use crate::disk::{gamma_raw, BoundaryPoint};
use crate::error::{Error, Result};
use crate::poly::{roots, Polynomial};
use crate::sample::{circle_grid, SplitMix64};
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Zeros this close to the boundary are rejected as ill-conditioned.
pub const ZERO_MARGIN: f64 = 1e-9;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `B(z) = e^{i theta} prod (z - a_j)/(1 - conj(a_j) z)` with every
/// `a_j` in the open disk. Degree = number of zeros with multiplicity;
/// degree 0 is a unimodular constant, degree 1 an automorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeProduct {
    theta: f64,
    zeros: Vec<Complex64>,
}

impl BlaschkeProduct {
    pub fn new(theta: f64, zeros: Vec<Complex64>) -> Result<Self> {
        for a in &zeros {
            let m = a.norm();
            if m > 1.0 - ZERO_MARGIN {
                return Err(Error::NotInDisk { modulus: m, margin: ZERO_MARGIN });
            }
        }
        let b = Self { theta, zeros };
        // boundary unimodularity sanity check; factored evaluation makes
        // this hold to rounding, so a failure means corrupted input
        for s in circle_grid(50) {
            let v = b.eval(s).expect("no poles on the closed disk");
            if (v.norm() - 1.0).abs() > 1e-10 {
                return Err(Error::Certification {
                    detail: "boundary modulus of Blaschke product",
                    value: v.norm(),
                });
            }
        }
        Ok(b)
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        Self { theta: 0.0, zeros: vec![Complex64::new(0.0, 0.0); k] }
    }

    /// The degree-0 product: the unimodular constant `e^{i theta}`.
    pub fn constant(theta: f64) -> Self {
        Self { theta, zeros: Vec::new() }
    }

    /// The rotation `z -> e^{i theta} z`, a degree-1 product.
    pub fn rotation(theta: f64) -> Self {
        Self { theta, zeros: vec![Complex64::new(0.0, 0.0)] }
    }

    /// `gamma_w` as a degree-1 product.
    pub fn gamma_map(w: Complex64) -> Result<Self> {
        Self::new(0.0, vec![w])
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn is_automorphism(&self) -> bool {
        self.degree() == 1
    }

    /// Factor-by-factor evaluation. Poles sit at `1/conj(a_j)`, outside
    /// the closed disk, so this can only fail far outside.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let mut out = Complex64::from_polar(1.0, self.theta);
        for &a in &self.zeros {
            let den = ONE - a.conj() * z;
            if den.norm() < 1e-300 {
                return Err(Error::Pole { denominator: den.norm() });
            }
            out *= (z - a) / den;
        }
        Ok(out)
    }

    /// Exact derivative by the product rule,
    /// `B' = sum_j f_j' prod_{i != j} f_i` with
    /// `f_j'(z) = (1 - |a_j|^2)/(1 - conj(a_j) z)^2`. O(d^2) but exact at
    /// the zeros, where the logarithmic-derivative form breaks down.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        let d = self.degree();
        if d == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let mut factors = Vec::with_capacity(d);
        for &a in &self.zeros {
            let den = ONE - a.conj() * z;
            if den.norm() < 1e-300 {
                return Err(Error::Pole { denominator: den.norm() });
            }
            factors.push(((z - a) / den, (1.0 - a.norm_sqr()) / (den * den)));
        }
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..d {
            let mut term = factors[j].1;
            for (i, f) in factors.iter().enumerate() {
                if i != j {
                    term *= f.0;
                }
            }
            sum += term;
        }
        Ok(Complex64::from_polar(1.0, self.theta) * sum)
    }

    /// `e^{i theta} prod (z - a_j)`.
    pub fn numerator(&self) -> Polynomial {
        Polynomial::from_roots(&self.zeros, Complex64::from_polar(1.0, self.theta))
    }

    /// `prod (1 - conj(a_j) z)`.
    pub fn denominator(&self) -> Polynomial {
        let mut p = Polynomial::one();
        for &a in &self.zeros {
            p = &p * &Polynomial::new(vec![ONE, -a.conj()]);
        }
        p
    }
}

/// A full automorphism `gamma(z) = e^{i theta} (z - a)/(1 - conj(a) z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Automorphism {
    pub theta: f64,
    pub a: Complex64,
}

impl Automorphism {
    pub fn new(theta: f64, a: Complex64) -> Result<Self> {
        if a.norm() > 1.0 - ZERO_MARGIN {
            return Err(Error::NotInDisk { modulus: a.norm(), margin: ZERO_MARGIN });
        }
        Ok(Self { theta, a })
    }

    pub fn identity() -> Self {
        Self { theta: 0.0, a: Complex64::new(0.0, 0.0) }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, self.theta) * gamma_raw(self.a, z)
    }

    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = ONE - self.a.conj() * z;
        Complex64::from_polar(1.0, self.theta) * (1.0 - self.a.norm_sqr()) / (den * den)
    }

    /// The inverse is again an automorphism: theta' = -theta,
    /// a' = -a e^{i theta}.
    pub fn inverse(&self) -> Automorphism {
        Automorphism { theta: -self.theta, a: -self.a * Complex64::from_polar(1.0, self.theta) }
    }

    /// Numerator/denominator as degree-1 polynomials.
    fn rational(&self) -> (Polynomial, Polynomial) {
        let e = Complex64::from_polar(1.0, self.theta);
        (
            Polynomial::new(vec![-self.a * e, e]),
            Polynomial::new(vec![ONE, -self.a.conj()]),
        )
    }
}

/// Blaschke form of `post . B . pre`. Composition with automorphisms
/// preserves the degree; the zeros of the result are recomputed by
/// root-finding on the transformed numerator and polished by the
/// finder's Newton stage.
pub fn blaschke_conjugate(
    b: &BlaschkeProduct,
    pre: &Automorphism,
    post: &Automorphism,
) -> Result<BlaschkeProduct> {
    let (n1, d1) = pre.rational();
    // B o pre, factor by factor: (n1 - a_j d1)/(d1 - conj(a_j) n1)
    let mut num = Polynomial::constant(Complex64::from_polar(1.0, b.theta()));
    let mut den = Polynomial::one();
    for &a in b.zeros() {
        num = &num * &(&n1 - &d1.scale(a));
        den = &den * &(&d1 - &n1.scale(a.conj()));
    }
    // post o (num/den)
    let e2 = Complex64::from_polar(1.0, post.theta);
    let final_num = (&num - &den.scale(post.a)).scale(e2);
    let final_den = &den - &num.scale(post.a.conj());

    let d = b.degree();
    if d == 0 {
        // constant input: value maps through post
        let v = post.eval(Complex64::from_polar(1.0, b.theta()));
        return BlaschkeProduct::new(v.arg(), Vec::new());
    }
    if final_num.degree() != Some(d) {
        return Err(Error::Certification {
            detail: "conjugate numerator degree",
            value: final_num.degree().map_or(0.0, |x| x as f64),
        });
    }
    let mut zs = roots(&final_num)?;
    // residual polish against the full rational form
    for z in zs.iter_mut() {
        for _ in 0..3 {
            let p = final_num.eval(*z);
            let dp = final_num.derivative().eval(*z);
            if dp.norm() < 1e-280 {
                break;
            }
            *z -= p / dp;
        }
        let resid = final_num.eval(*z).norm();
        if resid > 1e-11 * final_num.coeff_scale().max(1.0) {
            return Err(Error::RootFinding { residual: resid, iterations: 3 });
        }
    }
    // unimodular constant from a probe point away from the zeros
    let mut probe = Complex64::new(0.41, 0.23);
    let mut guard = 0;
    while zs.iter().any(|z| (z - probe).norm() < 1e-3) && guard < 16 {
        probe *= Complex64::from_polar(1.0, 0.7);
        guard += 1;
    }
    let want = final_num.eval(probe) / final_den.eval(probe);
    let mut plain = ONE;
    for &z in &zs {
        plain *= gamma_raw(z, probe);
    }
    let phase = want / plain;
    if (phase.norm() - 1.0).abs() > 1e-8 {
        return Err(Error::Certification { detail: "conjugate phase modulus", value: phase.norm() });
    }
    let result = BlaschkeProduct::new(phase.arg(), zs)?;
    // certify pointwise agreement with post . B . pre
    let mut rng = SplitMix64::new(0xC0DE);
    for _ in 0..8 {
        let z = rng.in_disk(0.95);
        let direct = post.eval(b.eval(pre.eval(z))?);
        let got = result.eval(z)?;
        if (direct - got).norm() > 1e-9 {
            return Err(Error::Certification {
                detail: "conjugate pointwise agreement",
                value: (direct - got).norm(),
            });
        }
    }
    Ok(result)
}

/// A quotient of polynomials with no common roots (within 1e-10) after
/// normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    num: Polynomial,
    den: Polynomial,
}

impl RationalMap {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter { what: "zero denominator" });
        }
        let mut map = Self { num, den };
        map.cancel_common_roots()?;
        Ok(map)
    }

    /// For internal constructions that are reduced by design (stage
    /// deflation, certified Herglotz output).
    pub(crate) fn new_reduced(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter { what: "zero denominator" });
        }
        Ok(Self { num, den })
    }

    fn cancel_common_roots(&mut self) -> Result<()> {
        let (Some(dn), Some(dd)) = (self.num.degree(), self.den.degree()) else {
            return Ok(());
        };
        if dn == 0 || dd == 0 {
            return Ok(());
        }
        let nroots = roots(&self.num)?;
        let droots = roots(&self.den)?;
        let mut keep_n = nroots.clone();
        let mut keep_d = droots.clone();
        let mut cancelled = false;
        for r in nroots {
            if let Some(pos) = keep_d.iter().position(|s| (s - r).norm() < 1e-10) {
                if let Some(np) = keep_n.iter().position(|s| (s - r).norm() < 1e-12) {
                    keep_d.remove(pos);
                    keep_n.remove(np);
                    cancelled = true;
                }
            }
        }
        if cancelled {
            let lead_n = self.num.coeff(self.num.degree().unwrap());
            let lead_d = self.den.coeff(self.den.degree().unwrap());
            self.num = Polynomial::from_roots(&keep_n, lead_n);
            self.den = Polynomial::from_roots(&keep_d, lead_d);
        }
        Ok(())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval(z);
        if d.norm() < 1e-300 {
            return Err(Error::Pole { denominator: d.norm() });
        }
        Ok(self.num.eval(z) / d)
    }

    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval(z);
        if d.norm() < 1e-300 {
            return Err(Error::Pole { denominator: d.norm() });
        }
        let n = self.num.eval(z);
        let dn = self.num.derivative().eval(z);
        let dd = self.den.derivative().eval(z);
        Ok((dn * d - n * dd) / (d * d))
    }
}

impl From<&BlaschkeProduct> for RationalMap {
    fn from(b: &BlaschkeProduct) -> Self {
        Self { num: b.numerator(), den: b.denominator() }
    }
}

/// Herglotz-sum construction: given distinct boundary points, positive
/// weights and a Blaschke product `B != 1`, builds
///
/// `h = (2B + (1-B) S) / (2 + (1-B) S)`,  `S(z) = sum a_j (s_j+z)/(s_j-z)`,
///
/// by polynomial arithmetic over the common denominator `prod (s_j - z)`.
/// The result is certified to be a Blaschke product of degree
/// `n + deg B`: unit modulus at 100 boundary samples and exactly `n + d`
/// zeros inside the disk.
pub fn herglotz_blaschke(
    sigmas: &[BoundaryPoint],
    weights: &[f64],
    b: &BlaschkeProduct,
) -> Result<RationalMap> {
    let n = sigmas.len();
    if n == 0 || weights.len() != n {
        return Err(Error::InvalidParameter { what: "need matching sigma/weight lists" });
    }
    if weights.iter().any(|&a| a <= 0.0) {
        return Err(Error::InvalidParameter { what: "weights must be positive" });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (sigmas[i].value() - sigmas[j].value()).norm() < 1e-8 {
                return Err(Error::InvalidParameter { what: "boundary points must be distinct" });
            }
        }
    }
    if b.degree() == 0 && (b.eval(Complex64::new(0.0, 0.0)).unwrap() - ONE).norm() < 1e-12 {
        return Err(Error::InvalidParameter { what: "B must not be the constant 1" });
    }

    // Q = prod (s_j - z), P = sum a_j (s_j + z) prod_{i!=j} (s_i - z)
    let mut q = Polynomial::one();
    for s in sigmas {
        q = &q * &Polynomial::new(vec![s.value(), -ONE]);
    }
    let mut p = Polynomial::zero();
    for (j, s) in sigmas.iter().enumerate() {
        let mut term = Polynomial::new(vec![s.value(), ONE]).scale(Complex64::new(weights[j], 0.0));
        for (i, t) in sigmas.iter().enumerate() {
            if i != j {
                term = &term * &Polynomial::new(vec![t.value(), -ONE]);
            }
        }
        p = &p + &term;
    }

    let nb = b.numerator();
    let db = b.denominator();
    let one_minus_b = &db - &nb;
    let two = Complex64::new(2.0, 0.0);
    let num = &(&nb * &q).scale(two) + &(&one_minus_b * &p);
    let den = &(&db * &q).scale(two) + &(&one_minus_b * &p);

    let target = n + b.degree();
    // the numerator carries all n+d zeros; the denominator may drop
    // degree (its top coefficients vanish when zeros sit at the origin)
    if num.degree() != Some(target) || den.degree().map_or(true, |d| d > target) {
        return Err(Error::Certification {
            detail: "Herglotz construction degree",
            value: num.degree().map_or(0.0, |x| x as f64),
        });
    }
    let h = RationalMap::new_reduced(num, den)?;

    // certificates
    let mut worst = 0.0f64;
    for s in circle_grid(100) {
        let v = h.eval(s)?;
        worst = worst.max((v.norm() - 1.0).abs());
    }
    if worst > 1e-8 {
        return Err(Error::Certification { detail: "Herglotz boundary modulus", value: worst });
    }
    let zs = roots(h.num())?;
    let inside = zs.iter().filter(|z| z.norm() < 1.0).count();
    if inside != target {
        return Err(Error::Certification {
            detail: "Herglotz zero count inside the disk",
            value: inside as f64,
        });
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::SplitMix64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_basics() {
        let empty = BlaschkeProduct::constant(0.0);
        assert_eq!(empty.eval(c(0.3, 0.1)).unwrap(), ONE);

        let sq = BlaschkeProduct::monomial(2);
        assert_eq!(sq.eval(c(0.5, 0.0)).unwrap(), c(0.25, 0.0));

        let b = BlaschkeProduct::new(0.0, vec![c(0.0, 0.0), c(-0.5, 0.0)]).unwrap();
        assert!((b.eval(c(1.0, 0.0)).unwrap() - ONE).norm() < 1e-14);
    }

    #[test]
    fn zero_margin_enforced() {
        assert!(BlaschkeProduct::new(0.0, vec![c(1.0 - 1e-10, 0.0)]).is_err());
        assert!(BlaschkeProduct::new(0.0, vec![c(1.0 - 1e-8, 0.0)]).is_ok());
    }

    #[test]
    fn derivative_examples() {
        let sq = BlaschkeProduct::monomial(2);
        assert!((sq.derivative(c(1.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-14);

        // gamma_w'(z) = (1-|w|^2)/(1-conj(w) z)^2 at w=0.5, z=1
        let g = BlaschkeProduct::gamma_map(c(0.5, 0.0)).unwrap();
        assert!((g.derivative(c(1.0, 0.0)).unwrap() - c(3.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let mut rng = SplitMix64::new(23);
        for _ in 0..30 {
            let d = 1 + (rng.next_u64() % 4) as usize;
            let zeros: Vec<Complex64> = (0..d).map(|_| rng.in_disk(0.85)).collect();
            let b = BlaschkeProduct::new(rng.next_f64() * 6.28, zeros).unwrap();
            let z = rng.in_disk(0.8);
            let h = 1e-6;
            let fd = (b.eval(z + c(h, 0.0)).unwrap() - b.eval(z - c(h, 0.0)).unwrap()) / (2.0 * h);
            assert!((b.derivative(z).unwrap() - fd).norm() < 1e-7);
        }
    }

    #[test]
    fn boundary_unimodular_and_max_principle() {
        let mut rng = SplitMix64::new(31);
        for _ in 0..100 {
            let d = 1 + (rng.next_u64() % 5) as usize;
            let zeros: Vec<Complex64> = (0..d).map(|_| rng.in_disk(0.9)).collect();
            let b = BlaschkeProduct::new(rng.next_f64() * 6.28, zeros).unwrap();
            let s = rng.on_circle();
            assert!((b.eval(s).unwrap().norm() - 1.0).abs() < 1e-10);
        }
        let b = BlaschkeProduct::new(0.4, vec![c(0.3, 0.2), c(-0.1, -0.6)]).unwrap();
        for z in crate::sample::disk_grid(1000, 0.9999) {
            assert!(b.eval(z).unwrap().norm() <= 1.0 + 1e-10);
        }
    }

    #[test]
    fn conjugate_identity_and_relocation() {
        let b = BlaschkeProduct::new(0.8, vec![c(0.2, 0.3), c(-0.4, 0.0)]).unwrap();
        let id = Automorphism::identity();
        let same = blaschke_conjugate(&b, &id, &id).unwrap();
        assert_eq!(same.degree(), 2);
        let mut rng = SplitMix64::new(2);
        for _ in 0..10 {
            let z = rng.in_disk(0.9);
            assert!((same.eval(z).unwrap() - b.eval(z).unwrap()).norm() < 1e-10);
        }

        // B = z pre-composed with gamma_{0.5} vanishes at 0.5
        let lin = BlaschkeProduct::monomial(1);
        let pre = Automorphism::new(0.0, c(0.5, 0.0)).unwrap();
        let moved = blaschke_conjugate(&lin, &pre, &id).unwrap();
        assert_eq!(moved.degree(), 1);
        assert!((moved.zeros()[0] - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn conjugate_preserves_degree_randomly() {
        let mut rng = SplitMix64::new(77);
        for _ in 0..100 {
            let d = 1 + (rng.next_u64() % 4) as usize;
            let zeros: Vec<Complex64> = (0..d).map(|_| rng.in_disk(0.8)).collect();
            let b = BlaschkeProduct::new(rng.next_f64() * 6.28, zeros).unwrap();
            let g1 = Automorphism::new(rng.next_f64() * 6.28, rng.in_disk(0.7)).unwrap();
            let g2 = Automorphism::new(rng.next_f64() * 6.28, rng.in_disk(0.7)).unwrap();
            let conj = blaschke_conjugate(&b, &g1, &g2).unwrap();
            assert_eq!(conj.degree(), d);
        }
    }

    #[test]
    fn conjugate_then_inverse_recovers() {
        let b = BlaschkeProduct::new(0.3, vec![c(0.25, -0.3), c(0.1, 0.55), c(-0.5, 0.0)]).unwrap();
        let g1 = Automorphism::new(0.9, c(0.3, 0.2)).unwrap();
        let g2 = Automorphism::new(-0.4, c(-0.2, 0.35)).unwrap();
        let conj = blaschke_conjugate(&b, &g1, &g2).unwrap();
        let back = blaschke_conjugate(&conj, &g1.inverse(), &g2.inverse()).unwrap();
        let mut rng = SplitMix64::new(4);
        for _ in 0..20 {
            let z = rng.in_disk(0.9);
            assert!((back.eval(z).unwrap() - b.eval(z).unwrap()).norm() < 1e-9);
        }
    }

    #[test]
    fn automorphism_inverse() {
        let g = Automorphism::new(1.1, c(0.3, -0.4)).unwrap();
        let gi = g.inverse();
        let mut rng = SplitMix64::new(6);
        for _ in 0..20 {
            let z = rng.in_disk(0.95);
            assert!((gi.eval(g.eval(z)) - z).norm() < 1e-13);
        }
    }

    #[test]
    fn herglotz_recovers_identity() {
        // n=1, sigma=1, a=1, B = -1 gives h(z) = z
        let b = BlaschkeProduct::constant(core::f64::consts::PI);
        let h = herglotz_blaschke(&[BoundaryPoint::one()], &[1.0], &b).unwrap();
        let mut rng = SplitMix64::new(8);
        for _ in 0..20 {
            let z = rng.in_disk(0.9);
            assert!((h.eval(z).unwrap() - z).norm() < 1e-12);
        }
    }

    #[test]
    fn herglotz_fixes_sigmas_and_degree() {
        let mut rng = SplitMix64::new(12);
        for _ in 0..20 {
            let n = 1 + (rng.next_u64() % 3) as usize;
            let mut sigmas = Vec::new();
            while sigmas.len() < n {
                let s = BoundaryPoint::new(rng.on_circle()).unwrap();
                if sigmas.iter().all(|t: &BoundaryPoint| (t.value() - s.value()).norm() > 0.2) {
                    sigmas.push(s);
                }
            }
            let weights: Vec<f64> = (0..n).map(|_| 0.2 + 1.8 * rng.next_f64()).collect();
            let d = (rng.next_u64() % 3) as usize;
            let zeros: Vec<Complex64> = (0..d).map(|_| rng.in_disk(0.8)).collect();
            let b = BlaschkeProduct::new(0.5 + rng.next_f64(), zeros).unwrap();
            let h = herglotz_blaschke(&sigmas, &weights, &b).unwrap();
            assert_eq!(h.degree(), n + d);
            for s in &sigmas {
                let v = h.eval(s.value()).unwrap();
                assert!((v - ONE).norm() < 1e-8, "h(sigma_j) should be 1, got {v}");
            }
        }
    }

    #[test]
    fn herglotz_positivity() {
        // Re (1+h)/(1-h) > 0 inside the disk
        let sigmas = [BoundaryPoint::one(), BoundaryPoint::from_angle(2.1)];
        let b = BlaschkeProduct::new(0.7, vec![c(0.3, 0.1)]).unwrap();
        let h = herglotz_blaschke(&sigmas, &[0.5, 1.5], &b).unwrap();
        for z in crate::sample::disk_grid(1000, 0.99) {
            let v = h.eval(z).unwrap();
            let herg = (ONE + v) / (ONE - v);
            assert!(herg.re >= -1e-9);
        }
    }

    #[test]
    fn herglotz_rejects_constant_one() {
        let b = BlaschkeProduct::constant(0.0);
        assert!(herglotz_blaschke(&[BoundaryPoint::one()], &[1.0], &b).is_err());
    }
}
