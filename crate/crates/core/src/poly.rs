//! Dense complex polynomials with just the operations the rest of the
//! crate needs: Horner evaluation, derivatives, ring arithmetic,
//! synthetic division by a known root, and an Aberth–Ehrlich root
//! finder with Newton polish.

use crate::error::{Error, Result};
use crate::sample::SplitMix64;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Mul, Sub};
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Trailing coefficients at or below this size (relative to the largest
/// coefficient, floored at 1) are trimmed away.
const TRIM_EPS: f64 = 1e-14;

/// Coefficients ascending by degree; the zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    /// `leading * prod (z - r_j)`.
    pub fn from_roots(roots: &[Complex64], leading: Complex64) -> Self {
        let mut p = Self::constant(leading);
        for &r in roots {
            p = &p * &Self::new(vec![-r, Complex64::new(1.0, 0.0)]);
        }
        p
    }

    fn trim(&mut self) {
        let scale = self.coeff_scale().max(1.0);
        while let Some(last) = self.coeffs.last() {
            if last.norm() <= TRIM_EPS * scale {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Largest coefficient modulus; the residual scale for root and
    /// deflation certificates.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * ((i + 1) as f64))
                .collect(),
        )
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Synthetic division by `(z - root)`: returns the quotient and the
    /// remainder `p(root)`. The remainder magnitude is the certification
    /// residual when the root is supposed to be exact.
    pub fn deflate(&self, root: Complex64) -> (Polynomial, Complex64) {
        if self.coeffs.is_empty() {
            return (Polynomial::zero(), Complex64::new(0.0, 0.0));
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Complex64::new(0.0, 0.0); n.saturating_sub(1)];
        let mut carry = Complex64::new(0.0, 0.0);
        for i in (0..n).rev() {
            let v = self.coeffs[i] + carry * root;
            if i == 0 {
                return (Polynomial::new(quotient), v);
            }
            quotient[i - 1] = v;
            carry = v;
        }
        unreachable!()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

const MAX_ITERATIONS: usize = 200;

/// All roots of `p`, each with residual `|p(root)| <= 1e-10 * coefficient
/// scale`. Exact zero roots are stripped before iteration so that
/// monomial-like inputs come back exact; the rest go through
/// Aberth–Ehrlich simultaneous iteration with a seeded perturbation
/// restart on stagnation, then a Newton polish.
pub fn roots(p: &Polynomial) -> Result<Vec<Complex64>> {
    let scale = p.coeff_scale();
    match p.degree() {
        None | Some(0) => return Err(Error::InvalidParameter { what: "roots of a constant" }),
        _ => {}
    }

    let mut found = Vec::new();
    let mut work = p.clone();
    // strip exact zero roots
    while work.degree().map_or(false, |d| d >= 1) && work.coeff(0).norm() <= TRIM_EPS * scale {
        found.push(Complex64::new(0.0, 0.0));
        let mut coeffs = work.coeffs().to_vec();
        coeffs.remove(0);
        work = Polynomial { coeffs };
    }

    let n = match work.degree() {
        None | Some(0) => return Ok(found),
        Some(n) => n,
    };

    if n == 1 {
        found.push(-work.coeff(0) / work.coeff(1));
        return Ok(found);
    }

    let lead = work.coeff(n);
    let r0 = (work.coeff(0).norm() / lead.norm()).powf(1.0 / n as f64).clamp(1e-3, 1e3);
    let mut zs: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(r0, 2.0 * PI * j as f64 / n as f64 + 0.4))
        .collect();

    let dwork = work.derivative();
    let res_target = 1e-12 * scale.max(1.0);
    let mut rng = SplitMix64::new(SHAKE_SEED);
    let mut best_residual = f64::INFINITY;
    let mut last_improvement = 0usize;
    let mut iterations = 0usize;

    for iter in 0..MAX_ITERATIONS {
        iterations = iter + 1;
        let mut max_step = 0.0f64;
        let mut max_res = 0.0f64;
        let snapshot = zs.clone();
        for j in 0..n {
            let zj = snapshot[j];
            let pj = work.eval(zj);
            max_res = max_res.max(pj.norm());
            if pj.norm() <= res_target {
                continue;
            }
            let mut dpj = dwork.eval(zj);
            if dpj.norm() < 1e-280 {
                dpj = Complex64::new(1e-280, 0.0);
            }
            let newton = pj / dpj;
            let mut s = Complex64::new(0.0, 0.0);
            for (i, &zi) in snapshot.iter().enumerate() {
                if i != j {
                    let d = zj - zi;
                    if d.norm() > 1e-280 {
                        s += Complex64::new(1.0, 0.0) / d;
                    }
                }
            }
            let den = Complex64::new(1.0, 0.0) - newton * s;
            let step = if den.norm() > 1e-12 { newton / den } else { newton };
            zs[j] = zj - step;
            max_step = max_step.max(step.norm());
        }
        if max_res < best_residual * 0.5 {
            best_residual = max_res;
            last_improvement = iter;
        }
        if max_step < 1e-15 * (1.0 + zs.iter().map(|z| z.norm()).fold(0.0, f64::max)) {
            break;
        }
        // stagnation: shake the configuration deterministically
        if iter - last_improvement > 40 {
            for z in zs.iter_mut() {
                *z += 1e-3 * Complex64::from_polar(rng.next_f64(), 2.0 * PI * rng.next_f64());
            }
            last_improvement = iter;
        }
    }

    // Newton polish
    for z in zs.iter_mut() {
        for _ in 0..5 {
            let pv = work.eval(*z);
            let dv = dwork.eval(*z);
            if dv.norm() < 1e-280 {
                break;
            }
            let step = pv / dv;
            if step.norm() > 0.5 {
                break;
            }
            *z -= step;
        }
    }

    let tol = 1e-10 * scale.max(1.0);
    let worst = zs.iter().map(|&z| work.eval(z).norm()).fold(0.0, f64::max);
    if worst > tol {
        return Err(Error::RootFinding { residual: worst, iterations });
    }
    found.extend(zs);
    Ok(found)
}

// fixed seed for the stagnation shake, so reruns are identical
const SHAKE_SEED: u64 = 0xA6E7_1234_5678_9ABC;
