//! A unified handle on holomorphic self-maps of the disk — exact
//! rational forms or black-box evaluators — plus the hyperbolic
//! derivative and the hyperbolic difference quotient.

use crate::blaschke::{BlaschkeProduct, RationalMap};
use crate::disk::{gamma_raw, BoundaryPoint, DiskPoint};
use crate::error::{Error, Result};
use crate::numdiff;
use crate::sample::disk_grid;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Below this pseudo-hyperbolic separation the quotient switches to the
/// derivative branch.
pub const COINCIDENCE_THRESHOLD: f64 = 1e-8;
/// Between the coincidence threshold and this, the quotient is evaluated
/// but flagged: it loses roughly `1/|gamma_w(z)|` digits to cancellation.
pub const LOW_CONFIDENCE_THRESHOLD: f64 = 1e-3;

/// Construction spot-check: `|f| <= 1 + SELF_MAP_TOL` on sampled points.
pub const SELF_MAP_TOL: f64 = 1e-10;
const SPOT_SAMPLES: usize = 1000;

pub type MapFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// Derivatives `f(z0), f'(z0), ..., f^(m)(z0)` of a map at a point.
#[derive(Clone, Debug)]
pub struct TaylorData {
    point: Complex64,
    derivatives: Vec<Complex64>,
}

impl TaylorData {
    /// `derivatives[j]` is the j-th derivative (the value itself at j=0);
    /// at least the first derivative must be present.
    pub fn new(point: Complex64, derivatives: Vec<Complex64>) -> Result<Self> {
        if derivatives.len() < 2 {
            return Err(Error::InsufficientTaylor { needed: 2, got: derivatives.len() });
        }
        Ok(Self { point, derivatives })
    }

    pub fn point(&self) -> Complex64 {
        self.point
    }

    /// Highest derivative order stored.
    pub fn order(&self) -> usize {
        self.derivatives.len() - 1
    }

    pub fn derivative(&self, j: usize) -> Result<Complex64> {
        self.derivatives
            .get(j)
            .copied()
            .ok_or(Error::InsufficientTaylor { needed: j + 1, got: self.derivatives.len() })
    }

    /// Extract numerically from any map evaluator via the circle rule.
    pub fn extract<F>(f: F, point: Complex64, order: usize) -> Result<Self>
    where
        F: Fn(Complex64) -> Result<Complex64>,
    {
        let coeffs = numdiff::circle_taylor(f, point, order, numdiff::safe_radius(point))?;
        let mut factorial = 1.0;
        let derivatives = coeffs
            .into_iter()
            .enumerate()
            .map(|(j, a)| {
                if j > 0 {
                    factorial *= j as f64;
                }
                a * factorial
            })
            .collect();
        Self::new(point, derivatives)
    }
}

#[derive(Clone)]
enum MapKind {
    Blaschke(BlaschkeProduct),
    Rational(RationalMap),
    BlackBox { f: MapFn, df: Option<MapFn> },
}

/// A holomorphic self-map of the disk.
///
/// Exact kinds know their Blaschke degree, which drives the
/// equality-case classification downstream; black-box kinds get
/// numerical differentiation unless a derivative closure is supplied.
#[derive(Clone)]
pub struct SelfMap {
    kind: MapKind,
    blaschke_degree: Option<usize>,
    taylor: Option<TaylorData>,
}

impl core::fmt::Debug for SelfMap {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "SelfMap({})", self.describe())
    }
}

fn spot_check<F>(f: F) -> Result<()>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let mut worst = 0.0f64;
    for z in disk_grid(SPOT_SAMPLES, 0.999) {
        let v = f(z)?;
        worst = worst.max(v.norm());
    }
    if worst > 1.0 + SELF_MAP_TOL {
        return Err(Error::NotASelfMap { max_modulus: worst });
    }
    Ok(())
}

impl SelfMap {
    pub fn from_blaschke(b: BlaschkeProduct) -> Self {
        let degree = b.degree();
        Self { kind: MapKind::Blaschke(b), blaschke_degree: Some(degree), taylor: None }
    }

    /// A rational self-map; spot-checked into the closed disk.
    pub fn from_rational(r: RationalMap) -> Result<Self> {
        spot_check(|z| r.eval(z))?;
        Ok(Self { kind: MapKind::Rational(r), blaschke_degree: None, taylor: None })
    }

    /// A rational map already certified to be a Blaschke product of the
    /// given degree (the Herglotz construction emits these).
    pub fn from_certified_blaschke(r: RationalMap, degree: usize) -> Result<Self> {
        spot_check(|z| r.eval(z))?;
        Ok(Self { kind: MapKind::Rational(r), blaschke_degree: Some(degree), taylor: None })
    }

    pub fn black_box<F>(f: F) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        spot_check(|z| Ok(f(z)))?;
        Ok(Self {
            kind: MapKind::BlackBox { f: Arc::new(f), df: None },
            blaschke_degree: None,
            taylor: None,
        })
    }

    pub fn black_box_with_derivative<F, G>(f: F, df: G) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        G: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        spot_check(|z| Ok(f(z)))?;
        Ok(Self {
            kind: MapKind::BlackBox { f: Arc::new(f), df: Some(Arc::new(df)) },
            blaschke_degree: None,
            taylor: None,
        })
    }

    pub(crate) fn from_parts(
        kind_rational: RationalMap,
        blaschke_degree: Option<usize>,
    ) -> Self {
        Self { kind: MapKind::Rational(kind_rational), blaschke_degree, taylor: None }
    }

    pub(crate) fn from_closure_parts(f: MapFn, df: Option<MapFn>) -> Self {
        Self { kind: MapKind::BlackBox { f, df }, blaschke_degree: None, taylor: None }
    }

    pub fn with_taylor(mut self, t: TaylorData) -> Self {
        self.taylor = Some(t);
        self
    }

    pub fn taylor(&self) -> Option<&TaylorData> {
        self.taylor.as_ref()
    }

    /// Known Taylor data at the requested point, or a fresh numerical
    /// extraction of the requested order.
    pub fn taylor_at(&self, point: Complex64, order: usize) -> Result<TaylorData> {
        if let Some(t) = &self.taylor {
            if (t.point() - point).norm() < 1e-15 && t.order() >= order {
                return Ok(t.clone());
            }
        }
        match &self.kind {
            MapKind::Blaschke(_) | MapKind::Rational(_) | MapKind::BlackBox { .. } => {
                TaylorData::extract(|z| self.eval(z), point, order)
            }
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match &self.kind {
            MapKind::Blaschke(b) => b.eval(z),
            MapKind::Rational(r) => r.eval(z),
            MapKind::BlackBox { f, .. } => Ok(f(z)),
        }
    }

    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        match &self.kind {
            MapKind::Blaschke(b) => b.derivative(z),
            MapKind::Rational(r) => r.derivative(z),
            MapKind::BlackBox { f, df } => match df {
                Some(df) => Ok(df(z)),
                None => numdiff::circle_derivative(|u| Ok(f(u)), z, numdiff::safe_radius(z)),
            },
        }
    }

    pub fn blaschke(&self) -> Option<&BlaschkeProduct> {
        match &self.kind {
            MapKind::Blaschke(b) => Some(b),
            _ => None,
        }
    }

    pub fn rational(&self) -> Option<&RationalMap> {
        match &self.kind {
            MapKind::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.kind, MapKind::BlackBox { .. })
    }

    pub(crate) fn closure(&self) -> Option<(MapFn, Option<MapFn>)> {
        match &self.kind {
            MapKind::BlackBox { f, df } => Some((f.clone(), df.clone())),
            _ => None,
        }
    }

    /// Blaschke degree when structurally known (exact products and
    /// certified rational forms); `None` for black boxes.
    pub fn blaschke_degree(&self) -> Option<usize> {
        self.blaschke_degree
    }

    /// `Some(true/false)` when the structure is known, `None` otherwise.
    pub fn is_automorphism(&self) -> Option<bool> {
        self.blaschke_degree.map(|d| d == 1)
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            MapKind::Blaschke(b) => format!("blaschke(theta={}, degree={})", b.theta(), b.degree()),
            MapKind::Rational(r) => match self.blaschke_degree {
                Some(d) => format!("rational-blaschke(degree={d})"),
                None => format!("rational(degree={})", r.degree()),
            },
            MapKind::BlackBox { df, .. } => {
                if df.is_some() {
                    String::from("black-box(with derivative)")
                } else {
                    String::from("black-box")
                }
            }
        }
    }
}

/// Hyperbolic derivative `f^h(z) = f'(z) (1-|z|^2)/(1-|f(z)|^2)`;
/// `|f^h| <= 1` by Schwarz–Pick.
pub fn hyperbolic_derivative(f: &SelfMap, z: &DiskPoint) -> Result<Complex64> {
    let zv = z.value();
    let fz = f.eval(zv)?;
    if fz.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: fz.norm() });
    }
    Ok(f.derivative(zv)? * (1.0 - zv.norm_sqr()) / (1.0 - fz.norm_sqr()))
}

/// Raw quotient `gamma_{f(w)}(f(z)) / gamma_w(z)` for values already in
/// hand; shared by the chain machinery.
pub(crate) fn hdq_quotient(fz: Complex64, fw: Complex64, z: Complex64, w: Complex64) -> Complex64 {
    gamma_raw(fw, fz) / gamma_raw(w, z)
}

/// The hyperbolic difference quotient `f*(z, w)`: the quotient of the
/// pseudo-hyperbolic displacement of the images by that of the points,
/// extended across the diagonal by the hyperbolic derivative.
///
/// For exact-rational maps the deflated stage is evaluated instead, which
/// has no cancellation anywhere; black-box maps use the quotient with a
/// derivative branch below [`COINCIDENCE_THRESHOLD`].
pub fn hdq(f: &SelfMap, z: &DiskPoint, w: &DiskPoint) -> Result<Complex64> {
    Ok(hdq_with_confidence(f, z, w)?.0)
}

/// As [`hdq`], also reporting whether the value went through the
/// cancellation-prone band.
pub fn hdq_with_confidence(f: &SelfMap, z: &DiskPoint, w: &DiskPoint) -> Result<(Complex64, bool)> {
    if f.is_exact() {
        let (stage, _) = crate::chain::delta_stage(f, w)?;
        return Ok((stage.eval(z.value())?, false));
    }
    let sep = gamma_raw(w.value(), z.value()).norm();
    if sep < COINCIDENCE_THRESHOLD {
        return Ok((hyperbolic_derivative(f, z)?, false));
    }
    let fz = f.eval(z.value())?;
    let fw = f.eval(w.value())?;
    if fw.norm() >= 1.0 - 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: fw.norm() });
    }
    let value = hdq_quotient(fz, fw, z.value(), w.value());
    Ok((value, sep < LOW_CONFIDENCE_THRESHOLD))
}

/// Boundary value of the difference quotient,
/// `f*(sigma, w) = gamma_{f(w)}(f(sigma)) / gamma_w(sigma)`, which is
/// unimodular whenever `f(sigma)` is.
pub fn boundary_hdq(
    f: &SelfMap,
    sigma: &BoundaryPoint,
    f_sigma: &BoundaryPoint,
    w: &DiskPoint,
) -> Result<BoundaryPoint> {
    let fw = f.eval(w.value())?;
    if (f_sigma.value() - fw).norm() < 1e-12 {
        return Err(Error::BoundaryValueReached { modulus: fw.norm() });
    }
    let value = hdq_quotient(f_sigma.value(), fw, sigma.value(), w.value());
    BoundaryPoint::new(value)
}
