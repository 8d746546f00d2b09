//! Hyperbolic function theory on the unit disk, computationally.
//!
//! The crate provides four layers, bottom up:
//!
//! * [`disk`] — Poincaré-disk primitives: automorphisms, the hyperbolic
//!   distance, horocycles, Stolz regions, and Euclidean images of disks
//!   under Möbius maps.
//! * [`poly`] / [`blaschke`] — exact polynomial arithmetic, an
//!   Aberth–Ehrlich root finder, finite Blaschke products in factored
//!   form, rational self-maps, conjugation by automorphisms, and the
//!   Herglotz-sum construction that turns boundary data plus a Blaschke
//!   product into a new Blaschke product.
//! * [`selfmap`] / [`chain`] — a unified handle on holomorphic self-maps
//!   (exact rational or black-box closures), hyperbolic derivatives and
//!   difference quotients, and iterated difference-quotient chains with
//!   exact deflation for rational maps.
//! * [`boundary`] / [`lemmas`] — boundary dilation coefficients (exact
//!   and radially extrapolated), the recursion along a chain, and
//!   structured verifiers for the Julia-type inequalities: classical,
//!   two-point, multipoint, Mercer's Euclidean form, angular-derivative
//!   lower bounds, and the Cowen–Pommerenke family.
//!
//! All computations are pure and all value types are immutable, so
//! everything here can be used concurrently without restriction. The
//! crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature for embedded use.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod blaschke;
pub mod boundary;
pub mod chain;
pub mod disk;
pub mod error;
pub mod lemmas;
pub mod numdiff;
pub mod poly;
pub mod sample;
pub mod selfmap;

pub use blaschke::{
    blaschke_conjugate, herglotz_blaschke, Automorphism, BlaschkeProduct, RationalMap,
};
pub use boundary::{
    beta_chain, beta_exact, beta_radial, beta_star, boundary_dilation, fixed_point_condition,
    BetaChain, BetaMethod, BoundaryDilation,
};
pub use chain::{
    delta_chain, general_delta_derivative, taylor_delta0, DeltaChain, OriginTaylorDeltas,
};
pub use disk::{
    gamma, gamma_inv, horocycle_euclidean, horocycle_functional, mobius_disk_image,
    poincare_distance, pseudo_hyperbolic_distance, stolz_contains, BoundaryPoint, DiskPoint,
    EuclideanDisk, Horocycle, StolzRegion,
};
pub use error::{Error, Result};
pub use lemmas::{
    check_horocycle_image, check_julia, check_multipoint_julia, check_origin_julia,
    check_origin_julia_order_k, check_origin_julia_two_step, check_two_point_julia,
    check_two_point_jwc, cowen_pommerenke, cowen_pommerenke_multiple, lower_bound_ladder,
    lower_bound_series, lower_bound_simplified, mercer_disk, mercer_report, two_point_julia_disk,
    EstimateLadder, InputEcho, MercerDisk, Tolerances, VerificationReport,
};
pub use selfmap::{boundary_hdq, hdq, hyperbolic_derivative, SelfMap, TaylorData};

pub use num_complex::Complex64;
