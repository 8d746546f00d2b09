//! Deterministic sample generators used for construction spot-checks and
//! randomized sweeps. No external RNG dependency; everything here is
//! reproducible from a seed.

use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// SplitMix64: tiny, fast, and good enough for sampling test points.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Area-uniform in the disk of the given radius.
    pub fn in_disk(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.next_f64().sqrt();
        let t = 2.0 * PI * self.next_f64();
        Complex64::from_polar(r, t)
    }

    /// Uniform on the unit circle.
    pub fn on_circle(&mut self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * PI * self.next_f64())
    }
}

/// Golden-angle spiral covering the disk of the given radius; spreads `n`
/// points more evenly than a PRNG, which is what a containment
/// spot-check wants.
pub fn disk_grid(n: usize, radius: f64) -> Vec<Complex64> {
    let golden = PI * (3.0 - 5.0_f64.sqrt());
    (0..n)
        .map(|i| {
            let r = radius * (((i as f64) + 0.5) / n as f64).sqrt();
            Complex64::from_polar(r, golden * i as f64)
        })
        .collect()
}

/// `n` equally spaced boundary points, offset so that 1 is never hit.
pub fn circle_grid(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|i| Complex64::from_polar(1.0, 2.0 * PI * (i as f64 + 0.5) / n as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn samples_in_range() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let z = rng.in_disk(0.9);
            assert!(z.norm() <= 0.9 + 1e-12);
            assert!((rng.on_circle().norm() - 1.0).abs() < 1e-12);
        }
        for z in disk_grid(500, 0.999) {
            assert!(z.norm() < 0.999 + 1e-12);
        }
    }
}
