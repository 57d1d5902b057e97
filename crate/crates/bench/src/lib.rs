//! Deterministic inputs shared by the kernel benchmarks.

use std::f64::consts::PI;

use phasespin_core::sigma::from_spherical;
use phasespin_core::{Algebra, Multivector};

/// `n` well-spread unit vectors on a golden-angle spiral.
pub fn spiral_directions(n: usize) -> Vec<Multivector> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
            from_spherical(z.acos(), golden * k as f64)
        })
        .collect()
}

/// Dense multivector with every coefficient non-zero.
pub fn dense(alg: &'static Algebra, seed: u32) -> Multivector {
    let c = (0..alg.size())
        .map(|b| ((b as f64 + 1.0) * 0.618_033_988_749_895 + seed as f64 * 0.414_213_562_373_095).fract() - 0.5)
        .collect();
    Multivector::from_coeffs(alg, c).expect("length matches algebra")
}
