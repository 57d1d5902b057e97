//! Convenience constructors and vector helpers for the orientation space
//! Σ = Cl(3,0).

use std::f64::consts::PI;

use crate::clifford::{Algebra, Multivector};
use crate::error::{Error, Result};
use crate::tolerance::UNIT_TOL;

/// Frame vector `σ_j`, `j ∈ {1, 2, 3}`. Panics otherwise.
pub fn sigma(j: u8) -> Multivector {
    assert!((1..=3).contains(&j), "frame index {j} out of range");
    Multivector::blade(Algebra::euclidean3(), 1 << (j - 1), 1.0)
}

/// `σ_μ` with the convention `σ_0 = 1`.
pub fn sigma_mu(mu: u8) -> Result<Multivector> {
    match mu {
        0 => Ok(Multivector::one(Algebra::euclidean3())),
        1..=3 => Ok(sigma(mu)),
        _ => Err(Error::InvalidReflector(mu)),
    }
}

/// Pseudoscalar `İ = σ1σ2σ3`.
pub fn pseudoscalar() -> Multivector {
    Multivector::pseudoscalar(Algebra::euclidean3())
}

pub fn scalar(x: f64) -> Multivector {
    Multivector::scalar(Algebra::euclidean3(), x)
}

pub fn vec3(x: f64, y: f64, z: f64) -> Multivector {
    Multivector::vector(Algebra::euclidean3(), &[x, y, z]).expect("three components")
}

/// Unit vector from polar angle `theta` (from σ3) and azimuth `phi`, radians.
pub fn from_spherical(theta: f64, phi: f64) -> Multivector {
    vec3(
        theta.sin() * phi.cos(),
        theta.sin() * phi.sin(),
        theta.cos(),
    )
}

/// Same as [`from_spherical`] with angles in degrees.
pub fn from_spherical_deg(theta: f64, phi: f64) -> Multivector {
    from_spherical(theta * PI / 180.0, phi * PI / 180.0)
}

/// Components `(x, y, z)` of a Σ vector.
pub fn components(v: &Multivector) -> [f64; 3] {
    let c = v.coeffs();
    [c[0b001], c[0b010], c[0b100]]
}

/// Checks that `v` is a grade-1 element of Σ.
pub fn require_vector(v: &Multivector) -> Result<()> {
    if !v.algebra().same_as(Algebra::euclidean3()) || !v.is_grade(1, 0.0) {
        return Err(Error::NotVector);
    }
    Ok(())
}

/// Checks that `v` is a unit grade-1 element of Σ within [`UNIT_TOL`].
pub fn require_unit(v: &Multivector) -> Result<()> {
    require_vector(v)?;
    let norm = v.norm();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit { norm });
    }
    Ok(())
}

/// `u × v = −İ (u ∧ v)`.
pub fn cross(u: &Multivector, v: &Multivector) -> Multivector {
    let w = u.wedge(v).expect("Σ vectors");
    -&(&pseudoscalar() * &w)
}

pub fn normalized(v: &Multivector) -> Multivector {
    v.scale(1.0 / v.norm())
}
