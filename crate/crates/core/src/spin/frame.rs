use crate::clifford::{rotor, sandwich, Multivector, Versor};
use crate::error::Result;
use crate::sigma::{self, cross, normalized, sigma, vec3};
use crate::tolerance::TOL;

/// Canonical rotation frame of a unit direction `u` relative to `σ3`.
///
/// `θ` is the polar angle and `φ_u` the azimuth (0 when `u ∥ ±σ3`).
/// `u2 = R_φu σ2` is the normal of the σ3–u plane, `u⊥ = R_φu σ1` the
/// in-plane direction orthogonal to σ3, and `R_u = R_θ R_φu` takes σ3 to `u`.
#[derive(Debug, Clone)]
pub struct DirectionFrame {
    u: Multivector,
    theta: f64,
    phi_u: f64,
    u_perp: Multivector,
    u1: Multivector,
    u2: Multivector,
    r_phi: Versor,
    r_theta: Versor,
    r_u: Versor,
}

impl DirectionFrame {
    pub fn new(u: &Multivector) -> Result<Self> {
        sigma::require_unit(u)?;
        let [x, y, z] = sigma::components(u);
        let theta = z.clamp(-1.0, 1.0).acos();
        let phi_u = if x.hypot(y) <= TOL { 0.0 } else { y.atan2(x) };
        let (sp, cp) = phi_u.sin_cos();
        let u_perp = vec3(cp, sp, 0.0);
        let u2 = vec3(-sp, cp, 0.0);
        let (st, ct) = theta.sin_cos();
        let u1 = &u_perp.scale(ct) - &sigma(3).scale(st);
        let r_phi = rotor(&sigma(3), phi_u)?;
        let r_theta = rotor(&u2, theta)?;
        let r_u = r_theta.compose(&r_phi)?;
        Ok(Self {
            u: u.clone(),
            theta,
            phi_u,
            u_perp,
            u1,
            u2,
            r_phi,
            r_theta,
            r_u,
        })
    }

    pub fn u(&self) -> &Multivector {
        &self.u
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi_u(&self) -> f64 {
        self.phi_u
    }

    pub fn u_perp(&self) -> &Multivector {
        &self.u_perp
    }

    pub fn u1(&self) -> &Multivector {
        &self.u1
    }

    pub fn u2(&self) -> &Multivector {
        &self.u2
    }

    pub fn r_phi(&self) -> &Versor {
        &self.r_phi
    }

    pub fn r_theta(&self) -> &Versor {
        &self.r_theta
    }

    pub fn r_u(&self) -> &Versor {
        &self.r_u
    }

    /// `R†_{π−θ}`, the rotor of the anti-aligned half.
    pub fn r_complement_rev(&self) -> Result<Versor> {
        Ok(rotor(&self.u2, std::f64::consts::PI - self.theta)?.reverse())
    }
}

/// Halfway vectors of a direction: `u = u⁺ cos(θ/2) + u⁻ sin(θ/2)` with
/// `u⁺ ⊥ u⁻`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSpinorPair {
    pub u_plus: Multivector,
    pub u_minus: Multivector,
    pub theta: f64,
}

impl ReducedSpinorPair {
    pub fn reconstruct(&self) -> Multivector {
        let (s, c) = (self.theta / 2.0).sin_cos();
        &self.u_plus.scale(c) + &self.u_minus.scale(s)
    }
}

/// Reduced spinors of `u` relative to `σ3`, with the canonical frame
/// conventions of [`DirectionFrame`].
pub fn reduced_spinors(u: &Multivector) -> Result<ReducedSpinorPair> {
    let f = DirectionFrame::new(u)?;
    one_sided_pair(&sigma(3), f.u2(), f.theta())
}

/// Reduced spinors of `u` relative to an arbitrary unit `reference`.
/// When `u ∥ ±reference` the plane normal is the image of σ2 under the
/// reference's canonical rotor.
pub fn reduced_spinors_about(u: &Multivector, reference: &Multivector) -> Result<ReducedSpinorPair> {
    sigma::require_unit(u)?;
    let rf = DirectionFrame::new(reference)?;
    let theta = reference.dot(u)?.clamp(-1.0, 1.0).acos();
    let c = cross(reference, u);
    let u2 = if c.norm() <= TOL {
        sandwich(rf.r_u(), &sigma(2), false)?.grade_part(1)
    } else {
        normalized(&c)
    };
    one_sided_pair(reference, &u2, theta)
}

/// `u⁺ = R_θ r` and `u⁻ = R†_{π−θ}(−r)` as one-sided products.
fn one_sided_pair(r: &Multivector, u2: &Multivector, theta: f64) -> Result<ReducedSpinorPair> {
    let r_theta = rotor(u2, theta)?;
    let r_comp = rotor(u2, std::f64::consts::PI - theta)?.reverse();
    let u_plus = r_theta.as_mv().gp(r)?.grade_project(1)?;
    let u_minus = r_comp.as_mv().gp(&-r)?.grade_project(1)?;
    Ok(ReducedSpinorPair {
        u_plus,
        u_minus,
        theta,
    })
}

/// The rotor pair `{R_θ, −R†_{π−θ}}` of direction `u`; `{1, −İσ2}` at `u = σ3`.
pub fn sta_rotor_pair(u: &Multivector) -> Result<(Multivector, Multivector)> {
    let f = DirectionFrame::new(u)?;
    Ok((
        f.r_theta().as_mv().clone(),
        -f.r_complement_rev()?.as_mv(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::{from_spherical, pseudoscalar, scalar};

    #[test]
    fn canonical_frame_rotates_sigma3_to_u() {
        for (t, p) in [(0.3, 0.2), (2.0, -1.4), (3.0, 2.9), (1.57, 0.0)] {
            let u = from_spherical(t, p);
            let f = DirectionFrame::new(&u).unwrap();
            let img = sandwich(f.r_u(), &sigma(3), false).unwrap();
            assert!(img.approx_eq(&u, 1e-14));
            let img1 = sandwich(f.r_u(), &sigma(1), false).unwrap();
            assert!(img1.approx_eq(f.u1(), 1e-14));
            let img2 = sandwich(f.r_u(), &sigma(2), false).unwrap();
            assert!(img2.approx_eq(f.u2(), 1e-14));
        }
    }

    #[test]
    fn degenerate_direction_uses_sigma2() {
        let f = DirectionFrame::new(&sigma(3)).unwrap();
        assert_eq!(f.u2(), &sigma(2));
        assert_eq!(f.u1(), &sigma(1));
        let f = DirectionFrame::new(&-&sigma(3)).unwrap();
        assert_eq!(f.u2(), &sigma(2));
        assert!(f.u1().approx_eq(&-&sigma(1), 1e-15));
    }

    #[test]
    fn reduced_pair_at_sigma3() {
        let p = reduced_spinors(&sigma(3)).unwrap();
        assert!(p.u_plus.approx_eq(&sigma(3), 1e-15));
        assert!(p.u_minus.approx_eq(&sigma(1), 1e-15));
        let (a, b) = sta_rotor_pair(&sigma(3)).unwrap();
        assert!(a.approx_eq(&scalar(1.0), 1e-15));
        assert!(b.approx_eq(&-&(&pseudoscalar() * &sigma(2)), 1e-15));
    }

    #[test]
    fn reduced_pair_closed_form() {
        let u = from_spherical(2.2, 0.7);
        let p = reduced_spinors(&u).unwrap();
        let f = DirectionFrame::new(&u).unwrap();
        let (s, c) = (1.1f64).sin_cos();
        let want_plus = &sigma(3).scale(c) + &f.u_perp().scale(s);
        let want_minus = &sigma(3).scale(-s) + &f.u_perp().scale(c);
        assert!(p.u_plus.approx_eq(&want_plus, 1e-15));
        assert!(p.u_minus.approx_eq(&want_minus, 1e-15));
        assert!(p.reconstruct().approx_eq(&u, 1e-15));
    }

    #[test]
    fn general_reference() {
        let r = from_spherical(0.9, -0.4);
        let u = from_spherical(2.4, 1.9);
        let p = reduced_spinors_about(&u, &r).unwrap();
        assert!(p.u_plus.dot(&p.u_minus).unwrap().abs() < 1e-15);
        assert!(p.reconstruct().approx_eq(&u, 1e-14));
        let same = reduced_spinors_about(&r, &r).unwrap();
        assert!(same.u_plus.approx_eq(&r, 1e-15));
    }
}
