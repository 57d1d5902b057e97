//! One-sided (spinor) forms of a spin.

use super::{
    frame::DirectionFrame, make_spin, rotate_spin, PhaseLabel, PhasedMv, PhasedSpin, SpinBasis,
};
use crate::clifford::{rotor, sandwich, Multivector};
use crate::error::{Error, Result};
use crate::phase::{PhaseVar, TrigPoly};
use crate::sigma::{self, pseudoscalar};
use crate::spin::frame::reduced_spinors;

/// `S_σ(φ)` rotated by π about `u2`: the anti-aligned partner used by the
/// second spinor term.
fn anti_partner(s: &PhasedSpin, f: &DirectionFrame) -> Result<PhasedMv> {
    let half_turn = rotor(f.u2(), std::f64::consts::PI)?;
    sandwich(&half_turn, s.mv(), false)
}

/// The two one-sided terms `R_θ S_σ cos(θ/2)` and `R†_{π−θ} S_{−σ} sin(θ/2)`.
/// Each has mixed grades; only their sum is a vector.
pub fn spinor_terms(u: &Multivector, phase: PhaseVar) -> Result<(PhasedMv, PhasedMv)> {
    let f = DirectionFrame::new(u)?;
    let s = make_spin(SpinBasis::Up, phase)?;
    let anti = anti_partner(&s, &f)?;
    let (sh, ch) = (f.theta() / 2.0).sin_cos();
    let aligned = f.r_theta().as_mv().lift::<TrigPoly>().gp(s.mv())?.scale(ch);
    let opposed = f.r_complement_rev()?.as_mv().lift::<TrigPoly>().gp(&anti)?.scale(sh);
    Ok((aligned, opposed))
}

/// Spin along `u` assembled from its one-sided spinor terms.
///
/// Equals `R_θ S_σ(φ) R_θ†`, which is `rotate_spin` of `S_σ` with its phase
/// shifted by `−φ_u`; the returned label carries that offset.
pub fn spinor_compose(u: &Multivector, phase: PhaseVar) -> Result<PhasedSpin> {
    let f = DirectionFrame::new(u)?;
    let (a, b) = spinor_terms(u, phase)?;
    let mv = a.try_add(&b)?.grade_project(1)?;
    let label = PhaseLabel {
        var: phase,
        sign: 1,
        offset: -f.phi_u(),
    };
    let triplet = [u.clone(), f.u1().clone(), f.u2().clone()];
    let spin = PhasedSpin::from_triplet(triplet, label)?;
    Ok(PhasedSpin { mv, ..spin })
}

/// `⟨(R_θ S_σ İu2)† (R_θ S_σ)⟩₀` as a polynomial in a fresh phase; it
/// vanishes identically.
pub fn spinor_gram_poly(u: &Multivector) -> Result<TrigPoly> {
    let f = DirectionFrame::new(u)?;
    let s = make_spin(SpinBasis::Up, PhaseVar::fresh())?;
    let rs = f.r_theta().as_mv().lift::<TrigPoly>().gp(s.mv())?;
    let iu2: PhasedMv = (&pseudoscalar() * f.u2()).lift();
    let left = rs.gp(&iu2)?.reverse();
    Ok(left.gp(&rs)?.scalar_part())
}

/// Phase average of [`spinor_gram_poly`].
pub fn spinor_gram(u: &Multivector) -> Result<f64> {
    Ok(spinor_gram_poly(u)?.expect_all())
}

/// `⟨u⁺ u⁻⟩₀`.
pub fn reduced_gram(u: &Multivector) -> Result<f64> {
    let p = reduced_spinors(u)?;
    Ok(p.u_plus.gp(&p.u_minus)?.scalar_part())
}

/// Result of the measurement transformation `R_θ† S_u(φ′)`, which is not a
/// vector: `S_σ(φ′) cos(θ/2) + İu2 S_{−σ}(φ′) sin(θ/2)`.
#[derive(Debug, Clone)]
pub struct SpinorForm {
    pub mv: PhasedMv,
    pub cos_term: PhasedMv,
    pub sin_term: PhasedMv,
    pub phase: PhaseVar,
    pub frame: DirectionFrame,
}

impl SpinorForm {
    /// Phase-free part `R_θ† u = σ3 (cos(θ/2) + İu2 sin(θ/2))`.
    pub fn vector_part(&self) -> Result<Multivector> {
        self.frame
            .r_theta()
            .reverse()
            .as_mv()
            .gp(self.frame.u())
    }
}

/// Applies `R_θ†` one-sidedly to a spin measured along its own axis `u`,
/// with a fresh phase `φ′` replacing the incoming phase.
pub fn sg_spinor_transform(s: &PhasedSpin, u: &Multivector) -> Result<SpinorForm> {
    sigma::require_unit(u)?;
    let d = s.axis().max_abs_diff(u);
    if d > crate::tolerance::UNIT_TOL {
        return Err(Error::AxisMismatch(format!("axis {} vs detector {u}", s.axis())));
    }
    let f = DirectionFrame::new(u)?;
    let phase = PhaseVar::fresh();
    let s_u = spinor_compose(u, phase)?;
    let mv = f.r_theta().reverse().as_mv().lift::<TrigPoly>().gp(s_u.mv())?;

    let s_sigma = make_spin(SpinBasis::Up, phase)?;
    let anti = anti_partner(&s_sigma, &f)?;
    let (sh, ch) = (f.theta() / 2.0).sin_cos();
    let iu2: PhasedMv = (&pseudoscalar() * f.u2()).lift();
    let cos_term = s_sigma.mv().scale(ch);
    let sin_term = iu2.gp(&anti)?.scale(sh);
    Ok(SpinorForm {
        mv,
        cos_term,
        sin_term,
        phase,
        frame: f,
    })
}

/// `rotate_spin(S_σ(φ − φ_u), u)`: the two-sided route to [`spinor_compose`].
pub fn spinor_compose_two_sided(u: &Multivector, phase: PhaseVar) -> Result<PhasedSpin> {
    let f = DirectionFrame::new(u)?;
    let s = make_spin(SpinBasis::Up, phase)?.shift(-f.phi_u());
    rotate_spin(&s, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::{from_spherical, sigma};
    use crate::spin::{phased_max_diff, spin_expectation};

    #[test]
    fn compose_at_sigma3_is_up() {
        let phi = PhaseVar::fresh();
        let c = spinor_compose(&sigma(3), phi).unwrap();
        let up = make_spin(SpinBasis::Up, phi).unwrap();
        assert!(phased_max_diff(c.mv(), up.mv()) < 1e-15);
    }

    #[test]
    fn compose_matches_two_sided() {
        for (t, p) in [(0.4, 0.1), (1.9, -2.5), (3.1, 1.0), (std::f64::consts::PI, 0.0)] {
            let u = from_spherical(t, p);
            let phi = PhaseVar::fresh();
            let c = spinor_compose(&u, phi).unwrap();
            let r = spinor_compose_two_sided(&u, phi).unwrap();
            assert!(phased_max_diff(c.mv(), r.mv()) < 1e-14, "θ={t} φ={p}");
            assert!(phased_max_diff(c.mv(), &c.reassembled().unwrap()) < 1e-14);
            assert!(spin_expectation(&c).unwrap().approx_eq(&u.scale(0.5), 1e-14));
        }
    }

    #[test]
    fn terms_are_mixed_grade() {
        let u = from_spherical(1.2, 0.8);
        let (a, b) = spinor_terms(&u, PhaseVar::fresh()).unwrap();
        assert!(!a.is_grade(1, 1e-12));
        assert!(!b.is_grade(1, 1e-12));
        assert!(a.try_add(&b).unwrap().is_grade(1, 1e-14));
    }

    #[test]
    fn grams_vanish() {
        assert_eq!(spinor_gram(&sigma(1)).unwrap(), 0.0);
        let u = from_spherical(2.0, -0.3);
        assert!(spinor_gram_poly(&u).unwrap().max_abs_coeff() < 1e-14);
        assert!(reduced_gram(&u).unwrap().abs() < 1e-15);
    }

    #[test]
    fn measurement_transform() {
        let u = from_spherical(1.3, 0.6);
        let s = rotate_spin(&make_spin(SpinBasis::Up, PhaseVar::fresh()).unwrap(), &u).unwrap();
        let form = sg_spinor_transform(&s, &u).unwrap();
        assert_ne!(form.phase, s.phase());
        let sum = form.cos_term.try_add(&form.sin_term).unwrap();
        assert!(phased_max_diff(&form.mv, &sum) < 1e-14);

        let f = &form.frame;
        let (sh, ch) = (f.theta() / 2.0).sin_cos();
        let iu2 = &pseudoscalar() * f.u2();
        let want = &sigma(3) * &(&crate::sigma::scalar(ch) + &iu2.scale(sh));
        assert!(form.vector_part().unwrap().approx_eq(&want, 1e-15));

        assert!(matches!(
            sg_spinor_transform(&s, &sigma(1)),
            Err(Error::AxisMismatch(_))
        ));
    }

    #[test]
    fn measurement_transform_at_sigma3() {
        let s = make_spin(SpinBasis::Up, PhaseVar::fresh()).unwrap();
        let form = sg_spinor_transform(&s, &sigma(3)).unwrap();
        let fresh = make_spin(SpinBasis::Up, form.phase).unwrap();
        assert!(phased_max_diff(&form.mv, fresh.mv()) < 1e-15);
    }
}
