use super::{improper_map, make_spin, rotate_spin, Handedness, PhasedSpin, SpinBasis};
use crate::clifford::Multivector;
use crate::error::Result;
use crate::phase::PhaseVar;
use crate::sigma;

/// Outcome statistics of a Stern–Gerlach measurement.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub p_coincide: f64,
    pub p_anti: f64,
    /// `cos(θ/2)`.
    pub amp_coincide: f64,
    /// `sin(θ/2)`.
    pub amp_anti: f64,
    /// `⟨a u⟩₀ = cos θ = p_coincide − p_anti`.
    pub correlation: f64,
    /// Spin along the detector with a fresh phase.
    pub outcome: PhasedSpin,
}

impl MeasurementRecord {
    /// Expected spin component along the detector, units of ħ.
    pub fn projection(&self) -> f64 {
        0.5 * self.correlation
    }
}

/// Measures `s` with a detector along unit `u`. The outcome keeps the
/// handedness of `s` and carries a phase variable never seen before, so it
/// is uncorrelated with the incoming phase.
pub fn sg_measure(s: &PhasedSpin, u: &Multivector) -> Result<MeasurementRecord> {
    sigma::require_unit(u)?;
    let c = s.axis().gp(u)?.scalar_part().clamp(-1.0, 1.0);
    let p_coincide = 0.5 * (1.0 + c);
    let p_anti = 0.5 * (1.0 - c);
    let fresh = make_spin(SpinBasis::Up, PhaseVar::fresh())?;
    let outcome = match s.hand() {
        Handedness::Right => rotate_spin(&fresh, u)?,
        Handedness::Left => improper_map(&rotate_spin(&fresh, &-u)?, 0)?,
    };
    Ok(MeasurementRecord {
        p_coincide,
        p_anti,
        amp_coincide: p_coincide.sqrt(),
        amp_anti: p_anti.sqrt(),
        correlation: c,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::{from_spherical_deg, sigma};
    use crate::spin::spin_expectation;

    fn up() -> PhasedSpin {
        make_spin(SpinBasis::Up, PhaseVar::fresh()).unwrap()
    }

    #[test]
    fn aligned_and_orthogonal() {
        let r = sg_measure(&up(), &sigma(3)).unwrap();
        assert_eq!((r.p_coincide, r.p_anti, r.correlation), (1.0, 0.0, 1.0));
        assert_eq!(r.projection(), 0.5);
        let r = sg_measure(&up(), &sigma(1)).unwrap();
        assert_eq!((r.p_coincide, r.p_anti, r.correlation), (0.5, 0.5, 0.0));
    }

    #[test]
    fn sixty_degrees() {
        let r = sg_measure(&up(), &from_spherical_deg(60.0, 25.0)).unwrap();
        assert!((r.p_coincide - 0.75).abs() < 1e-15);
        assert!((r.p_anti - 0.25).abs() < 1e-15);
        assert!((r.correlation - 0.5).abs() < 1e-15);
        assert!((r.amp_coincide - (30f64.to_radians()).cos()).abs() < 1e-15);
    }

    #[test]
    fn outcome_has_fresh_phase_and_detector_axis() {
        let s = up();
        let u = from_spherical_deg(120.0, -40.0);
        let r = sg_measure(&s, &u).unwrap();
        assert_ne!(r.outcome.phase(), s.phase());
        assert!(spin_expectation(&r.outcome).unwrap().approx_eq(&u.scale(0.5), 1e-14));
        assert_eq!(r.outcome.hand(), Handedness::Right);

        let left = improper_map(&s, 0).unwrap();
        let r = sg_measure(&left, &u).unwrap();
        assert_eq!(r.outcome.hand(), Handedness::Left);
        assert!(r.outcome.axis().approx_eq(&u, 1e-14));
    }
}
