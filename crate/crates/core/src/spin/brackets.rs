//! Bracket algebra of the frame-spin expectations.

use super::{make_spin, spin_expectation, SpinBasis};
use crate::clifford::{rotor, sandwich, Bracket, Multivector};
use crate::error::{Error, Result};
use crate::phase::PhaseVar;
use crate::sigma::sigma;

/// `ε_jkl` for indices in `1..=3`.
pub fn levi_civita(j: u8, k: u8, l: u8) -> i8 {
    match (j, k, l) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

fn check(j: u8) -> Result<()> {
    if (1..=3).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidFrameIndex(j))
    }
}

/// `½[⟨S_j⟩, ⟨S_k⟩]` (or the anticommutator). For `j ≠ k` the commutator
/// is `ε_jkl İ ½⟨S_l⟩` and the anticommutator vanishes.
pub fn expectation_bracket(j: u8, k: u8, kind: Bracket) -> Result<Multivector> {
    check(j)?;
    check(k)?;
    let sj = spin_expectation(&make_spin(SpinBasis::Frame(j), PhaseVar::fresh())?)?;
    let sk = spin_expectation(&make_spin(SpinBasis::Frame(k), PhaseVar::fresh())?)?;
    Ok(kind.apply(&sj, &sk)?.scale(0.5))
}

/// [`expectation_bracket`] sandwiched by the phase rotor `R_φ(l)` of the
/// third frame spin, at numeric phase `phi`. `σ_l` and `İσ_l` commute with
/// that rotor, so the value is phase-independent.
pub fn equal_phase_bracket(j: u8, k: u8, kind: Bracket, phi: f64) -> Result<Multivector> {
    let inner = expectation_bracket(j, k, kind)?;
    let l = 6 - j - k;
    if j == k || !(1..=3).contains(&l) {
        return Err(Error::InvalidFrameIndex(l));
    }
    let r = rotor(&sigma(l), phi)?;
    sandwich(&r, &inner, false)
}

/// `⟨σ_j ⟨S⟩⟩₀` for `j = 1, 2, 3`.
pub fn axis_projections(basis: SpinBasis) -> Result<[f64; 3]> {
    let e = spin_expectation(&make_spin(basis, PhaseVar::fresh())?)?;
    let mut out = [0.0; 3];
    for (j, slot) in (1..=3).zip(&mut out) {
        *slot = sigma(j).gp(&e)?.scalar_part();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::pseudoscalar;

    #[test]
    fn pauli_algebra_of_expectations() {
        for j in 1..=3u8 {
            for k in 1..=3u8 {
                if j == k {
                    continue;
                }
                let l = 6 - j - k;
                let eps = levi_civita(j, k, l) as f64;
                let want = (&pseudoscalar() * &sigma(l)).scale(eps * 0.25);
                assert_eq!(expectation_bracket(j, k, Bracket::Commutator).unwrap(), want);
                assert!(expectation_bracket(j, k, Bracket::Anticommutator)
                    .unwrap()
                    .is_zero(0.0));
                for phi in [0.0, 0.7, 2.9, -1.3] {
                    let b = equal_phase_bracket(j, k, Bracket::Commutator, phi).unwrap();
                    assert!(b.approx_eq(&want, 1e-15));
                }
            }
        }
        assert!(expectation_bracket(0, 1, Bracket::Commutator).is_err());
    }

    #[test]
    fn eigen_table() {
        assert_eq!(axis_projections(SpinBasis::Up).unwrap(), [0.0, 0.0, 0.5]);
        assert_eq!(axis_projections(SpinBasis::Down).unwrap(), [0.0, 0.0, -0.5]);
    }
}
