//! Two-spin states: the four maximally entangled pairs and the separable
//! cross-superpositions.
//!
//! A state is a superposition of two equally weighted 2-spin configurations.
//! Each configuration names, per particle, a [`SpinMap`] applied to a common
//! source: the full spin `S_σ(φ)` for intrinsic quantities, or the detector
//! direction for measured ones. Expectation values are configuration averages.

mod expect;
mod gram;
mod separable;

use crate::clifford::{sandwich, Multivector, Versor};
use crate::error::{Error, Result};
use crate::phase::PhaseVar;
use crate::spin::{improper_map, make_spin, PhasedSpin, SpinBasis};

pub use expect::{
    bipartite_closed_form, bipartite_expectation, bipartite_expectation_in_frame, bipartite_routes,
    intrinsic_correlation, intrinsic_correlation_poly, partial_expectation, total_spin, BipartiteRoutes,
    Particle, TotalSpin,
};
pub use gram::{gram_pointwise_route, spinor_bell_gram};
pub use separable::{
    separable_expectation, separable_oracle, separable_pair, SeparableExpectation, SeparableKind,
    SeparablePair,
};

/// `w ↦ sign · (İσ_μ w İσ_μ)`, or `w ↦ sign · w` without a reflector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinMap {
    pub sign: i8,
    pub reflector: Option<u8>,
}

impl SpinMap {
    pub const fn new(sign: i8, reflector: Option<u8>) -> Self {
        Self { sign, reflector }
    }

    pub fn apply_spin(&self, s: &PhasedSpin) -> Result<PhasedSpin> {
        let mapped = match self.reflector {
            Some(mu) => improper_map(s, mu)?,
            None => s.clone(),
        };
        Ok(if self.sign < 0 { mapped.negated() } else { mapped })
    }

    pub fn apply_vec(&self, v: &Multivector) -> Result<Multivector> {
        self.apply_vec_in(v, None)
    }

    /// As [`SpinMap::apply_vec`] with the reflector `İσ_μ` taken in the
    /// frame `R σ_j R†`.
    pub fn apply_vec_in(&self, v: &Multivector, frame: Option<&Versor>) -> Result<Multivector> {
        let mapped = match self.reflector {
            Some(mu) => {
                let refl = Versor::reflector(mu)?;
                let refl = match frame {
                    Some(r) => Versor::new(sandwich(r, refl.as_mv(), false)?)?,
                    None => refl,
                };
                sandwich(&refl, v, true)?
            }
            None => v.clone(),
        };
        Ok(mapped.scale(self.sign as f64))
    }
}

/// The maps applied to particles 1 and 2 in one superposed configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairConfig {
    pub first: SpinMap,
    pub second: SpinMap,
}

impl PairConfig {
    /// `(s_A·w, s_A·İσ_μ w İσ_μ)` and its counterpart `(s_B·İσ_μ w İσ_μ, s_B·w)`.
    fn swapped_pair(mu: u8, sign_a: i8, sign_b: i8) -> [PairConfig; 2] {
        [
            PairConfig {
                first: SpinMap::new(sign_a, None),
                second: SpinMap::new(sign_a, Some(mu)),
            },
            PairConfig {
                first: SpinMap::new(sign_b, Some(mu)),
                second: SpinMap::new(sign_b, None),
            },
        ]
    }
}

/// Which realization of the measured pair is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellVariant {
    /// Unsigned detector vectors.
    Y,
    /// Detector vectors signed as in the orthogonal full-spin table.
    YPrime,
    /// Opposite signs in the two configurations; triplets 1 and 2 only.
    YDoublePrime,
}

impl std::fmt::Display for BellVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BellVariant::Y => "Y",
            BellVariant::YPrime => "Y'",
            BellVariant::YDoublePrime => "Y''",
        })
    }
}

/// Sign of both spins in the mutually orthogonal full-spin table:
/// `+` for `μ = 0, 1`, `−` for `μ = 2, 3`.
pub fn table_sign(mu: u8) -> i8 {
    if mu <= 1 {
        1
    } else {
        -1
    }
}

/// A maximally entangled pair `Y_(μ)`. Both spins share one phase variable.
#[derive(Debug, Clone)]
pub struct BellPair {
    mu: u8,
    variant: BellVariant,
    phase: PhaseVar,
    source: PhasedSpin,
    full: [PairConfig; 2],
    measured: [PairConfig; 2],
    pairs: [(PhasedSpin, PhasedSpin); 2],
}

impl BellPair {
    pub fn mu(&self) -> u8 {
        self.mu
    }

    pub fn variant(&self) -> BellVariant {
        self.variant
    }

    pub fn phase(&self) -> PhaseVar {
        self.phase
    }

    /// `S_σ(φ)`, the spin every configuration is built from.
    pub fn source(&self) -> &PhasedSpin {
        &self.source
    }

    /// Configuration left of the swap.
    pub fn pair_a(&self) -> &(PhasedSpin, PhasedSpin) {
        &self.pairs[0]
    }

    /// Configuration right of the swap.
    pub fn pair_b(&self) -> &(PhasedSpin, PhasedSpin) {
        &self.pairs[1]
    }

    pub fn pairs(&self) -> &[(PhasedSpin, PhasedSpin); 2] {
        &self.pairs
    }

    pub fn full_configs(&self) -> &[PairConfig; 2] {
        &self.full
    }

    /// Maps applied to the detector directions `(u, v)`.
    pub fn measured_configs(&self) -> &[PairConfig; 2] {
        &self.measured
    }
}

pub fn bell_state(mu: u8, variant: BellVariant) -> Result<BellPair> {
    bell_state_with_phase(mu, variant, PhaseVar::fresh())
}

pub fn bell_state_with_phase(mu: u8, variant: BellVariant, phase: PhaseVar) -> Result<BellPair> {
    let invalid = || Error::InvalidBell {
        mu,
        variant: variant.to_string(),
    };
    if mu > 3 || (variant == BellVariant::YDoublePrime && !(1..=2).contains(&mu)) {
        return Err(invalid());
    }
    let s = table_sign(mu);
    let full = match variant {
        BellVariant::Y | BellVariant::YPrime => PairConfig::swapped_pair(mu, s, s),
        BellVariant::YDoublePrime => PairConfig::swapped_pair(mu, s, -s),
    };
    let measured = match variant {
        BellVariant::Y => PairConfig::swapped_pair(mu, 1, 1),
        BellVariant::YPrime => PairConfig::swapped_pair(mu, s, s),
        BellVariant::YDoublePrime => PairConfig::swapped_pair(mu, s, -s),
    };
    let source = make_spin(SpinBasis::Up, phase)?;
    let realize = |c: &PairConfig| -> Result<(PhasedSpin, PhasedSpin)> {
        Ok((c.first.apply_spin(&source)?, c.second.apply_spin(&source)?))
    };
    let pairs = [realize(&full[0])?, realize(&full[1])?];
    Ok(BellPair {
        mu,
        variant,
        phase,
        source,
        full,
        measured,
        pairs,
    })
}

/// Standard two-qubit Bell vector reproducing the correlations of `Y_(μ)`,
/// as established by the differential tests against the matrix oracle.
pub fn standard_name(mu: u8) -> Result<crate::oracle::BellName> {
    use crate::oracle::BellName;
    match mu {
        0 => Ok(BellName::PsiMinus),
        1 => Ok(BellName::PhiMinus),
        2 => Ok(BellName::PhiPlus),
        3 => Ok(BellName::PsiPlus),
        _ => Err(Error::InvalidBell {
            mu,
            variant: "any".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::vec3;
    use crate::spin::Handedness;

    #[test]
    fn singlet_spins_are_inversions() {
        let b = bell_state(0, BellVariant::Y).unwrap();
        let (s1, s2) = b.pair_a();
        assert_eq!(s2.mv(), &-s1.mv());
        assert_eq!(s1.phase(), s2.phase());
        assert_ne!(s1.hand(), s2.hand());
    }

    #[test]
    fn table_rows_at_zero_phase() {
        // ½(σ3+σ1+σ2), ½(σ3−σ1+σ2) for μ = 1
        let b = bell_state(1, BellVariant::Y).unwrap();
        let (s1, s2) = b.pair_a();
        assert!(s1.eval(0.0).unwrap().approx_eq(&vec3(0.5, 0.5, 0.5), 1e-15));
        assert!(s2.eval(0.0).unwrap().approx_eq(&vec3(-0.5, 0.5, 0.5), 1e-15));
        let (t1, t2) = b.pair_b();
        assert_eq!(t1.mv(), s2.mv());
        assert_eq!(t2.mv(), s1.mv());

        let rows = [
            (0, [0.5, 0.5, 0.5], [-0.5, -0.5, -0.5]),
            (2, [-0.5, -0.5, -0.5], [-0.5, 0.5, -0.5]),
            (3, [-0.5, -0.5, -0.5], [-0.5, -0.5, 0.5]),
        ];
        for (mu, a, c) in rows {
            let b = bell_state(mu, BellVariant::Y).unwrap();
            let (s1, s2) = b.pair_a();
            assert!(s1.eval(0.0).unwrap().approx_eq(&vec3(a[0], a[1], a[2]), 1e-15));
            assert!(s2.eval(0.0).unwrap().approx_eq(&vec3(c[0], c[1], c[2]), 1e-15));
        }
    }

    #[test]
    fn partners_have_opposite_hand_and_shared_phase() {
        for mu in 0..4 {
            for variant in [BellVariant::Y, BellVariant::YPrime, BellVariant::YDoublePrime] {
                let Ok(b) = bell_state(mu, variant) else {
                    continue;
                };
                for (s1, s2) in b.pairs() {
                    assert_ne!(s1.hand(), s2.hand());
                    assert_eq!(s1.phase(), b.phase());
                    assert_eq!(s2.phase(), b.phase());
                    let hands = [s1.hand(), s2.hand()];
                    assert!(hands.contains(&Handedness::Left));
                }
            }
        }
    }

    #[test]
    fn triplet_partner_is_reflection() {
        let b = bell_state(3, BellVariant::Y).unwrap();
        let (s1, s2) = b.pair_a();
        assert_eq!(improper_map(s1, 3).unwrap().mv(), s2.mv());
    }

    #[test]
    fn invalid_combinations() {
        assert!(bell_state(4, BellVariant::Y).is_err());
        assert!(bell_state(0, BellVariant::YDoublePrime).is_err());
        assert!(bell_state(3, BellVariant::YDoublePrime).is_err());
        assert!(bell_state(2, BellVariant::YDoublePrime).is_ok());
    }
}
