use super::{BellPair, BellVariant, PairConfig};
use crate::clifford::{Multivector, Scalar, Versor};
use crate::error::{Error, Result};
use crate::phase::TrigPoly;
use crate::sigma::{self, components, sigma};
use crate::spin::PhasedMv;
use crate::tolerance::TOL;

/// Intrinsic total spin of a pair.
#[derive(Debug, Clone)]
pub struct TotalSpin {
    /// Configuration average of `S_(1) + S_(2)`.
    pub mv: PhasedMv,
    /// Configuration average of `(S_(1) + S_(2))²`, still phase dependent.
    pub square: TrigPoly,
    /// Phase average of [`TotalSpin::square`], units ħ².
    pub expected_square: f64,
    /// `⟨S_tot⟩`.
    pub expected: Multivector,
    /// `⟨S_tot⟩²`.
    pub expected_vector_square: f64,
}

pub fn total_spin(b: &BellPair) -> Result<TotalSpin> {
    let var = [b.phase()];
    let mut mv = PhasedMv::zero(b.source().mv().algebra());
    let mut square = TrigPoly::zero();
    for (s1, s2) in b.pairs() {
        let sum = s1.mv().try_add(s2.mv())?;
        square = square.add(&sum.gp(&sum)?.scalar_part().scale(0.5));
        mv = mv.try_add(&sum.scale(0.5))?;
    }
    let expected = mv.try_map(|c| c.expect(&var).as_constant())?;
    let expected_vector_square = expected.gp(&expected)?.scalar_part();
    Ok(TotalSpin {
        expected_square: square.expect(&var).as_constant()?,
        mv,
        square,
        expected,
        expected_vector_square,
    })
}

/// Configuration average of `2 S_(1)·S_(2)` as a polynomial in the phase.
pub fn intrinsic_correlation_poly(b: &BellPair) -> Result<TrigPoly> {
    let mut acc = TrigPoly::zero();
    for (s1, s2) in b.pairs() {
        acc = acc.add(&s1.mv().gp(s2.mv())?.scalar_part());
    }
    Ok(acc)
}

/// Phase average of `2 S_(1)·S_(2)`, units ħ².
pub fn intrinsic_correlation(b: &BellPair) -> Result<f64> {
    intrinsic_correlation_poly(b)?.expect(&[b.phase()]).as_constant()
}

/// Bipartite expectation evaluated along three independent routes.
#[derive(Debug, Clone, Copy)]
pub struct BipartiteRoutes {
    /// `½ Σ_c ⟨a1 a2⟩₀` over the two configurations.
    pub average: f64,
    /// `½ Σ_c ⟨(σ3 a1)† (σ3 a2)⟩₀`.
    pub bivector: f64,
    /// `½ ⟨Σ_c a1 a2⟩₀`, scalar part taken after summing.
    pub alt_sum: f64,
}

impl BipartiteRoutes {
    pub fn spread(&self) -> f64 {
        let v = [self.average, self.bivector, self.alt_sum];
        let max = v.iter().copied().fold(f64::MIN, f64::max);
        let min = v.iter().copied().fold(f64::MAX, f64::min);
        max - min
    }
}

fn measured_vectors(
    c: &PairConfig,
    u: &Multivector,
    v: &Multivector,
    frame: Option<&Versor>,
) -> Result<(Multivector, Multivector)> {
    Ok((c.first.apply_vec_in(u, frame)?, c.second.apply_vec_in(v, frame)?))
}

fn routes(b: &BellPair, u: &Multivector, v: &Multivector, frame: Option<&Versor>) -> Result<BipartiteRoutes> {
    sigma::require_unit(u)?;
    sigma::require_unit(v)?;
    let s3 = match frame {
        Some(r) => crate::clifford::sandwich(r, &sigma(3), false)?,
        None => sigma(3),
    };
    let mut average = 0.0;
    let mut bivector = 0.0;
    let mut summed = Multivector::zero(u.algebra());
    for c in b.measured_configs() {
        let (a1, a2) = measured_vectors(c, u, v, frame)?;
        let prod = a1.gp(&a2)?;
        average += 0.5 * prod.scalar_part();
        let left = s3.gp(&a1)?.reverse();
        bivector += 0.5 * left.gp(&s3.gp(&a2)?)?.scalar_part();
        summed = summed.try_add(&prod)?;
    }
    Ok(BipartiteRoutes {
        average,
        bivector,
        alt_sum: 0.5 * summed.grade_project(0)?.scalar_part(),
    })
}

pub fn bipartite_routes(b: &BellPair, u: &Multivector, v: &Multivector) -> Result<BipartiteRoutes> {
    routes(b, u, v, None)
}

/// Normalized correlation `⟨S_(1) S_(2)⟩₀ · 4/ħ²` for detectors `u`, `v`.
/// Fails with [`Error::RouteMismatch`] if the evaluation routes disagree.
pub fn bipartite_expectation(b: &BellPair, u: &Multivector, v: &Multivector) -> Result<f64> {
    checked(routes(b, u, v, None)?)
}

/// As [`bipartite_expectation`] with the reference frame `σ_j` replaced
/// by `R σ_j R†`.
pub fn bipartite_expectation_in_frame(
    b: &BellPair,
    u: &Multivector,
    v: &Multivector,
    frame: &Versor,
) -> Result<f64> {
    checked(routes(b, u, v, Some(frame))?)
}

fn checked(r: BipartiteRoutes) -> Result<f64> {
    let spread = r.spread();
    if spread > TOL {
        return Err(Error::RouteMismatch(spread));
    }
    Ok(r.average)
}

/// `−u·v` for `μ = 0`, `u·v − 2u^j v^j` for `μ = j`, summed as
/// `Σ_k s_k u^k v^k` in component order.
pub fn bipartite_closed_form(mu: u8, u: &Multivector, v: &Multivector) -> Result<f64> {
    sigma::require_vector(u)?;
    sigma::require_vector(v)?;
    if mu > 3 {
        return Err(Error::InvalidBell {
            mu,
            variant: "any".into(),
        });
    }
    let (cu, cv) = (components(u), components(v));
    let sign = |k: usize| match mu {
        0 => -1.0,
        j if k + 1 == j as usize => -1.0,
        _ => 1.0,
    };
    Ok((0..3).fold(0.0, |acc, k| acc + sign(k) * cu[k] * cv[k]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Particle {
    First,
    Second,
}

/// One-particle expectation `½ Σ_c σ3·a_k` for the detector `direction`
/// of the chosen particle. Triplets 1 and 2 need the signed variants.
pub fn partial_expectation(b: &BellPair, direction: &Multivector, which: Particle) -> Result<f64> {
    sigma::require_unit(direction)?;
    if b.variant() == BellVariant::Y && (1..=2).contains(&b.mu()) {
        return Err(Error::InvalidBell {
            mu: b.mu(),
            variant: b.variant().to_string(),
        });
    }
    let mut acc = 0.0;
    for c in b.measured_configs() {
        let map = match which {
            Particle::First => c.first,
            Particle::Second => c.second,
        };
        acc += 0.5 * sigma(3).gp(&map.apply_vec(direction)?)?.scalar_part();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entangle::bell_state;
    use crate::sigma::{from_spherical, vec3};

    #[test]
    fn total_spin_values() {
        let want_sq = [0.0, 2.0, 2.0, 2.0];
        let want_vec_sq = [0.0, 1.0, 1.0, 0.0];
        for mu in 0..4u8 {
            let b = bell_state(mu, BellVariant::Y).unwrap();
            let t = total_spin(&b).unwrap();
            assert!((t.expected_square - want_sq[mu as usize]).abs() < 1e-15, "μ={mu}");
            assert!((t.expected_vector_square - want_vec_sq[mu as usize]).abs() < 1e-15);
        }
        let t0 = total_spin(&bell_state(0, BellVariant::Y).unwrap()).unwrap();
        assert!(t0.mv.is_zero(0.0));
        let t3 = total_spin(&bell_state(3, BellVariant::Y).unwrap()).unwrap();
        assert_eq!(t3.square, TrigPoly::constant(2.0));
    }

    #[test]
    fn triplet_square_depends_on_phase() {
        // (S_tot)² = 2 + sin 2φ for μ = 1 and 2 − sin 2φ for μ = 2
        for (mu, sign) in [(1u8, 1.0), (2, -1.0)] {
            let b = bell_state(mu, BellVariant::Y).unwrap();
            let t = total_spin(&b).unwrap();
            let want = TrigPoly::constant(2.0).add(&TrigPoly::sin(b.phase(), 2).scale(sign));
            assert!(t.square.approx_eq(&want, 1e-15), "μ={mu}: {}", t.square);
        }
    }

    #[test]
    fn intrinsic_values_and_closure() {
        let want = [-1.5, 0.5, 0.5, 0.5];
        let mut sum = 0.0;
        for mu in 0..4u8 {
            let c = intrinsic_correlation(&bell_state(mu, BellVariant::Y).unwrap()).unwrap();
            assert!((c - want[mu as usize]).abs() < 1e-15);
            sum += c;
        }
        assert_eq!(sum, 0.0);
        let b0 = bell_state(0, BellVariant::Y).unwrap();
        assert_eq!(intrinsic_correlation_poly(&b0).unwrap(), TrigPoly::constant(-1.5));
    }

    #[test]
    fn bipartite_examples() {
        let b0 = bell_state(0, BellVariant::Y).unwrap();
        let b3 = bell_state(3, BellVariant::Y).unwrap();
        assert_eq!(bipartite_expectation(&b0, &sigma(2), &sigma(2)).unwrap(), -1.0);
        assert_eq!(bipartite_expectation(&b3, &sigma(3), &sigma(3)).unwrap(), -1.0);
        assert_eq!(bipartite_expectation(&b3, &sigma(1), &sigma(1)).unwrap(), 1.0);
        let u = from_spherical(0.7, 2.1);
        let v = from_spherical(2.5, -0.4);
        for mu in 0..4 {
            for variant in [BellVariant::Y, BellVariant::YPrime, BellVariant::YDoublePrime] {
                let Ok(b) = bell_state(mu, variant) else { continue };
                let e = bipartite_expectation(&b, &u, &v).unwrap();
                let want = bipartite_closed_form(mu, &u, &v).unwrap();
                assert!((e - want).abs() < 1e-15);
            }
        }
        assert!(bipartite_expectation(&b0, &vec3(1.0, 1.0, 0.0), &u).is_err());
    }

    #[test]
    fn partial_examples() {
        let u = from_spherical(0.9, 0.3);
        let b1 = bell_state(1, BellVariant::YPrime).unwrap();
        assert_eq!(partial_expectation(&b1, &sigma(3), Particle::First).unwrap(), 1.0);
        let b2 = bell_state(2, BellVariant::YPrime).unwrap();
        assert_eq!(partial_expectation(&b2, &sigma(3), Particle::Second).unwrap(), -1.0);
        for which in [Particle::First, Particle::Second] {
            assert!(partial_expectation(&bell_state(0, BellVariant::Y).unwrap(), &u, which)
                .unwrap()
                .abs()
                < 1e-15);
        }
        assert!(partial_expectation(&bell_state(1, BellVariant::Y).unwrap(), &u, Particle::First).is_err());
    }
}
