use crate::clifford::{Multivector, Scalar, Versor};
use crate::error::Result;
use crate::phase::{PhaseVar, TrigPoly};
use crate::sigma::{sigma, sigma_mu};
use crate::spin::{make_spin, PhasedMv, SpinBasis};

fn reflector(mu: u8) -> Result<PhasedMv> {
    Ok(Versor::reflector(mu)?.into_mv().lift())
}

/// Overlap matrix `⟨Y_(μ)† Y_(ν)⟩₀` of the spinor forms.
///
/// `full = true`: `⟨(−İσ_μ S)† (İσ_ν S′_ν)⟩₀ = ⟨S İσ_μ S İσ_ν⟩₀`, phase
/// averaged. `full = false`: measured spins along σ3,
/// `⟨σ3 İσ_μ İσ_ν σ_ν σ3 σ_ν⟩₀`.
pub fn spinor_bell_gram(full: bool) -> Result<[[f64; 4]; 4]> {
    let mut g = [[0.0; 4]; 4];
    if full {
        let phase = PhaseVar::fresh();
        let s = make_spin(SpinBasis::Up, phase)?;
        for mu in 0..4u8 {
            let dagger = (-&reflector(mu)?.gp(s.mv())?).reverse();
            for nu in 0..4u8 {
                let sn: PhasedMv = sigma_mu(nu)?.lift();
                let s_prime = sn.gp(s.mv())?.gp(&sn)?;
                let right = reflector(nu)?.gp(&s_prime)?;
                let v = dagger.gp(&right)?.scalar_part();
                g[mu as usize][nu as usize] = v.expect(&[phase]).as_constant()?;
            }
        }
    } else {
        let s3 = sigma(3);
        for mu in 0..4u8 {
            let left = s3.gp(Versor::reflector(mu)?.as_mv())?;
            for nu in 0..4u8 {
                let sn = sigma_mu(nu)?;
                let right = Multivector::product_of(&[Versor::reflector(nu)?.as_mv(), &sn, &s3, &sn])?;
                g[mu as usize][nu as usize] = left.gp(&right)?.scalar_part();
            }
        }
    }
    Ok(g)
}

/// Off-diagonal check through `−⟨S σ_μ σ_ν S⟩₀ = ⟨S C σ_l S⟩₀`: the
/// largest coefficient of any off-diagonal entry, which vanishes without
/// phase averaging.
pub fn gram_pointwise_route() -> Result<f64> {
    let s = make_spin(SpinBasis::Up, PhaseVar::fresh())?;
    let mut worst: f64 = 0.0;
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            if mu == nu {
                continue;
            }
            let pair: PhasedMv = sigma_mu(mu)?.gp(&sigma_mu(nu)?)?.lift();
            let v: TrigPoly = s.mv().gp(&pair)?.gp(s.mv())?.scalar_part().neg();
            worst = worst.max(v.max_abs_coeff());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entangle::{bell_state, intrinsic_correlation, BellVariant};

    #[test]
    fn full_gram_is_diagonal() {
        let g = spinor_bell_gram(true).unwrap();
        let want = [-0.75, 0.25, 0.25, 0.25];
        for mu in 0..4 {
            for nu in 0..4 {
                if mu == nu {
                    assert!((g[mu][mu] - want[mu]).abs() < 1e-15);
                    let c = intrinsic_correlation(&bell_state(mu as u8, BellVariant::Y).unwrap()).unwrap();
                    assert!((g[mu][mu] - 0.5 * c).abs() < 1e-15);
                } else {
                    assert!(g[mu][nu].abs() < 1e-15, "({mu},{nu}) = {}", g[mu][nu]);
                }
            }
        }
    }

    #[test]
    fn measured_gram_is_diagonal() {
        let g = spinor_bell_gram(false).unwrap();
        for (mu, row) in g.iter().enumerate() {
            for (nu, x) in row.iter().enumerate() {
                assert_eq!(x.abs(), if mu == nu { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn pointwise_route() {
        assert!(gram_pointwise_route().unwrap() < 1e-15);
    }
}
