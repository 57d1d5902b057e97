use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use super::{spin_operator, ComplexMatrix};

/// Standard Bell vectors in the σ3 product basis `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellName {
    PsiMinus,
    PsiPlus,
    PhiMinus,
    PhiPlus,
}

impl BellName {
    pub const ALL: [BellName; 4] = [
        BellName::PsiMinus,
        BellName::PsiPlus,
        BellName::PhiMinus,
        BellName::PhiPlus,
    ];
}

impl fmt::Display for BellName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellName::PsiMinus => "Psi-",
            BellName::PsiPlus => "Psi+",
            BellName::PhiMinus => "Phi-",
            BellName::PhiPlus => "Phi+",
        })
    }
}

pub fn standard_bell(name: BellName) -> [Complex64; 4] {
    let h = FRAC_1_SQRT_2;
    let r = |x: f64| Complex64::new(x, 0.0);
    match name {
        BellName::PsiMinus => [r(0.0), r(h), r(-h), r(0.0)],
        BellName::PsiPlus => [r(0.0), r(h), r(h), r(0.0)],
        BellName::PhiMinus => [r(h), r(0.0), r(0.0), r(-h)],
        BellName::PhiPlus => [r(h), r(0.0), r(0.0), r(h)],
    }
}

fn expectation(op: &ComplexMatrix, psi: &[Complex64]) -> f64 {
    let applied = op.apply(psi);
    psi.iter().zip(&applied).map(|(a, b)| a.conj() * b).sum::<Complex64>().re
}

/// `⟨ψ|(u·σ̂) ⊗ (v·σ̂)|ψ⟩`.
pub fn oracle_bipartite(name: BellName, u: [f64; 3], v: [f64; 3]) -> f64 {
    let op = spin_operator(u).kron(&spin_operator(v));
    expectation(&op, &standard_bell(name))
}

/// `⟨ψ|(u·σ̂) ⊗ I|ψ⟩` for particle 1, `⟨ψ|I ⊗ (u·σ̂)|ψ⟩` for particle 2.
pub fn oracle_partial(name: BellName, u: [f64; 3], first: bool) -> f64 {
    let id = ComplexMatrix::identity(2);
    let op = if first {
        spin_operator(u).kron(&id)
    } else {
        id.kron(&spin_operator(u))
    };
    expectation(&op, &standard_bell(name))
}

/// Pure state with Bloch angles `(θ, φ)`: `(cos θ/2, e^{iφ} sin θ/2)`.
pub fn spin_state(theta: f64, phi: f64) -> [Complex64; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    [Complex64::new(c, 0.0), Complex64::from_polar(s, phi)]
}

/// Born probabilities `(p⁺, p⁻)` of the projectors `(I ± u·σ̂)/2`.
pub fn born_probability(state: [Complex64; 2], u: [f64; 3]) -> (f64, f64) {
    let id = ComplexMatrix::identity(2);
    let op = spin_operator(u);
    let half = Complex64::new(0.5, 0.0);
    let plus = (&id + &op).scale(half);
    let minus = (&id - &op).scale(half);
    (expectation(&plus, &state), expectation(&minus, &state))
}
