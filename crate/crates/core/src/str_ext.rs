//! The spacetime-reflection algebra Cl(2,3) with generators
//! `e0, e1, e2, e3, e5` of metric `(+, −, −, −, +)`, its polar (`x_j`) and
//! axial (`σ_j`) subspaces, and the spinor splits built from them.

use crate::clifford::{Algebra, Multivector};
use crate::error::{Error, Result};
use crate::sigma::{pseudoscalar, scalar, sigma};
use crate::tolerance::TOL;

/// Bit index of each generator in `(e0, e1, e2, e3, e5)` order.
pub const GENERATOR_LABELS: [u8; 5] = [0, 1, 2, 3, 5];

#[derive(Debug, Clone)]
pub struct StrFrame {
    /// `e0, e1, e2, e3, e5`.
    pub e: [Multivector; 5],
    /// `İ = e0 e5 e1 e2 e3`.
    pub pseudoscalar: Multivector,
    /// Polar vectors `x_j = e0 e_j`.
    pub x: [Multivector; 3],
    /// Axial vectors `σ_j = e0 e_j e5`.
    pub sigma: [Multivector; 3],
}

fn gen(i: usize) -> Multivector {
    Multivector::blade(Algebra::str(), 1 << i, 1.0)
}

pub fn build_str_frame() -> StrFrame {
    let e = [0, 1, 2, 3, 4].map(gen);
    let p = Multivector::product_of(&[&e[0], &e[4], &e[1], &e[2], &e[3]]).expect("same algebra");
    let x = [1, 2, 3].map(|j| &e[0] * &e[j]);
    let sigma = [1, 2, 3].map(|j| Multivector::product_of(&[&e[0], &e[j], &e[4]]).expect("same algebra"));
    StrFrame {
        e,
        pseudoscalar: p,
        x,
        sigma,
    }
}

impl StrFrame {
    /// Reciprocal vector `e^τ = ζ_ττ e_τ`.
    pub fn reciprocal(&self, tau: usize) -> Multivector {
        let m = Algebra::str().signature().metric()[tau] as f64;
        self.e[tau].scale(m)
    }

    /// Image of a Σ element: `σ_j ↦ e0 e_j e5`, products preserved.
    pub fn embed_sigma(&self, a: &Multivector) -> Result<Multivector> {
        if !a.algebra().same_as(Algebra::euclidean3()) {
            return Err(Error::UnsupportedSignature(a.algebra().signature().to_string()));
        }
        let mut out = Multivector::zero(Algebra::str());
        for (blade, c) in a.coeffs().iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let mut term = Multivector::one(Algebra::str());
            for j in 0..3 {
                if blade & (1 << j) != 0 {
                    term = &term * &self.sigma[j];
                }
            }
            out = &out + &term.scale(*c);
        }
        Ok(out)
    }

    /// Checks every structural identity of the frame; returns the first
    /// failure as a message.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let one = Multivector::one(Algebra::str());
        let metric = Algebra::str().signature().metric();
        for (i, e) in self.e.iter().enumerate() {
            if e * e != one.scale(metric[i] as f64) {
                return Err(format!("e{} squares to {}", GENERATOR_LABELS[i], e * e));
            }
        }
        for j in 0..3 {
            if &self.sigma[j] * &self.sigma[j] != one {
                return Err(format!("σ{} does not square to 1", j + 1));
            }
            if &self.x[j] * &self.x[j] != one {
                return Err(format!("x{} does not square to 1", j + 1));
            }
        }
        let triple = Multivector::product_of(&[&self.sigma[0], &self.sigma[1], &self.sigma[2]]).map_err(|e| e.to_string())?;
        if triple != self.pseudoscalar {
            return Err("σ1σ2σ3 differs from the pseudoscalar".into());
        }
        if &self.pseudoscalar * &self.pseudoscalar != one.scale(-1.0) {
            return Err("pseudoscalar does not square to −1".into());
        }
        for b in 0..Algebra::str().size() {
            let blade = Multivector::blade(Algebra::str(), b, 1.0);
            if &self.pseudoscalar * &blade != &blade * &self.pseudoscalar {
                return Err(format!("pseudoscalar fails to commute with blade {b:#07b}"));
            }
        }
        for t in 0..5 {
            for n in 0..5 {
                let s = (&self.reciprocal(t) * &self.e[n]).scalar_part();
                if s != if t == n { 1.0 } else { 0.0 } {
                    return Err(format!("e^{t}·e_{n} = {s}"));
                }
            }
        }
        let mismatches = sigma_table_mismatches(self);
        if mismatches > 0 {
            return Err(format!("{mismatches} Σ product table entries differ"));
        }
        Ok(())
    }
}

/// Number of blade pairs `(a, b)` of Σ whose product computed inside
/// Cl(2,3) differs from the Cl(3,0) product.
pub fn sigma_table_mismatches(frame: &StrFrame) -> usize {
    let sig = Algebra::euclidean3();
    let mut bad = 0;
    for a in 0..sig.size() {
        for b in 0..sig.size() {
            let ma = Multivector::blade(sig, a, 1.0);
            let mb = Multivector::blade(sig, b, 1.0);
            let inside = &frame.embed_sigma(&ma).expect("Σ") * &frame.embed_sigma(&mb).expect("Σ");
            let outside = frame.embed_sigma(&(&ma * &mb)).expect("Σ");
            if inside != outside {
                bad += 1;
            }
        }
    }
    bad
}

/// `e0 a e0`: fixes `σ_j`, negates `x_j`.
pub fn parity_conjugate(a: &Multivector) -> Result<Multivector> {
    let e0 = gen(0);
    if !a.algebra().same_as(Algebra::str()) {
        return Err(Error::UnsupportedSignature(a.algebra().signature().to_string()));
    }
    Ok(&(&e0 * a) * &e0)
}

/// `ψ = φ + χ` with `φ = ½(1 + e0)ψ`, `χ = ½(1 − e0)ψ`.
#[derive(Debug, Clone, PartialEq)]
pub struct StrSpinorSplit {
    pub psi: Multivector,
    pub phi: Multivector,
    pub chi: Multivector,
}

/// `½(1 + e0)` for `sign = 1`, `½(1 − e0)` for `sign = −1`.
pub fn time_projector(sign: f64) -> Multivector {
    let one = Multivector::one(Algebra::str());
    (&one + &gen(0).scale(sign)).scale(0.5)
}

pub fn spacetime_split(psi: &Multivector) -> Result<StrSpinorSplit> {
    if !psi.algebra().same_as(Algebra::str()) {
        return Err(Error::UnsupportedSignature(psi.algebra().signature().to_string()));
    }
    Ok(StrSpinorSplit {
        psi: psi.clone(),
        phi: &time_projector(1.0) * psi,
        chi: &time_projector(-1.0) * psi,
    })
}

/// Split of an even Σ element along σ3.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSplit {
    /// `½(1 + σ3) φ_P`.
    pub up_part: Multivector,
    /// `½(1 − σ3) φ_P`.
    pub down_part: Multivector,
    /// Up amplitude `a0 + İa3`, in the span of `{1, İ}`.
    pub phi_u: Multivector,
    /// Down amplitude `−a2 + İa1`, in the span of `{1, İ}`.
    pub phi_d: Multivector,
}

impl PauliSplit {
    /// `(|φ_u|, |φ_d|)` as real moduli.
    pub fn moduli(&self) -> (f64, f64) {
        (self.phi_u.norm(), self.phi_d.norm())
    }
}

/// Splits `φ_P = a0 + İ(a1σ1 + a2σ2 + a3σ3)` into up and down parts.
/// The amplitudes satisfy `φ_P ½(1 + σ3) = (φ_u + σ1 φ_d) ½(1 + σ3)`.
pub fn pauli_split(phi_p: &Multivector) -> Result<PauliSplit> {
    if !phi_p.algebra().same_as(Algebra::euclidean3()) {
        return Err(Error::UnsupportedSignature(phi_p.algebra().signature().to_string()));
    }
    for k in [1, 3] {
        if !phi_p.grade_project(k)?.is_zero(TOL) {
            return Err(Error::NotEven);
        }
    }
    let i = pseudoscalar();
    // ⟨φ İσ_j⟩₀ = −a_j
    let a = |j: u8| -> Result<f64> { Ok(-phi_p.gp(&(&i * &sigma(j)))?.scalar_part()) };
    let (a0, a1, a2, a3) = (phi_p.scalar_part(), a(1)?, a(2)?, a(3)?);
    let up = (&scalar(1.0) + &sigma(3)).scale(0.5);
    let down = (&scalar(1.0) - &sigma(3)).scale(0.5);
    Ok(PauliSplit {
        up_part: &up * phi_p,
        down_part: &down * phi_p,
        phi_u: &scalar(a0) + &i.scale(a3),
        phi_d: &scalar(-a2) + &i.scale(a1),
    })
}

/// `ρ (cos θ/2 − İσ2 sin θ/2)`.
pub fn pauli_rotor_form(rho: f64, theta: f64) -> Result<Multivector> {
    if rho < 0.0 {
        return Err(Error::NegativeModulus(rho));
    }
    let (s, c) = (theta / 2.0).sin_cos();
    let is2 = &pseudoscalar() * &sigma(2);
    Ok((&scalar(c) - &is2.scale(s)).scale(rho))
}
