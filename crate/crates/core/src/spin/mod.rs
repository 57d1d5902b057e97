//! Spin-1/2 as a vector triplet with a gauge phase.
//!
//! A spin is `½(n + (a + b)_ψ)` where `n` is the phase-insensitive axis,
//! `a, b` span the plane orthogonal to `n`, and `(v)_ψ` rotates `v` by the
//! phase angle `ψ` about `n`. All quantities are in units of ħ.

mod brackets;
mod frame;
mod measure;
mod spinor;

use std::collections::HashMap;

use crate::clifford::{orientation, sandwich, Multivector, Scalar, Versor};
use crate::error::{Error, Result};
use crate::phase::{PhaseVar, TrigPoly};
use crate::sigma::{self, pseudoscalar, sigma};

pub use brackets::{axis_projections, equal_phase_bracket, expectation_bracket, levi_civita};
pub use frame::{reduced_spinors, reduced_spinors_about, sta_rotor_pair, DirectionFrame, ReducedSpinorPair};
pub use measure::{sg_measure, MeasurementRecord};
pub use spinor::{
    reduced_gram, sg_spinor_transform, spinor_compose, spinor_compose_two_sided, spinor_gram,
    spinor_gram_poly, spinor_terms, SpinorForm,
};

/// Multivector with trigonometric-polynomial coefficients.
pub type PhasedMv = Multivector<TrigPoly>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn flipped(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

/// Phase angle `ψ = sign·φ + offset`, measured right-handedly about the
/// spin's own axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseLabel {
    pub var: PhaseVar,
    pub sign: i8,
    pub offset: f64,
}

impl PhaseLabel {
    pub fn new(var: PhaseVar) -> Self {
        Self {
            var,
            sign: 1,
            offset: 0.0,
        }
    }

    /// `(cos ψ, sin ψ)` as polynomials in `var`.
    pub fn cos_sin(&self) -> (TrigPoly, TrigPoly) {
        let (sd, cd) = self.offset.sin_cos();
        let s = self.sign as f64;
        let c = TrigPoly::cos(self.var, 1);
        let n = TrigPoly::sin(self.var, 1);
        let cos = c.scale(cd).add(&n.scale(-s * sd));
        let sin = c.scale(sd).add(&n.scale(s * cd));
        (cos, sin)
    }

    fn mirrored(self) -> Self {
        Self {
            sign: -self.sign,
            offset: -self.offset,
            ..self
        }
    }
}

/// Which spin [`make_spin`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinBasis {
    Up,
    Down,
    /// Frame spin `S_j` with axis `σ_j`, `j ∈ {1, 2, 3}`.
    Frame(u8),
}

/// A full spin: grade-1 multivector over the phase ring together with the
/// constituent triplet `[n, a, b]` it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasedSpin {
    mv: PhasedMv,
    triplet: [Multivector; 3],
    label: PhaseLabel,
    hand: Handedness,
}

/// `cos ψ − İn sin ψ`, the phase rotor squared.
fn phase_rotor(n: &Multivector, label: &PhaseLabel) -> Result<PhasedMv> {
    let (c, s) = label.cos_sin();
    let alg = n.algebra();
    let bivector: PhasedMv = (&pseudoscalar() * n).lift();
    PhasedMv::scalar(alg, c).try_sub(&bivector.mul_scalar(&s)?)
}

fn assemble(triplet: &[Multivector; 3], label: &PhaseLabel) -> Result<PhasedMv> {
    let [n, a, b] = triplet;
    let in_plane: PhasedMv = (a + b).lift();
    let rotating = phase_rotor(n, label)?.gp(&in_plane)?;
    Ok(n.lift::<TrigPoly>().try_add(&rotating)?.scale(0.5))
}

fn hand_of(triplet: &[Multivector; 3]) -> Result<Handedness> {
    match orientation(&triplet[0], &triplet[1], &triplet[2])? {
        1 => Ok(Handedness::Right),
        -1 => Ok(Handedness::Left),
        _ => Err(Error::NonInvertible("degenerate spin triplet".into())),
    }
}

impl PhasedSpin {
    /// Spin `½(n + (a + b)_ψ)`; `a` and `b` must be orthogonal to `n`.
    pub fn from_triplet(triplet: [Multivector; 3], label: PhaseLabel) -> Result<Self> {
        for v in &triplet {
            sigma::require_unit(v)?;
        }
        let mv = assemble(&triplet, &label)?;
        let hand = hand_of(&triplet)?;
        Ok(Self {
            mv,
            triplet,
            label,
            hand,
        })
    }

    pub fn mv(&self) -> &PhasedMv {
        &self.mv
    }

    /// Phase-insensitive direction `n`.
    pub fn axis(&self) -> &Multivector {
        &self.triplet[0]
    }

    pub fn triplet(&self) -> &[Multivector; 3] {
        &self.triplet
    }

    pub fn label(&self) -> PhaseLabel {
        self.label
    }

    pub fn phase(&self) -> PhaseVar {
        self.label.var
    }

    pub fn hand(&self) -> Handedness {
        self.hand
    }

    /// `S S̃`, a scalar polynomial; `3/4` for every spin.
    pub fn full_square(&self) -> Result<TrigPoly> {
        Ok(self.mv.gp(&self.mv.reverse())?.scalar_part())
    }

    /// Numeric multivector at phase `phi`.
    pub fn eval(&self, phi: f64) -> Result<Multivector> {
        let at = HashMap::from([(self.label.var, phi)]);
        self.mv.try_map(|c| c.eval(&at))
    }

    /// Substitutes `φ → φ + delta`.
    pub fn shift(&self, delta: f64) -> Self {
        let var = self.label.var;
        Self {
            mv: self.mv.map(|c| c.shift(var, delta)),
            triplet: self.triplet.clone(),
            label: PhaseLabel {
                offset: self.label.offset + self.label.sign as f64 * delta,
                ..self.label
            },
            hand: self.hand,
        }
    }

    /// `−S`, the inversion image.
    pub fn negated(&self) -> Self {
        improper_map(self, 0).expect("inversion index is valid")
    }

    /// Rebuilds the multivector from the triplet and label; agrees with
    /// [`PhasedSpin::mv`] up to rounding whichever transformations were applied.
    pub fn reassembled(&self) -> Result<PhasedMv> {
        assemble(&self.triplet, &self.label)
    }

    fn transformed(&self, v: &Versor, improper: bool) -> Result<Self> {
        let mv = sandwich(v, &self.mv, improper)?;
        let triplet = [0, 1, 2].map(|i| sandwich(v, &self.triplet[i], improper).map(|x| x.grade_part(1)));
        let [n, a, b] = triplet;
        let triplet = [n?, a?, b?];
        let (label, hand) = if improper {
            (self.label.mirrored(), self.hand.flipped())
        } else {
            (self.label, self.hand)
        };
        Ok(Self {
            mv,
            triplet,
            label,
            hand,
        })
    }
}

pub fn make_spin(basis: SpinBasis, phase: PhaseVar) -> Result<PhasedSpin> {
    let label = PhaseLabel::new(phase);
    match basis {
        SpinBasis::Up => make_spin(SpinBasis::Frame(3), phase),
        SpinBasis::Down => {
            let up = make_spin(SpinBasis::Up, phase)?;
            let s2 = Versor::new(sigma(2))?;
            up.transformed(&s2, false)
        }
        SpinBasis::Frame(j @ 1..=3) => {
            let next = |k: u8| (k % 3) + 1;
            let triplet = [sigma(j), sigma(next(j)), sigma(next(next(j)))];
            PhasedSpin::from_triplet(triplet, label)
        }
        SpinBasis::Frame(j) => Err(Error::InvalidFrameIndex(j)),
    }
}

/// Phase average of the spin: `½·axis`, a real grade-1 multivector.
pub fn spin_expectation(s: &PhasedSpin) -> Result<Multivector> {
    let var = [s.phase()];
    s.mv.try_map(|c| c.expect(&var).as_constant())
}

/// Rotates `s` so its axis lands on `target`, through `R_u R_a†` where
/// `R_a`, `R_u` are the canonical rotors taking `σ3` to the current axis and
/// to the target. The phase label is carried unchanged.
pub fn rotate_spin(s: &PhasedSpin, target: &Multivector) -> Result<PhasedSpin> {
    let to = DirectionFrame::new(target)?;
    let from = DirectionFrame::new(s.axis())?;
    let r = to.r_u().compose(&from.r_u().reverse())?;
    s.transformed(&r, false)
}

/// `İσ_μ S İσ_μ`: inversion for `μ = 0`, reflection through the plane
/// orthogonal to `σ_μ` otherwise. Flips handedness.
pub fn improper_map(s: &PhasedSpin, mu: u8) -> Result<PhasedSpin> {
    s.transformed(&Versor::reflector(mu)?, true)
}

/// True when two phased multivectors agree coefficient-wise within `tol`.
pub fn phased_approx_eq(a: &PhasedMv, b: &PhasedMv, tol: f64) -> bool {
    a.approx_eq(b, tol)
}

/// Largest coefficient of `a − b` over all blades and monomials.
pub fn phased_max_diff(a: &PhasedMv, b: &PhasedMv) -> f64 {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| x.sub(y).max_abs_coeff())
        .fold(0.0, f64::max)
}
