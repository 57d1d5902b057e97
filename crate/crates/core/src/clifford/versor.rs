use super::{Multivector, Scalar};
use crate::error::{Error, Result};
use crate::sigma::{self, pseudoscalar};
use crate::tolerance::TOL;

/// Which bracket [`Bracket::apply`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bracket {
    /// `ab − ba`
    Commutator,
    /// `ab + ba`
    Anticommutator,
}

impl Bracket {
    pub fn apply<S: Scalar>(self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        let ab = a.gp(b)?;
        let ba = b.gp(a)?;
        match self {
            Bracket::Commutator => ab.try_sub(&ba),
            Bracket::Anticommutator => ab.try_add(&ba),
        }
    }
}

/// A product of invertible vectors: `v ṽ` is a nonzero scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct Versor {
    mv: Multivector,
}

impl Versor {
    pub fn new(mv: Multivector) -> Result<Self> {
        let norm = mv.gp(&mv.reverse())?;
        let s = norm.scalar_part();
        if s.abs() <= TOL || !norm.is_grade(0, TOL * s.abs().max(1.0)) {
            return Err(Error::NonInvertible(format!("{norm}")));
        }
        Ok(Self { mv })
    }

    /// Improper map `İσ_μ` of Σ: inversion for `μ = 0`, reflection in the
    /// plane orthogonal to `σ_μ` otherwise.
    pub fn reflector(mu: u8) -> Result<Self> {
        let s = sigma::sigma_mu(mu)?;
        Ok(Self {
            mv: &pseudoscalar() * &s,
        })
    }

    pub fn as_mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_mv(self) -> Multivector {
        self.mv
    }

    /// `v ṽ` as a real number.
    pub fn norm_sq(&self) -> f64 {
        (&self.mv * &self.mv.reverse()).scalar_part()
    }

    pub fn reverse(&self) -> Self {
        Self {
            mv: self.mv.reverse(),
        }
    }

    pub fn compose(&self, other: &Versor) -> Result<Versor> {
        Versor::new(self.mv.gp(&other.mv)?)
    }
}

/// `v⁻¹ = ṽ / (v ṽ)`.
pub fn versor_inverse(v: &Versor) -> Result<Versor> {
    let n = v.norm_sq();
    if n.abs() <= TOL {
        return Err(Error::NonInvertible(n.to_string()));
    }
    Ok(Versor {
        mv: v.mv.reverse().scale(1.0 / n),
    })
}

/// `R = cos(θ/2) − İ n sin(θ/2)`: right-handed rotation by `angle` about the
/// unit Σ vector `axis`.
pub fn rotor(axis: &Multivector, angle: f64) -> Result<Versor> {
    sigma::require_unit(axis)?;
    let (s, c) = (angle / 2.0).sin_cos();
    let bivector = &pseudoscalar() * axis;
    let mv = &Multivector::scalar(axis.algebra(), c) - &bivector.scale(s);
    Ok(Versor { mv })
}

/// Two-sided action of a versor.
///
/// Proper: `v a ṽ`. Improper: `v a v`, which for a reflector `İσ_μ` is the
/// map `İσ_μ a İσ_μ = −σ_μ a σ_μ`.
pub fn sandwich<S: Scalar>(v: &Versor, a: &Multivector<S>, improper: bool) -> Result<Multivector<S>> {
    let left: Multivector<S> = v.mv.lift();
    let right: Multivector<S> = if improper {
        left.clone()
    } else {
        v.mv.reverse().lift()
    };
    left.gp(a)?.gp(&right)
}

/// Orientation of an ordered vector triple in Σ: the sign of the
/// pseudoscalar coefficient of `v1 ∧ v2 ∧ v3`, or 0 when coplanar.
pub fn orientation(v1: &Multivector, v2: &Multivector, v3: &Multivector) -> Result<i8> {
    for v in [v1, v2, v3] {
        sigma::require_vector(v)?;
    }
    let triple = Multivector::product_of(&[v1, v2, v3])?;
    let vol = *triple.coeff(triple.algebra().pseudoscalar_blade());
    Ok(if vol.abs() <= TOL {
        0
    } else if vol > 0.0 {
        1
    } else {
        -1
    })
}
