use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{grade_of, Algebra, Scalar};
use crate::error::{Error, Result};

/// Element of a Clifford algebra: one coefficient per basis blade, indexed
/// by blade bitmask.
#[derive(Clone)]
pub struct Multivector<S: Scalar = f64> {
    alg: &'static Algebra,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(alg: &'static Algebra) -> Self {
        Self {
            alg,
            coeffs: vec![S::zero(); alg.size()],
        }
    }

    pub fn scalar(alg: &'static Algebra, s: S) -> Self {
        Self::blade(alg, 0, s)
    }

    pub fn one(alg: &'static Algebra) -> Self {
        Self::scalar(alg, S::one())
    }

    /// `coeff · blade`; panics if `blade` is not a valid bitmask for `alg`.
    pub fn blade(alg: &'static Algebra, blade: usize, coeff: S) -> Self {
        assert!(blade < alg.size(), "blade {blade:#b} outside algebra");
        let mut mv = Self::zero(alg);
        mv.coeffs[blade] = coeff;
        mv
    }

    pub fn from_coeffs(alg: &'static Algebra, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != alg.size() {
            return Err(Error::Dimension(format!(
                "{} coefficients for an algebra with {} blades",
                coeffs.len(),
                alg.size()
            )));
        }
        Ok(Self { alg, coeffs })
    }

    /// Grade-1 element `Σ c_i e_i`.
    pub fn vector(alg: &'static Algebra, components: &[S]) -> Result<Self> {
        if components.len() != alg.dim() {
            return Err(Error::Dimension(format!(
                "{} vector components in dimension {}",
                components.len(),
                alg.dim()
            )));
        }
        let mut mv = Self::zero(alg);
        for (i, c) in components.iter().enumerate() {
            mv.coeffs[1 << i] = c.clone();
        }
        Ok(mv)
    }

    /// Unit pseudoscalar blade (all generators, canonical order).
    pub fn pseudoscalar(alg: &'static Algebra) -> Self {
        Self::blade(alg, alg.pseudoscalar_blade(), S::one())
    }

    pub fn algebra(&self) -> &'static Algebra {
        self.alg
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: usize) -> &S {
        &self.coeffs[blade]
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.alg.same_as(other.alg) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.alg.signature().to_string(),
                right: other.alg.signature().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a.add(b)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a.sub(b)))
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Self {
            alg: self.alg,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Multivector<T>> {
        Ok(Multivector {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|c| c.scale(k))
    }

    pub fn mul_scalar(&self, s: &S) -> Result<Self> {
        self.try_map(|c| c.try_mul(s))
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = vec![S::zero(); self.alg.size()];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero(0.0) {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero(0.0) {
                    continue;
                }
                let (sign, r) = self.alg.product(a, b);
                let term = ca.try_mul(cb)?;
                out[r] = if sign > 0 {
                    out[r].add(&term)
                } else {
                    out[r].sub(&term)
                };
            }
        }
        Ok(Self {
            alg: self.alg,
            coeffs: out,
        })
    }

    /// Product of a sequence, left to right.
    pub fn product_of(factors: &[&Self]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::Dimension("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| acc.gp(f))
    }

    /// `⟨a⟩_k`: keeps only blades of grade `k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.alg.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.alg.dim(),
            });
        }
        Ok(self.grade_part(k))
    }

    pub(crate) fn grade_part(&self, k: usize) -> Self {
        let mut out = self.clone();
        for (b, c) in out.coeffs.iter_mut().enumerate() {
            if grade_of(b) != k {
                *c = S::zero();
            }
        }
        out
    }

    /// Scalar (grade-0) coefficient, `⟨a⟩₀`.
    pub fn scalar_part(&self) -> S {
        self.coeffs[0].clone()
    }

    /// Even-grade part.
    pub fn even_part(&self) -> Self {
        let mut out = self.clone();
        for (b, c) in out.coeffs.iter_mut().enumerate() {
            if grade_of(b) % 2 == 1 {
                *c = S::zero();
            }
        }
        out
    }

    /// Reversion: the grade-k component picks up `(−1)^(k(k−1)/2)`.
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (b, c) in out.coeffs.iter_mut().enumerate() {
            let k = grade_of(b);
            if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
                *c = c.neg();
            }
        }
        out
    }

    /// Grades with a coefficient larger than `tol`.
    pub fn grades_present(&self, tol: f64) -> Vec<usize> {
        let mut grades: Vec<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero(tol))
            .map(|(b, _)| grade_of(b))
            .collect();
        grades.sort_unstable();
        grades.dedup();
        grades
    }

    pub fn is_grade(&self, k: usize, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(b, c)| grade_of(b) == k || c.is_zero(tol))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_zero(tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.alg.same_as(other.alg)
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| a.approx_eq(b, tol))
    }
}

impl Multivector<f64> {
    /// Embeds a real multivector into a multivector over another ring.
    pub fn lift<T: Scalar>(&self) -> Multivector<T> {
        self.map(|c| T::from_f64(*c))
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert!(self.alg.same_as(other.alg), "signature mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Vector components `c_i` of the grade-1 part.
    pub fn vector_components(&self) -> Vec<f64> {
        (0..self.alg.dim()).map(|i| self.coeffs[1 << i]).collect()
    }

    /// Scalar product of the grade-1 parts, `⟨u v⟩₀` for vectors.
    pub fn dot(&self, other: &Self) -> Result<f64> {
        Ok(self.grade_part(1).gp(&other.grade_part(1))?.coeffs[0])
    }

    /// Outer product of two vectors, `⟨u v⟩₂`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        Ok(self.grade_part(1).gp(&other.grade_part(1))?.grade_part(2))
    }

    /// Euclidean norm `sqrt(⟨a ã⟩₀)`; meaningful for Cl(3,0) elements.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Equality is exact coefficient comparison within the same algebra.
impl<S: Scalar> PartialEq for Multivector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(other.alg) && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for (b, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero(0.0) {
                list.entry(&self.alg.blade_name(b), c);
            }
        }
        list.finish()
    }
}

impl fmt::Display for Multivector<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let name = self.alg.blade_name(b);
            if first {
                if *c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if *c < 0.0 { '-' } else { '+' })?;
            }
            let mag = c.abs();
            match (b, mag == 1.0) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{name}")?,
                (_, false) => write!(f, "{mag}{name}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    /// Panics on signature mismatch; use [`Multivector::try_add`] otherwise.
    fn add(self, rhs: Self) -> Multivector<S> {
        self.try_add(rhs).expect("multivector add")
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        self.try_sub(rhs).expect("multivector sub")
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.map(|c| c.neg())
    }
}

impl Mul for &Multivector<f64> {
    type Output = Multivector<f64>;
    /// Geometric product; panics on signature mismatch.
    fn mul(self, rhs: Self) -> Multivector<f64> {
        self.gp(rhs).expect("geometric product")
    }
}
