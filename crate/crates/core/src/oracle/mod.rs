//! Standard two-level quantum mechanics with explicit complex matrices.
//!
//! Nothing here uses the Clifford product. [`sigma_to_matrix`] reads
//! multivector coefficients only, so comparisons against the geometric
//! algebra results are between independent computations.

mod bell;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

pub use num_complex::Complex64;

use crate::clifford::{Algebra, Multivector};
use crate::error::{Error, Result};
use crate::phase::PhaseVar;
use crate::spin::PhasedMv;

pub use bell::{born_probability, oracle_bipartite, oracle_partial, spin_state, standard_bell, BellName};

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        Ok(Self {
            dim,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let n = self.dim * rhs.dim;
        let mut m = Self::zeros(n);
        for (i, j) in (0..self.dim).flat_map(|i| (0..self.dim).map(move |j| (i, j))) {
            let a = self.get(i, j);
            for k in 0..rhs.dim {
                for l in 0..rhs.dim {
                    m.set(i * rhs.dim + k, j * rhs.dim + l, a * rhs.get(k, l));
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    /// Largest entrywise modulus of `self − rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.dim == rhs.dim && self.max_abs_diff(rhs) <= tol
    }

    /// Max-row-sum norm.
    fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self + &rhs.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut m = ComplexMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                for c in 0..n {
                    m.data[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        m
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<Complex64>> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c)).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `σ̂_0 = I`, `σ̂_1`, `σ̂_2`, `σ̂_3`.
pub fn pauli(mu: u8) -> Result<ComplexMatrix> {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    let rows: [[Complex64; 4]; 4] = [[o, z, z, o], [z, o, o, z], [z, -i, i, z], [o, z, z, -o]];
    let r = rows.get(mu as usize).ok_or(Error::InvalidReflector(mu))?;
    ComplexMatrix::from_rows(&[&r[..2], &r[2..]])
}

/// `u·σ̂` for a real 3-vector.
pub fn spin_operator(u: [f64; 3]) -> ComplexMatrix {
    (1..=3u8).fold(ComplexMatrix::zeros(2), |acc, j| {
        &acc + &pauli(j).expect("valid index").scale(c(u[j as usize - 1], 0.0))
    })
}

/// Matrix image of a Σ element: each blade maps to the ordered product of
/// the Pauli matrices of its generators.
pub fn sigma_to_matrix(a: &Multivector) -> Result<ComplexMatrix> {
    if !a.algebra().same_as(Algebra::euclidean3()) {
        return Err(Error::UnsupportedSignature(a.algebra().signature().to_string()));
    }
    let mut m = ComplexMatrix::zeros(2);
    for (blade, coeff) in a.coeffs().iter().enumerate() {
        if *coeff == 0.0 {
            continue;
        }
        let mut term = ComplexMatrix::identity(2);
        for j in 0..3u8 {
            if blade & (1 << j) != 0 {
                term = &term * &pauli(j + 1)?;
            }
        }
        m = &m + &term.scale(c(*coeff, 0.0));
    }
    Ok(m)
}

/// [`sigma_to_matrix`] of a phased multivector at the given phase values.
pub fn sigma_to_matrix_phased(a: &PhasedMv, assignment: &HashMap<PhaseVar, f64>) -> Result<ComplexMatrix> {
    sigma_to_matrix(&a.try_map(|p| p.eval(assignment))?)
}

/// `exp(A)` by scaling and squaring a truncated Taylor series.
pub fn expm(a: &ComplexMatrix) -> ComplexMatrix {
    let norm = a.norm_inf();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale(c(0.5f64.powi(squarings as i32), 0.0));
    let mut term = ComplexMatrix::identity(a.dim());
    let mut sum = term.clone();
    for k in 1..=20 {
        term = (&term * &scaled).scale(c(1.0 / k as f64, 0.0));
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::{pseudoscalar, sigma};

    #[test]
    fn pauli_products() {
        let i = c(0.0, 1.0);
        for j in 1..=3u8 {
            for k in 1..=3u8 {
                let prod = &pauli(j).unwrap() * &pauli(k).unwrap();
                let mut want = if j == k {
                    ComplexMatrix::identity(2)
                } else {
                    ComplexMatrix::zeros(2)
                };
                if j != k {
                    let l = 6 - j - k;
                    let eps = if (j % 3) + 1 == k { 1.0 } else { -1.0 };
                    want = &want + &pauli(l).unwrap().scale(i * eps);
                }
                assert!(prod.approx_eq(&want, 0.0));
            }
        }
    }

    #[test]
    fn pauli_properties() {
        for j in 1..=3 {
            let p = pauli(j).unwrap();
            assert_eq!(p.dagger(), p);
            assert!((&p * &p.dagger()).approx_eq(&ComplexMatrix::identity(2), 0.0));
            assert_eq!(p.trace(), c(0.0, 0.0));
        }
        assert!(pauli(4).is_err());
    }

    #[test]
    fn blade_images() {
        let m = sigma_to_matrix(&(&sigma(1) * &sigma(2))).unwrap();
        assert!(m.approx_eq(&pauli(3).unwrap().scale(c(0.0, 1.0)), 0.0));
        let m = sigma_to_matrix(&pseudoscalar()).unwrap();
        assert!(m.approx_eq(&ComplexMatrix::identity(2).scale(c(0.0, 1.0)), 0.0));
    }

    #[test]
    fn exponential_of_diagonal() {
        let a = pauli(3).unwrap().scale(c(0.0, -0.8));
        let e = expm(&a);
        assert!((e.get(0, 0) - c(0.0, -0.8).exp()).norm() < 1e-15);
        assert!((e.get(1, 1) - c(0.0, 0.8).exp()).norm() < 1e-15);
        let big = pauli(1).unwrap().scale(c(7.0, 0.0));
        let e = expm(&big);
        assert!((e.get(0, 0).re - 7f64.cosh()).abs() < 1e-9 * 7f64.cosh());
    }

    #[test]
    fn kronecker_dimensions() {
        let k = pauli(3).unwrap().kron(&pauli(1).unwrap());
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(0, 1), c(1.0, 0.0));
        assert_eq!(k.get(2, 3), c(-1.0, 0.0));
    }
}
