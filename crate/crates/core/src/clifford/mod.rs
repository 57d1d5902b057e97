//! Real Clifford algebras Cl(p,q) with dense bitmask-indexed multivectors.
//!
//! A basis blade is identified by a bitmask over the generators: bit `i` set
//! means generator `i` is a factor, and the canonical blade lists its
//! generators in ascending index order. With at most five generators the
//! full product table (32 × 32) is built once per algebra and shared.
//!
//! Two algebras are used throughout the crate:
//!
//! * [`Algebra::euclidean3`]: Cl(3,0) on `σ1, σ2, σ3`, the orientation space.
//! * [`Algebra::str`]: Cl(2,3) on `e0, e1, e2, e3, e5` with metric
//!   `(+, −, −, −, +)`, the spacetime-reflection algebra.

mod multivector;
mod scalar;
mod versor;

use std::fmt;
use std::sync::{Mutex, OnceLock};

pub use multivector::Multivector;
pub use scalar::Scalar;
pub use versor::{orientation, rotor, sandwich, versor_inverse, Bracket, Versor};

use crate::error::{Error, Result};

/// Largest number of generators supported by the dense representation.
pub const MAX_DIM: usize = 5;

/// Metric of an orthonormal generator set: `metric[i] = e_i · e_i ∈ {+1, −1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    metric: Vec<i8>,
}

impl Signature {
    pub fn new(metric: &[i8]) -> Result<Self> {
        if metric.is_empty() || metric.len() > MAX_DIM {
            return Err(Error::UnsupportedSignature(format!(
                "{} generators (supported: 1..={MAX_DIM})",
                metric.len()
            )));
        }
        if let Some(bad) = metric.iter().find(|m| **m != 1 && **m != -1) {
            return Err(Error::UnsupportedSignature(format!(
                "metric entry {bad} is not ±1"
            )));
        }
        Ok(Self {
            metric: metric.to_vec(),
        })
    }

    /// `(+, +, +)`
    pub fn euclidean3() -> Self {
        Self {
            metric: vec![1, 1, 1],
        }
    }

    /// `(+, −, −, −, +)` in generator order `e0, e1, e2, e3, e5`.
    pub fn str() -> Self {
        Self {
            metric: vec![1, -1, -1, -1, 1],
        }
    }

    pub fn dim(&self) -> usize {
        self.metric.len()
    }

    pub fn metric(&self) -> &[i8] {
        &self.metric
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.metric.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *m > 0 { '+' } else { '-' })?;
        }
        write!(f, ")")
    }
}

/// Sign of the product of canonical blades `a` and `b`, ignoring the metric:
/// `(−1)^(transpositions needed to sort the concatenated generator list)`.
pub fn reorder_sign(a: usize, b: usize) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A Clifford algebra with its memoized blade product table.
#[derive(Debug)]
pub struct Algebra {
    sig: Signature,
    names: Vec<String>,
    /// `table[a * n + b] = (sign, a ^ b)` for blades `a`, `b`.
    table: Vec<(i8, u8)>,
}

impl Algebra {
    fn build(sig: Signature, names: Vec<String>) -> Self {
        let n = 1usize << sig.dim();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut sign = reorder_sign(a, b);
                let common = a & b;
                for (i, m) in sig.metric.iter().enumerate() {
                    if common & (1 << i) != 0 {
                        sign *= m;
                    }
                }
                table.push((sign, (a ^ b) as u8));
            }
        }
        Self { sig, names, table }
    }

    /// Cl(3,0) with generators `σ1, σ2, σ3`.
    pub fn euclidean3() -> &'static Algebra {
        static CELL: OnceLock<Algebra> = OnceLock::new();
        CELL.get_or_init(|| {
            Algebra::build(
                Signature::euclidean3(),
                vec!["σ1".into(), "σ2".into(), "σ3".into()],
            )
        })
    }

    /// Cl(2,3) with generators `e0, e1, e2, e3, e5`.
    pub fn str() -> &'static Algebra {
        static CELL: OnceLock<Algebra> = OnceLock::new();
        CELL.get_or_init(|| {
            Algebra::build(
                Signature::str(),
                ["e0", "e1", "e2", "e3", "e5"].map(String::from).to_vec(),
            )
        })
    }

    /// Interned algebra for an arbitrary signature. Each distinct signature
    /// is built once and lives for the rest of the program.
    pub fn for_signature(sig: &Signature) -> &'static Algebra {
        if *sig == Signature::euclidean3() {
            return Self::euclidean3();
        }
        if *sig == Signature::str() {
            return Self::str();
        }
        static REGISTRY: Mutex<Vec<&'static Algebra>> = Mutex::new(Vec::new());
        let mut reg = REGISTRY.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(found) = reg.iter().find(|a| a.sig == *sig) {
            return found;
        }
        let names = (0..sig.dim()).map(|i| format!("e{}", i + 1)).collect();
        let alg: &'static Algebra = Box::leak(Box::new(Algebra::build(sig.clone(), names)));
        reg.push(alg);
        alg
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.sig.dim()
    }

    /// Number of basis blades, `2^dim`.
    pub fn size(&self) -> usize {
        1 << self.sig.dim()
    }

    pub fn pseudoscalar_blade(&self) -> usize {
        self.size() - 1
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> (i8, usize) {
        let (s, r) = self.table[a * self.size() + b];
        (s, r as usize)
    }

    pub fn blade_name(&self, blade: usize) -> String {
        if blade == 0 {
            return "1".into();
        }
        let mut out = String::new();
        for (i, name) in self.names.iter().enumerate() {
            if blade & (1 << i) != 0 {
                out.push_str(name);
            }
        }
        out
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self.sig == other.sig
    }
}

pub fn grade_of(blade: usize) -> usize {
    blade.count_ones() as usize
}
