//! Exact real trigonometric polynomials in named gauge-phase variables.
//!
//! A [`TrigPoly`] is a finite sum of monomials, each a product over distinct
//! phase variables of `cos(kφ)` or `sin(kφ)` with `k ≥ 1`, plus a constant.
//! Products are expanded with the product-to-sum identities, so every
//! expression built from spins with phases stays exact. The phase average
//! ([`TrigPoly::expect`]) is the uniform average over the circle for each
//! listed variable: every monomial that contains one of them integrates to
//! zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::clifford::Scalar;
use crate::error::{Error, Result};
use crate::tolerance::{HARMONIC_CAP, PRUNE_TOL};

/// Opaque identity of a gauge-phase variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseVar(u64);

impl PhaseVar {
    /// A variable distinct from every other variable created in this process.
    pub fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        PhaseVar(NEXT.fetch_add(1, Ordering::Relaxed))
    }

    pub fn id(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PhaseVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Cos,
    Sin,
}

/// `cos(kφ)` or `sin(kφ)` for one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub var: PhaseVar,
    pub harmonic: u32,
    pub parity: Parity,
}

impl Factor {
    fn eval(&self, angle: f64) -> f64 {
        let x = self.harmonic as f64 * angle;
        match self.parity {
            Parity::Cos => x.cos(),
            Parity::Sin => x.sin(),
        }
    }
}

/// Product of factors over distinct variables, sorted by variable.
/// The empty monomial is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<Factor>);

impl Monomial {
    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    fn contains_any(&self, vars: &BTreeSet<PhaseVar>) -> bool {
        self.0.iter().any(|f| vars.contains(&f.var))
    }
}

/// `(factor, weight)` alternatives produced by multiplying two single-variable
/// factors; `None` means the factor collapsed to the constant 1.
fn single_var_product(a: &Factor, b: &Factor) -> Vec<(Option<Factor>, f64)> {
    let diff = a.harmonic as i64 - b.harmonic as i64;
    let sum = (a.harmonic + b.harmonic) as i64;
    let var = a.var;
    let cos = |k: i64, w: f64| -> Option<(Option<Factor>, f64)> {
        let k = k.unsigned_abs() as u32;
        if k == 0 {
            Some((None, w))
        } else {
            Some((
                Some(Factor {
                    var,
                    harmonic: k,
                    parity: Parity::Cos,
                }),
                w,
            ))
        }
    };
    let sin = |k: i64, w: f64| -> Option<(Option<Factor>, f64)> {
        if k == 0 {
            return None;
        }
        let w = if k < 0 { -w } else { w };
        Some((
            Some(Factor {
                var,
                harmonic: k.unsigned_abs() as u32,
                parity: Parity::Sin,
            }),
            w,
        ))
    };
    let terms = match (a.parity, b.parity) {
        (Parity::Cos, Parity::Cos) => [cos(diff, 0.5), cos(sum, 0.5)],
        (Parity::Sin, Parity::Sin) => [cos(diff, 0.5), cos(sum, -0.5)],
        (Parity::Sin, Parity::Cos) => [sin(sum, 0.5), sin(diff, 0.5)],
        (Parity::Cos, Parity::Sin) => [sin(sum, 0.5), sin(diff, -0.5)],
    };
    terms.into_iter().flatten().collect()
}

fn monomial_product(a: &Monomial, b: &Monomial, cap: u32) -> Result<Vec<(Monomial, f64)>> {
    // each entry: alternatives for one variable
    let mut slots: Vec<Vec<(Option<Factor>, f64)>> = Vec::new();
    let (mut i, mut j) = (0, 0);
    let (fa, fb) = (&a.0, &b.0);
    while i < fa.len() || j < fb.len() {
        match (fa.get(i), fb.get(j)) {
            (Some(x), Some(y)) if x.var == y.var => {
                if x.harmonic + y.harmonic > cap {
                    return Err(Error::HarmonicCap { var: x.var, cap });
                }
                slots.push(single_var_product(x, y));
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x.var < y.var => {
                slots.push(vec![(Some(*x), 1.0)]);
                i += 1;
            }
            (Some(_), Some(y)) => {
                slots.push(vec![(Some(*y), 1.0)]);
                j += 1;
            }
            (Some(x), None) => {
                slots.push(vec![(Some(*x), 1.0)]);
                i += 1;
            }
            (None, Some(y)) => {
                slots.push(vec![(Some(*y), 1.0)]);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let mut out = vec![(Vec::new(), 1.0)];
    for slot in slots {
        let mut next = Vec::with_capacity(out.len() * slot.len());
        for (factors, w) in &out {
            for (f, fw) in &slot {
                let mut nf: Vec<Factor> = factors.clone();
                if let Some(f) = f {
                    nf.push(*f);
                }
                next.push((nf, w * fw));
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|(f, w)| (Monomial(f), w)).collect())
}

/// Real trigonometric polynomial in phase variables.
#[derive(Clone, PartialEq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<Monomial, f64>,
}

impl TrigPoly {
    pub fn constant(c: f64) -> Self {
        let mut p = Self::default();
        p.accumulate(Monomial::default(), c);
        p
    }

    /// `cos(kφ)`; `k = 0` gives the constant 1.
    pub fn cos(var: PhaseVar, k: u32) -> Self {
        if k == 0 {
            return Self::constant(1.0);
        }
        Self::single(var, k, Parity::Cos)
    }

    /// `sin(kφ)`; `k = 0` gives zero.
    pub fn sin(var: PhaseVar, k: u32) -> Self {
        if k == 0 {
            return Self::default();
        }
        Self::single(var, k, Parity::Sin)
    }

    fn single(var: PhaseVar, k: u32, parity: Parity) -> Self {
        let mut p = Self::default();
        p.terms.insert(
            Monomial(vec![Factor {
                var,
                harmonic: k,
                parity,
            }]),
            1.0,
        );
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, f64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn constant_term(&self) -> f64 {
        self.terms.get(&Monomial::default()).copied().unwrap_or(0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    /// The value if no phase variable remains.
    pub fn as_constant(&self) -> Result<f64> {
        if self.is_constant() {
            Ok(self.constant_term())
        } else {
            Err(Error::PhaseDependent(self.to_string()))
        }
    }

    pub fn variables(&self) -> BTreeSet<PhaseVar> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|f| f.var))
            .collect()
    }

    /// Highest harmonic of `var` in any monomial.
    pub fn max_harmonic(&self, var: PhaseVar) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter())
            .filter(|f| f.var == var)
            .map(|f| f.harmonic)
            .max()
            .unwrap_or(0)
    }

    fn accumulate(&mut self, m: Monomial, c: f64) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if c.abs() >= PRUNE_TOL {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().abs() < PRUNE_TOL {
                    e.remove();
                }
            }
        }
    }

    fn pruned(mut self) -> Self {
        self.terms.retain(|_, c| c.abs() >= PRUNE_TOL);
        self
    }

    pub fn try_mul_capped(&self, rhs: &Self, cap: u32) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                for (m, w) in monomial_product(ma, mb, cap)? {
                    *out.entry(m).or_insert(0.0) += ca * cb * w;
                }
            }
        }
        Ok(Self { terms: out }.pruned())
    }

    /// Uniform phase average over each variable in `vars`: monomials that
    /// involve any of them are dropped.
    pub fn expect(&self, vars: &[PhaseVar]) -> Self {
        let set: BTreeSet<PhaseVar> = vars.iter().copied().collect();
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains_any(&set))
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }

    /// Average over every variable present.
    pub fn expect_all(&self) -> f64 {
        self.constant_term()
    }

    pub fn eval(&self, assignment: &HashMap<PhaseVar, f64>) -> Result<f64> {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for f in &m.0 {
                let angle = assignment.get(&f.var).ok_or(Error::MissingPhase(f.var))?;
                v *= f.eval(*angle);
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `var → var + delta`.
    pub fn shift(&self, var: PhaseVar, delta: f64) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let Some(pos) = m.0.iter().position(|f| f.var == var) else {
                out.accumulate(m.clone(), *c);
                continue;
            };
            let f = m.0[pos];
            let (s, co) = (f.harmonic as f64 * delta).sin_cos();
            let with = |parity| {
                let mut g = m.0.clone();
                g[pos] = Factor { parity, ..f };
                Monomial(g)
            };
            match f.parity {
                // cos k(φ+δ) = cos kφ cos kδ − sin kφ sin kδ
                Parity::Cos => {
                    out.accumulate(with(Parity::Cos), c * co);
                    out.accumulate(with(Parity::Sin), -c * s);
                }
                // sin k(φ+δ) = sin kφ cos kδ + cos kφ sin kδ
                Parity::Sin => {
                    out.accumulate(with(Parity::Sin), c * co);
                    out.accumulate(with(Parity::Cos), c * s);
                }
            }
        }
        out.pruned()
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

impl Scalar for TrigPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::constant(1.0)
    }

    fn from_f64(x: f64) -> Self {
        Self::constant(x)
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            *out.terms.entry(m.clone()).or_insert(0.0) += c;
        }
        out.pruned()
    }

    fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.try_mul_capped(rhs, HARMONIC_CAP)
    }

    fn scale(&self, k: f64) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
        .pruned()
    }

    fn is_zero(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.abs() <= tol)
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0.0 { '-' } else { '+' })?;
            } else if *c < 0.0 {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if m.is_constant() || mag != 1.0 {
                write!(f, "{mag}")?;
            }
            for factor in &m.0 {
                let name = match factor.parity {
                    Parity::Cos => "cos",
                    Parity::Sin => "sin",
                };
                if factor.harmonic == 1 {
                    write!(f, "{name}({})", factor.var)?;
                } else {
                    write!(f, "{name}({}{})", factor.harmonic, factor.var)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
