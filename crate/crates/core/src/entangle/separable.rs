use super::{PairConfig, SpinMap};
use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::exact;
use crate::phase::PhaseVar;
use crate::sigma::{self, components, sigma};
use crate::tolerance::TOL;
use crate::spin::{make_spin, sg_measure, SpinBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeparableKind {
    UpDown,
    DownUp,
    UpUp,
    DownDown,
}

impl SeparableKind {
    pub const ALL: [SeparableKind; 4] = [
        SeparableKind::UpDown,
        SeparableKind::DownUp,
        SeparableKind::UpUp,
        SeparableKind::DownDown,
    ];

    /// Spin bases of particles 1 and 2.
    pub fn bases(self) -> (SpinBasis, SpinBasis) {
        use SpinBasis::{Down, Up};
        match self {
            SeparableKind::UpDown => (Up, Down),
            SeparableKind::DownUp => (Down, Up),
            SeparableKind::UpUp => (Up, Up),
            SeparableKind::DownDown => (Down, Down),
        }
    }
}

/// Cross-superposition of pieces from two different entangled pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparablePair {
    pub kind: SeparableKind,
    pub configs: [PairConfig; 2],
}

pub fn separable_pair(kind: SeparableKind) -> SeparablePair {
    let c = |s1, r1, s2, r2| PairConfig {
        first: SpinMap::new(s1, r1),
        second: SpinMap::new(s2, r2),
    };
    // antiparallel: singlet piece then triplet-3 piece; parallel: triplets 1, 2
    let (base, flip) = match kind {
        SeparableKind::UpDown => ([c(1, None, 1, Some(0)), c(-1, Some(3), -1, None)], 1),
        SeparableKind::DownUp => ([c(1, None, 1, Some(0)), c(-1, Some(3), -1, None)], -1),
        SeparableKind::UpUp => ([c(1, None, 1, Some(1)), c(1, Some(2), 1, None)], 1),
        SeparableKind::DownDown => ([c(1, None, 1, Some(1)), c(1, Some(2), 1, None)], -1),
    };
    let configs = base.map(|p| PairConfig {
        first: SpinMap::new(p.first.sign * flip, p.first.reflector),
        second: SpinMap::new(p.second.sign * flip, p.second.reflector),
    });
    SeparablePair { kind, configs }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableExpectation {
    pub bipartite: f64,
    pub partials: (f64, f64),
}

/// Bipartite and one-particle expectations, the bipartite value as the
/// correctly rounded sum `½ Σ_c a1_c·a2_c` so that the cancellation between
/// configurations is exact. The geometric-product evaluation is kept as a
/// cross-check.
pub fn separable_expectation(s: &SeparablePair, u: &Multivector, v: &Multivector) -> Result<SeparableExpectation> {
    sigma::require_unit(u)?;
    sigma::require_unit(v)?;
    let mut terms = Vec::with_capacity(6);
    let mut via_product = 0.0;
    let mut p1 = 0.0;
    let mut p2 = 0.0;
    for c in &s.configs {
        let a1 = c.first.apply_vec(u)?;
        let a2 = c.second.apply_vec(v)?;
        let (c1, c2) = (components(&a1), components(&a2));
        terms.extend((0..3).map(|k| (0.5 * c1[k], c2[k])));
        via_product += 0.5 * a1.gp(&a2)?.scalar_part();
        p1 += 0.5 * sigma(3).gp(&a1)?.scalar_part();
        p2 += 0.5 * sigma(3).gp(&a2)?.scalar_part();
    }
    let bipartite = exact::dot_sum(terms);
    if (bipartite - via_product).abs() > TOL {
        return Err(Error::RouteMismatch((bipartite - via_product).abs()));
    }
    Ok(SeparableExpectation {
        bipartite,
        partials: (p1, p2),
    })
}

/// Product of single-spin measurement correlations of two unentangled
/// spins with the kind's bases.
pub fn separable_oracle(kind: SeparableKind, u: &Multivector, v: &Multivector) -> Result<SeparableExpectation> {
    let (b1, b2) = kind.bases();
    let m1 = sg_measure(&make_spin(b1, PhaseVar::fresh())?, u)?;
    let m2 = sg_measure(&make_spin(b2, PhaseVar::fresh())?, v)?;
    Ok(SeparableExpectation {
        bipartite: m1.correlation * m2.correlation,
        partials: (m1.correlation, m2.correlation),
    })
}
