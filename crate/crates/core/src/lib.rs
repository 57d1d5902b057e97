//! Geometric-algebra model of spin-1/2 as a vector with a gauge phase.
//!
//! The [`clifford`] kernel provides multivectors over Cl(3,0) and Cl(2,3)
//! with coefficients in any [`clifford::Scalar`] ring; [`phase`] supplies the
//! exact trigonometric-polynomial ring used for phased spins. [`spin`] and
//! [`entangle`] build single spins and two-spin states on top, [`oracle`]
//! is an independent Pauli-matrix reference, and [`str_ext`] covers the
//! Cl(2,3) embedding and spinor splits.

/// Version of this library, echoed in machine-readable reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod clifford;
pub mod entangle;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod phase;
pub mod sigma;
pub mod spin;
pub mod str_ext;
pub mod tolerance;

pub use clifford::{Algebra, Bracket, Multivector, Scalar, Signature, Versor};
pub use entangle::{bell_state, BellPair, BellVariant, Particle, SeparableKind};
pub use error::{Error, Result};
pub use oracle::{BellName, ComplexMatrix};
pub use phase::{PhaseVar, TrigPoly};
pub use spin::{make_spin, Handedness, PhasedMv, PhasedSpin, SpinBasis};
