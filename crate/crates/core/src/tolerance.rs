//! Numerical tolerances shared across the crate.

/// Default absolute tolerance for floating comparisons.
pub const TOL: f64 = 1e-12;

/// Allowed deviation of `|u|` from 1 for inputs documented as unit vectors.
pub const UNIT_TOL: f64 = 1e-9;

/// Trigonometric-polynomial coefficients below this magnitude are dropped.
pub const PRUNE_TOL: f64 = 1e-15;

/// Highest harmonic allowed per phase variable in a trigonometric polynomial.
pub const HARMONIC_CAP: u32 = 8;
