//! Numerical tolerances shared by every module.

/// Hermiticity: max |a_ij - conj(a_ji)|.
pub const HERM: f64 = 1e-9;
/// Deviation of a density-matrix trace from 1.
pub const TRACE: f64 = 1e-9;
/// Deviation of a vector norm from 1.
pub const NORM: f64 = 1e-9;
/// Eigenvalues above `-PSD` count as non-negative.
pub const PSD: f64 = 1e-8;
/// Accuracy expected from Hermitian eigensolves.
pub const EIG: f64 = 1e-8;
/// Outcome probabilities at or below this are treated as impossible.
pub const PROB: f64 = 1e-12;
/// See-saw convergence: stop when a sweep improves by less than this.
pub const OPT: f64 = 1e-10;
/// Gradient norms at or below this leave a direction unchanged.
pub const GRAD: f64 = 1e-12;
