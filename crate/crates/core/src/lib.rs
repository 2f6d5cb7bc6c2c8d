//! Bell-operator violation and distillability analysis for N-qubit states.
//!
//! The crate is organised in three layers:
//!
//! * [`algebra`]: dense linear algebra on the 2^N dimensional qubit space
//!   (tensor products, Pauli observables, partial transpose, local
//!   measurement, the GHZ basis).
//! * [`bell`]: MBK and general WWZB correlation Bell operators, exhaustive
//!   local-variable bounds, and see-saw maximisation over measurement
//!   directions.
//! * [`distill`]: converts an amount of violation into distillability
//!   structure (NPPT cuts, group size, full distillability) and provides the
//!   reference state families.
//!
//! Qubit 0 is always the leftmost tensor factor, i.e. the most significant
//! bit of a computational basis index.
//!
//! ```
//! use belldist::{classify, gen_noisy_ghz, nppt_scan, optimize_settings, Family};
//!
//! let rho = gen_noisy_ghz(5, 0.6)?;
//! let best = optimize_settings(&rho, &Family::Mbk, 32, 0)?;
//! assert!((best.value - 0.6 * 4.0).abs() < 1e-6);
//! let report = classify(best.value, 5);
//! assert_eq!(report.p_min, Some(3));
//! assert_eq!(nppt_scan(&rho)?.nppt_count(), 15);
//! # Ok::<(), belldist::Error>(())
//! ```

pub mod algebra;
pub mod bell;
pub mod distill;
mod error;
pub mod tol;

pub use error::{Error, Result};

pub use algebra::{
    kron, measure_qubit, min_eigenvalue, overlap, partial_trace, partial_transpose,
    pauli_observable, Bipartition, ComplexMatrix, DensityMatrix, GhzSign, MeasurementOutcome,
    PureState, UnitVector3,
};
pub use bell::{
    bell_value, classical_bound, mbk_operator, optimize_settings, wwzb_operator, BellOperator,
    Family, MeasurementSettings, OptimizeOptions, Optimized, WwzbSpec,
};
pub use distill::{
    classify, depolarize_ghz_diagonal, full_distillability_witness, gen_dur_state, gen_ghz_padded,
    gen_noisy_ghz, nppt_scan, reduce_by_measurement, GhzDiagonalState, PartitionScan, Reduction,
    ViolationReport, Witness,
};
