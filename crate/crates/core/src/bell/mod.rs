//! Bell operators of the two-setting full-correlation family: construction,
//! evaluation, local-variable bounds and see-saw maximisation.

mod correlation;
mod operator;
mod seesaw;
mod settings;
mod spec;

pub use correlation::{pauli_components, CorrelationTensor};
pub(crate) use operator::correlation_matrix;
pub use operator::{bell_value, mbk_operator, wwzb_operator, BellOperator, Family};
pub use seesaw::{
    optimize_settings, optimize_settings_with, restart_settings, seesaw, OptimizeOptions,
    Optimized, SeesawRun,
};
pub use settings::MeasurementSettings;
pub use spec::{
    best_strategy, classical_bound, mbk_coefficients, LvStrategy, WwzbSpec, EXHAUSTIVE_LIMIT,
};

/// The largest quantum value of any functional in the family, `2^((N-1)/2)`.
pub fn quantum_maximum(n_qubits: usize) -> f64 {
    2f64.powf((n_qubits as f64 - 1.0) / 2.0)
}
