//! Dense linear algebra on N-qubit Hilbert space.

mod linalg;
mod ops;
mod state;

pub use linalg::{
    check_hermitian, hermitian_eigenvalues, kron, max_eigenvalue, min_eigenvalue, qubit_count,
    ComplexMatrix,
};
pub(crate) use linalg::{insert_bit, trace_product};
pub(crate) use ops::weighted_partial_trace;
pub use ops::{
    embed_single, ghz_basis_vector, ghz_state, measure_qubit, overlap, partial_trace,
    partial_transpose, pauli, pauli_observable, random_su2, GhzSign, MeasurementOutcome,
};
pub use state::{Bipartition, DensityMatrix, PureState, UnitVector3};
