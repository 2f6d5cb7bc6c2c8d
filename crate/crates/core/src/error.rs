use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("kron of an empty factor list")]
    EmptyKron,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not Hermitian at ({row}, {col}): |a_ij - conj(a_ji)| = {deviation:.3e}")]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },
    #[error("trace is {0}, expected 1")]
    TraceNotOne(f64),
    #[error("matrix is not positive semidefinite: minimum eigenvalue {0:.3e}")]
    NotPositive(f64),
    #[error("vector is not normalised: norm {0}")]
    NotNormalized(f64),
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },
    #[error("operation needs at least {min} qubits, got {got}")]
    TooFewQubits { min: usize, got: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid bitstring: {0}")]
    InvalidBitstring(String),
    #[error("exhaustive local-variable enumeration refused for {n_qubits} qubits (limit {limit})")]
    ExhaustiveLimit { n_qubits: usize, limit: usize },
    #[error("invalid WWZB specification: {0}")]
    InvalidSpec(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(
        "measurement reduction guarantee not met: achieved {achieved} < {required} (input {input})"
    )]
    ReductionGuarantee {
        achieved: f64,
        required: f64,
        input: f64,
    },
}
