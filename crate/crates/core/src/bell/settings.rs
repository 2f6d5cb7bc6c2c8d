use rand::Rng;

use crate::algebra::{pauli_observable, ComplexMatrix, UnitVector3};
use crate::{Error, Result};

/// Two measurement directions per qubit: `O_i^1 = sigma(n_i)` and
/// `O_i^2 = sigma(n'_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSettings {
    pairs: Vec<[UnitVector3; 2]>,
}

impl MeasurementSettings {
    pub fn new(pairs: Vec<[UnitVector3; 2]>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidParameter(
                "measurement settings need at least one qubit".into(),
            ));
        }
        Ok(Self { pairs })
    }

    /// The same direction pair on every qubit.
    pub fn uniform(n_qubits: usize, first: UnitVector3, second: UnitVector3) -> Result<Self> {
        Self::new(vec![[first, second]; n_qubits])
    }

    pub fn random<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Self {
        let pairs = (0..n_qubits.max(1))
            .map(|_| [UnitVector3::random(rng), UnitVector3::random(rng)])
            .collect();
        Self { pairs }
    }

    pub fn n_qubits(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[[UnitVector3; 2]] {
        &self.pairs
    }

    pub fn pair(&self, qubit: usize) -> &[UnitVector3; 2] {
        &self.pairs[qubit]
    }

    /// `sigma(n_i)` for `setting = 0`, `sigma(n'_i)` for `setting = 1`.
    pub fn observable(&self, qubit: usize, setting: usize) -> ComplexMatrix {
        pauli_observable(&self.pairs[qubit][setting])
    }

    /// `n_i <-> n'_i` on every qubit.
    pub fn swapped(&self) -> Self {
        Self {
            pairs: self.pairs.iter().map(|[a, b]| [*b, *a]).collect(),
        }
    }

    /// Settings of the other qubits once qubit `k` is removed.
    pub fn without(&self, k: usize) -> Result<Self> {
        if k >= self.pairs.len() {
            return Err(Error::QubitOutOfRange {
                index: k,
                n_qubits: self.pairs.len(),
            });
        }
        let mut pairs = self.pairs.clone();
        pairs.remove(k);
        Self::new(pairs)
    }

    pub(crate) fn as_arrays(&self) -> Vec<[[f64; 3]; 2]> {
        self.pairs
            .iter()
            .map(|[a, b]| [a.as_array(), b.as_array()])
            .collect()
    }

    pub(crate) fn from_arrays(arrays: &[[[f64; 3]; 2]]) -> Self {
        let pairs = arrays
            .iter()
            .map(|[a, b]| {
                [
                    UnitVector3::normalize(*a, 0.0).expect("nonzero direction"),
                    UnitVector3::normalize(*b, 0.0).expect("nonzero direction"),
                ]
            })
            .collect();
        Self { pairs }
    }
}
