use std::fs;
use std::path::Path;

use belldist::algebra::{ComplexMatrix, DensityMatrix};
use belldist::WwzbSpec;
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Density matrix on disk: row-major `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub n_qubits: usize,
    pub matrix: Vec<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix, label: Option<String>) -> Self {
        let m = rho.matrix();
        let matrix = (0..m.nrows())
            .map(|i| {
                (0..m.ncols())
                    .map(|j| vec![m[(i, j)].re, m[(i, j)].im])
                    .collect()
            })
            .collect();
        Self {
            n_qubits: rho.n_qubits(),
            matrix,
            label,
        }
    }

    /// Shape checks with `matrix[i][j]` diagnostics, then full density-matrix
    /// validation.
    pub fn to_state(&self) -> Result<DensityMatrix, CliError> {
        let invalid = |msg: String| CliError::Invalid(msg);
        if self.n_qubits == 0 || self.n_qubits > 10 {
            return Err(invalid(format!(
                "n_qubits: {} is outside 1..=10",
                self.n_qubits
            )));
        }
        let dim = 1usize << self.n_qubits;
        if self.matrix.len() != dim {
            return Err(invalid(format!(
                "matrix: expected {dim} rows for {} qubits, found {}",
                self.n_qubits,
                self.matrix.len()
            )));
        }
        let mut m = ComplexMatrix::zeros(dim, dim);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != dim {
                return Err(invalid(format!(
                    "matrix[{i}]: expected {dim} entries, found {}",
                    row.len()
                )));
            }
            for (j, entry) in row.iter().enumerate() {
                let &[re, im] = entry.as_slice() else {
                    return Err(invalid(format!(
                        "matrix[{i}][{j}]: expected a [re, im] pair, found {} numbers",
                        entry.len()
                    )));
                };
                m[(i, j)] = Complex64::new(re, im);
            }
        }
        DensityMatrix::new(m).map_err(|e| invalid(format!("matrix: {e}")))
    }
}

/// Two-setting correlation inequality given by its sign function.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub n_qubits: usize,
    /// `signs[s]` for each `N`-bit string `s`, qubit 0 most significant.
    pub signs: Vec<i8>,
}

impl SpecFile {
    pub fn to_spec(&self) -> Result<WwzbSpec, CliError> {
        let spec = WwzbSpec::new(self.n_qubits, self.signs.clone())
            .map_err(|e| CliError::Invalid(format!("signs: {e}")))?;
        spec.validate()
            .map_err(|e| CliError::Invalid(format!("signs: {e}")))?;
        Ok(spec)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
