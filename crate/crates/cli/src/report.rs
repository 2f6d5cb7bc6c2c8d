use serde::{Deserialize, Serialize};

use crate::files::StateFile;

pub const TOOL: &str = "belldist";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n_qubits: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub p_min: Option<usize>,
    pub depth_bound: usize,
    pub fully_distillable: bool,
    pub bipartite_distillable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub cuts: usize,
    pub nppt_count: usize,
    pub worst_eigenvalue: f64,
    /// Bit `q` set when qubit `q` is on the side containing qubit 0.
    pub worst_mask: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessSummary {
    pub overlap: f64,
    pub passes: bool,
    pub certifies: bool,
    pub local_unitary_optimized: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub restarts: usize,
    pub family: String,
    pub input: InputDescriptor,
    pub violation: f64,
    /// Per qubit, the two measurement directions.
    pub settings: Vec<[[f64; 3]; 2]>,
    pub classification: Classification,
    pub scan: ScanSummary,
    pub witness: WitnessSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub restarts: usize,
    pub family: String,
    pub input: InputDescriptor,
    pub qubit: usize,
    pub input_value: f64,
    pub direction: [f64; 3],
    pub outcome: i8,
    pub probability: f64,
    pub achieved: f64,
    pub ratio: f64,
    pub normalization: f64,
    pub exhaustive_normalization: bool,
    /// Coefficient table of the reduced functional.
    pub reduced_coefficients: Vec<f64>,
    pub reduced_state: StateFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutEntry {
    pub mask: u64,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub min_eigenvalue: f64,
    pub nppt: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub tool: String,
    pub version: String,
    pub input: InputDescriptor,
    pub nppt_count: usize,
    pub cuts: Vec<CutEntry>,
}
