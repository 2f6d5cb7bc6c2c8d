//! From Bell violation to distillability structure.

mod classify;
mod depolarize;
mod reduce;
mod scan;
mod states;
mod witness;

pub use classify::{classify, exceeds_half_power, half_power, ViolationReport};
pub use depolarize::{depolarize_ghz_diagonal, GhzDiagonalState};
pub use reduce::{reduce_by_measurement, reduce_by_measurement_with, ReduceOptions, Reduction};
pub use scan::{nppt_scan, CutResult, PartitionScan};
pub use states::{
    gen_dur_state, gen_ghz_padded, gen_noisy_ghz, gen_product_state, random_local_unitary,
};
pub use witness::{full_distillability_witness, Witness};
