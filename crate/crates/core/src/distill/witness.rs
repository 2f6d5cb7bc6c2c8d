use crate::algebra::{ghz_state, overlap, DensityMatrix};
use crate::Result;

/// GHZ-overlap test for full distillability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    /// `<GHZ|rho|GHZ>` in the computational GHZ basis (`lambda_0^+`).
    pub overlap: f64,
    /// `overlap > 2/3`.
    pub passes: bool,
    /// The 2/3 criterion is a full-distillability certificate only for N > 3.
    pub certifies: bool,
    /// Always false: no local-unitary alignment is attempted, so a state that
    /// is GHZ-like in a rotated frame can fail.
    pub local_unitary_optimized: bool,
}

pub fn full_distillability_witness(rho: &DensityMatrix) -> Result<Witness> {
    let n = rho.n_qubits();
    let overlap = overlap(rho, &ghz_state(n)?)?;
    let passes = overlap > 2.0 / 3.0;
    Ok(Witness {
        overlap,
        passes,
        certifies: passes && n > 3,
        local_unitary_optimized: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distill::states::gen_noisy_ghz;

    #[test]
    fn pure_ghz_passes() {
        let w = full_distillability_witness(&ghz_state(4).unwrap().projector()).unwrap();
        assert!((w.overlap - 1.0).abs() < 1e-14);
        assert!(w.passes && w.certifies);
    }

    #[test]
    fn noisy_ghz_overlap() {
        let w = full_distillability_witness(&gen_noisy_ghz(5, 0.7).unwrap()).unwrap();
        assert!((w.overlap - (0.7 + 0.3 / 32.0)).abs() < 1e-14);
        assert!(w.passes);
    }

    #[test]
    fn maximally_mixed_fails() {
        let w = full_distillability_witness(&DensityMatrix::maximally_mixed(4)).unwrap();
        assert!((w.overlap - 1.0 / 16.0).abs() < 1e-15);
        assert!(!w.passes);
    }

    #[test]
    fn three_qubits_never_certify() {
        let w = full_distillability_witness(&ghz_state(3).unwrap().projector()).unwrap();
        assert!(w.passes && !w.certifies);
    }
}
