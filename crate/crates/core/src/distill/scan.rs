use crate::algebra::{min_eigenvalue, partial_transpose, Bipartition, DensityMatrix};
use crate::{tol, Error, Result};

/// Spectrum edge of the partial transpose across one cut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutResult {
    pub cut: Bipartition,
    pub min_eigenvalue: f64,
    pub nppt: bool,
}

/// NPPT status of every canonical bipartition, ordered by cut mask.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionScan {
    pub n_qubits: usize,
    pub cuts: Vec<CutResult>,
}

impl PartitionScan {
    pub fn nppt_count(&self) -> usize {
        self.cuts.iter().filter(|c| c.nppt).count()
    }

    /// Cut with the most negative partial-transpose eigenvalue (lowest mask
    /// on ties).
    pub fn worst(&self) -> &CutResult {
        self.cuts
            .iter()
            .reduce(|a, b| {
                if b.min_eigenvalue < a.min_eigenvalue {
                    b
                } else {
                    a
                }
            })
            .expect("at least one cut")
    }

    pub fn get(&self, cut: &Bipartition) -> Option<&CutResult> {
        self.cuts.iter().find(|c| &c.cut == cut)
    }

    /// Cuts separating a single qubit from the rest.
    pub fn single_qubit_cuts(&self) -> impl Iterator<Item = &CutResult> {
        self.cuts.iter().filter(|c| {
            let a = c.cut.side_a().len();
            a == 1 || a == self.n_qubits - 1
        })
    }
}

fn scan_cut(rho: &DensityMatrix, cut: Bipartition) -> Result<CutResult> {
    let pt = partial_transpose(rho, &cut)?;
    let min = min_eigenvalue(&pt)?;
    Ok(CutResult {
        cut,
        min_eigenvalue: min,
        nppt: min < -tol::PSD,
    })
}

/// Minimum partial-transpose eigenvalue across all `2^(N-1) - 1` cuts.
pub fn nppt_scan(rho: &DensityMatrix) -> Result<PartitionScan> {
    let n = rho.n_qubits();
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let cuts: Vec<Bipartition> = Bipartition::all(n).collect();

    #[cfg(feature = "parallel")]
    let results: Result<Vec<CutResult>> = {
        use rayon::prelude::*;
        cuts.into_par_iter().map(|c| scan_cut(rho, c)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Result<Vec<CutResult>> = cuts.into_iter().map(|c| scan_cut(rho, c)).collect();

    Ok(PartitionScan {
        n_qubits: n,
        cuts: results?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ghz_state;
    use crate::distill::states::gen_product_state;

    #[test]
    fn ghz3_is_nppt_everywhere() {
        let scan = nppt_scan(&ghz_state(3).unwrap().projector()).unwrap();
        assert_eq!(scan.cuts.len(), 3);
        assert_eq!(scan.nppt_count(), 3);
        for c in &scan.cuts {
            assert!((c.min_eigenvalue + 0.5).abs() < 1e-10);
        }
    }

    #[test]
    fn product_state_has_no_nppt_cut() {
        let scan = nppt_scan(&gen_product_state(4, 1).unwrap()).unwrap();
        assert_eq!(scan.cuts.len(), 7);
        assert_eq!(scan.nppt_count(), 0);
    }

    #[test]
    fn masks_are_canonical_and_sorted() {
        let scan = nppt_scan(&DensityMatrix::maximally_mixed(4)).unwrap();
        let masks: Vec<u64> = scan.cuts.iter().map(|c| c.cut.mask()).collect();
        assert_eq!(masks, vec![1, 3, 5, 7, 9, 11, 13]);
        assert_eq!(scan.single_qubit_cuts().count(), 4);
    }
}
