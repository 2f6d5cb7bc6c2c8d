use crate::algebra::{trace_product, ComplexMatrix, DensityMatrix};
use crate::{tol, Error, Result};

use super::settings::MeasurementSettings;
use super::spec::{mbk_coefficients, WwzbSpec};

/// Which correlation functional a Bell operator realises.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Mermin-Belinskii-Klyshko.
    Mbk,
    /// A member of the complete two-setting family given by its sign function.
    Wwzb(WwzbSpec),
    /// Any other full-correlation coefficient table with local-variable bound
    /// at most 1 (the operators produced by measurement reduction).
    Correlation(Vec<f64>),
}

impl Family {
    pub fn coefficients(&self, n_qubits: usize) -> Result<Vec<f64>> {
        match self {
            Family::Mbk => {
                if n_qubits == 0 {
                    return Err(Error::TooFewQubits { min: 1, got: 0 });
                }
                Ok(mbk_coefficients(n_qubits).0)
            }
            Family::Wwzb(spec) => {
                if spec.n_qubits() != n_qubits {
                    return Err(Error::DimensionMismatch {
                        expected: n_qubits,
                        found: spec.n_qubits(),
                    });
                }
                Ok(spec.coefficients())
            }
            Family::Correlation(c) => {
                if c.len() != 1 << n_qubits {
                    return Err(Error::DimensionMismatch {
                        expected: 1 << n_qubits,
                        found: c.len(),
                    });
                }
                Ok(c.clone())
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Mbk => "mbk",
            Family::Wwzb(_) => "wwzb",
            Family::Correlation(_) => "correlation",
        }
    }
}

/// A Bell operator `B_N = sum_j c(j) O^{j_1}_1 (x) ... (x) O^{j_N}_N` with the
/// data it was built from.
#[derive(Debug, Clone)]
pub struct BellOperator {
    n_qubits: usize,
    matrix: ComplexMatrix,
    family: Family,
    settings: MeasurementSettings,
    coefficients: Vec<f64>,
    primed: Option<ComplexMatrix>,
}

impl BellOperator {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn settings(&self) -> &MeasurementSettings {
        &self.settings
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// `M'_N` for MBK operators.
    pub fn primed(&self) -> Option<&ComplexMatrix> {
        self.primed.as_ref()
    }
}

/// MBK operator through its recursion, with the newest qubit appended as the
/// rightmost tensor factor:
/// `M_k = 1/2 [M_{k-1} (x) (A_k + A'_k) + M'_{k-1} (x) (A_k - A'_k)]`,
/// `M'_k = 1/2 [M'_{k-1} (x) (A'_k + A_k) + M_{k-1} (x) (A'_k - A_k)]`,
/// `M_1 = sigma(n_0)`, `M'_1 = sigma(n'_0)`.
pub fn mbk_operator(settings: &MeasurementSettings) -> BellOperator {
    let n = settings.n_qubits();
    let mut m = settings.observable(0, 0);
    let mut mp = settings.observable(0, 1);
    for k in 1..n {
        let a = settings.observable(k, 0);
        let ap = settings.observable(k, 1);
        let sum = &a + &ap;
        let diff = &a - &ap;
        let next = (m.kronecker(&sum) + mp.kronecker(&diff)).scale(0.5);
        let next_p = (mp.kronecker(&sum) - m.kronecker(&diff)).scale(0.5);
        m = next;
        mp = next_p;
    }
    BellOperator {
        n_qubits: n,
        matrix: m,
        family: Family::Mbk,
        settings: settings.clone(),
        coefficients: mbk_coefficients(n).0,
        primed: Some(mp),
    }
}

/// Explicit coefficient-weighted sum of tensor products.
pub(crate) fn correlation_matrix(
    coefficients: &[f64],
    settings: &MeasurementSettings,
) -> ComplexMatrix {
    fn build(c: &[f64], settings: &MeasurementSettings, qubit: usize) -> ComplexMatrix {
        if qubit + 1 == settings.n_qubits() {
            return settings.observable(qubit, 0).scale(c[0])
                + settings.observable(qubit, 1).scale(c[1]);
        }
        let (first, second) = c.split_at(c.len() / 2);
        let mut out = None;
        for (setting, half) in [(0, first), (1, second)] {
            if half.iter().all(|&x| x == 0.0) {
                continue;
            }
            let term =
                settings
                    .observable(qubit, setting)
                    .kronecker(&build(half, settings, qubit + 1));
            out = Some(match out {
                None => term,
                Some(acc) => acc + term,
            });
        }
        out.unwrap_or_else(|| {
            let dim = c.len();
            ComplexMatrix::zeros(dim, dim)
        })
    }
    build(coefficients, settings, 0)
}

/// Bell operator from a family and settings, built as the explicit sum
/// `sum_j c(j) O^{j_1} (x) ... (x) O^{j_N}`.
pub fn wwzb_operator(family: &Family, settings: &MeasurementSettings) -> Result<BellOperator> {
    let n = settings.n_qubits();
    if let Family::Wwzb(spec) = family {
        spec.validate()?;
    }
    let coefficients = family.coefficients(n)?;
    let matrix = correlation_matrix(&coefficients, settings);
    Ok(BellOperator {
        n_qubits: n,
        matrix,
        family: family.clone(),
        settings: settings.clone(),
        coefficients,
        primed: None,
    })
}

/// `Re Tr(rho B)`.
pub fn bell_value(rho: &DensityMatrix, b: &BellOperator) -> Result<f64> {
    if rho.dim() != b.matrix.nrows() {
        return Err(Error::DimensionMismatch {
            expected: b.matrix.nrows(),
            found: rho.dim(),
        });
    }
    let t = trace_product(rho.matrix(), &b.matrix);
    debug_assert!(t.im.abs() < tol::EIG.max(1e-12 * b.matrix.nrows() as f64));
    Ok(t.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_hermitian, kron, max_eigenvalue, pauli_observable, UnitVector3};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn max_dev(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
        (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn single_qubit_mbk_is_the_observable() {
        let s = MeasurementSettings::new(vec![[UnitVector3::Z, UnitVector3::X]]).unwrap();
        let b = mbk_operator(&s);
        assert_eq!(b.matrix(), &pauli_observable(&UnitVector3::Z));
    }

    #[test]
    fn two_qubit_mbk_is_chsh() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = MeasurementSettings::random(2, &mut rng);
        let b = mbk_operator(&s);
        let (a1, a1p) = (s.observable(0, 0), s.observable(0, 1));
        let (a2, a2p) = (s.observable(1, 0), s.observable(1, 1));
        let chsh =
            (kron(&[&a1 + &a1p, a2]).unwrap() + kron(&[&a1 - &a1p, a2p]).unwrap()).scale(0.5);
        assert!(max_dev(b.matrix(), &chsh) < 1e-14);
    }

    #[test]
    fn chsh_optimal_settings_reach_sqrt2() {
        let s2 = std::f64::consts::FRAC_1_SQRT_2;
        let a = UnitVector3::X;
        let ap = UnitVector3::Y;
        let b = UnitVector3::new(s2, -s2, 0.0).unwrap();
        let bp = UnitVector3::new(s2, s2, 0.0).unwrap();
        let s = MeasurementSettings::new(vec![[a, ap], [b, bp]]).unwrap();
        let op = mbk_operator(&s);
        assert!((max_eigenvalue(op.matrix()).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn equal_settings_collapse_to_a_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let dirs: Vec<UnitVector3> = (0..3).map(|_| UnitVector3::random(&mut rng)).collect();
        let s = MeasurementSettings::new(dirs.iter().map(|d| [*d, *d]).collect()).unwrap();
        let b = mbk_operator(&s);
        let product = kron(&dirs.iter().map(pauli_observable).collect::<Vec<_>>()).unwrap();
        assert!(max_dev(b.matrix(), &product) < 1e-14);
        assert!((max_eigenvalue(b.matrix()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chsh_spec_builds_chsh() {
        let spec = WwzbSpec::new(2, vec![1, 1, 1, -1]).unwrap();
        assert_eq!(spec.coefficients(), vec![0.5, 0.5, 0.5, -0.5]);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let s = MeasurementSettings::random(2, &mut rng);
        let w = wwzb_operator(&Family::Wwzb(spec), &s).unwrap();
        assert!(max_dev(w.matrix(), mbk_operator(&s).matrix()) < 1e-14);
    }

    #[test]
    fn operators_are_hermitian_and_traceless() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5 {
            let s = MeasurementSettings::random(n, &mut rng);
            let b = mbk_operator(&s);
            check_hermitian(b.matrix(), 1e-12).unwrap();
            check_hermitian(b.primed().unwrap(), 1e-12).unwrap();
            assert!(b.matrix().trace().norm() < 1e-12);
        }
    }

    #[test]
    fn operator_is_continuous_in_settings() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let s = MeasurementSettings::random(3, &mut rng);
        let base = wwzb_operator(&Family::Mbk, &s).unwrap();
        for eps in [1e-3, 1e-5, 1e-7] {
            let nudged: Vec<[UnitVector3; 2]> = s
                .pairs()
                .iter()
                .map(|[a, b]| {
                    let [x, y, z] = a.as_array();
                    [UnitVector3::normalize([x + eps, y, z], 0.0).unwrap(), *b]
                })
                .collect();
            let other =
                wwzb_operator(&Family::Mbk, &MeasurementSettings::new(nudged).unwrap()).unwrap();
            // Each observable moves by O(eps); the operator norm bound is N * eps * |c|_1.
            assert!(max_dev(base.matrix(), other.matrix()) < 10.0 * eps);
        }
    }

    #[test]
    fn family_dimension_checks() {
        let spec = WwzbSpec::mbk(3);
        assert!(Family::Wwzb(spec).coefficients(2).is_err());
        assert!(Family::Correlation(vec![1.0; 3]).coefficients(2).is_err());
    }

    #[test]
    fn maximally_mixed_gives_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let s = MeasurementSettings::random(4, &mut rng);
        let b = mbk_operator(&s);
        let v = bell_value(&DensityMatrix::maximally_mixed(4), &b).unwrap();
        assert!(v.abs() < 1e-14);
        assert!(bell_value(&DensityMatrix::maximally_mixed(3), &b).is_err());
    }
}
