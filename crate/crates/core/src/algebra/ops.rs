use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::linalg::{insert_bit, qubit_bit, ComplexMatrix, ONE, ZERO};
use super::state::{Bipartition, DensityMatrix, PureState, UnitVector3};
use crate::{tol, Error, Result};

/// Pauli matrix by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
pub fn pauli(index: usize) -> ComplexMatrix {
    let i = Complex64::new(0.0, 1.0);
    let (a, b, c, d) = match index {
        0 => (ONE, ZERO, ZERO, ONE),
        1 => (ZERO, ONE, ONE, ZERO),
        2 => (ZERO, -i, i, ZERO),
        3 => (ONE, ZERO, ZERO, -ONE),
        _ => panic!("pauli index {index} out of range"),
    };
    ComplexMatrix::from_row_slice(2, 2, &[a, b, c, d])
}

/// `sigma(n) = x X + y Y + z Z`.
pub fn pauli_observable(n: &UnitVector3) -> ComplexMatrix {
    let [x, y, z] = n.as_array();
    ComplexMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(z, 0.0),
            Complex64::new(x, -y),
            Complex64::new(x, y),
            Complex64::new(-z, 0.0),
        ],
    )
}

/// Haar-random single-qubit unitary (normalised Gaussian quaternion).
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let mut q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    q.iter_mut().for_each(|x| *x /= n);
    let a = Complex64::new(q[0], q[1]);
    let b = Complex64::new(q[2], q[3]);
    ComplexMatrix::from_row_slice(2, 2, &[a, -b.conj(), b, a.conj()])
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Partial transpose over the qubits on side A of `cut`.
pub fn partial_transpose(rho: &DensityMatrix, cut: &Bipartition) -> Result<ComplexMatrix> {
    check_dims(rho.n_qubits(), cut.n_qubits())?;
    Ok(partial_transpose_matrix(rho.matrix(), cut.index_mask()))
}

pub(crate) fn partial_transpose_matrix(m: &ComplexMatrix, index_mask: usize) -> ComplexMatrix {
    let dim = m.nrows();
    let keep = !index_mask;
    ComplexMatrix::from_fn(dim, dim, |r, c| {
        let r0 = (r & keep) | (c & index_mask);
        let c0 = (c & keep) | (r & index_mask);
        m[(r0, c0)]
    })
}

/// `Tr_k[(op (x) I) rho]` for a 2x2 `op` acting on qubit `k`; with `op = I`
/// this is the ordinary partial trace.
pub(crate) fn weighted_partial_trace(
    rho: &ComplexMatrix,
    n: usize,
    k: usize,
    op: &ComplexMatrix,
) -> ComplexMatrix {
    let dim = 1usize << (n - 1);
    ComplexMatrix::from_fn(dim, dim, |r, c| {
        let mut acc = ZERO;
        for a in 0..2 {
            for b in 0..2 {
                let w = op[(b, a)];
                if w != ZERO {
                    acc += w * rho[(insert_bit(n, k, r, a), insert_bit(n, k, c, b))];
                }
            }
        }
        acc
    })
}

/// Reduced state after tracing out qubit `k`.
pub fn partial_trace(rho: &DensityMatrix, k: usize) -> Result<DensityMatrix> {
    let n = rho.n_qubits();
    check_qubit(n, k)?;
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let m = weighted_partial_trace(rho.matrix(), n, k, &ComplexMatrix::identity(2, 2));
    Ok(DensityMatrix::from_unchecked(n - 1, m))
}

fn check_qubit(n: usize, k: usize) -> Result<()> {
    if k >= n {
        return Err(Error::QubitOutOfRange {
            index: k,
            n_qubits: n,
        });
    }
    Ok(())
}

/// One branch of a projective spin measurement.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    /// +1 or -1, the eigenvalue of `sigma(m)`.
    pub sign: i8,
    pub probability: f64,
    /// Conditional state of the remaining qubits; `None` when the outcome has
    /// probability at most `tol::PROB`.
    pub state: Option<DensityMatrix>,
}

/// Measure `sigma(m)` on qubit `k`, returning the `+1` and `-1` branches with
/// the measured qubit traced out.
pub fn measure_qubit(
    rho: &DensityMatrix,
    k: usize,
    m: &UnitVector3,
) -> Result<[MeasurementOutcome; 2]> {
    let n = rho.n_qubits();
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    check_qubit(n, k)?;
    let identity = ComplexMatrix::identity(2, 2);
    let sigma = pauli_observable(m);
    let branch = |sign: i8| {
        let projector = (&identity + sigma.scale(sign as f64)).scale(0.5);
        let unnormalized = weighted_partial_trace(rho.matrix(), n, k, &projector);
        let probability = unnormalized.trace().re;
        let state = (probability > tol::PROB)
            .then(|| DensityMatrix::from_unchecked(n - 1, unnormalized.unscale(probability)));
        MeasurementOutcome {
            sign,
            probability: probability.max(0.0),
            state,
        }
    };
    Ok([branch(1), branch(-1)])
}

/// Relative sign inside a GHZ-basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GhzSign {
    Plus,
    Minus,
}

/// `|Psi_j^±> = (|0,j> ± |1,j̄>)/sqrt 2` where `j` is an `N-1` bit string
/// (one `0`/`1` entry per qubit 1..N-1) and `j̄` its complement.
pub fn ghz_basis_vector(n_qubits: usize, j: &[u8], sign: GhzSign) -> Result<PureState> {
    if n_qubits < 2 {
        return Err(Error::TooFewQubits {
            min: 2,
            got: n_qubits,
        });
    }
    if j.len() != n_qubits - 1 {
        return Err(Error::InvalidBitstring(format!(
            "length {} for {n_qubits} qubits (expected {})",
            j.len(),
            n_qubits - 1
        )));
    }
    let mut index = 0usize;
    for &b in j {
        if b > 1 {
            return Err(Error::InvalidBitstring(format!("entry {b} is not a bit")));
        }
        index = index << 1 | b as usize;
    }
    Ok(ghz_vector(n_qubits, index, sign))
}

/// GHZ-basis vector with `j` given as an integer (qubit 1 most significant).
pub(crate) fn ghz_vector(n: usize, j: usize, sign: GhzSign) -> PureState {
    let half = 1usize << (n - 1);
    debug_assert!(j < half);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut a = DVector::from_element(1 << n, ZERO);
    a[j] = Complex64::new(s, 0.0);
    a[half + (!j & (half - 1))] = Complex64::new(
        match sign {
            GhzSign::Plus => s,
            GhzSign::Minus => -s,
        },
        0.0,
    );
    PureState::new(a).expect("GHZ vectors are normalised")
}

/// `(|0...0> + |1...1>)/sqrt 2`.
pub fn ghz_state(n_qubits: usize) -> Result<PureState> {
    if n_qubits < 2 {
        return Err(Error::TooFewQubits {
            min: 2,
            got: n_qubits,
        });
    }
    Ok(ghz_vector(n_qubits, 0, GhzSign::Plus))
}

/// `<psi|rho|psi>`.
pub fn overlap(rho: &DensityMatrix, psi: &PureState) -> Result<f64> {
    check_dims(rho.dim(), psi.amplitudes().len())?;
    let a = psi.amplitudes();
    Ok(a.dotc(&(rho.matrix() * a)).re)
}

/// Place a single-qubit operator on qubit `k` of an `n` qubit register with
/// identities elsewhere.
pub fn embed_single(op: &ComplexMatrix, n: usize, k: usize) -> ComplexMatrix {
    let dim = 1usize << n;
    let bit = qubit_bit(n, k);
    let shift = n - 1 - k;
    ComplexMatrix::from_fn(dim, dim, |r, c| {
        if r & !bit != c & !bit {
            ZERO
        } else {
            op[((r >> shift) & 1, (c >> shift) & 1)]
        }
    })
}
