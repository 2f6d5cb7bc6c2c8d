use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{tol, Error, Result};

/// Dense complex square matrix on a 2^N dimensional space.
pub type ComplexMatrix = DMatrix<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Number of qubits `N` such that `dim == 2^N`, with `N >= 1`.
pub fn qubit_count(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Kronecker product of `factors`, the first factor being the leftmost
/// (most significant) tensor slot.
pub fn kron(factors: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let (first, rest) = factors.split_first().ok_or(Error::EmptyKron)?;
    for f in factors {
        if !f.is_square() {
            return Err(Error::NotSquare {
                rows: f.nrows(),
                cols: f.ncols(),
            });
        }
    }
    Ok(rest.iter().fold(first.clone(), |acc, f| acc.kronecker(f)))
}

/// Locate the worst Hermiticity violation, returning an error if it exceeds
/// `tolerance`.
pub fn check_hermitian(h: &ComplexMatrix, tolerance: f64) -> Result<()> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.nrows(),
            cols: h.ncols(),
        });
    }
    let n = h.nrows();
    let mut worst = (0, 0, 0.0);
    for i in 0..n {
        for j in i..n {
            let d = (h[(i, j)] - h[(j, i)].conj()).norm();
            if d > worst.2 {
                worst = (i, j, d);
            }
        }
    }
    if worst.2 > tolerance {
        return Err(Error::NotHermitian {
            row: worst.0,
            col: worst.1,
            deviation: worst.2,
        });
    }
    Ok(())
}

/// All eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    check_hermitian(h, tol::HERM)?;
    // Symmetrise so the solver sees an exactly Hermitian input.
    let sym = (h + h.adjoint()).scale(0.5);
    let mut values: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(h: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(h)?[0])
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn max_eigenvalue(h: &ComplexMatrix) -> Result<f64> {
    Ok(*hermitian_eigenvalues(h)?.last().expect("nonempty spectrum"))
}

/// `Tr(a b)` without forming the product.
pub(crate) fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.nrows();
    let mut acc = ZERO;
    for i in 0..n {
        for j in 0..n {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc
}

/// Bit mask selecting qubit `k` in a basis index of an `n`-qubit register.
#[inline]
pub(crate) fn qubit_bit(n: usize, k: usize) -> usize {
    1 << (n - 1 - k)
}

/// Insert bit `b` for qubit `k` into an index over the other `n - 1` qubits.
#[inline]
pub(crate) fn insert_bit(n: usize, k: usize, rest: usize, b: usize) -> usize {
    let low = n - 1 - k;
    let high = rest >> low;
    let lowbits = rest & ((1 << low) - 1);
    (high << (low + 1)) | (b << low) | lowbits
}
