use std::fmt;

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::linalg::{check_hermitian, min_eigenvalue, qubit_count, ComplexMatrix, ZERO};
use crate::{tol, Error, Result};

/// Real unit vector in R^3, the direction of a spin observable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3([f64; 3]);

impl UnitVector3 {
    pub const X: Self = Self([1.0, 0.0, 0.0]);
    pub const Y: Self = Self([0.0, 1.0, 0.0]);
    pub const Z: Self = Self([0.0, 0.0, 1.0]);

    /// Checked constructor; the norm must be within `tol::NORM` of one.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > tol::NORM {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self([x, y, z]))
    }

    /// Normalise an arbitrary vector; `None` when its norm is at most `min_norm`.
    pub fn normalize(v: [f64; 3], min_norm: f64) -> Option<Self> {
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        (norm.is_finite() && norm > min_norm).then(|| Self(v.map(|c| c / norm)))
    }

    /// Uniform on the sphere: a normalised Gaussian triple.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let v: [f64; 3] = [
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            ];
            if let Some(u) = Self::normalize(v, 1e-6) {
                return u;
            }
        }
    }

    /// Spherical angles: polar `theta` from +z, azimuth `phi` from +x.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self([st * cp, st * sp, ct])
    }

    pub fn angles(&self) -> (f64, f64) {
        let [x, y, z] = self.0;
        (z.clamp(-1.0, 1.0).acos(), y.atan2(x))
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.0
    }

    pub fn dot(&self, v: &[f64; 3]) -> f64 {
        self.0[0] * v[0] + self.0[1] * v[1] + self.0[2] * v[2]
    }

    pub fn neg(&self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

/// Normalised pure state of `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: DVector<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: DVector<Complex64>) -> Result<Self> {
        let n_qubits = qubit_count(amplitudes.len())?;
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > tol::NORM {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state `|index>`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if n_qubits == 0 || index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} for {n_qubits} qubits"
            )));
        }
        let mut a = DVector::from_element(dim, ZERO);
        a[index] = Complex64::new(1.0, 0.0);
        Self::new(a)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// `|psi><psi|` as a density matrix.
    pub fn projector(&self) -> DensityMatrix {
        let m = &self.amplitudes * self.amplitudes.adjoint();
        DensityMatrix::from_unchecked(self.n_qubits, m)
    }

    /// `|self> (x) |other>`.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let a = self.amplitudes.kronecker(&other.amplitudes);
        PureState {
            n_qubits: self.n_qubits + other.n_qubits,
            amplitudes: a,
        }
    }
}

/// Hermitian, positive semidefinite, unit-trace operator on `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validating constructor: Hermiticity, trace and positivity are all
    /// checked against the global tolerances.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        let n_qubits = qubit_count(matrix.nrows())?;
        check_hermitian(&matrix, tol::HERM)?;
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol::TRACE || trace.im.abs() > tol::TRACE {
            return Err(Error::TraceNotOne(trace.re));
        }
        let min = min_eigenvalue(&matrix)?;
        if min < -tol::PSD {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { n_qubits, matrix })
    }

    /// No checks. For intermediate results whose validity follows from
    /// construction.
    pub fn from_unchecked(n_qubits: usize, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.nrows(), 1 << n_qubits);
        Self { n_qubits, matrix }
    }

    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let dim = 1usize << n_qubits;
        let m = ComplexMatrix::identity(dim, dim).unscale(dim as f64);
        Self::from_unchecked(n_qubits, m)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `rho (x) sigma`, `self` on the leading qubits.
    pub fn tensor(&self, other: &DensityMatrix) -> DensityMatrix {
        Self::from_unchecked(
            self.n_qubits + other.n_qubits,
            self.matrix.kronecker(&other.matrix),
        )
    }

    /// `u rho u^dagger` for a unitary `u` of matching dimension.
    pub fn conjugate(&self, u: &ComplexMatrix) -> Result<DensityMatrix> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.nrows(),
            });
        }
        Ok(Self::from_unchecked(
            self.n_qubits,
            u * &self.matrix * u.adjoint(),
        ))
    }

    /// Convex combination `p self + (1-p) other`.
    pub fn mix(&self, other: &DensityMatrix, p: f64) -> Result<DensityMatrix> {
        if other.n_qubits != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(Self::from_unchecked(
            self.n_qubits,
            self.matrix.scale(p) + other.matrix.scale(1.0 - p),
        ))
    }
}

/// A cut of the qubits into two nonempty groups. Stored canonically with
/// qubit 0 on side A, so a cut and its complement are the same value.
///
/// The mask has bit `q` set when qubit `q` belongs to side A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n_qubits: usize,
    mask: u64,
}

impl Bipartition {
    pub fn new(n_qubits: usize, side_a: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &q in side_a {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { index: q, n_qubits });
            }
            mask |= 1 << q;
        }
        Self::from_mask(n_qubits, mask)
    }

    pub fn from_mask(n_qubits: usize, mask: u64) -> Result<Self> {
        if !(2..=63).contains(&n_qubits) {
            return Err(Error::InvalidBipartition(format!(
                "{n_qubits} qubits cannot be cut"
            )));
        }
        let full = (1u64 << n_qubits) - 1;
        if mask & !full != 0 {
            return Err(Error::InvalidBipartition(format!(
                "mask {mask:#b} has bits beyond qubit {}",
                n_qubits - 1
            )));
        }
        if mask == 0 || mask == full {
            return Err(Error::InvalidBipartition(
                "both sides must be nonempty".into(),
            ));
        }
        let mask = if mask & 1 == 0 { full & !mask } else { mask };
        Ok(Self { n_qubits, mask })
    }

    /// Every canonical cut, ordered by mask: `2^(N-1) - 1` of them.
    pub fn all(n_qubits: usize) -> impl Iterator<Item = Bipartition> {
        let full = (1u64 << n_qubits) - 1;
        (1..full)
            .step_by(2)
            .map(move |mask| Bipartition { n_qubits, mask })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn side_a(&self) -> Vec<usize> {
        (0..self.n_qubits)
            .filter(|q| self.mask >> q & 1 == 1)
            .collect()
    }

    pub fn side_b(&self) -> Vec<usize> {
        (0..self.n_qubits)
            .filter(|q| self.mask >> q & 1 == 0)
            .collect()
    }

    pub fn contains(&self, qubit: usize) -> bool {
        qubit < self.n_qubits && self.mask >> qubit & 1 == 1
    }

    /// Mask of side A in basis-index bit positions (qubit 0 most significant).
    pub(crate) fn index_mask(&self) -> usize {
        (0..self.n_qubits)
            .filter(|&q| self.contains(q))
            .map(|q| 1usize << (self.n_qubits - 1 - q))
            .sum()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| {
            v.iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{}}}|{{{}}}", join(self.side_a()), join(self.side_b()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vector_rejects_non_unit() {
        assert!(UnitVector3::new(1.0, 1.0, 0.0).is_err());
        assert!(UnitVector3::new(0.6, 0.8, 0.0).is_ok());
        assert!(UnitVector3::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn angles_roundtrip() {
        let v = UnitVector3::new(0.48, -0.6, 0.64).unwrap();
        let (t, p) = v.angles();
        let w = UnitVector3::from_angles(t, p);
        for i in 0..3 {
            assert!((v.0[i] - w.0[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(ComplexMatrix::identity(4, 4).unscale(4.0)).is_ok());
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::identity(4, 4)),
            Err(Error::TraceNotOne(_))
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::identity(3, 3).unscale(3.0)),
            Err(Error::NotPowerOfTwo(3))
        ));
        let mut neg = ComplexMatrix::zeros(2, 2);
        neg[(0, 0)] = Complex64::new(1.5, 0.0);
        neg[(1, 1)] = Complex64::new(-0.5, 0.0);
        assert!(matches!(
            DensityMatrix::new(neg),
            Err(Error::NotPositive(_))
        ));
        let mut nh = ComplexMatrix::identity(2, 2).unscale(2.0);
        nh[(1, 0)] = Complex64::new(0.0, 0.1);
        assert!(matches!(
            DensityMatrix::new(nh),
            Err(Error::NotHermitian { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn bipartition_is_canonical() {
        let a = Bipartition::new(3, &[1, 2]).unwrap();
        let b = Bipartition::new(3, &[0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.side_a(), vec![0]);
        assert!(Bipartition::new(3, &[]).is_err());
        assert!(Bipartition::new(3, &[0, 1, 2]).is_err());
        assert!(Bipartition::new(3, &[3]).is_err());
        assert_eq!(Bipartition::all(4).count(), 7);
        assert!(Bipartition::all(5).all(|c| c.contains(0)));
        assert_eq!(b.to_string(), "{0}|{1,2}");
    }

    #[test]
    fn index_mask_uses_msb_for_qubit_zero() {
        let c = Bipartition::new(3, &[0]).unwrap();
        assert_eq!(c.index_mask(), 0b100);
        let c = Bipartition::new(3, &[0, 2]).unwrap();
        assert_eq!(c.index_mask(), 0b101);
    }
}
