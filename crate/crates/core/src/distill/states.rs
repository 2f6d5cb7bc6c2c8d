//! Reference state families.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    ghz_state, kron, random_su2, ComplexMatrix, DensityMatrix, PureState, UnitVector3,
};
use crate::{Error, Result};

/// `p |GHZ><GHZ| + (1 - p) I / 2^N`.
pub fn gen_noisy_ghz(n_qubits: usize, p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "mixing weight {p} not in [0, 1]"
        )));
    }
    let ghz = ghz_state(n_qubits)?.projector();
    ghz.mix(&DensityMatrix::maximally_mixed(n_qubits), p)
}

/// `|GHZ>_{N-1} (x) |0>`: GHZ on qubits 0..N-2, the last qubit in `|0>`.
pub fn gen_ghz_padded(n_qubits: usize) -> Result<DensityMatrix> {
    if n_qubits < 3 {
        return Err(Error::TooFewQubits {
            min: 3,
            got: n_qubits,
        });
    }
    let psi = ghz_state(n_qubits - 1)?.tensor(&PureState::basis(1, 0)?);
    Ok(psi.projector())
}

/// Dür's GHZ-diagonal state
/// `1/(N+1) [ |GHZ><GHZ| + 1/2 sum_k (|u_k><u_k| + |ū_k><ū_k|) ]`
/// with `u_k` the computational state carrying a single 1 on qubit `k` and
/// `ū_k` its bitwise complement.
///
/// Parameters follow W. Dür, Phys. Rev. Lett. 87, 230402 (2001), with the GHZ
/// phase set to zero. The properties claimed for it (PPT across every
/// one-versus-rest cut, MBK violation for N >= 8) are recomputed by the test
/// suite rather than assumed.
pub fn gen_dur_state(n_qubits: usize) -> Result<DensityMatrix> {
    if n_qubits < 4 {
        return Err(Error::TooFewQubits {
            min: 4,
            got: n_qubits,
        });
    }
    let dim = 1usize << n_qubits;
    let weight = 1.0 / (n_qubits as f64 + 1.0);
    let mut m = ghz_state(n_qubits)?.projector().into_matrix().scale(weight);
    for k in 0..n_qubits {
        let u = 1usize << (n_qubits - 1 - k);
        let ubar = (dim - 1) ^ u;
        m[(u, u)] += Complex64::new(0.5 * weight, 0.0);
        m[(ubar, ubar)] += Complex64::new(0.5 * weight, 0.0);
    }
    Ok(DensityMatrix::from_unchecked(n_qubits, m))
}

/// Pure product of seeded random single-qubit states.
pub fn gen_product_state(n_qubits: usize, seed: u64) -> Result<DensityMatrix> {
    if n_qubits == 0 {
        return Err(Error::TooFewQubits { min: 1, got: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut psi: Option<PureState> = None;
    for _ in 0..n_qubits {
        let (theta, phi) = UnitVector3::random(&mut rng).angles();
        let a = DVector::from_vec(vec![
            Complex64::new((theta / 2.0).cos(), 0.0),
            Complex64::from_polar((theta / 2.0).sin(), phi),
        ]);
        let q = PureState::new(a)?;
        psi = Some(match psi {
            None => q,
            Some(p) => p.tensor(&q),
        });
    }
    Ok(psi.expect("n >= 1").projector())
}

/// `U_0 (x) ... (x) U_{N-1}` with independent Haar-random factors.
pub fn random_local_unitary<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> ComplexMatrix {
    let factors: Vec<ComplexMatrix> = (0..n_qubits).map(|_| random_su2(rng)).collect();
    kron(&factors).expect("at least one factor")
}
