//! Pauli-basis view of a state and fast contraction of full-correlation
//! functionals.
//!
//! For traceless local observables only the `{x,y,z}^N` block of the Pauli
//! expansion of `rho` contributes to `Tr(rho B)`, so a functional
//! `sum_j c(j) E(j)` reduces to a contraction of the `3^N` correlation tensor
//! with one `3x2` settings matrix per qubit and the `2^N` coefficient table.

use num_complex::Complex64;

use crate::algebra::{ComplexMatrix, DensityMatrix};

/// Spread the low bits of `x` to the even bit positions.
fn spread_bits(mut x: usize, n: usize) -> usize {
    let mut out = 0;
    for b in 0..n {
        out |= (x & 1) << (2 * b);
        x >>= 1;
    }
    out
}

/// All `4^N` coefficients `Tr(rho sigma_{a_0} (x) ... (x) sigma_{a_{N-1}})`,
/// indexed base 4 with qubit 0 as the most significant digit and digits
/// 0 = I, 1 = X, 2 = Y, 3 = Z.
pub fn pauli_components(rho: &ComplexMatrix) -> Vec<f64> {
    let dim = rho.nrows();
    let n = dim.trailing_zeros() as usize;
    let spread: Vec<usize> = (0..dim).map(|x| spread_bits(x, n)).collect();
    let mut a = vec![Complex64::new(0.0, 0.0); dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            a[spread[r] << 1 | spread[c]] = rho[(r, c)];
        }
    }
    let i = Complex64::new(0.0, 1.0);
    let mut stride = 1;
    for _ in 0..n {
        for block in (0..a.len()).step_by(4 * stride) {
            for base in block..block + stride {
                let m00 = a[base];
                let m01 = a[base + stride];
                let m10 = a[base + 2 * stride];
                let m11 = a[base + 3 * stride];
                a[base] = m00 + m11;
                a[base + stride] = m01 + m10;
                a[base + 2 * stride] = i * (m01 - m10);
                a[base + 3 * stride] = m00 - m11;
            }
        }
        stride *= 4;
    }
    a.into_iter().map(|z| z.re).collect()
}

/// The traceless block of the Pauli expansion: `T[a] = Tr(rho sigma_a)` for
/// `a` in `{x,y,z}^N`, base 3 with qubit 0 most significant.
#[derive(Debug, Clone)]
pub struct CorrelationTensor {
    n_qubits: usize,
    data: Vec<f64>,
}

impl CorrelationTensor {
    pub fn new(rho: &DensityMatrix) -> Self {
        let n = rho.n_qubits();
        let full = pauli_components(rho.matrix());
        let len = 3usize.pow(n as u32);
        let data = (0..len)
            .map(|mut t| {
                let mut idx = 0;
                let mut place = 1;
                for _ in 0..n {
                    idx += (t % 3 + 1) * place;
                    t /= 3;
                    place *= 4;
                }
                full[idx]
            })
            .collect();
        Self { n_qubits: n, data }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// `sum_j c(j) E(j)` for settings given as per-qubit `[n, n']` arrays.
    pub fn functional_value(&self, coefficients: &[f64], settings: &[[[f64; 3]; 2]]) -> f64 {
        let mut t = Tensor::full(self);
        for (k, w) in settings.iter().enumerate() {
            t = t.mode_product(k, w);
        }
        t.data.iter().zip(coefficients).map(|(e, c)| e * c).sum()
    }
}

/// Dense real tensor with per-mode extents 3 (Pauli axis) or 2 (setting).
#[derive(Debug, Clone)]
pub(crate) struct Tensor {
    pub dims: Vec<usize>,
    pub data: Vec<f64>,
}

impl Tensor {
    pub fn full(t: &CorrelationTensor) -> Self {
        Self {
            dims: vec![3; t.n_qubits],
            data: t.data.clone(),
        }
    }

    /// Contract the Pauli axis of `mode` with the two setting directions.
    pub fn mode_product(&self, mode: usize, w: &[[f64; 3]; 2]) -> Self {
        debug_assert_eq!(self.dims[mode], 3);
        let outer: usize = self.dims[..mode].iter().product();
        let inner: usize = self.dims[mode + 1..].iter().product();
        let mut data = vec![0.0; outer * 2 * inner];
        for o in 0..outer {
            let src = &self.data[o * 3 * inner..(o + 1) * 3 * inner];
            let (x, rest) = src.split_at(inner);
            let (y, z) = rest.split_at(inner);
            let dst = &mut data[o * 2 * inner..(o + 1) * 2 * inner];
            let (d0, d1) = dst.split_at_mut(inner);
            let [a, b] = w;
            for i in 0..inner {
                d0[i] = a[0] * x[i] + a[1] * y[i] + a[2] * z[i];
                d1[i] = b[0] * x[i] + b[1] * y[i] + b[2] * z[i];
            }
        }
        let mut dims = self.dims.clone();
        dims[mode] = 2;
        Self { dims, data }
    }

    /// With every mode but `mode` contracted to settings, return the `3x2`
    /// block `G[a][s] = sum_{j : j_mode = s} c(j) X[.., a, ..]`; the functional
    /// equals `G[.][0] . n + G[.][1] . n'` for qubit `mode`.
    pub fn local_field(&self, mode: usize, coefficients: &[f64]) -> [[f64; 3]; 2] {
        debug_assert_eq!(self.dims[mode], 3);
        let n = self.dims.len();
        let outer = 1usize << mode;
        let inner = 1usize << (n - 1 - mode);
        let mut g = [[0.0; 3]; 2];
        for o in 0..outer {
            for (a, slot) in (0..3).map(|a| (a, o * 3 * inner + a * inner)) {
                let xs = &self.data[slot..slot + inner];
                for s in 0..2 {
                    let cs = &coefficients[(o * 2 + s) * inner..(o * 2 + s + 1) * inner];
                    g[s][a] += xs.iter().zip(cs).map(|(x, c)| x * c).sum::<f64>();
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ghz_state, kron, pauli, trace_product};

    #[test]
    fn pauli_components_match_direct_traces() {
        let psi = ghz_state(2).unwrap();
        let rho = psi.projector();
        let comps = pauli_components(rho.matrix());
        for a in 0..4 {
            for b in 0..4 {
                let op = kron(&[pauli(a), pauli(b)]).unwrap();
                let direct = trace_product(rho.matrix(), &op).re;
                assert!((comps[a * 4 + b] - direct).abs() < 1e-14, "{a}{b}");
            }
        }
        // GHZ_2: <XX> = 1, <YY> = -1, <ZZ> = 1.
        assert!((comps[5] - 1.0).abs() < 1e-14);
        assert!((comps[10] + 1.0).abs() < 1e-14);
        assert!((comps[15] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn tensor_excludes_identity_terms() {
        let rho = DensityMatrix::maximally_mixed(3);
        let t = CorrelationTensor::new(&rho);
        assert_eq!(t.data().len(), 27);
        assert!(t.data().iter().all(|&x| x.abs() < 1e-15));
    }
}
