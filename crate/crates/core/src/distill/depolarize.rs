use num_complex::Complex64;

use crate::algebra::{ComplexMatrix, DensityMatrix};
use crate::{Error, Result};

/// State diagonal in the GHZ basis `|Psi_j^±> = (|0,j> ± |1,j̄>)/sqrt 2`, with
/// equal weights on `|Psi_j^+>` and `|Psi_j^->` for every `j != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GhzDiagonalState {
    pub n_qubits: usize,
    pub lambda_0_plus: f64,
    pub lambda_0_minus: f64,
    /// `lambda[j - 1]` for `j = 1 .. 2^(N-1) - 1` (qubit 1 most significant).
    pub lambda: Vec<f64>,
}

impl GhzDiagonalState {
    pub fn lambda_j(&self, j: usize) -> f64 {
        self.lambda[j - 1]
    }

    /// `lambda_0^+ + lambda_0^- + 2 sum_j lambda_j`.
    pub fn total(&self) -> f64 {
        self.lambda_0_plus + self.lambda_0_minus + 2.0 * self.lambda.iter().sum::<f64>()
    }

    pub fn to_density_matrix(&self) -> DensityMatrix {
        let n = self.n_qubits;
        let half = 1usize << (n - 1);
        let mut m = ComplexMatrix::zeros(2 * half, 2 * half);
        let (a, b) = pair(n, 0);
        let diag = 0.5 * (self.lambda_0_plus + self.lambda_0_minus);
        let coherence = 0.5 * (self.lambda_0_plus - self.lambda_0_minus);
        m[(a, a)] = Complex64::new(diag, 0.0);
        m[(b, b)] = Complex64::new(diag, 0.0);
        m[(a, b)] = Complex64::new(coherence, 0.0);
        m[(b, a)] = Complex64::new(coherence, 0.0);
        for j in 1..half {
            let (a, b) = pair(n, j);
            let l = Complex64::new(self.lambda_j(j), 0.0);
            m[(a, a)] = l;
            m[(b, b)] = l;
        }
        DensityMatrix::from_unchecked(n, m)
    }
}

/// Basis indices of `|0,j>` and `|1,j̄>`.
fn pair(n: usize, j: usize) -> (usize, usize) {
    let half = 1usize << (n - 1);
    (j, half + (!j & (half - 1)))
}

/// Project onto the GHZ-diagonal family: `lambda_0^±` are the GHZ-basis
/// populations of `|Psi_0^±>`, and for `j != 0` the two populations of
/// `|Psi_j^±>` are replaced by their mean. All other GHZ-basis elements are
/// dropped.
pub fn depolarize_ghz_diagonal(rho: &DensityMatrix) -> Result<(GhzDiagonalState, DensityMatrix)> {
    let n = rho.n_qubits();
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let m = rho.matrix();
    let population = |j: usize| {
        let (a, b) = pair(n, j);
        let d = 0.5 * (m[(a, a)].re + m[(b, b)].re);
        let c = m[(a, b)].re;
        (d + c, d - c)
    };
    let (lambda_0_plus, lambda_0_minus) = population(0);
    let lambda = (1..1usize << (n - 1))
        .map(|j| {
            let (p, q) = population(j);
            0.5 * (p + q)
        })
        .collect();
    let state = GhzDiagonalState {
        n_qubits: n,
        lambda_0_plus,
        lambda_0_minus,
        lambda,
    };
    let out = state.to_density_matrix();
    Ok((state, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ghz_state;
    use crate::distill::states::gen_noisy_ghz;

    fn max_dev(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
        (a.matrix() - b.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn ghz_is_a_fixed_point() {
        let rho = ghz_state(4).unwrap().projector();
        let (g, out) = depolarize_ghz_diagonal(&rho).unwrap();
        assert!((g.lambda_0_plus - 1.0).abs() < 1e-15);
        assert!(g.lambda_0_minus.abs() < 1e-15);
        assert!(g.lambda.iter().all(|l| l.abs() < 1e-15));
        assert!(max_dev(&rho, &out) < 1e-15);
    }

    #[test]
    fn maximally_mixed_is_a_fixed_point() {
        let rho = DensityMatrix::maximally_mixed(3);
        let (g, out) = depolarize_ghz_diagonal(&rho).unwrap();
        assert!((g.lambda_0_plus - 0.125).abs() < 1e-15);
        assert!((g.lambda_0_minus - 0.125).abs() < 1e-15);
        assert!(g.lambda.iter().all(|l| (l - 0.125).abs() < 1e-15));
        assert!(max_dev(&rho, &out) < 1e-15);
    }

    #[test]
    fn noisy_ghz_parameters() {
        for n in 2..=5 {
            let p = 0.37;
            let (g, _) = depolarize_ghz_diagonal(&gen_noisy_ghz(n, p).unwrap()).unwrap();
            let floor = (1.0 - p) / (1u64 << n) as f64;
            assert!((g.lambda_0_plus - (p + floor)).abs() < 1e-15);
            assert!((g.lambda_0_minus - floor).abs() < 1e-15);
            assert!(g.lambda.iter().all(|l| (l - floor).abs() < 1e-15));
            assert!((g.total() - 1.0).abs() < 1e-14);
        }
    }
}
