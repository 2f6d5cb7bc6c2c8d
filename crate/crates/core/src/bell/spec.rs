//! Coefficient tables of full-correlation Bell functionals and their
//! local-variable bounds.
//!
//! A coefficient table `c` has `2^N` entries indexed by a setting bitmask `j`
//! (qubit 0 most significant); bit value 0 selects `O^1 = sigma(n)` and bit
//! value 1 selects `O^2 = sigma(n')`.

use crate::{Error, Result};

/// Largest `N` for which [`classical_bound`] enumerates strategies.
pub const EXHAUSTIVE_LIMIT: usize = 4;

/// Unnormalised in-place Walsh-Hadamard transform.
pub(crate) fn walsh_hadamard(v: &mut [f64]) {
    let mut h = 1;
    while h < v.len() {
        for i in (0..v.len()).step_by(2 * h) {
            for k in i..i + h {
                let (a, b) = (v[k], v[k + h]);
                v[k] = a + b;
                v[k + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// MBK coefficient tables `(M_N, M'_N)`.
///
/// `M_1 = sigma(n_0)`, `M'_1 = sigma(n'_0)`, and each new qubit `k` is
/// appended on the right:
/// `M_k = 1/2 [M_{k-1} (x) (A_k + A'_k) + M'_{k-1} (x) (A_k - A'_k)]`, with
/// `M'_k` obtained by exchanging primed and unprimed settings.
pub fn mbk_coefficients(n_qubits: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n_qubits >= 1);
    let mut m = vec![1.0, 0.0];
    let mut mp = vec![0.0, 1.0];
    for _ in 1..n_qubits {
        let mut next = vec![0.0; m.len() * 2];
        let mut next_p = vec![0.0; m.len() * 2];
        for (rest, (&a, &b)) in m.iter().zip(&mp).enumerate() {
            next[rest << 1] = 0.5 * (a + b);
            next[rest << 1 | 1] = 0.5 * (a - b);
            next_p[rest << 1] = 0.5 * (b - a);
            next_p[rest << 1 | 1] = 0.5 * (b + a);
        }
        m = next;
        mp = next_p;
    }
    (m, mp)
}

/// Member of the complete family of two-setting full-correlation
/// inequalities, stored as a sign function `f` on `{0,1}^N` (index `s`,
/// qubit 0 most significant). The coefficient table is
/// `c(j) = 2^-N sum_s f(s) (-1)^{s.j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WwzbSpec {
    n_qubits: usize,
    signs: Vec<i8>,
}

impl WwzbSpec {
    pub fn new(n_qubits: usize, signs: Vec<i8>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > 20 {
            return Err(Error::InvalidSpec(format!("{n_qubits} qubits")));
        }
        if signs.len() != 1 << n_qubits {
            return Err(Error::InvalidSpec(format!(
                "expected {} signs for {n_qubits} qubits, got {}",
                1usize << n_qubits,
                signs.len()
            )));
        }
        if let Some((i, s)) = signs.iter().enumerate().find(|(_, s)| s.abs() != 1) {
            return Err(Error::InvalidSpec(format!("sign {i} is {s}, not +-1")));
        }
        Ok(Self { n_qubits, signs })
    }

    /// The sign function reproducing the MBK coefficient table.
    pub fn mbk(n_qubits: usize) -> Self {
        let (c, _) = mbk_coefficients(n_qubits);
        Self::from_coefficients(n_qubits, &c).expect("MBK belongs to the family")
    }

    /// Invert the coefficient transform; fails unless every recovered sign is
    /// `+-1` to within `1e-12`.
    pub fn from_coefficients(n_qubits: usize, coefficients: &[f64]) -> Result<Self> {
        if coefficients.len() != 1 << n_qubits {
            return Err(Error::InvalidSpec(format!(
                "coefficient table of length {} for {n_qubits} qubits",
                coefficients.len()
            )));
        }
        let mut f = coefficients.to_vec();
        walsh_hadamard(&mut f);
        let signs = f
            .iter()
            .enumerate()
            .map(|(s, &x)| {
                if (x.abs() - 1.0).abs() > 1e-12 {
                    Err(Error::InvalidSpec(format!(
                        "coefficients induce f({s}) = {x}, not +-1"
                    )))
                } else {
                    Ok(x.signum() as i8)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_qubits, signs)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn coefficients(&self) -> Vec<f64> {
        let mut c: Vec<f64> = self.signs.iter().map(|&s| s as f64).collect();
        walsh_hadamard(&mut c);
        let scale = (1u64 << self.n_qubits) as f64;
        c.iter_mut().for_each(|x| *x /= scale);
        c
    }

    /// Operational certificate: the exhaustive local-variable bound is 1.
    /// Above [`EXHAUSTIVE_LIMIT`] validity rests on the sign-function form.
    pub fn validate(&self) -> Result<()> {
        if self.n_qubits > EXHAUSTIVE_LIMIT {
            return Ok(());
        }
        let bound = classical_bound(&self.coefficients())?;
        if (bound - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidSpec(format!(
                "local-variable bound is {bound}, expected 1"
            )));
        }
        Ok(())
    }
}

/// Deterministic local-variable assignment: bit `q` (index-space position,
/// qubit 0 most significant) of `flip_first` / `flip_second` is set when
/// qubit `q` answers -1 to setting 1 / setting 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LvStrategy {
    pub flip_first: usize,
    pub flip_second: usize,
}

impl LvStrategy {
    /// `sum_j c(j) prod_i a_i^{j_i}`.
    pub fn value(&self, coefficients: &[f64]) -> f64 {
        let full = coefficients.len() - 1;
        coefficients
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let negative = ((!j & full) & self.flip_first) | (j & self.flip_second);
                if negative.count_ones().is_multiple_of(2) {
                    *c
                } else {
                    -c
                }
            })
            .sum()
    }
}

fn table_qubits(coefficients: &[f64]) -> Result<usize> {
    let len = coefficients.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "coefficient table length {len} is not 2^N"
        )));
    }
    Ok(len.trailing_zeros() as usize)
}

/// Maximum of the functional over all `2^{2N}` deterministic strategies,
/// together with a maximising strategy.
pub fn best_strategy(coefficients: &[f64]) -> Result<(f64, LvStrategy)> {
    let n = table_qubits(coefficients)?;
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::ExhaustiveLimit {
            n_qubits: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let masks = 1usize << n;
    let mut best = (
        f64::NEG_INFINITY,
        LvStrategy {
            flip_first: 0,
            flip_second: 0,
        },
    );
    for flip_first in 0..masks {
        for flip_second in 0..masks {
            let s = LvStrategy {
                flip_first,
                flip_second,
            };
            let v = s.value(coefficients);
            if v > best.0 {
                best = (v, s);
            }
        }
    }
    Ok(best)
}

/// Local-variable bound of a coefficient table by exhaustive enumeration.
/// Refused above [`EXHAUSTIVE_LIMIT`] qubits.
pub fn classical_bound(coefficients: &[f64]) -> Result<f64> {
    best_strategy(coefficients).map(|(v, _)| v)
}
