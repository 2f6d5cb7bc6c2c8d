//! Reduce an `N`-qubit violation to an `(N-1)`-qubit one by measuring a
//! single qubit.
//!
//! Write the Bell operator around qubit `k` as
//! `B = sigma(u) (x) M + sigma(w) (x) M'` with `u = (n_k + n'_k)/2`,
//! `w = (n_k - n'_k)/2`, `M = B_0 + B_1`, `M' = B_0 - B_1` where `B_s`
//! collects the terms with setting `s` on qubit `k`. Measuring `sigma(m)` on
//! qubit `k` with outcome `s` leaves the conditional state `rho_s` and
//! suggests the functional `beta_+ M + beta_- M'` with
//! `beta_+ = s m.u`, `beta_- = s m.w`, which is rescaled by its local-variable
//! bound. Since `|u| + |w| <= sqrt 2`, one of the directions `u/|u|`,
//! `w/|w|` already reaches `Tr(rho B)/sqrt 2`; the search below starts from
//! both and from seeded random directions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    insert_bit, measure_qubit, pauli, trace_product, weighted_partial_trace, DensityMatrix,
    UnitVector3,
};
use crate::bell::{
    bell_value, classical_bound, correlation_matrix, wwzb_operator, BellOperator, Family,
    EXHAUSTIVE_LIMIT,
};
use crate::{tol, Error, Result};

#[derive(Debug, Clone)]
pub struct ReduceOptions {
    /// Random initial directions in addition to the two deterministic ones.
    pub starts: usize,
    pub seed: u64,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self {
            starts: 64,
            seed: 0,
        }
    }
}

/// Result of one measurement-reduction step.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// Conditional state of the remaining `N - 1` qubits.
    pub state: DensityMatrix,
    /// Rescaled functional on the remaining qubits, local-variable bound <= 1.
    pub operator: BellOperator,
    pub measured_qubit: usize,
    pub direction: UnitVector3,
    pub outcome: i8,
    pub probability: f64,
    /// `Tr(rho B)`.
    pub input_value: f64,
    /// `Tr(rho_s B~)`.
    pub achieved: f64,
    /// Scale that was divided out of `beta_+ M + beta_- M'`.
    pub normalization: f64,
    /// Whether `normalization` came from exhaustive enumeration.
    pub exhaustive: bool,
    /// `|beta_+| + |beta_-|`.
    pub analytic_bound: f64,
    /// `sqrt(beta_+^2 + beta_-^2)`.
    pub euclidean_envelope: f64,
}

impl Reduction {
    pub fn ratio(&self) -> f64 {
        self.achieved / self.input_value
    }
}

struct Problem {
    m: Vec<f64>,
    mp: Vec<f64>,
    /// `Tr(rho sigma_b (x) M)` for b = I, X, Y, Z on qubit k.
    e_m: [f64; 4],
    e_mp: [f64; 4],
    bloch: [f64; 3],
    u: [f64; 3],
    w: [f64; 3],
    exhaustive: bool,
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    outcome: i8,
    beta: (f64, f64),
    normalization: f64,
}

impl Problem {
    fn normalization(&self, bp: f64, bm: f64) -> f64 {
        if self.exhaustive {
            let table: Vec<f64> = self
                .m
                .iter()
                .zip(&self.mp)
                .map(|(a, b)| bp * a + bm * b)
                .collect();
            classical_bound(&table).expect("within exhaustive limit")
        } else {
            bp.abs() + bm.abs()
        }
    }

    fn evaluate(&self, dir: &UnitVector3) -> Option<Candidate> {
        let dot = |v: &[f64]| dir.dot(&[v[0], v[1], v[2]]);
        let mr = dot(&self.bloch);
        let (mu, mw) = (dot(&self.u), dot(&self.w));
        let mut best: Option<Candidate> = None;
        for s in [1i8, -1] {
            let sf = s as f64;
            let p = 0.5 * (1.0 + sf * mr);
            if p <= tol::PROB {
                continue;
            }
            let tm = 0.5 * (self.e_m[0] + sf * dot(&self.e_m[1..])) / p;
            let tmp = 0.5 * (self.e_mp[0] + sf * dot(&self.e_mp[1..])) / p;
            let (bp, bm) = (sf * mu, sf * mw);
            if bp.abs() + bm.abs() <= 1e-12 {
                continue;
            }
            let norm = self.normalization(bp, bm);
            if norm <= 1e-12 {
                continue;
            }
            let value = (bp * tm + bm * tmp) / norm;
            if best.is_none_or(|b| value > b.value) {
                best = Some(Candidate {
                    value,
                    outcome: s,
                    beta: (bp, bm),
                    normalization: norm,
                });
            }
        }
        best
    }

    /// Pattern search over spherical angles.
    fn refine(&self, start: UnitVector3) -> Option<(UnitVector3, Candidate)> {
        let mut best = (start, self.evaluate(&start)?);
        let (mut theta, mut phi) = start.angles();
        let mut step = 0.25;
        let mut evaluations = 0;
        while step > 1e-10 && evaluations < 4000 {
            let mut moved = false;
            for (dt, dp) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let dir = UnitVector3::from_angles(theta + dt, phi + dp);
                evaluations += 1;
                if let Some(c) = self.evaluate(&dir) {
                    if c.value > best.1.value + tol::OPT * 1e-3 {
                        best = (dir, c);
                        theta += dt;
                        phi += dp;
                        moved = true;
                        break;
                    }
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        Some(best)
    }
}

/// Measure qubit `k` in the best direction found and return the conditional
/// state with its rescaled `(N-1)`-qubit Bell operator. Fails loudly when the
/// achieved value falls below `Tr(rho B)/sqrt 2 - tol::OPT`.
pub fn reduce_by_measurement(rho: &DensityMatrix, b: &BellOperator, k: usize) -> Result<Reduction> {
    reduce_by_measurement_with(rho, b, k, &ReduceOptions::default())
}

pub fn reduce_by_measurement_with(
    rho: &DensityMatrix,
    b: &BellOperator,
    k: usize,
    options: &ReduceOptions,
) -> Result<Reduction> {
    let n = rho.n_qubits();
    if n < 3 {
        return Err(Error::TooFewQubits { min: 3, got: n });
    }
    if b.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.n_qubits(),
        });
    }
    if k >= n {
        return Err(Error::QubitOutOfRange {
            index: k,
            n_qubits: n,
        });
    }

    let c = b.coefficients();
    let rest = 1usize << (n - 1);
    let (mut m, mut mp) = (vec![0.0; rest], vec![0.0; rest]);
    for r in 0..rest {
        let (c0, c1) = (c[insert_bit(n, k, r, 0)], c[insert_bit(n, k, r, 1)]);
        m[r] = c0 + c1;
        mp[r] = c0 - c1;
    }
    let rest_settings = b.settings().without(k)?;
    let m_matrix = correlation_matrix(&m, &rest_settings);
    let mp_matrix = correlation_matrix(&mp, &rest_settings);
    let (mut e_m, mut e_mp, mut bloch) = ([0.0; 4], [0.0; 4], [0.0; 3]);
    for p in 0..4 {
        let reduced = weighted_partial_trace(rho.matrix(), n, k, &pauli(p));
        e_m[p] = trace_product(&reduced, &m_matrix).re;
        e_mp[p] = trace_product(&reduced, &mp_matrix).re;
        if p > 0 {
            bloch[p - 1] = reduced.trace().re;
        }
    }
    let [nk, nk2] = b.settings().pair(k).map(|v| v.as_array());
    let problem = Problem {
        u: std::array::from_fn(|i| 0.5 * (nk[i] + nk2[i])),
        w: std::array::from_fn(|i| 0.5 * (nk[i] - nk2[i])),
        m,
        mp,
        e_m,
        e_mp,
        bloch,
        exhaustive: n - 1 <= EXHAUSTIVE_LIMIT,
    };

    let mut starts: Vec<UnitVector3> = [problem.u, problem.w]
        .iter()
        .filter_map(|v| UnitVector3::normalize(*v, 1e-12))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    rng.set_stream(k as u64);
    starts.extend((0..options.starts).map(|_| UnitVector3::random(&mut rng)));

    let (direction, best) = starts
        .into_iter()
        .filter_map(|s| problem.refine(s))
        .reduce(|a, b| if b.1.value > a.1.value { b } else { a })
        .ok_or_else(|| Error::InvalidParameter("no admissible measurement direction".into()))?;

    let (bp, bm) = best.beta;
    let analytic_bound = bp.abs() + bm.abs();
    let euclidean_envelope = bp.hypot(bm);
    log::debug!(
        "reduction on qubit {k}: normalisation {} ({}), |b+|+|b-| = {analytic_bound}, sqrt(b+^2+b-^2) = {euclidean_envelope}",
        best.normalization,
        if problem.exhaustive { "exhaustive" } else { "analytic" },
    );

    let outcomes = measure_qubit(rho, k, &direction)?;
    let branch = outcomes
        .into_iter()
        .find(|o| o.sign == best.outcome)
        .expect("both outcomes are returned");
    let state = branch
        .state
        .ok_or_else(|| Error::InvalidParameter("selected outcome has zero probability".into()))?;
    let table: Vec<f64> = problem
        .m
        .iter()
        .zip(&problem.mp)
        .map(|(a, b)| (bp * a + bm * b) / best.normalization)
        .collect();
    let operator = wwzb_operator(&Family::Correlation(table), &rest_settings)?;
    let achieved = bell_value(&state, &operator)?;
    let input_value = bell_value(rho, b)?;
    let required = input_value / std::f64::consts::SQRT_2 - tol::OPT;
    if achieved < required {
        return Err(Error::ReductionGuarantee {
            achieved,
            required,
            input: input_value,
        });
    }
    Ok(Reduction {
        state,
        operator,
        measured_qubit: k,
        direction,
        outcome: best.outcome,
        probability: branch.probability,
        input_value,
        achieved,
        normalization: best.normalization,
        exhaustive: problem.exhaustive,
        analytic_bound,
        euclidean_envelope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ghz_state;
    use crate::bell::{mbk_coefficients, optimize_settings};

    #[test]
    fn split_tables_are_mbk_on_fewer_qubits() {
        // For MBK the halves around any qubit are M_{N-1} and M'_{N-1}.
        for n in 3..=6 {
            let (c, _) = mbk_coefficients(n);
            let (want, want_p) = mbk_coefficients(n - 1);
            for k in 0..n {
                let rest = 1 << (n - 1);
                let m: Vec<f64> = (0..rest)
                    .map(|r| c[insert_bit(n, k, r, 0)] + c[insert_bit(n, k, r, 1)])
                    .collect();
                let mp: Vec<f64> = (0..rest)
                    .map(|r| c[insert_bit(n, k, r, 0)] - c[insert_bit(n, k, r, 1)])
                    .collect();
                assert_eq!(m, want);
                assert_eq!(mp, want_p);
            }
        }
    }

    #[test]
    fn analytic_bound_matches_exhaustive_for_mbk() {
        let (m, mp) = mbk_coefficients(3);
        for (bp, bm) in [(0.3, -0.7), (1.0, 0.0), (-0.2, -0.5), (0.6, 0.6)] {
            let table: Vec<f64> = m.iter().zip(&mp).map(|(a, b)| bp * a + bm * b).collect();
            let exhaustive = classical_bound(&table).unwrap();
            assert!((exhaustive - (f64::abs(bp) + f64::abs(bm))).abs() < 1e-12);
        }
    }

    #[test]
    fn ghz_reduction_keeps_the_bound() {
        let n = 4;
        let rho = ghz_state(n).unwrap().projector();
        let opt = optimize_settings(&rho, &Family::Mbk, 8, 1).unwrap();
        let b = crate::bell::mbk_operator(&opt.settings);
        for k in 0..n {
            let r = reduce_by_measurement(&rho, &b, k).unwrap();
            assert!(r.achieved >= 2.0 - 1e-8, "k = {k}: {}", r.achieved);
            assert!(r.ratio() >= std::f64::consts::FRAC_1_SQRT_2 - 1e-8);
            assert_eq!(r.state.n_qubits(), n - 1);
        }
    }

    #[test]
    fn rejects_two_qubits() {
        let rho = ghz_state(2).unwrap().projector();
        let opt = optimize_settings(&rho, &Family::Mbk, 2, 0).unwrap();
        let b = crate::bell::mbk_operator(&opt.settings);
        assert!(matches!(
            reduce_by_measurement(&rho, &b, 0),
            Err(Error::TooFewQubits { .. })
        ));
    }
}
