//! See-saw maximisation of `Tr(rho B)` over measurement directions.
//!
//! With every other direction fixed the objective is linear in any single
//! direction `n`, `Tr(rho B) = v . n`, so the best choice is `v / |v|`.
//! Sweeps visit qubit 0..N-1 and update both of its directions (the two
//! updates are independent given the other qubits).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DensityMatrix, UnitVector3};
use crate::{tol, Result};

use super::correlation::{CorrelationTensor, Tensor};
use super::operator::Family;
use super::settings::MeasurementSettings;

#[derive(Debug, Clone)]
pub struct OptimizeOptions {
    pub restarts: usize,
    pub seed: u64,
    /// Stop once a full sweep improves by less than this.
    pub tolerance: f64,
    pub max_sweeps: usize,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self {
            restarts: 32,
            seed: 0,
            tolerance: tol::OPT,
            max_sweeps: 20_000,
        }
    }
}

/// Best result over all restarts.
#[derive(Debug, Clone)]
pub struct Optimized {
    pub value: f64,
    pub settings: MeasurementSettings,
    pub best_restart: usize,
    /// Sweeps used by the best restart.
    pub sweeps: usize,
    pub converged: bool,
    /// Direction updates skipped because the local field vanished.
    pub degenerate_updates: usize,
}

/// One see-saw run from fixed initial settings.
#[derive(Debug, Clone)]
pub struct SeesawRun {
    pub value: f64,
    pub settings: MeasurementSettings,
    /// Objective before the first sweep and after each sweep.
    pub history: Vec<f64>,
    pub converged: bool,
    pub degenerate_updates: usize,
}

/// Coordinate ascent from `initial` until a sweep gains less than `tolerance`.
pub fn seesaw(
    tensor: &CorrelationTensor,
    coefficients: &[f64],
    initial: &MeasurementSettings,
    tolerance: f64,
    max_sweeps: usize,
) -> SeesawRun {
    let n = tensor.n_qubits();
    debug_assert_eq!(initial.n_qubits(), n);
    debug_assert_eq!(coefficients.len(), 1 << n);
    let mut w = initial.as_arrays();
    let mut value = tensor.functional_value(coefficients, &w);
    let mut history = vec![value];
    let mut degenerate = 0;
    let mut converged = false;
    let full = Tensor::full(tensor);

    for _ in 0..max_sweeps {
        // right[i]: Pauli axes of qubits > i already contracted (old directions).
        let mut right = vec![full.clone(); n];
        for i in (0..n.saturating_sub(1)).rev() {
            right[i] = right[i + 1].mode_product(i + 1, &w[i + 1]);
        }
        let mut swept = value;
        for (i, env) in right.into_iter().enumerate() {
            let mut x = env;
            for (k, wk) in w.iter().enumerate().take(i) {
                x = x.mode_product(k, wk);
            }
            let g = x.local_field(i, coefficients);
            for s in 0..2 {
                let norm = g[s].iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm > tol::GRAD {
                    w[i][s] = g[s].map(|v| v / norm);
                } else {
                    degenerate += 1;
                }
            }
            swept = (0..2)
                .map(|s| (0..3).map(|a| g[s][a] * w[i][s][a]).sum::<f64>())
                .sum();
        }
        history.push(swept);
        let gain = swept - value;
        value = swept;
        if gain < tolerance {
            converged = true;
            break;
        }
    }
    SeesawRun {
        value,
        settings: MeasurementSettings::from_arrays(&w),
        history,
        converged,
        degenerate_updates: degenerate,
    }
}

/// Random initial settings for restart `index`: its own ChaCha stream so the
/// outcome does not depend on scheduling.
pub fn restart_settings(n_qubits: usize, seed: u64, index: usize) -> MeasurementSettings {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    random_settings(n_qubits, &mut rng)
}

fn random_settings<R: Rng>(n: usize, rng: &mut R) -> MeasurementSettings {
    let pairs = (0..n)
        .map(|_| [UnitVector3::random(rng), UnitVector3::random(rng)])
        .collect();
    MeasurementSettings::new(pairs).expect("n >= 1")
}

/// Maximise `Tr(rho B)` for the given family over measurement directions.
pub fn optimize_settings(
    rho: &DensityMatrix,
    family: &Family,
    restarts: usize,
    seed: u64,
) -> Result<Optimized> {
    optimize_settings_with(
        rho,
        family,
        &OptimizeOptions {
            restarts,
            seed,
            ..OptimizeOptions::default()
        },
    )
}

pub fn optimize_settings_with(
    rho: &DensityMatrix,
    family: &Family,
    options: &OptimizeOptions,
) -> Result<Optimized> {
    if options.restarts == 0 {
        return Err(crate::Error::InvalidParameter(
            "restarts must be at least 1".into(),
        ));
    }
    let n = rho.n_qubits();
    let coefficients = family.coefficients(n)?;
    let tensor = CorrelationTensor::new(rho);
    let run = |r: usize| {
        let init = restart_settings(n, options.seed, r);
        (
            r,
            seesaw(
                &tensor,
                &coefficients,
                &init,
                options.tolerance,
                options.max_sweeps,
            ),
        )
    };

    #[cfg(feature = "parallel")]
    let runs: Vec<(usize, SeesawRun)> = {
        use rayon::prelude::*;
        (0..options.restarts).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let runs: Vec<(usize, SeesawRun)> = (0..options.restarts).map(run).collect();

    let degenerate_updates = runs.iter().map(|(_, r)| r.degenerate_updates).sum();
    let (best_restart, best) = runs
        .into_iter()
        .reduce(|a, b| if b.1.value > a.1.value { b } else { a })
        .expect("restarts >= 1");
    log::debug!(
        "see-saw: best {} from restart {} after {} sweeps",
        best.value,
        best_restart,
        best.history.len() - 1
    );
    Ok(Optimized {
        value: best.value,
        sweeps: best.history.len() - 1,
        converged: best.converged,
        settings: best.settings,
        best_restart,
        degenerate_updates,
    })
}
