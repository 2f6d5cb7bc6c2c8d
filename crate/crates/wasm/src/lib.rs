//! Browser bindings: every export returns a JSON string.

use belldist::algebra::{ghz_state, DensityMatrix};
use belldist::bell::quantum_maximum;
use belldist::distill::half_power;
use belldist::{
    classify, full_distillability_witness, gen_dur_state, gen_ghz_padded, gen_noisy_ghz, nppt_scan,
    optimize_settings, Family,
};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest register the demo accepts; the scan at this size is 127 eigensolves of 256x256.
pub const MAX_QUBITS: usize = 8;

#[derive(Serialize)]
struct Classification {
    violation: f64,
    n_qubits: usize,
    p_min: Option<usize>,
    depth_bound: usize,
    fully_distillable: bool,
    bipartite_distillable: bool,
    /// `2^((N-p)/2)` for `p = N, N-1, ..., 2`.
    thresholds: Vec<(usize, f64)>,
}

#[derive(Serialize)]
struct Exploration {
    p: f64,
    violation: f64,
    expected: f64,
    overlap: f64,
    classification: Classification,
}

#[derive(Serialize)]
struct Cut {
    side_a: Vec<usize>,
    side_b: Vec<usize>,
    min_eigenvalue: f64,
    nppt: bool,
}

#[derive(Serialize)]
struct Scan {
    n_qubits: usize,
    nppt_count: usize,
    cuts: Vec<Cut>,
}

fn check_n(n: usize, min: usize) -> Result<(), String> {
    if (min..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(format!("n must be between {min} and {MAX_QUBITS}"))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn classification(v: f64, n: usize) -> Classification {
    let r = classify(v, n);
    Classification {
        violation: v,
        n_qubits: n,
        p_min: r.p_min,
        depth_bound: r.depth_bound,
        fully_distillable: r.fully_distillable,
        bipartite_distillable: r.bipartite_distillable,
        thresholds: (2..=n)
            .rev()
            .map(|p| (p, half_power((n - p) as u32)))
            .collect(),
    }
}

/// What a violation `v` certifies for `n` qubits.
#[wasm_bindgen]
pub fn classify_violation(v: f64, n: usize) -> Result<String, String> {
    check_n(n, 2)?;
    if !v.is_finite() {
        return Err("violation must be a finite number".into());
    }
    Ok(to_json(&classification(v, n)))
}

/// Optimized MBK value of `p |GHZ><GHZ| + (1-p) I/2^n`, with its
/// classification and GHZ overlap.
#[wasm_bindgen]
pub fn explore_noisy_ghz(n: usize, p: f64, restarts: usize, seed: u32) -> Result<String, String> {
    check_n(n, 2)?;
    let rho = gen_noisy_ghz(n, p).map_err(|e| e.to_string())?;
    let best = optimize_settings(&rho, &Family::Mbk, restarts.max(1), seed as u64)
        .map_err(|e| e.to_string())?;
    let overlap = full_distillability_witness(&rho)
        .map_err(|e| e.to_string())?
        .overlap;
    Ok(to_json(&Exploration {
        p,
        violation: best.value,
        expected: p * quantum_maximum(n),
        overlap,
        classification: classification(best.value, n),
    }))
}

/// Partial-transpose minimum eigenvalue across every bipartition of a named
/// state: `ghz`, `noisy-ghz` (uses `p`), `ghz-padded` or `dur`.
#[wasm_bindgen]
pub fn scan_state(kind: &str, n: usize, p: f64) -> Result<String, String> {
    check_n(n, 2)?;
    let rho: DensityMatrix = match kind {
        "ghz" => ghz_state(n).map(|s| s.projector()),
        "noisy-ghz" => gen_noisy_ghz(n, p),
        "ghz-padded" => gen_ghz_padded(n),
        "dur" => gen_dur_state(n),
        other => return Err(format!("unknown state kind {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let scan = nppt_scan(&rho).map_err(|e| e.to_string())?;
    Ok(to_json(&Scan {
        n_qubits: n,
        nppt_count: scan.nppt_count(),
        cuts: scan
            .cuts
            .iter()
            .map(|c| Cut {
                side_a: c.cut.side_a(),
                side_b: c.cut.side_b(),
                min_eigenvalue: c.min_eigenvalue,
                nppt: c.nppt,
            })
            .collect(),
    }))
}
