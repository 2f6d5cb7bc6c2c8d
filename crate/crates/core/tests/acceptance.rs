//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints one line; exits non-zero if any fails.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use belldist::algebra::ghz_state;
use belldist::bell::{mbk_coefficients, quantum_maximum};
use belldist::distill::classify;
use belldist::{
    bell_value, classical_bound, full_distillability_witness, gen_dur_state, gen_ghz_padded,
    gen_noisy_ghz, mbk_operator, nppt_scan, optimize_settings, reduce_by_measurement,
    wwzb_operator, Family, MeasurementSettings,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ghz_maximal_violation() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=8 {
        let rho = ghz_state(n).map_err(|e| e.to_string())?.projector();
        let v = optimize_settings(&rho, &Family::Mbk, 32, 0)
            .map_err(|e| e.to_string())?
            .value;
        let err = (v - quantum_maximum(n)).abs();
        worst = worst.max(err);
        ensure(err < 1e-6, || format!("N = {n}: {v}"))?;
    }
    Ok(format!("max |v - 2^((N-1)/2)| = {worst:.1e}"))
}

fn classical_bound_is_one() -> Outcome {
    for n in 2..=4 {
        let (c, _) = mbk_coefficients(n);
        let b = classical_bound(&c).map_err(|e| e.to_string())?;
        ensure(b == 1.0, || format!("N = {n}: {b}"))?;
    }
    Ok("bound = 1 for N = 2..4".into())
}

fn constructions_agree() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for n in 2..=6 {
        for _ in 0..100 {
            let s = MeasurementSettings::random(n, &mut rng);
            let a = mbk_operator(&s);
            let b = wwzb_operator(&Family::Mbk, &s).map_err(|e| e.to_string())?;
            let dev = (a.matrix() - b.matrix())
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            worst = worst.max(dev);
        }
    }
    ensure(worst < 1e-10, || format!("max deviation {worst:.1e}"))?;
    Ok(format!("max elementwise deviation {worst:.1e}"))
}

fn padded_ghz_is_sharp() -> Outcome {
    for n in 4..=8 {
        let rho = gen_ghz_padded(n).map_err(|e| e.to_string())?;
        let v = optimize_settings(&rho, &Family::Mbk, 32, 0)
            .map_err(|e| e.to_string())?
            .value;
        let nominal = 2f64.powf((n as f64 - 2.0) / 2.0);
        ensure((v - nominal).abs() < 1e-6, || format!("N = {n}: {v}"))?;
        ensure(!classify(nominal, n).fully_distillable, || {
            format!("N = {n}: classified fully distillable at {nominal}")
        })?;
    }
    Ok("v = 2^((N-2)/2), not fully distillable, N = 4..8".into())
}

fn violation_implies_nppt() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut violating = 0;
    for n in 3..=6 {
        for _ in 0..200 {
            let p = rng.random_range(0.0..1.0);
            let rho = gen_noisy_ghz(n, p)
                .and_then(|r| r.conjugate(&belldist::distill::random_local_unitary(n, &mut rng)))
                .map_err(|e| e.to_string())?;
            let v = optimize_settings(&rho, &Family::Mbk, 8, rng.random())
                .map_err(|e| e.to_string())?
                .value;
            if v > 1.0 + 1e-6 {
                violating += 1;
                let scan = nppt_scan(&rho).map_err(|e| e.to_string())?;
                ensure(scan.nppt_count() >= 1, || {
                    format!("N = {n}, p = {p}: v = {v} with every cut PPT")
                })?;
            }
        }
    }
    Ok(format!(
        "{violating}/800 violating states, 0 counterexamples"
    ))
}

fn reduction_chain() -> Outcome {
    let mut chains = 0;
    for n in 4..=7 {
        for q in [0.6, 0.75, 0.9, 1.0] {
            let rho = gen_noisy_ghz(n, q).map_err(|e| e.to_string())?;
            let opt = optimize_settings(&rho, &Family::Mbk, 8, 0).map_err(|e| e.to_string())?;
            let Some(p_min) = classify(opt.value, n).p_min else {
                continue;
            };
            for p in p_min..n {
                let mut state = rho.clone();
                let mut op = mbk_operator(&opt.settings);
                let mut previous = opt.value;
                for _ in 0..n - p {
                    let k = state.n_qubits() - 1;
                    let r = reduce_by_measurement(&state, &op, k).map_err(|e| e.to_string())?;
                    ensure(r.achieved >= previous / SQRT_2 - 1e-8, || {
                        format!("N = {n}, q = {q}, p = {p}: {} after {previous}", r.achieved)
                    })?;
                    previous = r.achieved;
                    state = r.state;
                    op = r.operator;
                }
                ensure(previous > 1.0, || {
                    format!("N = {n}, q = {q}, p = {p}: final value {previous}")
                })?;
                chains += 1;
            }
        }
    }
    Ok(format!("{chains} reduction chains"))
}

fn overlap_above_two_thirds() -> Outcome {
    let mut checked = 0;
    for n in 4..=7 {
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let rho = gen_noisy_ghz(n, p).map_err(|e| e.to_string())?;
            let w = full_distillability_witness(&rho).map_err(|e| e.to_string())?;
            let exact = p + (1.0 - p) / (1u64 << n) as f64;
            ensure((w.overlap - exact).abs() < 1e-12, || {
                format!("N = {n}, p = {p}: overlap {} vs {exact}", w.overlap)
            })?;
            let v = optimize_settings(&rho, &Family::Mbk, 8, 0)
                .map_err(|e| e.to_string())?
                .value;
            if classify(v, n).fully_distillable {
                checked += 1;
                ensure(w.overlap > 2.0 / 3.0, || {
                    format!("N = {n}, p = {p}: v = {v} but overlap {}", w.overlap)
                })?;
            }
        }
    }
    Ok(format!(
        "{checked} fully distillable states, all with overlap > 2/3"
    ))
}

fn classifier_arithmetic() -> Outcome {
    let r = classify(3.0, 7);
    ensure(r.p_min == Some(4) && r.depth_bound == 5, || {
        format!("{r:?}")
    })?;
    Ok("p_min = 4, depth_bound = 5".into())
}

fn dur_state() -> Outcome {
    let rho = gen_dur_state(8).map_err(|e| e.to_string())?;
    let scan = nppt_scan(&rho).map_err(|e| e.to_string())?;
    ensure(scan.cuts.len() == 127, || {
        format!("{} cuts", scan.cuts.len())
    })?;
    let worst_single = scan
        .single_qubit_cuts()
        .map(|c| c.min_eigenvalue)
        .fold(f64::INFINITY, f64::min);
    ensure(worst_single >= -1e-8, || {
        format!("single-qubit cut eigenvalue {worst_single}")
    })?;
    let v = optimize_settings(&rho, &Family::Mbk, 32, 0)
        .map_err(|e| e.to_string())?
        .value;
    ensure(v > 1.0 + 1e-6, || format!("v = {v}"))?;
    Ok(format!(
        "single-qubit cuts PPT (min eigenvalue {worst_single:.1e}), {} NPPT cuts, v = {v:.6}",
        scan.nppt_count()
    ))
}

fn noisy_ghz_linearity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = 0.0f64;
    for n in 3..=6 {
        // Direct matrix evaluation first: Tr(rho_p B) = p Tr(GHZ B) at fixed settings.
        let s = MeasurementSettings::random(n, &mut rng);
        let b = mbk_operator(&s);
        let pure = ghz_state(n).map_err(|e| e.to_string())?.projector();
        let g = bell_value(&pure, &b).map_err(|e| e.to_string())?;
        for p in [0.25, 0.5, 0.9] {
            let rho = gen_noisy_ghz(n, p).map_err(|e| e.to_string())?;
            let direct = bell_value(&rho, &b).map_err(|e| e.to_string())?;
            ensure((direct - p * g).abs() < 1e-12, || {
                format!("N = {n}, p = {p}: direct {direct} vs {}", p * g)
            })?;
            let v = optimize_settings(&rho, &Family::Mbk, 32, 0)
                .map_err(|e| e.to_string())?
                .value;
            let err = (v - p * quantum_maximum(n)).abs();
            worst = worst.max(err);
            ensure(err < 1e-6, || format!("N = {n}, p = {p}: {v}"))?;
        }
    }
    Ok(format!("max |v - p 2^((N-1)/2)| = {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "GHZ maximal violation",
            ghz_maximal_violation,
            Some(Duration::from_secs(60)),
        ),
        (
            "classical bound certification",
            classical_bound_is_one,
            Some(Duration::from_secs(5)),
        ),
        ("construction equivalence", constructions_agree, None),
        ("padded GHZ sharpness", padded_ghz_is_sharp, None),
        (
            "violation implies an NPPT cut",
            violation_implies_nppt,
            None,
        ),
        ("measurement reduction chain", reduction_chain, None),
        ("GHZ overlap above 2/3", overlap_above_two_thirds, None),
        ("classifier arithmetic", classifier_arithmetic, None),
        ("Dür state", dur_state, Some(Duration::from_secs(600))),
        ("noisy GHZ linearity", noisy_ghz_linearity, None),
    ];
    let mut failures = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.1?}, budget {limit:?}"));
            }
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} [{:>2}] {name}: {detail} ({elapsed:.2?})", i + 1);
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
