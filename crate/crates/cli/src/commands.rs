use std::path::Path;

use belldist::algebra::{ghz_state, DensityMatrix};
use belldist::distill::gen_product_state;
use belldist::{
    classify, full_distillability_witness, gen_dur_state, gen_ghz_padded, gen_noisy_ghz, nppt_scan,
    optimize_settings, reduce_by_measurement, wwzb_operator, Family,
};

use crate::error::CliError;
use crate::files::{read_json, write_json, SpecFile, StateFile};
use crate::report::{
    Classification, CutEntry, InputDescriptor, ReductionReport, ReportFile, ScanReport,
    ScanSummary, WitnessSummary, TOOL, VERSION,
};
use crate::{Kind, Optimizer};

pub fn generate(
    kind: Kind,
    n: usize,
    p: Option<f64>,
    seed: u64,
    label: Option<String>,
    out: &Path,
) -> Result<(), CliError> {
    if n == 0 || n > 10 {
        return Err(CliError::Usage(format!("--n {n} is outside 1..=10")));
    }
    if p.is_some() && !matches!(kind, Kind::NoisyGhz) {
        return Err(CliError::Usage("--p only applies to noisy-ghz".into()));
    }
    let usage = |e: belldist::Error| CliError::Usage(e.to_string());
    let (rho, default_label) = match kind {
        Kind::Ghz => (
            ghz_state(n).map_err(usage)?.projector(),
            format!("ghz n={n}"),
        ),
        Kind::NoisyGhz => {
            let p = p.ok_or_else(|| CliError::Usage("noisy-ghz needs --p".into()))?;
            (
                gen_noisy_ghz(n, p).map_err(usage)?,
                format!("noisy-ghz n={n} p={p}"),
            )
        }
        Kind::GhzPadded => (
            gen_ghz_padded(n).map_err(usage)?,
            format!("ghz-padded n={n}"),
        ),
        Kind::Dur => (gen_dur_state(n).map_err(usage)?, format!("dur n={n}")),
        Kind::Product => (
            gen_product_state(n, seed).map_err(usage)?,
            format!("product n={n} seed={seed}"),
        ),
    };
    write_json(
        out,
        &StateFile::from_state(&rho, Some(label.unwrap_or(default_label))),
    )
}

fn load(path: &Path) -> Result<(DensityMatrix, InputDescriptor), CliError> {
    let file: StateFile = read_json(path)?;
    let rho = file
        .to_state()
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    let input = InputDescriptor {
        path: path.display().to_string(),
        label: file.label,
        n_qubits: rho.n_qubits(),
    };
    Ok((rho, input))
}

fn family(arg: &str, n: usize) -> Result<Family, CliError> {
    if arg == "mbk" {
        return Ok(Family::Mbk);
    }
    let file: SpecFile = read_json(Path::new(arg))?;
    if file.n_qubits != n {
        return Err(CliError::Invalid(format!(
            "{arg}: n_qubits: spec has {}, state has {n}",
            file.n_qubits
        )));
    }
    Ok(Family::Wwzb(file.to_spec()?))
}

fn check_restarts(opt: &Optimizer) -> Result<(), CliError> {
    if opt.restarts == 0 {
        return Err(CliError::Usage("--restarts must be at least 1".into()));
    }
    Ok(())
}

pub fn analyze(input: &Path, opt: &Optimizer, out: &Path) -> Result<(), CliError> {
    check_restarts(opt)?;
    let (rho, descriptor) = load(input)?;
    let n = rho.n_qubits();
    let family = family(&opt.family, n)?;
    let best = optimize_settings(&rho, &family, opt.restarts, opt.seed)?;
    let report = classify(best.value, n);
    let scan = if n >= 2 { Some(nppt_scan(&rho)?) } else { None };
    let scan = match &scan {
        Some(s) => {
            let worst = s.worst();
            ScanSummary {
                cuts: s.cuts.len(),
                nppt_count: s.nppt_count(),
                worst_eigenvalue: worst.min_eigenvalue,
                worst_mask: worst.cut.mask(),
            }
        }
        None => ScanSummary {
            cuts: 0,
            nppt_count: 0,
            worst_eigenvalue: 0.0,
            worst_mask: 0,
        },
    };
    let witness = full_distillability_witness(&rho)?;
    let file = ReportFile {
        tool: TOOL.into(),
        version: VERSION.into(),
        seed: opt.seed,
        restarts: opt.restarts,
        family: family.name().into(),
        input: descriptor,
        violation: best.value,
        settings: best
            .settings
            .pairs()
            .iter()
            .map(|[a, b]| [a.as_array(), b.as_array()])
            .collect(),
        classification: Classification {
            p_min: report.p_min,
            depth_bound: report.depth_bound,
            fully_distillable: report.fully_distillable,
            bipartite_distillable: report.bipartite_distillable,
        },
        scan,
        witness: WitnessSummary {
            overlap: witness.overlap,
            passes: witness.passes,
            certifies: witness.certifies,
            local_unitary_optimized: witness.local_unitary_optimized,
        },
    };
    write_json(out, &file)
}

pub fn reduce(
    input: &Path,
    qubit: usize,
    opt: &Optimizer,
    out: &Path,
    state_out: Option<&Path>,
) -> Result<(), CliError> {
    check_restarts(opt)?;
    let (rho, descriptor) = load(input)?;
    let n = rho.n_qubits();
    if n < 3 {
        return Err(CliError::Usage(format!(
            "reduce needs at least 3 qubits, the input has {n}"
        )));
    }
    if qubit >= n {
        return Err(CliError::Usage(format!(
            "--qubit {qubit} is outside 0..{n}"
        )));
    }
    let family = family(&opt.family, n)?;
    let best = optimize_settings(&rho, &family, opt.restarts, opt.seed)?;
    let b = wwzb_operator(&family, &best.settings)?;
    let r = reduce_by_measurement(&rho, &b, qubit)?;
    let state = StateFile::from_state(
        &r.state,
        Some(format!("reduced from {} on qubit {qubit}", descriptor.path)),
    );
    if let Some(path) = state_out {
        write_json(path, &state)?;
    }
    let file = ReductionReport {
        tool: TOOL.into(),
        version: VERSION.into(),
        seed: opt.seed,
        restarts: opt.restarts,
        family: family.name().into(),
        input: descriptor,
        qubit,
        input_value: r.input_value,
        direction: r.direction.as_array(),
        outcome: r.outcome,
        probability: r.probability,
        achieved: r.achieved,
        ratio: r.ratio(),
        normalization: r.normalization,
        exhaustive_normalization: r.exhaustive,
        reduced_coefficients: r.operator.coefficients().to_vec(),
        reduced_state: state,
    };
    write_json(out, &file)
}

pub fn scan(input: &Path, out: &Path) -> Result<(), CliError> {
    let (rho, descriptor) = load(input)?;
    if rho.n_qubits() < 2 {
        return Err(CliError::Usage("scan needs at least 2 qubits".into()));
    }
    let scan = nppt_scan(&rho)?;
    let file = ScanReport {
        tool: TOOL.into(),
        version: VERSION.into(),
        input: descriptor,
        nppt_count: scan.nppt_count(),
        cuts: scan
            .cuts
            .iter()
            .map(|c| CutEntry {
                mask: c.cut.mask(),
                side_a: c.cut.side_a(),
                side_b: c.cut.side_b(),
                min_eigenvalue: c.min_eigenvalue,
                nppt: c.nppt,
            })
            .collect(),
    };
    write_json(out, &file)
}
