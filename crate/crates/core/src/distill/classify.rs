/// What an amount of Bell violation certifies about an `N`-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViolationReport {
    pub n_qubits: usize,
    pub violation: f64,
    /// Smallest `p >= 2` with `v > 2^((N-p)/2)`: any `p` qubits can be split
    /// into two groups sharing distillable entanglement after the other
    /// `N - p` measure. `None` without violation.
    pub p_min: Option<usize>,
    /// Minimum number of genuinely entangled qubits.
    pub depth_bound: usize,
    pub fully_distillable: bool,
    pub bipartite_distillable: bool,
}

/// `2^(e/2)` correctly rounded to `f64`.
pub fn half_power(e: u32) -> f64 {
    let base = 2f64.powi((e / 2) as i32);
    if e.is_multiple_of(2) {
        base
    } else {
        // SQRT_2 is correctly rounded; scaling by a power of two is exact.
        base * std::f64::consts::SQRT_2
    }
}

/// `v > 2^(e/2)`, strict, against the correctly rounded threshold: the double
/// nearest `2^(e/2)` counts as equal to it.
pub fn exceeds_half_power(v: f64, e: u32) -> bool {
    v > half_power(e)
}

/// Translate a violation `v = Tr(rho B_N)` into distillability and
/// entanglement-depth statements.
pub fn classify(v: f64, n_qubits: usize) -> ViolationReport {
    let n = n_qubits as u32;
    let p_min = (2..=n)
        .find(|&p| exceeds_half_power(v, n - p))
        .map(|p| p as usize);
    let depth_bound = (1..n)
        .rev()
        .find(|&m| exceeds_half_power(v, m - 1))
        .map_or(1, |m| (m + 1) as usize);
    ViolationReport {
        n_qubits,
        violation: v,
        p_min,
        depth_bound,
        fully_distillable: n >= 2 && exceeds_half_power(v, n - 2),
        bipartite_distillable: exceeds_half_power(v, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn seven_qubits_at_three() {
        let r = classify(3.0, 7);
        assert_eq!(r.p_min, Some(4));
        assert_eq!(r.depth_bound, 5);
        assert!(r.bipartite_distillable);
        assert!(!r.fully_distillable);
    }

    #[test]
    fn maximal_violation_is_fully_distillable() {
        let r = classify(4.0, 5);
        assert_eq!(r.p_min, Some(2));
        assert!(r.fully_distillable);
        assert_eq!(r.depth_bound, 5);
    }

    #[test]
    fn no_violation() {
        let r = classify(1.0, 5);
        assert_eq!(r.p_min, None);
        assert!(!r.bipartite_distillable);
        assert!(!r.fully_distillable);
        assert_eq!(r.depth_bound, 1);
        assert_eq!(classify(0.0, 3).p_min, None);
    }

    #[test]
    fn thresholds_are_strict() {
        // v exactly 2^((N-2)/2) for even and odd exponents.
        assert!(!classify(2.0, 4).fully_distillable);
        assert!(classify(2f64.next_up(), 4).fully_distillable);
        let s = std::f64::consts::SQRT_2;
        assert!(!exceeds_half_power(s, 1));
        assert!(exceeds_half_power(s.next_up(), 1));
        assert!(!exceeds_half_power(2.0 * s, 3));
        assert!(exceeds_half_power((2.0 * s).next_up(), 3));
    }

    #[test]
    fn padded_ghz_value_is_not_fully_distillable() {
        for n in 4..=8 {
            let v = 2f64.powf((n as f64 - 2.0) / 2.0);
            let r = classify(v, n);
            assert!(!r.fully_distillable, "n = {n}");
            assert_eq!(r.p_min, Some(3));
        }
    }

    proptest! {
        #[test]
        fn classify_is_monotone(a in 0.0f64..40.0, b in 0.0f64..40.0, n in 2usize..12) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let (rl, rh) = (classify(lo, n), classify(hi, n));
            let p = |r: &ViolationReport| r.p_min.unwrap_or(usize::MAX);
            prop_assert!(p(&rh) <= p(&rl));
            prop_assert!(rh.depth_bound >= rl.depth_bound);
            prop_assert_eq!(rh.fully_distillable, rh.p_min == Some(2));
            prop_assert_eq!(rh.bipartite_distillable, rh.p_min.is_some());
        }

        #[test]
        fn p_min_is_the_smallest_passing_group(v in 0.0f64..40.0, n in 2usize..12) {
            let r = classify(v, n);
            if let Some(p) = r.p_min {
                prop_assert!(v > 2f64.powf((n - p) as f64 / 2.0) * (1.0 - 1e-12));
                if p > 2 {
                    prop_assert!(v <= 2f64.powf((n - p + 1) as f64 / 2.0) * (1.0 + 1e-12));
                }
            } else {
                prop_assert!(v <= 1.0);
            }
        }
    }
}
