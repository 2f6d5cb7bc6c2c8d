//! Optimised MBK value for GHZ states of increasing size.

use std::time::Instant;

use belldist::algebra::ghz_state;
use belldist::bell::quantum_maximum;
use belldist::{bell_value, mbk_operator, optimize_settings, Family};

fn main() {
    for n in 2..=8 {
        let rho = ghz_state(n).unwrap().projector();
        let start = Instant::now();
        let opt = optimize_settings(&rho, &Family::Mbk, 32, 0).unwrap();
        let dense = bell_value(&rho, &mbk_operator(&opt.settings)).unwrap();
        println!(
            "N={n}  dense={dense:.12}  value={:.12}  target={:.12}  sweeps={}  restart={}  {:.2?}",
            opt.value,
            quantum_maximum(n),
            opt.sweeps,
            opt.best_restart,
            start.elapsed()
        );
    }
}
