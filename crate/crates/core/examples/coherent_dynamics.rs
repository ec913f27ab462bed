//! Lossless evolution from the vacuum: the motion returns to its initial state
//! every half period pi/Theta while the two cavity modes stay entangled.

use std::f64::consts::PI;

use sideband_squeezing::cli::{Preset, RunConfig};
use sideband_squeezing::coherent::{evolution_map, propagate_vacuum};
use sideband_squeezing::{DerivedCouplings, NuPrimeMode};

fn main() -> sideband_squeezing::Result<()> {
    let p = RunConfig::from_preset(Preset::Fig2).params;
    let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm)?;
    let theta = dc.theta()?;

    println!(
        "{:>8} {:>12} {:>12} {:>12}",
        "Theta t", "duan", "motion-cav", "metric err"
    );
    for k in 0..=16 {
        let t = k as f64 / 16.0 * 2.0 * PI / theta;
        let map = evolution_map(dc.chi1, dc.chi2, t)?;
        let state = propagate_vacuum(&map);
        println!(
            "{:8.3} {:12.6} {:12.3e} {:12.1e}",
            theta * t,
            state.duan_combination(),
            state.motion_cavity_correlation(),
            map.metric_defect()
        );
    }
    let half = propagate_vacuum(&evolution_map(dc.chi1, dc.chi2, PI / theta)?);
    println!(
        "\nat pi/Theta: Duan = {:.5}, vacuum value 2",
        half.duan_combination()
    );
    Ok(())
}
