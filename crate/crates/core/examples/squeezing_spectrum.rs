//! Full squeezing spectrum for the three cavity linewidths, compared with the
//! ideal analytic form. Pass a directory to also write the CSV files.

use std::f64::consts::TAU;

use sideband_squeezing::cli::{compute_spectrum, spectrum_csv, Preset, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = std::env::args().nth(1);
    for preset in Preset::ALL {
        let cfg = RunConfig::from_preset(preset);
        let trace = compute_spectrum(&cfg)?;
        let theta = trace.theta.expect("presets are in the squeezing regime");
        let regime = trace.regime.unwrap();
        println!(
            "{preset}: kappa/2pi = {:.0} Hz, Theta/kappa = {:.2}, {:?}",
            trace.kappa / TAU,
            theta / trace.kappa,
            regime.regime
        );
        for dip in &trace.minima {
            let width = dip
                .fwhm
                .map_or("-".to_string(), |w| format!("{:.3} kappa", w / trace.kappa));
            println!(
                "  dip at {:+.4} Theta: S = {:.4}, FWHM {width}",
                dip.omega / theta,
                dip.depth
            );
        }
        let worst = trace
            .s_minus
            .iter()
            .zip(&trace.s_analytic)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("  max |S_full - S_ideal| = {worst:.4}");
        if let Some(dir) = &out_dir {
            let path = std::path::Path::new(dir).join(format!("{preset}.csv"));
            std::fs::write(&path, spectrum_csv(&trace))?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
