//! Effective Raman couplings, loss rates and Stark shifts for the reference
//! ion-cavity parameters, with and without self-consistent trap frequency.

use std::f64::consts::TAU;

use sideband_squeezing::cli::{Preset, RunConfig};
use sideband_squeezing::{DerivedCouplings, NuPrimeMode};

fn main() -> sideband_squeezing::Result<()> {
    let p = RunConfig::from_preset(Preset::Fig2).params;
    for warning in p.validate()? {
        println!("warning: {warning}");
    }
    for mode in [NuPrimeMode::ClosedForm, NuPrimeMode::FixedPoint] {
        let dc = DerivedCouplings::compute(&p, mode)?;
        println!("\n{mode:?}");
        println!(
            "  nu'/2pi        = {:.3} Hz (shift {:+.1} Hz)",
            dc.nu_prime / TAU,
            (dc.nu_prime - p.nu) / TAU
        );
        println!("  |chi1|/2pi     = {:.1} Hz", dc.chi1.norm() / TAU);
        println!("  |chi2|/2pi     = {:.1} Hz", dc.chi2.norm() / TAU);
        println!("  Theta/2pi      = {:.1} Hz", dc.theta()? / TAU);
        println!("  Sigma/2pi      = {:.1} Hz", dc.sigma_big / TAU);
        println!(
            "  kappa_1L, 2L   = {:.2}, {:.2} Hz",
            dc.kappa_1l / TAU,
            dc.kappa_2l / TAU
        );
        println!(
            "  kappa_1b, 2b   = {:.2}, {:.2} Hz",
            dc.kappa_1b / TAU,
            dc.kappa_2b / TAU
        );
        println!(
            "  delta_1L, 2L   = {:.1}, {:.1} Hz",
            dc.delta_1l / TAU,
            dc.delta_2l / TAU
        );
        println!(
            "  cavity tuning  = {:.1}, {:.1} Hz",
            dc.delta_1 / TAU,
            dc.delta_2 / TAU
        );
        println!(
            "  n_th           = {:.4} (|Delta|/4nu' = {:.3})",
            dc.n_th.unwrap_or(f64::NAN),
            dc.n_th_estimate
        );
    }
    Ok(())
}
