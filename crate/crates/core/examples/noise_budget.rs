//! Noise sources one at a time: radiative loss, trap heating and cavity
//! mistuning, each measured by the squeezing left at zero frequency.

use std::f64::consts::TAU;

use sideband_squeezing::cli::presets::with_trap_heating;
use sideband_squeezing::cli::{Preset, RunConfig};
use sideband_squeezing::qle::{
    build_model_with_offsets, output_spectrum, DetuningOffsets, Quadrature,
};
use sideband_squeezing::{DerivedCouplings, NuPrimeMode};

fn main() -> sideband_squeezing::Result<()> {
    let p = RunConfig::from_preset(Preset::Fig2).params;
    let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm)?;
    let s0 =
        |dc: &DerivedCouplings, p, offsets: &DetuningOffsets| -> sideband_squeezing::Result<f64> {
            output_spectrum(
                &build_model_with_offsets(dc, p, offsets)?,
                0.0,
                Quadrature::Minus,
            )
        };
    let tuned = DetuningOffsets::default();

    let ideal = DerivedCouplings::lossless(dc.chi1, dc.chi2);
    println!(
        "ideal couplings only        S(0) = {:.5}",
        s0(&ideal, &p, &tuned)?
    );
    println!(
        "with radiative loss         S(0) = {:.5}",
        s0(&dc, &p, &tuned)?
    );
    let hot = with_trap_heating(p);
    println!(
        "plus trap heating {:.0} Hz   S(0) = {:.5}",
        hot.kappa_b * hot.nbar / TAU,
        s0(&dc, &hot, &tuned)?
    );
    for hz in [1.0, 5.0, 20.0] {
        let offsets = DetuningOffsets {
            cavity2: TAU * hz,
            ..Default::default()
        };
        match s0(&dc, &p, &offsets) {
            Ok(s) => println!("cavity 2 off by {hz:>4} Hz     S(0) = {s:.5}"),
            Err(e) => println!("cavity 2 off by {hz:>4} Hz     {e}"),
        }
    }
    let far = DetuningOffsets {
        cavity2: 3.0 * p.kappa2,
        ..Default::default()
    };
    if let Err(e) = build_model_with_offsets(&dc, &p, &far) {
        println!("cavity 2 off by 3 kappa     {e}");
    }
    Ok(())
}
