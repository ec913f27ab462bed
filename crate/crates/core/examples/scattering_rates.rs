//! Microscopic scattering amplitudes behind the effective couplings: free-space
//! sideband rates, cavity sideband amplitudes and photon loss through the atom.

use std::f64::consts::TAU;

use sideband_squeezing::cli::{Preset, RunConfig};
use sideband_squeezing::params::CavityMode;
use sideband_squeezing::scattering::{
    cavity_spontaneous_loss, motional_decoherence_rate, spontaneous_rate, stark_shift_coefficients,
    ScatteringAmplitudes,
};
use sideband_squeezing::{DerivedCouplings, NuPrimeMode, C64};

fn main() -> sideband_squeezing::Result<()> {
    let p = RunConfig::from_preset(Preset::Fig2).params;
    let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm)?;
    let amps = ScatteringAmplitudes::compute(&p, 0.0, dc.nu_prime)?;

    let sp = &amps.spontaneous;
    println!("free space, emission along the trap axis:");
    for (n, m) in [(0, 0), (0, 1), (1, 0), (5, 4), (5, 6)] {
        println!(
            "  {n} -> {m} phonons: {:.4e} Hz",
            spontaneous_rate(sp, n, m)? / TAU
        );
    }
    println!(
        "  motional decoherence (alpha = 2/5): {:.1} Hz",
        motional_decoherence_rate(&p, 0.4) / TAU
    );

    println!("\ncavity sidebands and the Raman couplings they define:");
    let [one, two] = amps.cavity;
    println!(
        "  -i t(1,+) = {:.4e}   chi1 = {:.4e}",
        -C64::i() * one.plus,
        dc.chi1
    );
    println!(
        "  -i t(2,-) = {:.4e}   chi2 = {:.4e}",
        -C64::i() * two.minus,
        dc.chi2
    );

    println!("\nresonant one-photon loss through the atom:");
    for (mode, delta_j, kappa_l) in [
        (CavityMode::One, dc.nu_prime, dc.kappa_1l),
        (CavityMode::Two, -dc.nu_prime, dc.kappa_2l),
    ] {
        let loss = cavity_spontaneous_loss(&p, mode, 1, delta_j)?;
        println!(
            "  mode {}: {:.3} Hz = 2 x {:.3} Hz",
            mode.number(),
            loss / TAU,
            kappa_l / TAU
        );
    }

    let stark = stark_shift_coefficients(&p, dc.nu_prime, [dc.delta_1, dc.delta_2]);
    println!(
        "\nStark shift per phonon {:.1} Hz, per photon {:.1} / {:.1} Hz",
        stark.per_phonon / TAU,
        stark.per_photon[0] / TAU,
        stark.per_photon[1] / TAU
    );
    Ok(())
}
