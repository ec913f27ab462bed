//! Lowest-order scattering amplitudes and rates of the driven, trapped atom.
//!
//! These are the physical pictures behind the Langevin coefficients in
//! [`crate::params`] and serve as an independent cross-check of them. Rates
//! that involve the motional sidebands take the trap frequency explicitly so
//! that callers choose between the bare `nu` and the renormalized `nu'`.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{CavityMode, SystemParams};

/// Free-space scattering amplitudes: carrier, blue and red sideband.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpontaneousAmplitudes {
    pub t0: C64,
    pub plus: C64,
    pub minus: C64,
    pub gamma: f64,
    /// Representative emission angle relative to the motional axis.
    pub theta_ks: f64,
}

/// Laser-into-cavity scattering amplitudes for one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityAmplitudes {
    pub mode: CavityMode,
    pub t0: C64,
    pub plus: C64,
    pub minus: C64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScatteringAmplitudes {
    pub spontaneous: SpontaneousAmplitudes,
    pub cavity: [CavityAmplitudes; 2],
}

impl ScatteringAmplitudes {
    pub fn compute(p: &SystemParams, theta_ks: f64, trap_frequency: f64) -> Result<Self> {
        Ok(Self {
            spontaneous: spontaneous_amplitudes(p, theta_ks)?,
            cavity: [
                cavity_amplitudes(p, CavityMode::One, trap_frequency),
                cavity_amplitudes(p, CavityMode::Two, trap_frequency),
            ],
        })
    }
}

fn resolvent(p: &SystemParams, offset: f64) -> C64 {
    C64::new(p.delta + offset, p.gamma / 2.0).inv()
}

/// Amplitudes for scattering a laser photon into free space, with the bare
/// trap frequency in the sideband denominators.
pub fn spontaneous_amplitudes(p: &SystemParams, theta_ks: f64) -> Result<SpontaneousAmplitudes> {
    if p.gamma <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "gamma",
            reason: "free-space scattering needs a positive linewidth".into(),
        });
    }
    let scale = p.gamma * p.omega_rabi;
    let (cos_l, cos_s) = (p.theta_l.cos(), theta_ks.cos());
    let carrier = resolvent(p, 0.0);
    Ok(SpontaneousAmplitudes {
        t0: scale * carrier,
        plus: p.eta * scale * (cos_l * resolvent(p, -p.nu) + cos_s * carrier),
        minus: p.eta * scale * (cos_l * resolvent(p, p.nu) + cos_s * carrier),
        gamma: p.gamma,
        theta_ks,
    })
}

/// Free-space scattering rate from phonon number `n` to `n_prime`.
///
/// Transitions changing the phonon number by more than one are outside first
/// order in the Lamb-Dicke expansion and contribute zero.
pub fn spontaneous_rate(amps: &SpontaneousAmplitudes, n: u64, n_prime: i64) -> Result<f64> {
    if n_prime < 0 {
        return Err(Error::InvalidParameter {
            name: "n_prime",
            reason: format!("phonon number {n_prime} is negative"),
        });
    }
    let n_f = n as f64;
    let rate = match n_prime - n as i64 {
        0 => amps.t0.norm_sqr(),
        1 => amps.plus.norm_sqr() * (n_f + 1.0),
        -1 => amps.minus.norm_sqr() * n_f,
        _ => 0.0,
    };
    Ok(rate / amps.gamma)
}

/// Motional decoherence rate from recoil of spontaneously scattered photons;
/// `alpha` summarizes the angular dispersion of the emission pattern.
pub fn motional_decoherence_rate(p: &SystemParams, alpha: f64) -> f64 {
    p.eta.powi(2) * (p.theta_l.cos().powi(2) + alpha) * p.gamma * p.omega_rabi.powi(2)
        / p.delta.powi(2)
}

pub fn cavity_amplitudes(
    p: &SystemParams,
    mode: CavityMode,
    trap_frequency: f64,
) -> CavityAmplitudes {
    let (g, phi) = match mode {
        CavityMode::One => (p.g1, p.phi1),
        CavityMode::Two => (p.g2, p.phi2),
    };
    let scale = p.omega_rabi * g * phi.cos();
    let carrier = resolvent(p, 0.0);
    let i = C64::i();
    // The cavity recoil term carries cos(phi) * tan(phi) = sin(phi).
    let recoil = p.theta_c.cos() * phi.sin() * p.omega_rabi * g * carrier;
    let laser = p.omega_rabi * g * phi.cos() * i * p.theta_l.cos();
    CavityAmplitudes {
        mode,
        t0: scale * carrier,
        plus: p.eta * (laser * resolvent(p, -trap_frequency) - recoil),
        minus: p.eta * (laser * resolvent(p, trap_frequency) - recoil),
    }
}

/// Rate of scattering a laser photon through cavity mode `mode` out of the
/// mirror, for phonon number `n -> n_prime` and laser–cavity detuning
/// `delta_j`. Uses the bare trap frequency.
pub fn cavity_scattering_rate(
    p: &SystemParams,
    mode: CavityMode,
    n: u64,
    n_prime: i64,
    delta_j: f64,
) -> Result<f64> {
    let kappa = match mode {
        CavityMode::One => p.kappa1,
        CavityMode::Two => p.kappa2,
    };
    if kappa <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "kappa",
            reason: format!("mode {} needs a positive decay rate", mode.number()),
        });
    }
    if n_prime < 0 {
        return Err(Error::InvalidParameter {
            name: "n_prime",
            reason: format!("phonon number {n_prime} is negative"),
        });
    }
    let amps = cavity_amplitudes(p, mode, p.nu);
    let lorentz = |d: f64| 2.0 * kappa / (d.powi(2) + kappa.powi(2));
    let n_f = n as f64;
    Ok(match n_prime - n as i64 {
        0 => lorentz(delta_j) * amps.t0.norm_sqr(),
        1 => lorentz(delta_j - p.nu) * amps.plus.norm_sqr() * (n_f + 1.0),
        -1 => lorentz(delta_j + p.nu) * amps.minus.norm_sqr() * n_f,
        _ => 0.0,
    })
}

/// Loss rate of `photons` cavity photons by absorption and spontaneous
/// re-emission. Valid with the trap at an antinode (`tan(phi_j) = 0`).
pub fn cavity_spontaneous_loss(
    p: &SystemParams,
    mode: CavityMode,
    photons: u64,
    delta_j: f64,
) -> Result<f64> {
    let (g, phi) = match mode {
        CavityMode::One => (p.g1, p.phi1),
        CavityMode::Two => (p.g2, p.phi2),
    };
    if phi.sin().abs() > 1e-9 {
        return Err(Error::InvalidParameter {
            name: "phi",
            reason: format!(
                "mode {} loss formula assumes an antinode (tan(phi) = 0)",
                mode.number()
            ),
        });
    }
    let detuning = p.delta - delta_j;
    Ok(p.gamma * g.powi(2) * photons as f64 / (detuning.powi(2) + p.gamma.powi(2) / 4.0))
}

/// Per-quantum a.c.-Stark coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarkCoefficients {
    /// Shift per phonon: renormalization of the trap frequency.
    pub per_phonon: f64,
    /// Shift per photon of each cavity mode.
    pub per_photon: [f64; 2],
}

/// The phonon coefficient is evaluated as the real part of the sum of the
/// three resolvents, not through the closed form used in [`crate::params`].
pub fn stark_shift_coefficients(
    p: &SystemParams,
    trap_frequency: f64,
    detunings: [f64; 2],
) -> StarkCoefficients {
    let resolvents =
        resolvent(p, trap_frequency) + resolvent(p, -trap_frequency) - resolvent(p, 0.0);
    let per_phonon = p.eta.powi(2) * p.theta_l.cos().powi(2) * p.omega_rabi.powi(2) * resolvents.re;
    let photon = |g: f64, phi: f64, delta_j: f64| {
        let d = p.delta - delta_j;
        (g * phi.cos()).powi(2) * d / (d.powi(2) + p.gamma.powi(2) / 4.0)
    };
    StarkCoefficients {
        per_phonon,
        per_photon: [
            photon(p.g1, p.phi1, detunings[0]),
            photon(p.g2, p.phi2, detunings[1]),
        ],
    }
}
