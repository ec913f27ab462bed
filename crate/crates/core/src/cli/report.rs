//! Diagnostics table for one parameter set.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{classify_regime, Classification};
use crate::params::{
    cooling_limit_estimate, radiative_rates, thermal_occupation, CavityMode, DerivedCouplings,
    NuPrimeMode,
};
use crate::scattering;
use crate::{Result, SystemParams};

/// Complex number split for serialization, in Hz (value / 2π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexHz {
    pub re: f64,
    pub im: f64,
    pub abs: f64,
}

impl ComplexHz {
    fn new(z: crate::C64) -> Self {
        Self {
            re: z.re / TAU,
            im: z.im / TAU,
            abs: z.norm() / TAU,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatteringDiagnostics {
    /// `|t|^2` of the free-space carrier, blue and red sideband, (rad/s)^-2.
    /// `None` without a linewidth.
    pub spontaneous_abs2: Option<[f64; 3]>,
    /// Free-space rates `0 -> 1` and `1 -> 0` phonons, Hz.
    pub spontaneous_heating_hz: Option<f64>,
    pub spontaneous_cooling_hz: Option<f64>,
    pub motional_decoherence_hz: f64,
    /// `|t_+|, |t_-|` of each cavity mode, Hz.
    pub cavity_sidebands_hz: [[f64; 2]; 2],
    /// One-photon loss through the atom at cavity resonance, Hz. `None` off
    /// the standing-wave antinode.
    pub cavity_spontaneous_loss_hz: [Option<f64>; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub preset: Option<String>,
    pub nu_prime_mode: NuPrimeMode,
    pub nu_hz: f64,
    pub nu_prime_hz: f64,
    pub chi1_hz: ComplexHz,
    pub chi2_hz: ComplexHz,
    pub chi1_bar_hz: ComplexHz,
    pub chi2_bar_hz: ComplexHz,
    pub theta_hz: Option<f64>,
    pub sigma_hz: f64,
    pub kappa_hz: [f64; 2],
    pub theta_over_kappa: Option<f64>,
    pub regime: Option<Classification>,
    pub kappa_1l_hz: f64,
    pub kappa_2l_hz: f64,
    pub kappa_1b_hz: f64,
    pub kappa_2b_hz: f64,
    pub delta_1l_hz: f64,
    pub delta_2l_hz: f64,
    pub delta_b_hz: f64,
    pub delta_1_hz: f64,
    pub delta_2_hz: f64,
    /// Occupation from the rate ratio with bare-trap-frequency denominators.
    pub n_th: Option<f64>,
    /// Same ratio with the renormalized trap frequency.
    pub n_th_nu_prime: Option<f64>,
    /// `|Delta| / 4 nu'`.
    pub n_th_estimate: f64,
    pub squeezing_floor: Option<f64>,
    pub scattering: ScatteringDiagnostics,
    pub warnings: Vec<String>,
}

pub fn build_report(
    p: &SystemParams,
    alpha: f64,
    mode: NuPrimeMode,
    preset: Option<&str>,
    warnings: &[String],
) -> Result<Report> {
    let dc = DerivedCouplings::compute(p, mode)?;
    let bare = radiative_rates(p, p.nu);
    let kappa = 0.5 * (p.kappa1 + p.kappa2);

    let cavity = [CavityMode::One, CavityMode::Two]
        .map(|m| scattering::cavity_amplitudes(p, m, dc.nu_prime));
    let spontaneous = scattering::spontaneous_amplitudes(p, 0.0).ok();
    let rate = |n, m| {
        spontaneous
            .as_ref()
            .and_then(|a| scattering::spontaneous_rate(a, n, m).ok())
    };
    let loss = |mode, delta_j| {
        scattering::cavity_spontaneous_loss(p, mode, 1, delta_j)
            .ok()
            .map(|r| r / TAU)
    };

    Ok(Report {
        preset: preset.map(str::to_string),
        nu_prime_mode: mode,
        nu_hz: p.nu / TAU,
        nu_prime_hz: dc.nu_prime / TAU,
        chi1_hz: ComplexHz::new(dc.chi1),
        chi2_hz: ComplexHz::new(dc.chi2),
        chi1_bar_hz: ComplexHz::new(dc.chi1_bar),
        chi2_bar_hz: ComplexHz::new(dc.chi2_bar),
        theta_hz: dc.theta_big.map(|t| t / TAU),
        sigma_hz: dc.sigma_big / TAU,
        kappa_hz: [p.kappa1 / TAU, p.kappa2 / TAU],
        theta_over_kappa: dc.theta_big.map(|t| t / kappa),
        regime: dc.theta_big.map(|t| classify_regime(t, kappa)),
        kappa_1l_hz: dc.kappa_1l / TAU,
        kappa_2l_hz: dc.kappa_2l / TAU,
        kappa_1b_hz: dc.kappa_1b / TAU,
        kappa_2b_hz: dc.kappa_2b / TAU,
        delta_1l_hz: dc.delta_1l / TAU,
        delta_2l_hz: dc.delta_2l / TAU,
        delta_b_hz: dc.delta_b / TAU,
        delta_1_hz: dc.delta_1 / TAU,
        delta_2_hz: dc.delta_2 / TAU,
        n_th: thermal_occupation(bare.kappa_1b, bare.kappa_2b).ok(),
        n_th_nu_prime: dc.n_th,
        n_th_estimate: cooling_limit_estimate(p.delta, dc.nu_prime),
        squeezing_floor: dc.theta_big.map(|t| (dc.sigma_big / t).powi(4)),
        scattering: ScatteringDiagnostics {
            spontaneous_abs2: spontaneous
                .map(|a| [a.t0.norm_sqr(), a.plus.norm_sqr(), a.minus.norm_sqr()]),
            spontaneous_heating_hz: rate(0, 1).map(|r| r / TAU),
            spontaneous_cooling_hz: rate(1, 0).map(|r| r / TAU),
            motional_decoherence_hz: scattering::motional_decoherence_rate(p, alpha) / TAU,
            cavity_sidebands_hz: cavity.map(|c| [c.plus.norm() / TAU, c.minus.norm() / TAU]),
            cavity_spontaneous_loss_hz: [
                loss(CavityMode::One, dc.delta_1),
                loss(CavityMode::Two, dc.delta_2),
            ],
        },
        warnings: warnings.to_vec(),
    })
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |x| format!("{x:.6e}"))
}

impl Report {
    /// Two-column text table followed by nothing else.
    pub fn to_text(&self) -> String {
        let c = |z: &ComplexHz| format!("{:.6e} {:+.6e}i  (|.| {:.6e})", z.re, z.im, z.abs);
        let regime = match self.regime {
            Some(r) if r.weakly_resolved => format!("{:?} (weakly resolved)", r.regime),
            Some(r) => format!("{:?}", r.regime),
            None => "amplification (no steady periodic dynamics)".into(),
        };
        let s = &self.scattering;
        let rows: Vec<(&str, String)> = vec![
            ("preset", self.preset.clone().unwrap_or_else(|| "-".into())),
            ("nu' mode", format!("{:?}", self.nu_prime_mode)),
            ("nu / 2pi [Hz]", format!("{:.6e}", self.nu_hz)),
            ("nu' / 2pi [Hz]", format!("{:.10e}", self.nu_prime_hz)),
            ("chi1 / 2pi [Hz]", c(&self.chi1_hz)),
            ("chi2 / 2pi [Hz]", c(&self.chi2_hz)),
            ("chi1_bar / 2pi [Hz]", c(&self.chi1_bar_hz)),
            ("chi2_bar / 2pi [Hz]", c(&self.chi2_bar_hz)),
            ("Theta / 2pi [Hz]", opt(self.theta_hz)),
            ("Sigma / 2pi [Hz]", format!("{:.6e}", self.sigma_hz)),
            (
                "kappa1, kappa2 / 2pi [Hz]",
                format!("{:.6e}, {:.6e}", self.kappa_hz[0], self.kappa_hz[1]),
            ),
            ("Theta / kappa", opt(self.theta_over_kappa)),
            ("regime", regime),
            ("kappa_1L / 2pi [Hz]", format!("{:.6e}", self.kappa_1l_hz)),
            ("kappa_2L / 2pi [Hz]", format!("{:.6e}", self.kappa_2l_hz)),
            ("kappa_1b / 2pi [Hz]", format!("{:.6e}", self.kappa_1b_hz)),
            ("kappa_2b / 2pi [Hz]", format!("{:.6e}", self.kappa_2b_hz)),
            ("delta_1L / 2pi [Hz]", format!("{:.6e}", self.delta_1l_hz)),
            ("delta_2L / 2pi [Hz]", format!("{:.6e}", self.delta_2l_hz)),
            ("delta_b / 2pi [Hz]", format!("{:.6e}", self.delta_b_hz)),
            ("delta_1 / 2pi [Hz]", format!("{:.10e}", self.delta_1_hz)),
            ("delta_2 / 2pi [Hz]", format!("{:.10e}", self.delta_2_hz)),
            ("n_th (bare nu)", opt(self.n_th)),
            ("n_th (nu')", opt(self.n_th_nu_prime)),
            (
                "n_th estimate |Delta|/4nu'",
                format!("{:.4}", self.n_th_estimate),
            ),
            ("S(0) floor (Sigma/Theta)^4", opt(self.squeezing_floor)),
            ("free-space 0->1 [Hz]", opt(s.spontaneous_heating_hz)),
            ("free-space 1->0 [Hz]", opt(s.spontaneous_cooling_hz)),
            (
                "motional decoherence [Hz]",
                format!("{:.6e}", s.motional_decoherence_hz),
            ),
            (
                "cavity 1 |t+|, |t-| [Hz]",
                format!(
                    "{:.6e}, {:.6e}",
                    s.cavity_sidebands_hz[0][0], s.cavity_sidebands_hz[0][1]
                ),
            ),
            (
                "cavity 2 |t+|, |t-| [Hz]",
                format!(
                    "{:.6e}, {:.6e}",
                    s.cavity_sidebands_hz[1][0], s.cavity_sidebands_hz[1][1]
                ),
            ),
            (
                "cavity 1 photon loss [Hz]",
                opt(s.cavity_spontaneous_loss_hz[0]),
            ),
            (
                "cavity 2 photon loss [Hz]",
                opt(s.cavity_spontaneous_loss_hz[1]),
            ),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}
