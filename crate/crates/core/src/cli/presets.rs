//! Parameter sets for the three cavity-linewidth regimes.
//!
//! All three share the atom, trap and drive; only the cavity decay rate
//! differs. Values are in configuration-file units (Hz, rad).

use std::fmt;
use std::str::FromStr;

use super::config::KEYS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// Narrow cavity, three resolved dips.
    Fig2,
    /// Cavity linewidth comparable to the coupling, one flat dip.
    Fig3,
    /// Broad cavity, one narrow dip.
    Fig4,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Fig2, Preset::Fig3, Preset::Fig4];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
        }
    }

    pub fn kappa_hz(self) -> f64 {
        match self {
            Preset::Fig2 => 1e3,
            Preset::Fig3 => 1e4,
            Preset::Fig4 => 1e5,
        }
    }

    /// Values for every configuration key, in [`KEYS`] order.
    pub fn values(self) -> [f64; KEYS.len()] {
        let kappa = self.kappa_hz();
        [
            360e3,                       // gamma_hz
            3e6,                         // nu_hz
            0.1,                         // eta
            18e6,                        // omega_rabi_hz
            -60e6,                       // delta_hz
            0.6e6,                       // g1_hz
            0.6e6,                       // g2_hz
            0.0,                         // phi1_rad
            0.0,                         // phi2_rad
            0.0,                         // theta_l_rad
            std::f64::consts::FRAC_PI_2, // theta_c_rad
            kappa,                       // kappa1_hz
            kappa,                       // kappa2_hz
            0.0,                         // kappa_b_hz
            0.0,                         // nbar
            0.4,                         // alpha
        ]
    }

    /// The preset written out as a configuration file.
    pub fn config_text(self) -> String {
        let mut out = format!(
            "# {} parameter set\npreset = {}\n",
            self.name(),
            self.name()
        );
        for (key, value) in KEYS.iter().zip(self.values()) {
            out.push_str(&format!("{key} = {value}\n"));
        }
        out
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown preset `{s}` (expected fig2, fig3 or fig4)"))
    }
}

/// Trap heating with `kappa_b * nbar = 2 pi x 0.1 kHz`.
pub const HEATING_KAPPA_B_HZ: f64 = 0.1;
pub const HEATING_NBAR: f64 = 1000.0;

pub fn with_trap_heating(mut p: crate::SystemParams) -> crate::SystemParams {
    p.kappa_b = std::f64::consts::TAU * HEATING_KAPPA_B_HZ;
    p.nbar = HEATING_NBAR;
    p
}
