//! Flat `key = value` configuration files.
//!
//! One assignment per line, `#` starts a comment. Keys ending in `_hz` are
//! ordinary frequencies and are multiplied by 2π on load. An optional
//! `preset = fig2|fig3|fig4` line supplies every key not set in the file.

use std::f64::consts::TAU;
use std::fmt;
use std::path::{Path, PathBuf};

use crate::params::{RegimeWarning, SystemParams};

use super::presets::Preset;

pub const KEYS: [&str; 16] = [
    "gamma_hz",
    "nu_hz",
    "eta",
    "omega_rabi_hz",
    "delta_hz",
    "g1_hz",
    "g2_hz",
    "phi1_rad",
    "phi2_rad",
    "theta_l_rad",
    "theta_c_rad",
    "kappa1_hz",
    "kappa2_hz",
    "kappa_b_hz",
    "nbar",
    "alpha",
];

#[derive(Debug)]
pub enum ConfigError {
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Malformed {
        line: usize,
        text: String,
    },
    UnknownKey {
        line: usize,
        key: String,
    },
    DuplicateKey {
        line: usize,
        key: String,
    },
    NotANumber {
        line: usize,
        key: String,
        value: String,
    },
    UnknownPreset {
        line: usize,
        message: String,
    },
    ConflictingPreset {
        file: Preset,
        requested: Preset,
    },
    /// Listed in file order; the first entry is the first missing key.
    MissingKeys(Vec<&'static str>),
    Invalid(crate::Error),
    Sweep(String),
    NoConfig,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            ConfigError::Malformed { line, text } => {
                write!(f, "line {line}: expected `key = value`, found `{text}`")
            }
            ConfigError::UnknownKey { line, key } => write!(f, "line {line}: unknown key `{key}`"),
            ConfigError::DuplicateKey { line, key } => {
                write!(f, "line {line}: key `{key}` set twice")
            }
            ConfigError::NotANumber { line, key, value } => {
                write!(
                    f,
                    "line {line}: value `{value}` for `{key}` is not a number"
                )
            }
            ConfigError::UnknownPreset { line, message } => write!(f, "line {line}: {message}"),
            ConfigError::ConflictingPreset { file, requested } => {
                write!(
                    f,
                    "config names preset {file} but {requested} was requested"
                )
            }
            ConfigError::MissingKeys(keys) => match keys.as_slice() {
                [one] => write!(f, "missing key `{one}`"),
                [first, rest @ ..] => write!(
                    f,
                    "missing key `{first}` (also missing: {})",
                    rest.join(", ")
                ),
                [] => write!(f, "missing keys"),
            },
            ConfigError::Invalid(e) => write!(f, "{e}"),
            ConfigError::Sweep(msg) => write!(f, "sampling grid: {msg}"),
            ConfigError::NoConfig => write!(f, "--config PATH is required for this command"),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Parameters read from a configuration file, in rad/s.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedParams {
    pub params: SystemParams,
    /// Angular-dispersion factor of spontaneous emission.
    pub alpha: f64,
    pub preset: Option<Preset>,
    pub warnings: Vec<String>,
}

pub fn read_config(path: &Path, base: Option<Preset>) -> Result<LoadedParams, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, base)
}

/// Parses configuration text. `base` fills keys the text leaves out, as does a
/// `preset` line in the text itself.
pub fn parse_config(text: &str, base: Option<Preset>) -> Result<LoadedParams, ConfigError> {
    let mut values: [Option<f64>; KEYS.len()] = [None; KEYS.len()];
    let mut file_preset = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| ConfigError::Malformed {
                line,
                text: content.to_string(),
            })?;

        if key == "preset" {
            if file_preset.is_some() {
                return Err(ConfigError::DuplicateKey {
                    line,
                    key: key.into(),
                });
            }
            let preset = value
                .parse::<Preset>()
                .map_err(|message| ConfigError::UnknownPreset { line, message })?;
            file_preset = Some(preset);
            continue;
        }

        let slot = KEYS
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| ConfigError::UnknownKey {
                line,
                key: key.into(),
            })?;
        if values[slot].is_some() {
            return Err(ConfigError::DuplicateKey {
                line,
                key: key.into(),
            });
        }
        let number = value.parse::<f64>().map_err(|_| ConfigError::NotANumber {
            line,
            key: key.into(),
            value: value.into(),
        })?;
        values[slot] = Some(number);
    }

    let preset = match (file_preset, base) {
        (Some(file), Some(requested)) if file != requested => {
            return Err(ConfigError::ConflictingPreset { file, requested });
        }
        (file, requested) => file.or(requested),
    };
    if let Some(preset) = preset {
        for (slot, default) in values.iter_mut().zip(preset.values()) {
            slot.get_or_insert(default);
        }
    }
    let missing: Vec<&'static str> = KEYS
        .iter()
        .zip(values.iter())
        .filter(|(_, v)| v.is_none())
        .map(|(k, _)| *k)
        .collect();
    if !missing.is_empty() {
        return Err(ConfigError::MissingKeys(missing));
    }

    let v: Vec<f64> = values.iter().map(|v| v.unwrap()).collect();
    let params = SystemParams {
        gamma: TAU * v[0],
        nu: TAU * v[1],
        eta: v[2],
        omega_rabi: TAU * v[3],
        delta: TAU * v[4],
        g1: TAU * v[5],
        g2: TAU * v[6],
        phi1: v[7],
        phi2: v[8],
        theta_l: v[9],
        theta_c: v[10],
        kappa1: TAU * v[11],
        kappa2: TAU * v[12],
        kappa_b: TAU * v[13],
        nbar: v[14],
    };
    let alpha = v[15];
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(ConfigError::Invalid(crate::Error::InvalidParameter {
            name: "alpha",
            reason: format!("must be finite and non-negative, got {alpha}"),
        }));
    }

    let regime = params.validate().map_err(ConfigError::Invalid)?;
    let mut warnings: Vec<String> = regime.iter().map(RegimeWarning::to_string).collect();
    if params.delta > 0.0 {
        warnings.push(format!(
            "detuning sign: delta_hz = {} is blue of the atomic resonance; the sideband \
             cooling picture assumes red detuning (delta_hz < 0)",
            v[4]
        ));
    }
    Ok(LoadedParams {
        params,
        alpha,
        preset,
        warnings,
    })
}
