//! Configuration loading, the diagnostics report and the data files written
//! by the command-line tool.

mod args;
pub mod config;
pub mod presets;
pub mod report;

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

pub use args::{main_entry, Cli, Command};
pub use config::{ConfigError, KEYS};
pub use presets::Preset;
pub use report::Report;

use crate::analysis::{linear_grid, Dip, SpectrumTrace};
use crate::coherent::{evolution_map, propagate_vacuum, A1, A2, B, DAG};
use crate::params::{DerivedCouplings, NuPrimeMode, SystemParams};
use crate::qle::{build_model, spectrum_sweep};

pub const DEFAULT_POINTS: usize = 2001;
pub const DEFAULT_COHERENT_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Frequency grid in rad/s. Unset bounds default to `+-2 Theta`, or
/// `+-2 kappa` when `Theta` is undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub omega_min: Option<f64>,
    pub omega_max: Option<f64>,
    pub points: usize,
}

impl Default for Sweep {
    fn default() -> Self {
        Self {
            omega_min: None,
            omega_max: None,
            points: DEFAULT_POINTS,
        }
    }
}

impl Sweep {
    pub fn grid(&self, scale: f64) -> Result<Vec<f64>, ConfigError> {
        let lo = self.omega_min.unwrap_or(-2.0 * scale);
        let hi = self.omega_max.unwrap_or(2.0 * scale);
        if self.points < 2 {
            return Err(ConfigError::Sweep(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(ConfigError::Sweep(format!(
                "need omega_min < omega_max, got {lo} and {hi}"
            )));
        }
        Ok(linear_grid(lo, hi, self.points))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: SystemParams,
    pub alpha: f64,
    pub sweep: Sweep,
    /// Standard output when `None`.
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub preset: Option<Preset>,
    pub refine_nu_prime: bool,
    /// Regime and sign warnings raised while loading.
    pub warnings: Vec<String>,
}

impl RunConfig {
    pub fn from_preset(preset: Preset) -> Self {
        let loaded = config::parse_config("", Some(preset)).expect("presets are valid");
        Self::from_loaded(loaded)
    }

    /// Reads `path`; keys it omits come from `base` or from its own `preset`.
    pub fn load(path: &Path, base: Option<Preset>) -> Result<Self, ConfigError> {
        config::read_config(path, base).map(Self::from_loaded)
    }

    fn from_loaded(loaded: config::LoadedParams) -> Self {
        Self {
            params: loaded.params,
            alpha: loaded.alpha,
            sweep: Sweep::default(),
            output_path: None,
            format: OutputFormat::Csv,
            preset: loaded.preset,
            refine_nu_prime: false,
            warnings: loaded.warnings,
        }
    }

    pub fn nu_prime_mode(&self) -> NuPrimeMode {
        if self.refine_nu_prime {
            NuPrimeMode::FixedPoint
        } else {
            NuPrimeMode::ClosedForm
        }
    }

    pub fn couplings(&self) -> crate::Result<DerivedCouplings> {
        DerivedCouplings::compute(&self.params, self.nu_prime_mode())
    }
}

pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    RunConfig::load(path, None)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(#[from] ConfigError),
    #[error("model error: {0}")]
    Model(#[from] crate::Error),
    #[error("cannot write {}: {source}", path.display())]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for anything the user fixes in the configuration or on the command
    /// line, 2 when the physics has no valid answer.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Output { .. } => 1,
            CliError::Model(crate::Error::InvalidParameter { .. }) => 1,
            CliError::Model(_) => 2,
        }
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output_path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Output {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn build_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let preset = cfg.preset.map(Preset::name);
    Ok(report::build_report(
        &cfg.params,
        cfg.alpha,
        cfg.nu_prime_mode(),
        preset,
        &cfg.warnings,
    )?)
}

pub fn render_report(report: &Report, format: OutputFormat) -> String {
    let json = serde_json::to_string_pretty(report).expect("report serializes");
    match format {
        OutputFormat::Json => json + "\n",
        OutputFormat::Csv => format!("{}\n{json}\n", report.to_text()),
    }
}

/// Aligned table followed by the same data as JSON; JSON only with
/// `--format json`.
pub fn run_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let report = build_report(cfg)?;
    emit(cfg, &render_report(&report, cfg.format))?;
    Ok(report)
}

pub fn compute_spectrum(cfg: &RunConfig) -> Result<SpectrumTrace, CliError> {
    let dc = cfg.couplings()?;
    let kappa = 0.5 * (cfg.params.kappa1 + cfg.params.kappa2);
    let grid = cfg.sweep.grid(dc.theta_big.unwrap_or(kappa))?;
    let model = build_model(&dc, &cfg.params)?;
    Ok(spectrum_sweep(&model, &dc, &grid)?)
}

fn num(x: f64) -> String {
    format!("{x:e}")
}

pub fn spectrum_csv(trace: &SpectrumTrace) -> String {
    let theta = trace.theta.unwrap_or(f64::NAN);
    let mut out = String::from("omega_rad_s,omega_over_theta,s_full_plus,s_full_minus,s_analytic");
    if trace.s_flat.is_some() {
        out.push_str(",s_flat");
    }
    out.push('\n');
    for (i, &w) in trace.omega.iter().enumerate() {
        let analytic = trace.s_analytic.get(i).copied().unwrap_or(f64::NAN);
        let _ = write!(
            out,
            "{},{},{},{},{}",
            num(w),
            num(w / theta),
            num(trace.s_plus[i]),
            num(trace.s_minus[i]),
            num(analytic)
        );
        if let Some(flat) = &trace.s_flat {
            let _ = write!(out, ",{}", num(flat[i]));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    omega_rad_s: &'a [f64],
    omega_over_theta: Vec<Option<f64>>,
    s_full_plus: &'a [f64],
    s_full_minus: &'a [f64],
    s_analytic: &'a [f64],
    #[serde(skip_serializing_if = "Option::is_none")]
    s_flat: Option<&'a [f64]>,
    theta_rad_s: Option<f64>,
    sigma_rad_s: f64,
    kappa_rad_s: f64,
    regime: Option<crate::analysis::Classification>,
    minima: &'a [Dip],
}

pub fn spectrum_json(trace: &SpectrumTrace) -> String {
    let doc = SpectrumJson {
        omega_rad_s: &trace.omega,
        omega_over_theta: trace
            .omega
            .iter()
            .map(|w| trace.theta.map(|t| w / t))
            .collect(),
        s_full_plus: &trace.s_plus,
        s_full_minus: &trace.s_minus,
        s_analytic: &trace.s_analytic,
        s_flat: trace.s_flat.as_deref(),
        theta_rad_s: trace.theta,
        sigma_rad_s: trace.sigma,
        kappa_rad_s: trace.kappa,
        regime: trace.regime,
        minima: &trace.minima,
    };
    serde_json::to_string_pretty(&doc).expect("spectrum serializes") + "\n"
}

pub fn render_spectrum(trace: &SpectrumTrace, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => spectrum_csv(trace),
        OutputFormat::Json => spectrum_json(trace),
    }
}

pub fn run_spectrum(cfg: &RunConfig) -> Result<SpectrumTrace, CliError> {
    let trace = compute_spectrum(cfg)?;
    emit(cfg, &render_spectrum(&trace, cfg.format))?;
    Ok(trace)
}

/// One sample of the lossless evolution from the vacuum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoherentRow {
    pub t_s: f64,
    pub theta_t: f64,
    /// Mean occupations `<a1^dag a1>`, `<a2^dag a2>`, `<b^dag b>`.
    pub n1: f64,
    pub n2: f64,
    pub nb: f64,
    /// `|<a1 a2>|`, `|<a1 b>|`, `|<a2 b^dag>|`.
    pub a1a2_abs: f64,
    pub a1b_abs: f64,
    pub a2b_abs: f64,
    pub duan: f64,
    /// Largest motion–cavity moment.
    pub b_cross: f64,
}

pub const COHERENT_COLUMNS: [&str; 10] = [
    "t_s", "theta_t", "n1", "n2", "nb", "a1a2_abs", "a1b_abs", "a2b_abs", "duan", "b_cross",
];

/// Samples `steps + 1` equally spaced times in `[0, t_max]`; `t_max`
/// defaults to one period `2 pi / Theta`.
pub fn coherent_trace(
    cfg: &RunConfig,
    t_max: Option<f64>,
    steps: usize,
) -> Result<Vec<CoherentRow>, CliError> {
    let dc = cfg.couplings()?;
    let theta = dc.theta()?;
    let t_max = t_max.unwrap_or(TAU / theta);
    if steps == 0 || !(t_max.is_finite() && t_max > 0.0) {
        return Err(ConfigError::Sweep(format!(
            "need steps >= 1 and t_max > 0, got {steps} and {t_max}"
        ))
        .into());
    }
    (0..=steps)
        .map(|k| {
            let t = t_max * k as f64 / steps as f64;
            let state = propagate_vacuum(&evolution_map(dc.chi1, dc.chi2, t)?);
            let c = |i: usize, j: usize| state.cov[(i, j)];
            Ok(CoherentRow {
                t_s: t,
                theta_t: theta * t,
                n1: c(A1, A1).re - 0.5,
                n2: c(A2, A2).re - 0.5,
                nb: c(B, B).re - 0.5,
                a1a2_abs: c(A1, A2 + DAG).norm(),
                a1b_abs: c(A1, B + DAG).norm(),
                a2b_abs: c(A2, B).norm(),
                duan: state.duan_combination(),
                b_cross: state.motion_cavity_correlation(),
            })
        })
        .collect()
}

pub fn render_coherent(rows: &[CoherentRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        OutputFormat::Csv => {
            let mut out = COHERENT_COLUMNS.join(",") + "\n";
            for r in rows {
                let values = [
                    r.t_s, r.theta_t, r.n1, r.n2, r.nb, r.a1a2_abs, r.a1b_abs, r.a2b_abs, r.duan,
                    r.b_cross,
                ];
                out.push_str(&values.map(num).join(","));
                out.push('\n');
            }
            out
        }
    }
}

pub fn run_coherent(
    cfg: &RunConfig,
    t_max: Option<f64>,
    steps: usize,
) -> Result<Vec<CoherentRow>, CliError> {
    let rows = coherent_trace(cfg, t_max, steps)?;
    emit(cfg, &render_coherent(&rows, cfg.format))?;
    Ok(rows)
}
