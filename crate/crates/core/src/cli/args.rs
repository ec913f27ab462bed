use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{
    run_coherent, run_report, run_spectrum, CliError, OutputFormat, Preset, RunConfig,
    DEFAULT_COHERENT_STEPS,
};

#[derive(Debug, Parser)]
#[command(
    name = "sideband-squeezing",
    version,
    about = "Two-mode squeezing spectra of trapped-atom sidebands"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derived couplings, rates, regime and warnings.
    Report(Common),
    /// Squeezing spectrum over a frequency grid.
    Spectrum(Common),
    /// Lossless evolution of the vacuum covariance.
    Coherent {
        #[command(flatten)]
        common: Common,
        /// End time in seconds; one period 2pi/Theta by default.
        #[arg(long)]
        t_max: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_COHERENT_STEPS)]
        steps: usize,
    },
    /// Spectrum for one of the built-in parameter sets; `--config` overrides
    /// individual keys.
    Figure {
        #[arg(value_enum)]
        preset: Preset,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Lower sweep bound, rad/s.
    #[arg(long, allow_hyphen_values = true)]
    pub omega_min: Option<f64>,
    /// Upper sweep bound, rad/s.
    #[arg(long, allow_hyphen_values = true)]
    pub omega_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Solve nu' = nu + delta_b(nu') self-consistently.
    #[arg(long)]
    pub refine_nu_prime: bool,
}

impl Common {
    fn run_config(&self, base: Option<Preset>) -> Result<RunConfig, CliError> {
        let mut cfg = match (&self.config, base) {
            (Some(path), base) => RunConfig::load(path, base)?,
            (None, Some(preset)) => RunConfig::from_preset(preset),
            (None, None) => return Err(super::ConfigError::NoConfig.into()),
        };
        cfg.sweep.omega_min = self.omega_min;
        cfg.sweep.omega_max = self.omega_max;
        if let Some(points) = self.points {
            cfg.sweep.points = points;
        }
        cfg.output_path = self.output.clone();
        cfg.format = self.format;
        cfg.refine_nu_prime = self.refine_nu_prime;
        Ok(cfg)
    }
}

fn warn(cfg: &RunConfig) {
    for w in &cfg.warnings {
        eprintln!("warning: {w}");
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Report(common) => {
            let cfg = common.run_config(None)?;
            run_report(&cfg).map(|_| ())
        }
        Command::Spectrum(common) => {
            let cfg = common.run_config(None)?;
            warn(&cfg);
            run_spectrum(&cfg).map(|_| ())
        }
        Command::Coherent {
            common,
            t_max,
            steps,
        } => {
            let cfg = common.run_config(None)?;
            warn(&cfg);
            run_coherent(&cfg, t_max, steps).map(|_| ())
        }
        Command::Figure { preset, common } => {
            let cfg = common.run_config(Some(preset))?;
            warn(&cfg);
            let trace = run_spectrum(&cfg)?;
            if let Some(c) = trace.regime {
                eprintln!(
                    "{preset}: regime {:?}, {} dip(s)",
                    c.regime,
                    trace.minima.len()
                );
            }
            for dip in &trace.minima {
                let width = dip.fwhm.map_or("-".into(), |w| format!("{w:.4e}"));
                eprintln!(
                    "  dip at {:+.4e} rad/s, S = {:.4}, FWHM {width} rad/s",
                    dip.omega, dip.depth
                );
            }
            Ok(())
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
