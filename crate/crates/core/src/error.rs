use thiserror::Error;

/// Failures of the physics pipeline: parameters outside the domain where the
/// formulas are defined, or a linearized model that has no steady state.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("mode {mode} sits within 1e-6 rad of a standing-wave node while cos(theta_c) != 0")]
    StandingWaveNode { mode: u8 },

    #[error(
        "no self-consistent nu' after {iterations} iterations (last step {last_step:e} rad/s)"
    )]
    NoSelfConsistentNuPrime { iterations: usize, last_step: f64 },

    #[error("amplification regime: no periodic dynamics (|chi2| = {chi2_abs:e} <= |chi1| = {chi1_abs:e})")]
    AmplificationRegime { chi1_abs: f64, chi2_abs: f64 },

    #[error("heating regime: kappa_2b = {kappa_2b:e} <= kappa_1b = {kappa_1b:e}")]
    HeatingRegime { kappa_1b: f64, kappa_2b: f64 },

    #[error("unstable linearized model: spectral abscissa {abscissa:e} rad/s")]
    UnstableModel { abscissa: f64 },

    #[error("singular linear system at omega = {omega:e} rad/s")]
    Singular { omega: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
