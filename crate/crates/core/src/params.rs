//! Physical inputs and every coefficient of the effective Langevin equations
//! derived from them.
//!
//! All quantities are angular frequencies in rad/s unless stated otherwise.
//! The drive Rabi frequency `omega_rabi` and the vacuum couplings `g1`, `g2`
//! are taken real and non-negative; the couplings that come out of them
//! (`chi`, `kbar`) are complex and are carried as such everywhere downstream.

use std::fmt;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Raw microscopic parameters of the atom–cavity–trap system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemParams {
    /// Atomic linewidth.
    pub gamma: f64,
    /// Bare trap frequency.
    pub nu: f64,
    /// Lamb-Dicke parameter (dimensionless).
    pub eta: f64,
    /// Laser Rabi frequency.
    pub omega_rabi: f64,
    /// Laser–atom detuning `omega_L - omega_0`; negative for red detuning.
    pub delta: f64,
    pub g1: f64,
    pub g2: f64,
    /// Position of the trap centre in the standing wave of each mode (rad).
    pub phi1: f64,
    pub phi2: f64,
    /// Angle between the motional axis and the laser (rad).
    pub theta_l: f64,
    /// Angle between the motional axis and the cavity axis (rad).
    pub theta_c: f64,
    /// Cavity amplitude decay rates.
    pub kappa1: f64,
    pub kappa2: f64,
    /// Coupling rate of the motion to the trap-noise reservoir.
    pub kappa_b: f64,
    /// Thermal occupation of the trap-noise reservoir.
    pub nbar: f64,
}

/// Which cavity mode: 1 is resonant with the Stokes sideband, 2 with the
/// anti-Stokes sideband.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CavityMode {
    One,
    Two,
}

impl CavityMode {
    pub fn number(self) -> u8 {
        match self {
            CavityMode::One => 1,
            CavityMode::Two => 2,
        }
    }
}

/// Non-fatal violation of one of the regime assumptions behind the model.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeWarning {
    pub assumption: &'static str,
    pub detail: String,
}

impl fmt::Display for RegimeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.assumption, self.detail)
    }
}

/// Minimum ratio for a "much larger than" regime check.
pub const REGIME_FACTOR: f64 = 5.0;

impl SystemParams {
    /// Checks hard domain constraints and returns the soft regime warnings.
    pub fn validate(&self) -> Result<Vec<RegimeWarning>> {
        let named = [
            ("gamma", self.gamma),
            ("nu", self.nu),
            ("eta", self.eta),
            ("omega_rabi", self.omega_rabi),
            ("g1", self.g1),
            ("g2", self.g2),
            ("kappa1", self.kappa1),
            ("kappa2", self.kappa2),
            ("kappa_b", self.kappa_b),
            ("nbar", self.nbar),
        ];
        for (name, value) in named {
            if !value.is_finite() {
                return Err(invalid(name, format!("{value} is not finite")));
            }
            if value < 0.0 {
                return Err(invalid(name, format!("{value} is negative")));
            }
        }
        let angles = [
            ("delta", self.delta),
            ("phi1", self.phi1),
            ("phi2", self.phi2),
            ("theta_l", self.theta_l),
            ("theta_c", self.theta_c),
        ];
        for (name, value) in angles {
            if !value.is_finite() {
                return Err(invalid(name, format!("{value} is not finite")));
            }
        }
        if self.eta >= 1.0 {
            return Err(invalid(
                "eta",
                format!("{} is outside the Lamb-Dicke regime", self.eta),
            ));
        }
        if self.nu == 0.0 {
            return Err(invalid("nu", "trap frequency must be positive".into()));
        }

        let mut warnings = Vec::new();
        if self.eta > 0.3 {
            warnings.push(RegimeWarning {
                assumption: "Lamb-Dicke",
                detail: format!("eta = {} > 0.3", self.eta),
            });
        }
        let detuning = self.delta.abs();
        for (name, scale) in [
            ("gamma", self.gamma),
            ("omega_rabi", self.omega_rabi),
            ("g1", self.g1),
            ("g2", self.g2),
        ] {
            if detuning < REGIME_FACTOR * scale {
                warnings.push(RegimeWarning {
                    assumption: "far detuning",
                    detail: format!("|delta|/{name} = {:.3} < {REGIME_FACTOR}", detuning / scale),
                });
            }
        }
        for (name, scale) in [
            ("gamma", self.gamma),
            ("kappa1", self.kappa1),
            ("kappa2", self.kappa2),
            ("g1", self.g1),
            ("g2", self.g2),
            ("eta*omega_rabi", self.eta * self.omega_rabi),
        ] {
            if self.nu < REGIME_FACTOR * scale {
                warnings.push(RegimeWarning {
                    assumption: "resolved sidebands",
                    detail: format!("nu/{name} = {:.3} < {REGIME_FACTOR}", self.nu / scale),
                });
            }
        }
        Ok(warnings)
    }

    fn cos2_theta_l(&self) -> f64 {
        self.theta_l.cos().powi(2)
    }

    fn mode_coupling(&self, mode: CavityMode) -> (f64, f64) {
        match mode {
            CavityMode::One => (self.g1, self.phi1),
            CavityMode::Two => (self.g2, self.phi2),
        }
    }
}

fn invalid(name: &'static str, reason: String) -> Error {
    Error::InvalidParameter { name, reason }
}

/// How the renormalized trap frequency is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum NuPrimeMode {
    /// Motional Stark shift evaluated at the bare trap frequency.
    #[default]
    ClosedForm,
    /// Iterate `nu' = nu + delta_b(nu')` to self-consistency.
    FixedPoint,
}

/// Motional a.c.-Stark shift `delta_b` evaluated at `trap_frequency`.
///
/// This is the coefficient of `b^dagger b` produced by the mechanical effect
/// of the laser, written in closed form.
pub fn motional_stark_shift(p: &SystemParams, trap_frequency: f64) -> f64 {
    let strength = p.eta.powi(2) * p.omega_rabi.powi(2) * p.cos2_theta_l();
    let g2q = p.gamma.powi(2) / 4.0;
    let x = g2q + p.delta.powi(2) - trap_frequency.powi(2);
    let sidebands =
        2.0 * p.delta * strength * x / (x.powi(2) + trap_frequency.powi(2) * p.gamma.powi(2));
    let carrier = strength * p.delta / (p.delta.powi(2) + g2q);
    sidebands - carrier
}

const FIXED_POINT_MAX_ITER: usize = 100;
const FIXED_POINT_REL_TOL: f64 = 1e-9;

/// Renormalized trap frequency `nu'`.
pub fn effective_trap_frequency(p: &SystemParams, mode: NuPrimeMode) -> Result<f64> {
    match mode {
        NuPrimeMode::ClosedForm => Ok(p.nu + motional_stark_shift(p, p.nu)),
        NuPrimeMode::FixedPoint => {
            let mut current = p.nu;
            let mut step = f64::INFINITY;
            for _ in 0..FIXED_POINT_MAX_ITER {
                let next = p.nu + motional_stark_shift(p, current);
                step = (next - current).abs();
                current = next;
                if !current.is_finite() {
                    break;
                }
                if step < FIXED_POINT_REL_TOL * p.nu {
                    return Ok(current);
                }
            }
            Err(Error::NoSelfConsistentNuPrime {
                iterations: FIXED_POINT_MAX_ITER,
                last_step: step,
            })
        }
    }
}

/// Raman coupling between cavity mode `mode` and the motion.
///
/// Mode 1 pairs with the Stokes denominator `Delta - nu'`, mode 2 with the
/// anti-Stokes denominator `Delta + nu'`. The barred variant flips the sign of
/// the `i gamma/2` term in that first denominator only.
pub fn coupling_chi(
    p: &SystemParams,
    nu_prime: f64,
    mode: CavityMode,
    barred: bool,
) -> Result<C64> {
    let (g, phi) = p.mode_coupling(mode);
    let cos_c = p.theta_c.cos();
    if phi.cos().abs() < 1e-6 && cos_c.abs() > 1e-12 {
        return Err(Error::StandingWaveNode {
            mode: mode.number(),
        });
    }
    let half_gamma = if barred {
        -p.gamma / 2.0
    } else {
        p.gamma / 2.0
    };
    let sideband = match mode {
        CavityMode::One => p.delta - nu_prime,
        CavityMode::Two => p.delta + nu_prime,
    };
    let laser = C64::new(p.theta_l.cos(), 0.0) / C64::new(sideband, half_gamma);
    // cos(phi) * tan(phi) written as sin(phi).
    let cavity = C64::new(0.0, phi.sin() * cos_c) / C64::new(p.delta, p.gamma / 2.0);
    let chi = p.eta * p.omega_rabi * g * (laser * phi.cos() + cavity);
    if !(chi.re.is_finite() && chi.im.is_finite()) {
        return Err(invalid(
            "delta",
            format!("coupling denominator vanishes for mode {}", mode.number()),
        ));
    }
    Ok(chi)
}

/// Oscillation frequency `Theta = sqrt(|chi2|^2 - |chi1|^2)` of the lossless
/// dynamics and the companion scale
/// `Sigma = sqrt(| |chi2|^2 + |chi1|^2 - 2 chi1 chi2 |)`.
pub fn theta_sigma(chi1: C64, chi2: C64) -> Result<(f64, f64)> {
    let (a1, a2) = (chi1.norm_sqr(), chi2.norm_sqr());
    if a2 <= a1 {
        return Err(Error::AmplificationRegime {
            chi1_abs: a1.sqrt(),
            chi2_abs: a2.sqrt(),
        });
    }
    Ok(((a2 - a1).sqrt(), sigma_big(chi1, chi2)))
}

fn sigma_big(chi1: C64, chi2: C64) -> f64 {
    (C64::from(chi2.norm_sqr() + chi1.norm_sqr()) - 2.0 * chi1 * chi2)
        .norm()
        .sqrt()
}

/// Loss and noise rates mediated by spontaneous emission.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiativeRates {
    pub kappa_1l: f64,
    pub kappa_2l: f64,
    pub kbar_1l: C64,
    pub kbar_2l: C64,
    /// Incoherent phonon absorption (heating) rate.
    pub kappa_1b: f64,
    /// Incoherent phonon emission (cooling) rate.
    pub kappa_2b: f64,
    pub kbar_1b: C64,
    pub kbar_2b: C64,
}

pub fn radiative_rates(p: &SystemParams, nu_prime: f64) -> RadiativeRates {
    let half_gamma = p.gamma / 2.0;
    let stokes = p.delta - nu_prime;
    let anti_stokes = p.delta + nu_prime;
    let lorentz = |d: f64| half_gamma / (half_gamma.powi(2) + d.powi(2));
    let (c1, c2) = (p.phi1.cos(), p.phi2.cos());
    let mech = p.eta * p.omega_rabi * p.theta_l.cos();
    let root = half_gamma.sqrt();
    let i = C64::i();

    RadiativeRates {
        kappa_1l: lorentz(stokes) * (p.g1 * c1).powi(2),
        kappa_2l: lorentz(anti_stokes) * (p.g2 * c2).powi(2),
        kbar_1l: -i * root * p.g1 * c1 / C64::new(half_gamma, stokes),
        kbar_2l: i * root * p.g2 * c2 / C64::new(half_gamma, -anti_stokes),
        kappa_1b: lorentz(stokes) * mech.powi(2),
        kappa_2b: lorentz(anti_stokes) * mech.powi(2),
        kbar_1b: root * mech / C64::new(half_gamma, stokes),
        kbar_2b: root * mech / C64::new(half_gamma, -anti_stokes),
    }
}

/// Radiative frequency shifts of the two cavity modes and of the motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarkShifts {
    pub delta_1l: f64,
    pub delta_2l: f64,
    pub delta_b: f64,
}

pub fn stark_shifts(p: &SystemParams, nu_prime: f64) -> StarkShifts {
    let g2q = p.gamma.powi(2) / 4.0;
    let cavity = |g: f64, phi: f64, d: f64| d * (g * phi.cos()).powi(2) / (g2q + d.powi(2));
    StarkShifts {
        delta_1l: cavity(p.g1, p.phi1, p.delta - nu_prime),
        delta_2l: cavity(p.g2, p.phi2, p.delta + nu_prime),
        delta_b: motional_stark_shift(p, nu_prime),
    }
}

/// Laser–cavity detunings `(delta_1, delta_2)` that put both modes on the
/// shifted motional sidebands.
pub fn resonance_detunings(delta_1l: f64, delta_2l: f64, nu_prime: f64) -> (f64, f64) {
    (delta_1l + nu_prime, delta_2l - nu_prime)
}

/// Steady-state phonon number `kappa_1b / (kappa_2b - kappa_1b)` reached
/// under the radiative rates alone.
pub fn thermal_occupation(kappa_1b: f64, kappa_2b: f64) -> Result<f64> {
    if kappa_1b == 0.0 {
        return Ok(0.0);
    }
    if kappa_2b <= kappa_1b {
        return Err(Error::HeatingRegime { kappa_1b, kappa_2b });
    }
    Ok(kappa_1b / (kappa_2b - kappa_1b))
}

/// Far-detuned estimate `|Delta| / (4 nu')` of the cooling limit.
pub fn cooling_limit_estimate(delta: f64, nu_prime: f64) -> f64 {
    delta.abs() / (4.0 * nu_prime)
}

/// Every coefficient entering the effective Langevin equations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedCouplings {
    pub nu_prime: f64,
    pub chi1: C64,
    pub chi2: C64,
    pub chi1_bar: C64,
    pub chi2_bar: C64,
    /// `None` in the amplification regime `|chi2| <= |chi1|`.
    pub theta_big: Option<f64>,
    pub sigma_big: f64,
    pub kappa_1l: f64,
    pub kappa_2l: f64,
    pub kbar_1l: C64,
    pub kbar_2l: C64,
    pub kappa_1b: f64,
    pub kappa_2b: f64,
    pub kbar_1b: C64,
    pub kbar_2b: C64,
    pub delta_1l: f64,
    pub delta_2l: f64,
    pub delta_b: f64,
    pub delta_1: f64,
    pub delta_2: f64,
    /// `None` in the radiative heating regime.
    pub n_th: Option<f64>,
    pub n_th_estimate: f64,
}

impl DerivedCouplings {
    pub fn compute(p: &SystemParams, mode: NuPrimeMode) -> Result<Self> {
        p.validate()?;
        let nu_prime = effective_trap_frequency(p, mode)?;
        let chi1 = coupling_chi(p, nu_prime, CavityMode::One, false)?;
        let chi2 = coupling_chi(p, nu_prime, CavityMode::Two, false)?;
        let chi1_bar = coupling_chi(p, nu_prime, CavityMode::One, true)?;
        let chi2_bar = coupling_chi(p, nu_prime, CavityMode::Two, true)?;
        let theta_big = theta_sigma(chi1, chi2).ok().map(|(theta, _)| theta);
        let rates = radiative_rates(p, nu_prime);
        let shifts = stark_shifts(p, nu_prime);
        let (delta_1, delta_2) = resonance_detunings(shifts.delta_1l, shifts.delta_2l, nu_prime);

        Ok(Self {
            nu_prime,
            chi1,
            chi2,
            chi1_bar,
            chi2_bar,
            theta_big,
            sigma_big: sigma_big(chi1, chi2),
            kappa_1l: rates.kappa_1l,
            kappa_2l: rates.kappa_2l,
            kbar_1l: rates.kbar_1l,
            kbar_2l: rates.kbar_2l,
            kappa_1b: rates.kappa_1b,
            kappa_2b: rates.kappa_2b,
            kbar_1b: rates.kbar_1b,
            kbar_2b: rates.kbar_2b,
            delta_1l: shifts.delta_1l,
            delta_2l: shifts.delta_2l,
            delta_b: shifts.delta_b,
            delta_1,
            delta_2,
            n_th: thermal_occupation(rates.kappa_1b, rates.kappa_2b).ok(),
            n_th_estimate: cooling_limit_estimate(p.delta, nu_prime),
        })
    }

    /// Lossless couplings with every radiative rate and shift set to zero.
    /// `chi_j_bar = chi_j`; the trap frequency is left at zero and unused.
    pub fn lossless(chi1: C64, chi2: C64) -> Self {
        let zero = C64::new(0.0, 0.0);
        Self {
            nu_prime: 0.0,
            chi1,
            chi2,
            chi1_bar: chi1,
            chi2_bar: chi2,
            theta_big: theta_sigma(chi1, chi2).ok().map(|(theta, _)| theta),
            sigma_big: sigma_big(chi1, chi2),
            kappa_1l: 0.0,
            kappa_2l: 0.0,
            kbar_1l: zero,
            kbar_2l: zero,
            kappa_1b: 0.0,
            kappa_2b: 0.0,
            kbar_1b: zero,
            kbar_2b: zero,
            delta_1l: 0.0,
            delta_2l: 0.0,
            delta_b: 0.0,
            delta_1: 0.0,
            delta_2: 0.0,
            n_th: Some(0.0),
            n_th_estimate: 0.0,
        }
    }

    pub fn theta(&self) -> Result<f64> {
        self.theta_big.ok_or(Error::AmplificationRegime {
            chi1_abs: self.chi1.norm(),
            chi2_abs: self.chi2.norm(),
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    /// Operating point of the reference ion: bare values, 1 kHz cavity.
    pub(crate) fn reference() -> SystemParams {
        SystemParams {
            gamma: TAU * 360e3,
            nu: TAU * 3e6,
            eta: 0.1,
            omega_rabi: TAU * 18e6,
            delta: -TAU * 60e6,
            g1: TAU * 0.6e6,
            g2: TAU * 0.6e6,
            phi1: 0.0,
            phi2: 0.0,
            theta_l: 0.0,
            theta_c: FRAC_PI_2,
            kappa1: TAU * 1e3,
            kappa2: TAU * 1e3,
            kappa_b: 0.0,
            nbar: 0.0,
        }
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zero_drive_leaves_trap_frequency_unchanged() {
        let mut p = reference();
        p.omega_rabi = 0.0;
        assert_eq!(
            effective_trap_frequency(&p, NuPrimeMode::ClosedForm).unwrap(),
            p.nu
        );
        assert_eq!(
            effective_trap_frequency(&p, NuPrimeMode::FixedPoint).unwrap(),
            p.nu
        );
        let mut p = reference();
        p.theta_l = FRAC_PI_2;
        let nu_prime = effective_trap_frequency(&p, NuPrimeMode::ClosedForm).unwrap();
        assert!(rel(nu_prime, p.nu) < 1e-15);
    }

    #[test]
    fn reference_trap_frequency_matches_frozen_oracle() {
        // Values from an independent 40-digit evaluation.
        let p = reference();
        let closed = effective_trap_frequency(&p, NuPrimeMode::ClosedForm).unwrap();
        let fixed = effective_trap_frequency(&p, NuPrimeMode::FixedPoint).unwrap();
        assert!(rel(closed / TAU, 2_945_729.823_975_117) < 1e-12);
        assert!(rel(fixed / TAU, 2_945_739.549_702_227) < 1e-9);
        assert!((closed - p.nu).abs() < 0.02 * p.nu);
    }

    #[test]
    fn fixed_point_is_self_consistent_with_stark_shift() {
        let p = reference();
        let fixed = effective_trap_frequency(&p, NuPrimeMode::FixedPoint).unwrap();
        let shifts = stark_shifts(&p, fixed);
        assert!((fixed - p.nu - shifts.delta_b).abs() < 1e-8 * p.nu);

        // The closed form is the first iterate, so its residual is second order.
        let closed = effective_trap_frequency(&p, NuPrimeMode::ClosedForm).unwrap();
        let shifts = stark_shifts(&p, closed);
        assert!((closed - p.nu - shifts.delta_b).abs() < 1e-5 * p.nu);
    }

    #[test]
    fn diverging_fixed_point_is_reported() {
        // Blue detuning at 1.5 nu with eta*Omega = nu: the map is chaotic.
        let mut p = reference();
        p.gamma = 0.0;
        p.eta = 0.1;
        p.omega_rabi = 10.0 * p.nu;
        p.delta = 1.5 * p.nu;
        let err = effective_trap_frequency(&p, NuPrimeMode::FixedPoint).unwrap_err();
        assert!(
            matches!(err, Error::NoSelfConsistentNuPrime { .. }),
            "{err}"
        );
    }

    #[test]
    fn chi_magnitudes_at_reference_point() {
        let p = reference();
        let nu_prime = effective_trap_frequency(&p, NuPrimeMode::ClosedForm).unwrap();
        let chi1 = coupling_chi(&p, nu_prime, CavityMode::One, false).unwrap();
        let chi2 = coupling_chi(&p, nu_prime, CavityMode::Two, false).unwrap();
        assert!(rel(chi1.norm() / TAU, 17_157.567_118_206_3) < 1e-12);
        assert!(rel(chi2.norm() / TAU, 18_929.251_428_617_2) < 1e-12);
        assert!((chi1.norm() / TAU - 17.1e3).abs() < 0.1e3);
        assert!((chi2.norm() / TAU - 18.9e3).abs() < 0.1e3);
    }

    #[test]
    fn no_lamb_dicke_coupling_means_no_chi() {
        let mut p = reference();
        p.eta = 0.0;
        for mode in [CavityMode::One, CavityMode::Two] {
            for barred in [false, true] {
                assert_eq!(
                    coupling_chi(&p, p.nu, mode, barred).unwrap(),
                    C64::new(0.0, 0.0)
                );
            }
        }
    }

    #[test]
    fn standing_wave_node_is_rejected() {
        let mut p = reference();
        p.theta_c = 0.3;
        p.phi1 = FRAC_PI_2 + 1e-7;
        assert_eq!(
            coupling_chi(&p, p.nu, CavityMode::One, false),
            Err(Error::StandingWaveNode { mode: 1 })
        );
        // Motion orthogonal to the cavity: the node is harmless.
        p.theta_c = FRAC_PI_2;
        assert!(coupling_chi(&p, p.nu, CavityMode::One, false).is_ok());
    }

    #[test]
    fn theta_sigma_edge_cases() {
        let chi2 = C64::new(3.0, 4.0);
        let (theta, sigma) = theta_sigma(C64::new(0.0, 0.0), chi2).unwrap();
        assert!((theta - 5.0).abs() < 1e-15);
        assert!((sigma - 5.0).abs() < 1e-15);

        let chi = C64::new(2.0, 0.0);
        assert!(matches!(
            theta_sigma(chi, chi),
            Err(Error::AmplificationRegime { .. })
        ));
        assert_eq!(sigma_big(chi, chi), 0.0);
    }

    #[test]
    fn theta_and_sigma_at_reference_point() {
        let p = reference();
        let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm).unwrap();
        let theta = dc.theta().unwrap();
        assert!(rel(theta / TAU, 7_995.902_089_949_16) < 1e-11);
        assert!(rel(dc.sigma_big / TAU, 2_240.281_912_990_87) < 1e-10);

        // Without the linewidth both couplings are real and Sigma collapses to
        // |chi2| - |chi1|.
        let mut q = p;
        q.gamma = 0.0;
        let chi1 = coupling_chi(&q, dc.nu_prime, CavityMode::One, false).unwrap();
        let chi2 = coupling_chi(&q, dc.nu_prime, CavityMode::Two, false).unwrap();
        let (_, sigma) = theta_sigma(chi1, chi2).unwrap();
        assert!(rel(sigma / TAU, 1_771.708_363_231_81) < 1e-10);
        assert!(rel(sigma, chi2.norm() - chi1.norm()) < 1e-10);
    }

    #[test]
    fn radiative_rates_vanish_without_coupling_or_linewidth() {
        let mut p = reference();
        p.g1 = 0.0;
        p.g2 = 0.0;
        let r = radiative_rates(&p, p.nu);
        assert_eq!((r.kappa_1l, r.kappa_2l), (0.0, 0.0));

        let mut p = reference();
        p.gamma = 0.0;
        let r = radiative_rates(&p, p.nu);
        assert_eq!([r.kappa_1l, r.kappa_2l, r.kappa_1b, r.kappa_2b], [0.0; 4]);
    }

    #[test]
    fn radiative_rates_at_reference_point() {
        let p = reference();
        let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm).unwrap();
        assert!(rel(dc.kappa_1l / TAU, 16.354_561_634_208_5) < 1e-11);
        assert!(rel(dc.kappa_2l / TAU, 19.906_475_535_989_3) < 1e-11);
        assert!(rel(dc.kappa_1b / TAU, 147.191_054_707_877) < 1e-11);
        assert!(rel(dc.kappa_2b / TAU, 179.158_279_823_903) < 1e-11);

        // Cavity-photon scattering and the net motional damping are at least
        // ten times below the output coupling. The individual phonon rates are
        // only about 5.6 times below it.
        let kappa = TAU * 1e3;
        assert!(dc.kappa_1l * 10.0 < kappa && dc.kappa_2l * 10.0 < kappa);
        assert!((dc.kappa_2b - dc.kappa_1b) * 10.0 < kappa);
        assert!(dc.kappa_2b * 5.0 < kappa);
    }

    #[test]
    fn stark_shift_edge_cases() {
        let mut p = reference();
        p.omega_rabi = 0.0;
        assert_eq!(stark_shifts(&p, p.nu).delta_b, 0.0);
        let mut p = reference();
        p.g1 = 0.0;
        assert_eq!(stark_shifts(&p, p.nu).delta_1l, 0.0);

        let p = reference();
        let closed = effective_trap_frequency(&p, NuPrimeMode::ClosedForm).unwrap();
        assert!((closed - p.nu - stark_shifts(&p, p.nu).delta_b).abs() < 1e-9 * p.nu);
    }

    #[test]
    fn resonance_detunings_cases() {
        assert_eq!(resonance_detunings(0.0, 0.0, 7.0), (7.0, -7.0));
        let p = reference();
        let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm).unwrap();
        assert!((dc.delta_1 - dc.nu_prime - dc.delta_1l).abs() < 1e-12 * p.nu);

        let mut bare = reference();
        bare.g1 = 0.0;
        bare.g2 = 0.0;
        bare.omega_rabi = 0.0;
        let dc = DerivedCouplings::compute(&bare, NuPrimeMode::ClosedForm).unwrap();
        assert_eq!((dc.delta_1, dc.delta_2), (bare.nu, -bare.nu));
    }

    #[test]
    fn thermal_occupation_cases() {
        // Delta = -2 nu', gamma = 0: Lorentzians 1/9 and 1/1.
        let nu_prime = 1.0;
        let mut p = reference();
        p.delta = -2.0 * nu_prime;
        p.omega_rabi = 1.0;
        // gamma = 0 kills both rates outright; a vanishing linewidth keeps
        // their ratio.
        p.gamma = 1e-9;
        let r = radiative_rates(&p, nu_prime);
        let n = thermal_occupation(r.kappa_1b, r.kappa_2b).unwrap();
        assert!((n - 0.125).abs() < 1e-12);

        assert_eq!(thermal_occupation(0.0, 1.0).unwrap(), 0.0);
        assert!(matches!(
            thermal_occupation(2.0, 1.0),
            Err(Error::HeatingRegime { .. })
        ));

        let p = reference();
        let bare = radiative_rates(&p, p.nu);
        let n = thermal_occupation(bare.kappa_1b, bare.kappa_2b).unwrap();
        assert!((n - 3249.0 / 720.0).abs() < 1e-4);
        assert!((cooling_limit_estimate(p.delta, p.nu) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn validation_flags_regime_violations_without_failing() {
        let p = reference();
        let warnings = p.validate().unwrap();
        assert!(warnings.iter().any(|w| w.assumption == "far detuning"));
        assert!(warnings
            .iter()
            .any(|w| w.assumption == "resolved sidebands"));

        let mut bad = reference();
        bad.kappa1 = -1.0;
        assert!(bad.validate().is_err());
        let mut bad = reference();
        bad.eta = 1.2;
        assert!(bad.validate().is_err());
        let mut loose = reference();
        loose.eta = 0.4;
        assert!(loose
            .validate()
            .unwrap()
            .iter()
            .any(|w| w.assumption == "Lamb-Dicke"));
    }
}
