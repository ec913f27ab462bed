//! Linearized quantum Langevin equations for the two cavity modes and the
//! motion, and the stationary squeezing spectrum of the transmitted light.
//!
//! The three slowly varying equations couple `a1^dag`, `a2` and `b`, so the
//! model is written on the doubled vector `(a1, a2, b, a1^dag, a2^dag, b^dag)`
//! with five complex input ports `(a1_in, a2_in, a1L_in, a2L_in, b_in)`
//! followed by their adjoints. The two spontaneous-emission ports `a1L_in`
//! and `a2L_in` each drive a cavity mode *and* the motion; that shared
//! routing is what correlates photon scattering with motional heating and
//! cooling.
//!
//! Fourier convention: `X(omega) = int dt e^{+i omega t} x(t)`, so that
//! `d/dt -> -i omega` and white-noise ports satisfy
//! `<N_k(omega) N_l(omega')> = 2 pi D_kl delta(omega + omega')`.

use std::cmp::Ordering;

use nalgebra::{SMatrix, Schur};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{self, SpectrumTrace};
use crate::coherent::{conjugate_rows, Mat6, A1, A2, B, DAG};
use crate::error::{Error, Result};
use crate::params::{DerivedCouplings, SystemParams};

pub const PORTS: usize = 5;
pub const PORT_A1: usize = 0;
pub const PORT_A2: usize = 1;
pub const PORT_A1L: usize = 2;
pub const PORT_A2L: usize = 3;
pub const PORT_B: usize = 4;

pub type NoiseRouting = SMatrix<C64, 6, 10>;
pub type InputCorrelation = SMatrix<f64, 10, 10>;
type OutputTransfer = SMatrix<C64, 4, 10>;

/// Which joint quadrature of the two output fields is analysed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quadrature {
    /// Sum of the phase quadratures, `-i(a1 - a1^dag + a2 - a2^dag)`.
    Plus,
    /// Difference of the amplitude quadratures, `a1 + a1^dag - a2 - a2^dag`.
    Minus,
}

impl Quadrature {
    /// Weights over `(a1_out, a2_out, a1_out^dag, a2_out^dag)`.
    fn weights(self) -> [C64; 4] {
        let one = C64::new(1.0, 0.0);
        match self {
            Quadrature::Minus => [one, -one, one, -one],
            Quadrature::Plus => {
                let mi = C64::new(0.0, -1.0);
                [mi, mi, -mi, -mi]
            }
        }
    }
}

/// Residual rotating-frame detunings of the cavity modes and the motion.
/// All zero when the laser satisfies the sideband resonance conditions.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct DetuningOffsets {
    /// `nu' - delta_1 + delta_1L`
    pub cavity1: f64,
    /// `nu' + delta_2 - delta_2L`
    pub cavity2: f64,
    /// `nu' - nu - delta_b`
    pub motion: f64,
}

impl DetuningOffsets {
    /// Offsets produced by laser–cavity detunings `delta_1`, `delta_2`.
    pub fn from_detunings(
        dc: &DerivedCouplings,
        p: &SystemParams,
        delta_1: f64,
        delta_2: f64,
    ) -> Self {
        Self {
            cavity1: dc.nu_prime - delta_1 + dc.delta_1l,
            cavity2: dc.nu_prime + delta_2 - dc.delta_2l,
            motion: dc.nu_prime - p.nu - dc.delta_b,
        }
    }
}

/// `dx/dt = A x + B n` with white-noise ports `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearNoiseModel {
    pub drift: Mat6,
    pub noise_routing: NoiseRouting,
    /// `D_kl` with `<n_k(t) n_l(t')> = D_kl delta(t - t')`.
    pub input_corr: InputCorrelation,
    /// Mirror decay rates `(kappa1, kappa2)` of the input–output relation.
    pub output_coupling: (f64, f64),
}

/// Assembles the model at exact sideband resonance.
pub fn build_model(dc: &DerivedCouplings, p: &SystemParams) -> Result<LinearNoiseModel> {
    build_model_with_offsets(dc, p, &DetuningOffsets::default())
}

pub fn build_model_with_offsets(
    dc: &DerivedCouplings,
    p: &SystemParams,
    offsets: &DetuningOffsets,
) -> Result<LinearNoiseModel> {
    let i = C64::i();
    let root2 = std::f64::consts::SQRT_2;
    let mut drift = Mat6::zeros();
    let mut routing = NoiseRouting::zeros();

    // a1: adjoint of the a1^dag equation.
    drift[(A1, B + DAG)] = dc.chi1;
    drift[(A1, A1)] = -(p.kappa1 + dc.kappa_1l) - i * offsets.cavity1;
    routing[(A1, PORT_A1)] = C64::from((2.0 * p.kappa1).sqrt());
    routing[(A1, PORT_A1L)] = root2 * dc.kbar_1l.conj();

    drift[(A2, B)] = dc.chi2;
    drift[(A2, A2)] = -(p.kappa2 + dc.kappa_2l) + i * offsets.cavity2;
    routing[(A2, PORT_A2)] = C64::from((2.0 * p.kappa2).sqrt());
    routing[(A2, PORT_A2L)] = root2 * dc.kbar_2l;

    drift[(B, A1 + DAG)] = dc.chi1_bar;
    drift[(B, A2)] = -dc.chi2_bar.conj();
    drift[(B, B)] = -(p.kappa_b + dc.kappa_2b - dc.kappa_1b) + i * offsets.motion;
    routing[(B, PORT_B)] = C64::from((2.0 * p.kappa_b).sqrt());
    routing[(B, PORT_A2L)] = root2 * dc.kbar_2b;
    routing[(B, PORT_A1L + PORTS)] = -root2 * dc.kbar_1b;

    conjugate_rows(&mut drift);
    for row in 0..DAG {
        for port in 0..2 * PORTS {
            routing[(row + DAG, (port + PORTS) % (2 * PORTS))] = routing[(row, port)].conj();
        }
    }

    let mut input_corr = InputCorrelation::zeros();
    for port in [PORT_A1, PORT_A2, PORT_A1L, PORT_A2L] {
        input_corr[(port, port + PORTS)] = 1.0;
    }
    input_corr[(PORT_B, PORT_B + PORTS)] = p.nbar + 1.0;
    input_corr[(PORT_B + PORTS, PORT_B)] = p.nbar;

    let model = LinearNoiseModel {
        drift,
        noise_routing: routing,
        input_corr,
        output_coupling: (p.kappa1, p.kappa2),
    };
    let abscissa = model.spectral_abscissa()?;
    if abscissa >= 0.0 {
        return Err(Error::UnstableModel { abscissa });
    }
    Ok(model)
}

impl LinearNoiseModel {
    pub fn drift_eigenvalues(&self) -> Result<Vec<C64>> {
        Schur::new(self.drift)
            .eigenvalues()
            .map(|v| v.iter().copied().collect())
            .ok_or(Error::UnstableModel { abscissa: f64::NAN })
    }

    /// Largest real part among the drift eigenvalues.
    pub fn spectral_abscissa(&self) -> Result<f64> {
        Ok(self
            .drift_eigenvalues()?
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max))
    }

    /// Maps the ports to `(a1_out, a2_out, a1_out^dag, a2_out^dag)` at
    /// frequency `omega`, including the reflected input.
    fn output_transfer(&self, omega: f64) -> Result<OutputTransfer> {
        let resolvent = Mat6::identity() * C64::new(0.0, -omega) - self.drift;
        let response = resolvent
            .lu()
            .solve(&self.noise_routing)
            .ok_or(Error::Singular { omega })?;
        let (k1, k2) = self.output_coupling;
        let mut out = OutputTransfer::zeros();
        for (row, (mode, port, kappa)) in [
            (A1, PORT_A1, k1),
            (A2, PORT_A2, k2),
            (A1 + DAG, PORT_A1 + PORTS, k1),
            (A2 + DAG, PORT_A2 + PORTS, k2),
        ]
        .into_iter()
        .enumerate()
        {
            let gain = (2.0 * kappa).sqrt();
            for col in 0..2 * PORTS {
                out[(row, col)] = gain * response[(mode, col)];
            }
            out[(row, port)] -= 1.0;
        }
        Ok(out)
    }

    fn quadrature_row(transfer: &OutputTransfer, q: Quadrature) -> [C64; 2 * PORTS] {
        let w = q.weights();
        let mut row = [C64::new(0.0, 0.0); 2 * PORTS];
        for (col, slot) in row.iter_mut().enumerate() {
            *slot = (0..4).map(|r| w[r] * transfer[(r, col)]).sum();
        }
        row
    }

    fn symmetrized(&self, at: &[C64; 2 * PORTS], mirrored: &[C64; 2 * PORTS]) -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for (k, x) in at.iter().enumerate() {
            for (l, y) in mirrored.iter().enumerate() {
                let d = self.input_corr[(k, l)] + self.input_corr[(l, k)];
                if d != 0.0 {
                    acc += x * y * d;
                }
            }
        }
        // Normalized so that vacuum at every port gives exactly 1.
        acc.re / 4.0
    }

    /// Normalized squeezing spectra `(S_plus, S_minus)` at `omega`; shot noise
    /// is 1.
    pub fn output_spectra(&self, omega: f64) -> Result<(f64, f64)> {
        let at = self.output_transfer(omega)?;
        let mirrored = self.output_transfer(-omega)?;
        let value = |q| {
            self.symmetrized(
                &Self::quadrature_row(&at, q),
                &Self::quadrature_row(&mirrored, q),
            )
        };
        Ok((value(Quadrature::Plus), value(Quadrature::Minus)))
    }
}

pub fn output_spectrum(
    model: &LinearNoiseModel,
    omega: f64,
    quadrature: Quadrature,
) -> Result<f64> {
    let (plus, minus) = model.output_spectra(omega)?;
    Ok(match quadrature {
        Quadrature::Plus => plus,
        Quadrature::Minus => minus,
    })
}

/// Evaluates both quadrature spectra over `omega_grid` (in parallel) and
/// attaches the analytic comparison, the regime and the extracted dips.
pub fn spectrum_sweep(
    model: &LinearNoiseModel,
    dc: &DerivedCouplings,
    omega_grid: &[f64],
) -> Result<SpectrumTrace> {
    if omega_grid
        .windows(2)
        .any(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Greater))
    {
        return Err(Error::InvalidParameter {
            name: "omega_grid",
            reason: "grid must be strictly increasing".into(),
        });
    }
    let values = omega_grid
        .par_iter()
        .map(|&w| model.output_spectra(w))
        .collect::<Result<Vec<_>>>()?;
    let (s_plus, s_minus): (Vec<f64>, Vec<f64>) = values.into_iter().unzip();
    let (k1, k2) = model.output_coupling;
    Ok(analysis::assemble_trace(
        omega_grid.to_vec(),
        s_plus,
        s_minus,
        dc.theta_big,
        dc.sigma_big,
        0.5 * (k1 + k2),
    ))
}
