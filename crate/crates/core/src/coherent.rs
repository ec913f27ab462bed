//! Lossless three-mode dynamics generated by the effective Raman coupling
//! `i chi1 a1^dag b^dag + i chi2 a2^dag b + h.c.`
//!
//! Operators are collected in the doubled vector `(a1, a2, b, a1^dag, a2^dag,
//! b^dag)`. A [`ModeMap`] `M` acts as `x(t) = M x(0)`; the symmetrized
//! covariance `V_ij = <{x_i, x_j^dag}>/2` then evolves as `M V M^dag`.

use nalgebra::SMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

pub type Mat6 = SMatrix<C64, 6, 6>;

pub const A1: usize = 0;
pub const A2: usize = 1;
pub const B: usize = 2;
/// Offset from an annihilation operator to its adjoint in the doubled vector.
pub const DAG: usize = 3;

/// Commutator metric `diag(1, 1, 1, -1, -1, -1)`.
pub fn metric() -> Mat6 {
    Mat6::from_fn(|i, j| match (i == j, i < DAG) {
        (true, true) => C64::new(1.0, 0.0),
        (true, false) => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, 0.0),
    })
}

/// Fills the adjoint rows from the annihilation rows: row `i + 3` is the
/// conjugate of row `i` with its column blocks swapped.
pub(crate) fn conjugate_rows(m: &mut Mat6) {
    for i in 0..DAG {
        for j in 0..6 {
            m[(i + DAG, (j + DAG) % 6)] = m[(i, j)].conj();
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeMap {
    pub entries: Mat6,
    /// Evolution time in seconds.
    pub time: f64,
}

impl ModeMap {
    pub fn identity() -> Self {
        Self {
            entries: Mat6::identity(),
            time: 0.0,
        }
    }

    /// Largest entry of `|M J M^dag - J|`.
    pub fn metric_defect(&self) -> f64 {
        let j = metric();
        let defect = self.entries * j * self.entries.adjoint() - j;
        defect.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry of `|lower-right - conj(upper-left)|` and of the matching
    /// off-diagonal blocks.
    pub fn conjugation_defect(&self) -> f64 {
        let m = &self.entries;
        let mut worst: f64 = 0.0;
        for i in 0..DAG {
            for j in 0..6 {
                let mirrored = m[(i + DAG, (j + DAG) % 6)];
                worst = worst.max((mirrored - m[(i, j)].conj()).norm());
            }
        }
        worst
    }
}

/// Heisenberg evolution over time `t` (seconds).
pub fn evolution_map(chi1: C64, chi2: C64, t: f64) -> Result<ModeMap> {
    let (a1, a2) = (chi1.norm_sqr(), chi2.norm_sqr());
    if a2 <= a1 {
        return Err(Error::AmplificationRegime {
            chi1_abs: a1.sqrt(),
            chi2_abs: a2.sqrt(),
        });
    }
    let theta = (a2 - a1).sqrt();
    let (s, c) = (theta * t).sin_cos();
    let theta2 = theta * theta;
    let pair = chi1 * chi2 / theta2 * (1.0 - c);

    let mut m = Mat6::zeros();
    m[(A1, A1)] = C64::from((a2 - a1 * c) / theta2);
    m[(A1, B + DAG)] = chi1 / theta * s;
    m[(A1, A2 + DAG)] = -pair;

    m[(A2, A2)] = C64::from(-(a1 - a2 * c) / theta2);
    m[(A2, B)] = chi2 / theta * s;
    m[(A2, A1 + DAG)] = pair;

    m[(B, B)] = C64::from(c);
    m[(B, A2)] = -chi2.conj() / theta * s;
    m[(B, A1 + DAG)] = chi1 / theta * s;

    conjugate_rows(&mut m);
    Ok(ModeMap {
        entries: m,
        time: t,
    })
}

/// Heisenberg generator `G` with `dx/dt = G x`.
pub fn generator(chi1: C64, chi2: C64) -> Mat6 {
    let mut g = Mat6::zeros();
    g[(A1, B + DAG)] = chi1;
    g[(A2, B)] = chi2;
    g[(B, A1 + DAG)] = chi1;
    g[(B, A2)] = -chi2.conj();
    conjugate_rows(&mut g);
    g
}

/// Maximum entrywise deviation between a central finite-difference derivative
/// of [`evolution_map`] at `t = 0` and [`generator`].
pub fn generator_check(chi1: C64, chi2: C64) -> Result<f64> {
    let theta = (chi2.norm_sqr() - chi1.norm_sqr()).max(0.0).sqrt();
    if theta == 0.0 {
        return Err(Error::AmplificationRegime {
            chi1_abs: chi1.norm(),
            chi2_abs: chi2.norm(),
        });
    }
    let h = 1e-6 / theta;
    let forward = evolution_map(chi1, chi2, h)?.entries;
    let backward = evolution_map(chi1, chi2, -h)?.entries;
    let derivative = (forward - backward) / C64::from(2.0 * h);
    let g = generator(chi1, chi2);
    Ok((derivative - g)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max))
}

/// Zero-mean Gaussian state of the three modes.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    /// Symmetrized second moments `<{x_i, x_j^dag}>/2`.
    pub cov: Mat6,
}

impl GaussianState {
    pub fn vacuum() -> Self {
        Self {
            cov: Mat6::identity() * C64::from(0.5),
        }
    }

    /// Symmetrized variance of the Hermitian combination `sum_i c_i x_i`.
    pub fn variance(&self, c: &[C64; 6]) -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..6 {
            for j in 0..6 {
                acc += c[i] * self.cov[(i, j)] * c[j].conj();
            }
        }
        acc.re
    }

    /// `Var(X1 - X2) + Var(P1 + P2)` with `X = (a + a^dag)/sqrt2` and
    /// `P = -i(a - a^dag)/sqrt2`. Vacuum gives 2; values below 2 certify
    /// entanglement of the two cavity modes.
    pub fn duan_combination(&self) -> f64 {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let (one, i) = (C64::from(r), C64::new(0.0, r));
        let zero = C64::new(0.0, 0.0);
        let difference_x = [one, -one, zero, one, -one, zero];
        let sum_p = [-i, -i, zero, i, i, zero];
        self.variance(&difference_x) + self.variance(&sum_p)
    }

    /// Largest symmetrized moment connecting the motion to either cavity mode.
    pub fn motion_cavity_correlation(&self) -> f64 {
        let motion = [B, B + DAG];
        let cavity = [A1, A2, A1 + DAG, A2 + DAG];
        let mut worst: f64 = 0.0;
        for &m in &motion {
            for &c in &cavity {
                worst = worst
                    .max(self.cov[(m, c)].norm())
                    .max(self.cov[(c, m)].norm());
            }
        }
        worst
    }

    /// Real covariance matrix of `(X1, X2, Xb, P1, P2, Pb)`.
    pub fn quadrature_covariance(&self) -> SMatrix<f64, 6, 6> {
        let u = quadrature_transform();
        (u * self.cov * u.adjoint()).map(|z| z.re)
    }
}

/// Unitary taking `(a, a^dag)` to `(X, P)` with `X = (a + a^dag)/sqrt2`,
/// `P = -i(a - a^dag)/sqrt2`, applied to each of the three modes.
pub fn quadrature_transform() -> Mat6 {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut u = Mat6::zeros();
    for k in 0..DAG {
        u[(k, k)] = C64::from(r);
        u[(k, k + DAG)] = C64::from(r);
        u[(k + DAG, k)] = C64::new(0.0, -r);
        u[(k + DAG, k + DAG)] = C64::new(0.0, r);
    }
    u
}

pub fn propagate_vacuum(map: &ModeMap) -> GaussianState {
    let vacuum = GaussianState::vacuum();
    GaussianState {
        cov: map.entries * vacuum.cov * map.entries.adjoint(),
    }
}
