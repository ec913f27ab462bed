//! Closed-form spectra, regime classification and dip extraction.

use num_complex::Complex64 as C64;
use serde::Serialize;

/// Half-width of the band around `Theta = kappa` treated as the merged regime,
/// as a fraction of `kappa`.
pub const MERGED_BAND: f64 = 0.25;
/// Below this `Theta / kappa` the spectrum is a single narrow dip.
pub const NARROW_RATIO: f64 = 0.5;
/// Dips shallower than this are ignored.
pub const DIP_THRESHOLD: f64 = 1e-9;

/// Ideal spectrum without radiative loss, for equal cavity decay `kappa`.
pub fn s_analytic(omega: f64, theta: f64, sigma: f64, kappa: f64) -> f64 {
    let w2 = omega * omega;
    let k2 = kappa * kappa;
    let detune = w2 - theta * theta;
    1.0 - k2 * (theta.powi(4) - sigma.powi(4)) / ((k2 + w2) * (detune * detune + w2 * k2))
}

/// Flat-bottom form valid at `Theta = kappa`.
pub fn s_flat(omega: f64, theta: f64, sigma: f64) -> f64 {
    1.0 - theta * theta * (theta.powi(4) - sigma.powi(4)) / (theta.powi(6) + omega.powi(6))
}

/// Poles of the ideal spectrum in the lower half plane:
/// `-i kappa` and `-i kappa/2 +- sqrt(Theta^2 - kappa^2/4)`.
pub fn poles(theta: f64, kappa: f64) -> [C64; 3] {
    let root = C64::from(theta * theta - kappa * kappa / 4.0).sqrt();
    let centre = C64::new(0.0, -kappa / 2.0);
    [C64::new(0.0, -kappa), centre + root, centre - root]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    ThreePeak,
    Merged,
    SingleNarrow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub regime: Regime,
    /// Three-peak structure present but the side dips overlap the central one.
    pub weakly_resolved: bool,
}

pub fn classify_regime(theta: f64, kappa: f64) -> Classification {
    let ratio = theta / kappa;
    let (regime, weakly_resolved) = if (ratio - 1.0).abs() <= MERGED_BAND {
        (Regime::Merged, false)
    } else if ratio > 1.0 {
        (Regime::ThreePeak, false)
    } else if ratio <= NARROW_RATIO {
        (Regime::SingleNarrow, false)
    } else {
        (Regime::ThreePeak, true)
    };
    Classification {
        regime,
        weakly_resolved,
    }
}

/// A local minimum of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Dip {
    /// Parabolically refined location, rad/s.
    pub omega: f64,
    pub depth: f64,
    /// `None` when the half-depth crossing lies outside the grid.
    pub fwhm: Option<f64>,
}

/// Finds the dips of `s` sampled on a strictly increasing grid.
pub fn extract_minima(omega: &[f64], s: &[f64]) -> Vec<Dip> {
    assert_eq!(omega.len(), s.len(), "grid and spectrum lengths differ");
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut dips = Vec::new();
    for i in 0..n {
        if s[i] >= 1.0 - DIP_THRESHOLD {
            continue;
        }
        let left_ok = i == 0 || s[i] < s[i - 1];
        let right_ok = i == n - 1 || s[i] <= s[i + 1];
        if !(left_ok && right_ok) {
            continue;
        }
        if i == 0 || i == n - 1 {
            dips.push(Dip {
                omega: omega[i],
                depth: s[i],
                fwhm: None,
            });
            continue;
        }
        let (w, depth) = refine(&omega[i - 1..=i + 1], &s[i - 1..=i + 1]);
        dips.push(Dip {
            omega: w,
            depth,
            fwhm: half_width(omega, s, i, depth),
        });
    }
    dips
}

fn refine(x: &[f64], y: &[f64]) -> (f64, f64) {
    let (x0, x1, x2) = (x[0], x[1], x[2]);
    let (y0, y1, y2) = (y[0], y[1], y[2]);
    let a = (x1 - x0) * (y1 - y2);
    let b = (x1 - x2) * (y1 - y0);
    let denom = a - b;
    if denom == 0.0 {
        return (x1, y1);
    }
    let xm = (x1 - 0.5 * ((x1 - x0) * a - (x1 - x2) * b) / denom).clamp(x0, x2);
    // Lagrange form through the three samples.
    let l0 = (xm - x1) * (xm - x2) / ((x0 - x1) * (x0 - x2));
    let l1 = (xm - x0) * (xm - x2) / ((x1 - x0) * (x1 - x2));
    let l2 = (xm - x0) * (xm - x1) / ((x2 - x0) * (x2 - x1));
    (xm, (y0 * l0 + y1 * l1 + y2 * l2).min(y1))
}

fn half_width(omega: &[f64], s: &[f64], i: usize, depth: f64) -> Option<f64> {
    let half = 0.5 * (1.0 + depth);
    let crossing =
        |a: usize, b: usize| omega[a] + (half - s[a]) * (omega[b] - omega[a]) / (s[b] - s[a]);
    let mut l = i;
    while l > 0 && s[l] < half {
        l -= 1;
    }
    let mut r = i;
    while r < s.len() - 1 && s[r] < half {
        r += 1;
    }
    if s[l] < half || s[r] < half {
        return None;
    }
    Some(crossing(r - 1, r) - crossing(l, l + 1))
}

/// Continuous-variable entanglement measures from the two quadrature spectra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntanglementVerdict {
    /// `S_+ + S_-`; below 2 is sufficient for inseparability.
    pub duan_sum: f64,
    /// `S_+ S_-`; below 1 is the product form of the criterion.
    pub product: f64,
    pub entangled: bool,
}

pub fn entanglement_criteria(s_plus: f64, s_minus: f64) -> EntanglementVerdict {
    let duan_sum = s_plus + s_minus;
    let product = s_plus * s_minus;
    EntanglementVerdict {
        duan_sum,
        product,
        entangled: duan_sum < 2.0 || product < 1.0,
    }
}

/// A swept spectrum with its analytic comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumTrace {
    pub omega: Vec<f64>,
    pub s_plus: Vec<f64>,
    pub s_minus: Vec<f64>,
    /// Empty in the amplification regime, where `Theta` is undefined.
    pub s_analytic: Vec<f64>,
    /// Present only in the merged regime.
    pub s_flat: Option<Vec<f64>>,
    pub minima: Vec<Dip>,
    pub regime: Option<Classification>,
    pub theta: Option<f64>,
    pub sigma: f64,
    pub kappa: f64,
}

pub fn assemble_trace(
    omega: Vec<f64>,
    s_plus: Vec<f64>,
    s_minus: Vec<f64>,
    theta: Option<f64>,
    sigma: f64,
    kappa: f64,
) -> SpectrumTrace {
    let regime = theta.map(|t| classify_regime(t, kappa));
    let s_analytic = match theta {
        Some(t) => omega
            .iter()
            .map(|&w| s_analytic(w, t, sigma, kappa))
            .collect(),
        None => Vec::new(),
    };
    let s_flat = match (theta, regime) {
        (Some(t), Some(c)) if c.regime == Regime::Merged => {
            Some(omega.iter().map(|&w| s_flat(w, t, sigma)).collect())
        }
        _ => None,
    };
    let minima = extract_minima(&omega, &s_minus);
    SpectrumTrace {
        omega,
        s_plus,
        s_minus,
        s_analytic,
        s_flat,
        minima,
        regime,
        theta,
        sigma,
        kappa,
    }
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}
