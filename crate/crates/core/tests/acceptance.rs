//! Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion, with the
//! individual checks underneath, and exits non-zero if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sideband_squeezing::analysis::{s_analytic, SpectrumTrace};
use sideband_squeezing::cli::presets::with_trap_heating;
use sideband_squeezing::cli::{compute_spectrum, Preset, RunConfig};
use sideband_squeezing::coherent::{evolution_map, propagate_vacuum, ModeMap};
use sideband_squeezing::params::{
    cooling_limit_estimate, coupling_chi, radiative_rates, thermal_occupation, CavityMode,
    NuPrimeMode,
};
use sideband_squeezing::qle::{build_model, output_spectrum, Quadrature};
use sideband_squeezing::scattering::{cavity_amplitudes, cavity_spontaneous_loss};
use sideband_squeezing::{DerivedCouplings, SystemParams, C64};

type Criterion = (&'static str, fn() -> Outcome);

#[derive(Default)]
struct Outcome {
    checks: Vec<(bool, String)>,
}

impl Outcome {
    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        self.checks.push((ok, detail.into()));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(ok, _)| *ok)
    }
}

fn section_v() -> SystemParams {
    RunConfig::from_preset(Preset::Fig2).params
}

fn preset_trace(preset: Preset) -> SpectrumTrace {
    compute_spectrum(&RunConfig::from_preset(preset)).expect("preset spectrum")
}

fn grid_step(trace: &SpectrumTrace) -> f64 {
    trace.omega[1] - trace.omega[0]
}

fn value_at_zero(trace: &SpectrumTrace) -> f64 {
    let i = (0..trace.omega.len())
        .min_by(|&a, &b| trace.omega[a].abs().total_cmp(&trace.omega[b].abs()))
        .unwrap();
    assert!(
        trace.omega[i].abs() < 1e-9 * trace.kappa,
        "grid misses omega = 0"
    );
    trace.s_minus[i]
}

fn coupling_scale() -> Outcome {
    let mut out = Outcome::default();
    let p = section_v();
    let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm).unwrap();
    let theta = dc.theta().unwrap() / TAU;
    let chi1 = coupling_chi(&p, p.nu, CavityMode::One, false).unwrap();
    let chi2 = coupling_chi(&p, p.nu, CavityMode::Two, false).unwrap();
    let bare = (chi2.norm_sqr() - chi1.norm_sqr()).sqrt() / TAU;
    out.check(
        (7.5e3..=8.3e3).contains(&theta),
        format!(
            "Theta/2pi = {theta:.1} Hz with nu' (bare nu gives {bare:.1} Hz); band [7500, 8300]"
        ),
    );
    out
}

fn fig2_regime() -> Outcome {
    let mut out = Outcome::default();
    let trace = preset_trace(Preset::Fig2);
    let theta = trace.theta.unwrap();
    let kappa = trace.kappa;
    let h = grid_step(&trace);
    let dips = &trace.minima;
    out.check(
        dips.len() == 3,
        format!("{} local minima (want 3)", dips.len()),
    );
    if dips.len() != 3 {
        return out;
    }
    let (left, centre, right) = (dips[0], dips[1], dips[2]);
    out.check(
        centre.omega.abs() <= 2.0 * h,
        format!("central dip at {:.3} grid steps from 0", centre.omega / h),
    );
    for (dip, target) in [(left, -theta), (right, theta)] {
        out.check(
            (dip.omega - target).abs() <= 2.0 * h,
            format!(
                "side dip at {:.4} Theta, {:.1} grid steps from {:+} Theta",
                dip.omega / theta,
                (dip.omega - target) / h,
                target / theta
            ),
        );
    }
    match centre.fwhm {
        Some(w) => out.check(
            (w / (2.0 * kappa) - 1.0).abs() <= 0.15,
            format!(
                "central FWHM = {:.3} kappa (want 2 kappa +- 15%)",
                w / kappa
            ),
        ),
        None => out.check(false, "central FWHM not resolved on the grid"),
    }
    for dip in [left, right] {
        match dip.fwhm {
            Some(w) => out.check(
                (w / kappa - 1.0).abs() <= 0.20,
                format!("side FWHM = {:.3} kappa (want kappa +- 20%)", w / kappa),
            ),
            None => out.check(false, "side FWHM not resolved on the grid"),
        }
    }
    let s0 = value_at_zero(&trace);
    out.check(s0 <= 0.05, format!("S(0) = {s0:.4} (want <= 0.05)"));
    for dip in [left, right] {
        let analytic = s_analytic(dip.omega, theta, trace.sigma, kappa);
        out.check(
            dip.depth >= analytic,
            format!(
                "side minimum {:.4} vs analytic {analytic:.4} at the same point",
                dip.depth
            ),
        );
    }
    out
}

fn fig3_regime() -> Outcome {
    let mut out = Outcome::default();
    let trace = preset_trace(Preset::Fig3);
    let theta = trace.theta.unwrap();
    out.check(
        trace.minima.len() == 1,
        format!("{} local minima (want 1)", trace.minima.len()),
    );
    let flat = trace.s_flat.as_ref().expect("merged regime carries s_flat");
    let deviation = trace
        .omega
        .iter()
        .enumerate()
        .filter(|(_, w)| w.abs() <= theta)
        .map(|(i, _)| (trace.s_minus[i] - flat[i]).abs())
        .fold(0.0, f64::max);
    let analytic_gap = trace
        .omega
        .iter()
        .enumerate()
        .filter(|(_, w)| w.abs() <= theta)
        .map(|(i, _)| (trace.s_analytic[i] - flat[i]).abs())
        .fold(0.0, f64::max);
    out.check(
        deviation <= 0.1,
        format!(
            "max |S_full - S_flat| over |omega| <= Theta = {deviation:.4} (want <= 0.1; Theta/kappa = {:.3}, \
             ideal-vs-flat alone {analytic_gap:.4})",
            theta / trace.kappa
        ),
    );
    let s0 = value_at_zero(&trace);
    out.check(s0 <= 0.05, format!("S(0) = {s0:.4} (want <= 0.05)"));
    out
}

fn fig4_regime() -> Outcome {
    let mut out = Outcome::default();
    let trace = preset_trace(Preset::Fig4);
    let theta = trace.theta.unwrap();
    let kappa = trace.kappa;
    out.check(
        trace.minima.len() == 1,
        format!("{} local minima (want 1)", trace.minima.len()),
    );
    if let Some(dip) = trace.minima.first() {
        let h = grid_step(&trace);
        out.check(
            dip.omega.abs() <= 2.0 * h,
            format!("dip at {:.3} grid steps from 0", dip.omega / h),
        );
        let scale = theta * theta / kappa;
        match dip.fwhm {
            Some(w) => out.check(
                (0.5 * scale..=4.0 * scale).contains(&w),
                format!("FWHM = {:.3} Theta^2/kappa (want [0.5, 4])", w / scale),
            ),
            None => out.check(false, "FWHM not resolved on the grid"),
        }
    }
    out
}

fn ideal_model(theta: f64, sigma: f64, kappa: f64) -> (DerivedCouplings, SystemParams) {
    // Real couplings with chi2 - chi1 = Sigma and chi2 + chi1 = Theta^2 / Sigma.
    let sum = theta * theta / sigma;
    let chi1 = C64::from(0.5 * (sum - sigma));
    let chi2 = C64::from(0.5 * (sum + sigma));
    let p = SystemParams {
        kappa1: kappa,
        kappa2: kappa,
        kappa_b: 0.0,
        nbar: 0.0,
        ..section_v()
    };
    (DerivedCouplings::lossless(chi1, chi2), p)
}

fn oracle_equivalence() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let kappa = TAU * 10f64.powf(rng.random_range(2.0..5.0));
        let theta = kappa * 10f64.powf(rng.random_range(-1.3..1.3));
        let sigma = theta * rng.random_range(0.05..0.95);
        let omega = theta * rng.random_range(-3.0..3.0);
        let (dc, p) = ideal_model(theta, sigma, kappa);
        let model = build_model(&dc, &p).unwrap();
        let full = output_spectrum(&model, omega, Quadrature::Minus).unwrap();
        let reference = s_analytic(omega, theta, sigma, kappa);
        worst = worst.max(((full - reference) / reference).abs());
    }
    out.check(
        worst <= 1e-8,
        format!("worst relative deviation {worst:.2e} over 50 tuples (want <= 1e-8)"),
    );
    out
}

fn shot_noise_identity() -> Outcome {
    let mut out = Outcome::default();
    let p = SystemParams {
        kappa_b: TAU * 50.0,
        nbar: 0.0,
        ..section_v()
    };
    let zero = C64::new(0.0, 0.0);
    let dc = DerivedCouplings::lossless(zero, zero);
    let model = build_model(&dc, &p).unwrap();
    let mut rng = StdRng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let omega = rng.random_range(-1e6..1e6);
        let (plus, minus) = model.output_spectra(omega).unwrap();
        worst = worst.max((plus - 1.0).abs()).max((minus - 1.0).abs());
    }
    out.check(
        worst <= 1e-12,
        format!("max |S - 1| = {worst:.2e} at 1000 frequencies (want <= 1e-12)"),
    );
    out
}

fn random_couplings(rng: &mut StdRng) -> (C64, C64) {
    let r2 = TAU * rng.random_range(5e3..2e4);
    let r1 = r2 * rng.random_range(0.0..0.9);
    (
        C64::from_polar(r1, rng.random_range(0.0..TAU)),
        C64::from_polar(r2, rng.random_range(0.0..TAU)),
    )
}

fn max_diff(a: &ModeMap, b: &ModeMap) -> f64 {
    (a.entries - b.entries)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

fn symplectic_property() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = StdRng::seed_from_u64(7);
    let (mut metric, mut period, mut compose): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..100 {
        let (chi1, chi2) = random_couplings(&mut rng);
        let theta = (chi2.norm_sqr() - chi1.norm_sqr()).sqrt();
        let t1 = rng.random_range(0.0..TAU / theta);
        let t2 = rng.random_range(0.0..TAU / theta);
        let m1 = evolution_map(chi1, chi2, t1).unwrap();
        let m2 = evolution_map(chi1, chi2, t2).unwrap();
        let m12 = evolution_map(chi1, chi2, t1 + t2).unwrap();
        metric = metric.max(m1.metric_defect());
        let full = evolution_map(chi1, chi2, TAU / theta).unwrap();
        period = period.max(max_diff(&full, &ModeMap::identity()));
        let product = ModeMap {
            entries: m2.entries * m1.entries,
            time: t1 + t2,
        };
        compose = compose.max(max_diff(&product, &m12));
    }
    out.check(
        metric <= 1e-10,
        format!("max |M J M^dag - J| = {metric:.2e}"),
    );
    out.check(
        period <= 1e-10,
        format!("max |M(2pi/Theta) - I| = {period:.2e}"),
    );
    out.check(
        compose <= 1e-10,
        format!("max |M(t2) M(t1) - M(t1 + t2)| = {compose:.2e}"),
    );
    out
}

fn quadrature_symmetry() -> Outcome {
    let mut out = Outcome::default();
    let mut configs: Vec<(String, RunConfig)> = Preset::ALL
        .into_iter()
        .map(|p| (p.name().to_string(), RunConfig::from_preset(p)))
        .collect();
    let mut heated = RunConfig::from_preset(Preset::Fig2);
    heated.params = with_trap_heating(heated.params);
    configs.push(("fig2 + trap heating".into(), heated));
    for (name, cfg) in configs {
        let trace = compute_spectrum(&cfg).unwrap();
        let worst = trace
            .s_plus
            .iter()
            .zip(&trace.s_minus)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        out.check(
            worst <= 1e-10,
            format!("{name}: max |S+ - S-| = {worst:.2e}"),
        );
    }
    out
}

fn cross_module_identities() -> Outcome {
    let mut out = Outcome::default();
    let mut p = section_v();
    // Off the symmetric point so that every term of the amplitudes is active.
    p.theta_c = 0.7;
    p.theta_l = 0.4;
    p.phi1 = 0.3;
    p.phi2 = -0.2;
    for trap in [p.nu, p.nu * 0.98] {
        let chi1 = coupling_chi(&p, trap, CavityMode::One, false).unwrap();
        let chi2 = coupling_chi(&p, trap, CavityMode::Two, false).unwrap();
        let one = cavity_amplitudes(&p, CavityMode::One, trap);
        let two = cavity_amplitudes(&p, CavityMode::Two, trap);
        let e1 = (-C64::i() * one.plus - chi1).norm() / chi1.norm();
        let e2 = (-C64::i() * two.minus - chi2).norm() / chi2.norm();
        out.check(
            e1 <= 1e-10,
            format!(
                "chi1 = -i t_cav(1,+) at nu' = {:.4} nu: rel {e1:.1e}",
                trap / p.nu
            ),
        );
        out.check(
            e2 <= 1e-10,
            format!(
                "chi2 = -i t_cav(2,-) at nu' = {:.4} nu: rel {e2:.1e}",
                trap / p.nu
            ),
        );
    }
    let p = section_v();
    let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm).unwrap();
    for (mode, detuning, kappa_l) in [
        (CavityMode::One, dc.nu_prime, dc.kappa_1l),
        (CavityMode::Two, -dc.nu_prime, dc.kappa_2l),
    ] {
        let loss = cavity_spontaneous_loss(&p, mode, 1, detuning).unwrap();
        let rel = ((loss - 2.0 * kappa_l) / (2.0 * kappa_l)).abs();
        out.check(
            rel <= 1e-12,
            format!(
                "one-photon loss of mode {} = 2 kappa_L: rel {rel:.1e}",
                mode.number()
            ),
        );
    }
    out
}

fn cooling_bookkeeping() -> Outcome {
    let mut out = Outcome::default();
    let p = section_v();
    let bare = radiative_rates(&p, p.nu);
    let n_th = thermal_occupation(bare.kappa_1b, bare.kappa_2b).unwrap();
    let dc = DerivedCouplings::compute(&p, NuPrimeMode::ClosedForm).unwrap();
    let estimate = cooling_limit_estimate(p.delta, dc.nu_prime);
    out.check(
        (n_th - 4.51).abs() <= 0.05,
        format!(
            "n_th = {n_th:.4} from kappa_1b/(kappa_2b - kappa_1b) (with nu': {:.4}; |Delta|/4nu' = {estimate:.3})",
            dc.n_th.unwrap()
        ),
    );
    out
}

fn half_period_decorrelation() -> Outcome {
    let mut out = Outcome::default();
    let dc = DerivedCouplings::compute(&section_v(), NuPrimeMode::ClosedForm).unwrap();
    let theta = dc.theta().unwrap();
    let state = propagate_vacuum(&evolution_map(dc.chi1, dc.chi2, PI / theta).unwrap());
    let cross = state.motion_cavity_correlation();
    let duan = state.duan_combination();
    out.check(
        cross < 1e-10,
        format!("max |motion-cavity moment| at pi/Theta = {cross:.2e}"),
    );
    out.check(
        duan < 2.0,
        format!("Duan combination at pi/Theta = {duan:.4} (vacuum 2)"),
    );
    out
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("coupling scale", coupling_scale),
        ("three-dip regime", fig2_regime),
        ("merged regime", fig3_regime),
        ("narrow-dip regime", fig4_regime),
        ("ideal-limit oracle", oracle_equivalence),
        ("shot-noise identity", shot_noise_identity),
        ("symplectic evolution", symplectic_property),
        ("quadrature symmetry", quadrature_symmetry),
        ("cross-module identities", cross_module_identities),
        ("cooling bookkeeping", cooling_bookkeeping),
        ("half-period decorrelation", half_period_decorrelation),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    println!();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let verdict = if outcome.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {name:<26} {verdict}", k + 1);
        for (ok, detail) in &outcome.checks {
            println!("    [{}] {detail}", if *ok { "ok" } else { "!!" });
        }
        if !outcome.passed() {
            failed.push(k + 1);
        }
    }
    println!(
        "\nacceptance: {} of {} criteria passed in {:.1?}",
        criteria.len() - failed.len(),
        criteria.len(),
        start.elapsed()
    );
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
