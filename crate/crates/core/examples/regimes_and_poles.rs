//! How the spectrum's pole structure and regime change as the cavity linewidth
//! is swept through the coupling scale Theta.

use sideband_squeezing::analysis::{classify_regime, poles, s_analytic};

fn main() {
    let theta = 1.0;
    let sigma = 0.3;
    println!(
        "{:>8} {:>22} {:>22} {:>10}  regime",
        "kappa", "pole +", "pole -", "S(0)"
    );
    for kappa in [0.05, 0.125, 0.5, 0.9, 1.0, 1.2, 1.6, 2.0, 4.0, 12.5] {
        let [_, plus, minus] = poles(theta, kappa);
        let c = classify_regime(theta, kappa);
        let tag = if c.weakly_resolved {
            " (weakly resolved)"
        } else {
            ""
        };
        println!(
            "{kappa:8.3} {:>22} {:>22} {:10.5}  {:?}{tag}",
            format!("{:+.3} {:+.3}i", plus.re, plus.im),
            format!("{:+.3} {:+.3}i", minus.re, minus.im),
            s_analytic(0.0, theta, sigma, kappa),
            c.regime
        );
    }
}
