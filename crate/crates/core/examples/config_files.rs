//! Writing a configuration file, overriding one key of a preset and running
//! the report and spectrum the command-line tool would produce.

use sideband_squeezing::cli::{build_report, load_config, render_spectrum, OutputFormat, Preset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("sideband-squeezing-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("wide-cavity.cfg");
    std::fs::write(
        &path,
        "# reference set with a 3 kHz cavity\npreset = fig2\nkappa1_hz = 3e3\nkappa2_hz = 3e3\n",
    )?;
    println!("full preset text:\n{}", Preset::Fig2.config_text());

    let mut cfg = load_config(&path)?;
    for w in &cfg.warnings {
        println!("warning: {w}");
    }
    let report = build_report(&cfg)?;
    println!("{}", report.to_text());

    cfg.sweep.points = 9;
    let trace = sideband_squeezing::cli::compute_spectrum(&cfg)?;
    print!("{}", render_spectrum(&trace, OutputFormat::Csv));
    Ok(())
}
