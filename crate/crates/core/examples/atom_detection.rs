//! Detecting the spectral atom at zero, and a negative one.

use std::f64::consts::PI;

use hilbertian::gram::{build_gram, is_positive_definite, DEFAULT_TOL};
use hilbertian::profiles::zoo_default;
use hilbertian::spectral::{atom_at_zero, bochner_inversion, InversionConfig};

fn main() -> hilbertian::Result<()> {
    let mixed = zoo_default("gaussian")?.affine(0.7, 0.3);
    for window in [50.0, 200.0, 1000.0] {
        println!(
            "0.3 + 0.7·gaussian: long-run mean over T = {window}: {:.5}",
            atom_at_zero(&mixed, window)?
        );
    }
    let out = bochner_inversion(&mixed, &InversionConfig::default())?;
    println!(
        "extrapolated atom used by the inversion: {:.6}",
        out.report.atom_zero
    );

    let k = zoo_default("cosine")?.affine(1.0, -0.3);
    println!("cos t - 0.3: long-run mean {:.5}", atom_at_zero(&k, 200.0)?);
    if let Err(e) = bochner_inversion(&k, &InversionConfig::default()) {
        println!("  {e}");
    }
    let g = build_gram(&k, &[0.0, PI, 2.0 * PI])?;
    let v = is_positive_definite(&g, DEFAULT_TOL)?;
    println!(
        "  Gram on {{0, π, 2π}}: min eigenvalue {:.6}",
        v.witness_eigenvalue
    );
    Ok(())
}
