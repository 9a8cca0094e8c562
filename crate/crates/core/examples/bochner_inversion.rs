//! Spectral measures of the zoo kernels and how well they resynthesize.

use hilbertian::profiles::zoo_default;
use hilbertian::spectral::{bochner_inversion, InversionConfig};

fn main() -> hilbertian::Result<()> {
    let config = InversionConfig::default();
    for name in ["gaussian", "laplacian", "cauchy", "constant"] {
        let out = bochner_inversion(&zoo_default(name)?, &config)?;
        let d = out.measure.density();
        let r = &out.report;
        println!(
            "{name:>10}: atom₀ = {:.4}  density(0) = {:.6}  density(2) = {:.6}  \
             mass = {:.4}  residual = {:.2e}  tail c = {:.3}",
            r.atom_zero,
            d.interpolate(0.0),
            d.interpolate(2.0),
            out.measure.total_mass(),
            r.residual,
            r.tail_coefficient,
        );
    }
    println!("closed forms: laplacian 1/(π(1+τ²)), cauchy e^(-τ), gaussian e^(-τ²/2)/√(2π)");

    match bochner_inversion(&zoo_default("cosine")?, &config) {
        Err(e) => println!("cosine: {e}"),
        Ok(_) => println!("cosine: unexpectedly inverted"),
    }
    Ok(())
}
