//! Squared metrics from gamma measures, and the boundedness bound.

use std::f64::consts::PI;

use hilbertian::spectral::{
    gamma_from_spectral, int_bound_integral, screw_synthesis, spectral_from_gamma, Atom,
    GammaDensity, GammaMeasure, SpectralMeasure,
};

fn main() -> hilbertian::Result<()> {
    // k = 0.2 + cos t: μ has ½ at ±1 and 0.2 at zero
    let mu = SpectralMeasure::atomic(vec![Atom::new(0.0, 0.2), Atom::new(1.0, 0.5)])?;
    let split = gamma_from_spectral(&mu);
    println!(
        "γ atoms {:?}, split-off atom₀ = {}",
        split.gamma.atoms(),
        split.atom_zero
    );
    for t in [0.5, 1.0, PI] {
        println!(
            "  d²({t:.3}) = {:.12}   2 - 2cos t = {:.12}",
            screw_synthesis(&split.gamma, t),
            2.0 - 2.0 * t.cos()
        );
    }
    let integral = int_bound_integral(&split.gamma);
    println!("∫ s⁻² dγ = {integral} <= 4k(0) = {}", 4.0 * mu.total_mass());
    let back = spectral_from_gamma(&split.gamma, mu.total_mass())?;
    println!("recovered atoms {:?}", back.atoms());

    // d²(t) = |t|: dγ = (2/π) ds on (0, ∞), truncated here
    let edges: Vec<f64> = (0..=400).map(|i| i as f64 * 0.25).collect();
    let gamma = GammaMeasure::new(vec![], GammaDensity::flat(edges, vec![2.0 / PI; 400])?)?;
    for t in [0.5, 1.0, 2.0] {
        println!("  |t| metric: d²({t}) = {:.4}", screw_synthesis(&gamma, t));
    }
    match spectral_from_gamma(&gamma, 1.0) {
        Err(e) => println!("|t| metric: {e}"),
        Ok(_) => println!("|t| metric: unexpectedly bounded"),
    }
    Ok(())
}
