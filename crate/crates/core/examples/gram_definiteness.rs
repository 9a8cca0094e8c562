//! Positive definiteness of Gram matrices, and the sign of the witness.
//!
//! ```text
//! cargo run --example gram_definiteness
//! ```

use std::f64::consts::PI;

use hilbertian::gram::{build_gram, is_positive_definite, DEFAULT_TOL};
use hilbertian::profiles::zoo_default;

fn main() -> hilbertian::Result<()> {
    let points = [0.0, PI, 2.0 * PI];
    let kernels = [
        ("gaussian", zoo_default("gaussian")?),
        ("cos t", zoo_default("cosine")?),
        ("cos t - 0.3", zoo_default("cosine")?.affine(1.0, -0.3)),
    ];
    for (name, k) in kernels {
        let g = build_gram(&k, &points)?;
        let v = is_positive_definite(&g, DEFAULT_TOL)?;
        println!(
            "{name:>12}: psd = {:<5}  min eigenvalue = {:+.6}  witness = {:.3?}",
            v.verdict, v.witness_eigenvalue, v.witness_vector
        );
    }
    Ok(())
}
