//! Euclidean embedding of a kernel-induced metric, and a metric that has
//! none.

use nalgebra::DMatrix;

use hilbertian::gram::{
    euclidean_embedding, is_negative_definite, SymmetricKernelMatrix, DEFAULT_TOL,
};
use hilbertian::profiles::{metric_from_kernel, zoo_default};
use hilbertian::Error;

fn main() -> hilbertian::Result<()> {
    let d2 = metric_from_kernel(&zoo_default("laplacian")?);
    let xs = [-1.5, 0.0, 0.4, 2.0, 3.1];
    let n = xs.len();
    let m = DMatrix::from_fn(n, n, |i, j| d2.eval(xs[i] - xs[j]));
    let nm = SymmetricKernelMatrix::new(m)?;
    println!(
        "negative definite: {}",
        is_negative_definite(&nm, DEFAULT_TOL)?.verdict
    );
    let e = euclidean_embedding(&nm, DEFAULT_TOL)?;
    println!("rank {} embedding, residual {:.2e}", e.rank, e.residual);
    println!("{:.4}", e.coordinates);

    // d²(t) = t⁴ on {0, 1, 2}
    let t4 = SymmetricKernelMatrix::from_rows(&[
        vec![0.0, 1.0, 16.0],
        vec![1.0, 0.0, 1.0],
        vec![16.0, 1.0, 0.0],
    ])?;
    match euclidean_embedding(&t4, DEFAULT_TOL) {
        Err(Error::NotHilbertian {
            nd_witness,
            nd_form,
            ..
        }) => {
            println!("t⁴ rejected: c = {nd_witness:.4?}, cᵀD²c = {nd_form:.4} > 0");
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
