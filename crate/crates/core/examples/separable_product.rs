//! A three-dimensional Gaussian as a product of one-dimensional inversions.

use hilbertian::product::{product_synthesis, separable_eval, SeparableKernel};
use hilbertian::profiles::zoo_default;
use hilbertian::spectral::InversionConfig;

fn main() -> hilbertian::Result<()> {
    let kernel = SeparableKernel::isotropic(&zoo_default("gaussian")?, 3)?;
    let mu = kernel.spectral_measure(&InversionConfig::default())?;
    println!("product measure total mass {:.6}", mu.total_mass());
    let pairs = [
        ([0.0, 0.0, 0.0], [0.5, -0.5, 1.0]),
        ([1.0, 2.0, -1.0], [0.0, 0.0, 0.0]),
        ([-3.0, 3.0, 0.2], [2.5, -2.0, 0.0]),
    ];
    for (x, y) in pairs {
        let t: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
        println!(
            "K({x:?}, {y:?}) = {:.9}   from μ: {:.9}",
            separable_eval(&kernel, &x, &y)?,
            product_synthesis(&mu, &t)?
        );
    }
    Ok(())
}
