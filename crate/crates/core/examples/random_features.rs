//! Random Fourier features for the Gaussian kernel.

use hilbertian::features::{approximate_kernel, sample_frequencies};
use hilbertian::profiles::zoo_default;
use hilbertian::spectral::{bochner_inversion, InversionConfig};

fn main() -> hilbertian::Result<()> {
    let k = zoo_default("gaussian")?;
    let mu = bochner_inversion(&k, &InversionConfig::default())?.measure;
    let pairs = [(0.0, 0.0), (0.0, 0.5), (1.0, -1.0), (2.5, -0.5)];
    for m in [64, 512, 4096] {
        let sample = sample_frequencies(&mu, m, 42)?;
        let worst = pairs
            .iter()
            .map(|&(x, y)| (approximate_kernel(&sample, x, y) - k.eval(x - y)).abs())
            .fold(0.0, f64::max);
        println!(
            "m = {m:>4}: max error {worst:.4} over {} pairs",
            pairs.len()
        );
    }
    let sample = sample_frequencies(&mu, 4, 42)?;
    println!(
        "first features, x = 0.3: {:.4?}",
        sample.feature_map().map(0.3)
    );
    Ok(())
}
