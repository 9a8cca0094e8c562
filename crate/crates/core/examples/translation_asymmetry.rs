//! A translation-invariant metric need not polarize to a
//! translation-invariant kernel.

use hilbertian::profiles::{
    check_translation_invariance, default_probes, kernel_from_metric, metric_from_kernel,
    zoo_default, MetricProfile,
};

fn main() -> hilbertian::Result<()> {
    let probes = default_probes();
    let line = MetricProfile::squared_euclidean();
    let cases = [
        ("d²(t) = t²", line.as_bivariate()),
        ("polarized t²", kernel_from_metric(&line)),
        ("gaussian k(x-y)", zoo_default("gaussian")?.as_bivariate()),
        (
            "polarized 2-2cos t",
            kernel_from_metric(&metric_from_kernel(&zoo_default("cosine")?)),
        ),
    ];
    for (name, k) in cases {
        let r = check_translation_invariance(&k, &probes, 1e-9)?;
        println!(
            "{name:>20}: invariant = {:<5} worst |K(x+s,y+s) - K(x,y)| = {:.3e} at {:?}",
            r.invariant, r.worst_violation, r.worst_probe
        );
    }
    Ok(())
}
