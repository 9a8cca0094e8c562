use std::f64::consts::PI;

use nalgebra::DMatrix;
use proptest::prelude::*;

use hilbertian::features::{
    approximate_kernel, approximate_product_kernel, sample_frequencies, sample_product_frequencies,
};
use hilbertian::gram::{
    build_gram, euclidean_embedding, is_negative_definite, is_positive_definite, nd_to_psd,
    GramMatrix, SymmetricKernelMatrix, DEFAULT_TOL,
};
use hilbertian::product::{separable_eval, ProductSpectralMeasure, SeparableKernel};
use hilbertian::profiles::{
    check_translation_invariance, default_probes, kernel_from_metric_at, metric_from_kernel,
    zoo_default, KernelProfile, ProfileDescriptor, ZOO_NAMES,
};
use hilbertian::spectral::{
    bochner_synthesis, gamma_from_spectral, int_bound_integral, screw_synthesis,
    spectral_from_gamma, Atom, BinnedDensity, SpectralMeasure,
};

fn symmetric_zero_diagonal() -> impl Strategy<Value = DMatrix<f64>> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |v| {
            let a = DMatrix::from_vec(n, n, v);
            let mut s = (&a + a.transpose()) * 0.5;
            s.fill_diagonal(0.0);
            s
        })
    })
}

fn points(max: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-6.0f64..6.0, 2..=max)
}

fn zoo_kernel() -> impl Strategy<Value = KernelProfile> {
    prop::sample::select(ZOO_NAMES.to_vec()).prop_map(|n| zoo_default(n).unwrap())
}

fn measure() -> impl Strategy<Value = SpectralMeasure> {
    let atoms = prop::collection::vec((0.0f64..6.0, 0.0f64..1.0), 0..4);
    let zero = prop::option::of(0.01f64..1.0);
    let density = (1usize..30, 0.0f64..1.0, 0.1f64..8.0).prop_flat_map(|(bins, lo, width)| {
        prop::collection::vec(0.0f64..0.5, bins).prop_map(move |values| {
            let h = width / values.len() as f64;
            let edges = (0..=values.len()).map(|i| lo + h * i as f64).collect();
            BinnedDensity::new(edges, values).unwrap()
        })
    });
    (atoms, zero, density).prop_map(|(atoms, zero, density)| {
        let mut atoms: Vec<Atom> = atoms
            .into_iter()
            .map(|(loc, mass)| Atom::new(loc + 0.05, mass))
            .collect();
        if let Some(m) = zero {
            atoms.push(Atom::new(0.0, m));
        }
        SpectralMeasure::new(atoms, density).unwrap()
    })
}

fn synthesized(mu: &SpectralMeasure) -> KernelProfile {
    let mu = mu.clone();
    KernelProfile::new(ProfileDescriptor::new("synthesized"), move |t| {
        bochner_synthesis(&mu, t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nd_iff_polarization_is_psd(m in symmetric_zero_diagonal()) {
        let nm = SymmetricKernelMatrix::new(m).unwrap();
        let nd = is_negative_definite(&nm, 1e-9).unwrap().verdict;
        for b in 0..nm.len() {
            let psd = is_positive_definite(&nd_to_psd(&nm, b).unwrap(), 1e-9).unwrap();
            prop_assert_eq!(psd.verdict, nd);
        }
    }

    #[test]
    fn psd_verdict_is_permutation_invariant(
        k in zoo_kernel(),
        xs in points(10),
        seed in any::<u64>(),
    ) {
        let g = build_gram(&k, &xs).unwrap();
        let mut perm: Vec<usize> = (0..xs.len()).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = is_positive_definite(&g, DEFAULT_TOL).unwrap();
        let b = is_positive_definite(&g.permuted(&perm), DEFAULT_TOL).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert!(a.verdict);
        prop_assert!((a.witness_eigenvalue - b.witness_eigenvalue).abs() <= 1e-12 * xs.len() as f64 * g.entries().amax());
    }

    #[test]
    fn zoo_metrics_embed(k in zoo_kernel(), xs in points(12)) {
        let d2 = metric_from_kernel(&k);
        let n = xs.len();
        let m = DMatrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { d2.eval(xs[i] - xs[j]) });
        let max = m.amax();
        let nm = SymmetricKernelMatrix::new(m).unwrap();
        prop_assert!(is_negative_definite(&nm, DEFAULT_TOL).unwrap().verdict);
        let emb = euclidean_embedding(&nm, DEFAULT_TOL).unwrap();
        prop_assert!(emb.residual <= 1e-8 * max);
    }

    #[test]
    fn screw_matches_bochner(mu in measure(), t in -10.0f64..10.0) {
        let gamma = gamma_from_spectral(&mu).gamma;
        let k0 = bochner_synthesis(&mu, 0.0);
        let expected = 2.0 * k0 - 2.0 * bochner_synthesis(&mu, t);
        let scale = k0.max(1.0);
        prop_assert!((screw_synthesis(&gamma, t) - expected).abs() <= 1e-10 * scale);
    }

    #[test]
    fn gamma_round_trip(mu in measure()) {
        let split = gamma_from_spectral(&mu);
        let back = spectral_from_gamma(&split.gamma, mu.total_mass()).unwrap();
        prop_assert!((back.atom_at_zero() - mu.atom_at_zero()).abs() <= 1e-12 * mu.total_mass().max(1.0));
        let nonzero = |m: &SpectralMeasure| -> Vec<Atom> {
            m.atoms().iter().copied().filter(|a| a.loc > 0.0).collect()
        };
        let (a, b) = (nonzero(&mu), nonzero(&back));
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x.loc - y.loc).abs() <= 1e-12 * x.loc);
            prop_assert!((x.mass - y.mass).abs() <= 1e-12 * x.mass.max(1e-300));
        }
        let (d, e) = (mu.density(), back.density());
        for (x, y) in d.edges.iter().zip(&e.edges) {
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
        for (x, y) in d.values.iter().zip(&e.values) {
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
    }

    #[test]
    fn int_bound_identity(mu in measure()) {
        let split = gamma_from_spectral(&mu);
        let k0 = mu.total_mass();
        let i = int_bound_integral(&split.gamma);
        prop_assert!((i - 4.0 * (k0 - split.atom_zero)).abs() <= 1e-10 * k0.max(1.0));
    }

    #[test]
    fn synthesized_kernels_are_positive_definite(mu in measure(), xs in points(10)) {
        let g = build_gram(&synthesized(&mu), &xs).unwrap();
        prop_assert!(is_positive_definite(&g, DEFAULT_TOL).unwrap().verdict);
    }

    #[test]
    fn polarization_matches_bridge_identity(
        k in zoo_kernel(),
        base in -3.0f64..3.0,
        x in -5.0f64..5.0,
        y in -5.0f64..5.0,
    ) {
        // K_b(x, y) = k(x - y) - k(x - b) - k(y - b) + k(0)
        let pol = kernel_from_metric_at(&metric_from_kernel(&k), base);
        let expected = k.eval(x - y) - k.eval(x - base) - k.eval(y - base) + k.k0();
        prop_assert!((pol.eval(x, y) - expected).abs() <= 1e-12);
    }

    #[test]
    fn features_scale_linearly(mu in measure(), c in 0.1f64..10.0, seed in any::<u64>()) {
        let a = sample_frequencies(&mu, 64, seed).unwrap();
        let b = sample_frequencies(&mu.scaled(c).unwrap(), 64, seed).unwrap();
        let (x, y) = (0.7, -1.9);
        let (ka, kb) = (approximate_kernel(&a, x, y), approximate_kernel(&b, x, y));
        prop_assert!((kb - c * ka).abs() <= 1e-12 * (c * mu.total_mass()).max(1.0));
    }

    #[test]
    fn features_are_deterministic(mu in measure(), seed in any::<u64>()) {
        let a = sample_frequencies(&mu, 32, seed).unwrap();
        let b = sample_frequencies(&mu, 32, seed).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn separable_grams_are_positive_definite(
        names in prop::collection::vec(prop::sample::select(ZOO_NAMES.to_vec()), 1..=3),
        raw in prop::collection::vec(-4.0f64..4.0, 24),
    ) {
        let d = names.len();
        let kernel = SeparableKernel::new(
            names.iter().map(|n| zoo_default(n).unwrap()).collect(),
        ).unwrap();
        let pts: Vec<&[f64]> = raw.chunks(d).take(8).collect();
        let n = pts.len();
        let entries = DMatrix::from_fn(n, n, |i, j| separable_eval(&kernel, pts[i], pts[j]).unwrap());
        let g = GramMatrix::new(Vec::new(), entries).unwrap();
        prop_assert!(is_positive_definite(&g, DEFAULT_TOL).unwrap().verdict);
    }
}

#[test]
fn zoo_metrics_are_translation_invariant() {
    let probes = default_probes();
    for name in ZOO_NAMES {
        let d2 = metric_from_kernel(&zoo_default(name).unwrap());
        let report = check_translation_invariance(&d2.as_bivariate(), &probes, 1e-12).unwrap();
        assert!(report.invariant, "{name}: {}", report.worst_violation);
    }
}

#[test]
fn features_are_unbiased() {
    // cos(ωt) with ω ∈ {±1} and a half-weight atom at zero
    let mu = SpectralMeasure::atomic(vec![Atom::new(0.0, 0.4), Atom::new(1.0, 0.3)]).unwrap();
    let (x, y) = (0.9, -0.4);
    let exact = bochner_synthesis(&mu, x - y);
    let seeds = 200;
    let m = 16;
    let values: Vec<f64> = (0..seeds)
        .map(|s| approximate_kernel(&sample_frequencies(&mu, m, s).unwrap(), x, y))
        .collect();
    let mean = values.iter().sum::<f64>() / seeds as f64;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (seeds - 1) as f64;
    let se = (var / seeds as f64).sqrt();
    assert!(
        (mean - exact).abs() <= 4.0 * se,
        "mean {mean}, exact {exact}, se {se}"
    );
}

#[test]
fn product_features_approximate_the_product_kernel() {
    let c = 1.0 / (2.0 * PI).sqrt();
    let g = SpectralMeasure::from_density(
        BinnedDensity::from_fn(0.0, 8.0, 512, |tau| c * (-0.5 * tau * tau).exp()).unwrap(),
    )
    .unwrap();
    let mu = ProductSpectralMeasure::new(vec![g.clone(), g]).unwrap();
    let s = sample_product_frequencies(&mu, 8192, 3).unwrap();
    assert_eq!(s, sample_product_frequencies(&mu, 8192, 3).unwrap());
    for (x, y) in [([0.0, 0.0], [0.5, -0.5]), ([1.0, 2.0], [0.0, 1.5])] {
        let t2: f64 = x.iter().zip(&y).map(|(a, b)| (a - b) * (a - b)).sum();
        let approx = approximate_product_kernel(&s, &x, &y).unwrap();
        assert!((approx - (-0.5 * t2).exp()).abs() < 0.05, "{approx}");
    }
    assert!(approximate_product_kernel(&s, &[0.0], &[0.0, 1.0]).is_err());
}
