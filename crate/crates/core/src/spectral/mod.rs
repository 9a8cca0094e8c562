//! Spectral measures, screw functions and the conversions between them.
//!
//! For a translation-invariant positive definite kernel `k` with one-sided
//! spectral measure `μ⁺` (see [`SpectralMeasure`]) the squared metric
//! `d²(t) = 2k(0) - 2k(t)` admits the screw representation
//!
//! ```text
//! d²(t) = ∫_(0,∞) sin²(ts)/s² dγ(s),    dγ(s) = 8s²·dμ⁺(2s)
//! ```
//!
//! The point mass of `μ` at frequency zero does not enter `γ`; it is the
//! constant that has to be returned separately when going from `γ` back to
//! `μ`, and it is fixed by `k(0)`:
//!
//! ```text
//! atom₀ = k(0) - ¼∫_(0,∞) s⁻² dγ(s)
//! ```
//!
//! A bounded kernel exists only when `∫ s⁻² dγ(s) <= 4k(0)`.

mod inversion;
mod measure;
pub mod quad;

pub use inversion::{
    atom_at_zero, atom_at_zero_with_step, bochner_inversion, InversionConfig, InversionOutcome,
    InversionReport, DEFAULT_ATOM_STEP,
};
pub use measure::{
    Atom, BinnedDensity, GammaDensity, GammaDensityForm, GammaMeasure, SpectralMeasure,
    TwoSidedMeasure,
};

use crate::error::{Error, Result};
use quad::{cos_integral, sin2_integral, sin2_over_s2_integral};

/// Relative slack on `∫ s⁻² dγ <= 4k(0)` absorbing rounding.
const BOUND_SLACK: f64 = 1e-12;

/// `k(t)` for the kernel represented by `mu`. Density bins are integrated
/// exactly: `∫_a^b cos(tτ) dτ = (sin tb - sin ta)/t`.
pub fn bochner_synthesis(mu: &SpectralMeasure, t: f64) -> f64 {
    let mut k = 0.0;
    for a in mu.atoms() {
        k += if a.loc == 0.0 {
            a.mass
        } else {
            2.0 * a.mass * (t * a.loc).cos()
        };
    }
    for (a, b, v) in mu.density().bins() {
        k += 2.0 * v * cos_integral(t, a, b);
    }
    k
}

/// `d²(t) = ∫ sin²(ts)/s² dγ(s)`.
pub fn screw_synthesis(gamma: &GammaMeasure, t: f64) -> f64 {
    let mut d2 = 0.0;
    for a in gamma.atoms() {
        let v = (t * a.loc).sin() / a.loc;
        d2 += a.mass * v * v;
    }
    let density = gamma.density();
    for (a, b, w) in density.bins() {
        d2 += w * match density.form {
            GammaDensityForm::Quadratic => sin2_integral(t, a, b),
            GammaDensityForm::Flat => sin2_over_s2_integral(t, a, b),
        };
    }
    d2
}

/// `∫_(0,∞) s⁻² dγ(s)`; infinite when a flat density bin starts at zero.
pub fn int_bound_integral(gamma: &GammaMeasure) -> f64 {
    let mut total = 0.0;
    for a in gamma.atoms() {
        total += a.mass / (a.loc * a.loc);
    }
    let density = gamma.density();
    for (a, b, w) in density.bins() {
        if w == 0.0 {
            continue;
        }
        total += match density.form {
            GammaDensityForm::Quadratic => w * (b - a),
            GammaDensityForm::Flat if a == 0.0 => f64::INFINITY,
            GammaDensityForm::Flat => w * (b - a) / (a * b),
        };
    }
    total
}

/// Result of [`gamma_from_spectral`].
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSplit {
    pub gamma: GammaMeasure,
    /// Mass of `μ` at frequency zero, which the metric cannot see.
    pub atom_zero: f64,
}

/// `dγ(s) = 8s²·dμ⁺(2s)` with the atom at zero split off.
///
/// Atoms at `τ > 0` go to `s = τ/2` with mass `8s²m = 2τ²m`; a density bin
/// `[a, b)` with value `v` becomes a quadratic-form bin `[a/2, b/2)` with
/// value `16v`. Then `screw_synthesis(γ, t) = 2k(0) - 2k(t)` exactly.
pub fn gamma_from_spectral(mu: &SpectralMeasure) -> GammaSplit {
    let atoms = mu
        .atoms()
        .iter()
        .filter(|a| a.loc > 0.0)
        .map(|a| Atom::new(0.5 * a.loc, 2.0 * a.loc * a.loc * a.mass))
        .collect();
    let d = mu.density();
    let density = GammaDensity {
        edges: d.edges.iter().map(|e| 0.5 * e).collect(),
        values: d.values.iter().map(|v| 16.0 * v).collect(),
        form: GammaDensityForm::Quadratic,
    };
    let gamma = GammaMeasure::new(atoms, density).expect("image of a valid spectral measure");
    GammaSplit {
        gamma,
        atom_zero: mu.atom_at_zero(),
    }
}

/// Inverse of [`gamma_from_spectral`] given `k(0)`.
///
/// Atoms at `s` map back to `τ = 2s` with mass `m/(8s²)`, quadratic-form
/// bins map back exactly. Flat bins `[a, b)` (`a > 0`) have no exact
/// piecewise-constant image; they are mapped to the constant density
/// `w/(16ab)` on `[2a, 2b)`, which preserves the bin's mass. The atom at
/// zero is `k(0) - ¼∫ s⁻² dγ`.
///
/// Fails with [`Error::UnboundedMetric`] when `∫ s⁻² dγ > 4k(0)`: such a
/// metric is not induced by any bounded translation-invariant kernel.
pub fn spectral_from_gamma(gamma: &GammaMeasure, k0: f64) -> Result<SpectralMeasure> {
    if !k0.is_finite() {
        return Err(Error::InvalidInput(format!("k(0) = {k0} must be finite")));
    }
    let integral = int_bound_integral(gamma);
    let bound = 4.0 * k0;
    if !(integral <= bound + BOUND_SLACK * bound.abs()) {
        return Err(Error::UnboundedMetric { integral, bound });
    }
    let mut atoms: Vec<Atom> = gamma
        .atoms()
        .iter()
        .map(|a| Atom::new(2.0 * a.loc, a.mass / (8.0 * a.loc * a.loc)))
        .collect();
    let atom_zero = (k0 - 0.25 * integral).max(0.0);
    if atom_zero > 0.0 {
        atoms.push(Atom::new(0.0, atom_zero));
    }
    let g = gamma.density();
    let values = match g.form {
        GammaDensityForm::Quadratic => g.values.iter().map(|w| w / 16.0).collect(),
        GammaDensityForm::Flat => g
            .bins()
            .map(|(a, b, w)| if w == 0.0 { 0.0 } else { w / (16.0 * a * b) })
            .collect(),
    };
    let density = BinnedDensity::new(g.edges.iter().map(|e| 2.0 * e).collect(), values)?;
    SpectralMeasure::new(atoms, density)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn gaussian_density(bins: usize) -> SpectralMeasure {
        let c = 1.0 / (2.0 * PI).sqrt();
        SpectralMeasure::from_density(
            BinnedDensity::from_fn(0.0, 8.0, bins, |tau| c * (-0.5 * tau * tau).exp()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn bochner_synthesis_examples() {
        let one = SpectralMeasure::dirac_zero();
        assert_eq!(bochner_synthesis(&one, 3.7), 1.0);
        let cos = SpectralMeasure::atomic(vec![Atom::new(1.0, 0.5)]).unwrap();
        for &t in &[0.0, 0.3, -2.0, 7.5] {
            assert!((bochner_synthesis(&cos, t) - t.cos()).abs() < 1e-15);
        }
        let g = gaussian_density(2048);
        assert!((bochner_synthesis(&g, 1.0) - (-0.5f64).exp()).abs() < 1e-6);
        assert!((bochner_synthesis(&g, 0.0) - g.total_mass()).abs() < 1e-15);
    }

    #[test]
    fn screw_synthesis_examples() {
        let gamma = GammaMeasure::atomic(vec![Atom::new(0.5, 1.0)]).unwrap();
        for &t in &[0.0, 0.4, 1.0, -3.0] {
            assert!((screw_synthesis(&gamma, t) - (2.0 - 2.0 * t.cos())).abs() < 1e-14);
        }
        assert_eq!(screw_synthesis(&GammaMeasure::default(), 2.0), 0.0);

        // flat 2/π density reproduces |t| as the window grows
        let abs = GammaMeasure::new(
            vec![],
            GammaDensity::flat(vec![0.0, 1e4], vec![2.0 / PI]).unwrap(),
        )
        .unwrap();
        let d = screw_synthesis(&abs, 1.0);
        assert!((0.99..=1.0).contains(&d), "{d}");
        assert!((screw_synthesis(&abs, 2.0) - 2.0).abs() < 1e-3);
    }

    #[test]
    fn gamma_from_spectral_examples() {
        let cos = SpectralMeasure::atomic(vec![Atom::new(1.0, 0.5)]).unwrap();
        let split = gamma_from_spectral(&cos);
        assert_eq!(split.gamma.atoms(), &[Atom::new(0.5, 1.0)]);
        assert_eq!(split.atom_zero, 0.0);

        let split = gamma_from_spectral(&SpectralMeasure::dirac_zero());
        assert!(split.gamma.is_empty());
        assert_eq!(split.atom_zero, 1.0);

        let g = gaussian_density(2048);
        let split = gamma_from_spectral(&g);
        let k0 = bochner_synthesis(&g, 0.0);
        for &t in &[0.5, 1.0, 2.0] {
            let expected = 2.0 * k0 - 2.0 * bochner_synthesis(&g, t);
            assert!((screw_synthesis(&split.gamma, t) - expected).abs() < 1e-6);
        }
    }

    #[test]
    fn spectral_from_gamma_examples() {
        let gamma = GammaMeasure::atomic(vec![Atom::new(0.5, 1.0)]).unwrap();
        let mu = spectral_from_gamma(&gamma, 1.0).unwrap();
        assert_eq!(mu.atoms(), &[Atom::new(1.0, 0.5)]);
        assert_eq!(mu.atom_at_zero(), 0.0);

        let mu = spectral_from_gamma(&gamma, 1.3).unwrap();
        assert!((mu.atom_at_zero() - 0.3).abs() < 1e-15);
        for &t in &[0.0, 1.0, 2.5] {
            assert!((bochner_synthesis(&mu, t) - (0.3 + t.cos())).abs() < 1e-15);
        }

        let abs = GammaMeasure::new(
            vec![],
            GammaDensity::flat(vec![0.0, 1e4], vec![2.0 / PI]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            spectral_from_gamma(&abs, 1.0),
            Err(Error::UnboundedMetric { .. })
        ));
        // bounded but still too heavy for k(0) = 1
        let heavy = GammaMeasure::atomic(vec![Atom::new(0.5, 1.1)]).unwrap();
        match spectral_from_gamma(&heavy, 1.0) {
            Err(Error::UnboundedMetric { integral, bound }) => {
                assert!((integral - 4.4).abs() < 1e-12);
                assert_eq!(bound, 4.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn flat_bins_convert_mass_preserving() {
        let gamma = GammaMeasure::new(
            vec![],
            GammaDensity::flat(vec![0.5, 1.0, 2.0], vec![1.0, 3.0]).unwrap(),
        )
        .unwrap();
        let integral = int_bound_integral(&gamma);
        assert!((integral - (1.0 * 1.0 + 3.0 * 0.5)).abs() < 1e-15);
        let mu = spectral_from_gamma(&gamma, 1.0).unwrap();
        assert!((mu.nonzero_mass() - integral / 4.0).abs() < 1e-15);
        assert!((mu.total_mass() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn int_bound_examples() {
        let gamma = GammaMeasure::atomic(vec![Atom::new(0.5, 1.0)]).unwrap();
        assert_eq!(int_bound_integral(&gamma), 4.0);
        assert_eq!(int_bound_integral(&GammaMeasure::default()), 0.0);
        let g = gaussian_density(2048);
        let integral = int_bound_integral(&gamma_from_spectral(&g).gamma);
        assert!((integral - 4.0).abs() < 1e-6);
        assert!((integral - 4.0 * g.total_mass()).abs() < 1e-12);
    }
}
