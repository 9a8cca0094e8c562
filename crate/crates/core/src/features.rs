//! Random Fourier features.
//!
//! Frequencies `ω` are drawn from the normalized two-sided spectral measure
//! and phases `b` uniformly from `[0, 2π)`. The feature map
//!
//! ```text
//! φ(x)_j = √(2M/m) · cos(ω_j x + b_j)
//! ```
//!
//! with `M = k(0)` the total mass satisfies `E⟨φ(x), φ(y)⟩ = k(x - y)`.
//!
//! # Draw procedure
//!
//! The generator is `ChaCha8Rng::seed_from_u64(seed)` (crate
//! `rand_chacha`). Measure components are enumerated as atoms in
//! increasing location followed by density bins in increasing frequency,
//! with weights `mass` for the atom at zero, `2·mass` for other atoms and
//! `2·value·width` for bins. Each frequency consumes exactly four uniform
//! `f64` draws `u₁..u₄` in `[0, 1)`:
//!
//! 1. `u₁` picks the first component whose cumulative weight exceeds
//!    `u₁·M`;
//! 2. `u₂` places the frequency at `lo + u₂·(hi - lo)` inside a bin
//!    (unused for atoms);
//! 3. `u₃ < ½` negates the frequency;
//! 4. `b = 2π·u₄`.
//!
//! For product measures the first three draws are repeated per factor
//! before the phase draw.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::product::ProductSpectralMeasure;
use crate::spectral::SpectralMeasure;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrequencySample {
    pub seed: u64,
    pub total_mass: f64,
    #[serde(rename = "freqs")]
    pub frequencies: Vec<f64>,
    pub phases: Vec<f64>,
}

impl FrequencySample {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }

    pub fn feature_map(&self) -> FeatureMap<'_> {
        FeatureMap { sample: self }
    }
}

/// `x ↦ φ(x)` for a fixed [`FrequencySample`].
#[derive(Clone, Copy, Debug)]
pub struct FeatureMap<'a> {
    sample: &'a FrequencySample,
}

impl FeatureMap<'_> {
    pub fn dim(&self) -> usize {
        self.sample.len()
    }

    pub fn map(&self, x: f64) -> Vec<f64> {
        let s = self.sample;
        let amp = (2.0 * s.total_mass / s.len() as f64).sqrt();
        s.frequencies
            .iter()
            .zip(&s.phases)
            .map(|(w, b)| amp * (w * x + b).cos())
            .collect()
    }
}

/// Cumulative component table of a one-dimensional measure.
struct Sampler {
    // (lo, hi) frequency range; lo == hi for atoms
    ranges: Vec<(f64, f64)>,
    cumulative: Vec<f64>,
    total: f64,
}

impl Sampler {
    fn new(mu: &SpectralMeasure) -> Result<Self> {
        let mut ranges = Vec::new();
        let mut cumulative = Vec::new();
        let mut acc = 0.0;
        for a in mu.atoms() {
            acc += if a.loc == 0.0 { a.mass } else { 2.0 * a.mass };
            ranges.push((a.loc, a.loc));
            cumulative.push(acc);
        }
        for (lo, hi, v) in mu.density().bins() {
            acc += 2.0 * v * (hi - lo);
            ranges.push((lo, hi));
            cumulative.push(acc);
        }
        if !(acc > 0.0) {
            return Err(Error::Config(
                "cannot sample from a measure with zero mass".into(),
            ));
        }
        Ok(Self {
            ranges,
            cumulative,
            total: acc,
        })
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        let u_comp: f64 = rng.random();
        let u_pos: f64 = rng.random();
        let u_sign: f64 = rng.random();
        let target = u_comp * self.total;
        let last = self.cumulative.len() - 1;
        let idx = self.cumulative.partition_point(|&c| c <= target).min(last);
        let (lo, hi) = self.ranges[idx];
        let w = if lo == hi { lo } else { lo + u_pos * (hi - lo) };
        if u_sign < 0.5 {
            -w
        } else {
            w
        }
    }
}

/// Draws `m` frequencies and phases; deterministic in `(mu, m, seed)`.
pub fn sample_frequencies(mu: &SpectralMeasure, m: usize, seed: u64) -> Result<FrequencySample> {
    if m == 0 {
        return Err(Error::Config("need at least one feature".into()));
    }
    let sampler = Sampler::new(mu)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut frequencies = Vec::with_capacity(m);
    let mut phases = Vec::with_capacity(m);
    for _ in 0..m {
        frequencies.push(sampler.draw(&mut rng));
        let u: f64 = rng.random();
        phases.push(TAU * u);
    }
    Ok(FrequencySample {
        seed,
        total_mass: sampler.total,
        frequencies,
        phases,
    })
}

/// `⟨φ(x), φ(y)⟩`.
pub fn approximate_kernel(sample: &FrequencySample, x: f64, y: f64) -> f64 {
    let s: f64 = sample
        .frequencies
        .iter()
        .zip(&sample.phases)
        .map(|(w, b)| (w * x + b).cos() * (w * y + b).cos())
        .sum();
    2.0 * sample.total_mass / sample.len() as f64 * s
}

/// Frequencies in `R^d` drawn from a factored product measure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductFrequencySample {
    pub seed: u64,
    pub total_mass: f64,
    /// One `d`-vector per feature.
    #[serde(rename = "freqs")]
    pub frequencies: Vec<Vec<f64>>,
    pub phases: Vec<f64>,
}

pub fn sample_product_frequencies(
    measure: &ProductSpectralMeasure,
    m: usize,
    seed: u64,
) -> Result<ProductFrequencySample> {
    if m == 0 {
        return Err(Error::Config("need at least one feature".into()));
    }
    let samplers = measure
        .factors()
        .iter()
        .map(Sampler::new)
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut frequencies = Vec::with_capacity(m);
    let mut phases = Vec::with_capacity(m);
    for _ in 0..m {
        frequencies.push(samplers.iter().map(|s| s.draw(&mut rng)).collect());
        let u: f64 = rng.random();
        phases.push(TAU * u);
    }
    Ok(ProductFrequencySample {
        seed,
        total_mass: samplers.iter().map(|s| s.total).product(),
        frequencies,
        phases,
    })
}

/// `⟨φ(x), φ(y)⟩` with `φ(x)_j = √(2M/m)·cos(⟨ω_j, x⟩ + b_j)`.
pub fn approximate_product_kernel(
    sample: &ProductFrequencySample,
    x: &[f64],
    y: &[f64],
) -> Result<f64> {
    let d = sample.frequencies.first().map_or(0, Vec::len);
    for v in [x, y] {
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
    }
    let dot = |w: &[f64], v: &[f64]| w.iter().zip(v).map(|(a, b)| a * b).sum::<f64>();
    let s: f64 = sample
        .frequencies
        .iter()
        .zip(&sample.phases)
        .map(|(w, b)| (dot(w, x) + b).cos() * (dot(w, y) + b).cos())
        .sum();
    Ok(2.0 * sample.total_mass / sample.frequencies.len() as f64 * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{Atom, BinnedDensity};

    #[test]
    fn dirac_zero_gives_zero_frequencies() {
        let s = sample_frequencies(&SpectralMeasure::dirac_zero(), 64, 7).unwrap();
        assert!(s.frequencies.iter().all(|&w| w == 0.0));
        assert_eq!(s.total_mass, 1.0);
        assert!(s.phases.iter().all(|&b| (0.0..TAU).contains(&b)));
    }

    #[test]
    fn atomic_measure_signs_are_balanced() {
        let mu = SpectralMeasure::atomic(vec![Atom::new(1.0, 0.5)]).unwrap();
        let m = 100_000;
        let s = sample_frequencies(&mu, m, 11).unwrap();
        assert!(s.frequencies.iter().all(|&w| w.abs() == 1.0));
        let pos = s.frequencies.iter().filter(|&&w| w > 0.0).count() as f64;
        // binomial(m, ½): 3σ = 1.5·√m
        assert!((pos - m as f64 / 2.0).abs() <= 1.5 * (m as f64).sqrt());
    }

    #[test]
    fn feature_map_inner_product_matches() {
        let mu = SpectralMeasure::atomic(vec![Atom::new(1.0, 0.5), Atom::new(0.0, 0.2)]).unwrap();
        let s = sample_frequencies(&mu, 32, 3).unwrap();
        let fm = s.feature_map();
        assert_eq!(fm.dim(), 32);
        let (a, b) = (fm.map(0.3), fm.map(-1.1));
        let dot: f64 = a.iter().zip(&b).map(|(p, q)| p * q).sum();
        assert!((dot - approximate_kernel(&s, 0.3, -1.1)).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_requests() {
        assert!(matches!(
            sample_frequencies(&SpectralMeasure::default(), 10, 0),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            sample_frequencies(&SpectralMeasure::dirac_zero(), 0, 0),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn bin_draws_stay_inside_bins() {
        let d = BinnedDensity::new(vec![2.0, 3.0], vec![1.0]).unwrap();
        let s = sample_frequencies(&SpectralMeasure::from_density(d).unwrap(), 1000, 5).unwrap();
        assert!(s.frequencies.iter().all(|w| (2.0..3.0).contains(&w.abs())));
        assert_eq!(s.total_mass, 2.0);
    }

    #[test]
    fn json_field_names() {
        let s = sample_frequencies(&SpectralMeasure::dirac_zero(), 2, 1).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["freqs", "phases", "seed", "total_mass"]);
    }
}
