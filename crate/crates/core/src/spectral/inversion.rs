//! Numerical recovery of a spectral measure from a kernel profile.
//!
//! The point mass at frequency zero is the long-run mean of the profile,
//! `lim (1/2T)∫_{-T}^{T} k(t) dt`. Once it is removed the remainder is
//! assumed integrable and its density is the cosine transform
//! `v(τ) = (1/π)∫_0^∞ (k(t) - atom₀)·cos(tτ) dt`, truncated at `t_max`,
//! integrated with the trapezoid rule and averaged exactly over each
//! frequency bin.
//!
//! When `t²·(k(t) - atom₀)` is flat over the last tenth of `[0, t_max]` the
//! remainder is extended past `t_max` as `c/t²`, whose cosine transform is
//! closed form. Densities with a cusp at zero, such as `e^{-|τ|}`, have such
//! tails and lose `O(1/t_max)` to plain truncation otherwise.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bochner_synthesis;
use super::measure::{Atom, BinnedDensity, SpectralMeasure};
use super::quad::{cos_integral, gauss_legendre, sine_integral};
use crate::error::{Error, Result};
use crate::profiles::{default_grid, KernelProfile};

/// Default trapezoid step for [`atom_at_zero`].
pub const DEFAULT_ATOM_STEP: f64 = 1e-2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InversionConfig {
    /// Truncation of the cosine transform.
    pub t_max: f64,
    /// Trapezoid nodes on `[0, t_max]`.
    pub n_samples: usize,
    /// Frequency bins on `[0, freq_max]`.
    pub bins: usize,
    pub freq_max: f64,
    /// Long-run mean window `T`.
    pub window: f64,
    /// Trapezoid step of the long-run mean.
    pub atom_step: f64,
    /// Negative spectral components down to `-clamp_threshold·k(0)` are
    /// treated as quadrature noise; anything below is a rejection.
    pub clamp_threshold: f64,
    /// Largest `|k(t) - atom₀| / k(0)` tolerated on the last tenth of
    /// `[0, t_max]`.
    pub tail_tolerance: f64,
    /// Extend inverse-square tails analytically past `t_max`.
    pub tail_extrapolation: bool,
}

impl Default for InversionConfig {
    fn default() -> Self {
        Self {
            t_max: 40.0,
            n_samples: 16_001,
            bins: 2048,
            freq_max: 8.0,
            window: 200.0,
            atom_step: DEFAULT_ATOM_STEP,
            clamp_threshold: 1e-4,
            tail_tolerance: 1e-2,
            tail_extrapolation: true,
        }
    }
}

impl InversionConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("t_max", self.t_max),
            ("freq_max", self.freq_max),
            ("window", self.window),
            ("atom_step", self.atom_step),
            ("clamp_threshold", self.clamp_threshold),
            ("tail_tolerance", self.tail_tolerance),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if self.n_samples < 2 {
            return Err(Error::Config("n_samples must be at least 2".into()));
        }
        if self.bins == 0 {
            return Err(Error::Config("bins must be positive".into()));
        }
        Ok(())
    }
}

/// Diagnostics of an inversion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InversionReport {
    /// Long-run mean at the configured window.
    pub atom_raw: f64,
    /// Extrapolated estimate `2·M(2T) - M(T)`, before snapping to zero.
    pub atom_extrapolated: f64,
    /// The atom at zero put into the measure.
    pub atom_zero: f64,
    /// Most negative density value before clamping, and its frequency.
    pub min_density: f64,
    pub min_density_at: f64,
    /// Two-sided mass removed by clamping negative bins.
    pub clamped_mass: f64,
    /// Coefficient `c` of the `c/t²` tail extension; zero when not applied.
    pub tail_coefficient: f64,
    /// `sup |bochner_synthesis(μ, t) - k(t)|` on the default probe grid.
    pub residual: f64,
    /// Window and truncation actually used (reduced for sampled profiles).
    pub window: f64,
    pub t_max: f64,
}

#[derive(Clone, Debug)]
pub struct InversionOutcome {
    pub measure: SpectralMeasure,
    pub report: InversionReport,
}

/// `(1/2T)∫_{-T}^{T} k(t) dt` by the trapezoid rule with step close to
/// [`DEFAULT_ATOM_STEP`].
pub fn atom_at_zero(k: &KernelProfile, window: f64) -> Result<f64> {
    atom_at_zero_with_step(k, window, DEFAULT_ATOM_STEP)
}

pub fn atom_at_zero_with_step(k: &KernelProfile, window: f64, step: f64) -> Result<f64> {
    if !(window > 0.0) || !(step > 0.0) {
        return Err(Error::Config(format!(
            "window ({window}) and step ({step}) must be positive"
        )));
    }
    let n = (2.0 * window / step).ceil().max(1.0) as usize;
    let h = 2.0 * window / n as f64;
    let mut sum = 0.5 * (k.try_eval(-window)? + k.try_eval(window)?);
    for i in 1..n {
        sum += k.try_eval(-window + h * i as f64)?;
    }
    Ok(sum * h / (2.0 * window))
}

/// Recovers the spectral measure of an even profile.
///
/// Fails with [`Error::NotPositiveDefinite`] when the atom at zero or a
/// density bin is negative beyond `clamp_threshold·k(0)`, and with
/// [`Error::InvalidInput`] when `k - atom₀` has not decayed by `t_max`.
pub fn bochner_inversion(k: &KernelProfile, config: &InversionConfig) -> Result<InversionOutcome> {
    config.validate()?;
    let k0 = k.try_eval(0.0)?;
    let mut window = config.window;
    let mut t_max = config.t_max;
    if let Some(extent) = k.sampled_extent() {
        window = window.min(0.5 * extent);
        t_max = t_max.min(extent);
    }
    let threshold = config.clamp_threshold * k0.abs();

    let atom_raw = atom_at_zero_with_step(k, window, config.atom_step)?;
    let atom_wide = atom_at_zero_with_step(k, 2.0 * window, config.atom_step)?;
    let atom_extrapolated = 2.0 * atom_wide - atom_raw;
    let atom_zero = if atom_extrapolated.abs() <= threshold {
        0.0
    } else {
        atom_extrapolated
    };
    if atom_zero < 0.0 {
        return Err(Error::NotPositiveDefinite {
            atom_estimate: atom_extrapolated,
            min_density: f64::NAN,
            min_density_at: f64::NAN,
            threshold,
        });
    }

    let n = config.n_samples;
    let h = t_max / (n - 1) as f64;
    let ts: Vec<f64> = (0..n).map(|i| h * i as f64).collect();
    let mut weighted = Vec::with_capacity(n);
    for (i, &t) in ts.iter().enumerate() {
        let w = if i == 0 || i == n - 1 { 0.5 * h } else { h };
        weighted.push(w * (k.try_eval(t)? - atom_zero));
    }

    let tail_start = (0.9 * (n - 1) as f64) as usize;
    let tail = ts[tail_start..]
        .iter()
        .map(|&t| (k.eval(t) - atom_zero).abs())
        .fold(0.0, f64::max);
    if tail > config.tail_tolerance * k0.abs() {
        return Err(Error::InvalidInput(format!(
            "profile has not decayed by t_max = {t_max}: |k(t) - atom₀| reaches {tail:e} \
             on the last tenth of the window"
        )));
    }

    let fh = config.freq_max / config.bins as f64;
    let edges: Vec<f64> = (0..=config.bins).map(|j| fh * j as f64).collect();
    let mut values: Vec<f64> = edges
        .par_windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let inv = 1.0 / (b - a);
            let s: f64 = ts
                .iter()
                .zip(&weighted)
                .map(|(&t, &wk)| wk * cos_integral(t, a, b) * inv)
                .sum();
            s / std::f64::consts::PI
        })
        .collect();

    let tail_coefficient = if config.tail_extrapolation {
        inverse_square_coefficient(&ts[tail_start..], &weighted[tail_start..], h)
    } else {
        0.0
    };
    if tail_coefficient != 0.0 {
        // the endpoint carries half weight; the extension starts at t_max
        let c = tail_coefficient / std::f64::consts::PI;
        values.par_iter_mut().enumerate().for_each(|(j, v)| {
            let (a, b) = (edges[j], edges[j + 1]);
            *v += c * gauss_legendre(a, b, 1, |tau| inverse_square_tail(t_max, tau)) / (b - a);
        });
    }

    let (min_idx, min_density) = values
        .iter()
        .copied()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let min_density_at = 0.5 * (edges[min_idx] + edges[min_idx + 1]);
    if min_density < -threshold {
        return Err(Error::NotPositiveDefinite {
            atom_estimate: atom_extrapolated,
            min_density,
            min_density_at,
            threshold,
        });
    }
    let mut clamped_mass = 0.0;
    for v in values.iter_mut() {
        if *v < 0.0 {
            clamped_mass += 2.0 * -*v * fh;
            *v = 0.0;
        }
    }

    let atoms = if atom_zero > 0.0 {
        vec![Atom::new(0.0, atom_zero)]
    } else {
        Vec::new()
    };
    let measure = SpectralMeasure::new(atoms, BinnedDensity::new(edges, values)?)?;
    let residual = default_grid()
        .iter()
        .filter_map(|&t| {
            let v = k.eval(t);
            v.is_finite()
                .then(|| (bochner_synthesis(&measure, t) - v).abs())
        })
        .fold(0.0, f64::max);

    Ok(InversionOutcome {
        measure,
        report: InversionReport {
            atom_raw,
            atom_extrapolated,
            atom_zero,
            min_density,
            min_density_at,
            clamped_mass,
            tail_coefficient,
            residual,
            window,
            t_max,
        },
    })
}

/// `c` when `f(t)·t²` is constant to within 5% and of one sign on the given
/// nodes, zero otherwise. `weighted` holds trapezoid-weighted samples.
fn inverse_square_coefficient(ts: &[f64], weighted: &[f64], h: f64) -> f64 {
    let last = ts.len() - 1;
    let q: Vec<f64> = ts
        .iter()
        .zip(weighted)
        .enumerate()
        .map(|(i, (&t, &w))| {
            let weight = if i == last { 0.5 * h } else { h };
            w / weight * t * t
        })
        .collect();
    let (lo, hi) = q
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let same_sign = lo > 0.0 || hi < 0.0;
    if same_sign && (hi - lo) <= 0.05 * lo.abs().min(hi.abs()) {
        q[last]
    } else {
        0.0
    }
}

/// `∫_T^∞ cos(tτ)/t² dt = cos(Tτ)/T - τ(π/2 - Si(Tτ))` for `τ >= 0`.
fn inverse_square_tail(t_max: f64, tau: f64) -> f64 {
    (t_max * tau).cos() / t_max - tau * (std::f64::consts::FRAC_PI_2 - sine_integral(t_max * tau))
}
