//! Translation-invariant kernel and metric profiles.
//!
//! A translation-invariant kernel `K(x, y) = k(x - y)` is stored by its
//! one-variable profile `k`, a translation-invariant squared metric by
//! `d²(t)`. The two are bridged by `d²(t) = 2k(0) - 2k(t)` in one direction
//! and by the base-point polarization `K(x, y) = ½(d²(x) + d²(y) - d²(x - y))`
//! in the other. The second direction does not in general return a
//! translation-invariant kernel (the squared Euclidean metric polarizes to
//! the inner product `xy`), which [`check_translation_invariance`] exposes.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default probe grid: 201 uniform points on `[-10, 10]`.
pub const DEFAULT_GRID_MIN: f64 = -10.0;
pub const DEFAULT_GRID_MAX: f64 = 10.0;
pub const DEFAULT_GRID_LEN: usize = 201;

/// Names accepted by [`zoo`].
pub const ZOO_NAMES: [&str; 5] = ["gaussian", "laplacian", "cauchy", "cosine", "constant"];

type Eval1 = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type Eval2 = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Serializable name + numeric parameters of a profile.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileDescriptor {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
}

impl ProfileDescriptor {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn param(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }
}

impl fmt::Display for ProfileDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let parts: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// One-variable profile `k(t)` of a translation-invariant kernel.
#[derive(Clone)]
pub struct KernelProfile {
    eval: Eval1,
    descriptor: ProfileDescriptor,
}

impl KernelProfile {
    pub fn new(
        descriptor: ProfileDescriptor,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            descriptor,
        }
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        (self.eval)(t)
    }

    /// Evaluates and rejects non-finite values.
    pub fn try_eval(&self, t: f64) -> Result<f64> {
        let v = self.eval(t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation {
                profile: self.descriptor.to_string(),
                t,
            })
        }
    }

    pub fn k0(&self) -> f64 {
        self.eval(0.0)
    }

    pub fn descriptor(&self) -> &ProfileDescriptor {
        &self.descriptor
    }

    /// `amplitude * k(t) + offset`.
    pub fn affine(&self, amplitude: f64, offset: f64) -> KernelProfile {
        let inner = self.clone();
        let mut descriptor = self.descriptor.clone();
        let a = descriptor.param("amplitude", 1.0) * amplitude;
        let o = descriptor.param("offset", 0.0) * amplitude + offset;
        descriptor.params.insert("amplitude".into(), a);
        descriptor.params.insert("offset".into(), o);
        KernelProfile::new(descriptor, move |t| amplitude * inner.eval(t) + offset)
    }

    /// Lifts the profile to `K(x, y) = k(x - y)`.
    pub fn as_bivariate(&self) -> BivariateKernel {
        let k = self.clone();
        BivariateKernel::new(format!("{}(x-y)", self.descriptor), move |x, y| {
            k.eval(x - y)
        })
    }

    /// Maximum of `|k(t) - k(-t)|` over the grid.
    pub fn evenness_defect(&self, grid: &[f64]) -> f64 {
        grid.iter()
            .map(|&t| (self.eval(t) - self.eval(-t)).abs())
            .fold(0.0, f64::max)
    }

    /// Maximum of `|k(t)| - k(0)` over the grid; non-positive for positive
    /// definite profiles.
    pub fn dominance_defect(&self, grid: &[f64]) -> f64 {
        let k0 = self.k0();
        grid.iter()
            .map(|&t| self.eval(t).abs() - k0)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Piecewise-linear profile through `(t, value)` samples.
    ///
    /// Evaluation outside the sampled range falls back to `-t` when that is
    /// covered (so one-sided samples on `t >= 0` act as an even profile) and
    /// returns NaN otherwise.
    pub fn from_samples(ts: Vec<f64>, values: Vec<f64>) -> Result<KernelProfile> {
        let table = SampleTable::new(ts, values)?;
        let descriptor = ProfileDescriptor::new("sampled")
            .with("n", table.ts.len() as f64)
            .with("t_min", table.ts[0])
            .with("t_max", *table.ts.last().unwrap());
        Ok(KernelProfile::new(descriptor, move |t| table.eval(t)))
    }

    /// Largest `T` such that the profile is defined on `[-T, T]`.
    pub fn sampled_extent(&self) -> Option<f64> {
        if self.descriptor.name != "sampled" {
            return None;
        }
        let lo = self.descriptor.params.get("t_min")?;
        let hi = self.descriptor.params.get("t_max")?;
        Some(lo.abs().max(*hi).max(0.0))
    }
}

impl fmt::Debug for KernelProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KernelProfile")
            .field("descriptor", &self.descriptor)
            .finish()
    }
}

/// One-variable profile `d²(t)` of a translation-invariant squared metric.
#[derive(Clone)]
pub struct MetricProfile {
    eval: Eval1,
    descriptor: ProfileDescriptor,
}

impl MetricProfile {
    pub fn new(
        descriptor: ProfileDescriptor,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            descriptor,
        }
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        (self.eval)(t)
    }

    pub fn descriptor(&self) -> &ProfileDescriptor {
        &self.descriptor
    }

    /// The squared Euclidean metric `d²(t) = t²`.
    pub fn squared_euclidean() -> MetricProfile {
        MetricProfile::new(ProfileDescriptor::new("squared_euclidean"), |t| t * t)
    }

    /// `D²(x, y) = d²(x - y)`.
    pub fn as_bivariate(&self) -> BivariateKernel {
        let d2 = self.clone();
        BivariateKernel::new(format!("{}(x-y)", self.descriptor), move |x, y| {
            d2.eval(x - y)
        })
    }

    /// Worst violation of `d²(0) = 0`, evenness and non-negativity on the grid.
    pub fn validity_defect(&self, grid: &[f64]) -> f64 {
        let mut worst = self.eval(0.0).abs();
        for &t in grid {
            let v = self.eval(t);
            worst = worst.max((v - self.eval(-t)).abs()).max(-v);
        }
        worst
    }
}

impl fmt::Debug for MetricProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MetricProfile")
            .field("descriptor", &self.descriptor)
            .finish()
    }
}

/// Symmetric kernel of two real variables, not necessarily translation
/// invariant.
#[derive(Clone)]
pub struct BivariateKernel {
    eval: Eval2,
    name: String,
}

impl BivariateKernel {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            name: name.into(),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.eval)(x, y)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for BivariateKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BivariateKernel")
            .field("name", &self.name)
            .finish()
    }
}

/// `d²(t) = 2k(0) - 2k(t)`.
pub fn metric_from_kernel(k: &KernelProfile) -> MetricProfile {
    let k = k.clone();
    let k0 = k.k0();
    let descriptor = ProfileDescriptor {
        name: format!("metric_of_{}", k.descriptor.name),
        params: k.descriptor.params.clone(),
    };
    MetricProfile::new(descriptor, move |t| 2.0 * k0 - 2.0 * k.eval(t))
}

/// Polarization at base point 0: `K(x, y) = ½(d²(x) + d²(y) - d²(x - y))`.
pub fn kernel_from_metric(d2: &MetricProfile) -> BivariateKernel {
    kernel_from_metric_at(d2, 0.0)
}

/// Polarization at an arbitrary base point `b`:
/// `K(x, y) = ½(d²(x - b) + d²(y - b) - d²(x - y))`.
pub fn kernel_from_metric_at(d2: &MetricProfile, base: f64) -> BivariateKernel {
    let d2 = d2.clone();
    let name = format!("polarized[{}@{}]", d2.descriptor, base);
    BivariateKernel::new(name, move |x, y| {
        0.5 * (d2.eval(x - base) + d2.eval(y - base) - d2.eval(x - y))
    })
}

/// A translation-invariance probe `(x, y, shift)`.
pub type Probe = (f64, f64, f64);

#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub worst_violation: f64,
    pub worst_probe: Probe,
}

/// Checks `|K(x + s, y + s) - K(x, y)| <= tol` over every probe.
pub fn check_translation_invariance(
    kernel: &BivariateKernel,
    probes: &[Probe],
    tol: f64,
) -> Result<InvarianceReport> {
    if probes.is_empty() {
        return Err(Error::InvalidInput(
            "no translation-invariance probes".into(),
        ));
    }
    let mut worst = 0.0;
    let mut worst_probe = probes[0];
    for &(x, y, s) in probes {
        let v = (kernel.eval(x + s, y + s) - kernel.eval(x, y)).abs();
        // NaN counts as a violation.
        if !(v <= worst) {
            worst = if v.is_nan() { f64::INFINITY } else { v };
            worst_probe = (x, y, s);
        }
    }
    Ok(InvarianceReport {
        invariant: worst <= tol,
        worst_violation: worst,
        worst_probe,
    })
}

/// `n` uniform points on `[lo, hi]`.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let h = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| lo + h * i as f64).collect()
        }
    }
}

/// The default 201-point grid on `[-10, 10]`.
pub fn default_grid() -> Vec<f64> {
    uniform_grid(DEFAULT_GRID_MIN, DEFAULT_GRID_MAX, DEFAULT_GRID_LEN)
}

/// Probes built from the default grid: every 10th grid point for `x` and
/// `y`, every 20th for the shift (21 × 21 × 11 probes).
pub fn default_probes() -> Vec<Probe> {
    let grid = default_grid();
    let xs: Vec<f64> = grid.iter().step_by(10).copied().collect();
    let shifts: Vec<f64> = grid.iter().step_by(20).copied().collect();
    let mut probes = Vec::with_capacity(xs.len() * xs.len() * shifts.len());
    for &x in &xs {
        for &y in &xs {
            for &s in &shifts {
                probes.push((x, y, s));
            }
        }
    }
    probes
}

/// Builds a profile from the kernel zoo.
///
/// | name        | profile                     | parameters (default)       |
/// |-------------|-----------------------------|----------------------------|
/// | `gaussian`  | `exp(-(t/scale)²/2)`        | `scale` (1)                |
/// | `laplacian` | `exp(-|t|/scale)`           | `scale` (1)                |
/// | `cauchy`    | `2/(1 + (t/scale)²)`        | `scale` (1)                |
/// | `cosine`    | `cos(omega·t)`              | `omega` (1)                |
/// | `constant`  | `c`                         | `c` (1), must be `>= 0`    |
///
/// Every profile also accepts `amplitude` (1) and `offset` (0), giving
/// `amplitude·k(t) + offset`. The result is not checked for positive
/// definiteness; a negative offset produces a valid profile that is not
/// positive definite.
pub fn zoo(name: &str, params: &BTreeMap<String, f64>) -> Result<KernelProfile> {
    let descriptor = ProfileDescriptor {
        name: name.to_string(),
        params: params.clone(),
    };
    let allowed: &[&str] = match name {
        "gaussian" | "laplacian" | "cauchy" => &["scale"],
        "cosine" => &["omega"],
        "constant" => &["c"],
        other => {
            return Err(Error::Config(format!(
                "unknown kernel `{other}` (expected one of {})",
                ZOO_NAMES.join(", ")
            )))
        }
    };
    for (key, value) in params {
        if !allowed.contains(&key.as_str()) && key != "amplitude" && key != "offset" {
            return Err(Error::Config(format!(
                "kernel `{name}` has no parameter `{key}`"
            )));
        }
        if !value.is_finite() {
            return Err(Error::Config(format!("parameter `{key}` must be finite")));
        }
    }
    let amplitude = descriptor.param("amplitude", 1.0);
    let offset = descriptor.param("offset", 0.0);

    let base: Box<dyn Fn(f64) -> f64 + Send + Sync> = match name {
        "gaussian" | "laplacian" | "cauchy" => {
            let scale = positive(&descriptor, "scale")?;
            match name {
                "gaussian" => Box::new(move |t: f64| (-0.5 * (t / scale).powi(2)).exp()),
                "laplacian" => Box::new(move |t: f64| (-(t / scale).abs()).exp()),
                _ => Box::new(move |t: f64| 2.0 / (1.0 + (t / scale).powi(2))),
            }
        }
        "cosine" => {
            let omega = positive(&descriptor, "omega")?;
            Box::new(move |t: f64| (omega * t).cos())
        }
        _ => {
            let c = descriptor.param("c", 1.0);
            if c < 0.0 {
                return Err(Error::Config(format!(
                    "constant kernel needs c >= 0, got {c}"
                )));
            }
            Box::new(move |_| c)
        }
    };
    if amplitude == 1.0 && offset == 0.0 {
        Ok(KernelProfile::new(descriptor, base))
    } else {
        Ok(KernelProfile::new(descriptor, move |t| {
            amplitude * base(t) + offset
        }))
    }
}

/// [`zoo`] with default parameters.
pub fn zoo_default(name: &str) -> Result<KernelProfile> {
    zoo(name, &BTreeMap::new())
}

/// Builds a profile from its serialized descriptor.
pub fn from_descriptor(descriptor: &ProfileDescriptor) -> Result<KernelProfile> {
    zoo(&descriptor.name, &descriptor.params)
}

fn positive(descriptor: &ProfileDescriptor, key: &str) -> Result<f64> {
    let v = descriptor.param(key, 1.0);
    if v > 0.0 {
        Ok(v)
    } else {
        Err(Error::Config(format!(
            "parameter `{key}` of `{}` must be positive, got {v}",
            descriptor.name
        )))
    }
}

struct SampleTable {
    ts: Vec<f64>,
    values: Vec<f64>,
}

impl SampleTable {
    fn new(ts: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if ts.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: ts.len(),
                got: values.len(),
            });
        }
        if ts.is_empty() {
            return Err(Error::InvalidInput("empty profile samples".into()));
        }
        let mut pairs: Vec<(f64, f64)> = ts.into_iter().zip(values).collect();
        if pairs.iter().any(|(t, v)| !t.is_finite() || !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite profile sample".into()));
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("duplicate t in profile samples".into()));
        }
        let (ts, values) = pairs.into_iter().unzip();
        Ok(Self { ts, values })
    }

    fn eval(&self, t: f64) -> f64 {
        let lo = self.ts[0];
        let hi = *self.ts.last().unwrap();
        let t = if (lo..=hi).contains(&t) {
            t
        } else if (lo..=hi).contains(&-t) {
            -t
        } else {
            return f64::NAN;
        };
        let i = self.ts.partition_point(|&s| s <= t);
        if i == 0 {
            return self.values[0];
        }
        if i == self.ts.len() {
            return *self.values.last().unwrap();
        }
        let (t0, t1) = (self.ts[i - 1], self.ts[i]);
        let w = (t - t0) / (t1 - t0);
        self.values[i - 1] * (1.0 - w) + self.values[i] * w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn params(kv: &[(&str, f64)]) -> BTreeMap<String, f64> {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn zoo_reference_values() {
        assert_eq!(zoo_default("gaussian").unwrap().eval(0.0), 1.0);
        assert_eq!(zoo_default("cauchy").unwrap().eval(0.0), 2.0);
        assert!((zoo_default("laplacian").unwrap().eval(1.0) - 1.0 / E).abs() < 1e-15);
        assert!((zoo_default("gaussian").unwrap().eval(1.0) - (-0.5f64).exp()).abs() < 1e-15);
        assert!((zoo_default("cauchy").unwrap().eval(1.0) - 1.0).abs() < 1e-15);
        let cos2 = zoo("cosine", &params(&[("omega", 2.0)])).unwrap();
        assert!((cos2.eval(PI / 2.0) + 1.0).abs() < 1e-15);
        let c = zoo("constant", &params(&[("c", 0.3)])).unwrap();
        assert_eq!(c.eval(123.0), 0.3);
    }

    #[test]
    fn zoo_rejects_bad_configuration() {
        assert!(matches!(zoo_default("matern"), Err(Error::Config(_))));
        assert!(matches!(
            zoo("gaussian", &params(&[("scale", 0.0)])),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            zoo("gaussian", &params(&[("omega", 1.0)])),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            zoo("constant", &params(&[("c", -1.0)])),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn affine_offsets_compose() {
        let k = zoo("cosine", &params(&[("offset", -0.3)])).unwrap();
        assert!((k.eval(0.0) - 0.7).abs() < 1e-15);
        let mixed = zoo_default("gaussian").unwrap().affine(0.7, 0.3);
        assert!((mixed.eval(0.0) - 1.0).abs() < 1e-15);
        assert_eq!(mixed.descriptor().params["offset"], 0.3);
        let rebuilt = from_descriptor(mixed.descriptor()).unwrap();
        assert!((rebuilt.eval(1.3) - mixed.eval(1.3)).abs() < 1e-15);
    }

    #[test]
    fn zoo_profiles_are_even_and_dominated() {
        let grid = default_grid();
        for name in ZOO_NAMES {
            let k = zoo_default(name).unwrap();
            assert!(k.evenness_defect(&grid) <= 1e-12, "{name}");
            assert!(k.dominance_defect(&grid) <= 1e-12, "{name}");
        }
    }

    #[test]
    fn metric_from_kernel_examples() {
        let d2 = metric_from_kernel(&zoo_default("gaussian").unwrap());
        assert_eq!(d2.eval(0.0), 0.0);
        assert!((d2.eval(1.5) - (2.0 - 2.0 * (-1.125f64).exp())).abs() < 1e-15);
        let d2 = metric_from_kernel(&zoo_default("cosine").unwrap());
        assert!((d2.eval(PI) - 4.0).abs() < 1e-15);
        let d2 = metric_from_kernel(&zoo_default("constant").unwrap());
        assert!(default_grid().iter().all(|&t| d2.eval(t) == 0.0));
    }

    #[test]
    fn kernel_from_metric_examples() {
        let inner = kernel_from_metric(&MetricProfile::squared_euclidean());
        for &(x, y) in &[(1.0, 2.0), (-3.0, 0.5), (0.0, 4.0)] {
            assert!((inner.eval(x, y) - x * y).abs() < 1e-12);
        }
        let zero = kernel_from_metric(&MetricProfile::new(ProfileDescriptor::new("zero"), |_| 0.0));
        assert_eq!(zero.eval(1.0, -2.0), 0.0);
        let d2 = MetricProfile::new(ProfileDescriptor::new("cos"), |t: f64| 2.0 - 2.0 * t.cos());
        let k = kernel_from_metric(&d2);
        assert!((k.eval(PI / 2.0, PI / 2.0) - 2.0).abs() < 1e-12);
        assert!((k.eval(0.7, 0.7) - d2.eval(0.7)).abs() < 1e-12);
    }

    #[test]
    fn configurable_base_point() {
        let k = kernel_from_metric_at(&MetricProfile::squared_euclidean(), 1.0);
        assert!((k.eval(3.0, 2.0) - 2.0).abs() < 1e-12);
        assert_eq!(k.eval(1.0, 5.0), 0.0);
    }

    #[test]
    fn translation_invariance_examples() {
        let probes = default_probes();
        let inner = kernel_from_metric(&MetricProfile::squared_euclidean());
        let report = check_translation_invariance(&inner, &probes, 1e-9).unwrap();
        assert!(!report.invariant);
        assert!(report.worst_violation > 1.0);

        let direct = BivariateKernel::new("K(x-y) = cos(x-y)", |x: f64, y: f64| (x - y).cos());
        assert!(
            check_translation_invariance(&direct, &probes, 1e-9)
                .unwrap()
                .invariant
        );

        let d2 = MetricProfile::new(ProfileDescriptor::new("cos"), |t: f64| 2.0 - 2.0 * t.cos());
        let polarized = kernel_from_metric(&d2);
        // polarizes to cos(x - y) - cos x - cos y + 1, which is not invariant
        let report = check_translation_invariance(&polarized, &probes, 1e-9).unwrap();
        assert!(!report.invariant);
        // its metric is
        let lifted = d2.as_bivariate();
        assert!(
            check_translation_invariance(&lifted, &probes, 1e-9)
                .unwrap()
                .invariant
        );
    }

    #[test]
    fn translation_invariance_needs_probes() {
        let k = zoo_default("gaussian").unwrap().as_bivariate();
        assert!(matches!(
            check_translation_invariance(&k, &[], 1e-9),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn bridge_discrepancy_identity() {
        let grid: Vec<f64> = default_grid().into_iter().step_by(5).collect();
        for name in ZOO_NAMES {
            let k = zoo_default(name).unwrap();
            let back = kernel_from_metric(&metric_from_kernel(&k));
            for &x in &grid {
                for &y in &grid {
                    let expected = k.eval(x - y) - k.eval(x) - k.eval(y) + k.k0();
                    assert!(
                        (back.eval(x, y) - expected).abs() <= 1e-12,
                        "{name} {x} {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn sampled_profile_interpolates_and_mirrors() {
        let ts = vec![0.0, 1.0, 2.0];
        let vs = vec![1.0, 0.5, 0.0];
        let k = KernelProfile::from_samples(ts, vs).unwrap();
        assert_eq!(k.eval(0.5), 0.75);
        assert_eq!(k.eval(-1.5), 0.25);
        assert!(k.eval(3.0).is_nan());
        assert!(matches!(k.try_eval(3.0), Err(Error::Evaluation { t, .. }) if t == 3.0));
        assert_eq!(k.sampled_extent(), Some(2.0));
        assert!(KernelProfile::from_samples(vec![0.0, 0.0], vec![1.0, 2.0]).is_err());
    }
}
