//! Finite representations of spectral measures and screw-function gamma
//! measures: point masses plus a piecewise-constant density.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub loc: f64,
    pub mass: f64,
}

impl Atom {
    pub fn new(loc: f64, mass: f64) -> Self {
        Self { loc, mass }
    }
}

/// Piecewise-constant values on `[edges[i], edges[i + 1])`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BinnedDensity {
    pub edges: Vec<f64>,
    pub values: Vec<f64>,
}

impl BinnedDensity {
    pub fn new(edges: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let d = Self { edges, values };
        d.validate()?;
        Ok(d)
    }

    /// `bins` equal bins on `[lo, hi]` filled with `f` at bin midpoints.
    pub fn from_fn(lo: f64, hi: f64, bins: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if bins == 0 || !(hi > lo) {
            return Err(Error::InvalidInput(format!(
                "bad bin layout [{lo}, {hi}] x {bins}"
            )));
        }
        let h = (hi - lo) / bins as f64;
        let edges: Vec<f64> = (0..=bins).map(|i| lo + h * i as f64).collect();
        let values = edges.windows(2).map(|w| f(0.5 * (w[0] + w[1]))).collect();
        Self::new(edges, values)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn bins(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.edges
            .windows(2)
            .zip(&self.values)
            .map(|(w, &v)| (w[0], w[1], v))
    }

    /// Point estimate at `tau`: linear through bin midpoints, extended
    /// linearly beyond the outermost midpoints. Zero outside the edges.
    pub fn interpolate(&self, tau: f64) -> f64 {
        let n = self.values.len();
        if n == 0 || tau < self.edges[0] || tau > self.edges[n] {
            return 0.0;
        }
        if n == 1 {
            return self.values[0];
        }
        let mid = |i: usize| 0.5 * (self.edges[i] + self.edges[i + 1]);
        let i = self.edges[1..n].partition_point(|&e| e <= tau);
        let j = if tau < mid(i) {
            i.max(1) - 1
        } else {
            i.min(n - 2)
        };
        let (m0, m1) = (mid(j), mid(j + 1));
        let w = (tau - m0) / (m1 - m0);
        self.values[j] + w * (self.values[j + 1] - self.values[j])
    }

    /// `Σ value · width`.
    pub fn mass(&self) -> f64 {
        self.bins().map(|(a, b, v)| v * (b - a)).sum()
    }

    fn validate(&self) -> Result<()> {
        if self.edges.is_empty() && self.values.is_empty() {
            return Ok(());
        }
        if self.edges.len() != self.values.len() + 1 {
            return Err(Error::InvalidInput(format!(
                "density has {} edges for {} values",
                self.edges.len(),
                self.values.len()
            )));
        }
        if self.edges.iter().any(|e| !e.is_finite()) || self.edges[0] < 0.0 {
            return Err(Error::InvalidInput(
                "density edges must be finite and >= 0".into(),
            ));
        }
        if self.edges.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidInput(
                "density edges must be strictly increasing".into(),
            ));
        }
        if self.values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidInput(
                "density values must be finite and >= 0".into(),
            ));
        }
        Ok(())
    }
}

/// A bounded positive symmetric measure on the real line, stored one-sided.
///
/// The represented kernel is
///
/// ```text
/// k(t) = atom₀ + Σ_{τ>0} 2·m·cos(tτ) + ∫_(0,∞) 2·cos(tτ)·density(τ) dτ
/// ```
///
/// so an atom of mass `m` at `τ > 0` stands for `m` at both `±τ`, and the
/// density likewise for its mirror image. The two-sided total mass equals
/// `k(0)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpectralMeasureRepr")]
pub struct SpectralMeasure {
    #[serde(default)]
    atoms: Vec<Atom>,
    #[serde(default)]
    density: BinnedDensity,
}

impl SpectralMeasure {
    /// Validates and canonicalizes: atoms sorted by location, atoms at the
    /// same location merged, zero-mass atoms dropped.
    pub fn new(atoms: Vec<Atom>, density: BinnedDensity) -> Result<Self> {
        for a in &atoms {
            if !a.loc.is_finite() || a.loc < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "spectral atom location {} must be finite and >= 0",
                    a.loc
                )));
            }
            if !a.mass.is_finite() || a.mass < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "spectral atom mass {} must be finite and >= 0",
                    a.mass
                )));
            }
        }
        density.validate()?;
        Ok(Self {
            atoms: canonical_atoms(atoms),
            density,
        })
    }

    pub fn atomic(atoms: Vec<Atom>) -> Result<Self> {
        Self::new(atoms, BinnedDensity::default())
    }

    pub fn from_density(density: BinnedDensity) -> Result<Self> {
        Self::new(Vec::new(), density)
    }

    /// Unit point mass at frequency zero (the constant kernel 1).
    pub fn dirac_zero() -> Self {
        Self {
            atoms: vec![Atom::new(0.0, 1.0)],
            density: BinnedDensity::default(),
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn density(&self) -> &BinnedDensity {
        &self.density
    }

    /// Mass of the point at frequency zero.
    pub fn atom_at_zero(&self) -> f64 {
        self.atoms
            .iter()
            .filter(|a| a.loc == 0.0)
            .map(|a| a.mass)
            .sum()
    }

    /// Two-sided mass away from the atom at zero.
    pub fn nonzero_mass(&self) -> f64 {
        let atoms: f64 = self
            .atoms
            .iter()
            .filter(|a| a.loc > 0.0)
            .map(|a| a.mass)
            .sum();
        2.0 * (atoms + self.density.mass())
    }

    /// Two-sided total mass, equal to `k(0)`.
    pub fn total_mass(&self) -> f64 {
        self.atom_at_zero() + self.nonzero_mass()
    }

    /// Multiplies every mass by `c >= 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c >= 0.0) || !c.is_finite() {
            return Err(Error::InvalidInput(format!(
                "scale factor {c} must be >= 0"
            )));
        }
        Self::new(
            self.atoms
                .iter()
                .map(|a| Atom::new(a.loc, a.mass * c))
                .collect(),
            BinnedDensity {
                edges: self.density.edges.clone(),
                values: self.density.values.iter().map(|v| v * c).collect(),
            },
        )
    }

    /// `α(x) = 2·μ((0, x])`, the non-decreasing accumulation of the mass
    /// away from zero. `k(t) = atom₀ + ∫ cos(tτ) dα(τ)`.
    pub fn accumulate(&self, x: f64) -> f64 {
        let atoms: f64 = self
            .atoms
            .iter()
            .filter(|a| a.loc > 0.0 && a.loc <= x)
            .map(|a| a.mass)
            .sum();
        let density: f64 = self
            .density
            .bins()
            .map(|(a, b, v)| v * (b.min(x) - a.max(0.0)).max(0.0))
            .sum();
        2.0 * (atoms + density)
    }

    /// The mirrored two-sided view.
    pub fn symmetrize(&self) -> TwoSidedMeasure {
        let mut atoms = Vec::new();
        for a in &self.atoms {
            if a.loc == 0.0 {
                atoms.push(*a);
            } else {
                atoms.push(Atom::new(-a.loc, a.mass));
                atoms.push(Atom::new(a.loc, a.mass));
            }
        }
        atoms.sort_by(|a, b| a.loc.total_cmp(&b.loc));
        let mut bins = Vec::new();
        for (a, b, v) in self.density.bins() {
            bins.push((-b, -a, v));
            bins.push((a, b, v));
        }
        bins.sort_by(|x, y| x.0.total_cmp(&y.0));
        TwoSidedMeasure { atoms, bins }
    }
}

/// Two-sided view of a [`SpectralMeasure`].
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSidedMeasure {
    pub atoms: Vec<Atom>,
    /// `(lo, hi, value)` bins, possibly on negative frequencies.
    pub bins: Vec<(f64, f64, f64)>,
}

impl TwoSidedMeasure {
    /// `μ((a, b])`.
    pub fn interval_mass(&self, a: f64, b: f64) -> f64 {
        let atoms: f64 = self
            .atoms
            .iter()
            .filter(|at| at.loc > a && at.loc <= b)
            .map(|at| at.mass)
            .sum();
        let density: f64 = self
            .bins
            .iter()
            .map(|&(lo, hi, v)| v * (hi.min(b) - lo.max(a)).max(0.0))
            .sum();
        atoms + density
    }

    pub fn total_mass(&self) -> f64 {
        self.interval_mass(f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// How a gamma density bin value `w` translates into `dγ(s)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaDensityForm {
    /// `dγ(s) = w ds`.
    #[default]
    Flat,
    /// `dγ(s) = w·s² ds`; `w` is then the density of `s⁻² dγ(s)`. This is
    /// the form produced from piecewise-constant spectral densities.
    Quadratic,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GammaDensity {
    pub edges: Vec<f64>,
    pub values: Vec<f64>,
    #[serde(default)]
    pub form: GammaDensityForm,
}

impl GammaDensity {
    pub fn new(edges: Vec<f64>, values: Vec<f64>, form: GammaDensityForm) -> Result<Self> {
        BinnedDensity::new(edges.clone(), values.clone())?;
        Ok(Self {
            edges,
            values,
            form,
        })
    }

    pub fn flat(edges: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Self::new(edges, values, GammaDensityForm::Flat)
    }

    pub fn bins(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.edges
            .windows(2)
            .zip(&self.values)
            .map(|(w, &v)| (w[0], w[1], v))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The non-decreasing function `γ` of a screw-function representation
/// `d²(t) = ∫_(0,∞) sin²(ts)/s² dγ(s)`, stored as point masses at `s > 0`
/// plus a binned density.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GammaMeasureRepr")]
pub struct GammaMeasure {
    #[serde(default)]
    atoms: Vec<Atom>,
    #[serde(default)]
    density: GammaDensity,
}

impl GammaMeasure {
    pub fn new(atoms: Vec<Atom>, density: GammaDensity) -> Result<Self> {
        for a in &atoms {
            if !a.loc.is_finite() || a.loc <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "gamma atom location {} must be finite and > 0 (no discrete component at 0)",
                    a.loc
                )));
            }
            if !a.mass.is_finite() || a.mass < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "gamma atom mass {} must be finite and >= 0",
                    a.mass
                )));
            }
        }
        BinnedDensity {
            edges: density.edges.clone(),
            values: density.values.clone(),
        }
        .validate()?;
        Ok(Self {
            atoms: canonical_atoms(atoms),
            density,
        })
    }

    pub fn atomic(atoms: Vec<Atom>) -> Result<Self> {
        Self::new(atoms, GammaDensity::default())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn density(&self) -> &GammaDensity {
        &self.density
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.density.is_empty()
    }
}

#[derive(Deserialize)]
struct SpectralMeasureRepr {
    #[serde(default)]
    atoms: Vec<Atom>,
    #[serde(default)]
    density: BinnedDensity,
}

impl TryFrom<SpectralMeasureRepr> for SpectralMeasure {
    type Error = Error;

    fn try_from(r: SpectralMeasureRepr) -> Result<Self> {
        SpectralMeasure::new(r.atoms, r.density)
    }
}

#[derive(Deserialize)]
struct GammaMeasureRepr {
    #[serde(default)]
    atoms: Vec<Atom>,
    #[serde(default)]
    density: GammaDensity,
}

impl TryFrom<GammaMeasureRepr> for GammaMeasure {
    type Error = Error;

    fn try_from(r: GammaMeasureRepr) -> Result<Self> {
        GammaMeasure::new(r.atoms, r.density)
    }
}

fn canonical_atoms(mut atoms: Vec<Atom>) -> Vec<Atom> {
    atoms.sort_by(|a, b| a.loc.total_cmp(&b.loc));
    let mut out: Vec<Atom> = Vec::with_capacity(atoms.len());
    for a in atoms {
        match out.last_mut() {
            Some(last) if last.loc == a.loc => last.mass += a.mass,
            _ => out.push(a),
        }
    }
    out.retain(|a| a.mass > 0.0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_is_exact_on_affine_values() {
        let d = BinnedDensity::from_fn(0.0, 2.0, 4, |x| 3.0 - x).unwrap();
        for &x in &[0.0, 0.1, 0.25, 0.6, 1.3, 1.99, 2.0] {
            assert!((d.interpolate(x) - (3.0 - x)).abs() < 1e-15, "{x}");
        }
        assert_eq!(d.interpolate(-0.1), 0.0);
        assert_eq!(d.interpolate(2.1), 0.0);
        let one = BinnedDensity::new(vec![0.0, 1.0], vec![0.5]).unwrap();
        assert_eq!(one.interpolate(0.3), 0.5);
    }

    #[test]
    fn canonicalizes_atoms() {
        let mu = SpectralMeasure::atomic(vec![
            Atom::new(2.0, 0.5),
            Atom::new(0.0, 0.25),
            Atom::new(2.0, 0.5),
            Atom::new(1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(mu.atoms(), &[Atom::new(0.0, 0.25), Atom::new(2.0, 1.0)]);
        assert_eq!(mu.atom_at_zero(), 0.25);
        assert_eq!(mu.total_mass(), 2.25);
    }

    #[test]
    fn rejects_invalid_measures() {
        assert!(SpectralMeasure::atomic(vec![Atom::new(-1.0, 1.0)]).is_err());
        assert!(SpectralMeasure::atomic(vec![Atom::new(1.0, -1.0)]).is_err());
        assert!(BinnedDensity::new(vec![0.0, 1.0], vec![]).is_err());
        assert!(BinnedDensity::new(vec![1.0, 0.5], vec![1.0]).is_err());
        assert!(BinnedDensity::new(vec![0.0, 1.0], vec![-0.1]).is_err());
        assert!(GammaMeasure::atomic(vec![Atom::new(0.0, 1.0)]).is_err());
    }

    #[test]
    fn mass_bookkeeping() {
        let d = BinnedDensity::new(vec![0.0, 1.0, 3.0], vec![0.5, 0.25]).unwrap();
        let mu = SpectralMeasure::new(vec![Atom::new(0.0, 0.3), Atom::new(1.0, 0.1)], d).unwrap();
        // 0.3 + 2·0.1 + 2·(0.5 + 0.5)
        assert!((mu.total_mass() - 2.5).abs() < 1e-15);
        assert!((mu.accumulate(f64::INFINITY) - mu.nonzero_mass()).abs() < 1e-15);
        assert!((mu.accumulate(2.0) - 2.0 * (0.1 + 0.5 + 0.25)).abs() < 1e-15);
        assert_eq!(mu.accumulate(0.0), 0.0);

        let two = mu.symmetrize();
        assert!((two.total_mass() - mu.total_mass()).abs() < 1e-15);
        assert!((two.interval_mass(-1.0, 0.0) - 0.8).abs() < 1e-15);
        assert!((two.interval_mass(0.0, 1.0) - 0.6).abs() < 1e-15);
        assert!((two.interval_mass(-0.5, 0.5) - (0.3 + 0.5)).abs() < 1e-15);
    }

    #[test]
    fn json_shape() {
        let mu = SpectralMeasure::new(
            vec![Atom::new(1.0, 0.5)],
            BinnedDensity::new(vec![0.0, 1.0], vec![0.25]).unwrap(),
        )
        .unwrap();
        let v = serde_json::to_value(&mu).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"atoms":[{"loc":1.0,"mass":0.5}],"density":{"edges":[0.0,1.0],"values":[0.25]}})
        );
        let gamma: GammaMeasure =
            serde_json::from_str(r#"{"atoms":[{"loc":0.5,"mass":1}]}"#).unwrap();
        assert_eq!(gamma.atoms(), &[Atom::new(0.5, 1.0)]);
        assert_eq!(gamma.density().form, GammaDensityForm::Flat);
        assert!(serde_json::from_str::<GammaMeasure>(r#"{"atoms":[{"loc":0,"mass":1}]}"#).is_err());
        assert!(
            serde_json::from_str::<SpectralMeasure>(r#"{"atoms":[{"loc":1,"mass":-1}]}"#).is_err()
        );
    }
}
