//! Separable kernels on `R^d`.
//!
//! `K(x, y) = Π k_i(x_i - y_i)` is the Fourier transform of the product of
//! the factor spectral measures, so everything is evaluated factor by
//! factor and no `d`-dimensional grid is ever built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profiles::KernelProfile;
use crate::spectral::{bochner_inversion, bochner_synthesis, InversionConfig, SpectralMeasure};

#[derive(Clone, Debug)]
pub struct SeparableKernel {
    factors: Vec<KernelProfile>,
}

impl SeparableKernel {
    pub fn new(factors: Vec<KernelProfile>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "separable kernel needs d >= 1 factors".into(),
            ));
        }
        Ok(Self { factors })
    }

    /// `d` copies of the same profile.
    pub fn isotropic(factor: &KernelProfile, d: usize) -> Result<Self> {
        Self::new(vec![factor.clone(); d])
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[KernelProfile] {
        &self.factors
    }

    /// Inverts every factor with the same configuration.
    pub fn spectral_measure(&self, config: &InversionConfig) -> Result<ProductSpectralMeasure> {
        let factors = self
            .factors
            .iter()
            .map(|k| bochner_inversion(k, config).map(|o| o.measure))
            .collect::<Result<Vec<_>>>()?;
        ProductSpectralMeasure::new(factors)
    }
}

/// `μ = μ_1 × ... × μ_d`, stored factored.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductSpectralMeasure {
    factors: Vec<SpectralMeasure>,
}

impl ProductSpectralMeasure {
    pub fn new(factors: Vec<SpectralMeasure>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "product measure needs d >= 1 factors".into(),
            ));
        }
        Ok(Self { factors })
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SpectralMeasure] {
        &self.factors
    }

    pub fn total_mass(&self) -> f64 {
        self.factors
            .iter()
            .map(SpectralMeasure::total_mass)
            .product()
    }
}

/// `Π k_i(x_i - y_i)`.
pub fn separable_eval(kernel: &SeparableKernel, x: &[f64], y: &[f64]) -> Result<f64> {
    check_dim(kernel.dim(), x.len())?;
    check_dim(kernel.dim(), y.len())?;
    Ok(kernel
        .factors
        .iter()
        .zip(x.iter().zip(y))
        .map(|(k, (xi, yi))| k.eval(xi - yi))
        .product())
}

/// `Π bochner_synthesis(μ_i, t_i)`.
pub fn product_synthesis(measure: &ProductSpectralMeasure, t: &[f64]) -> Result<f64> {
    check_dim(measure.dim(), t.len())?;
    Ok(measure
        .factors
        .iter()
        .zip(t)
        .map(|(mu, &ti)| bochner_synthesis(mu, ti))
        .product())
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
