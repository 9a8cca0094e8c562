//! Error type shared by every module of the crate.

use serde_json::{json, Value};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A profile returned a non-finite value.
    #[error("profile `{profile}` evaluated to a non-finite value at t = {t}")]
    Evaluation { profile: String, t: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The symmetric eigen-solver did not converge.
    #[error("eigen-solver did not converge on a {n}x{n} matrix (max |entry| = {max_abs:e})")]
    Numeric { n: usize, max_abs: f64 },

    /// A kernel sample or profile carries a negative spectral component.
    #[error("kernel is not positive definite: {}", npd_detail(*.atom_estimate, *.min_density, *.min_density_at))]
    NotPositiveDefinite {
        atom_estimate: f64,
        min_density: f64,
        min_density_at: f64,
        threshold: f64,
    },

    /// A metric whose gamma measure violates the boundedness bound.
    #[error(
        "metric has no bounded translation-invariant kernel: \
         integral {integral:e} exceeds bound {bound:e}"
    )]
    UnboundedMetric { integral: f64, bound: f64 },

    /// A squared-distance matrix that admits no Euclidean embedding.
    #[error("squared distances are not Hilbertian: witness eigenvalue {witness_eigenvalue:e}")]
    NotHilbertian {
        witness_eigenvalue: f64,
        /// Direction orthogonal to the all-ones vector along which the
        /// squared-distance quadratic form is positive.
        nd_witness: Vec<f64>,
        nd_form: f64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

fn npd_detail(atom: f64, density: f64, at: f64) -> String {
    if density.is_nan() {
        format!("atom at zero = {atom:e}")
    } else {
        format!("atom at zero = {atom:e}, most negative density = {density:e} at frequency {at}")
    }
}

impl Error {
    /// True for rejections that carry mathematical content (as opposed to
    /// malformed input).
    pub fn is_rejection(&self) -> bool {
        matches!(
            self,
            Error::NotPositiveDefinite { .. }
                | Error::UnboundedMetric { .. }
                | Error::NotHilbertian { .. }
        )
    }

    /// Machine-readable diagnostic.
    pub fn to_json(&self) -> Value {
        match self {
            Error::NotPositiveDefinite {
                atom_estimate,
                min_density,
                min_density_at,
                threshold,
            } => json!({
                "error": "NotPositiveDefinite",
                "atom_estimate": atom_estimate,
                "min_density": min_density,
                "min_density_at": min_density_at,
                "threshold": threshold,
                "message": self.to_string(),
            }),
            Error::UnboundedMetric { integral, bound } => json!({
                "error": "UnboundedMetric",
                "integral": finite_or_null(*integral),
                "bound": bound,
                "message": self.to_string(),
            }),
            Error::NotHilbertian {
                witness_eigenvalue,
                nd_witness,
                nd_form,
            } => json!({
                "error": "NotHilbertian",
                "witness_eigenvalue": witness_eigenvalue,
                "nd_witness": nd_witness,
                "nd_form": nd_form,
                "message": self.to_string(),
            }),
            other => json!({ "error": other.kind(), "message": other.to_string() }),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Error::Evaluation { .. } => "Evaluation",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Config(_) => "Config",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::Numeric { .. } => "Numeric",
            Error::NotPositiveDefinite { .. } => "NotPositiveDefinite",
            Error::UnboundedMetric { .. } => "UnboundedMetric",
            Error::NotHilbertian { .. } => "NotHilbertian",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
            Error::Csv(_) => "Csv",
        }
    }
}

// JSON has no infinity.
fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}
