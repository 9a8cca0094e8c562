//! Translation-invariant positive definite kernels on the real line, the
//! Hilbertian metrics they induce, and the spectral measures behind both.
//!
//! | module | contents |
//! |--------|----------|
//! | [`gram`] | Gram matrices, positive/negative definiteness verdicts, Euclidean embedding |
//! | [`profiles`] | kernel and metric profiles, the kernel ↔ metric bridge, the kernel zoo |
//! | [`spectral`] | spectral and screw-function measures, synthesis, inversion |
//! | [`product`] | separable kernels on `R^d` |
//! | [`features`] | random Fourier features |
//! | [`cli`] | the `hilbertian` command-line front end |
//!
//! ```
//! use hilbertian::profiles::zoo_default;
//! use hilbertian::spectral::{bochner_inversion, bochner_synthesis, InversionConfig};
//!
//! let k = zoo_default("gaussian").unwrap();
//! let out = bochner_inversion(&k, &InversionConfig::default()).unwrap();
//! assert!((bochner_synthesis(&out.measure, 1.0) - k.eval(1.0)).abs() < 1e-3);
//! ```

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod features;
pub mod gram;
pub mod io;
pub mod product;
pub mod profiles;
pub mod spectral;

pub use error::{Error, Result};
