//! Finite-sample definiteness checks.
//!
//! Positive definiteness of a kernel is tested through its Gram matrices and
//! negative definiteness through the quadratic form restricted to vectors
//! summing to zero. Tolerances are relative: an eigenvalue counts as
//! negative only below `-tol · n · scale`, where `scale` is the largest
//! absolute diagonal entry (largest absolute entry for negative definite
//! checks, whose diagonals are typically zero).

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::profiles::KernelProfile;

pub const DEFAULT_TOL: f64 = 1e-10;

const SYMMETRY_TOL: f64 = 1e-12;
const EIGEN_EPS: f64 = f64::EPSILON;
const EIGEN_MAX_ITER: usize = 10_000;

/// Kernel values `K(x_i, x_j)` at a set of sample points.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    points: Vec<f64>,
    entries: DMatrix<f64>,
}

impl GramMatrix {
    /// Wraps precomputed entries; `points` may be empty when the sample
    /// locations are unknown.
    pub fn new(points: Vec<f64>, entries: DMatrix<f64>) -> Result<Self> {
        check_symmetric(&entries)?;
        if !points.is_empty() && points.len() != entries.nrows() {
            return Err(Error::DimensionMismatch {
                expected: entries.nrows(),
                got: points.len(),
            });
        }
        Ok(Self { points, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(Vec::new(), matrix_from_rows(rows)?)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.nrows() == 0
    }

    /// Reorders rows and columns: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> GramMatrix {
        let n = self.len();
        let entries = DMatrix::from_fn(n, n, |i, j| self.entries[(perm[i], perm[j])]);
        let points = if self.points.is_empty() {
            Vec::new()
        } else {
            perm.iter().map(|&i| self.points[i]).collect()
        };
        GramMatrix { points, entries }
    }
}

/// Samples `N(x_i, x_j)` of a candidate negative definite kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricKernelMatrix {
    entries: DMatrix<f64>,
}

impl SymmetricKernelMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        check_symmetric(&entries)?;
        Ok(Self { entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(matrix_from_rows(rows)?)
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.nrows() == 0
    }
}

/// Outcome of a definiteness test together with the most violating
/// eigenpair.
#[derive(Clone, Debug, PartialEq)]
pub struct DefinitenessVerdict {
    pub verdict: bool,
    pub witness_eigenvalue: f64,
    /// Unit vector. For negative definiteness checks it is orthogonal to the
    /// all-ones vector.
    pub witness_vector: Vec<f64>,
    pub threshold: f64,
}

/// Coordinates of a Euclidean embedding, one row per sample point.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingResult {
    pub coordinates: DMatrix<f64>,
    pub rank: usize,
    /// `max |‖ξ_i - ξ_j‖² - D²_ij|`, recomputed from the coordinates.
    pub residual: f64,
}

/// `G[i][j] = k(x_i - x_j)`.
pub fn build_gram(profile: &KernelProfile, points: &[f64]) -> Result<GramMatrix> {
    if points.is_empty() {
        return Err(Error::InvalidInput("no sample points".into()));
    }
    if let Some(&x) = points.iter().find(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(format!("non-finite sample point {x}")));
    }
    let n = points.len();
    let mut entries = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = profile.try_eval(points[i] - points[j])?;
            entries[(i, j)] = v;
            entries[(j, i)] = v;
        }
    }
    Ok(GramMatrix {
        points: points.to_vec(),
        entries,
    })
}

/// True iff the smallest eigenvalue is at least `-tol · n · max|diag|`.
pub fn is_positive_definite(g: &GramMatrix, tol: f64) -> Result<DefinitenessVerdict> {
    let m = &g.entries;
    let n = m.nrows();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    let mut scale = (0..n).map(|i| m[(i, i)].abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        scale = max_abs(m);
    }
    let threshold = tol * n as f64 * scale;
    let eig = eigen(m)?;
    let (idx, &lambda) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    Ok(DefinitenessVerdict {
        verdict: lambda >= -threshold,
        witness_eigenvalue: lambda,
        witness_vector: eig.eigenvectors.column(idx).iter().copied().collect(),
        threshold,
    })
}

/// True iff `cᵀNc <= tol · n · max|N|` for all unit `c` with `Σc = 0`,
/// tested through the eigenvalues of `PNP` with `P = I - 11ᵀ/n`.
pub fn is_negative_definite(nm: &SymmetricKernelMatrix, tol: f64) -> Result<DefinitenessVerdict> {
    let m = &nm.entries;
    let n = m.nrows();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    let threshold = tol * n as f64 * max_abs(m);
    let p = centering(n);
    let pnp = &p * m * &p;
    let pnp = (&pnp + pnp.transpose()) * 0.5;
    let eig = eigen(&pnp)?;

    // The all-ones direction is an exact null vector of PNP; skip the
    // eigenvector most aligned with it so the witness lives in 1⊥.
    let ones = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let ones_idx = (0..n)
        .max_by(|&a, &b| {
            let da = eig.eigenvectors.column(a).dot(&ones).abs();
            let db = eig.eigenvectors.column(b).dot(&ones).abs();
            da.total_cmp(&db)
        })
        .unwrap();
    let best = (0..n)
        .filter(|&i| n == 1 || i != ones_idx)
        .max_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]))
        .unwrap();
    let lambda = if n == 1 { 0.0 } else { eig.eigenvalues[best] };
    let mut w = &p * eig.eigenvectors.column(best);
    let norm = w.norm();
    if norm > 0.0 {
        w /= norm;
    }
    Ok(DefinitenessVerdict {
        verdict: lambda <= threshold,
        witness_eigenvalue: lambda,
        witness_vector: w.iter().copied().collect(),
        threshold,
    })
}

/// `K(i, j) = ½(N(i, b) + N(j, b) - N(i, j) - N(b, b))`.
pub fn nd_to_psd(nm: &SymmetricKernelMatrix, base_index: usize) -> Result<GramMatrix> {
    let m = &nm.entries;
    let n = m.nrows();
    if base_index >= n {
        return Err(Error::InvalidInput(format!(
            "base index {base_index} out of range for {n}x{n} matrix"
        )));
    }
    let b = base_index;
    let mut k = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = 0.5 * (m[(i, b)] + m[(j, b)] - m[(i, j)] - m[(b, b)]);
            k[(i, j)] = v;
            k[(j, i)] = v;
        }
    }
    Ok(GramMatrix {
        points: Vec::new(),
        entries: k,
    })
}

/// Classical scaling of a squared-distance matrix.
///
/// Polarizes at index 0, keeps the eigenpairs above `tol · n · scale` and
/// scales eigenvectors by `√λ`. Point 0 lands at the origin. A sample whose
/// polarized Gram has an eigenvalue below `-tol · n · scale` is rejected
/// with [`Error::NotHilbertian`].
pub fn euclidean_embedding(d2: &SymmetricKernelMatrix, tol: f64) -> Result<EmbeddingResult> {
    let m = &d2.entries;
    let n = m.nrows();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    for i in 0..n {
        if m[(i, i)] != 0.0 {
            return Err(Error::InvalidInput(format!(
                "squared distance matrix has non-zero diagonal at {i}"
            )));
        }
    }
    if let Some(v) = m.iter().find(|&&v| v < 0.0) {
        return Err(Error::InvalidInput(format!(
            "negative squared distance {v}"
        )));
    }

    let k = nd_to_psd(d2, 0)?;
    let verdict = is_positive_definite(&k, tol)?;
    if !verdict.verdict {
        let nd = is_negative_definite(d2, tol)?;
        let c = DVector::from_vec(nd.witness_vector.clone());
        let form = c.dot(&(m * &c));
        return Err(Error::NotHilbertian {
            witness_eigenvalue: verdict.witness_eigenvalue,
            nd_witness: nd.witness_vector,
            nd_form: form,
        });
    }
    let eig = eigen(&k.entries)?;
    let cutoff = verdict.threshold;
    let mut kept: Vec<usize> = (0..n).filter(|&i| eig.eigenvalues[i] > cutoff).collect();
    kept.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let rank = kept.len();
    let mut coords = DMatrix::zeros(n, rank);
    for (c, &idx) in kept.iter().enumerate() {
        let s = eig.eigenvalues[idx].sqrt();
        for r in 0..n {
            coords[(r, c)] = eig.eigenvectors[(r, idx)] * s;
        }
    }
    let residual = embedding_residual(&coords, m);
    Ok(EmbeddingResult {
        coordinates: coords,
        rank,
        residual,
    })
}

/// `max |‖ξ_i - ξ_j‖² - D²_ij|` over all pairs.
pub fn embedding_residual(coords: &DMatrix<f64>, d2: &DMatrix<f64>) -> f64 {
    let n = coords.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let dist2 = (coords.row(i) - coords.row(j)).norm_squared();
            worst = worst.max((dist2 - d2[(i, j)]).abs());
        }
    }
    worst
}

fn centering(n: usize) -> DMatrix<f64> {
    DMatrix::identity(n, n) - DMatrix::from_element(n, n, 1.0 / n as f64)
}

fn eigen(m: &DMatrix<f64>) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
    SymmetricEigen::try_new(m.clone(), EIGEN_EPS, EIGEN_MAX_ITER).ok_or(Error::Numeric {
        n: m.nrows(),
        max_abs: max_abs(m),
    })
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc: f64, v| acc.max(v.abs()))
}

fn check_symmetric(m: &DMatrix<f64>) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::InvalidInput(format!(
            "matrix is {}x{}, expected square",
            m.nrows(),
            m.ncols()
        )));
    }
    if let Some(v) = m.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!("non-finite matrix entry {v}")));
    }
    let scale = max_abs(m).max(f64::MIN_POSITIVE);
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL * scale {
                return Err(Error::InvalidInput(format!(
                    "matrix is not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

fn matrix_from_rows(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    if let Some(row) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: row.len(),
        });
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}
