//! Distance-type matrices of tree complements and their spectral radii.
//!
//! Three matrix kinds are built from the exact BFS distances `D` of the
//! complement and the transmissions `Tr` (row sums of `D`):
//!
//! * `Distance` — `D` itself, largest eigenvalue λ₁;
//! * `SignlessLaplacian` — `diag(Tr) + D`, largest eigenvalue μ₁;
//! * `DAlpha(α)` — `α·diag(Tr) + (1-α)·D` for α in [0, 1), largest
//!   eigenvalue ρ_α, interpolating the other two (ρ₀ = λ₁, 2ρ_{1/2} = μ₁).
//!
//! The radius is computed by power iteration from the all-ones vector. The
//! campaign matrices are nonnegative with all off-diagonal entries >= 1, so
//! they are primitive and the dominant eigenvalue is simple; the iteration
//! is deterministic and the all-ones start is never orthogonal to the
//! Perron vector. An independent Jacobi eigensolver lives in
//! [`crate::jacobi`] and shares no code with this path.

use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::tree::{ComplementError, DistanceMatrix, Tree};

/// Convergence threshold for power iteration: successive Rayleigh quotients
/// and the residual must both drop below it.
pub const DEFAULT_POWER_TOL: f64 = 1e-12;

/// Iteration cap; hitting it signals a degenerate input.
pub const DEFAULT_ITERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixKind {
    Distance,
    SignlessLaplacian,
    DAlpha(f64),
}

impl MatrixKind {
    /// Name of the spectral radius this kind carries.
    pub fn radius_label(&self) -> String {
        match self {
            MatrixKind::Distance => "lambda1".to_string(),
            MatrixKind::SignlessLaplacian => "mu1".to_string(),
            MatrixKind::DAlpha(a) => format!("rho({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("complement graph is disconnected")]
    DisconnectedComplement,
    #[error("alpha must lie in [0, 1), got {0}")]
    AlphaOutOfRange(f64),
}

impl From<ComplementError> for MatrixError {
    fn from(_: ComplementError) -> Self {
        MatrixError::DisconnectedComplement
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("power iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("vector must have unit norm, got {norm}")]
    NonUnitVector { norm: f64 },
    #[error("matrix entries must be symmetric")]
    Asymmetric,
    #[error("matrix entries must be nonnegative")]
    NegativeEntry,
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense symmetric matrix of one kind, tagged with the canonical code of
/// the tree it came from. Row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DistMatrix {
    kind: MatrixKind,
    source_code: CanonicalCode,
    n: usize,
    data: Vec<f64>,
}

/// Output of one spectral-radius computation.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary {
    /// Final Rayleigh quotient.
    pub radius: f64,
    /// Unit-norm dominant eigenvector; entrywise positive for the
    /// irreducible nonnegative inputs the campaigns feed in.
    pub perron: Vec<f64>,
    /// `max_i |(Mx - radius x)_i|` at termination.
    pub residual: f64,
    pub iterations: usize,
}

impl DistMatrix {
    /// Builds the requested kind from precomputed complement distances.
    /// `DAlpha` diagonal and off-diagonal entries are single rounded
    /// products, so `DAlpha(0)` equals `Distance` and `DAlpha(1/2)` is
    /// exactly half of `SignlessLaplacian`, entry for entry.
    pub fn from_distances(
        kind: MatrixKind,
        distances: &DistanceMatrix,
        source_code: CanonicalCode,
    ) -> Result<Self, MatrixError> {
        if let MatrixKind::DAlpha(a) = kind {
            if !(0.0..1.0).contains(&a) {
                return Err(MatrixError::AlphaOutOfRange(a));
            }
        }
        let n = distances.n();
        let tr: Vec<f64> = (0..n).map(|i| distances.row_sum(i) as f64).collect();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let d = distances.get(i, j) as f64;
                data[i * n + j] = match kind {
                    MatrixKind::Distance => d,
                    MatrixKind::SignlessLaplacian => {
                        if i == j {
                            tr[i]
                        } else {
                            d
                        }
                    }
                    MatrixKind::DAlpha(a) => {
                        if i == j {
                            a * tr[i]
                        } else {
                            (1.0 - a) * d
                        }
                    }
                };
            }
        }
        Ok(DistMatrix { kind, source_code, n, data })
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn source_code(&self) -> &CanonicalCode {
        &self.source_code
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Row-major copy of the entries, for failure dumps.
    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().sum())
            .collect()
    }

    fn matvec(&self, x: &[f64], out: &mut [f64]) {
        for (i, slot) in out.iter_mut().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            *slot = row.iter().zip(x).map(|(&m, &xj)| m * xj).sum();
        }
    }
}

/// Builds the kind matrix of the complement of `t`, distances by BFS.
pub fn build_matrix(t: &Tree, kind: MatrixKind) -> Result<DistMatrix, MatrixError> {
    let distances = t.complement_distances()?;
    DistMatrix::from_distances(kind, &distances, crate::canon::canonical_code(t))
}

/// Row sums of a symmetric nonnegative matrix given as `n*n` row-major
/// entries.
pub fn transmissions(n: usize, entries: &[f64]) -> Result<Vec<f64>, SpectralError> {
    if entries.len() != n * n {
        return Err(SpectralError::DimensionMismatch { expected: n * n, got: entries.len() });
    }
    for i in 0..n {
        for j in 0..i {
            if entries[i * n + j] != entries[j * n + i] {
                return Err(SpectralError::Asymmetric);
            }
        }
    }
    if entries.iter().any(|&e| e < 0.0) {
        return Err(SpectralError::NegativeEntry);
    }
    Ok((0..n).map(|i| entries[i * n..(i + 1) * n].iter().sum()).collect())
}

/// Power iteration from the all-ones vector with the default iteration cap.
pub fn spectral_radius(m: &DistMatrix, tol: f64) -> Result<SpectralSummary, SpectralError> {
    spectral_radius_capped(m, tol, DEFAULT_ITERATION_CAP)
}

/// Power iteration: normalize each step, stop once successive Rayleigh
/// quotients differ by less than `tol` and the residual is below `tol`.
pub fn spectral_radius_capped(
    m: &DistMatrix,
    tol: f64,
    cap: usize,
) -> Result<SpectralSummary, SpectralError> {
    let n = m.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut prev_q: Option<f64> = None;
    for iteration in 1..=cap {
        m.matvec(&x, &mut y);
        let q: f64 = x.iter().zip(&y).map(|(&xi, &yi)| xi * yi).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(&xi, &yi)| (yi - q * xi).abs())
            .fold(0.0_f64, f64::max);
        if let Some(prev) = prev_q {
            if (q - prev).abs() < tol && residual < tol {
                return Ok(SpectralSummary { radius: q, perron: x, residual, iterations: iteration });
            }
        }
        prev_q = Some(q);
        let norm = y.iter().map(|&v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            for (xi, &yi) in x.iter_mut().zip(&y) {
                *xi = yi / norm;
            }
        }
    }
    Err(SpectralError::NonConvergence { iterations: cap })
}

/// Rayleigh quotient xᵀMx of a unit vector.
pub fn rayleigh(m: &DistMatrix, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != m.n() {
        return Err(SpectralError::DimensionMismatch { expected: m.n(), got: x.len() });
    }
    let norm = x.iter().map(|&v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(SpectralError::NonUnitVector { norm });
    }
    let mut y = vec![0.0; m.n()];
    m.matvec(x, &mut y);
    Ok(x.iter().zip(&y).map(|(&xi, &yi)| xi * yi).sum())
}
