//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! This is the independent cross-check for the power iteration in
//! [`crate::spectral`]: it owns its workspace and shares no computation
//! with that path. Plane rotations annihilate one off-diagonal entry at a
//! time; sweeps repeat until the off-diagonal Frobenius norm falls below
//! the threshold, which always happens for symmetric input.

use crate::spectral::DistMatrix;

const OFF_DIAGONAL_THRESHOLD: f64 = 1e-12;
const MAX_SWEEPS: usize = 10_000;

/// Largest eigenvalue of a campaign matrix, by cyclic Jacobi rotations.
pub fn eig_oracle(m: &DistMatrix) -> f64 {
    jacobi_largest(m.n(), m.entries())
}

/// Largest eigenvalue of the symmetric matrix given as `n*n` row-major
/// entries.
pub fn jacobi_largest(n: usize, entries: &[f64]) -> f64 {
    assert_eq!(entries.len(), n * n, "entries must form an n x n matrix");
    if n == 1 {
        return entries[0];
    }
    let mut a = entries.to_vec();
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(n, &a) < OFF_DIAGONAL_THRESHOLD {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(n, &mut a, p, q);
            }
        }
    }
    (0..n)
        .map(|i| a[i * n + i])
        .fold(f64::NEG_INFINITY, f64::max)
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// One plane rotation zeroing a[p][q].
fn rotate(n: usize, a: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let app = a[p * n + p];
    let aqq = a[q * n + q];
    a[p * n + p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
    a[q * n + q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[p * n + k] = a[k * n + p];
        a[k * n + q] = s * akp + c * akq;
        a[q * n + k] = a[k * n + q];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::spectral::{build_matrix, spectral_radius, DistMatrix, MatrixKind, DEFAULT_POWER_TOL};
    use crate::tree::Tree;

    #[test]
    fn diagonal_matrix_returns_max_entry() {
        let d = vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0];
        assert_eq!(jacobi_largest(3, &d), 3.0);
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let m = vec![2.0, 1.0, 1.0, 2.0];
        assert!((jacobi_largest(2, &m) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_power_iteration_on_complement_matrices() {
        for t in [Tree::path(7), Tree::spider(&[2, 2, 2]), Tree::double_star(2, 3)] {
            for kind in [
                MatrixKind::Distance,
                MatrixKind::SignlessLaplacian,
                MatrixKind::DAlpha(0.25),
                MatrixKind::DAlpha(0.9),
            ] {
                let m = build_matrix(&t, kind).unwrap();
                let power = spectral_radius(&m, DEFAULT_POWER_TOL).unwrap().radius;
                assert!((power - eig_oracle(&m)).abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn handles_one_by_one_input() {
        let t = Tree::from_edges(1, &[]).unwrap();
        let m =
            DistMatrix::from_distances(MatrixKind::Distance, &t.metrics().distances, canonical_code(&t))
                .unwrap();
        assert_eq!(eig_oracle(&m), 0.0);
    }
}
