//! Small dense linear algebra: Jacobi eigen-solver for symmetric 3×3
//! matrices and a one-sided Jacobi SVD for null spaces in `R⁶`.

use alloc::vec::Vec;

use crate::vector::{Mat3, Vec3};

const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition of a symmetric matrix: `m = V diag(λ) Vᵀ`.
/// Eigenvectors are the columns of the returned matrix, eigenvalues sorted
/// ascending.
pub fn symmetric_eigen(m: &Mat3) -> (Vec3, Mat3) {
    let mut a = m.rows;
    let mut v = Mat3::IDENTITY.rows;
    for _ in 0..MAX_SWEEPS {
        let off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        let diag = a[0][0] * a[0][0] + a[1][1] * a[1][1] + a[2][2] * a[2][2];
        if off <= f64::EPSILON * f64::EPSILON * diag || off == 0.0 {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if a[p][q] == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
            let c = 1.0 / libm::sqrt(t * t + 1.0);
            let s = t * c;
            for row in a.iter_mut() {
                let (akp, akq) = (row[p], row[q]);
                row[p] = c * akp - s * akq;
                row[q] = s * akp + c * akq;
            }
            let (rp, rq) = (a[p], a[q]);
            for k in 0..3 {
                a[p][k] = c * rp[k] - s * rq[k];
                a[q][k] = s * rp[k] + c * rq[k];
            }
            for row in v.iter_mut() {
                let (vp, vq) = (row[p], row[q]);
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let vm = Mat3::from_rows(v);
    let values = Vec3::new(
        a[order[0]][order[0]],
        a[order[1]][order[1]],
        a[order[2]][order[2]],
    );
    let vectors = Mat3::from_columns(
        vm.column(order[0]),
        vm.column(order[1]),
        vm.column(order[2]),
    );
    (values, vectors)
}

/// Orthonormal basis of `{x ∈ R⁶ : row·x = 0 for every row}`.
///
/// Singular values at or below `rel_tol · σ_max` count as zero. With no
/// rows, or only zero rows, the whole space is returned.
pub fn null_space(rows: &[[f64; 6]], rel_tol: f64) -> Vec<[f64; 6]> {
    let k = rows.len();
    // Columns of `u` start as the columns of the k×6 matrix.
    let mut u: Vec<[f64; 6]> = rows.to_vec();
    let mut v = [[0.0; 6]; 6];
    (0..6).for_each(|i| v[i][i] = 1.0);

    let col_dot =
        |u: &[[f64; 6]], p: usize, q: usize| -> f64 { u.iter().map(|r| r[p] * r[q]).sum::<f64>() };

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..5 {
            for q in p + 1..6 {
                let alpha = col_dot(&u, p, p);
                let beta = col_dot(&u, q, q);
                let gamma = col_dot(&u, p, q);
                if gamma == 0.0 || gamma.abs() <= 1e-15 * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                for r in u.iter_mut() {
                    let (a, b) = (r[p], r[q]);
                    r[p] = c * a - s * b;
                    r[q] = s * a + c * b;
                }
                for r in v.iter_mut() {
                    let (a, b) = (r[p], r[q]);
                    r[p] = c * a - s * b;
                    r[q] = s * a + c * b;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let sigma: Vec<f64> = (0..6)
        .map(|j| {
            if k == 0 {
                0.0
            } else {
                libm::sqrt(col_dot(&u, j, j))
            }
        })
        .collect();
    let sigma_max = sigma.iter().cloned().fold(0.0, f64::max);
    (0..6)
        .filter(|&j| sigma[j] <= rel_tol * sigma_max)
        .map(|j| {
            let mut x = [0.0; 6];
            (0..6).for_each(|i| x[i] = v[i][j]);
            x
        })
        .collect()
}

/// Reduced row-echelon form of a set of independent rows.
///
/// The result spans the same subspace and does not depend on which basis
/// of it was given, which makes it a canonical basis for reporting. Pivot
/// columns are chosen left to right, taking the largest remaining entry.
pub fn reduced_echelon(rows: &[[f64; 6]]) -> Vec<[f64; 6]> {
    let mut m = rows.to_vec();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0_f64, |a, x| a.max(x.abs()));
    let mut rank = 0;
    for col in 0..6 {
        if rank == m.len() {
            break;
        }
        let (pivot, size) =
            (rank..m.len())
                .map(|i| (i, m[i][col].abs()))
                .fold(
                    (rank, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
        if size <= 1e-9 * scale {
            continue;
        }
        m.swap(rank, pivot);
        let inv = 1.0 / m[rank][col];
        m[rank].iter_mut().for_each(|x| *x *= inv);
        m[rank][col] = 1.0;
        let pivot_row = m[rank];
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank {
                let f = row[col];
                row.iter_mut().zip(pivot_row).for_each(|(x, p)| *x -= f * p);
                row[col] = 0.0;
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    // Pivots are 1, so leftovers of the elimination below this are noise.
    m.iter_mut()
        .flatten()
        .filter(|x| x.abs() < 1e-14)
        .for_each(|x| *x = 0.0);
    m
}
