#![allow(dead_code)]

use betajacobi::{Bidiagonal, DenseMatrix, RngStream, SymTridiagonal};

pub fn uniform(rng: &mut RngStream, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.uniform_open01()
}

pub fn random_tridiagonal(rng: &mut RngStream, n: usize) -> SymTridiagonal<f64> {
    let diag = (0..n).map(|_| uniform(rng, -2.0, 2.0)).collect();
    let off = (0..n.saturating_sub(1))
        .map(|_| uniform(rng, -1.5, 1.5))
        .collect();
    SymTridiagonal::new(diag, off).unwrap()
}

pub fn random_lower(rng: &mut RngStream, n: usize) -> Bidiagonal<f64> {
    let diag = (0..n)
        .map(|_| {
            uniform(rng, 0.2, 2.0)
                * if rng.uniform_open01() < 0.5 {
                    -1.0
                } else {
                    1.0
                }
        })
        .collect();
    let off = (0..n - 1).map(|_| uniform(rng, -1.5, 1.5)).collect();
    Bidiagonal::lower(diag, off).unwrap()
}

/// Eigenvalues of a dense symmetric matrix by the classical (largest
/// off-diagonal first) Jacobi method, written independently of the library
/// solver.
pub fn classical_jacobi(a: &DenseMatrix<f64>) -> Vec<f64> {
    let n = a.rows();
    let mut m: Vec<Vec<f64>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    for _ in 0..(50 * n * n).max(10) {
        let (mut p, mut q, mut big) = (0, 1, 0.0);
        for i in 0..n {
            for j in i + 1..n {
                if m[i][j].abs() > big {
                    big = m[i][j].abs();
                    p = i;
                    q = j;
                }
            }
        }
        if big < 1e-300 || n < 2 {
            break;
        }
        let phi = 0.5 * (2.0 * m[p][q]).atan2(m[q][q] - m[p][p]);
        let (s, c) = phi.sin_cos();
        for k in 0..n {
            let (mkp, mkq) = (m[k][p], m[k][q]);
            m[k][p] = c * mkp - s * mkq;
            m[k][q] = s * mkp + c * mkq;
        }
        for k in 0..n {
            let (mpk, mqk) = (m[p][k], m[q][k]);
            m[p][k] = c * mpk - s * mqk;
            m[q][k] = s * mpk + c * mqk;
        }
    }
    let mut e: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    e.sort_by(|x, y| x.partial_cmp(y).unwrap());
    e
}
