use crate::error::{Error, Result};
use crate::matcore::DenseMatrix;
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Full spectrum of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending.
///
/// An entry `a_pq` is annihilated while `|a_pq| > eps * sqrt(|a_pp a_qq|)`
/// (or exceeds `eps * ||A||` near a zero diagonal); sweeps stop once a full
/// sweep makes no rotation, so the final off-diagonal Frobenius norm is below
/// `1e-12 * ||A||` in double precision.
pub fn dense_sym_eigen<T: Real>(a: &DenseMatrix<T>) -> Result<Vec<T>> {
    if !a.is_square() {
        return Err(Error::contract("dense_sym_eigen needs a square matrix"));
    }
    let n = a.rows();
    let scale = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .fold(T::zero(), |m, (i, j)| m.max(a[(i, j)].abs()));
    let sym_tol = T::lit(1e-12).max(T::epsilon() * T::lit(100.0)) * scale;
    for i in 0..n {
        for j in 0..i {
            if (a[(i, j)] - a[(j, i)]).abs() > sym_tol {
                return Err(Error::contract(format!(
                    "matrix is not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    let mut m = DenseMatrix::from_fn(n, n, |i, j| if i >= j { a[(i, j)] } else { a[(j, i)] });
    let eps = T::epsilon();
    let floor = eps * a.frobenius_norm();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let thresh = (eps * (app * aqq).abs().sqrt()).max(floor * eps);
                if apq.abs() <= thresh {
                    continue;
                }
                rotated = true;
                rotate(&mut m, p, q);
            }
        }
        if !rotated {
            break;
        }
    }
    let mut eig: Vec<T> = (0..n).map(|i| m[(i, i)]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eig)
}

fn rotate<T: Real>(m: &mut DenseMatrix<T>, p: usize, q: usize) {
    let n = m.rows();
    let apq = m[(p, q)];
    let theta = (m[(q, q)] - m[(p, p)]) / (T::lit(2.0) * apq);
    let t = if theta.abs() > T::lit(1e30) {
        T::one() / (T::lit(2.0) * theta)
    } else {
        let sign = if theta < T::zero() {
            -T::one()
        } else {
            T::one()
        };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        m[(k, p)] = new_p;
        m[(p, k)] = new_p;
        m[(k, q)] = new_q;
        m[(q, k)] = new_q;
    }
    m[(p, p)] = m[(p, p)] - t * apq;
    m[(q, q)] = m[(q, q)] + t * apq;
    m[(p, q)] = T::zero();
    m[(q, p)] = T::zero();
}
