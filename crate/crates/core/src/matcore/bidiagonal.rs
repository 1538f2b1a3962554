use super::{DenseMatrix, SymTridiagonal};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Off-diagonal entries sit below the diagonal, at `(k+1, k)`.
    Lower,
    /// Off-diagonal entries sit above the diagonal, at `(k, k+1)`.
    Upper,
}

/// Square bidiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Bidiagonal<T> {
    diag: Vec<T>,
    offdiag: Vec<T>,
    orientation: Orientation,
}

impl<T: Real> Bidiagonal<T> {
    pub fn new(diag: Vec<T>, offdiag: Vec<T>, orientation: Orientation) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::contract(
                "bidiagonal matrix must have dimension >= 1",
            ));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::contract(format!(
                "off-diagonal length {} does not match dimension {}",
                offdiag.len(),
                diag.len()
            )));
        }
        Ok(Self {
            diag,
            offdiag,
            orientation,
        })
    }

    pub fn lower(diag: Vec<T>, offdiag: Vec<T>) -> Result<Self> {
        Self::new(diag, offdiag, Orientation::Lower)
    }

    pub fn upper(diag: Vec<T>, offdiag: Vec<T>) -> Result<Self> {
        Self::new(diag, offdiag, Orientation::Upper)
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[T] {
        &self.offdiag
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self {
            diag: self.diag.iter().map(|&x| factor * x).collect(),
            offdiag: self.offdiag.iter().map(|&x| factor * x).collect(),
            orientation: self.orientation,
        }
    }

    pub fn transpose(&self) -> Self {
        let orientation = match self.orientation {
            Orientation::Lower => Orientation::Upper,
            Orientation::Upper => Orientation::Lower,
        };
        Self {
            diag: self.diag.clone(),
            offdiag: self.offdiag.clone(),
            orientation,
        }
    }

    /// `P B P` with `P` the index-reversal permutation; turns a lower
    /// bidiagonal into an upper one and vice versa.
    pub fn reversed(&self) -> Self {
        let mut out = self.transpose();
        out.diag.reverse();
        out.offdiag.reverse();
        out
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
        }
        for (k, &v) in self.offdiag.iter().enumerate() {
            match self.orientation {
                Orientation::Lower => m[(k + 1, k)] = v,
                Orientation::Upper => m[(k, k + 1)] = v,
            }
        }
        m
    }
}

/// `B B^T` as a symmetric tridiagonal matrix.
///
/// For lower `B` with diagonal `x` and subdiagonal `y` the diagonal is
/// `x_1^2, x_k^2 + y_{k-1}^2` and the off-diagonal `x_k y_k`.
pub fn gram<T: Real>(b: &Bidiagonal<T>) -> SymTridiagonal<T> {
    let n = b.dim();
    let x = &b.diag;
    let y = &b.offdiag;
    let (diag, offdiag) = match b.orientation {
        Orientation::Lower => {
            let diag = (0..n)
                .map(|k| {
                    if k == 0 {
                        x[0] * x[0]
                    } else {
                        x[k] * x[k] + y[k - 1] * y[k - 1]
                    }
                })
                .collect();
            let off = (0..n - 1).map(|k| x[k] * y[k]).collect();
            (diag, off)
        }
        Orientation::Upper => {
            let diag = (0..n)
                .map(|k| {
                    if k + 1 == n {
                        x[k] * x[k]
                    } else {
                        x[k] * x[k] + y[k] * y[k]
                    }
                })
                .collect();
            let off = (0..n - 1).map(|k| y[k] * x[k + 1]).collect();
            (diag, off)
        }
    };
    SymTridiagonal::new(diag, offdiag).expect("gram of a valid bidiagonal is well formed")
}

/// The `2n x 2n` zero-diagonal tridiagonal matrix with off-diagonal
/// `a_1, b_1, a_2, ..., b_{n-1}, a_n`; its eigenvalues are `±σ_i(B)`.
pub fn double<T: Real>(b: &Bidiagonal<T>) -> SymTridiagonal<T> {
    let n = b.dim();
    let mut off = Vec::with_capacity(2 * n - 1);
    for k in 0..n {
        off.push(b.diag[k]);
        if k + 1 < n {
            off.push(b.offdiag[k]);
        }
    }
    SymTridiagonal::new(vec![T::zero(); 2 * n], off).expect("doubled matrix is well formed")
}

/// Exact inverse of a lower bidiagonal matrix.
///
/// With diagonal `a` and subdiagonal `-b`, entry `(i, j)` for `j <= i` is
/// `(1/a_i) prod_{k=j}^{i-1} b_k / a_k`. Each column is built by the
/// multiplicative recurrence; a column whose running product under- or
/// overflows is recomputed from log-magnitudes and sign parities.
pub fn invert_lower_bidiagonal<T: Real>(b: &Bidiagonal<T>) -> Result<DenseMatrix<T>> {
    if b.orientation != Orientation::Lower {
        return Err(Error::contract(
            "invert_lower_bidiagonal needs a lower bidiagonal matrix",
        ));
    }
    if let Some(index) = b.diag.iter().position(|&a| a == T::zero()) {
        return Err(Error::Singular { index });
    }
    let n = b.dim();
    let a = &b.diag;
    // ratio_k = b_k / a_k with b_k = -offdiag_k, linking row k to row k+1
    let ratio: Vec<T> = (0..n - 1).map(|k| -b.offdiag[k] / a[k]).collect();
    let mut inv = DenseMatrix::zeros(n, n);
    for j in 0..n {
        // X_{jj} = 1/a_j, X_{i,j} = X_{i-1,j} * (b_{i-1}/a_{i-1}) * a_{i-1}/a_i
        let mut chain = T::one(); // prod_{k=j}^{i-1} ratio_k
        let mut broken = false;
        for i in j..n {
            if i > j {
                let next = chain * ratio[i - 1];
                if !next.is_finite()
                    || (next == T::zero() && chain != T::zero() && ratio[i - 1] != T::zero())
                {
                    broken = true;
                    break;
                }
                chain = next;
            }
            inv[(i, j)] = chain / a[i];
        }
        if broken {
            fill_column_log_space(&mut inv, a, &ratio, j);
        }
    }
    Ok(inv)
}

fn fill_column_log_space<T: Real>(inv: &mut DenseMatrix<T>, a: &[T], ratio: &[T], j: usize) {
    let n = a.len();
    let mut log_mag = T::zero();
    let mut negative = false;
    for i in j..n {
        if i > j {
            let r = ratio[i - 1];
            log_mag = log_mag + r.abs().ln();
            negative ^= r < T::zero();
        }
        let mag = (log_mag - a[i].abs().ln()).exp();
        let neg = negative ^ (a[i] < T::zero());
        inv[(i, j)] = if neg { -mag } else { mag };
    }
}
