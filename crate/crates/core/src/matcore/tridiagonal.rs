use super::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric tridiagonal matrix stored by its diagonal and first
/// off-diagonal. The spectrum depends on the off-diagonal only through
/// absolute values.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal<T> {
    diag: Vec<T>,
    offdiag: Vec<T>,
}

impl<T: Real> SymTridiagonal<T> {
    pub fn new(diag: Vec<T>, offdiag: Vec<T>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::contract(
                "tridiagonal matrix must have dimension >= 1",
            ));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::contract(format!(
                "off-diagonal length {} does not match dimension {}",
                offdiag.len(),
                diag.len()
            )));
        }
        Ok(Self { diag, offdiag })
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

    /// Interval containing every eigenvalue (union of Gershgorin discs).
    pub fn gershgorin_bounds(&self) -> (T, T) {
        let n = self.dim();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let left = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                T::zero()
            };
            let right = if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                T::zero()
            };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Infinity norm; equals the largest Gershgorin radius plus centre.
    pub fn norm_inf(&self) -> T {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let left = if i > 0 {
                    self.offdiag[i - 1].abs()
                } else {
                    T::zero()
                };
                let right = if i + 1 < n {
                    self.offdiag[i].abs()
                } else {
                    T::zero()
                };
                self.diag[i].abs() + left + right
            })
            .fold(T::zero(), T::max)
    }

    pub fn trace(&self) -> T {
        self.diag.iter().copied().sum()
    }

    /// The leading `m x m` principal submatrix.
    pub fn leading(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.dim() {
            return Err(Error::contract(format!(
                "leading block size {m} out of range"
            )));
        }
        Self::new(self.diag[..m].to_vec(), self.offdiag[..m - 1].to_vec())
    }

    /// `scale * self + shift * I`.
    pub fn affine(&self, scale: T, shift: T) -> Self {
        Self {
            diag: self.diag.iter().map(|&d| scale * d + shift).collect(),
            offdiag: self.offdiag.iter().map(|&e| scale * e).collect(),
        }
    }

    /// Copy with the `i`-th off-diagonal entry negated.
    pub fn with_flipped_sign(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.offdiag[i] = -out.offdiag[i];
        out
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
            if i + 1 < n {
                m[(i, i + 1)] = self.offdiag[i];
                m[(i + 1, i)] = self.offdiag[i];
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks_lengths() {
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![1.0]).is_ok());
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymTridiagonal::<f64>::new(vec![], vec![]).is_err());
    }

    #[test]
    fn gershgorin_contains_known_spectrum() {
        let t = SymTridiagonal::new(vec![2.0, 2.0], vec![1.0]).unwrap();
        let (lo, hi) = t.gershgorin_bounds();
        assert!(lo <= 1.0 && hi >= 3.0);
        assert_eq!(t.norm_inf(), 3.0);
        let d = t.to_dense();
        assert_eq!(d[(0, 1)], 1.0);
        assert_eq!(d[(1, 0)], 1.0);
    }
}
