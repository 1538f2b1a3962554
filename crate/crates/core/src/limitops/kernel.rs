use crate::eigencore::{dense_sym_eigen, extreme_eigenvalues, singular_values, SpectrumQuery};
use crate::error::{Error, Result};
use crate::matcore::{Bidiagonal, DenseMatrix, SymTridiagonal};
use crate::scalar::Real;

/// How a dense kernel matrix is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelForm {
    /// Symmetrized kernel `A`; the spectral problem is `psi = lambda A psi`.
    Symmetric,
    /// Lower-triangular kernel `K`; the spectral problem is
    /// `phi = lambda K K^T phi`.
    Volterra,
}

/// Storage of a discretized kernel. The structured forms have exact
/// sparse inverses, which is what makes grids of 10^3 to 10^4 nodes cheap.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelRepresentation<T> {
    Dense {
        matrix: DenseMatrix<T>,
        form: KernelForm,
    },
    /// Symmetric `A_ij = sqrt(w_i w_j) G_{min(i,j)}` with `G` strictly
    /// increasing and positive; `A^{-1}` is tridiagonal.
    MinKernel { cumulative: Vec<T> },
    /// Lower-triangular `K_ij = exp(log_left_i + log_right_j)` for `j <= i`;
    /// `K^{-1}` is lower bidiagonal.
    SemiSeparable { log_left: Vec<T>, log_right: Vec<T> },
}

/// A kernel discretized on `nodes` with quadrature weights folded in.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelOperator<T> {
    nodes: Vec<T>,
    measure_weights: Vec<T>,
    representation: KernelRepresentation<T>,
}

impl<T: Real> KernelOperator<T> {
    pub fn new(
        nodes: Vec<T>,
        measure_weights: Vec<T>,
        representation: KernelRepresentation<T>,
    ) -> Result<Self> {
        let n = nodes.len();
        if n == 0 || measure_weights.len() != n {
            return Err(Error::contract(
                "kernel needs matching nonempty nodes and weights",
            ));
        }
        let ok = match &representation {
            KernelRepresentation::Dense { matrix, .. } => matrix.rows() == n && matrix.cols() == n,
            KernelRepresentation::MinKernel { cumulative } => cumulative.len() == n,
            KernelRepresentation::SemiSeparable {
                log_left,
                log_right,
            } => log_left.len() == n && log_right.len() == n,
        };
        if !ok {
            return Err(Error::contract(
                "kernel representation does not match node count",
            ));
        }
        Ok(Self {
            nodes,
            measure_weights,
            representation,
        })
    }

    pub fn dim(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn measure_weights(&self) -> &[T] {
        &self.measure_weights
    }

    pub fn representation(&self) -> &KernelRepresentation<T> {
        &self.representation
    }

    pub fn form(&self) -> KernelForm {
        match &self.representation {
            KernelRepresentation::Dense { form, .. } => *form,
            KernelRepresentation::MinKernel { .. } => KernelForm::Symmetric,
            KernelRepresentation::SemiSeparable { .. } => KernelForm::Volterra,
        }
    }

    /// The kernel as a dense matrix (symmetrized `A` or triangular `K`).
    pub fn matrix(&self) -> DenseMatrix<T> {
        let n = self.dim();
        match &self.representation {
            KernelRepresentation::Dense { matrix, .. } => matrix.clone(),
            KernelRepresentation::MinKernel { cumulative } => {
                let w = &self.measure_weights;
                DenseMatrix::from_fn(n, n, |i, j| (w[i] * w[j]).sqrt() * cumulative[i.min(j)])
            }
            KernelRepresentation::SemiSeparable {
                log_left,
                log_right,
            } => DenseMatrix::from_fn(n, n, |i, j| {
                if j <= i {
                    (log_left[i] + log_right[j]).exp()
                } else {
                    T::zero()
                }
            }),
        }
    }

    /// The `k` smallest eigenvalues of the spectral problem, ascending:
    /// reciprocals of the top eigenvalues of `A` or of `K K^T`.
    pub fn bottom_spectrum(&self, k: usize) -> Result<Vec<T>> {
        if k == 0 || k > self.dim() {
            return Err(Error::contract(format!(
                "requested {k} eigenvalues of a {}-node kernel",
                self.dim()
            )));
        }
        let out = match &self.representation {
            KernelRepresentation::Dense { .. } => return self.bottom_spectrum_dense(k),
            KernelRepresentation::MinKernel { cumulative } => {
                let t = min_kernel_inverse(cumulative, &self.measure_weights)?;
                extreme_eigenvalues(&t, SpectrumQuery::smallest(k))?
            }
            KernelRepresentation::SemiSeparable {
                log_left,
                log_right,
            } => {
                let b = semiseparable_inverse(log_left, log_right)?;
                singular_values(&b, SpectrumQuery::smallest(k))?
                    .into_iter()
                    .map(|s| s * s)
                    .collect()
            }
        };
        check_positive(out)
    }

    /// [`KernelOperator::bottom_spectrum`] through the dense matrix and the
    /// Jacobi-rotation solver; cost is cubic in the node count.
    pub fn bottom_spectrum_dense(&self, k: usize) -> Result<Vec<T>> {
        if k == 0 || k > self.dim() {
            return Err(Error::contract(format!(
                "requested {k} eigenvalues of a {}-node kernel",
                self.dim()
            )));
        }
        let m = self.matrix();
        let sym = match self.form() {
            KernelForm::Symmetric => m,
            KernelForm::Volterra => m.gram(),
        };
        let eig = dense_sym_eigen(&sym)?;
        let top = &eig[eig.len() - k..];
        if top.iter().any(|&mu| !(mu > T::zero())) {
            return Err(Error::DegenerateDiscretization(
                "kernel has a nonpositive top eigenvalue".into(),
            ));
        }
        Ok(top.iter().rev().map(|&mu| T::one() / mu).collect())
    }
}

fn check_positive<T: Real>(v: Vec<T>) -> Result<Vec<T>> {
    if v.iter().any(|&x| !(x > T::zero()) || !x.is_finite()) {
        return Err(Error::DegenerateDiscretization(
            "inverse spectrum is not positive and finite".into(),
        ));
    }
    Ok(v)
}

/// Tridiagonal inverse of `D^{1/2} G D^{1/2}` with `G_ij = g_{min(i,j)}`:
/// with `d_i = g_i - g_{i-1}` (`g_0 = 0`) the diagonal is
/// `(1/d_i + 1/d_{i+1}) / w_i` (last: `1/(d_N w_N)`) and the off-diagonal
/// `-(1/d_{i+1}) / sqrt(w_i w_{i+1})`.
fn min_kernel_inverse<T: Real>(g: &[T], w: &[T]) -> Result<SymTridiagonal<T>> {
    let n = g.len();
    let mut inv_d = Vec::with_capacity(n);
    let mut prev = T::zero();
    for &gi in g {
        let d = gi - prev;
        if !(d > T::zero()) || !d.is_finite() {
            return Err(Error::DegenerateDiscretization(
                "min-kernel cumulative values must increase".into(),
            ));
        }
        inv_d.push(T::one() / d);
        prev = gi;
    }
    if w.iter().any(|&x| !(x > T::zero()) || !x.is_finite()) {
        return Err(Error::DegenerateDiscretization(
            "measure weights must be positive".into(),
        ));
    }
    let diag = (0..n)
        .map(|i| {
            let next = if i + 1 < n { inv_d[i + 1] } else { T::zero() };
            (inv_d[i] + next) / w[i]
        })
        .collect();
    let off = (0..n - 1)
        .map(|i| -inv_d[i + 1] / (w[i] * w[i + 1]).sqrt())
        .collect();
    SymTridiagonal::new(diag, off)
}

/// Lower bidiagonal inverse of `K = diag(L) * ones_lower * diag(R)`:
/// diagonal `1/(R_i L_i)`, subdiagonal `-1/(R_{i+1} L_i)`.
fn semiseparable_inverse<T: Real>(log_left: &[T], log_right: &[T]) -> Result<Bidiagonal<T>> {
    let n = log_left.len();
    let diag: Vec<T> = (0..n)
        .map(|i| (-(log_left[i] + log_right[i])).exp())
        .collect();
    let sub: Vec<T> = (0..n - 1)
        .map(|i| -(-(log_right[i + 1] + log_left[i])).exp())
        .collect();
    if diag.iter().chain(&sub).any(|v| !v.is_finite()) || diag.iter().any(|&v| v == T::zero()) {
        return Err(Error::DegenerateDiscretization(
            "kernel inverse over- or underflows".into(),
        ));
    }
    Bidiagonal::lower(diag, sub)
}
