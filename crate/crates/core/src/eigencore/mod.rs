//! Eigenvalue solvers: Sturm-sequence bisection for symmetric tridiagonal
//! matrices (extreme or full spectra, singular values of bidiagonals via the
//! doubled matrix) and a cyclic Jacobi solver for dense symmetric matrices.

mod bisection;
mod jacobi_rotation;

pub use bisection::{
    extreme_eigenvalues, full_spectrum, singular_values, sturm_count, Side, SpectrumQuery,
};
pub use jacobi_rotation::dense_sym_eigen;
