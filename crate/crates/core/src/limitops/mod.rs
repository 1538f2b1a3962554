//! Discretizations of the edge limit operators: the stochastic Airy operator
//! as a random tridiagonal matrix, the inverse of the stochastic Bessel
//! operator as a weighted min-kernel, and the lower-triangular kernels whose
//! `(K K^T)^{-1}` spectra describe the hard edge (both the discrete kernel
//! of a finite matrix and its continuum limit).

mod equivalence;
mod grid;
mod kernel;
mod limit_kernel;
mod sae;
mod sbo;

pub use equivalence::{kernel_equivalence_trial, EquivalencePlan, EquivalenceSample};
pub use grid::GridSpec;
pub use kernel::{KernelForm, KernelOperator, KernelRepresentation};
pub use limit_kernel::{discrete_inverse_kernel, limit_kernel_jacobi, LimitRegime};
pub use sae::{sae_discretize, sae_eigenvalues};
pub use sbo::{sbo_eigenvalues, sbo_inverse_kernel};
