//! Simulation of the β-Jacobi ensemble near its spectral edges.
//!
//! The ensemble is sampled through its bidiagonal matrix model; edge
//! eigenvalues are rescaled to the soft-edge (Airy) and hard-edge (Bessel)
//! scales and compared by Monte Carlo with discretizations of the stochastic
//! Airy operator and of the inverse stochastic Bessel operator.
//!
//! Numerical types are generic over [`Real`] (`f32` or `f64`); the aliases
//! at the bottom of this file fix the scalar to `f64`, which is what the
//! experiments use.
//!
//! ```
//! use betajacobi::{hard_edge_sample, JacobiParams, RngStream};
//!
//! let p = JacobiParams::new(50, 50.0, 100.0, 2.0).unwrap();
//! let mut stream = RngStream::new(7, 0);
//! let smallest: Vec<f64> = hard_edge_sample(&p, 3, &mut stream).unwrap();
//! assert!(smallest[0] > 0.0 && smallest[0] < smallest[1]);
//! ```

pub mod eigencore;
pub mod error;
pub mod jacobi;
pub mod limitops;
pub mod matcore;
pub mod montecarlo;
pub mod randkit;
pub mod scalar;
pub mod stats;

pub use eigencore::{
    dense_sym_eigen, extreme_eigenvalues, full_spectrum, singular_values, sturm_count, Side,
    SpectrumQuery,
};
pub use error::{Error, Result};
pub use jacobi::{
    build_complement, build_hn, build_m, build_w, build_z, density_rho, drift_variance_diagnostic,
    hard_edge_sample, hard_edge_scale, hn_from_angles, sample_angles, sample_matrix_eigenvalues,
    scaling_constants, soft_edge_sample, spectral_edges, DiagnosticReport, DiagnosticRow,
    JacobiAngles, JacobiDensity, JacobiParams, ScalingConstants,
};
pub use limitops::{
    discrete_inverse_kernel, kernel_equivalence_trial, limit_kernel_jacobi, sae_discretize,
    sae_eigenvalues, sbo_eigenvalues, sbo_inverse_kernel, EquivalencePlan, EquivalenceSample,
    GridSpec, KernelForm, KernelOperator, KernelRepresentation, LimitRegime,
};
pub use matcore::{
    det_identities, double, gram, invert_lower_bidiagonal, Bidiagonal, DenseMatrix, DetIdentities,
    Orientation, SymTridiagonal,
};
pub use montecarlo::run_trials;
pub use randkit::{
    beta_joint_moment, sample_beta, sample_brownian, sample_gamma, BrownianPath, RngStream,
};
pub use scalar::Real;
pub use stats::{
    adaptive_simpson, integrate_on_support, ks_two_sample, l1_density_distance, quantiles,
    EmpiricalDistribution, Histogram,
};

pub type Bidiagonal64 = Bidiagonal<f64>;
pub type SymTridiagonal64 = SymTridiagonal<f64>;
pub type DenseMatrix64 = DenseMatrix<f64>;
pub type JacobiAngles64 = JacobiAngles<f64>;
pub type ScalingConstants64 = ScalingConstants<f64>;
pub type BrownianPath64 = BrownianPath<f64>;
pub type GridSpec64 = GridSpec<f64>;
pub type KernelOperator64 = KernelOperator<f64>;
pub type EmpiricalDistribution64 = EmpiricalDistribution<f64>;
