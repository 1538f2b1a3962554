//! The β-Jacobi ensemble: parameters, angle sampling, the bidiagonal models
//! `M` and `W`, edge scaling constants, the limiting spectral density, the
//! soft-edge matrix `H_n`, and rescaled edge samples.

mod density;
mod diagnostic;
mod edges;
mod model;
mod params;
mod scaling;

pub use density::{density_rho, spectral_edges, JacobiDensity};
pub use diagnostic::{drift_variance_diagnostic, DiagnosticReport, DiagnosticRow};
pub use edges::{build_hn, hard_edge_sample, hard_edge_scale, hn_from_angles, soft_edge_sample};
pub use model::{build_complement, build_m, build_w, build_z, sample_matrix_eigenvalues};
pub use params::{sample_angles, JacobiAngles, JacobiParams};
pub use scaling::{scaling_constants, ScalingConstants};
