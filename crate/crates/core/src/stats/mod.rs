//! Empirical distributions and the distances used to compare Monte Carlo
//! samples with each other and with limiting densities.

mod empirical;
mod histogram;
mod quadrature;

pub use empirical::{ks_two_sample, quantiles, EmpiricalDistribution};
pub use histogram::{l1_density_distance, Histogram};
pub use quadrature::{adaptive_simpson, integrate_on_support};
