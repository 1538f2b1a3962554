use super::GridSpec;
use crate::eigencore::{extreme_eigenvalues, SpectrumQuery};
use crate::error::{Error, Result};
use crate::matcore::SymTridiagonal;
use crate::randkit::BrownianPath;
use crate::scalar::Real;

fn noise_scale<T: Real>(beta: T) -> Result<T> {
    if !(beta > T::zero()) {
        return Err(Error::param(format!("beta must be positive, got {beta}")));
    }
    // beta = +inf switches the noise off
    Ok(T::lit(2.0) / beta.sqrt())
}

/// Finite-difference matrix of `-d^2/dx^2 + x + (2/sqrt(beta)) b'(x)` on the
/// interior nodes `x_i = i h`, `i = 1..N-1`, with Dirichlet conditions at 0
/// and `L`. The white noise enters as the forward increment
/// `(b((i+1)h) - b(ih)) / h`.
pub fn sae_discretize<T: Real>(
    beta: T,
    grid: &GridSpec<T>,
    path: &BrownianPath<T>,
) -> Result<SymTridiagonal<T>> {
    sae_discretize_with_slope(beta, T::one(), grid, path)
}

/// As [`sae_discretize`] with potential `slope * x`.
pub(crate) fn sae_discretize_with_slope<T: Real>(
    beta: T,
    slope: T,
    grid: &GridSpec<T>,
    path: &BrownianPath<T>,
) -> Result<SymTridiagonal<T>> {
    let sigma = noise_scale(beta)?;
    grid.check_path(path)?;
    let h = grid.step();
    let inv_h2 = T::one() / (h * h);
    let b = path.values();
    let interior = grid.cells() - 1;
    let diag = (1..=interior)
        .map(|i| {
            let noise = if sigma == T::zero() {
                T::zero()
            } else {
                sigma * (b[i + 1] - b[i]) / h
            };
            T::lit(2.0) * inv_h2 + slope * grid.node(i) + noise
        })
        .collect();
    let off = vec![-inv_h2; interior - 1];
    SymTridiagonal::new(diag, off)
}

/// The `k` lowest eigenvalues `Lambda_0 < ... < Lambda_{k-1}` of the
/// discretized operator, bisected to floating-point resolution.
pub fn sae_eigenvalues<T: Real>(
    beta: T,
    grid: &GridSpec<T>,
    path: &BrownianPath<T>,
    k: usize,
) -> Result<Vec<T>> {
    let t = sae_discretize(beta, grid, path)?;
    extreme_eigenvalues(&t, SpectrumQuery::smallest(k))
}
