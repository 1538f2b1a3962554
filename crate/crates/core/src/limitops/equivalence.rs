use super::limit_kernel::ito_sums;
use super::{limit_kernel_jacobi, sbo_eigenvalues, sbo_inverse_kernel, GridSpec, LimitRegime};
use crate::error::{Error, Result};
use crate::randkit::{sample_brownian, BrownianPath, RngStream};
use crate::scalar::Real;

/// Discretization settings for comparing the limit kernel with the Bessel
/// operator driven by the time-changed noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalencePlan<T> {
    pub regime: LimitRegime<T>,
    pub a: T,
    pub beta: T,
    /// Step of the kernel grid on `(0, 1]`.
    pub x_step: T,
    /// Truncation length of the Bessel grid (capped by the time of the first
    /// kernel node).
    pub u_length: T,
    pub u_step: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceSample<T> {
    /// Lowest eigenvalue of `(K K^T)^{-1}` for the limit kernel.
    pub kernel_lambda0: T,
    /// Lowest eigenvalue of the Bessel operator on the transported path.
    pub bessel_lambda0: T,
}

impl<T: Real> EquivalenceSample<T> {
    pub fn relative_discrepancy(&self) -> T {
        ((self.kernel_lambda0 - self.bessel_lambda0) / self.bessel_lambda0).abs()
    }
}

/// Samples one Brownian path on `(0, 1]`, builds the limit kernel from it,
/// maps the same noise to the Bessel time `u(x)` as
/// `b(u(x)) = -sqrt(beta) int_x^1 phi dB`, and returns both lowest
/// eigenvalues.
pub fn kernel_equivalence_trial<T: Real>(
    plan: &EquivalencePlan<T>,
    stream: &mut RngStream,
) -> Result<EquivalenceSample<T>> {
    if !(plan.beta > T::zero() && plan.beta.is_finite()) {
        return Err(Error::param("equivalence needs finite positive beta"));
    }
    let x_grid = GridSpec::new(T::one(), plan.x_step)?;
    let path = sample_brownian(T::one(), plan.x_step, stream)?;
    let kernel = limit_kernel_jacobi(plan.regime, plan.a, plan.beta, &x_grid, &path)?;
    let kernel_lambda0 = kernel.bottom_spectrum(1)?[0];

    let phi = ito_sums(&plan.regime, plan.beta, &x_grid, &path);
    let total = *phi.last().expect("grid has nodes");
    let root_beta = plan.beta.sqrt();
    // (u, b(u)) pairs with u ascending, from x = 1 down to x = h
    let mut times = Vec::with_capacity(phi.len());
    let mut values = Vec::with_capacity(phi.len());
    for i in (0..phi.len()).rev() {
        let x = x_grid.node(i + 1);
        times.push(plan.regime.bessel_time(x));
        values.push(-root_beta * (total - phi[i]));
    }
    let u_max = *times.last().expect("grid has nodes");
    let u_length = plan.u_length.min(u_max);
    let u_grid = GridSpec::new(u_length, plan.u_step)?;
    let mut resampled = Vec::with_capacity(u_grid.points());
    let mut seg = 0;
    for i in 0..u_grid.points() {
        let u = u_grid.node(i);
        while seg + 2 < times.len() && times[seg + 1] < u {
            seg += 1;
        }
        let (u0, u1) = (times[seg], times[seg + 1]);
        let t = ((u - u0) / (u1 - u0)).max(T::zero()).min(T::one());
        resampled.push(values[seg] + t * (values[seg + 1] - values[seg]));
    }
    resampled[0] = T::zero();
    let bessel_path = BrownianPath::from_values(plan.u_step, resampled)?;
    let op = sbo_inverse_kernel(plan.beta, plan.a, &u_grid, &bessel_path)?;
    let bessel_lambda0 = sbo_eigenvalues(&op, 1)?[0];
    Ok(EquivalenceSample {
        kernel_lambda0,
        bessel_lambda0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transported_path_starts_at_zero_and_runs() {
        let plan = EquivalencePlan {
            regime: LimitRegime::Gamma(2.0),
            a: 0.0,
            beta: 2.0,
            x_step: 1e-3,
            u_length: 6.0,
            u_step: 0.02,
        };
        let s = kernel_equivalence_trial(&plan, &mut RngStream::new(8, 3)).unwrap();
        assert!(s.kernel_lambda0 > 0.0 && s.bessel_lambda0 > 0.0);
    }
}
