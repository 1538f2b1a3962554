use super::{GridSpec, KernelOperator, KernelRepresentation};
use crate::error::{Error, Result};
use crate::randkit::BrownianPath;
use crate::scalar::Real;

/// Discretized inverse of the stochastic Bessel operator
/// `G^{-1} psi(x) = int_0^inf g(x, y) psi(y) m(dy)` with
/// `g(x, y) = int_0^{x ^ y} exp(a z + (2/sqrt(beta)) b(z)) dz` and
/// `m(dy) = exp(-(a+1) y - (2/sqrt(beta)) b(y)) dy`.
///
/// Nodes are `x_i = i h` on `(0, L]`; `g` is the trapezoid cumulative
/// integral on the path grid and the weights are
/// `w_j = h exp(-(a+1) x_j - (2/sqrt(beta)) b(x_j))`. The
/// symmetrized matrix is `A_ij = sqrt(w_i w_j) g(x_i, x_j)`.
pub fn sbo_inverse_kernel<T: Real>(
    beta: T,
    a: T,
    grid: &GridSpec<T>,
    path: &BrownianPath<T>,
) -> Result<KernelOperator<T>> {
    if !(a > -T::one()) {
        return Err(Error::param(format!(
            "Bessel exponent a must exceed -1, got {a}"
        )));
    }
    if !(beta > T::zero()) {
        return Err(Error::param(format!("beta must be positive, got {beta}")));
    }
    grid.check_path(path)?;
    let sigma = T::lit(2.0) / beta.sqrt();
    let h = grid.step();
    let b = path.values();
    let cells = grid.cells();
    let half = T::lit(0.5);
    let noise = |i: usize| {
        if sigma == T::zero() {
            T::zero()
        } else {
            sigma * b[i]
        }
    };
    let integrand = |i: usize| (a * grid.node(i) + noise(i)).exp();
    let mut cumulative = Vec::with_capacity(cells);
    let mut weights = Vec::with_capacity(cells);
    let mut nodes = Vec::with_capacity(cells);
    let mut acc = T::zero();
    let mut prev = integrand(0);
    for i in 1..=cells {
        let cur = integrand(i);
        acc = acc + half * h * (prev + cur);
        prev = cur;
        cumulative.push(acc);
        let x = grid.node(i);
        nodes.push(x);
        weights.push(h * (-(a + T::one()) * x - noise(i)).exp());
    }
    KernelOperator::new(
        nodes,
        weights,
        KernelRepresentation::MinKernel { cumulative },
    )
}

/// `Lambda_0 < ... < Lambda_{k-1}` of the operator whose inverse `op`
/// discretizes: reciprocals of the top eigenvalues of the kernel matrix.
pub fn sbo_eigenvalues<T: Real>(op: &KernelOperator<T>, k: usize) -> Result<Vec<T>> {
    op.bottom_spectrum(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randkit::{sample_brownian, RngStream};

    #[test]
    fn deterministic_limit_is_bessel_zero() {
        // beta = inf, a = 0: -e^x f'' = lambda f, f(0) = 0, f'(inf) = 0 is solved
        // by J_0(2 sqrt(lambda) e^{-x/2}), so Lambda_0 = j_{0,1}^2 / 4
        let g = GridSpec::new(10.0, 1e-2).unwrap();
        let path = BrownianPath::zero(1e-2, g.cells());
        let op = sbo_inverse_kernel(f64::INFINITY, 0.0, &g, &path).unwrap();
        let ev = sbo_eigenvalues(&op, 2).unwrap();
        let j01 = 2.404_825_557_695_773f64;
        assert!((ev[0] / (j01 * j01 / 4.0) - 1.0).abs() < 1e-3, "{}", ev[0]);
    }

    #[test]
    fn symmetric_nonnegative_matrix() {
        let g = GridSpec::new(2.0, 0.1).unwrap();
        let path = sample_brownian(2.0, 0.1, &mut RngStream::new(4, 0)).unwrap();
        let op = sbo_inverse_kernel(2.0, 0.5, &g, &path).unwrap();
        let m = op.matrix();
        for i in 0..op.dim() {
            for j in 0..op.dim() {
                assert_eq!(m[(i, j)], m[(j, i)]);
            }
        }
        let eig = crate::eigencore::dense_sym_eigen(&m).unwrap();
        assert!(eig[0] > -1e-12);
        let ev = sbo_eigenvalues(&op, 3).unwrap();
        assert!(ev.windows(2).all(|w| w[0] < w[1]) && ev[0] > 0.0);
    }

    #[test]
    fn rejects_exponent_at_minus_one() {
        let g = GridSpec::new(1.0, 0.1).unwrap();
        let path = BrownianPath::zero(0.1, 10);
        assert!(sbo_inverse_kernel(2.0, -1.0, &g, &path).is_err());
    }
}
