use super::{GridSpec, KernelOperator, KernelRepresentation};
use crate::error::{Error, Result};
use crate::matcore::{Bidiagonal, Orientation};
use crate::randkit::BrownianPath;
use crate::scalar::Real;

/// Growth regime of `n2` relative to `n` at the hard edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitRegime<T> {
    /// `n2 / n -> gamma >= 1`.
    Gamma(T),
    /// `n2 / n -> inf`.
    Infinite,
}

impl<T: Real> LimitRegime<T> {
    fn validate(&self) -> Result<()> {
        match *self {
            LimitRegime::Gamma(g) if !(g >= T::one() && g.is_finite()) => Err(Error::param(
                format!("gamma must be finite and at least 1, got {g}"),
            )),
            _ => Ok(()),
        }
    }

    /// Prefactor `r(x)`.
    pub fn r(&self, x: T) -> T {
        match *self {
            LimitRegime::Gamma(g) => {
                let one = T::one();
                (T::lit(2.0) * x + g - one) / (g.sqrt() * (x * (x + g - one)).sqrt())
            }
            LimitRegime::Infinite => x.sqrt().recip(),
        }
    }

    /// Drift potential `s(x)`; the kernel carries `exp(s(x) - s(y))`.
    pub fn s(&self, a: T, x: T) -> T {
        let half = T::lit(0.5);
        match *self {
            LimitRegime::Gamma(g) => {
                let one = T::one();
                -half * a * x.ln()
                    - half * (T::lit(2.0) * x + g - one).ln()
                    - half * a * (x + g - one).ln()
            }
            LimitRegime::Infinite => -half * a * x.ln(),
        }
    }

    /// Noise intensity `phi(x)`; zero when `beta` is infinite.
    pub fn phi(&self, beta: T, x: T) -> T {
        match *self {
            LimitRegime::Gamma(g) => {
                let one = T::one();
                ((T::lit(2.0) * x + g - one) / (beta * x * (x + g - one))).sqrt()
            }
            LimitRegime::Infinite => (beta * x).sqrt().recip(),
        }
    }

    /// Time change `u(x)` with `du = beta phi(x)^2 dx` and `u(1) = 0`, under
    /// which the kernel's spectral problem becomes the Bessel one.
    pub fn bessel_time(&self, x: T) -> T {
        match *self {
            LimitRegime::Gamma(g) => (g / (x * (x + g - T::one()))).ln(),
            LimitRegime::Infinite => -x.ln(),
        }
    }
}

/// Left-point sums `Phi_i = sum_{j<i} phi(x_j) (B(x_{j+1}) - B(x_j))`,
/// i.e. `int_{x_1}^{x_i} phi dB`, on nodes `x_i = i h`, `i = 1..=N`.
pub(crate) fn ito_sums<T: Real>(
    regime: &LimitRegime<T>,
    beta: T,
    grid: &GridSpec<T>,
    path: &BrownianPath<T>,
) -> Vec<T> {
    let cells = grid.cells();
    let b = path.values();
    let mut out = Vec::with_capacity(cells);
    let mut acc = T::zero();
    for i in 1..=cells {
        out.push(acc);
        if i < cells {
            let phi = regime.phi(beta, grid.node(i));
            if phi != T::zero() {
                acc = acc + phi * (b[i + 1] - b[i]);
            }
        }
    }
    out
}

/// Discretized limit kernel
/// `k(x, y) = r(x) exp(s(x) - s(y) + int_y^x phi dB) 1(y <= x)` on the nodes
/// `x_i = i h` of `(0, 1]`, as the semiseparable matrix `K_ij = h k(x_i, x_j)`.
///
/// The grid must have length 1; it starts at `h`, away from the singularity
/// of `r` and `s` at the origin.
pub fn limit_kernel_jacobi<T: Real>(
    regime: LimitRegime<T>,
    a: T,
    beta: T,
    grid: &GridSpec<T>,
    path: &BrownianPath<T>,
) -> Result<KernelOperator<T>> {
    regime.validate()?;
    if !(a > -T::one()) {
        return Err(Error::param(format!("a must exceed -1, got {a}")));
    }
    if !(beta > T::zero()) {
        return Err(Error::param(format!("beta must be positive, got {beta}")));
    }
    if (grid.length() - T::one()).abs() > T::lit(1e-12) {
        return Err(Error::contract(
            "limit kernel lives on (0, 1]; grid length must be 1",
        ));
    }
    grid.check_path(path)?;
    let h = grid.step();
    let phi = ito_sums(&regime, beta, grid, path);
    let nodes: Vec<T> = (1..=grid.cells()).map(|i| grid.node(i)).collect();
    let log_h = h.ln();
    let log_left = nodes
        .iter()
        .zip(&phi)
        .map(|(&x, &p)| log_h + regime.r(x).ln() + regime.s(a, x) + p)
        .collect();
    let log_right = nodes
        .iter()
        .zip(&phi)
        .map(|(&x, &p)| -regime.s(a, x) - p)
        .collect();
    let weights = vec![h; nodes.len()];
    KernelOperator::new(
        nodes,
        weights,
        KernelRepresentation::SemiSeparable {
            log_left,
            log_right,
        },
    )
}

/// Step-kernel operator of `(sqrt(m_n) W)^{-1}` on `(0, 1]` with nodes `i/n`:
/// `K_ij = (1/a_i) prod_{k=j}^{i-1} b_k / a_k` for `j <= i`, where `a` is the
/// diagonal and `-b` the subdiagonal of `sqrt(m_n) W`.
///
/// `(K K^T)^{-1} = m_n W^T W`, so its spectrum is `m_n spec(W W^T)`.
pub fn discrete_inverse_kernel<T: Real>(w: &Bidiagonal<T>, m_n: T) -> Result<KernelOperator<T>> {
    if w.orientation() != Orientation::Lower {
        return Err(Error::contract(
            "discrete_inverse_kernel needs a lower bidiagonal matrix",
        ));
    }
    if !(m_n > T::zero()) {
        return Err(Error::param("m_n must be positive"));
    }
    if let Some(index) = w.diag().iter().position(|&d| d == T::zero()) {
        return Err(Error::Singular { index });
    }
    if w.diag().iter().any(|&d| d < T::zero()) || w.offdiag().iter().any(|&e| e >= T::zero()) {
        return Err(Error::contract(
            "expected a positive diagonal and negative subdiagonal",
        ));
    }
    let n = w.dim();
    let root = m_n.sqrt();
    let log_a: Vec<T> = w.diag().iter().map(|&d| (root * d).ln()).collect();
    let log_b: Vec<T> = w.offdiag().iter().map(|&e| (-root * e).ln()).collect();
    // P_i = sum_{k<i} log(b_k / a_k)
    let mut p = Vec::with_capacity(n);
    let mut acc = T::zero();
    for i in 0..n {
        p.push(acc);
        if i + 1 < n {
            acc = acc + log_b[i] - log_a[i];
        }
    }
    let log_left = (0..n).map(|i| p[i] - log_a[i]).collect();
    let log_right = p.iter().map(|&v| -v).collect();
    let inv_n = T::one() / T::from_count(n);
    let nodes = (1..=n).map(|i| T::from_count(i) * inv_n).collect();
    KernelOperator::new(
        nodes,
        vec![inv_n; n],
        KernelRepresentation::SemiSeparable {
            log_left,
            log_right,
        },
    )
}
