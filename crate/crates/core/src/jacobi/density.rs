use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::stats::integrate_on_support;

/// Limiting eigenvalue density for `n1/n -> gamma1`, `n2/n -> gamma2`.
///
/// The shape is `sqrt((L+ - x)(x - L-)) / (x (1 - x))` on `[L-, L+]`. The
/// textbook prefactor `2 pi / (gamma1 + gamma2)` does not give unit mass, so
/// the density is normalized by quadrature; [`JacobiDensity::raw_mass`]
/// reports the mass the unnormalized prefactor would give.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiDensity<T> {
    gamma1: T,
    gamma2: T,
    lambda_minus: T,
    lambda_plus: T,
    shape_mass: T,
}

impl<T: Real> JacobiDensity<T> {
    pub fn new(gamma1: T, gamma2: T) -> Result<Self> {
        if !(gamma1 >= T::one() && gamma2 >= T::one()) || !gamma1.is_finite() || !gamma2.is_finite()
        {
            return Err(Error::param("density needs finite gamma1, gamma2 >= 1"));
        }
        let (lambda_minus, lambda_plus) = spectral_edges(gamma1, gamma2);
        let mut d = Self {
            gamma1,
            gamma2,
            lambda_minus,
            lambda_plus,
            shape_mass: T::one(),
        };
        let tol = T::lit(1e-13).max(T::epsilon() * T::lit(16.0));
        d.shape_mass = integrate_on_support(
            &|x| d.shape(x),
            lambda_minus,
            lambda_plus,
            lambda_minus,
            lambda_plus,
            tol,
        );
        Ok(d)
    }

    pub fn support(&self) -> (T, T) {
        (self.lambda_minus, self.lambda_plus)
    }

    fn shape(&self, x: T) -> T {
        if !(x > self.lambda_minus && x < self.lambda_plus) {
            return T::zero();
        }
        ((self.lambda_plus - x) * (x - self.lambda_minus)).sqrt() / (x * (T::one() - x))
    }

    /// Normalized density; zero outside the support.
    pub fn eval(&self, x: T) -> T {
        self.shape(x) / self.shape_mass
    }

    /// Total mass of `2 pi / (gamma1 + gamma2)` times the shape.
    pub fn raw_mass(&self) -> T {
        T::TAU() / (self.gamma1 + self.gamma2) * self.shape_mass
    }

    /// The prefactor that normalizes the shape; analytically
    /// `(gamma1 + gamma2) / (2 pi)`.
    pub fn normalizing_constant(&self) -> T {
        T::one() / self.shape_mass
    }
}

/// `L_pm = ((sqrt(g1 (g1 + g2 - 1)) pm sqrt(g2)) / (g1 + g2))^2`.
pub fn spectral_edges<T: Real>(gamma1: T, gamma2: T) -> (T, T) {
    let sum = gamma1 + gamma2;
    let a = (gamma1 * (sum - T::one())).sqrt() / sum;
    let b = gamma2.sqrt() / sum;
    ((a - b) * (a - b), (a + b) * (a + b))
}

/// One-off evaluation of the normalized density.
pub fn density_rho<T: Real>(x: T, gamma1: T, gamma2: T) -> Result<T> {
    Ok(JacobiDensity::new(gamma1, gamma2)?.eval(x))
}
