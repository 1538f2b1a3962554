use crate::jacobi::JacobiAngles;
use crate::scalar::Real;

/// Closed-form determinants of the ensemble matrix in terms of its angles,
/// stored as logarithms because the raw products underflow for moderate n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetIdentities<T> {
    /// `log prod_i lambda_i = sum log C_k^2 + sum log St_k^2`.
    pub log_prod_lambda: T,
    /// `log prod_i (1 - lambda_i) = sum log S_k^2 + sum log St_k^2`.
    pub log_prod_one_minus: T,
}

impl<T: Real> DetIdentities<T> {
    pub fn prod_lambda(&self) -> T {
        self.log_prod_lambda.exp()
    }

    pub fn prod_one_minus(&self) -> T {
        self.log_prod_one_minus.exp()
    }
}

/// Predicted `prod lambda_i` and `prod (1 - lambda_i)` for the eigenvalues of
/// `M M^T` built from `angles`.
pub fn det_identities<T: Real>(angles: &JacobiAngles<T>) -> DetIdentities<T> {
    let two = T::lit(2.0);
    let log_sq = |v: T| two * v.abs().ln();
    let shared: T = angles.st().iter().map(|&v| log_sq(v)).sum();
    DetIdentities {
        log_prod_lambda: angles.c().iter().map(|&v| log_sq(v)).sum::<T>() + shared,
        log_prod_one_minus: angles.s().iter().map(|&v| log_sq(v)).sum::<T>() + shared,
    }
}
