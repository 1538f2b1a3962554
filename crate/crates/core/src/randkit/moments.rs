use num_traits::Num;

use crate::error::{Error, Result};

/// Exact `E[Y^i (1 - Y)^j]` for `Y ~ Beta(p, q)`:
///
/// ```text
///   p (p+1) ... (p+i-1) * q (q+1) ... (q+j-1)
///   -----------------------------------------
///        (p+q) (p+q+1) ... (p+q+i+j-1)
/// ```
///
/// Generic over any numeric field, so rational parameters give exact
/// rational moments.
pub fn beta_joint_moment<T>(p: T, q: T, i: u32, j: u32) -> Result<T>
where
    T: Num + Copy + PartialOrd,
{
    if !(p > T::zero() && q > T::zero()) {
        return Err(Error::param("beta moment parameters must be positive"));
    }
    let mut num = T::one();
    let mut den = T::one();
    let mut offset = T::zero();
    for _ in 0..i {
        num = num * (p + offset);
        offset = offset + T::one();
    }
    offset = T::zero();
    for _ in 0..j {
        num = num * (q + offset);
        offset = offset + T::one();
    }
    offset = T::zero();
    for _ in 0..(i + j) {
        den = den * (p + q + offset);
        offset = offset + T::one();
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn uniform_cross_moment_is_one_sixth() {
        let r = beta_joint_moment(Ratio::from_integer(1i64), Ratio::from_integer(1), 1, 1).unwrap();
        assert_eq!(r, Ratio::new(1, 6));
        let f = beta_joint_moment(1.0f64, 1.0, 1, 1).unwrap();
        assert!((f - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn empty_products_give_one() {
        assert_eq!(beta_joint_moment(2.5f64, 0.7, 0, 0).unwrap(), 1.0);
        assert_eq!(
            beta_joint_moment(Ratio::new(3i64, 2), Ratio::new(7, 3), 0, 0).unwrap(),
            Ratio::from_integer(1)
        );
    }

    #[test]
    fn mean_is_p_over_p_plus_q() {
        assert_eq!(
            beta_joint_moment(Ratio::from_integer(2i64), Ratio::from_integer(3), 1, 0).unwrap(),
            Ratio::new(2, 5)
        );
    }

    #[test]
    fn second_moment_matches_variance_formula() {
        // E Y^2 = Var + mean^2 = pq/((p+q)^2(p+q+1)) + p^2/(p+q)^2
        let (p, q) = (Ratio::new(5i64, 2), Ratio::new(3, 4));
        let s = p + q;
        let expect = p * q / (s * s * (s + Ratio::from_integer(1))) + p * p / (s * s);
        assert_eq!(beta_joint_moment(p, q, 2, 0).unwrap(), expect);
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(beta_joint_moment(0.0f64, 1.0, 1, 1).is_err());
        assert!(beta_joint_moment(1.0f64, -1.0, 1, 1).is_err());
    }
}
