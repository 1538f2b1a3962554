use crate::error::{Error, Result};
use crate::scalar::Real;

/// A sorted, nonempty sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution<T> {
    samples: Vec<T>,
}

impl<T: Real> EmpiricalDistribution<T> {
    pub fn new(mut samples: Vec<T>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        if samples.iter().any(|x| x.is_nan()) {
            return Err(Error::param("sample contains NaN"));
        }
        samples.sort_by(|a, b| a.partial_cmp(b).expect("NaN filtered above"));
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn count(&self) -> usize {
        self.samples.len()
    }

    pub fn min(&self) -> T {
        self.samples[0]
    }

    pub fn max(&self) -> T {
        self.samples[self.samples.len() - 1]
    }

    /// Fraction of samples `<= x`.
    pub fn ecdf(&self, x: T) -> T {
        let below = self.samples.partition_point(|&s| s <= x);
        T::from_count(below) / T::from_count(self.count())
    }

    pub fn mean(&self) -> T {
        self.samples.iter().copied().sum::<T>() / T::from_count(self.count())
    }

    /// Unbiased sample variance; zero for a single sample.
    pub fn variance(&self) -> T {
        let n = self.count();
        if n < 2 {
            return T::zero();
        }
        let m = self.mean();
        self.samples.iter().map(|&x| (x - m) * (x - m)).sum::<T>() / T::from_count(n - 1)
    }

    /// Order-statistic quantile with linear interpolation between
    /// neighbouring order statistics (position `(n-1) p`).
    pub fn quantile(&self, p: T) -> Result<T> {
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::param(format!("probability {p} outside [0, 1]")));
        }
        let n = self.count();
        let h = p * T::from_count(n - 1);
        let lo = h.floor().to_usize().unwrap_or(0).min(n - 1);
        let hi = (lo + 1).min(n - 1);
        let frac = h - T::from_count(lo);
        let (a, b) = (self.samples[lo], self.samples[hi]);
        Ok(if frac == T::zero() {
            a
        } else {
            a + frac * (b - a)
        })
    }
}

pub fn quantiles<T: Real>(d: &EmpiricalDistribution<T>, probs: &[T]) -> Result<Vec<T>> {
    probs.iter().map(|&p| d.quantile(p)).collect()
}

/// Two-sample Kolmogorov–Smirnov statistic: the sup-norm distance between
/// the two empirical CDFs, by a merge scan over both sorted samples.
pub fn ks_two_sample<T: Real>(a: &EmpiricalDistribution<T>, b: &EmpiricalDistribution<T>) -> T {
    let (xa, xb) = (a.samples(), b.samples());
    let (na, nb) = (T::from_count(xa.len()), T::from_count(xb.len()));
    let (mut i, mut j) = (0, 0);
    let mut d = T::zero();
    while i < xa.len() && j < xb.len() {
        let x = xa[i].min(xb[j]);
        while i < xa.len() && xa[i] <= x {
            i += 1;
        }
        while j < xb.len() && xb[j] <= x {
            j += 1;
        }
        d = d.max((T::from_count(i) / na - T::from_count(j) / nb).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(v: &[f64]) -> EmpiricalDistribution<f64> {
        EmpiricalDistribution::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_and_nan_are_rejected() {
        assert_eq!(
            EmpiricalDistribution::<f64>::new(vec![]).unwrap_err(),
            Error::EmptySample
        );
        assert!(EmpiricalDistribution::new(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn ks_identical_and_disjoint() {
        let a = dist(&[1.0, 2.0, 3.0]);
        assert_eq!(ks_two_sample(&a, &a), 0.0);
        let b = dist(&[10.0, 11.0]);
        assert_eq!(ks_two_sample(&a, &b), 1.0);
    }

    #[test]
    fn ks_with_ties() {
        let a = dist(&[1.0, 1.0, 2.0, 2.0]);
        let b = dist(&[1.0, 2.0]);
        assert_eq!(ks_two_sample(&a, &b), 0.0);
        let c = dist(&[0.0, 1.0, 2.0, 3.0]);
        assert!((ks_two_sample(&a, &c) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn quantile_examples() {
        let d = dist(&[3.0, 1.0, 2.0]);
        assert_eq!(d.quantile(0.0).unwrap(), 1.0);
        assert_eq!(d.quantile(0.5).unwrap(), 2.0);
        assert_eq!(d.quantile(1.0).unwrap(), 3.0);
        assert_eq!(d.quantile(0.25).unwrap(), 1.5);
        assert!(d.quantile(1.5).is_err());
        assert!(d.quantile(-0.1).is_err());
    }

    #[test]
    fn ecdf_and_moments() {
        let d = dist(&[4.0, 1.0, 2.0, 3.0]);
        assert_eq!(d.ecdf(0.5), 0.0);
        assert_eq!(d.ecdf(2.0), 0.5);
        assert_eq!(d.ecdf(9.0), 1.0);
        assert_eq!(d.mean(), 2.5);
        assert!((d.variance() - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!((d.min(), d.max()), (1.0, 4.0));
    }
}
