use super::quadrature::integrate_on_support;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Fixed-width histogram over `[lo, hi)`; samples outside the range are
/// counted separately so the bins do not silently renormalize.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram<T> {
    lo: T,
    hi: T,
    counts: Vec<u64>,
    outside: u64,
}

impl<T: Real> Histogram<T> {
    pub fn new(lo: T, hi: T, bins: usize) -> Result<Self> {
        if bins == 0 || !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::param(
                "histogram needs finite lo < hi and at least one bin",
            ));
        }
        Ok(Self {
            lo,
            hi,
            counts: vec![0; bins],
            outside: 0,
        })
    }

    pub fn from_samples(samples: &[T], lo: T, hi: T, bins: usize) -> Result<Self> {
        let mut h = Self::new(lo, hi, bins)?;
        for &x in samples {
            h.add(x);
        }
        Ok(h)
    }

    pub fn add(&mut self, x: T) {
        let bins = self.counts.len();
        let width = (self.hi - self.lo) / T::from_count(bins);
        if x >= self.lo && x < self.hi {
            let i = ((x - self.lo) / width)
                .to_usize()
                .unwrap_or(bins - 1)
                .min(bins - 1);
            self.counts[i] += 1;
        } else if x == self.hi {
            self.counts[bins - 1] += 1;
        } else {
            self.outside += 1;
        }
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum::<u64>() + self.outside
    }

    pub fn outside(&self) -> u64 {
        self.outside
    }

    /// Bin `i` as `[left, right)`.
    pub fn bin_edges(&self, i: usize) -> (T, T) {
        let width = (self.hi - self.lo) / T::from_count(self.bins());
        (
            self.lo + width * T::from_count(i),
            self.lo + width * T::from_count(i + 1),
        )
    }

    /// Fraction of all added samples falling in each bin.
    pub fn masses(&self) -> Vec<T> {
        let total = T::from_count(self.total().max(1) as usize);
        self.counts
            .iter()
            .map(|&c| T::from_count(c as usize) / total)
            .collect()
    }
}

/// `sum_bins |mass(bin) - int_bin rho|`, plus the sample mass outside the
/// histogram range and the density mass on the support not covered by any
/// bin. Bounded by 2, attained when histogram and support do not overlap.
pub fn l1_density_distance<T: Real>(
    hist: &Histogram<T>,
    density: &impl Fn(T) -> T,
    support: (T, T),
) -> T {
    let (lo, hi) = support;
    let tol = T::lit(1e-10).max(T::epsilon() * T::lit(16.0));
    let masses = hist.masses();
    let mut covered = T::zero();
    let mut dist = T::zero();
    for (i, &m) in masses.iter().enumerate() {
        let (a, b) = hist.bin_edges(i);
        let rho_mass = integrate_on_support(density, lo, hi, a, b, tol);
        covered = covered + rho_mass;
        dist = dist + (m - rho_mass).abs();
    }
    let total_rho = integrate_on_support(density, lo, hi, lo, hi, tol);
    let outside_samples =
        T::from_count(hist.outside() as usize) / T::from_count(hist.total().max(1) as usize);
    dist + outside_samples + (total_rho - covered).max(T::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binning_and_outside_counts() {
        let h =
            Histogram::from_samples(&[0.0, 0.1, 0.5, 0.99, 1.0, 1.5, -0.1], 0.0, 1.0, 2).unwrap();
        assert_eq!(h.counts(), &[2, 3]);
        assert_eq!(h.outside(), 2);
        assert_eq!(h.total(), 7);
    }

    #[test]
    fn disjoint_support_gives_two() {
        let h = Histogram::from_samples(&[5.0, 5.5], 5.0, 6.0, 4).unwrap();
        let d = l1_density_distance(&h, &|_x: f64| 1.0, (0.0, 1.0));
        assert!((d - 2.0).abs() < 1e-9);
    }

    #[test]
    fn exact_bin_masses_give_zero() {
        // uniform density, one sample per bin
        let h = Histogram::from_samples(&[0.1, 0.3, 0.6, 0.9], 0.0, 1.0, 4).unwrap();
        let d = l1_density_distance(&h, &|_x: f64| 1.0, (0.0, 1.0));
        assert!(d < 1e-9);
    }

    #[test]
    fn bad_ranges_are_rejected() {
        assert!(Histogram::<f64>::new(1.0, 1.0, 3).is_err());
        assert!(Histogram::<f64>::new(0.0, 1.0, 0).is_err());
    }
}
