use super::RngStream;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A Brownian path sampled on the uniform grid `{0, h, 2h, ...}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BrownianPath<T> {
    step: T,
    values: Vec<T>,
}

/// Number of grid cells covering `[0, length]` with spacing `step`,
/// i.e. `ceil(length / step)` with a relative slack for representation error.
pub(crate) fn cell_count<T: Real>(length: T, step: T) -> usize {
    let ratio = (length / step).as_f64();
    let cells = (ratio - 1e-9 * ratio.max(1.0)).ceil();
    cells.max(1.0) as usize
}

impl<T: Real> BrownianPath<T> {
    /// Wraps explicit path values; `values[0]` must be exactly zero.
    pub fn from_values(step: T, values: Vec<T>) -> Result<Self> {
        if !(step > T::zero()) || !step.is_finite() {
            return Err(Error::param("path step must be positive"));
        }
        if values.len() < 2 {
            return Err(Error::param("path needs at least two grid values"));
        }
        if values[0] != T::zero() {
            return Err(Error::param("Brownian path must start at zero"));
        }
        Ok(Self { step, values })
    }

    /// The identically zero path on `cells + 1` grid points.
    pub fn zero(step: T, cells: usize) -> Self {
        Self {
            step,
            values: vec![T::zero(); cells + 1],
        }
    }

    pub fn step(&self) -> T {
        self.step
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Right end of the covered interval.
    pub fn horizon(&self) -> T {
        self.step * T::from_count(self.values.len() - 1)
    }

    pub fn increments(&self) -> impl Iterator<Item = T> + '_ {
        self.values.windows(2).map(|w| w[1] - w[0])
    }

    pub fn quadratic_variation(&self) -> T {
        self.increments().map(|d| d * d).sum()
    }

    /// Halves the step by inserting Brownian-bridge midpoints; existing grid
    /// values are kept.
    pub fn refine(&self, stream: &mut RngStream) -> Self {
        let half = self.step / T::lit(2.0);
        // midpoint of a bridge over [0, h] has variance h/4
        let sd = (self.step / T::lit(4.0)).sqrt();
        let mut values = Vec::with_capacity(2 * self.values.len() - 1);
        values.push(self.values[0]);
        for w in self.values.windows(2) {
            let mid = (w[0] + w[1]) / T::lit(2.0) + sd * T::lit(stream.standard_normal());
            values.push(mid);
            values.push(w[1]);
        }
        Self { step: half, values }
    }

    /// Continues the path with fresh increments until it covers `length`.
    pub fn extend_to(&self, length: T, stream: &mut RngStream) -> Self {
        let cells = cell_count(length, self.step);
        let mut values = self.values.clone();
        let sd = self.step.sqrt();
        while values.len() < cells + 1 {
            let last = *values.last().expect("nonempty path");
            values.push(last + sd * T::lit(stream.standard_normal()));
        }
        Self {
            step: self.step,
            values,
        }
    }

    /// Path value at an arbitrary time by linear interpolation between grid
    /// points; times past the horizon clamp to the last value.
    pub fn interpolate(&self, t: T) -> T {
        if t <= T::zero() {
            return self.values[0];
        }
        let pos = t / self.step;
        let i = pos.floor().to_usize().unwrap_or(usize::MAX);
        if i + 1 >= self.values.len() {
            return *self.values.last().expect("nonempty path");
        }
        let frac = pos - T::from_count(i);
        self.values[i] + frac * (self.values[i + 1] - self.values[i])
    }
}

/// Samples a standard Brownian motion on `{0, h, ..., ceil(length/h) h}`
/// with independent Normal(0, h) increments.
pub fn sample_brownian<T: Real>(
    length: T,
    step: T,
    stream: &mut RngStream,
) -> Result<BrownianPath<T>> {
    if !(length > T::zero()) || !length.is_finite() {
        return Err(Error::param(format!(
            "path length must be positive, got {length}"
        )));
    }
    if !(step > T::zero()) || step > length {
        return Err(Error::param(format!(
            "path step must lie in (0, length], got {step}"
        )));
    }
    let cells = cell_count(length, step);
    let sd = step.as_f64().sqrt();
    let mut values = Vec::with_capacity(cells + 1);
    let mut acc = 0.0f64;
    values.push(T::zero());
    for _ in 0..cells {
        acc += sd * stream.standard_normal();
        values.push(T::lit(acc));
    }
    Ok(BrownianPath { step, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starts_at_zero_with_expected_grid() {
        let mut s = RngStream::new(1, 0);
        let p = sample_brownian(1.0f64, 0.5, &mut s).unwrap();
        assert_eq!(p.values()[0], 0.0);
        assert_eq!(p.len(), 3);
        let p = sample_brownian(20.0f64, 0.01, &mut s).unwrap();
        assert_eq!(p.len(), 2001);
        assert!((p.horizon() - 20.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_invalid_grids() {
        let mut s = RngStream::new(1, 0);
        assert!(sample_brownian(0.0f64, 0.1, &mut s).is_err());
        assert!(sample_brownian(1.0f64, 0.0, &mut s).is_err());
        assert!(sample_brownian(1.0f64, 2.0, &mut s).is_err());
        assert!(BrownianPath::from_values(0.1f64, vec![0.5, 1.0]).is_err());
    }

    #[test]
    fn terminal_variance_matches_length() {
        let length = 2.0;
        let trials = 10_000;
        let ends: Vec<f64> = (0..trials)
            .map(|t| {
                let mut s = RngStream::new(11, t);
                *sample_brownian(length, 0.05, &mut s)
                    .unwrap()
                    .values()
                    .last()
                    .unwrap()
            })
            .collect();
        let m = ends.iter().sum::<f64>() / trials as f64;
        let v = ends.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (trials as f64 - 1.0);
        assert!((v - length).abs() < 0.05 * length, "variance {v}");
    }

    #[test]
    fn quadratic_variation_concentrates() {
        let length = 1.0;
        let qv: f64 = (0..100)
            .map(|t| {
                let mut s = RngStream::new(12, t);
                sample_brownian(length, 1e-3, &mut s)
                    .unwrap()
                    .quadratic_variation()
            })
            .sum::<f64>()
            / 100.0;
        assert!((qv - length).abs() < 0.1 * length, "qv {qv}");
    }

    #[test]
    fn refinement_keeps_old_points_and_halves_step() {
        let mut s = RngStream::new(13, 0);
        let p = sample_brownian(1.0f64, 0.1, &mut s).unwrap();
        let r = p.refine(&mut s);
        assert_eq!(r.len(), 2 * p.len() - 1);
        assert!((r.step() - 0.05).abs() < 1e-15);
        for (i, v) in p.values().iter().enumerate() {
            assert_eq!(r.values()[2 * i], *v);
        }
        let e = p.extend_to(1.5, &mut s);
        assert_eq!(e.len(), 16);
        assert_eq!(&e.values()[..p.len()], p.values());
    }

    #[test]
    fn interpolation_hits_grid_values() {
        let p = BrownianPath::from_values(0.5f64, vec![0.0, 1.0, -1.0]).unwrap();
        assert_eq!(p.interpolate(0.5), 1.0);
        assert_eq!(p.interpolate(0.75), 0.0);
        assert_eq!(p.interpolate(5.0), -1.0);
    }
}
