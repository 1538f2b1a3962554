use crate::error::{Error, Result};
use crate::randkit::BrownianPath;
use crate::scalar::Real;

/// Uniform grid `{0, h, ..., N h}` with `N = ceil(L / h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<T> {
    length: T,
    step: T,
}

impl<T: Real> GridSpec<T> {
    pub fn new(length: T, step: T) -> Result<Self> {
        if !(length > T::zero() && length.is_finite()) {
            return Err(Error::param(format!(
                "grid length must be positive, got {length}"
            )));
        }
        if !(step > T::zero() && step <= length) {
            return Err(Error::param(format!(
                "grid step must lie in (0, length], got {step}"
            )));
        }
        let g = Self { length, step };
        if g.points() < 3 {
            return Err(Error::param("grid needs at least three points"));
        }
        Ok(g)
    }

    pub fn length(&self) -> T {
        self.length
    }

    pub fn step(&self) -> T {
        self.step
    }

    /// Number of cells `N`.
    pub fn cells(&self) -> usize {
        crate::randkit::cell_count(self.length, self.step)
    }

    /// Number of grid points `N + 1`, endpoints included.
    pub fn points(&self) -> usize {
        self.cells() + 1
    }

    pub fn node(&self, i: usize) -> T {
        self.step * T::from_count(i)
    }

    /// Checks that `path` lives on this grid's spacing and covers it.
    pub fn check_path(&self, path: &BrownianPath<T>) -> Result<()> {
        let rel = ((path.step() - self.step) / self.step).abs();
        if rel > T::lit(1e-9) {
            return Err(Error::contract(format!(
                "path step {} does not match grid step {}",
                path.step(),
                self.step
            )));
        }
        if path.len() < self.points() {
            return Err(Error::contract(format!(
                "path has {} points, grid needs {}",
                path.len(),
                self.points()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        let g = GridSpec::new(20.0, 0.01).unwrap();
        assert_eq!(g.points(), 2001);
        assert_eq!(GridSpec::new(1.0, 0.5).unwrap().points(), 3);
        assert!(GridSpec::new(1.0, 1.0).is_err());
        assert!(GridSpec::new(1.0, 0.0).is_err());
        assert!(GridSpec::new(-1.0, 0.1).is_err());
    }

    #[test]
    fn path_mismatch_is_a_contract_error() {
        let g = GridSpec::new(1.0, 0.1).unwrap();
        let p = BrownianPath::zero(0.2, 5);
        assert!(matches!(g.check_path(&p), Err(Error::Contract(_))));
        let short = BrownianPath::zero(0.1, 5);
        assert!(matches!(g.check_path(&short), Err(Error::Contract(_))));
        assert!(g.check_path(&BrownianPath::zero(0.1, 10)).is_ok());
    }
}
