use crate::error::{Error, Result};
use crate::matcore::{double, Bidiagonal, SymTridiagonal};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Smallest,
    Largest,
}

/// Which part of a spectrum to compute and how tightly to bracket it.
///
/// `tolerance` is the absolute bracket width at which bisection stops; zero
/// means "bisect down to floating-point resolution", which is what relative
/// accuracy for tiny singular values needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumQuery<T> {
    pub count: usize,
    pub side: Side,
    pub tolerance: T,
}

impl<T: Real> SpectrumQuery<T> {
    pub fn smallest(count: usize) -> Self {
        Self {
            count,
            side: Side::Smallest,
            tolerance: T::zero(),
        }
    }

    pub fn largest(count: usize) -> Self {
        Self {
            count,
            side: Side::Largest,
            tolerance: T::zero(),
        }
    }

    pub fn with_tolerance(mut self, tolerance: T) -> Self {
        self.tolerance = tolerance;
        self
    }
}

fn pivot_floor<T: Real>(t: &SymTridiagonal<T>) -> T {
    T::lit(1e-30) * t.norm_inf().max(T::min_positive_value())
}

/// Number of eigenvalues of `t` strictly below `x`.
///
/// Counts negative pivots of the `LDL^T` factorization of `t - x I`. A pivot
/// that is exactly zero is replaced by `1e-30 * ||t||`.
pub fn sturm_count<T: Real>(t: &SymTridiagonal<T>, x: T) -> usize {
    count_below(t.diag(), t.offdiag(), x, pivot_floor(t))
}

fn count_below<T: Real>(diag: &[T], off: &[T], x: T, floor: T) -> usize {
    let mut count = 0;
    let mut d = diag[0] - x;
    for k in 0.. {
        if d == T::zero() {
            d = floor;
        }
        if d < T::zero() {
            count += 1;
        }
        if k + 1 == diag.len() {
            break;
        }
        let e = off[k];
        d = diag[k + 1] - x - e * e / d;
    }
    count
}

/// Final bracket `(lo, hi)` around the eigenvalue with ascending index
/// `index`, of width at most `tol` (or float resolution when `tol` is zero).
/// Invariant: `count(lo) <= index < count(hi)`.
fn bisect_index<T: Real>(
    t: &SymTridiagonal<T>,
    index: usize,
    mut lo: T,
    mut hi: T,
    tol: T,
) -> (T, T) {
    let floor = pivot_floor(t);
    let two = T::lit(2.0);
    loop {
        let mid = (lo + hi) / two;
        // the negated test also stops on NaN brackets
        if hi - lo <= tol || !(mid > lo && mid < hi) {
            return (lo, hi);
        }
        if count_below(t.diag(), t.offdiag(), mid, floor) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

fn bracket<T: Real>(t: &SymTridiagonal<T>) -> (T, T) {
    let (lo, hi) = t.gershgorin_bounds();
    let pad = (hi - lo)
        .abs()
        .max(t.norm_inf())
        .max(T::min_positive_value())
        * T::lit(1e-10)
        + T::min_positive_value();
    (lo - pad, hi + pad)
}

/// The `q.count` smallest or largest eigenvalues of `t`, sorted ascending.
pub fn extreme_eigenvalues<T: Real>(t: &SymTridiagonal<T>, q: SpectrumQuery<T>) -> Result<Vec<T>> {
    let n = t.dim();
    if q.count == 0 || q.count > n {
        return Err(Error::contract(format!(
            "requested {} eigenvalues of a {n}x{n} matrix",
            q.count
        )));
    }
    if !(q.tolerance >= T::zero()) {
        return Err(Error::param("tolerance must be nonnegative"));
    }
    if t.diag().iter().chain(t.offdiag()).any(|v| !v.is_finite()) {
        return Err(Error::DegenerateDiscretization(
            "matrix has non-finite entries".into(),
        ));
    }
    let indices: Vec<usize> = match q.side {
        Side::Smallest => (0..q.count).collect(),
        Side::Largest => (n - q.count..n).collect(),
    };
    Ok(eigenvalues_at(t, &indices, q.tolerance))
}

fn eigenvalues_at<T: Real>(t: &SymTridiagonal<T>, indices: &[usize], tol: T) -> Vec<T> {
    let (glo, ghi) = bracket(t);
    let mut out = Vec::with_capacity(indices.len());
    let mut lo = glo;
    for &i in indices {
        // eigenvalues come out ascending, so the previous one bounds this one
        let (a, b) = bisect_index(t, i, lo, ghi, tol);
        out.push((a + b) / T::lit(2.0));
        lo = a;
    }
    out
}

/// All eigenvalues of `t`, ascending.
pub fn full_spectrum<T: Real>(t: &SymTridiagonal<T>, tolerance: T) -> Vec<T> {
    let indices: Vec<usize> = (0..t.dim()).collect();
    eigenvalues_at(t, &indices, tolerance)
}

/// The `q.count` smallest or largest singular values of `b`, ascending.
///
/// Bisection runs on the zero-diagonal doubled matrix, whose Sturm counts
/// resolve small singular values to high relative accuracy.
pub fn singular_values<T: Real>(b: &Bidiagonal<T>, q: SpectrumQuery<T>) -> Result<Vec<T>> {
    let n = b.dim();
    if q.count == 0 || q.count > n {
        return Err(Error::contract(format!(
            "requested {} singular values of a {n}x{n} matrix",
            q.count
        )));
    }
    let l = double(b);
    // nonnegative half of the doubled spectrum is indices n..2n
    let indices: Vec<usize> = match q.side {
        Side::Smallest => (n..n + q.count).collect(),
        Side::Largest => (2 * n - q.count..2 * n).collect(),
    };
    let mut out = eigenvalues_at(&l, &indices, q.tolerance);
    for v in out.iter_mut() {
        *v = v.abs();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_by_two() -> SymTridiagonal<f64> {
        SymTridiagonal::new(vec![2.0, 2.0], vec![1.0]).unwrap()
    }

    #[test]
    fn non_finite_input_terminates() {
        let t = SymTridiagonal::new(vec![f64::NAN, 1.0], vec![0.5]).unwrap();
        assert!(extreme_eigenvalues(&t, SpectrumQuery::smallest(1)).is_err());
        assert_eq!(full_spectrum(&t, 0.0).len(), 2);
    }

    #[test]
    fn count_two_by_two() {
        let t = two_by_two();
        assert_eq!(sturm_count(&t, 2.0), 1);
        assert_eq!(sturm_count(&t, 0.0), 0);
        assert_eq!(sturm_count(&t, 1.0), 0);
        assert_eq!(sturm_count(&t, 3.5), 2);
        let (lo, _) = t.gershgorin_bounds();
        assert_eq!(sturm_count(&t, lo - 1.0), 0);
    }

    #[test]
    fn extremes_two_by_two() {
        let t = two_by_two();
        let all =
            extreme_eigenvalues(&t, SpectrumQuery::smallest(2).with_tolerance(1e-12)).unwrap();
        assert!((all[0] - 1.0).abs() < 1e-12 && (all[1] - 3.0).abs() < 1e-12);
        let top = extreme_eigenvalues(&t, SpectrumQuery::largest(1)).unwrap();
        assert_eq!(top.len(), 1);
        assert!((top[0] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn oversized_query_is_rejected() {
        let t = two_by_two();
        assert!(extreme_eigenvalues(&t, SpectrumQuery::smallest(3)).is_err());
        assert!(extreme_eigenvalues(&t, SpectrumQuery::smallest(0)).is_err());
    }

    #[test]
    fn scalar_singular_value() {
        let b = Bidiagonal::lower(vec![-2.5], vec![]).unwrap();
        assert_eq!(
            singular_values(&b, SpectrumQuery::smallest(1)).unwrap(),
            vec![2.5]
        );
    }

    #[test]
    fn tiny_singular_value_is_relatively_accurate() {
        // [[1e-9, 0], [1, 1]] has singular values ~1e-9/sqrt(2) and ~sqrt(2)
        let b = Bidiagonal::lower(vec![1e-9f64, 1.0], vec![1.0]).unwrap();
        let s = singular_values(&b, SpectrumQuery::smallest(2)).unwrap();
        // product of singular values equals |det| = 1e-9
        assert!((s[0] * s[1] / 1e-9 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let t = SymTridiagonal::new(vec![0.0f64; 3], vec![0.0; 2]).unwrap();
        let s = full_spectrum(&t, 0.0);
        assert!(s.iter().all(|&v| v.abs() < 1e-300));
    }

    #[test]
    fn works_in_single_precision() {
        let t = SymTridiagonal::new(vec![2.0f32, 2.0], vec![1.0]).unwrap();
        let s = full_spectrum(&t, 0.0);
        assert!((s[0] - 1.0).abs() < 1e-6 && (s[1] - 3.0).abs() < 1e-6);
    }
}
