use super::{sample_angles, JacobiAngles, JacobiParams};
use crate::eigencore::{singular_values, SpectrumQuery};
use crate::error::Result;
use crate::matcore::Bidiagonal;
use crate::randkit::RngStream;
use crate::scalar::Real;

/// Lower bidiagonal `M` with diagonal `C_k St_k` (`St_n = 1`) and
/// subdiagonal `S_{k+1} Ct_k`; the eigenvalues of `M M^T` follow the
/// β-Jacobi law.
pub fn build_m<T: Real>(angles: &JacobiAngles<T>) -> Bidiagonal<T> {
    let n = angles.n();
    let diag = (0..n).map(|k| angles.c()[k] * angles.st_ext(k)).collect();
    let sub = (0..n - 1)
        .map(|k| angles.s()[k + 1] * angles.ct()[k])
        .collect();
    Bidiagonal::lower(diag, sub).expect("angle arrays have consistent lengths")
}

/// `M` with its subdiagonal negated; `W W^T` has the same spectrum as
/// `M M^T` and its inverse has entries of one sign.
pub fn build_w<T: Real>(angles: &JacobiAngles<T>) -> Bidiagonal<T> {
    let m = build_m(angles);
    let sub = m.offdiag().iter().map(|&v| -v).collect();
    Bidiagonal::lower(m.diag().to_vec(), sub).expect("same shape as M")
}

/// `Z = P M P` with `P` the index reversal: upper bidiagonal whose first row
/// carries the last angles, so that the top of `Z Z^T` is the upper edge of
/// the spectrum.
pub fn build_z<T: Real>(angles: &JacobiAngles<T>) -> Bidiagonal<T> {
    build_m(angles).reversed()
}

/// Complementary lower bidiagonal `N` with diagonal `S_k St_k` and
/// subdiagonal `-C_{k+1} Ct_k`. `M^T M + N^T N = I`, so the eigenvalues of
/// `N N^T` are `1 - lambda_i` computed without cancellation near 1.
pub fn build_complement<T: Real>(angles: &JacobiAngles<T>) -> Bidiagonal<T> {
    let n = angles.n();
    let diag = (0..n).map(|k| angles.s()[k] * angles.st_ext(k)).collect();
    let sub = (0..n - 1)
        .map(|k| -angles.c()[k + 1] * angles.ct()[k])
        .collect();
    Bidiagonal::lower(diag, sub).expect("angle arrays have consistent lengths")
}

/// One draw of the full spectrum of `M M^T`, ascending, computed as squared
/// singular values of `M`.
pub fn sample_matrix_eigenvalues<T: Real>(
    p: &JacobiParams,
    stream: &mut RngStream,
) -> Result<Vec<T>> {
    let angles = sample_angles::<T>(p, stream)?;
    let m = build_m(&angles);
    let sv = singular_values(&m, SpectrumQuery::smallest(p.n))?;
    Ok(sv.into_iter().map(|s| s * s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_completes_identity() {
        let a =
            JacobiAngles::from_cosines(vec![0.6f64, 0.1, 0.95, 0.4], vec![0.28, 0.7, 0.5]).unwrap();
        let m = build_m(&a).to_dense();
        let c = build_complement(&a).to_dense();
        let sum = m.transpose().matmul(&m);
        let other = c.transpose().matmul(&c);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((sum[(i, j)] + other[(i, j)] - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn n_one_is_single_cosine() {
        let a = JacobiAngles::from_cosines(vec![0.3], vec![]).unwrap();
        let m = build_m(&a);
        assert_eq!(m.diag(), &[0.3]);
        assert_eq!(build_w(&a), m);
    }

    #[test]
    fn n_two_entries() {
        let a = JacobiAngles::from_cosines(vec![0.6, 0.8], vec![0.28]).unwrap();
        let m = build_m(&a);
        let (c, s, ct, st) = (a.c(), a.s(), a.ct(), a.st());
        assert_eq!(m.diag(), &[c[0] * st[0], c[1]]);
        assert_eq!(m.offdiag(), &[s[1] * ct[0]]);
        assert_eq!(build_w(&a).offdiag(), &[-s[1] * ct[0]]);
        let z = build_z(&a);
        assert_eq!(z.diag(), &[c[1], c[0] * st[0]]);
    }

    #[test]
    fn spectrum_lies_in_unit_interval() {
        let p = JacobiParams::new(12, 13.0, 20.0, 1.5).unwrap();
        let mut rng = RngStream::new(3, 9);
        let ev: Vec<f64> = sample_matrix_eigenvalues(&p, &mut rng).unwrap();
        assert_eq!(ev.len(), 12);
        assert!(ev.iter().all(|&x| x > 0.0 && x < 1.0));
        assert!(ev.windows(2).all(|w| w[0] <= w[1]));
    }
}
