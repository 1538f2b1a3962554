use super::{
    build_m, build_w, build_z, sample_angles, scaling_constants, JacobiAngles, JacobiParams,
    ScalingConstants,
};
use crate::eigencore::{singular_values, SpectrumQuery};
use crate::error::{Error, Result};
use crate::matcore::{gram, SymTridiagonal};
use crate::randkit::RngStream;
use crate::scalar::Real;

/// `H_n = alpha_n (Lambda_+ I - Z Z^T)` assembled entrywise:
/// diagonal `2 m^2 + alpha_n (c^2 st^2 + s^2 ct^2 - (ZZ^T)_kk)`,
/// off-diagonal `-m^2 + alpha_n (c s ct st - (ZZ^T)_{k,k+1})`.
pub fn hn_from_angles<T: Real>(
    angles: &JacobiAngles<T>,
    k: &ScalingConstants<T>,
) -> SymTridiagonal<T> {
    let zz = gram(&build_z(angles));
    let m2 = k.m_n * k.m_n;
    let product = k.c * k.s * k.ct * k.st;
    let centre = k.c * k.c * k.st * k.st + k.s * k.s * k.ct * k.ct;
    let two = T::lit(2.0);
    let diag = zz
        .diag()
        .iter()
        .map(|&z| two * m2 + k.alpha_n * (centre - z))
        .collect();
    let off = zz
        .offdiag()
        .iter()
        .map(|&z| -m2 + k.alpha_n * (product - z))
        .collect();
    SymTridiagonal::new(diag, off).expect("same shape as Z Z^T")
}

/// Samples an angle set and returns the soft-edge matrix `H_n`.
pub fn build_hn<T: Real>(p: &JacobiParams, stream: &mut RngStream) -> Result<SymTridiagonal<T>> {
    let k = scaling_constants::<T>(p)?;
    let angles = sample_angles::<T>(p, stream)?;
    Ok(hn_from_angles(&angles, &k))
}

fn check_count(p: &JacobiParams, k: usize) -> Result<()> {
    if k == 0 || k > p.n {
        return Err(Error::param(format!(
            "edge count k = {k} must lie in 1..={}",
            p.n
        )));
    }
    Ok(())
}

/// `alpha_n (Lambda_+ - lambda_l)` for the `k` largest eigenvalues of `M M^T`
/// (largest first), i.e. the `k` smallest rescaled values in increasing order.
///
/// Requires `n2 > n`: the upper edge is a soft edge only while the `n2`
/// side stays separated from the constraint at 1.
pub fn soft_edge_sample<T: Real>(
    p: &JacobiParams,
    k: usize,
    stream: &mut RngStream,
) -> Result<Vec<T>> {
    p.validate()?;
    check_count(p, k)?;
    if !(p.n2 > p.n as f64) {
        return Err(Error::param(format!(
            "soft edge needs n2 > n, got n2 = {} with n = {}",
            p.n2, p.n
        )));
    }
    let sc = scaling_constants::<T>(p)?;
    let angles = sample_angles::<T>(p, stream)?;
    let sv = singular_values(&build_m(&angles), SpectrumQuery::largest(k))?;
    // ascending singular values -> descending eigenvalues when reversed
    Ok(sv
        .iter()
        .rev()
        .map(|&s| sc.alpha_n * (sc.lambda_plus - s * s))
        .collect())
}

/// Hard-edge scale `m_n = n n2`.
pub fn hard_edge_scale(p: &JacobiParams) -> f64 {
    p.n as f64 * p.n2
}

/// `n n2 lambda_l` for the `k` smallest eigenvalues of `W W^T`, ascending.
pub fn hard_edge_sample<T: Real>(
    p: &JacobiParams,
    k: usize,
    stream: &mut RngStream,
) -> Result<Vec<T>> {
    p.validate()?;
    check_count(p, k)?;
    let scale = T::lit(hard_edge_scale(p));
    let angles = sample_angles::<T>(p, stream)?;
    let sv = singular_values(&build_w(&angles), SpectrumQuery::smallest(k))?;
    Ok(sv.into_iter().map(|s| scale * s * s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigencore::extreme_eigenvalues;

    #[test]
    fn n_two_entries_by_hand() {
        let p = JacobiParams::new(2, 5.0, 9.0, 2.0).unwrap();
        let sc = scaling_constants::<f64>(&p).unwrap();
        let a = JacobiAngles::from_cosines(vec![0.6, 0.8], vec![0.28]).unwrap();
        let h = hn_from_angles(&a, &sc);
        let (c, s, ct, st) = (a.c(), a.s(), a.ct(), a.st());
        // Z = [[C2, S2 Ct1], [0, C1 St1]]
        let z11 = c[1] * c[1] + s[1] * s[1] * ct[0] * ct[0];
        let z22 = c[0] * c[0] * st[0] * st[0];
        let z12 = s[1] * ct[0] * c[0] * st[0];
        let al = sc.alpha_n;
        assert!((h.diag()[0] - al * (sc.lambda_plus - z11)).abs() < 1e-10);
        assert!((h.diag()[1] - al * (sc.lambda_plus - z22)).abs() < 1e-10);
        assert!((h.offdiag()[0] + al * z12).abs() < 1e-10);
    }

    #[test]
    fn soft_edge_matches_hn_bottom() {
        let p = JacobiParams::new(40, 80.0, 160.0, 2.0).unwrap();
        let soft: Vec<f64> = soft_edge_sample(&p, 3, &mut RngStream::new(11, 4)).unwrap();
        let h = build_hn::<f64>(&p, &mut RngStream::new(11, 4)).unwrap();
        let bottom = extreme_eigenvalues(&h, SpectrumQuery::smallest(3)).unwrap();
        for (a, b) in soft.iter().zip(&bottom) {
            assert!((a - b).abs() < 1e-8 * (1.0 + b.abs()), "{a} vs {b}");
        }
        assert!(soft.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn soft_edge_requires_n2_above_n() {
        let p = JacobiParams::new(10, 20.0, 10.0, 2.0).unwrap();
        assert!(soft_edge_sample::<f64>(&p, 1, &mut RngStream::new(0, 0)).is_err());
    }

    #[test]
    fn hard_edge_outputs_positive_and_sorted() {
        let p = JacobiParams::new(30, 30.0, 60.0, 2.0).unwrap();
        let v: Vec<f64> = hard_edge_sample(&p, 4, &mut RngStream::new(5, 1)).unwrap();
        assert!(v.iter().all(|&x| x > 0.0));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(hard_edge_sample::<f64>(&p, 31, &mut RngStream::new(5, 1)).is_err());
    }
}
