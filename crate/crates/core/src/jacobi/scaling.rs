use super::JacobiParams;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Edge locations and soft-edge scale factors for one parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingConstants<T> {
    pub c: T,
    pub s: T,
    pub ct: T,
    pub st: T,
    pub lambda_plus: T,
    pub lambda_minus: T,
    /// Soft-edge length scale; `m_n^2 / (c s ct st)` rescales eigenvalues.
    pub m_n: T,
    pub alpha_n: T,
    /// `ct st (c^2 - s^2) + c s (ct^2 - st^2)`; its sign depends on the
    /// parameters, only its magnitude enters `m_n`.
    pub denominator: T,
}

/// `c^2 = n1/(n1+n2)`, `s^2 = n2/(n1+n2)`, `ct^2 = n/(n1+n2)`,
/// `st^2 = (n1+n2-n)/(n1+n2)`, `Lambda_pm = (c st pm s ct)^2`,
/// `m_n = |c s ct st sqrt(n1+n2) / denominator|^(2/3)`,
/// `alpha_n = m_n^2 / (c s ct st)`.
pub fn scaling_constants<T: Real>(p: &JacobiParams) -> Result<ScalingConstants<T>> {
    p.validate()?;
    if !(p.n1 + p.n2 > p.n as f64) {
        return Err(Error::param(format!(
            "edge scaling needs n1 + n2 > n, got n1 + n2 = {} with n = {}",
            p.n1 + p.n2,
            p.n
        )));
    }
    let total = T::lit(p.n1 + p.n2);
    let n = T::from_count(p.n);
    let c = (T::lit(p.n1) / total).sqrt();
    let s = (T::lit(p.n2) / total).sqrt();
    let ct = (n / total).sqrt();
    let st = ((total - n) / total).sqrt();
    let lambda_plus = (c * st + s * ct).powi(2);
    let lambda_minus = (c * st - s * ct).powi(2);
    let product = c * s * ct * st;
    let denominator = ct * st * (c * c - s * s) + c * s * (ct * ct - st * st);
    if denominator.abs() <= T::lit(64.0) * T::epsilon() {
        return Err(Error::DegenerateScaling {
            denominator: denominator.as_f64(),
        });
    }
    let ratio = product * total.sqrt() / denominator;
    let m_n = (ratio * ratio).cbrt();
    let alpha_n = m_n * m_n / product;
    Ok(ScalingConstants {
        c,
        s,
        ct,
        st,
        lambda_plus,
        lambda_minus,
        m_n,
        alpha_n,
        denominator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_total_is_rejected() {
        let p = JacobiParams::new(1, 0.2, 0.1, 2.0).unwrap();
        assert!(matches!(
            scaling_constants::<f64>(&p),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn symmetric_parameters_are_degenerate() {
        let p = JacobiParams::new(10, 10.0, 10.0, 2.0).unwrap();
        let err = scaling_constants::<f64>(&p).unwrap_err();
        assert!(matches!(err, Error::DegenerateScaling { .. }));
    }

    #[test]
    fn edges_for_gamma_two() {
        let p = JacobiParams::new(10, 20.0, 20.0, 2.0).unwrap();
        let k = scaling_constants::<f64>(&p).unwrap();
        let r3 = 3f64.sqrt();
        assert!((k.lambda_plus - (2.0 + r3) / 4.0).abs() < 1e-14);
        assert!((k.lambda_minus - (2.0 - r3) / 4.0).abs() < 1e-14);
        assert!((k.c * k.c + k.s * k.s - 1.0).abs() < 1e-14);
        assert!((k.ct * k.ct + k.st * k.st - 1.0).abs() < 1e-14);
    }
}
