use super::RngStream;
use crate::error::{Error, Result};

/// One draw from Gamma(shape, 1).
///
/// Marsaglia–Tsang rejection with the cubic squeeze for `shape >= 1`; smaller
/// shapes draw Gamma(shape + 1) and multiply by `U^(1/shape)`.
pub fn sample_gamma(shape: f64, stream: &mut RngStream) -> Result<f64> {
    check_shape(shape, "gamma shape")?;
    Ok(sample_log_gamma(shape, stream).exp())
}

/// Natural log of a Gamma(shape, 1) draw. For tiny shapes the draw itself
/// underflows; its logarithm does not.
pub(crate) fn sample_log_gamma(shape: f64, stream: &mut RngStream) -> f64 {
    if shape < 1.0 {
        let boosted = marsaglia_tsang(shape + 1.0, stream);
        boosted.ln() + stream.uniform_open01().ln() / shape
    } else {
        marsaglia_tsang(shape, stream).ln()
    }
}

fn marsaglia_tsang(shape: f64, stream: &mut RngStream) -> f64 {
    debug_assert!(shape >= 1.0);
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = stream.standard_normal();
        let v = 1.0 + c * x;
        if v <= 0.0 {
            continue;
        }
        let v = v * v * v;
        let u = stream.uniform_open01();
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 {
            return d * v;
        }
        if u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
            return d * v;
        }
    }
}

/// One draw from Beta(p, q) as `X / (X + Y)` with independent Gamma draws.
///
/// The result lies strictly inside (0, 1): draws that round to an endpoint
/// are rejected and redrawn.
pub fn sample_beta(p: f64, q: f64, stream: &mut RngStream) -> Result<f64> {
    check_shape(p, "beta parameter p")?;
    check_shape(q, "beta parameter q")?;
    loop {
        let log_x = sample_log_gamma(p, stream);
        let log_y = sample_log_gamma(q, stream);
        // X/(X+Y) = 1/(1 + exp(log Y - log X))
        let y = 1.0 / (1.0 + (log_y - log_x).exp());
        if y > 0.0 && y < 1.0 {
            return Ok(y);
        }
    }
}

fn check_shape(shape: f64, what: &str) -> Result<()> {
    if shape > 0.0 && shape.is_finite() {
        Ok(())
    } else {
        Err(Error::param(format!(
            "{what} must be positive and finite, got {shape}"
        )))
    }
}
