use super::{sample_angles, scaling_constants, JacobiAngles, JacobiParams, ScalingConstants};
use crate::error::{Error, Result};
use crate::montecarlo::run_trials;

/// Statistics of the soft-edge potential increments at one step `k`.
///
/// `mean`, `variance` and `fourth` are `m_n E[d]`, `m_n Var[d]` and
/// `m_n E[d^4]` for the increment `d` with every angle index at `n - k`
/// (independent across `k`); `printed_mean` and `printed_variance` are the
/// same for the increment as it appears in `H_n`, whose `S_{n-k+1}` and
/// `St_{n-k-1}` factors are shared with neighbouring steps.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticRow {
    pub k: usize,
    /// `k / m_n`.
    pub x: f64,
    pub mean: f64,
    pub variance: f64,
    pub fourth: f64,
    /// Running sum of `E[d]` up to `k`, targeting `x^2 / 2`.
    pub cumulative_drift: f64,
    pub target_drift: f64,
    pub printed_mean: f64,
    pub printed_variance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticReport {
    pub m_n: f64,
    pub beta: f64,
    pub trials: usize,
    pub x_max: f64,
    /// Row `k = 0` (zero drift) followed by `k = 1..=floor(x_max m_n)`.
    pub rows: Vec<DiagnosticRow>,
    /// Mean of the `variance` column over `k >= 1`.
    pub pooled_variance: f64,
    /// `4 / beta`.
    pub variance_target: f64,
    /// Mean of the `fourth` column over `k >= 1`.
    pub pooled_fourth: f64,
    /// `max_k |cumulative_drift - x^2/2|`.
    pub drift_sup_error: f64,
    /// `x_max^2 / 2`, the size of the drift profile on the window.
    pub drift_scale: f64,
    pub pooled_printed_variance: f64,
}

impl DiagnosticReport {
    pub fn variance_relative_error(&self) -> f64 {
        (self.pooled_variance / self.variance_target - 1.0).abs()
    }

    pub fn drift_relative_error(&self) -> f64 {
        self.drift_sup_error / self.drift_scale
    }
}

/// Returns `(independent, printed)` increments for `k = 1..=kmax`.
fn increments(
    a: &JacobiAngles<f64>,
    sc: &ScalingConstants<f64>,
    kmax: usize,
) -> (Vec<f64>, Vec<f64>) {
    let n = a.n();
    let p = sc.c * sc.s * sc.ct * sc.st;
    let centre = sc.c * sc.c * sc.st * sc.st + sc.s * sc.s * sc.ct * sc.ct;
    let m = sc.m_n;
    // one-based angle accessors
    let c = |j: usize| a.c()[j - 1];
    let s = |j: usize| a.s()[j - 1];
    let ct = |j: usize| a.ct()[j - 1];
    let st = |j: usize| a.st_ext(j - 1);
    let mut tilde = Vec::with_capacity(kmax);
    let mut printed = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let j = n - k;
        let d1 = m / p * (centre - s(j).powi(2) * ct(j).powi(2) - c(j).powi(2) * st(j).powi(2));
        let d2 = 2.0 * m / p * (p - c(j) * s(j) * ct(j) * st(j));
        tilde.push(d1 + d2);
        let e1 = m / p * (centre - s(j + 1).powi(2) * ct(j).powi(2) - c(j).powi(2) * st(j).powi(2));
        let e2 = 2.0 * m / p * (p - c(j) * s(j) * ct(j) * st(j - 1));
        printed.push(e1 + e2);
    }
    (tilde, printed)
}

/// Monte Carlo check of the soft-edge potential: per-step mean, variance and
/// fourth moment of the rescaled increments on `k <= x_max m_n`, against the
/// limits `x^2/2` (cumulative drift) and `4/beta` (variance).
pub fn drift_variance_diagnostic(
    p: &JacobiParams,
    x_max: f64,
    trials: usize,
    seed: u64,
    threads: Option<usize>,
) -> Result<DiagnosticReport> {
    let sc = scaling_constants::<f64>(p)?;
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(Error::param("x_max must be positive"));
    }
    if trials < 2 {
        return Err(Error::param("diagnostic needs at least two trials"));
    }
    let kmax = (x_max * sc.m_n).floor() as usize;
    if kmax == 0 || kmax + 2 > p.n {
        return Err(Error::param(format!(
            "window x_max m_n = {:.3} must cover at least one step and stay below n - 2",
            x_max * sc.m_n
        )));
    }
    let samples = run_trials(seed, trials, threads, |stream| {
        let a = sample_angles::<f64>(p, stream)?;
        Ok(increments(&a, &sc, kmax))
    })?;
    let m = sc.m_n;
    let t = trials as f64;
    let moments = |pick: &dyn Fn(&(Vec<f64>, Vec<f64>)) -> f64| {
        let mean = samples.iter().map(pick).sum::<f64>() / t;
        let var = samples
            .iter()
            .map(|v| (pick(v) - mean).powi(2))
            .sum::<f64>()
            / (t - 1.0);
        let fourth = samples.iter().map(|v| pick(v).powi(4)).sum::<f64>() / t;
        (mean, var, fourth)
    };
    let mut rows = vec![DiagnosticRow {
        k: 0,
        x: 0.0,
        mean: 0.0,
        variance: 0.0,
        fourth: 0.0,
        cumulative_drift: 0.0,
        target_drift: 0.0,
        printed_mean: 0.0,
        printed_variance: 0.0,
    }];
    let mut drift = 0.0;
    for k in 1..=kmax {
        let (mean, var, fourth) = moments(&|v| v.0[k - 1]);
        let (pmean, pvar, _) = moments(&|v| v.1[k - 1]);
        drift += mean;
        let x = k as f64 / m;
        rows.push(DiagnosticRow {
            k,
            x,
            mean: m * mean,
            variance: m * var,
            fourth: m * fourth,
            cumulative_drift: drift,
            target_drift: x * x / 2.0,
            printed_mean: m * pmean,
            printed_variance: m * pvar,
        });
    }
    let body = &rows[1..];
    let avg =
        |f: &dyn Fn(&DiagnosticRow) -> f64| body.iter().map(f).sum::<f64>() / body.len() as f64;
    let drift_sup_error = body
        .iter()
        .map(|r| (r.cumulative_drift - r.target_drift).abs())
        .fold(0.0, f64::max);
    Ok(DiagnosticReport {
        m_n: m,
        beta: p.beta,
        trials,
        x_max,
        pooled_variance: avg(&|r| r.variance),
        variance_target: 4.0 / p.beta,
        pooled_fourth: avg(&|r| r.fourth),
        drift_sup_error,
        drift_scale: x_max * x_max / 2.0,
        pooled_printed_variance: avg(&|r| r.printed_variance),
        rows,
    })
}
