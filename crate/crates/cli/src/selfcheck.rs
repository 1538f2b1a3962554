//! Exact-identity and oracle checks run by `betajacobi selfcheck`.

use std::time::Instant;

use betajacobi::{
    build_complement, build_m, build_w, build_z, dense_sym_eigen, det_identities,
    discrete_inverse_kernel, double, full_spectrum, gram, hard_edge_scale, hn_from_angles,
    integrate_on_support, sae_eigenvalues, sample_angles, sbo_eigenvalues, sbo_inverse_kernel,
    scaling_constants, singular_values, Bidiagonal, BrownianPath, GridSpec, JacobiDensity,
    JacobiParams, RngStream, SpectrumQuery, SymTridiagonal,
};

use crate::args::SelfcheckArgs;
use crate::{CliResult, Failure};

/// Outcome of one check: the worst error seen and the tolerance it must
/// stay strictly below.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub error: f64,
    pub tolerance: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.error < self.tolerance
    }
}

type Check = fn(u64) -> betajacobi::Result<(f64, f64)>;

const CHECKS: [(&str, Check); 9] = [
    ("determinant identities", determinant_identities),
    ("doubling symmetry", doubling_symmetry),
    ("affine H_n identity", affine_hn),
    ("hard-edge inverse identity", hard_edge_inverse),
    ("bisection vs dense solver", bisection_vs_dense),
    ("interlacing and trace", interlacing_and_trace),
    ("noiseless Airy spectrum", noiseless_airy),
    ("noiseless Bessel ground state", noiseless_bessel),
    ("limit density mass", density_mass),
];

/// Runs every check; tolerances are multiplied by `tolerance_scale`.
pub fn run_checks(seed: u64, tolerance_scale: f64) -> CliResult<Vec<CheckResult>> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let (error, tolerance) = f(seed.wrapping_add(i as u64))
                .map_err(|e| Failure::numerical(format!("{name}: {e}")))?;
            Ok(CheckResult {
                name,
                error,
                tolerance: tolerance * tolerance_scale,
            })
        })
        .collect()
}

pub fn run_command(a: &SelfcheckArgs) -> CliResult<()> {
    if !(a.tolerance_scale >= 0.0) {
        return Err(Failure::parameter("tolerance scale must be nonnegative"));
    }
    let start = Instant::now();
    let results = run_checks(a.seed, a.tolerance_scale)?;
    println!(
        "{:<32} {:>12} {:>12}  result",
        "check", "error", "tolerance"
    );
    for r in &results {
        println!(
            "{:<32} {:>12.3e} {:>12.3e}  {}",
            r.name,
            r.error,
            r.tolerance,
            if r.passed() { "PASS" } else { "FAIL" }
        );
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!(
        "{} checks, {failed} failed, {:.1} s",
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        return Err(Failure::numerical(format!("{failed} self-check(s) failed")));
    }
    Ok(())
}

fn uniform(rng: &mut RngStream, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.uniform_open01()
}

fn random_params(rng: &mut RngStream, max_n: usize) -> betajacobi::Result<JacobiParams> {
    let n = 1 + (rng.next_u64() % max_n as u64) as usize;
    let n1 = n as f64 - 1.0 + uniform(rng, 0.05, 2.0 * n as f64);
    let n2 = n as f64 - 1.0 + uniform(rng, 0.05, 2.0 * n as f64);
    JacobiParams::new(n, n1, n2, uniform(rng, 0.3, 8.0))
}

fn random_tridiagonal(rng: &mut RngStream, n: usize) -> betajacobi::Result<SymTridiagonal<f64>> {
    let diag = (0..n).map(|_| uniform(rng, -2.0, 2.0)).collect();
    let off = (0..n - 1).map(|_| uniform(rng, -1.5, 1.5)).collect();
    SymTridiagonal::new(diag, off)
}

fn relative(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(1.0)
}

fn determinant_identities(seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut rng = RngStream::new(seed, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let p = random_params(&mut rng, 100)?;
        let a = sample_angles::<f64>(&p, &mut rng)?;
        let d = det_identities(&a);
        let q = SpectrumQuery::smallest(p.n);
        let log_lambda: f64 = singular_values(&build_m(&a), q)?
            .iter()
            .map(|s| 2.0 * s.ln())
            .sum();
        let log_one_minus: f64 = singular_values(&build_complement(&a), q)?
            .iter()
            .map(|s| 2.0 * s.ln())
            .sum();
        worst = worst
            .max(relative(log_lambda, d.log_prod_lambda))
            .max(relative(log_one_minus, d.log_prod_one_minus));
    }
    Ok((worst, 1e-8))
}

fn doubling_symmetry(seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut rng = RngStream::new(seed, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let n = 1 + (rng.next_u64() % 40) as usize;
        let diag = (0..n).map(|_| uniform(&mut rng, -2.0, 2.0)).collect();
        let off = (0..n - 1).map(|_| uniform(&mut rng, -2.0, 2.0)).collect();
        let ev = full_spectrum(&double(&Bidiagonal::lower(diag, off)?), 0.0);
        let scale = ev.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for i in 0..n {
            worst = worst.max((ev[i] + ev[2 * n - 1 - i]).abs() / scale);
        }
    }
    Ok((worst, 1e-9))
}

fn affine_hn(seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut rng = RngStream::new(seed, 0);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < 100 {
        let p = random_params(&mut rng, 60)?;
        let Ok(sc) = scaling_constants::<f64>(&p) else {
            continue;
        };
        let a = sample_angles::<f64>(&p, &mut rng)?;
        let h = full_spectrum(&hn_from_angles(&a, &sc), 0.0);
        let z = full_spectrum(&gram(&build_z(&a)), 0.0);
        let scale = sc.alpha_n * sc.lambda_plus.max(1.0);
        for (hv, zv) in h.iter().zip(z.iter().rev()) {
            worst = worst.max((hv - sc.alpha_n * (sc.lambda_plus - zv)).abs() / scale);
        }
        done += 1;
    }
    Ok((worst, 1e-8))
}

fn hard_edge_inverse(seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut rng = RngStream::new(seed, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let p = random_params(&mut rng, 100)?;
        let a = sample_angles::<f64>(&p, &mut rng)?;
        let w = build_w(&a);
        let m = hard_edge_scale(&p);
        let kernel = discrete_inverse_kernel(&w, m)?.bottom_spectrum(p.n)?;
        let direct = singular_values(&w, SpectrumQuery::smallest(p.n))?;
        for (k, s) in kernel.iter().zip(&direct) {
            worst = worst.max((k.ln() - (m * s * s).ln()).abs());
        }
    }
    Ok((worst, 1e-8))
}

fn bisection_vs_dense(seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut rng = RngStream::new(seed, 0);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let t = random_tridiagonal(&mut rng, 1 + i % 8)?;
        let dense = dense_sym_eigen(&t.to_dense())?;
        for (x, y) in full_spectrum(&t, 0.0).iter().zip(&dense) {
            worst = worst.max((x - y).abs());
        }
    }
    Ok((worst, 1e-10))
}

fn interlacing_and_trace(seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut rng = RngStream::new(seed, 0);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let n = 2 + i % 29;
        let t = random_tridiagonal(&mut rng, n)?;
        let outer = full_spectrum(&t, 0.0);
        let inner = full_spectrum(&t.leading(n - 1)?, 0.0);
        for j in 0..n - 1 {
            worst = worst.max(outer[j] - inner[j]).max(inner[j] - outer[j + 1]);
        }
        worst = worst.max((outer.iter().sum::<f64>() - t.trace()).abs() / n as f64);
    }
    Ok((worst, 1e-9))
}

fn noiseless_airy(_seed: u64) -> betajacobi::Result<(f64, f64)> {
    const AIRY_ZEROS: [f64; 3] = [
        2.338_107_410_459_767,
        4.087_949_444_130_97,
        5.520_559_828_095_551,
    ];
    let grid = GridSpec::new(12.0, 0.005)?;
    let path = BrownianPath::zero(grid.step(), grid.cells());
    let ev = sae_eigenvalues(f64::INFINITY, &grid, &path, 3)?;
    let worst = ev
        .iter()
        .zip(AIRY_ZEROS)
        .map(|(x, z)| (x - z).abs())
        .fold(0.0, f64::max);
    Ok((worst, 1e-3))
}

fn noiseless_bessel(_seed: u64) -> betajacobi::Result<(f64, f64)> {
    // first zero of J_0; the ground state is j^2 / 4
    const J0_FIRST_ZERO: f64 = 2.404_825_557_695_773;
    let grid = GridSpec::new(10.0, 0.01)?;
    let path = BrownianPath::zero(grid.step(), grid.cells());
    let ev = sbo_eigenvalues(&sbo_inverse_kernel(f64::INFINITY, 0.0, &grid, &path)?, 1)?;
    Ok((
        (ev[0] / (J0_FIRST_ZERO * J0_FIRST_ZERO / 4.0) - 1.0).abs(),
        1e-3,
    ))
}

fn density_mass(_seed: u64) -> betajacobi::Result<(f64, f64)> {
    let mut worst: f64 = 0.0;
    for (g1, g2) in [(1.0f64, 1.0f64), (2.0, 3.0), (1.2, 7.5)] {
        let d = JacobiDensity::new(g1, g2)?;
        let (lo, hi) = d.support();
        let mass = integrate_on_support(&|x| d.eval(x), lo, hi, lo, hi, 1e-10);
        worst = worst.max((mass - 1.0).abs());
    }
    Ok((worst, 1e-6))
}
