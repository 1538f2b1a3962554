mod common;

use betajacobi::{
    discrete_inverse_kernel, kernel_equivalence_trial, ks_two_sample, sae_discretize,
    sae_eigenvalues, sample_brownian, sbo_eigenvalues, sbo_inverse_kernel, Bidiagonal,
    BrownianPath, EmpiricalDistribution, EquivalencePlan, GridSpec, KernelForm, KernelOperator,
    KernelRepresentation, LimitRegime, RngStream,
};

/// `f(L)` for `-f'' + x f = lambda f`, `f(0) = 0`, `f'(0) = 1`, by RK4.
fn airy_shoot(lambda: f64, length: f64, steps: usize) -> f64 {
    let h = length / steps as f64;
    let rhs = |x: f64, f: f64, g: f64| (g, (x - lambda) * f);
    let (mut x, mut f, mut g) = (0.0, 0.0, 1.0);
    for _ in 0..steps {
        let (k1f, k1g) = rhs(x, f, g);
        let (k2f, k2g) = rhs(x + h / 2.0, f + h / 2.0 * k1f, g + h / 2.0 * k1g);
        let (k3f, k3g) = rhs(x + h / 2.0, f + h / 2.0 * k2f, g + h / 2.0 * k2g);
        let (k4f, k4g) = rhs(x + h, f + h * k3f, g + h * k3g);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        x += h;
    }
    f
}

/// Dirichlet eigenvalue on `[0, length]` bracketed in `(lo, hi)`.
fn airy_oracle(lo: f64, hi: f64, length: f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    let fa = airy_shoot(a, length, 20_000).signum();
    for _ in 0..60 {
        let m = 0.5 * (a + b);
        if airy_shoot(m, length, 20_000).signum() == fa {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn noiseless_sae(length: f64, step: f64, k: usize) -> Vec<f64> {
    let g = GridSpec::new(length, step).unwrap();
    let path = BrownianPath::zero(step, g.cells());
    sae_eigenvalues(f64::INFINITY, &g, &path, k).unwrap()
}

#[test]
fn shooting_oracle_reproduces_airy_zeros() {
    let want = [
        2.338_107_410_459_767,
        4.087_949_444_130_97,
        5.520_559_828_095_551,
    ];
    let brackets = [(1.5, 3.0), (3.5, 4.8), (5.0, 6.0)];
    for (&(lo, hi), w) in brackets.iter().zip(want) {
        assert!((airy_oracle(lo, hi, 12.0) - w).abs() < 1e-8);
    }
}

#[test]
fn noiseless_sae_converges_at_second_order() {
    let length = 12.0;
    let oracle = [
        airy_oracle(1.5, 3.0, length),
        airy_oracle(3.5, 4.8, length),
        airy_oracle(5.0, 6.0, length),
    ];
    let steps = [0.04, 0.02, 0.01];
    let errors: Vec<Vec<f64>> = steps
        .iter()
        .map(|&h| {
            noiseless_sae(length, h, 3)
                .iter()
                .zip(&oracle)
                .map(|(a, b)| (a - b).abs())
                .collect()
        })
        .collect();
    for j in 0..3 {
        let e: Vec<f64> = errors.iter().map(|row| row[j]).collect();
        assert!(e[2] < 1e-3, "level {j} error {}", e[2]);
        // least-squares slope of log error against log step
        let xs: Vec<f64> = steps.iter().map(|h| h.ln()).collect();
        let ys: Vec<f64> = e.iter().map(|v| v.ln()).collect();
        let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
        let slope = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - mx) * (y - my))
            .sum::<f64>()
            / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
        assert!((1.7..=2.3).contains(&slope), "level {j} order {slope}");
    }
}

#[test]
fn sae_spectra_are_simple() {
    let g = GridSpec::new(10.0, 0.02).unwrap();
    let mut min_gap = f64::INFINITY;
    for t in 0..1000 {
        let mut s = RngStream::new(600, t);
        let path = sample_brownian(10.0, 0.02, &mut s).unwrap();
        let ev = sae_eigenvalues(1.0, &g, &path, 3).unwrap();
        min_gap = ev.windows(2).map(|w| w[1] - w[0]).fold(min_gap, f64::min);
    }
    assert!(min_gap > 1e-6, "{min_gap}");
}

#[test]
fn sae_matrix_shape() {
    let g = GridSpec::new(1.0f64, 0.25).unwrap();
    let path = BrownianPath::from_values(0.25, vec![0.0, 0.5, 0.25, 1.0, 1.5]).unwrap();
    let t = sae_discretize(4.0, &g, &path).unwrap();
    assert_eq!(t.dim(), 3);
    // 2/h^2 + x_1 + (2/sqrt(4)) (b_2 - b_1)/h
    assert!((t.diag()[0] - (32.0 + 0.25 - 1.0)).abs() < 1e-12);
    assert!(t.offdiag().iter().all(|&e| e == -16.0));
    let short = BrownianPath::from_values(0.25, vec![0.0, 1.0]).unwrap();
    assert!(sae_discretize(4.0, &g, &short).is_err());
}

#[test]
fn sbo_structured_and_dense_solvers_agree() {
    let g = GridSpec::new(4.0f64, 0.05).unwrap();
    for t in 0..5 {
        let path = sample_brownian(4.0, 0.05, &mut RngStream::new(601, t)).unwrap();
        let op = sbo_inverse_kernel(2.0, 0.5, &g, &path).unwrap();
        let fast = op.bottom_spectrum(3).unwrap();
        let dense = op.bottom_spectrum_dense(3).unwrap();
        for (f, d) in fast.iter().zip(&dense) {
            assert!((f / d - 1.0).abs() < 1e-9, "{f} vs {d}");
        }
    }
}

#[test]
fn sbo_ground_state_is_stable_under_refinement() {
    let mut refine = Vec::new();
    let mut extend = Vec::new();
    for t in 0..40 {
        let mut s = RngStream::new(602, t);
        let coarse = sample_brownian(8.0, 0.01, &mut s).unwrap();
        let fine = coarse.refine(&mut s);
        let long = coarse.extend_to(12.0, &mut s);
        let lambda0 = |len: f64, h: f64, p: &BrownianPath<f64>| {
            let g = GridSpec::new(len, h).unwrap();
            sbo_eigenvalues(&sbo_inverse_kernel(2.0, 0.0, &g, p).unwrap(), 1).unwrap()[0]
        };
        let base = lambda0(8.0, 0.01, &coarse);
        refine.push((lambda0(8.0, 0.005, &fine) / base - 1.0).abs());
        extend.push((lambda0(12.0, 0.01, &long) / base - 1.0).abs());
    }
    refine.sort_by(|a, b| a.partial_cmp(b).unwrap());
    extend.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert!(
        refine[39] < 0.02,
        "refinement moved Lambda_0 by {}",
        refine[39]
    );
    // truncation error is heavy-tailed: a path that drifts far down makes
    // the weight exp(-x - sigma b(x)) large beyond L
    assert!(extend[20] < 0.01, "median extension shift {}", extend[20]);
    assert!(
        extend[31] < 0.05,
        "80th percentile extension shift {}",
        extend[31]
    );
}

#[test]
fn sbo_beta_two_ground_state_is_exponential() {
    // for beta = 2, a = 0 the hard-edge gap law is P(Lambda_0 > t) = exp(-t)
    let g = GridSpec::new(12.0, 0.01).unwrap();
    let sample: Vec<f64> = (0..2000)
        .map(|t| {
            let path = sample_brownian(12.0, 0.01, &mut RngStream::new(603, t)).unwrap();
            sbo_eigenvalues(&sbo_inverse_kernel(2.0, 0.0, &g, &path).unwrap(), 1).unwrap()[0]
        })
        .collect();
    let mut s = RngStream::new(604, 0);
    let exact: Vec<f64> = (0..20_000).map(|_| -s.uniform_open01().ln()).collect();
    let d = ks_two_sample(
        &EmpiricalDistribution::new(sample).unwrap(),
        &EmpiricalDistribution::new(exact).unwrap(),
    );
    assert!(d < 0.05, "{d}");
}

#[test]
fn discrete_inverse_kernel_two_by_two() {
    let w = Bidiagonal::lower(vec![0.5f64, 0.8], vec![-0.3]).unwrap();
    let m = 4.0;
    let op = discrete_inverse_kernel(&w, m).unwrap();
    let k = op.matrix();
    // (sqrt(m) W)^{-1} = [[1/a0, 0], [b0/(a0 a1), 1/a1]] with a = (1, 1.6), b0 = 0.6
    assert!((k[(0, 0)] - 1.0).abs() < 1e-14);
    assert!((k[(1, 1)] - 1.0 / 1.6).abs() < 1e-14);
    assert!((k[(1, 0)] - 0.6 / 1.6).abs() < 1e-14);
    assert_eq!(k[(0, 1)], 0.0);
    assert_eq!(op.nodes(), &[0.5, 1.0]);
    assert_eq!(op.form(), KernelForm::Volterra);
    assert!(
        discrete_inverse_kernel(&Bidiagonal::lower(vec![0.5, 0.8], vec![0.3]).unwrap(), m).is_err()
    );
}

#[test]
fn discrete_inverse_kernel_inverts_scaled_w() {
    let mut rng = RngStream::new(605, 0);
    let n = 50;
    let diag: Vec<f64> = (0..n)
        .map(|_| common::uniform(&mut rng, 0.05, 1.0))
        .collect();
    let off: Vec<f64> = (0..n - 1)
        .map(|_| -common::uniform(&mut rng, 0.05, 1.0))
        .collect();
    let w = Bidiagonal::lower(diag, off).unwrap();
    let m = 37.0;
    let k = discrete_inverse_kernel(&w, m).unwrap().matrix();
    let prod = k.matmul(&w.scaled(m.sqrt()).to_dense());
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!(
                (prod[(i, j)] - want).abs() < 1e-8,
                "({i},{j}) {}",
                prod[(i, j)]
            );
        }
    }
}

#[test]
fn dense_kernel_representations() {
    let a = betajacobi::DenseMatrix::from_rows(&[vec![2.0f64, 1.0], vec![1.0, 2.0]]);
    let op = KernelOperator::new(
        vec![1.0, 2.0],
        vec![1.0, 1.0],
        KernelRepresentation::Dense {
            matrix: a,
            form: KernelForm::Symmetric,
        },
    )
    .unwrap();
    let ev = op.bottom_spectrum(2).unwrap();
    assert!((ev[0] - 1.0 / 3.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    assert!(KernelOperator::new(
        vec![1.0],
        vec![1.0, 2.0],
        KernelRepresentation::MinKernel {
            cumulative: vec![1.0]
        }
    )
    .is_err());
}

#[test]
fn limit_kernel_matches_transported_bessel_operator() {
    let plan = EquivalencePlan {
        regime: LimitRegime::Gamma(2.0),
        a: 0.5,
        beta: 2.0,
        x_step: 1e-3,
        u_length: 10.0,
        u_step: 1e-2,
    };
    let mut discrepancies: Vec<f64> = (0..20)
        .map(|t| {
            kernel_equivalence_trial(&plan, &mut RngStream::new(606, t))
                .unwrap()
                .relative_discrepancy()
        })
        .collect();
    discrepancies.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert!(discrepancies[10] < 0.05, "median {}", discrepancies[10]);
    let inf = EquivalencePlan {
        regime: LimitRegime::Infinite,
        ..plan
    };
    let s = kernel_equivalence_trial(&inf, &mut RngStream::new(607, 0)).unwrap();
    assert!(s.relative_discrepancy() < 0.1, "{s:?}");
}
