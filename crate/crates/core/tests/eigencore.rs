mod common;

use betajacobi::{
    dense_sym_eigen, extreme_eigenvalues, full_spectrum, sturm_count, RngStream, SpectrumQuery,
    SymTridiagonal,
};
use common::{classical_jacobi, random_tridiagonal};
use proptest::prelude::*;

fn tridiagonal_strategy(max_n: usize) -> impl Strategy<Value = SymTridiagonal<f64>> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(-5.0..5.0f64, n),
            prop::collection::vec(-3.0..3.0f64, n - 1),
        )
            .prop_map(|(d, e)| SymTridiagonal::new(d, e).unwrap())
    })
}

#[test]
fn sturm_counts_match_dense_oracle() {
    let mut rng = RngStream::new(200, 0);
    for _ in 0..100 {
        let t = random_tridiagonal(&mut rng, 8);
        let ev = classical_jacobi(&t.to_dense());
        for probe in [-3.0, -1.0, -0.25, 0.0, 0.5, 1.7, 3.0] {
            let expect = ev.iter().filter(|&&v| v < probe).count();
            assert_eq!(sturm_count(&t, probe), expect);
        }
    }
}

#[test]
fn full_spectra_match_dense_oracle() {
    let mut rng = RngStream::new(201, 0);
    for trial in 0..200 {
        let n = 1 + trial % 8;
        let t = random_tridiagonal(&mut rng, n);
        let got =
            extreme_eigenvalues(&t, SpectrumQuery::smallest(n).with_tolerance(1e-13)).unwrap();
        let want = classical_jacobi(&t.to_dense());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-10, "{g} vs {w}");
        }
    }
}

#[test]
fn largest_side_returns_top_of_spectrum() {
    let mut rng = RngStream::new(202, 0);
    let t = random_tridiagonal(&mut rng, 20);
    let all = full_spectrum(&t, 0.0);
    let top = extreme_eigenvalues(&t, SpectrumQuery::largest(3)).unwrap();
    assert_eq!(top.len(), 3);
    for (a, b) in top.iter().zip(&all[17..]) {
        assert!((a - b).abs() < 1e-13);
    }
}

#[test]
fn dense_solver_agrees_with_bisection() {
    let mut rng = RngStream::new(203, 0);
    for n in [5usize, 17, 33, 50] {
        let t = random_tridiagonal(&mut rng, n);
        let dense = dense_sym_eigen(&t.to_dense()).unwrap();
        let bis = full_spectrum(&t, 0.0);
        for (a, b) in dense.iter().zip(&bis) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn certified_bracket_width() {
    let t = SymTridiagonal::new(vec![2.0, 2.0], vec![1.0]).unwrap();
    let v = extreme_eigenvalues(&t, SpectrumQuery::smallest(2).with_tolerance(1e-12)).unwrap();
    for (x, exact) in v.iter().zip([1.0f64, 3.0]) {
        assert!((x - exact).abs() <= 1e-12);
        assert_eq!(sturm_count(&t, x - 1e-12), sturm_count(&t, exact - 1e-12));
    }
}

proptest! {
    #[test]
    fn interlacing(t in tridiagonal_strategy(30)) {
        prop_assume!(t.dim() >= 2);
        let n = t.dim();
        let outer = full_spectrum(&t, 0.0);
        let inner = full_spectrum(&t.leading(n - 1).unwrap(), 0.0);
        for i in 0..n - 1 {
            prop_assert!(outer[i] <= inner[i] + 1e-10);
            prop_assert!(inner[i] <= outer[i + 1] + 1e-10);
        }
    }

    #[test]
    fn trace_identity(t in tridiagonal_strategy(30)) {
        let sum: f64 = full_spectrum(&t, 0.0).iter().sum();
        let scale = t.diag().iter().map(|d| d.abs()).sum::<f64>().max(1.0);
        prop_assert!((sum - t.trace()).abs() < 1e-8 * scale);
    }

    #[test]
    fn sturm_count_is_monotone(t in tridiagonal_strategy(20), x in -10.0..10.0f64, dx in 0.0..5.0f64) {
        prop_assert!(sturm_count(&t, x) <= sturm_count(&t, x + dx));
        prop_assert!(sturm_count(&t, x + dx) <= t.dim());
    }
}
