use betajacobi::{hard_edge_sample, run_trials, JacobiParams};

#[test]
fn sampled_spectra_do_not_depend_on_thread_count() {
    let p = JacobiParams::new(30, 31.5, 60.0, 1.0).unwrap();
    let run =
        |threads| run_trials(77, 200, threads, |s| hard_edge_sample::<f64>(&p, 3, s)).unwrap();
    let one = run(Some(1));
    assert_eq!(one, run(Some(8)));
    assert_eq!(one, run(None));
    assert_eq!(one.len(), 200);
}

#[test]
fn zero_trials_or_threads_are_rejected() {
    let p = JacobiParams::new(3, 3.0, 6.0, 2.0).unwrap();
    assert!(run_trials(1, 0, None, |s| hard_edge_sample::<f64>(&p, 1, s)).is_err());
    assert!(run_trials(1, 5, Some(0), |s| hard_edge_sample::<f64>(&p, 1, s)).is_err());
}
