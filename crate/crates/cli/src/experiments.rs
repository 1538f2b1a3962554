//! Command runners. Every command validates its parameters before any
//! sampling starts; trial `t` always draws from stream `(seed, t)`.

use std::fs;
use std::io::Write;
use std::path::Path;

use betajacobi::{
    hard_edge_sample, hard_edge_scale, run_trials, sae_eigenvalues, sample_angles, sample_brownian,
    sample_matrix_eigenvalues, sbo_eigenvalues, sbo_inverse_kernel, scaling_constants,
    soft_edge_sample, GridSpec, JacobiParams,
};
use serde_json::{json, Map, Value};

use crate::args::{
    Command, CompareArgs, EdgeArgs, EnsembleArgs, Format, GridArgs, RunArgs, SaeArgs, SampleArgs,
    SampleWhat, SboArgs,
};
use crate::csvio::{numbered, read_table, Table};
use crate::summary::{compare_summary, distribution, sample_summary};
use crate::{selfcheck, CliResult, Failure};

/// Default KS thresholds when `--threshold` is not given.
pub const SOFT_EDGE_THRESHOLD: f64 = 0.06;
pub const HARD_EDGE_THRESHOLD: f64 = 0.08;
pub const DEFAULT_THRESHOLD: f64 = 0.05;

pub fn dispatch(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Sample(a) => sample(&a),
        Command::SoftEdge(a) => edge(&a, true),
        Command::HardEdge(a) => edge(&a, false),
        Command::Sae(a) => sae(&a),
        Command::Sbo(a) => sbo(&a),
        Command::Compare(a) => compare(&a),
        Command::Selfcheck(a) => selfcheck::run_command(&a),
    }
}

fn params_of(e: &EnsembleArgs) -> CliResult<JacobiParams> {
    Ok(JacobiParams::new(e.n, e.n1, e.n2, e.beta)?)
}

fn ensemble_json(command: &str, e: &EnsembleArgs, seed: u64) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("n".into(), json!(e.n));
    m.insert("n1".into(), json!(e.n1));
    m.insert("n2".into(), json!(e.n2));
    m.insert("beta".into(), json!(e.beta));
    m.insert("seed".into(), json!(seed));
    m
}

fn check_count(k: usize, max: usize, what: &str) -> CliResult<()> {
    if k == 0 || k > max {
        return Err(Failure::parameter(format!(
            "--k must lie in 1..={max} for {what}, got {k}"
        )));
    }
    Ok(())
}

/// Everything about a run that can be checked before sampling.
struct Prepared {
    column: String,
    reference: Option<Vec<f64>>,
    threshold: f64,
}

fn prepare(run: &RunArgs, columns: &[String], default_threshold: f64) -> CliResult<Prepared> {
    if run.trials == 0 {
        return Err(Failure::parameter("--trials must be at least 1"));
    }
    if run.threads == Some(0) {
        return Err(Failure::parameter("--threads must be at least 1"));
    }
    let threshold = run.threshold.unwrap_or(default_threshold);
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Failure::parameter(format!(
            "--threshold must lie in (0, 1], got {threshold}"
        )));
    }
    let column = run.column.clone().unwrap_or_else(|| columns[0].clone());
    if !columns.contains(&column) {
        return Err(Failure::parameter(format!(
            "no column named '{column}' (have: {})",
            columns.join(", ")
        )));
    }
    if let Some(dir) = run.out.as_deref().and_then(Path::parent) {
        if !dir.as_os_str().is_empty() && !dir.is_dir() {
            return Err(Failure::parameter(format!(
                "output directory {} does not exist",
                dir.display()
            )));
        }
    }
    let reference = match &run.reference {
        Some(path) => {
            let values = read_table(path)?.column(&column)?;
            if values.is_empty() {
                return Err(Failure::parameter(format!(
                    "{}: no data rows",
                    path.display()
                )));
            }
            Some(values)
        }
        None => None,
    };
    Ok(Prepared {
        column,
        reference,
        threshold,
    })
}

pub fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::parameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::parameter(format!("cannot write output: {e}")))
        }
    }
}

fn finish(
    table: Table,
    params: Map<String, Value>,
    run: &RunArgs,
    prep: Prepared,
) -> CliResult<()> {
    let sample = distribution(table.column(&prep.column)?, "sample")?;
    let reference = prep
        .reference
        .map(|r| distribution(r, "reference"))
        .transpose()?;
    let mut params = params;
    params.insert("column".into(), json!(prep.column));
    let (summary, pass) = sample_summary(params, &sample, reference.as_ref(), prep.threshold);
    let text = match run.format {
        Format::Csv => table.to_csv(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        ),
    };
    write_output(run.out.as_deref(), &text)?;
    if let (Some(pass), Some(ks)) = (pass, summary["ks"].as_f64()) {
        if run.format == Format::Csv {
            eprintln!("ks={ks:.6} threshold={} pass={pass}", prep.threshold);
        }
        if !pass {
            return Err(Failure::comparison(format!(
                "KS distance {ks:.6} is not below threshold {}",
                prep.threshold
            )));
        }
    }
    Ok(())
}

fn sample(a: &SampleArgs) -> CliResult<()> {
    let p = params_of(&a.ensemble)?;
    let columns = match a.what {
        SampleWhat::Eigenvalues => numbered("eig", 1, p.n),
        SampleWhat::Angles => {
            let mut c = numbered("c", 1, p.n);
            c.extend(numbered("ct", 1, p.n - 1));
            c
        }
    };
    let prep = prepare(&a.run, &columns, DEFAULT_THRESHOLD)?;
    let rows = match a.what {
        SampleWhat::Eigenvalues => run_trials(a.run.seed, a.run.trials, a.run.threads, |s| {
            sample_matrix_eigenvalues::<f64>(&p, s)
        })?,
        SampleWhat::Angles => run_trials(a.run.seed, a.run.trials, a.run.threads, |s| {
            let angles = sample_angles::<f64>(&p, s)?;
            Ok(angles.c().iter().chain(angles.ct()).copied().collect())
        })?,
    };
    let mut params = ensemble_json("sample", &a.ensemble, a.run.seed);
    params.insert("what".into(), json!(format!("{:?}", a.what).to_lowercase()));
    finish(Table::new(columns, rows), params, &a.run, prep)
}

fn edge(a: &EdgeArgs, soft: bool) -> CliResult<()> {
    let p = params_of(&a.ensemble)?;
    check_count(a.k, p.n, "an ensemble of this size")?;
    let name = if soft { "soft-edge" } else { "hard-edge" };
    let mut params = ensemble_json(name, &a.ensemble, a.run.seed);
    params.insert("k".into(), json!(a.k));
    if soft {
        if !(p.n2 > p.n as f64) {
            return Err(Failure::parameter(format!(
                "soft edge needs --n2 > --n, got n2 = {} with n = {}",
                p.n2, p.n
            )));
        }
        let sc = scaling_constants::<f64>(&p)?;
        params.insert("m_n".into(), json!(sc.m_n));
        params.insert("alpha_n".into(), json!(sc.alpha_n));
        params.insert("lambda_plus".into(), json!(sc.lambda_plus));
    } else {
        params.insert("m_n".into(), json!(hard_edge_scale(&p)));
        params.insert("a".into(), json!(p.a()));
    }
    let columns = numbered("lambda", 0, a.k);
    let prep = prepare(
        &a.run,
        &columns,
        if soft {
            SOFT_EDGE_THRESHOLD
        } else {
            HARD_EDGE_THRESHOLD
        },
    )?;
    let rows = run_trials(a.run.seed, a.run.trials, a.run.threads, |s| {
        if soft {
            soft_edge_sample::<f64>(&p, a.k, s)
        } else {
            hard_edge_sample::<f64>(&p, a.k, s)
        }
    })?;
    finish(Table::new(columns, rows), params, &a.run, prep)
}

fn grid_of(g: &GridArgs) -> CliResult<GridSpec<f64>> {
    Ok(GridSpec::new(g.grid_length, g.grid_step)?)
}

fn grid_table(table: Table, grid: &GridSpec<f64>, run: &RunArgs) -> Table {
    table
        .with_metadata("grid_length", grid.length())
        .with_metadata("grid_step", grid.step())
        .with_metadata("grid_cells", grid.cells())
        .with_metadata("seed", run.seed)
        .with_metadata("trials", run.trials)
}

fn grid_json(
    command: &str,
    beta: f64,
    grid: &GridSpec<f64>,
    k: usize,
    seed: u64,
) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("beta".into(), json!(beta));
    m.insert("grid_length".into(), json!(grid.length()));
    m.insert("grid_step".into(), json!(grid.step()));
    m.insert("grid_cells".into(), json!(grid.cells()));
    m.insert("k".into(), json!(k));
    m.insert("seed".into(), json!(seed));
    m
}

fn check_beta(beta: f64) -> CliResult<()> {
    if !(beta > 0.0) {
        return Err(Failure::parameter(format!(
            "--beta must be positive, got {beta}"
        )));
    }
    Ok(())
}

fn sae(a: &SaeArgs) -> CliResult<()> {
    check_beta(a.beta)?;
    let grid = grid_of(&a.grid)?;
    check_count(a.k, grid.cells() - 1, "the interior grid nodes")?;
    let columns = numbered("lambda", 0, a.k);
    let prep = prepare(&a.run, &columns, SOFT_EDGE_THRESHOLD)?;
    let rows = run_trials(a.run.seed, a.run.trials, a.run.threads, |s| {
        let path = sample_brownian(grid.length(), grid.step(), s)?;
        sae_eigenvalues(a.beta, &grid, &path, a.k)
    })?;
    let table = grid_table(Table::new(columns, rows), &grid, &a.run)
        .with_metadata("operator", "stochastic-airy")
        .with_metadata("beta", a.beta)
        .with_metadata("k", a.k);
    finish(
        table,
        grid_json("sae", a.beta, &grid, a.k, a.run.seed),
        &a.run,
        prep,
    )
}

fn sbo(a: &SboArgs) -> CliResult<()> {
    check_beta(a.beta)?;
    if !(a.a > -1.0) {
        return Err(Failure::parameter(format!(
            "--a must exceed -1, got {}",
            a.a
        )));
    }
    let grid = grid_of(&a.grid)?;
    check_count(a.k, grid.cells(), "the grid nodes")?;
    let columns = numbered("lambda", 0, a.k);
    let prep = prepare(&a.run, &columns, HARD_EDGE_THRESHOLD)?;
    let rows = run_trials(a.run.seed, a.run.trials, a.run.threads, |s| {
        let path = sample_brownian(grid.length(), grid.step(), s)?;
        sbo_eigenvalues(&sbo_inverse_kernel(a.beta, a.a, &grid, &path)?, a.k)
    })?;
    let table = grid_table(Table::new(columns, rows), &grid, &a.run)
        .with_metadata("operator", "stochastic-bessel")
        .with_metadata("beta", a.beta)
        .with_metadata("a", a.a)
        .with_metadata("k", a.k);
    let mut params = grid_json("sbo", a.beta, &grid, a.k, a.run.seed);
    params.insert("a".into(), json!(a.a));
    finish(table, params, &a.run, prep)
}

fn compare(a: &CompareArgs) -> CliResult<()> {
    if !(a.threshold > 0.0 && a.threshold <= 1.0) {
        return Err(Failure::parameter(format!(
            "--threshold must lie in (0, 1], got {}",
            a.threshold
        )));
    }
    let column_b = a.column_b.clone().unwrap_or_else(|| a.column.clone());
    let da = distribution(
        read_table(&a.file_a)?.column(&a.column)?,
        &a.file_a.display().to_string(),
    )?;
    let db = distribution(
        read_table(&a.file_b)?.column(&column_b)?,
        &a.file_b.display().to_string(),
    )?;
    let mut params = Map::new();
    params.insert("command".into(), json!("compare"));
    params.insert("file_a".into(), json!(a.file_a.display().to_string()));
    params.insert("file_b".into(), json!(a.file_b.display().to_string()));
    params.insert("column".into(), json!(a.column));
    params.insert("column_b".into(), json!(column_b));
    params.insert("threshold".into(), json!(a.threshold));
    let (summary, pass) = compare_summary(params, &da, &db, a.threshold);
    write_output(
        a.out.as_deref(),
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        ),
    )?;
    if !pass {
        return Err(Failure::comparison(format!(
            "KS distance {:.6} is not below threshold {}",
            summary["ks"].as_f64().unwrap_or(f64::NAN),
            a.threshold
        )));
    }
    Ok(())
}
