//! Subcommand implementations. Everything writes deterministic output so
//! repeated invocations produce byte-identical files.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use scfp::checks::{self, CheckResult};
use scfp::presets::{benchmark_baseline_problem, benchmark_problem};
use scfp::{run, schedule_case, Termination, Trace};

use crate::config::RunConfig;
use crate::table;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Numerical(msg) => write!(f, "numerical failure: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl From<scfp::Error> for CliError {
    fn from(e: scfp::Error) -> Self {
        if e.is_config_error() {
            CliError::Config(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CmdResult = Result<(), CliError>;

fn termination_label(t: &Termination) -> &'static str {
    match t {
        Termination::MaxIterations => "maximum iteration count",
        Termination::StepTolerance => "step tolerance",
        Termination::ResidualTolerance => "residual tolerance",
    }
}

fn trace_csv(trace: &Trace) -> String {
    let dim = trace.records.first().map_or(0, |r| r.x_next.dim());
    let mut header = vec!["n".to_string()];
    for i in 1..=dim {
        header.push(format!("x_{i}"));
    }
    for extra in ["residual_s", "residual_t", "step_norm", "bregman_from_anchor"] {
        header.push(extra.to_string());
    }
    let rows: Vec<Vec<String>> = trace
        .records
        .iter()
        .map(|r| {
            let mut row = vec![(r.n + 1).to_string()];
            row.extend(r.x_next.coords().iter().map(|v| table::cell(*v)));
            row.push(table::cell(r.residual_s));
            row.push(table::cell(r.residual_t));
            row.push(table::cell(r.step_norm));
            row.push(table::cell(r.bregman_from_x0));
            row
        })
        .collect();
    table::to_csv(&header, &rows)
}

pub fn cmd_run(
    config_path: &Path,
    output: Option<&Path>,
    max_iter: Option<usize>,
    tol: Option<f64>,
) -> CmdResult {
    let text = fs::read_to_string(config_path)?;
    let mut config = RunConfig::parse(&text)?;
    if let Some(n) = max_iter {
        config.stop.max_iter = n;
    }
    if let Some(t) = tol {
        config.stop.residual_tol = Some(t);
    }
    let problem = config.to_problem()?;
    let trace = run(problem)?;
    for warning in &trace.warnings {
        log::warn!("{warning}");
    }
    let csv = trace_csv(&trace);
    match output {
        Some(path) => fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    eprintln!(
        "stopped by {} after {} steps",
        termination_label(&trace.termination),
        trace.records.len()
    );
    Ok(())
}

fn solved_sequence(trace: &Trace, head: &[f64]) -> Vec<f64> {
    let mut xs = head.to_vec();
    for r in &trace.records {
        xs.push(r.x_next.coords()[0]);
    }
    xs
}

fn benchmark_table_one() -> Result<(Vec<String>, Vec<Vec<String>>), CliError> {
    let steps = 24;
    let baseline6 = solved_sequence(&run(benchmark_baseline_problem(6.0, steps)?)?, &[6.0]);
    let baseline3 = solved_sequence(&run(benchmark_baseline_problem(3.0, steps)?)?, &[3.0]);
    let inertial6 =
        solved_sequence(&run(benchmark_problem(6.0, 6.0, schedule_case(1)?, steps)?)?, &[6.0, 6.0]);
    let inertial3 =
        solved_sequence(&run(benchmark_problem(3.0, 3.0, schedule_case(1)?, steps)?)?, &[3.0, 3.0]);
    let header = ["n", "baseline_from_6", "baseline_from_3", "inertial_from_6", "inertial_from_3"]
        .map(String::from)
        .to_vec();
    let rows = (0..=25)
        .map(|n| {
            let baseline_cell = |col: &[f64]| {
                if n == 0 {
                    String::new()
                } else {
                    table::cell(col[n - 1])
                }
            };
            vec![
                n.to_string(),
                baseline_cell(&baseline6),
                baseline_cell(&baseline3),
                table::cell(inertial6[n]),
                table::cell(inertial3[n]),
            ]
        })
        .collect();
    Ok((header, rows))
}

fn benchmark_table_two() -> Result<(Vec<String>, Vec<Vec<String>>), CliError> {
    let mut columns = Vec::new();
    for case in 1..=4 {
        let trace = run(benchmark_problem(8.0, 6.0, schedule_case(case)?, 24)?)?;
        columns.push(solved_sequence(&trace, &[8.0, 6.0]));
    }
    let header =
        ["n", "case_1", "case_2", "case_3", "case_4"].map(String::from).to_vec();
    let rows = (0..=25)
        .map(|n| {
            let mut row = vec![n.to_string()];
            row.extend(columns.iter().map(|col| table::cell(col[n])));
            row
        })
        .collect();
    Ok((header, rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReproduceTarget {
    Table1,
    Table2,
    All,
}

pub fn cmd_reproduce(target: ReproduceTarget, output_dir: &Path) -> CmdResult {
    fs::create_dir_all(output_dir)?;
    let mut written: Vec<PathBuf> = Vec::new();
    let mut emit = |name: &str, header: Vec<String>, rows: Vec<Vec<String>>| -> CmdResult {
        let csv_path = output_dir.join(format!("{name}.csv"));
        fs::write(&csv_path, table::to_csv(&header, &rows))?;
        written.push(csv_path);
        let dat_path = output_dir.join(format!("{name}_plot.dat"));
        fs::write(&dat_path, table::to_plot_data(&header, &rows))?;
        written.push(dat_path);
        Ok(())
    };
    if target != ReproduceTarget::Table2 {
        let (header, rows) = benchmark_table_one()?;
        emit("table1", header, rows)?;
    }
    if target != ReproduceTarget::Table1 {
        let (header, rows) = benchmark_table_two()?;
        emit("table2", header, rows)?;
    }
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn first_below(xs: &[f64], threshold: f64) -> Option<usize> {
    xs.iter().position(|v| v.abs() <= threshold)
}

pub fn cmd_compare(threshold: f64, steps: usize) -> CmdResult {
    if !(threshold.is_finite() && threshold > 0.0) {
        return Err(CliError::Config(format!("threshold must be positive, got {threshold}")));
    }
    if steps == 0 {
        return Err(CliError::Config("steps must be at least 1".into()));
    }
    println!("inertial vs baseline on the benchmark problem, threshold {threshold:e}, {steps} steps");
    for init in [6.0, 3.0] {
        let inertial =
            solved_sequence(&run(benchmark_problem(init, init, schedule_case(1)?, steps)?)?, &[
                init, init,
            ]);
        let baseline =
            solved_sequence(&run(benchmark_baseline_problem(init, steps)?)?, &[f64::INFINITY, init]);
        let describe = |label: &str, xs: &[f64]| match first_below(xs, threshold) {
            Some(n) => println!("  init {init}: {label} reaches the threshold at n = {n}"),
            None => println!("  init {init}: {label} never reaches the threshold"),
        };
        describe("inertial", &inertial);
        describe("baseline", &baseline);
    }
    println!("step-size schedule cases, |x_25| on the benchmark problem");
    let mut tails = Vec::new();
    for case in 1..=4 {
        let trace = run(benchmark_problem(8.0, 6.0, schedule_case(case)?, 24)?)?;
        let tail = trace.final_point().expect("records").coords()[0].abs();
        println!("  case {case}: {}", table::cell(tail));
        tails.push(tail);
    }
    let ordered = tails.windows(2).all(|w| w[1] <= w[0]);
    println!("  ordering case4 <= case3 <= case2 <= case1: {}", if ordered { "yes" } else { "no" });
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteTarget {
    Geometry,
    Operators,
    Solver,
    All,
}

pub fn cmd_check(target: SuiteTarget, seed: u64) -> CmdResult {
    let mut selected: Vec<(&str, Vec<CheckResult>)> = Vec::new();
    if matches!(target, SuiteTarget::Geometry | SuiteTarget::All) {
        selected.push(("geometry", checks::geometry_suite(seed)));
    }
    if matches!(target, SuiteTarget::Operators | SuiteTarget::All) {
        selected.push(("operators", checks::operators_suite(seed)));
    }
    if matches!(target, SuiteTarget::Solver | SuiteTarget::All) {
        selected.push(("solver", checks::solver_suite(seed)));
    }
    let mut failures = 0usize;
    for (suite, results) in &selected {
        for r in results {
            let status = if r.pass { "PASS" } else { "FAIL" };
            println!("{status} {suite}/{}: {}", r.name, r.detail);
            if !r.pass {
                failures += 1;
            }
        }
    }
    if failures > 0 {
        return Err(CliError::Numerical(format!("{failures} check(s) failed")));
    }
    Ok(())
}
