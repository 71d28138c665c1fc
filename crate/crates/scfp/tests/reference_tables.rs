//! Frozen reference trajectories for the benchmark problem.
//!
//! The values below were computed with exact rational arithmetic for the
//! scalar benchmark configuration (T x = x/4, S the projection onto the
//! quadrant, A x = (x/2, x/3)) and rendered to 15 decimals. The solver runs
//! in f64, so agreement is asserted numerically rather than textually.

use scfp::presets::{benchmark_baseline_problem, benchmark_problem};
use scfp::{run, schedule_case, Trace};

const TOL: f64 = 1e-9;

fn parse(v: &str) -> f64 {
    v.parse().expect("fixture literal")
}

fn solved_sequence(trace: &Trace, head: &[f64]) -> Vec<f64> {
    let mut xs = head.to_vec();
    for r in &trace.records {
        xs.push(r.x_next.coords()[0]);
    }
    xs
}

fn assert_column(label: &str, fixture: &[&str], computed: &[f64]) {
    assert_eq!(fixture.len(), computed.len(), "{label}: row count");
    for (n, (want, got)) in fixture.iter().zip(computed).enumerate() {
        let want = parse(want);
        assert!(
            (want - got).abs() <= TOL,
            "{label} row {n}: expected {want:.15}, got {got:.15}"
        );
    }
}

fn first_below(xs: &[f64], threshold: f64) -> Option<usize> {
    xs.iter().position(|v| v.abs() <= threshold)
}

include!("fixtures/benchmark_tables.rs");

#[test]
fn table_one_baseline_columns_match() {
    let t6 = run(benchmark_baseline_problem(6.0, 24).unwrap()).unwrap();
    let t3 = run(benchmark_baseline_problem(3.0, 24).unwrap()).unwrap();
    assert_column("baseline from 6", &BASELINE_FROM_6, &solved_sequence(&t6, &[6.0]));
    assert_column("baseline from 3", &BASELINE_FROM_3, &solved_sequence(&t3, &[3.0]));
}

#[test]
fn table_one_inertial_columns_match() {
    let t6 = run(benchmark_problem(6.0, 6.0, schedule_case(1).unwrap(), 24).unwrap()).unwrap();
    let t3 = run(benchmark_problem(3.0, 3.0, schedule_case(1).unwrap(), 24).unwrap()).unwrap();
    assert_column("inertial from 6", &INERTIAL_FROM_6, &solved_sequence(&t6, &[6.0, 6.0]));
    assert_column("inertial from 3", &INERTIAL_FROM_3, &solved_sequence(&t3, &[3.0, 3.0]));
}

#[test]
fn table_two_schedule_cases_match() {
    let fixtures: [&[&str]; 4] = [&CASE_1, &CASE_2, &CASE_3, &CASE_4];
    for (case, fixture) in (1..=4).zip(fixtures) {
        let trace =
            run(benchmark_problem(8.0, 6.0, schedule_case(case).unwrap(), 24).unwrap()).unwrap();
        assert_column(
            &format!("schedule case {case}"),
            fixture,
            &solved_sequence(&trace, &[8.0, 6.0]),
        );
    }
}

#[test]
fn schedule_cases_order_by_terminal_accuracy() {
    let mut tails = Vec::new();
    for case in 1..=4 {
        let trace =
            run(benchmark_problem(8.0, 6.0, schedule_case(case).unwrap(), 24).unwrap()).unwrap();
        tails.push(trace.final_point().unwrap().coords()[0].abs());
    }
    for pair in tails.windows(2) {
        assert!(pair[1] <= pair[0], "terminal accuracy not ordered: {tails:?}");
    }
}

#[test]
fn inertia_reaches_threshold_strictly_sooner() {
    for (init, expect_inertial, expect_baseline) in [(6.0, 22, 39), (3.0, 22, 37)] {
        let inertial =
            run(benchmark_problem(init, init, schedule_case(1).unwrap(), 60).unwrap()).unwrap();
        let baseline = run(benchmark_baseline_problem(init, 60).unwrap()).unwrap();
        let xs_inertial = solved_sequence(&inertial, &[init, init]);
        let xs_baseline = solved_sequence(&baseline, &[f64::INFINITY, init]);
        let n_inertial = first_below(&xs_inertial, 1e-6).expect("inertial reaches 1e-6");
        let n_baseline = first_below(&xs_baseline, 1e-6).expect("baseline reaches 1e-6");
        assert_eq!(n_inertial, expect_inertial, "inertial crossing from {init}");
        assert_eq!(n_baseline, expect_baseline, "baseline crossing from {init}");
        assert!(n_inertial < n_baseline);
    }
}

#[test]
fn fifteen_decimal_rendering_is_fixed_width_and_faithful() {
    let cases = [
        (3.952380952380953_f64, "3.952380952380953"),
        (0.000000098252052, "0.000000098252052"),
        (0.0, "0.000000000000000"),
        (8.0, "8.000000000000000"),
    ];
    for (value, text) in cases {
        assert_eq!(format!("{value:.15}"), text);
    }
    for fixture in [&INERTIAL_FROM_6[..], &CASE_4[..]] {
        for cell in fixture {
            assert_eq!(cell.len(), cell.find('.').unwrap() + 16, "cell {cell} not 15 decimals");
        }
    }
}
