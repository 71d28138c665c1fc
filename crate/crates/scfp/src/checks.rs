//! Self-contained verification suites: geometric identities, operator
//! properties, and solver behavior. Each suite is deterministic in its seed
//! and independent of thread count, and reports one result per named check.

use rand::Rng;

use crate::error::Result;
use crate::operators::{
    check_bregman_quasi_nonexpansive, check_firmly_nonexpansive_like, composed, equilibrium_resolvent,
    projection_map, resolvent_linear, scaling_map, MonotoneLinearOp, PointMap,
};
use crate::parallel;
use crate::presets;
use crate::projections::BoxSet;
use crate::sampling;
use crate::schedule::{gamma_upper_bound, schedule_case, ScheduleSpec, SequenceRule};
use crate::solver::{run, ProblemSpec, Solver, StoppingRule, Variant};
use crate::space::{LinearOperator, Point, SpaceSpec};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}

const GEOMETRY_SAMPLES: u64 = 1000;
const IDENTITY_TOL: f64 = 1e-9;
const DUALITY_TOL: f64 = 1e-10;

fn violation_result(name: &'static str, worst: f64, tol: f64, samples: u64) -> CheckResult {
    CheckResult {
        name,
        pass: worst <= tol,
        detail: format!("worst violation {worst:.3e} over {samples} samples (tolerance {tol:.0e})"),
    }
}

fn geometry_spaces() -> Vec<SpaceSpec> {
    let mut spaces = Vec::new();
    for p in [2.0, 4.0] {
        for dim in 1..=3 {
            spaces.push(SpaceSpec::new(dim, p).expect("valid space"));
        }
    }
    spaces
}

fn sample_point(rng: &mut rand_chacha::ChaCha8Rng, space: &SpaceSpec) -> Point {
    Point::new(space, sampling::uniform_coords(rng, space.dim(), -5.0, 5.0)).expect("finite sample")
}

/// Sampled checks of the duality-map and Bregman-distance identities the
/// convergence analysis rests on.
pub fn geometry_suite(seed: u64) -> Vec<CheckResult> {
    let spaces = geometry_spaces();
    let hilbert_spaces: Vec<SpaceSpec> =
        spaces.iter().filter(|s| s.is_hilbert()).cloned().collect();
    let mut results = Vec::new();

    // <J_p x, x> = ||x||^p.
    let sp = spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed, i);
        let x = sample_point(&mut rng, &sp[(i as usize) % sp.len()]);
        let pairing = x.duality_map().pairing(&x).expect("same space");
        let npow = x.norm_pow_p();
        (pairing - npow).abs() / npow.max(1.0)
    });
    results.push(violation_result("duality_pairing_norm_power", worst, DUALITY_TOL, GEOMETRY_SAMPLES));

    // ||J_p x||_q = ||x||^(p-1).
    let sp = spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(1), i);
        let x = sample_point(&mut rng, &sp[(i as usize) % sp.len()]);
        let expected = x.norm_p().powf(x.space().p() - 1.0);
        (x.duality_map().norm_q() - expected).abs() / expected.max(1.0)
    });
    results.push(violation_result("duality_norm_consistency", worst, DUALITY_TOL, GEOMETRY_SAMPLES));

    // J_q(J_p x) = x.
    let sp = spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(2), i);
        let x = sample_point(&mut rng, &sp[(i as usize) % sp.len()]);
        let back = x.duality_map().duality_map_inverse();
        back.sub(&x).expect("same space").norm_max() / (1.0 + x.norm_max())
    });
    results.push(violation_result("duality_round_trip", worst, DUALITY_TOL, GEOMETRY_SAMPLES));

    // D(a,c) = D(a,b) + D(b,c) + <J_p a - J_p b, b - c>.
    let sp = spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(3), i);
        let space = &sp[(i as usize) % sp.len()];
        let a = sample_point(&mut rng, space);
        let b = sample_point(&mut rng, space);
        let c = sample_point(&mut rng, space);
        let lhs = a.bregman_distance(&c).expect("same space");
        let cross = a
            .duality_map()
            .sub(&b.duality_map())
            .and_then(|d| d.pairing(&b.sub(&c)?))
            .expect("same space");
        let rhs = a.bregman_distance(&b).unwrap() + b.bregman_distance(&c).unwrap() + cross;
        (lhs - rhs).abs() / (1.0 + lhs.abs())
    });
    results.push(violation_result("three_point_identity", worst, IDENTITY_TOL, GEOMETRY_SAMPLES));

    // D(x,y) + D(y,x) = <J_p x - J_p y, x - y>.
    let sp = spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(4), i);
        let space = &sp[(i as usize) % sp.len()];
        let x = sample_point(&mut rng, space);
        let y = sample_point(&mut rng, space);
        let pair = x
            .duality_map()
            .sub(&y.duality_map())
            .and_then(|d| d.pairing(&x.sub(&y)?))
            .expect("same space");
        let sum = x.bregman_distance(&y).unwrap() + y.bregman_distance(&x).unwrap();
        (sum - pair).abs() / (1.0 + pair.abs())
    });
    results.push(violation_result("symmetrized_identity", worst, IDENTITY_TOL, GEOMETRY_SAMPLES));

    // 0 <= D(x,y) <= <J_p x - J_p y, x - y>.
    let sp = spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(5), i);
        let space = &sp[(i as usize) % sp.len()];
        let x = sample_point(&mut rng, space);
        let y = sample_point(&mut rng, space);
        let d = x.bregman_distance(&y).unwrap();
        let pair = x
            .duality_map()
            .sub(&y.duality_map())
            .and_then(|diff| diff.pairing(&x.sub(&y)?))
            .expect("same space");
        let scale = 1.0 + pair.abs();
        ((-d).max(d - pair)) / scale
    });
    results.push(violation_result("distance_bounds", worst, DUALITY_TOL, GEOMETRY_SAMPLES));

    // p = 2: D(x,y) = ||x - y||^2 / 2.
    let hs = hilbert_spaces.clone();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(6), i);
        let space = &hs[(i as usize) % hs.len()];
        let x = sample_point(&mut rng, space);
        let y = sample_point(&mut rng, space);
        let d = x.sub(&y).unwrap().norm_p();
        let lhs = x.bregman_distance(&y).unwrap();
        (lhs - 0.5 * d * d).abs() / (1.0 + lhs.abs())
    });
    results.push(violation_result("hilbert_half_square", worst, IDENTITY_TOL, GEOMETRY_SAMPLES));

    // tau ||x - y||^p <= D(x,y) for spaces carrying a convexity constant.
    let convex: Vec<SpaceSpec> =
        spaces.iter().filter(|s| s.convexity_const().is_some()).cloned().collect();
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(7), i);
        let space = &convex[(i as usize) % convex.len()];
        let tau = space.convexity_const().unwrap();
        let x = sample_point(&mut rng, space);
        let y = sample_point(&mut rng, space);
        let d = x.bregman_distance(&y).unwrap();
        let lower = tau * x.sub(&y).unwrap().norm_p().powf(space.p());
        (lower - d) / (1.0 + d.abs())
    });
    results.push(violation_result("convexity_lower_bound", worst, IDENTITY_TOL, GEOMETRY_SAMPLES));

    // D(Jq(sum_k t_k Jp x_k), x) <= sum_k t_k D(x_k, x) for convex weights.
    let sp = spaces;
    let worst = parallel::indexed_max(GEOMETRY_SAMPLES, |i| {
        let mut rng = sampling::rng_for(seed.wrapping_add(8), i);
        let space = &sp[(i as usize) % sp.len()];
        let x = sample_point(&mut rng, space);
        let points: Vec<Point> = (0..4).map(|_| sample_point(&mut rng, space)).collect();
        let raw: Vec<f64> = (0..4).map(|_| -rng.gen_range(1e-9..1.0_f64).ln()).collect();
        let total: f64 = raw.iter().sum();
        let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        let mut combo = points[0].duality_map().scale(weights[0]);
        for (w, pt) in weights.iter().zip(&points).skip(1) {
            combo = combo.add_scaled(*w, &pt.duality_map()).unwrap();
        }
        let lhs = combo.duality_map_inverse().bregman_distance(&x).unwrap();
        let rhs: f64 = weights
            .iter()
            .zip(&points)
            .map(|(w, pt)| w * pt.bregman_distance(&x).unwrap())
            .sum();
        (lhs - rhs) / (1.0 + rhs.abs())
    });
    results.push(violation_result("dual_convex_combination", worst, IDENTITY_TOL, GEOMETRY_SAMPLES));

    results
}

fn report_check(
    name: &'static str,
    expectation_holds: Result<(bool, f64, usize)>,
) -> CheckResult {
    match expectation_holds {
        Ok((pass, worst, samples)) => CheckResult {
            name,
            pass,
            detail: format!("worst margin {worst:.3e} over {samples} samples"),
        },
        Err(e) => CheckResult { name, pass: false, detail: format!("failed to evaluate: {e}") },
    }
}

struct Negation;
impl PointMap for Negation {
    fn apply_point(&self, x: &Point) -> Result<Point> {
        Ok(x.scale(-1.0))
    }
}

struct Doubling;
impl PointMap for Doubling {
    fn apply_point(&self, x: &Point) -> Result<Point> {
        Ok(x.scale(2.0))
    }
}

/// Sampled checks of the operator constructors: the properties each family
/// is supposed to have, plus counterexamples the checkers must reject.
pub fn operators_suite(seed: u64) -> Vec<CheckResult> {
    let mut results = Vec::new();
    let n = 1000;

    results.push(report_check("scaling_firmly_nonexpansive", (|| {
        let space = SpaceSpec::new(1, 4.0)?;
        let dom = BoxSet::new(vec![-10.0], vec![10.0])?;
        let t = scaling_map(0.25)?;
        let rep = check_firmly_nonexpansive_like(&t, &space, &dom, n, seed)?;
        Ok((rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("projection_firmly_nonexpansive", (|| {
        let space = SpaceSpec::new(2, 2.0)?;
        let dom = BoxSet::new(vec![-10.0, -10.0], vec![10.0, 10.0])?;
        let target = BoxSet::new(vec![0.0, f64::NEG_INFINITY], vec![f64::INFINITY, 0.0])?;
        let rep = check_firmly_nonexpansive_like(&projection_map(target)?, &space, &dom, n, seed + 1)?;
        Ok((rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("resolvent_firmly_nonexpansive", (|| {
        let space = SpaceSpec::new(2, 2.0)?;
        let dom = BoxSet::new(vec![-8.0, -8.0], vec![8.0, 8.0])?;
        let op = MonotoneLinearOp::new(vec![vec![2.0, 1.0], vec![0.0, 1.0]], vec![-1.0, 2.0])?;
        let rep = check_firmly_nonexpansive_like(&resolvent_linear(op, 0.7)?, &space, &dom, n, seed + 2)?;
        Ok((rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("equilibrium_resolvent_firmly_nonexpansive", (|| {
        let space = SpaceSpec::new(2, 2.0)?;
        let dom = BoxSet::new(vec![-8.0, -8.0], vec![8.0, 8.0])?;
        let op = MonotoneLinearOp::new(vec![vec![1.0, 0.0], vec![0.0, 2.0]], vec![0.5, 0.0])?;
        let set = BoxSet::new(vec![-5.0, -5.0], vec![5.0, 5.0])?;
        let rep =
            check_firmly_nonexpansive_like(&equilibrium_resolvent(op, set, 0.5)?, &space, &dom, n, seed + 3)?;
        Ok((rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("negation_rejected_by_firm_check", (|| {
        let space = SpaceSpec::new(1, 2.0)?;
        let dom = BoxSet::new(vec![-1.0], vec![1.0])?;
        let rep = check_firmly_nonexpansive_like(&Negation, &space, &dom, 200, seed + 4)?;
        Ok((!rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("scaling_bregman_quasi_nonexpansive", (|| {
        let space = SpaceSpec::new(2, 4.0)?;
        let dom = BoxSet::new(vec![-5.0, -5.0], vec![5.0, 5.0])?;
        let origin = Point::new(&space, vec![0.0, 0.0])?;
        let rep = check_bregman_quasi_nonexpansive(&scaling_map(0.25)?, &origin, &dom, n, seed + 5)?;
        Ok((rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("expansion_rejected_by_quasi_check", (|| {
        let space = SpaceSpec::new(1, 2.0)?;
        let dom = BoxSet::new(vec![-5.0], vec![5.0])?;
        let origin = Point::new(&space, vec![0.0])?;
        let rep = check_bregman_quasi_nonexpansive(&Doubling, &origin, &dom, 200, seed + 6)?;
        Ok((!rep.pass, rep.worst_margin, rep.samples))
    })()));

    results.push(report_check("projection_fixes_exactly_its_set", (|| {
        let target = BoxSet::new(vec![-1.0, 0.0], vec![2.0, f64::INFINITY])?;
        let map = projection_map(target.clone())?;
        let mut mismatches = 0usize;
        for i in 0..n as u64 {
            let mut rng = sampling::rng_for(seed + 7, i);
            let u = sampling::uniform_coords(&mut rng, 2, -5.0, 5.0);
            let image = map.apply_coords(&u)?;
            let inside = target.contains_coords(&u, 0.0);
            let fixed = image == u;
            if inside != fixed {
                mismatches += 1;
            }
            let twice = map.apply_coords(&image)?;
            if twice != image {
                mismatches += 1;
            }
        }
        Ok((mismatches == 0, -(mismatches as f64), n))
    })()));

    results.push(report_check("resolvent_fixed_point_solves_inclusion", (|| {
        // Zeros of M x + c are exactly the fixed points of the resolvent.
        let op = MonotoneLinearOp::new(vec![vec![3.0, 1.0], vec![-1.0, 2.0]], vec![-4.0, 1.0])?;
        let matrix = crate::linalg::to_dmatrix(op.matrix());
        let neg_shift: Vec<f64> = op.shift().iter().map(|v| -v).collect();
        let zero = crate::linalg::solve(&matrix, &neg_shift)
            .ok_or_else(|| crate::error::Error::Numerical("singular test system".into()))?;
        let t = resolvent_linear(op, 1.3)?.with_known_fixed_point(zero)?;
        Ok((t.known_fixed_point().is_some(), 0.0, 1))
    })()));

    results.push(report_check("composition_keeps_common_fixed_points", (|| {
        let t = composed(scaling_map(0.5)?, resolvent_linear(MonotoneLinearOp::zero(2), 1.0)?)
            .with_known_fixed_point(vec![0.0, 0.0])?;
        let moved = t.apply_coords(&[4.0, -2.0])?;
        Ok((moved == vec![2.0, -1.0], 0.0, 1))
    })()));

    results
}

/// A reproducible random split problem over Euclidean spaces of dimension
/// 1 to 3 whose solution set contains the origin: T is a scaling (fixing 0),
/// S projects onto a box containing 0, and both initial points sit inside
/// the base box.
pub fn seeded_split_problem(seed: u64, variant: Variant) -> Result<ProblemSpec> {
    let mut rng = sampling::rng_for(seed, 0);
    let d1 = rng.gen_range(1..=3usize);
    let d2 = rng.gen_range(1..=3usize);
    let space1 = SpaceSpec::new(d1, 2.0)?;
    let space2 = SpaceSpec::new(d2, 2.0)?;
    let mut matrix: Vec<Vec<f64>> =
        (0..d2).map(|_| (0..d1).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    if matrix.iter().flatten().map(|v| v * v).sum::<f64>() < 1e-6 {
        matrix[0][0] += 1.0;
    }
    let operator = LinearOperator::new(matrix, &space1, &space2)?;

    let map_t = scaling_map(0.25 + 0.5 * rng.gen::<f64>())?.with_known_fixed_point(vec![0.0; d1])?;
    let lower: Vec<f64> = (0..d2).map(|_| -(0.5 + rng.gen::<f64>())).collect();
    let upper: Vec<f64> = (0..d2).map(|_| 0.5 + rng.gen::<f64>()).collect();
    let map_s = projection_map(BoxSet::new(lower, upper)?)?;

    let base_set = BoxSet::new(vec![-10.0; d1], vec![10.0; d1])?;
    let x0 = Point::new(&space1, sampling::uniform_coords(&mut rng, d1, -3.0, 3.0))?;
    let x1 = Point::new(&space1, sampling::uniform_coords(&mut rng, d1, -3.0, 3.0))?;

    let inertial_bound = gamma_upper_bound(&space2, &operator);
    let norm = operator.norm_upper_bound();
    let baseline_bound = 1.0 / (norm * norm);
    let gamma = 0.45 * inertial_bound.min(baseline_bound);
    let schedule = ScheduleSpec {
        gamma: SequenceRule::Const(gamma),
        alpha: SequenceRule::Rational { a: 0.0, b: 1.0, c: 0.0, d: 7.0 },
        theta: SequenceRule::Const(0.2),
    };

    Ok(ProblemSpec {
        projection_tol: 1e-12,
        known_solution: Some(Point::zero(&space1)),
        x0: if variant == Variant::Baseline { None } else { Some(x0) },
        x1,
        space1,
        space2,
        operator,
        map_t,
        map_s,
        base_set,
        schedule,
        stop: StoppingRule::max_iter(25)?,
        variant,
    })
}

/// A matched pair of problems that must produce identical iterates: a
/// run whose maps are resolvents (the inner one of the zero map, hence the
/// identity) marked as the inclusion variant, and its plain counterpart.
pub fn inclusion_reduction_pair(seed: u64) -> Result<(ProblemSpec, ProblemSpec)> {
    let mut plain = seeded_split_problem(seed, Variant::Hilbert)?;
    let mut rng = sampling::rng_for(seed, 99);
    let d2 = plain.space2.dim();
    // Random PSD matrix G^T G keeps the map monotone; zero shift keeps the
    // origin a zero of it.
    let g: Vec<Vec<f64>> =
        (0..d2).map(|_| (0..d2).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    let mut gram = vec![vec![0.0; d2]; d2];
    for (i, row) in gram.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..d2).map(|k| g[k][i] * g[k][j]).sum();
        }
    }
    let resolvent_s = resolvent_linear(MonotoneLinearOp::new(gram, vec![0.0; d2])?, 0.8)?;
    plain.map_s = resolvent_s;

    let mut reduction = plain.clone();
    reduction.variant = Variant::Inclusion;
    reduction.map_t = composed(
        plain.map_t.clone(),
        resolvent_linear(MonotoneLinearOp::zero(plain.space1.dim()), 0.8)?,
    );
    Ok((plain, reduction))
}

fn trace_distance(a: &ProblemSpec, b: &ProblemSpec) -> Result<f64> {
    let ta = run(a.clone())?;
    let tb = run(b.clone())?;
    let mut worst = 0.0_f64;
    for (ra, rb) in ta.records.iter().zip(&tb.records) {
        worst = worst.max(ra.x_next.sub(&rb.x_next)?.norm_max());
    }
    if ta.records.len() != tb.records.len() {
        worst = f64::INFINITY;
    }
    Ok(worst)
}

/// End-to-end solver checks on the benchmark problem and on seeded random
/// instances.
pub fn solver_suite(seed: u64) -> Vec<CheckResult> {
    let mut results = Vec::new();

    results.push(report_check("known_solution_stays_feasible", (|| {
        let p = presets::benchmark_problem(6.0, 6.0, schedule_case(1)?, 24)?;
        let origin = Point::new(&p.space1, vec![0.0])?;
        let mut solver = Solver::new(p)?;
        for _ in 0..24 {
            solver.step()?;
        }
        let inside = solver.constraint_set().contains(&origin, 1e-9)?;
        let clean = solver.warnings().is_empty();
        Ok((inside && clean, solver.warnings().len() as f64 * -1.0, 24))
    })()));

    results.push(report_check("anchor_distance_monotone", (|| {
        let trace = run(presets::benchmark_problem(8.0, 6.0, schedule_case(4)?, 24)?)?;
        let mut worst = 0.0_f64;
        let mut prev = 0.0;
        for r in &trace.records {
            worst = worst.max(prev - r.bregman_from_x0);
            prev = r.bregman_from_x0;
        }
        Ok((worst <= 1e-10, -worst, trace.records.len()))
    })()));

    results.push(report_check("descent_chain_toward_solution", (|| {
        let p = presets::benchmark_problem(6.0, 6.0, schedule_case(2)?, 24)?;
        let origin = Point::new(&p.space1, vec![0.0])?;
        let trace = run(p)?;
        let mut worst = f64::NEG_INFINITY;
        for r in &trace.records {
            let dw = r.w.bregman_distance(&origin)?;
            let dz = r.z.bregman_distance(&origin)?;
            let dy = r.y.bregman_distance(&origin)?;
            worst = worst.max(dy - dz).max(dz - dw);
        }
        Ok((worst <= 1e-9, worst, trace.records.len()))
    })()));

    results.push(report_check("residuals_vanish_on_benchmark", (|| {
        let trace = run(presets::benchmark_problem(6.0, 6.0, schedule_case(1)?, 24)?)?;
        let last = trace.records.last().expect("24 records");
        let worst = last.residual_s.max(last.residual_t).max(last.step_norm);
        Ok((worst <= 1e-6, worst, trace.records.len()))
    })()));

    results.push(report_check("constraint_sets_nest", (|| {
        let p = presets::benchmark_problem(6.0, 6.0, schedule_case(1)?, 15)?;
        let space = p.space1.clone();
        let mut solver = Solver::new(p)?;
        let probes: Vec<Point> = (0..51)
            .map(|k| Point::new(&space, vec![0.2 * k as f64]).unwrap())
            .collect();
        let mut alive: Vec<bool> = probes.iter().map(|_| true).collect();
        let mut violations = 0usize;
        for _ in 0..15 {
            solver.step()?;
            for (probe, was_inside) in probes.iter().zip(alive.iter_mut()) {
                let now = solver.constraint_set().contains(probe, 0.0)?;
                if now && !*was_inside {
                    violations += 1;
                }
                *was_inside = now;
            }
        }
        Ok((violations == 0, -(violations as f64), 51 * 15))
    })()));

    results.push(report_check("p2_general_stepper_matches_hilbert", (|| {
        let mut worst = 0.0_f64;
        for s in 0..3u64 {
            let a = seeded_split_problem(seed.wrapping_add(s), Variant::Banach)?;
            let b = seeded_split_problem(seed.wrapping_add(s), Variant::Hilbert)?;
            worst = worst.max(trace_distance(&a, &b)?);
        }
        Ok((worst <= 1e-12, worst, 3))
    })()));

    results.push(report_check("identity_resolvent_reduction", (|| {
        let (plain, reduction) = inclusion_reduction_pair(seed.wrapping_add(77))?;
        let worst = trace_distance(&plain, &reduction)?;
        Ok((worst == 0.0, worst, 25))
    })()));

    results.push(report_check("equilibrium_scalar_converges", (|| {
        let trace = run(presets::scalar_equilibrium_problem(4.0, 50)?)?;
        let final_abs = trace.final_point().expect("records").coords()[0].abs();
        Ok((final_abs <= 1e-6, final_abs, trace.records.len()))
    })()));

    results.push(report_check("baseline_first_step_value", (|| {
        let trace = run(presets::benchmark_baseline_problem(6.0, 2)?)?;
        let x2 = trace.records[0].x_next.coords()[0];
        let err = (x2 - 3.952_380_952_380_953_f64).abs();
        Ok((err <= 1e-9, err, 1))
    })()));

    results
}
