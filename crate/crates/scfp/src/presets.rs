//! Built-in benchmark problems used by the reference tables and the check
//! suites.

use crate::error::Result;
use crate::operators::{equilibrium_resolvent, projection_map, scaling_map, MonotoneLinearOp};
use crate::projections::BoxSet;
use crate::schedule::{ScheduleSpec, SequenceRule};
use crate::solver::{ProblemSpec, StoppingRule, Variant};
use crate::space::{LinearOperator, Point, SpaceSpec};

/// The scalar split problem behind the bundled reference tables:
/// space1 = R, space2 = R^2 (both Euclidean), base set C = [0, inf),
/// A x = (x/2, x/3), T x = x/4, and S the metric projection onto
/// Q = [0, inf) x (-inf, 0]. Its unique solution is 0.
pub fn benchmark_problem(
    x0: f64,
    x1: f64,
    schedule: ScheduleSpec,
    max_iter: usize,
) -> Result<ProblemSpec> {
    let space1 = SpaceSpec::new(1, 2.0)?;
    let space2 = SpaceSpec::new(2, 2.0)?;
    let operator =
        LinearOperator::new(vec![vec![0.5], vec![1.0 / 3.0]], &space1, &space2)?;
    let map_t = scaling_map(0.25)?.with_known_fixed_point(vec![0.0])?;
    let target = BoxSet::new(vec![0.0, f64::NEG_INFINITY], vec![f64::INFINITY, 0.0])?;
    let map_s = projection_map(target)?;
    let base_set = BoxSet::new(vec![0.0], vec![f64::INFINITY])?;
    Ok(ProblemSpec {
        projection_tol: ProblemSpec::default_projection_tol(&space1),
        known_solution: Some(Point::new(&space1, vec![0.0])?),
        x0: Some(Point::new(&space1, vec![x0])?),
        x1: Point::new(&space1, vec![x1])?,
        space1,
        space2,
        operator,
        map_t,
        map_s,
        base_set,
        schedule,
        stop: StoppingRule::max_iter(max_iter)?,
        variant: Variant::Hilbert,
    })
}

/// The same problem driven by the non-inertial baseline scheme with
/// gamma = 1 and alpha = 1/7, started (and anchored) at x1.
pub fn benchmark_baseline_problem(x1: f64, max_iter: usize) -> Result<ProblemSpec> {
    let schedule = baseline_schedule();
    let mut problem = benchmark_problem(x1, x1, schedule, max_iter)?;
    problem.x0 = None;
    problem.variant = Variant::Baseline;
    Ok(problem)
}

/// gamma = 1, alpha = 1/7; the baseline scheme has no inertial term.
pub fn baseline_schedule() -> ScheduleSpec {
    ScheduleSpec {
        gamma: SequenceRule::Const(1.0),
        alpha: SequenceRule::Rational { a: 0.0, b: 1.0, c: 0.0, d: 7.0 },
        theta: SequenceRule::Const(0.0),
    }
}

/// A scalar split equilibrium problem with a known solution at 0:
/// both spaces R, A = I, T = I, and S the resolvent of the bifunction
/// F(z, w) = z (w - z) on the whole line with r = 1, whose only
/// equilibrium point is 0.
pub fn scalar_equilibrium_problem(x1: f64, max_iter: usize) -> Result<ProblemSpec> {
    let space = SpaceSpec::new(1, 2.0)?;
    let operator = LinearOperator::identity(&space);
    let map_t = scaling_map(1.0)?;
    let bifunction = MonotoneLinearOp::new(vec![vec![1.0]], vec![0.0])?;
    let map_s = equilibrium_resolvent(bifunction, BoxSet::whole(1), 1.0)?
        .with_known_fixed_point(vec![0.0])?;
    let base_set = BoxSet::whole(1);
    Ok(ProblemSpec {
        projection_tol: ProblemSpec::default_projection_tol(&space),
        known_solution: Some(Point::new(&space, vec![0.0])?),
        x0: Some(Point::new(&space, vec![x1])?),
        x1: Point::new(&space, vec![x1])?,
        space2: space.clone(),
        space1: space,
        operator,
        map_t,
        map_s,
        base_set,
        schedule: ScheduleSpec {
            gamma: SequenceRule::Const(1.0),
            alpha: SequenceRule::Rational { a: 0.0, b: 1.0, c: 0.0, d: 7.0 },
            theta: SequenceRule::Rational { a: 0.0, b: 1.0, c: 0.0, d: 5.0 },
        },
        stop: StoppingRule::max_iter(max_iter)?,
        variant: Variant::Equilibrium,
    })
}
