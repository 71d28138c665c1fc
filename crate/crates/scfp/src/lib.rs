//! Solvers for split common fixed point problems: find a fixed point of one
//! map whose image under a linear operator is a fixed point of a second map,
//! where the two maps live on (possibly different) finite-dimensional l_p
//! spaces with p >= 2.
//!
//! The main iteration combines an inertial extrapolation step with shrinking
//! Bregman projections, which gives strong convergence to the projection of
//! the starting point onto the solution set. Specializations cover Euclidean
//! geometry, monotone variational inclusions via resolvents, equilibrium
//! problems via equilibrium resolvents, and a non-inertial baseline method
//! for comparison.
//!
//! Entry points:
//! - [`SpaceSpec`], [`Point`], [`DualPoint`]: l_p geometry and duality maps.
//! - [`FixedPointMap`]: the operator families usable as T and S.
//! - [`ProblemSpec`] plus [`run`]: configure and drive a solve.
//! - [`presets`]: ready-made benchmark and example problems.
//! - [`checks`]: seeded verification suites over geometry, operators, and
//!   solver behavior.
//!
//! The `parallel` feature (on by default) evaluates sampled checks on a
//! thread pool; disabling it produces identical results sequentially.

pub mod checks;
pub mod error;
mod linalg;
pub mod operators;
pub mod parallel;
pub mod presets;
pub mod projections;
mod sampling;
pub mod schedule;
pub mod solver;
pub mod space;

pub use error::{Error, Result};
pub use operators::{
    check_bregman_quasi_nonexpansive, check_firmly_nonexpansive_like, composed,
    equilibrium_resolvent, equilibrium_resolvent_with_tol, projection_map, resolvent_linear,
    scaling_map, CheckReport, FixedPointMap, MapKind, MapRule, MonotoneLinearOp, PointMap,
};
pub use projections::{BoxSet, HalfSpace, ShrinkingSet};
pub use schedule::{gamma_upper_bound, schedule_case, ScheduleSpec, SequenceRule};
pub use solver::{
    run, IterateRecord, ProblemSpec, Solver, StoppingRule, Termination, Trace, Variant,
};
pub use space::{DualPoint, LinearOperator, Point, SpaceSpec};
