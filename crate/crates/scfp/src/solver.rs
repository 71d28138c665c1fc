//! The inertial shrinking-projection iteration and its specializations.
//!
//! One step of the general scheme, for the problem of finding x with
//! `x in F(T)` and `Ax in F(S)`:
//!
//! ```text
//! w = Jq( Jp(x_n) + theta_n * Jp(x_n - x_(n-1)) )          inertial extrapolation
//! z = Jq( Jp(w) - gamma_n * A'( Jp2( (I - S) A w ) ) )     split correction
//! y = Jq( alpha_n * Jp(z) + (1 - alpha_n) * Jp(T z) )      averaged T step
//! C_(n+1) = { u in C_n : D(y,u) <= D(z,u) <= D(w,u) }      shrink
//! x_(n+1) = bregman projection of x_0 onto C_(n+1)
//! ```
//!
//! where D is the Bregman distance and each comparison `D(near, u) <=
//! D(far, u)` is a half-space in u. The specializations keep the same shape:
//! with p = 2 the duality maps drop out; the inclusion variant reads S and T
//! as resolvents; the equilibrium variant projects the z line back onto the
//! base set; and the non-inertial baseline scheme corrects at x_n directly
//! and anchors its projections at x_1.

use crate::error::{Error, Result};
use crate::operators::{FixedPointMap, MapKind, MapRule};
use crate::projections::{BoxSet, HalfSpace, ShrinkingSet};
use crate::schedule::{gamma_upper_bound, ScheduleSpec};
use crate::space::{DualPoint, LinearOperator, Point, SpaceSpec};

/// Which stepping rule a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// The general scheme in l_p geometry.
    Banach,
    /// p = 2 specialization with identity duality maps.
    Hilbert,
    /// Variational-inclusion form: S and the inner factor of T are
    /// resolvents of monotone maps (p = 2).
    Inclusion,
    /// Split equilibrium form: S is an equilibrium resolvent and the z line
    /// is projected onto the base set (p = 2).
    Equilibrium,
    /// Non-inertial comparison scheme anchored at x_1 (p = 2).
    Baseline,
}

/// Iteration limits and optional early-exit tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct StoppingRule {
    max_iter: usize,
    step_tol: Option<f64>,
    residual_tol: Option<f64>,
}

impl StoppingRule {
    pub fn max_iter(max_iter: usize) -> Result<Self> {
        if max_iter == 0 {
            return Err(Error::InvalidValue("max_iter must be at least 1".into()));
        }
        Ok(StoppingRule { max_iter, step_tol: None, residual_tol: None })
    }

    /// Stop once `||x_(n+1) - x_n|| <= tol`.
    pub fn with_step_tol(mut self, tol: f64) -> Result<Self> {
        if !tol.is_finite() || tol < 0.0 {
            return Err(Error::InvalidValue(format!("step tolerance must be nonnegative, got {tol}")));
        }
        self.step_tol = Some(tol);
        Ok(self)
    }

    /// Stop once both fixed-point residuals `||(I - S) A w||` and
    /// `||T z - z||` are at most `tol`.
    pub fn with_residual_tol(mut self, tol: f64) -> Result<Self> {
        if !tol.is_finite() || tol < 0.0 {
            return Err(Error::InvalidValue(format!(
                "residual tolerance must be nonnegative, got {tol}"
            )));
        }
        self.residual_tol = Some(tol);
        Ok(self)
    }

    pub fn max_iter_value(&self) -> usize {
        self.max_iter
    }

    pub fn step_tol(&self) -> Option<f64> {
        self.step_tol
    }

    pub fn residual_tol(&self) -> Option<f64> {
        self.residual_tol
    }
}

/// A fully specified problem instance.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub space1: SpaceSpec,
    pub space2: SpaceSpec,
    pub operator: LinearOperator,
    /// The map whose fixed points are sought in space1.
    pub map_t: FixedPointMap,
    /// The map whose fixed points constrain the image in space2.
    pub map_s: FixedPointMap,
    /// The starting constraint set C_1 in space1.
    pub base_set: BoxSet,
    /// Projection anchor and inertial seed; must be None for the baseline
    /// variant, which anchors at x1.
    pub x0: Option<Point>,
    pub x1: Point,
    pub schedule: ScheduleSpec,
    pub stop: StoppingRule,
    pub variant: Variant,
    /// When set, every step checks that this point stays inside the
    /// shrinking set and satisfies the descent chain, recording warnings
    /// otherwise.
    pub known_solution: Option<Point>,
    /// Tolerance handed to the Bregman projection subroutine.
    pub projection_tol: f64,
}

impl ProblemSpec {
    /// Projection tolerance appropriate for the space: tight where the
    /// projection is exact or Euclidean, looser for the general-exponent
    /// dual ascent.
    pub fn default_projection_tol(space1: &SpaceSpec) -> f64 {
        if space1.dim() == 1 || space1.is_hilbert() {
            1e-12
        } else {
            1e-10
        }
    }
}

/// Everything produced by one step n: the intermediate points, the new
/// iterate, and scalar diagnostics.
#[derive(Debug, Clone)]
pub struct IterateRecord {
    pub n: usize,
    pub w: Point,
    pub z: Point,
    pub y: Point,
    pub x_next: Point,
    /// `||(I - S) A w||` in the codomain norm.
    pub residual_s: f64,
    /// `||T z - z||` in the domain norm.
    pub residual_t: f64,
    /// `||x_(n+1) - x_n||`.
    pub step_norm: f64,
    /// Bregman distance from the projection anchor to x_(n+1). The anchor
    /// is x0, or x1 for the baseline variant.
    pub bregman_from_x0: f64,
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    MaxIterations,
    StepTolerance,
    ResidualTolerance,
}

/// A completed run.
#[derive(Debug, Clone)]
pub struct Trace {
    pub records: Vec<IterateRecord>,
    pub termination: Termination,
    pub warnings: Vec<String>,
}

impl Trace {
    pub fn final_point(&self) -> Option<&Point> {
        self.records.last().map(|r| &r.x_next)
    }
}

struct StepPoints {
    w: Point,
    z: Point,
    y: Point,
    residual_s: f64,
    residual_t: f64,
}

/// Stateful stepper. `step` advances one iteration; `run` drives it to a
/// stopping rule.
pub struct Solver {
    problem: ProblemSpec,
    gamma_bound: f64,
    shrinking: ShrinkingSet,
    anchor: Point,
    x_prev: Point,
    x_cur: Point,
    n: usize,
    records: Vec<IterateRecord>,
    warnings: Vec<String>,
    theta_warned: bool,
    solution_warned: bool,
}

impl Solver {
    pub fn new(problem: ProblemSpec) -> Result<Self> {
        if !problem.operator.domain().compatible_with(&problem.space1) {
            return Err(Error::InvalidValue("operator domain does not match space1".into()));
        }
        if !problem.operator.codomain().compatible_with(&problem.space2) {
            return Err(Error::InvalidValue("operator codomain does not match space2".into()));
        }
        if problem.base_set.dim() != problem.space1.dim() {
            return Err(Error::DimensionMismatch {
                expected: problem.space1.dim(),
                got: problem.base_set.dim(),
            });
        }
        if !problem.x1.space().compatible_with(&problem.space1) {
            return Err(Error::InvalidValue("x1 does not lie in space1".into()));
        }
        if let Some(x0) = &problem.x0 {
            if !x0.space().compatible_with(&problem.space1) {
                return Err(Error::InvalidValue("x0 does not lie in space1".into()));
            }
        }
        if let Some(d) = problem.map_t.dim_constraint() {
            if d != problem.space1.dim() {
                return Err(Error::DimensionMismatch { expected: problem.space1.dim(), got: d });
            }
        }
        if let Some(d) = problem.map_s.dim_constraint() {
            if d != problem.space2.dim() {
                return Err(Error::DimensionMismatch { expected: problem.space2.dim(), got: d });
            }
        }
        if !problem.projection_tol.is_finite() || problem.projection_tol <= 0.0 {
            return Err(Error::InvalidValue(format!(
                "projection tolerance must be positive, got {}",
                problem.projection_tol
            )));
        }

        match problem.variant {
            Variant::Banach => {}
            Variant::Hilbert | Variant::Inclusion | Variant::Equilibrium | Variant::Baseline => {
                if !problem.space1.is_hilbert() || !problem.space2.is_hilbert() {
                    return Err(Error::InvalidValue(format!(
                        "{:?} variant requires p = 2 on both spaces",
                        problem.variant
                    )));
                }
            }
        }
        match problem.variant {
            Variant::Inclusion => {
                if problem.map_s.kind() != MapKind::ResolventLinear {
                    return Err(Error::InvalidValue(
                        "inclusion variant expects S to be a resolvent of a monotone map".into(),
                    ));
                }
                let t_shape_ok = matches!(
                    problem.map_t.rule(),
                    MapRule::Composed { inner, .. } if inner.kind() == MapKind::ResolventLinear
                );
                if !t_shape_ok {
                    return Err(Error::InvalidValue(
                        "inclusion variant expects T to be a map composed with a resolvent".into(),
                    ));
                }
            }
            Variant::Equilibrium => {
                if problem.map_s.kind() != MapKind::EquilibriumResolvent {
                    return Err(Error::InvalidValue(
                        "equilibrium variant expects S to be an equilibrium resolvent".into(),
                    ));
                }
            }
            _ => {}
        }
        if problem.variant == Variant::Baseline {
            if problem.x0.is_some() {
                return Err(Error::InvalidValue(
                    "the baseline variant takes a single initial point x1; x0 must not be set".into(),
                ));
            }
        } else if problem.x0.is_none() {
            return Err(Error::InvalidValue("this variant requires both x0 and x1".into()));
        }

        let membership_slack = 1e-12 * (1.0 + problem.x1.norm_max());
        if !problem.base_set.contains(&problem.x1, membership_slack)? {
            return Err(Error::InvalidValue("x1 lies outside the base set".into()));
        }
        if let Some(x0) = &problem.x0 {
            if !problem.base_set.contains(x0, membership_slack)? {
                return Err(Error::InvalidValue("x0 lies outside the base set".into()));
            }
        }
        if let Some(sol) = &problem.known_solution {
            if !sol.space().compatible_with(&problem.space1) {
                return Err(Error::InvalidValue("known solution does not lie in space1".into()));
            }
        }

        let gamma_bound = match problem.variant {
            Variant::Baseline => {
                let norm = problem.operator.norm_upper_bound();
                if norm == 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / (norm * norm)
                }
            }
            _ => gamma_upper_bound(&problem.space2, &problem.operator),
        };
        problem.schedule.validate(gamma_bound, problem.stop.max_iter_value())?;

        let shrinking = ShrinkingSet::new(&problem.space1, problem.base_set.clone())?;
        let anchor = match (&problem.variant, &problem.x0) {
            (Variant::Baseline, _) => problem.x1.clone(),
            (_, Some(x0)) => x0.clone(),
            _ => unreachable!("non-baseline variants were checked to carry x0"),
        };
        let x_prev = problem.x0.clone().unwrap_or_else(|| problem.x1.clone());
        let x_cur = problem.x1.clone();
        Ok(Solver {
            problem,
            gamma_bound,
            shrinking,
            anchor,
            x_prev,
            x_cur,
            n: 1,
            records: Vec::new(),
            warnings: Vec::new(),
            theta_warned: false,
            solution_warned: false,
        })
    }

    pub fn records(&self) -> &[IterateRecord] {
        &self.records
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn constraint_set(&self) -> &ShrinkingSet {
        &self.shrinking
    }

    pub fn current(&self) -> &Point {
        &self.x_cur
    }

    pub fn anchor(&self) -> &Point {
        &self.anchor
    }

    pub fn steps_taken(&self) -> usize {
        self.records.len()
    }

    /// Advances one iteration, appending to and returning the record list.
    pub fn step(&mut self) -> Result<&IterateRecord> {
        let n = self.n;
        let (gamma, alpha, theta) = self.problem.schedule.check_at(n, self.gamma_bound)?;
        if theta.abs() > 1.0 && !self.theta_warned {
            let msg = format!("inertial weight |theta_{n}| = {} exceeds 1", theta.abs());
            log::warn!("{msg}");
            self.warnings.push(msg);
            self.theta_warned = true;
        }

        let StepPoints { w, z, y, residual_s, residual_t } = match self.problem.variant {
            Variant::Banach => self.points_banach(gamma, alpha, theta)?,
            Variant::Hilbert | Variant::Inclusion => self.points_hilbert(gamma, alpha, theta)?,
            Variant::Equilibrium => self.points_equilibrium(gamma, alpha, theta)?,
            Variant::Baseline => self.points_baseline(gamma, alpha)?,
        };

        let (near_mid, far_outer) = match self.problem.variant {
            // Baseline comparisons are both against the current iterate.
            Variant::Baseline => (&self.x_cur, &self.x_cur),
            _ => (&z, &w),
        };
        let hs_inner = HalfSpace::from_bregman_pair(&y, near_mid)?;
        let hs_outer = HalfSpace::from_bregman_pair(&z, far_outer)?;
        self.shrinking.push(hs_inner)?;
        self.shrinking.push(hs_outer)?;

        let x_next = self.shrinking.bregman_project(&self.anchor, self.problem.projection_tol)?;
        if !(w.is_finite() && z.is_finite() && y.is_finite() && x_next.is_finite()) {
            return Err(Error::Numerical(format!("non-finite iterate produced at step {n}")));
        }

        let step_norm = x_next.sub(&self.x_cur)?.norm_p();
        let bregman_from_x0 = self.anchor.bregman_distance(&x_next)?;

        if let Some(sol) = self.problem.known_solution.clone() {
            self.diagnose_known_solution(&sol, &w, &z, &y, n)?;
        }

        self.records.push(IterateRecord {
            n,
            w,
            z,
            y,
            x_next: x_next.clone(),
            residual_s,
            residual_t,
            step_norm,
            bregman_from_x0,
        });
        self.x_prev = std::mem::replace(&mut self.x_cur, x_next);
        self.n += 1;
        Ok(self.records.last().expect("record was just pushed"))
    }

    /// Inertial extrapolation, split correction, and averaging carried out
    /// through the duality maps of the l_p geometry.
    fn points_banach(&self, gamma: f64, alpha: f64, theta: f64) -> Result<StepPoints> {
        let diff = self.x_cur.sub(&self.x_prev)?;
        let jw = self
            .x_cur
            .duality_map()
            .add_scaled(theta, &diff.duality_map())?;
        let w = jw.duality_map_inverse();

        let aw = self.problem.operator.apply(&w)?;
        let saw = self.problem.map_s.apply(&aw)?;
        let split_residual = aw.sub(&saw)?;
        let correction = self
            .problem
            .operator
            .adjoint_apply(&split_residual.duality_map())?;
        let jz = w.duality_map().add_scaled(-gamma, &correction)?;
        let z = jz.duality_map_inverse();

        let tz = self.problem.map_t.apply(&z)?;
        let jy = DualPoint::lin_comb(alpha, &z.duality_map(), 1.0 - alpha, &tz.duality_map())?;
        let y = jy.duality_map_inverse();
        Ok(StepPoints {
            residual_s: split_residual.norm_p(),
            residual_t: tz.sub(&z)?.norm_p(),
            w,
            z,
            y,
        })
    }

    /// The p = 2 lines; the space is identified with its dual
    /// coordinate-wise, so no duality maps appear.
    fn points_hilbert(&self, gamma: f64, alpha: f64, theta: f64) -> Result<StepPoints> {
        let diff = self.x_cur.sub(&self.x_prev)?;
        let w = self.x_cur.add_scaled(theta, &diff)?;
        let (z, residual_s) = self.split_correction_euclidean(&w, gamma)?;
        let tz = self.problem.map_t.apply(&z)?;
        let y = Point::lin_comb(alpha, &z, 1.0 - alpha, &tz)?;
        Ok(StepPoints { residual_s, residual_t: tz.sub(&z)?.norm_p(), w, z, y })
    }

    /// As the p = 2 lines, but the corrected point is pulled back onto the
    /// base set before T is applied.
    fn points_equilibrium(&self, gamma: f64, alpha: f64, theta: f64) -> Result<StepPoints> {
        let diff = self.x_cur.sub(&self.x_prev)?;
        let w = self.x_cur.add_scaled(theta, &diff)?;
        let (z_raw, residual_s) = self.split_correction_euclidean(&w, gamma)?;
        let z = self.problem.base_set.metric_project(&z_raw)?;
        let tz = self.problem.map_t.apply(&z)?;
        let y = Point::lin_comb(alpha, &z, 1.0 - alpha, &tz)?;
        Ok(StepPoints { residual_s, residual_t: tz.sub(&z)?.norm_p(), w, z, y })
    }

    /// Non-inertial scheme: the correction acts on x_n itself and the
    /// comparison points are (y, x_n) and (z, x_n). Returns x_n in the w
    /// slot so records stay uniform.
    fn points_baseline(&self, gamma: f64, alpha: f64) -> Result<StepPoints> {
        let x = self.x_cur.clone();
        let (z, residual_s) = self.split_correction_euclidean(&x, gamma)?;
        let tz = self.problem.map_t.apply(&z)?;
        let y = Point::lin_comb(alpha, &z, 1.0 - alpha, &tz)?;
        Ok(StepPoints { residual_s, residual_t: tz.sub(&z)?.norm_p(), w: x, z, y })
    }

    /// `w - gamma * A'((I - S) A w)` with dual vectors identified with
    /// primal ones (valid only for p = 2). Also returns `||(I - S) A w||`.
    fn split_correction_euclidean(&self, w: &Point, gamma: f64) -> Result<(Point, f64)> {
        let aw = self.problem.operator.apply(w)?;
        let saw = self.problem.map_s.apply(&aw)?;
        let residual = aw.sub(&saw)?;
        let dual_residual = DualPoint::new(residual.space(), residual.coords().to_vec())?;
        let correction = self.problem.operator.adjoint_apply(&dual_residual)?;
        let correction_point =
            Point::new(&self.problem.space1, correction.coords().to_vec())?;
        Ok((w.add_scaled(-gamma, &correction_point)?, residual.norm_p()))
    }

    fn diagnose_known_solution(
        &mut self,
        sol: &Point,
        w: &Point,
        z: &Point,
        y: &Point,
        n: usize,
    ) -> Result<()> {
        if self.solution_warned {
            return Ok(());
        }
        const SLACK: f64 = 1e-9;
        let mut issue = None;
        if !self.shrinking.contains(sol, SLACK)? {
            issue = Some(format!("known solution left the constraint set at step {n}"));
        } else {
            let dw = w.bregman_distance(sol)?;
            let dz = z.bregman_distance(sol)?;
            let dy = y.bregman_distance(sol)?;
            let (outer, mid) = match self.problem.variant {
                Variant::Baseline => {
                    let dx = self.x_cur.bregman_distance(sol)?;
                    (dx, dx)
                }
                _ => (dw, dz),
            };
            if dy > mid + SLACK || dz > outer + SLACK {
                issue = Some(format!(
                    "descent chain failed at step {n}: D(y) = {dy:.6e}, D(z) = {dz:.6e}, D(w) = {dw:.6e}"
                ));
            }
        }
        if let Some(msg) = issue {
            log::warn!("{msg}");
            self.warnings.push(msg);
            self.solution_warned = true;
        }
        Ok(())
    }

    fn into_trace(self, termination: Termination) -> Trace {
        Trace { records: self.records, termination, warnings: self.warnings }
    }
}

/// Runs a problem to its stopping rule.
pub fn run(problem: ProblemSpec) -> Result<Trace> {
    let stop = problem.stop.clone();
    let mut solver = Solver::new(problem)?;
    let termination = loop {
        let record = solver.step()?;
        let (residual_s, residual_t, step_norm) =
            (record.residual_s, record.residual_t, record.step_norm);
        if let Some(tol) = stop.residual_tol() {
            if residual_s <= tol && residual_t <= tol {
                break Termination::ResidualTolerance;
            }
        }
        if let Some(tol) = stop.step_tol() {
            if step_norm <= tol {
                break Termination::StepTolerance;
            }
        }
        if solver.steps_taken() >= stop.max_iter_value() {
            break Termination::MaxIterations;
        }
    };
    Ok(solver.into_trace(termination))
}
