//! Constraint sets and Bregman projections.
//!
//! The shrinking set maintained by the solvers is an intersection of a box
//! with half-spaces, each half-space recording one Bregman-distance
//! comparison `Delta_p(near, u) <= Delta_p(far, u)`. That comparison is
//! affine in u, so the set stays polyhedral and projections reduce to convex
//! programs with linear constraints.


use crate::error::{Error, Result};
use crate::linalg;
use crate::space::{DualPoint, Point, SpaceSpec};

const MAX_DYKSTRA_CYCLES: usize = 20_000;
const MAX_ASCENT_CYCLES: usize = 5_000;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `{u : <normal, u> <= offset}` with the normal in the dual space.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpace {
    normal: DualPoint,
    offset: f64,
}

impl HalfSpace {
    pub fn new(normal: DualPoint, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidValue("half-space offset must be finite".into()));
        }
        if normal.coords().iter().all(|v| *v == 0.0) && offset < 0.0 {
            return Err(Error::InvalidValue(
                "half-space with zero normal and negative offset is empty".into(),
            ));
        }
        Ok(HalfSpace { normal, offset })
    }

    /// The set `{u : Delta_p(near, u) <= Delta_p(far, u)}`. Expanding both
    /// Bregman distances, the `||u||^p` terms cancel and the comparison is
    /// `<J_p(far) - J_p(near), u> <= (||far||^p - ||near||^p)/q`.
    ///
    /// When the two points coincide the comparison holds everywhere and the
    /// trivial half-space `<0, u> <= 0` is returned. The same happens when
    /// they agree to within roundoff: a separation below about 1e-13 of the
    /// points' scale leaves no accurate digits in the normal direction, so
    /// the computed boundary would be noise that can cut off the true set.
    pub fn from_bregman_pair(near: &Point, far: &Point) -> Result<Self> {
        if !near.space().compatible_with(far.space()) {
            return Err(Error::InvalidValue(
                "bregman pair points live in different spaces".into(),
            ));
        }
        let separation = far.sub(near)?.norm_max();
        let scale = 1.0 + near.norm_max().max(far.norm_max());
        if separation <= 1e-13 * scale {
            return HalfSpace::new(DualPoint::new(near.space(), vec![0.0; near.dim()])?, 0.0);
        }
        let normal = far.duality_map().sub(&near.duality_map())?;
        let offset = (far.norm_pow_p() - near.norm_pow_p()) / near.space().q();
        HalfSpace::new(normal, offset)
    }

    pub fn normal(&self) -> &DualPoint {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// `<normal, u> - offset`; nonpositive inside the half-space.
    pub fn violation(&self, u: &Point) -> Result<f64> {
        Ok(self.normal.pairing(u)? - self.offset)
    }

    pub fn contains(&self, u: &Point, slack: f64) -> Result<bool> {
        Ok(self.violation(u)? <= slack)
    }
}

/// An axis-aligned box; bounds may be infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxSet {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BoxSet {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len().max(1), got: upper.len() });
        }
        for (lo, hi) in lower.iter().zip(&upper) {
            if lo.is_nan() || hi.is_nan() || lo > hi {
                return Err(Error::InvalidValue(format!("empty or invalid box side [{lo}, {hi}]")));
            }
        }
        Ok(BoxSet { lower, upper })
    }

    /// The whole space as a box.
    pub fn whole(dim: usize) -> Self {
        BoxSet { lower: vec![f64::NEG_INFINITY; dim], upper: vec![f64::INFINITY; dim] }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn is_bounded(&self) -> bool {
        self.lower.iter().chain(&self.upper).all(|v| v.is_finite())
    }

    pub fn clamp_coords(&self, v: &[f64]) -> Vec<f64> {
        v.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(x, (lo, hi))| x.clamp(*lo, *hi))
            .collect()
    }

    pub fn contains_coords(&self, v: &[f64], slack: f64) -> bool {
        v.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(x, (lo, hi))| *x >= lo - slack && *x <= hi + slack)
    }

    pub fn contains(&self, u: &Point, slack: f64) -> Result<bool> {
        self.check_dim(u.dim())?;
        Ok(self.contains_coords(u.coords(), slack))
    }

    /// Coordinate-wise clamp. This is the metric projection for p = 2 and,
    /// by separability of both the p-norm and the clamp, also the Bregman
    /// projection onto the box for every exponent p >= 2.
    pub fn metric_project(&self, x: &Point) -> Result<Point> {
        self.check_dim(x.dim())?;
        Point::new(x.space(), self.clamp_coords(x.coords()))
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got });
        }
        Ok(())
    }
}

/// A box intersected with an ordered list of half-spaces. Appending a
/// half-space only ever shrinks the set.
#[derive(Debug, Clone)]
pub struct ShrinkingSet {
    space: SpaceSpec,
    base: BoxSet,
    halfspaces: Vec<HalfSpace>,
}

impl ShrinkingSet {
    pub fn new(space: &SpaceSpec, base: BoxSet) -> Result<Self> {
        if base.dim() != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), got: base.dim() });
        }
        Ok(ShrinkingSet { space: space.clone(), base, halfspaces: Vec::new() })
    }

    pub fn space(&self) -> &SpaceSpec {
        &self.space
    }

    pub fn base(&self) -> &BoxSet {
        &self.base
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn push(&mut self, hs: HalfSpace) -> Result<()> {
        if !hs.normal().space().compatible_with(&self.space) {
            return Err(Error::InvalidValue(
                "half-space normal lives in a different space than the set".into(),
            ));
        }
        self.halfspaces.push(hs);
        Ok(())
    }

    pub fn contains(&self, u: &Point, slack: f64) -> Result<bool> {
        if !self.base.contains(u, slack)? {
            return Ok(false);
        }
        for hs in &self.halfspaces {
            if !hs.contains(u, slack)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn worst_violation(&self, coords: &[f64]) -> f64 {
        let mut worst = 0.0_f64;
        for (v, (lo, hi)) in coords.iter().zip(self.base.lower().iter().zip(self.base.upper())) {
            worst = worst.max(lo - v).max(v - hi);
        }
        for hs in &self.halfspaces {
            let dot: f64 = hs.normal().coords().iter().zip(coords).map(|(a, u)| a * u).sum();
            worst = worst.max(dot - hs.offset());
        }
        worst
    }

    /// The Bregman projection of `x0` onto the set: the unique minimizer of
    /// `Delta_p(x0, u)` over the set. In one dimension and for p = 2 in any
    /// dimension the result is accurate to roundoff or to `tol`; for p > 2
    /// a dual coordinate-ascent method is used and `tol` bounds the residual
    /// feasibility and iterate change.
    ///
    /// Fails with `Error::Infeasible` when the set is detected to be empty.
    pub fn bregman_project(&self, x0: &Point, tol: f64) -> Result<Point> {
        if !x0.space().compatible_with(&self.space) {
            return Err(Error::InvalidValue("projection input lives in a different space".into()));
        }
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::InvalidValue(format!("projection tolerance must be positive, got {tol}")));
        }
        let result = if self.space.dim() == 1 {
            self.project_interval(x0)?
        } else if self.space.is_hilbert() {
            self.project_dykstra(x0, tol)?
        } else {
            self.project_dual_ascent(x0, tol)?
        };
        let slack = 1e-7 * (1.0 + x0.norm_max());
        let worst = self.worst_violation(result.coords());
        if worst > slack {
            return Err(Error::Infeasible(format!(
                "projection result violates the constraints by {worst:.3e}; the set looks empty"
            )));
        }
        Ok(result)
    }

    /// Exact closed form in one dimension: every constraint is an interval
    /// bound, so intersect the intervals and clamp. Because the scalar
    /// duality map is strictly increasing, the clamp minimizes the Bregman
    /// distance for every p.
    fn project_interval(&self, x0: &Point) -> Result<Point> {
        let mut lo = self.base.lower()[0];
        let mut hi = self.base.upper()[0];
        for hs in &self.halfspaces {
            let a = hs.normal().coords()[0];
            let b = hs.offset();
            if a > 0.0 {
                hi = hi.min(b / a);
            } else if a < 0.0 {
                lo = lo.max(b / a);
            } else if b < 0.0 {
                return Err(Error::Infeasible("a zero-normal constraint excludes every point".into()));
            }
        }
        if lo > hi {
            return Err(Error::Infeasible(format!(
                "constraint intervals have empty intersection [{lo}, {hi}]"
            )));
        }
        Point::new(x0.space(), vec![x0.coords()[0].clamp(lo, hi)])
    }

    /// Dykstra's alternating projection scheme with per-set correction
    /// vectors; converges to the metric projection onto the intersection,
    /// which for p = 2 is the Bregman projection. Its linear rate degrades
    /// when accumulated half-spaces become nearly parallel, so the rough
    /// point is refined by an exact active-set solve whenever possible.
    fn project_dykstra(&self, x0: &Point, tol: f64) -> Result<Point> {
        let d = self.space.dim();
        let sets = 1 + self.halfspaces.len();
        let mut x = x0.coords().to_vec();
        let mut corrections = vec![vec![0.0; d]; sets];
        let mut converged = false;
        for _ in 0..MAX_DYKSTRA_CYCLES {
            let before = x.clone();
            // The iterate can sit still for a whole sweep while corrections
            // keep evolving, so convergence requires both to settle.
            let mut corr_change = 0.0_f64;
            for (k, corr) in corrections.iter_mut().enumerate() {
                let v: Vec<f64> = x.iter().zip(corr.iter()).map(|(a, c)| a + c).collect();
                let y = if k == 0 {
                    self.base.clamp_coords(&v)
                } else {
                    project_halfspace_coords(&self.halfspaces[k - 1], &v)
                };
                for j in 0..d {
                    let next = v[j] - y[j];
                    corr_change = corr_change.max((next - corr[j]).abs());
                    corr[j] = next;
                }
                x = y;
            }
            let change = x
                .iter()
                .zip(&before)
                .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
            if change <= tol && corr_change <= tol {
                converged = true;
                break;
            }
        }
        let scale = 1.0 + x0.norm_max();
        if converged && self.worst_violation(&x) <= 1e-10 * scale {
            return Point::new(x0.space(), x);
        }
        if let Some(polished) = self.polish_least_distance(x0) {
            return Point::new(x0.space(), polished);
        }
        if !converged && self.worst_violation(&x) > 1e-7 * scale {
            return Err(Error::Infeasible(
                "alternating projections stalled with constraints still violated".into(),
            ));
        }
        if !converged {
            return Err(Error::Numerical("projection did not converge within the cycle limit".into()));
        }
        Point::new(x0.space(), x)
    }

    /// Every constraint of the set as a linear row `a . u <= b`, finite box
    /// faces included; zero-normal half-spaces carry no information and are
    /// skipped.
    fn linear_constraints(&self) -> Vec<(Vec<f64>, f64)> {
        let d = self.space.dim();
        let mut cons = Vec::new();
        for i in 0..d {
            if self.base.upper()[i].is_finite() {
                let mut a = vec![0.0; d];
                a[i] = 1.0;
                cons.push((a, self.base.upper()[i]));
            }
            if self.base.lower()[i].is_finite() {
                let mut a = vec![0.0; d];
                a[i] = -1.0;
                cons.push((a, -self.base.lower()[i]));
            }
        }
        for hs in &self.halfspaces {
            if hs.normal().coords().iter().any(|v| *v != 0.0) {
                cons.push((hs.normal().coords().to_vec(), hs.offset()));
            }
        }
        cons
    }

    /// Exact Euclidean projection through the least-distance program on the
    /// shifted variable v = u - x0: minimize ||v|| subject to
    /// a_i . (x0 + v) <= b_i. Finite-terminating and robust to nearly
    /// parallel accumulated rows where Dykstra's rate degrades. Returns None
    /// when the program is inconsistent or the computed point is not
    /// feasible to working precision.
    fn polish_least_distance(&self, x0: &Point) -> Option<Vec<f64>> {
        let cons = self.linear_constraints();
        if cons.is_empty() {
            return Some(x0.coords().to_vec());
        }
        let g: Vec<Vec<f64>> =
            cons.iter().map(|(a, _)| a.iter().map(|v| -v).collect()).collect();
        let h: Vec<f64> = cons.iter().map(|(a, b)| dot(a, x0.coords()) - b).collect();
        let v = linalg::least_distance(&g, &h)?;
        let u: Vec<f64> = x0.coords().iter().zip(&v).map(|(a, b)| a + b).collect();
        let worst = cons.iter().map(|(a, b)| dot(a, &u) - b).fold(0.0_f64, f64::max);
        if worst <= 1e-9 * (1.0 + x0.norm_max()) {
            Some(u)
        } else {
            None
        }
    }

    /// Cyclic coordinate ascent on the Lagrange dual for p > 2. The
    /// optimality system is `J_p(u) = J_p(x0) - sum_i lambda_i a_i` with
    /// lambda >= 0 and complementary slackness; each pass maximizes the dual
    /// in one multiplier by bisection on its strictly decreasing gradient.
    fn project_dual_ascent(&self, x0: &Point, tol: f64) -> Result<Point> {
        let qm1 = self.space.q() - 1.0;
        let constraints = self.linear_constraints();
        if constraints.is_empty() {
            return Ok(x0.clone());
        }

        let signed_pow = |v: f64, e: f64| v.abs().powf(e) * v.signum();
        let jx0: Vec<f64> = x0.duality_map().coords().to_vec();
        let mut lambda = vec![0.0; constraints.len()];
        // Dual running total J_p(x0) - sum_i lambda_i a_i.
        let mut total = jx0;
        let mut u: Vec<f64> = total.iter().map(|v| signed_pow(*v, qm1)).collect();
        for _ in 0..MAX_ASCENT_CYCLES {
            for (i, (a, b)) in constraints.iter().enumerate() {
                let sans: Vec<f64> = total.iter().zip(a).map(|(t, ai)| t + lambda[i] * ai).collect();
                let grad = |mu: f64| -> f64 {
                    sans.iter()
                        .zip(a)
                        .map(|(s, ai)| ai * signed_pow(s - mu * ai, qm1))
                        .sum::<f64>()
                        - b
                };
                let new_lambda = if grad(0.0) <= 0.0 {
                    0.0
                } else {
                    let mut hi = 1.0;
                    while grad(hi) > 0.0 {
                        hi *= 2.0;
                        if hi > 1e50 {
                            return Err(Error::Infeasible(
                                "dual multipliers diverge; constraints are inconsistent".into(),
                            ));
                        }
                    }
                    let mut lo = 0.0;
                    for _ in 0..200 {
                        let mid = 0.5 * (lo + hi);
                        if grad(mid) > 0.0 {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    0.5 * (lo + hi)
                };
                lambda[i] = new_lambda;
                for (t, (s, ai)) in total.iter_mut().zip(sans.iter().zip(a)) {
                    *t = s - new_lambda * ai;
                }
            }
            let u_next: Vec<f64> = total.iter().map(|v| signed_pow(*v, qm1)).collect();
            let change = u_next
                .iter()
                .zip(&u)
                .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
            u = u_next;
            if change <= tol && self.worst_violation(&u) <= tol * (1.0 + x0.norm_max()) {
                return Point::new(x0.space(), u);
            }
        }
        if self.worst_violation(&u) > (1.0 + x0.norm_max()) * tol.sqrt() {
            Err(Error::Infeasible(
                "dual ascent stalled with constraints still violated".into(),
            ))
        } else {
            Err(Error::Numerical("projection did not converge within the cycle limit".into()))
        }
    }
}

fn project_halfspace_coords(hs: &HalfSpace, v: &[f64]) -> Vec<f64> {
    let a = hs.normal().coords();
    let aa: f64 = a.iter().map(|x| x * x).sum();
    if aa == 0.0 {
        return v.to_vec();
    }
    let viol: f64 = a.iter().zip(v).map(|(ai, vi)| ai * vi).sum::<f64>() - hs.offset();
    if viol <= 0.0 {
        v.to_vec()
    } else {
        let t = viol / aa;
        v.iter().zip(a).map(|(vi, ai)| vi - t * ai).collect()
    }
}
