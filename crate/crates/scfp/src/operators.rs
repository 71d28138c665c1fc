//! Fixed-point maps: the operators T and S of a split common fixed point
//! problem, together with sampling-based checkers for the structural
//! properties the convergence theory relies on.

use crate::error::{Error, Result};
use crate::linalg;
use crate::parallel;
use crate::projections::BoxSet;
use crate::sampling;
use crate::space::{Point, SpaceSpec};

/// Fixed-point residual tolerance for declared fixed points.
const FIXED_POINT_TOL: f64 = 1e-12;
const MAX_INNER_ITER: usize = 100_000;

/// An affine monotone map `x -> M x + c`: the symmetrized matrix `M + M^T`
/// must be positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneLinearOp {
    matrix: Vec<Vec<f64>>,
    shift: Vec<f64>,
}

impl MonotoneLinearOp {
    pub fn new(matrix: Vec<Vec<f64>>, shift: Vec<f64>) -> Result<Self> {
        let d = shift.len();
        if d == 0 || matrix.len() != d {
            return Err(Error::DimensionMismatch { expected: d.max(1), got: matrix.len() });
        }
        for row in &matrix {
            if row.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: row.len() });
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidValue("matrix entries must be finite".into()));
            }
        }
        if shift.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidValue("shift entries must be finite".into()));
        }
        let min_eig = linalg::min_eig_symmetrized(&matrix);
        if min_eig < -1e-10 {
            return Err(Error::NotMonotone(format!(
                "smallest eigenvalue of M + M^T is {min_eig:.3e}"
            )));
        }
        Ok(MonotoneLinearOp { matrix, shift })
    }

    pub fn zero(dim: usize) -> Self {
        MonotoneLinearOp { matrix: vec![vec![0.0; dim]; dim], shift: vec![0.0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    /// Spectral norm of the matrix part.
    pub fn operator_norm(&self) -> f64 {
        linalg::spectral_norm(&self.matrix)
    }

    pub fn apply_coords(&self, x: &[f64]) -> Vec<f64> {
        self.matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, c)| row.iter().zip(x).map(|(m, v)| m * v).sum::<f64>() + c)
            .collect()
    }
}

/// The concrete rule a [`FixedPointMap`] evaluates.
#[derive(Debug, Clone)]
pub enum MapRule {
    /// `x -> factor * x` with `factor` in (0, 1].
    Scaling { factor: f64 },
    /// Metric projection onto a box.
    MetricProjection { set: BoxSet },
    /// Resolvent `(I + mu M)^-1 (x - mu c)` of the affine monotone map
    /// `M x + c`; its fixed points are the zeros of `M x + c`.
    ResolventLinear { op: MonotoneLinearOp, mu: f64 },
    /// Resolvent of the equilibrium bifunction `F(z, w) = <M z + c, w - z>`
    /// over a box: maps x to the unique z in the box with
    /// `F(z, w) + <z - x, w - z>/r >= 0` for all w in the box.
    EquilibriumResolvent { op: MonotoneLinearOp, set: BoxSet, r: f64, inner_tol: f64 },
    /// `outer . inner`.
    Composed { outer: Box<FixedPointMap>, inner: Box<FixedPointMap> },
}

/// Tag identifying a rule variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Scaling,
    MetricProjection,
    ResolventLinear,
    EquilibriumResolvent,
    Composed,
}

/// A map whose fixed-point set enters a split common fixed point problem,
/// optionally carrying one declared fixed point (validated on attachment)
/// for use by feasibility diagnostics.
#[derive(Debug, Clone)]
pub struct FixedPointMap {
    rule: MapRule,
    known_fixed_point: Option<Vec<f64>>,
}

/// Anything that maps points to points; checkers accept this so tests can
/// probe them with ad-hoc maps that the constructors would reject.
pub trait PointMap {
    fn apply_point(&self, x: &Point) -> Result<Point>;
}

impl PointMap for FixedPointMap {
    fn apply_point(&self, x: &Point) -> Result<Point> {
        self.apply(x)
    }
}

/// `x -> factor * x`. Nonexpansive scalings only: factor in (0, 1].
pub fn scaling_map(factor: f64) -> Result<FixedPointMap> {
    if !factor.is_finite() || factor <= 0.0 || factor > 1.0 {
        return Err(Error::InvalidValue(format!(
            "scaling factor must lie in (0, 1], got {factor}"
        )));
    }
    Ok(FixedPointMap { rule: MapRule::Scaling { factor }, known_fixed_point: None })
}

/// Metric projection onto `set`; its fixed points are exactly `set`.
pub fn projection_map(set: BoxSet) -> Result<FixedPointMap> {
    Ok(FixedPointMap { rule: MapRule::MetricProjection { set }, known_fixed_point: None })
}

/// Resolvent of the affine monotone map with step `mu > 0`.
pub fn resolvent_linear(op: MonotoneLinearOp, mu: f64) -> Result<FixedPointMap> {
    if !mu.is_finite() || mu <= 0.0 {
        return Err(Error::InvalidValue(format!("resolvent step must be positive, got {mu}")));
    }
    Ok(FixedPointMap { rule: MapRule::ResolventLinear { op, mu }, known_fixed_point: None })
}

/// Resolvent of the equilibrium bifunction `F(z, w) = <M z + c, w - z>` over
/// `set` with parameter `r > 0`. The inner solver is an averaged fixed-point
/// iteration of `z -> P_set(x - r (M z + c))` and requires `r ||M|| <= 1`.
pub fn equilibrium_resolvent(op: MonotoneLinearOp, set: BoxSet, r: f64) -> Result<FixedPointMap> {
    equilibrium_resolvent_with_tol(op, set, r, 1e-12)
}

/// [`equilibrium_resolvent`] with an explicit inner-iteration tolerance.
pub fn equilibrium_resolvent_with_tol(
    op: MonotoneLinearOp,
    set: BoxSet,
    r: f64,
    inner_tol: f64,
) -> Result<FixedPointMap> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::InvalidValue(format!("equilibrium parameter must be positive, got {r}")));
    }
    if set.dim() != op.dim() {
        return Err(Error::DimensionMismatch { expected: op.dim(), got: set.dim() });
    }
    if !inner_tol.is_finite() || inner_tol <= 0.0 {
        return Err(Error::InvalidValue(format!("inner tolerance must be positive, got {inner_tol}")));
    }
    let reach = r * op.operator_norm();
    if reach > 1.0 + 1e-12 {
        return Err(Error::InvalidValue(format!(
            "r * ||M|| = {reach:.6} exceeds 1; the averaged inner iteration needs r * ||M|| <= 1"
        )));
    }
    Ok(FixedPointMap {
        rule: MapRule::EquilibriumResolvent { op, set, r, inner_tol },
        known_fixed_point: None,
    })
}

/// `outer . inner`.
pub fn composed(outer: FixedPointMap, inner: FixedPointMap) -> FixedPointMap {
    FixedPointMap {
        rule: MapRule::Composed { outer: Box::new(outer), inner: Box::new(inner) },
        known_fixed_point: None,
    }
}

impl FixedPointMap {
    pub fn rule(&self) -> &MapRule {
        &self.rule
    }

    pub fn kind(&self) -> MapKind {
        match &self.rule {
            MapRule::Scaling { .. } => MapKind::Scaling,
            MapRule::MetricProjection { .. } => MapKind::MetricProjection,
            MapRule::ResolventLinear { .. } => MapKind::ResolventLinear,
            MapRule::EquilibriumResolvent { .. } => MapKind::EquilibriumResolvent,
            MapRule::Composed { .. } => MapKind::Composed,
        }
    }

    pub fn known_fixed_point(&self) -> Option<&[f64]> {
        self.known_fixed_point.as_deref()
    }

    /// Attaches a declared fixed point after verifying `T(fp) = fp` to
    /// within a residual of 1e-12 per coordinate.
    pub fn with_known_fixed_point(mut self, fp: Vec<f64>) -> Result<Self> {
        let image = self.apply_coords(&fp)?;
        let residual = image
            .iter()
            .zip(&fp)
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
        if residual > FIXED_POINT_TOL {
            return Err(Error::FixedPointMismatch(format!(
                "residual ||T(fp) - fp|| = {residual:.3e} exceeds {FIXED_POINT_TOL:.0e}"
            )));
        }
        self.known_fixed_point = Some(fp);
        Ok(self)
    }

    /// Dimension the map is restricted to, if any; scalings act in every
    /// dimension.
    pub fn dim_constraint(&self) -> Option<usize> {
        match &self.rule {
            MapRule::Scaling { .. } => None,
            MapRule::MetricProjection { set } => Some(set.dim()),
            MapRule::ResolventLinear { op, .. } => Some(op.dim()),
            MapRule::EquilibriumResolvent { op, .. } => Some(op.dim()),
            MapRule::Composed { outer, inner } => outer.dim_constraint().or(inner.dim_constraint()),
        }
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        let coords = self.apply_coords(x.coords())?;
        Point::new(x.space(), coords)
    }

    pub fn apply_coords(&self, x: &[f64]) -> Result<Vec<f64>> {
        if let Some(d) = self.dim_constraint() {
            if x.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: x.len() });
            }
        }
        match &self.rule {
            MapRule::Scaling { factor } => Ok(x.iter().map(|v| factor * v).collect()),
            MapRule::MetricProjection { set } => Ok(set.clamp_coords(x)),
            MapRule::ResolventLinear { op, mu } => {
                let d = op.dim();
                let system = nalgebra::DMatrix::from_fn(d, d, |i, j| {
                    op.matrix()[i][j] * mu + if i == j { 1.0 } else { 0.0 }
                });
                let rhs: Vec<f64> = x.iter().zip(op.shift()).map(|(v, c)| v - mu * c).collect();
                linalg::solve(&system, &rhs)
                    .ok_or_else(|| Error::Numerical("resolvent system is singular".into()))
            }
            MapRule::EquilibriumResolvent { op, set, r, inner_tol } => {
                let mut z = set.clamp_coords(x);
                for _ in 0..MAX_INNER_ITER {
                    let mz = op.apply_coords(&z);
                    let target: Vec<f64> =
                        x.iter().zip(&mz).map(|(xi, m)| xi - r * m).collect();
                    let g = set.clamp_coords(&target);
                    let residual = g
                        .iter()
                        .zip(&z)
                        .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
                    for (zi, gi) in z.iter_mut().zip(&g) {
                        *zi = 0.5 * *zi + 0.5 * gi;
                    }
                    if residual <= *inner_tol {
                        return Ok(z);
                    }
                }
                Err(Error::Numerical(
                    "equilibrium resolvent inner iteration did not reach its tolerance".into(),
                ))
            }
            MapRule::Composed { outer, inner } => outer.apply_coords(&inner.apply_coords(x)?),
        }
    }
}

/// Outcome of a sampled property check.
#[derive(Debug, Clone, Copy)]
pub struct CheckReport {
    pub pass: bool,
    /// Worst (most negative) sampled margin; the property demands it be
    /// nonnegative up to roundoff.
    pub worst_margin: f64,
    pub samples: usize,
}

const MARGIN_TOL: f64 = 1e-10;

fn sampled_margin_report<M, F>(
    map: &M,
    space: &SpaceSpec,
    domain: &BoxSet,
    n_samples: usize,
    seed: u64,
    margin: F,
) -> Result<CheckReport>
where
    M: PointMap + Sync + ?Sized,
    F: Fn(&M, &mut rand_chacha::ChaCha8Rng) -> Result<f64> + Sync,
{
    if n_samples == 0 {
        return Err(Error::InvalidValue("sample count must be positive".into()));
    }
    if domain.dim() != space.dim() {
        return Err(Error::DimensionMismatch { expected: space.dim(), got: domain.dim() });
    }
    if !domain.is_bounded() {
        return Err(Error::InvalidValue("sampling domain must be a bounded box".into()));
    }
    let worst = parallel::indexed_min(n_samples as u64, |i| {
        let mut rng = sampling::rng_for(seed, i);
        margin(map, &mut rng).unwrap_or(f64::NEG_INFINITY)
    });
    if worst == f64::NEG_INFINITY {
        return Err(Error::Numerical("a property-check sample failed to evaluate".into()));
    }
    Ok(CheckReport { pass: worst >= -MARGIN_TOL, worst_margin: worst, samples: n_samples })
}

/// Samples pairs x, y from `domain` and checks the firm-nonexpansiveness
/// pairing `<Tx - Ty, J_p(x - Tx) - J_p(y - Ty)> >= 0`.
pub fn check_firmly_nonexpansive_like<M>(
    map: &M,
    space: &SpaceSpec,
    domain: &BoxSet,
    n_samples: usize,
    seed: u64,
) -> Result<CheckReport>
where
    M: PointMap + Sync + ?Sized,
{
    sampled_margin_report(map, space, domain, n_samples, seed, |m, rng| {
        let x = Point::new(space, sampling::uniform_in_box(rng, domain))?;
        let y = Point::new(space, sampling::uniform_in_box(rng, domain))?;
        let tx = m.apply_point(&x)?;
        let ty = m.apply_point(&y)?;
        let jx = x.sub(&tx)?.duality_map();
        let jy = y.sub(&ty)?.duality_map();
        jx.sub(&jy)?.pairing(&tx.sub(&ty)?)
    })
}

/// Samples x from `domain` and checks the quasi-nonexpansiveness descent
/// `Delta_p(Tx, x*) <= Delta_p(x, x*)` at the declared fixed point `x*`.
pub fn check_bregman_quasi_nonexpansive<M>(
    map: &M,
    x_star: &Point,
    domain: &BoxSet,
    n_samples: usize,
    seed: u64,
) -> Result<CheckReport>
where
    M: PointMap + Sync + ?Sized,
{
    let image = map.apply_point(x_star)?;
    let residual = image.sub(x_star)?.norm_max();
    if residual > FIXED_POINT_TOL {
        return Err(Error::FixedPointMismatch(format!(
            "residual ||T(x*) - x*|| = {residual:.3e} exceeds {FIXED_POINT_TOL:.0e}"
        )));
    }
    let space = x_star.space().clone();
    sampled_margin_report(map, &space, domain, n_samples, seed, |m, rng| {
        let x = Point::new(&space, sampling::uniform_in_box(rng, domain))?;
        let tx = m.apply_point(&x)?;
        Ok(x.bregman_distance(x_star)? - tx.bregman_distance(x_star)?)
    })
}
