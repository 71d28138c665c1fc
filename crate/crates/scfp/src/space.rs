//! Finite-dimensional l_p geometry: norms, duality mappings, Bregman
//! distances, and bounded linear operators between spaces.
//!
//! Throughout, a space is R^d under the p-norm with 2 <= p < infinity, and
//! q = p/(p-1) is the conjugate exponent, so 1 < q <= 2. The duality mapping
//! J_p sends x to the dual vector with coordinates |x_i|^(p-1) sign(x_i); its
//! inverse is the dual-space mapping J_q. For p = 2 both are the identity on
//! coordinates and the Bregman distance reduces to half the squared
//! Euclidean distance.

use crate::error::{Error, Result};
use crate::linalg;

/// R^d with the p-norm, plus the geometric constants used by step-size
/// bounds: the smoothness constant of the dual norm and (optionally) the
/// p-uniform convexity constant.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceSpec {
    dim: usize,
    p: f64,
    q: f64,
    smoothness_const: f64,
    convexity_const: Option<f64>,
}

impl SpaceSpec {
    /// A d-dimensional space with exponent p in [2, infinity). The conjugate
    /// exponent is derived, the smoothness constant defaults to 1, and the
    /// convexity constant defaults to 1/2 when p = 2 (its exact value there)
    /// and is otherwise left unset.
    pub fn new(dim: usize, p: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidValue("space dimension must be at least 1".into()));
        }
        if !p.is_finite() || p < 2.0 {
            return Err(Error::InvalidValue(format!(
                "norm exponent p = {p} outside the supported range [2, infinity)"
            )));
        }
        let q = p / (p - 1.0);
        let convexity_const = if p == 2.0 { Some(0.5) } else { None };
        Ok(SpaceSpec { dim, p, q, smoothness_const: 1.0, convexity_const })
    }

    /// Overrides the smoothness constant used in step-size bounds.
    pub fn with_smoothness_const(mut self, c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::InvalidValue(format!("smoothness constant must be positive, got {c}")));
        }
        self.smoothness_const = c;
        Ok(self)
    }

    /// Sets the p-uniform convexity constant (enables the lower-bound check
    /// tau * ||x - y||^p <= Delta_p(x, y)).
    pub fn with_convexity_const(mut self, tau: f64) -> Result<Self> {
        if !tau.is_finite() || tau <= 0.0 {
            return Err(Error::InvalidValue(format!("convexity constant must be positive, got {tau}")));
        }
        self.convexity_const = Some(tau);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Conjugate exponent q = p/(p-1).
    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn smoothness_const(&self) -> f64 {
        self.smoothness_const
    }

    pub fn convexity_const(&self) -> Option<f64> {
        self.convexity_const
    }

    pub fn is_hilbert(&self) -> bool {
        self.p == 2.0
    }

    /// Same dimension and exponent; the extra constants may differ.
    pub fn compatible_with(&self, other: &SpaceSpec) -> bool {
        self.dim == other.dim && self.p == other.p
    }

    fn check_coords(&self, coords: &[f64]) -> Result<()> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: coords.len() });
        }
        if coords.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidValue("coordinates must be finite".into()));
        }
        Ok(())
    }
}

fn check_same_space(a: &SpaceSpec, b: &SpaceSpec) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, got: b.dim });
    }
    if a.p != b.p {
        return Err(Error::InvalidValue(format!(
            "operands live in different spaces (p = {} vs p = {})",
            a.p, b.p
        )));
    }
    Ok(())
}

/// |v|^e * sign(v), the coordinate map behind both duality mappings.
fn signed_pow(v: f64, e: f64) -> f64 {
    v.abs().powf(e) * v.signum()
}

/// A vector in a primal space.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    space: SpaceSpec,
    coords: Vec<f64>,
}

impl Point {
    pub fn new(space: &SpaceSpec, coords: Vec<f64>) -> Result<Self> {
        space.check_coords(&coords)?;
        Ok(Point { space: space.clone(), coords })
    }

    pub fn zero(space: &SpaceSpec) -> Self {
        Point { space: space.clone(), coords: vec![0.0; space.dim] }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn space(&self) -> &SpaceSpec {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|v| v.is_finite())
    }

    /// Sum of |x_i|^p (the p-th power of the norm, computed without the root).
    pub fn norm_pow_p(&self) -> f64 {
        let p = self.space.p;
        if p == 2.0 {
            self.coords.iter().map(|v| v * v).sum()
        } else {
            self.coords.iter().map(|v| v.abs().powf(p)).sum()
        }
    }

    pub fn norm_p(&self) -> f64 {
        let p = self.space.p;
        if p == 2.0 {
            self.norm_pow_p().sqrt()
        } else {
            self.norm_pow_p().powf(1.0 / p)
        }
    }

    pub fn norm_max(&self) -> f64 {
        self.coords.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    /// The duality mapping J_p: coordinates |x_i|^(p-1) sign(x_i). Identity
    /// on coordinates when p = 2.
    pub fn duality_map(&self) -> DualPoint {
        let p = self.space.p;
        let coords = if p == 2.0 {
            self.coords.clone()
        } else {
            self.coords.iter().map(|v| signed_pow(*v, p - 1.0)).collect()
        };
        DualPoint { space: self.space.clone(), coords }
    }

    /// Delta_p(self, y) = ||self||^p / q - <J_p self, y> + ||y||^p / p.
    /// Nonnegative, zero iff self == y, and equal to ||self - y||^2 / 2 when
    /// p = 2.
    pub fn bregman_distance(&self, y: &Point) -> Result<f64> {
        check_same_space(&self.space, &y.space)?;
        let p = self.space.p;
        let q = self.space.q;
        let pairing = self.duality_map().pairing(y)?;
        Ok(self.norm_pow_p() / q - pairing + y.norm_pow_p() / p)
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        check_same_space(&self.space, &other.space)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Point { space: self.space.clone(), coords })
    }

    /// self + c * other.
    pub fn add_scaled(&self, c: f64, other: &Point) -> Result<Point> {
        check_same_space(&self.space, &other.space)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + c * b).collect();
        Ok(Point { space: self.space.clone(), coords })
    }

    /// a * x + b * y, computed coordinate-wise as `a * x_i + b * y_i`.
    pub fn lin_comb(a: f64, x: &Point, b: f64, y: &Point) -> Result<Point> {
        check_same_space(&x.space, &y.space)?;
        let coords = x.coords.iter().zip(&y.coords).map(|(xi, yi)| a * xi + b * yi).collect();
        Ok(Point { space: x.space.clone(), coords })
    }

    pub fn scale(&self, c: f64) -> Point {
        Point { space: self.space.clone(), coords: self.coords.iter().map(|v| c * v).collect() }
    }
}

/// A vector in the dual of a primal space. `space` names the primal space
/// the functional acts on; coordinates are with respect to the dual basis,
/// and the natural norm is the conjugate-exponent q-norm.
#[derive(Debug, Clone, PartialEq)]
pub struct DualPoint {
    space: SpaceSpec,
    coords: Vec<f64>,
}

impl DualPoint {
    pub fn new(space: &SpaceSpec, coords: Vec<f64>) -> Result<Self> {
        space.check_coords(&coords)?;
        Ok(DualPoint { space: space.clone(), coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn space(&self) -> &SpaceSpec {
        &self.space
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|v| v.is_finite())
    }

    pub fn norm_q(&self) -> f64 {
        let q = self.space.q;
        if q == 2.0 {
            self.coords.iter().map(|v| v * v).sum::<f64>().sqrt()
        } else {
            self.coords.iter().map(|v| v.abs().powf(q)).sum::<f64>().powf(1.0 / q)
        }
    }

    /// <self, x>, the canonical pairing.
    pub fn pairing(&self, x: &Point) -> Result<f64> {
        check_same_space(&self.space, &x.space)?;
        Ok(self.coords.iter().zip(&x.coords).map(|(a, b)| a * b).sum())
    }

    /// The dual-space duality mapping J_q, which inverts J_p: coordinates
    /// |phi_i|^(q-1) sign(phi_i). Identity on coordinates when p = 2.
    pub fn duality_map_inverse(&self) -> Point {
        let q = self.space.q;
        let coords = if q == 2.0 {
            self.coords.clone()
        } else {
            self.coords.iter().map(|v| signed_pow(*v, q - 1.0)).collect()
        };
        Point { space: self.space.clone(), coords }
    }

    pub fn sub(&self, other: &DualPoint) -> Result<DualPoint> {
        check_same_space(&self.space, &other.space)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(DualPoint { space: self.space.clone(), coords })
    }

    /// self + c * other.
    pub fn add_scaled(&self, c: f64, other: &DualPoint) -> Result<DualPoint> {
        check_same_space(&self.space, &other.space)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + c * b).collect();
        Ok(DualPoint { space: self.space.clone(), coords })
    }

    /// a * x + b * y, computed coordinate-wise as `a * x_i + b * y_i`.
    pub fn lin_comb(a: f64, x: &DualPoint, b: f64, y: &DualPoint) -> Result<DualPoint> {
        check_same_space(&x.space, &y.space)?;
        let coords = x.coords.iter().zip(&y.coords).map(|(xi, yi)| a * xi + b * yi).collect();
        Ok(DualPoint { space: x.space.clone(), coords })
    }

    pub fn scale(&self, c: f64) -> DualPoint {
        DualPoint { space: self.space.clone(), coords: self.coords.iter().map(|v| c * v).collect() }
    }
}

/// A bounded linear operator between two spaces, stored as a dense matrix
/// (rows indexed by codomain coordinates) together with a certified upper
/// bound on its operator norm.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOperator {
    matrix: Vec<Vec<f64>>,
    domain: SpaceSpec,
    codomain: SpaceSpec,
    norm_upper_bound: f64,
}

impl LinearOperator {
    /// `matrix` must have `codomain.dim()` rows of length `domain.dim()`,
    /// all entries finite.
    ///
    /// The norm bound is the largest singular value when both exponents are
    /// 2 (then it is the operator norm itself, to relative accuracy 1e-10).
    /// Otherwise it is sigma_max * d^(1/2 - 1/p) for the domain dimension d
    /// and domain exponent p, which dominates the true p-norm operator norm
    /// because ||x||_2 <= d^(1/2 - 1/p) ||x||_p and ||y||_p <= ||y||_2 for
    /// p >= 2.
    pub fn new(matrix: Vec<Vec<f64>>, domain: &SpaceSpec, codomain: &SpaceSpec) -> Result<Self> {
        if matrix.len() != codomain.dim() {
            return Err(Error::DimensionMismatch { expected: codomain.dim(), got: matrix.len() });
        }
        for row in &matrix {
            if row.len() != domain.dim() {
                return Err(Error::DimensionMismatch { expected: domain.dim(), got: row.len() });
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidValue("operator entries must be finite".into()));
            }
        }
        let sigma = linalg::spectral_norm(&matrix);
        let norm_upper_bound = if domain.p() == 2.0 && codomain.p() == 2.0 {
            sigma
        } else {
            sigma * (domain.dim() as f64).powf(0.5 - 1.0 / domain.p())
        };
        Ok(LinearOperator {
            matrix,
            domain: domain.clone(),
            codomain: codomain.clone(),
            norm_upper_bound,
        })
    }

    pub fn identity(space: &SpaceSpec) -> Self {
        let d = space.dim();
        let matrix = (0..d)
            .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        LinearOperator::new(matrix, space, space).expect("identity matrix is always valid")
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn domain(&self) -> &SpaceSpec {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceSpec {
        &self.codomain
    }

    /// Certified upper bound on the operator norm; exact for p = 2 on both
    /// sides.
    pub fn norm_upper_bound(&self) -> f64 {
        self.norm_upper_bound
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        check_same_space(&self.domain, x.space())?;
        let coords = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(x.coords()).map(|(m, v)| m * v).sum())
            .collect();
        Ok(Point { space: self.codomain.clone(), coords })
    }

    /// Applies the adjoint to a functional on the codomain, producing a
    /// functional on the domain: (A* phi)_j = sum_i m[i][j] phi_i.
    pub fn adjoint_apply(&self, phi: &DualPoint) -> Result<DualPoint> {
        check_same_space(&self.codomain, phi.space())?;
        let d = self.domain.dim();
        let mut coords = vec![0.0; d];
        for (row, f) in self.matrix.iter().zip(phi.coords()) {
            for (j, m) in row.iter().enumerate() {
                coords[j] += m * f;
            }
        }
        Ok(DualPoint { space: self.domain.clone(), coords })
    }
}
