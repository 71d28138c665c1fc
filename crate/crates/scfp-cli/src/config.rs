//! TOML problem configuration and its translation into a `ProblemSpec`.
//!
//! Unknown keys are rejected everywhere so a typo cannot silently fall back
//! to a default. Map sections carry a `kind` tag plus the fields that kind
//! needs; setting a field the kind does not use is an error.

use serde::{Deserialize, Serialize};

use scfp::{
    composed, equilibrium_resolvent, equilibrium_resolvent_with_tol, projection_map,
    resolvent_linear, scaling_map, BoxSet, Error, FixedPointMap, LinearOperator,
    MonotoneLinearOp, Point, ProblemSpec, Result, ScheduleSpec, SequenceRule, SpaceSpec,
    StoppingRule, Variant,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_solution: Option<Vec<f64>>,
    pub space1: SpaceConfig,
    pub space2: SpaceConfig,
    pub operator: OperatorConfig,
    pub map_t: MapConfig,
    pub map_s: MapConfig,
    pub base_set: BoundsConfig,
    pub init: InitConfig,
    pub schedule: ScheduleConfig,
    pub stop: StopConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceConfig {
    pub dim: usize,
    pub p: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smoothness_const: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convexity_const: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorConfig {
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsConfig {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<Vec<f64>>,
    pub x1: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleConfig {
    pub gamma: String,
    pub alpha: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StopConfig {
    pub max_iter: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapConfig {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<Box<MapConfig>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<Box<MapConfig>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_fixed_point: Option<Vec<f64>>,
}

fn config_err(msg: String) -> Error {
    Error::InvalidValue(msg)
}

impl MapConfig {
    fn field_names_set(&self) -> Vec<&'static str> {
        let mut set = Vec::new();
        if self.factor.is_some() {
            set.push("factor");
        }
        if self.lower.is_some() {
            set.push("lower");
        }
        if self.upper.is_some() {
            set.push("upper");
        }
        if self.matrix.is_some() {
            set.push("matrix");
        }
        if self.shift.is_some() {
            set.push("shift");
        }
        if self.mu.is_some() {
            set.push("mu");
        }
        if self.r.is_some() {
            set.push("r");
        }
        if self.inner_tol.is_some() {
            set.push("inner_tol");
        }
        if self.outer.is_some() {
            set.push("outer");
        }
        if self.inner.is_some() {
            set.push("inner");
        }
        set
    }

    fn check_fields(&self, allowed: &[&str]) -> Result<()> {
        for name in self.field_names_set() {
            if !allowed.contains(&name) {
                return Err(config_err(format!(
                    "map kind \"{}\" does not use field \"{}\"",
                    self.kind, name
                )));
            }
        }
        Ok(())
    }

    fn require<T: Clone>(&self, field: Option<&T>, name: &str) -> Result<T> {
        field.cloned().ok_or_else(|| {
            config_err(format!("map kind \"{}\" requires field \"{}\"", self.kind, name))
        })
    }

    pub fn build(&self) -> Result<FixedPointMap> {
        let map = match self.kind.as_str() {
            "scaling" => {
                self.check_fields(&["factor"])?;
                scaling_map(self.require(self.factor.as_ref(), "factor")?)?
            }
            "metric_projection" => {
                self.check_fields(&["lower", "upper"])?;
                let lower = self.require(self.lower.as_ref(), "lower")?;
                let upper = self.require(self.upper.as_ref(), "upper")?;
                projection_map(BoxSet::new(lower, upper)?)?
            }
            "resolvent_linear" => {
                self.check_fields(&["matrix", "shift", "mu"])?;
                let op = MonotoneLinearOp::new(
                    self.require(self.matrix.as_ref(), "matrix")?,
                    self.require(self.shift.as_ref(), "shift")?,
                )?;
                resolvent_linear(op, self.require(self.mu.as_ref(), "mu")?)?
            }
            "equilibrium_resolvent" => {
                self.check_fields(&["matrix", "shift", "lower", "upper", "r", "inner_tol"])?;
                let op = MonotoneLinearOp::new(
                    self.require(self.matrix.as_ref(), "matrix")?,
                    self.require(self.shift.as_ref(), "shift")?,
                )?;
                let set = BoxSet::new(
                    self.require(self.lower.as_ref(), "lower")?,
                    self.require(self.upper.as_ref(), "upper")?,
                )?;
                let r = self.require(self.r.as_ref(), "r")?;
                match self.inner_tol {
                    Some(tol) => equilibrium_resolvent_with_tol(op, set, r, tol)?,
                    None => equilibrium_resolvent(op, set, r)?,
                }
            }
            "composed" => {
                self.check_fields(&["outer", "inner"])?;
                let outer = self.require(self.outer.as_deref(), "outer")?;
                let inner = self.require(self.inner.as_deref(), "inner")?;
                composed(outer.build()?, inner.build()?)
            }
            other => {
                return Err(config_err(format!(
                    "unknown map kind \"{other}\"; expected scaling, metric_projection, \
                     resolvent_linear, equilibrium_resolvent, or composed"
                )))
            }
        };
        match &self.known_fixed_point {
            Some(fp) => map.with_known_fixed_point(fp.clone()),
            None => Ok(map),
        }
    }
}

pub fn parse_rule(text: &str) -> Result<SequenceRule> {
    if let Some(body) = text.strip_prefix("const:") {
        let v: f64 = body
            .trim()
            .parse()
            .map_err(|_| config_err(format!("cannot parse constant rule \"{text}\"")))?;
        return Ok(SequenceRule::Const(v));
    }
    if let Some(body) = text.strip_prefix("rat:") {
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(config_err(format!(
                "rational rule \"{text}\" needs four comma-separated coefficients a,b,c,d"
            )));
        }
        let mut coeffs = [0.0; 4];
        for (slot, part) in coeffs.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| config_err(format!("cannot parse coefficient \"{part}\" in \"{text}\"")))?;
        }
        return Ok(SequenceRule::Rational { a: coeffs[0], b: coeffs[1], c: coeffs[2], d: coeffs[3] });
    }
    Err(config_err(format!(
        "schedule rule \"{text}\" must look like \"const:V\" or \"rat:A,B,C,D\" (meaning (A n + B)/(C n + D))"
    )))
}

pub fn parse_variant(text: &str) -> Result<Variant> {
    match text {
        "banach" => Ok(Variant::Banach),
        "hilbert" => Ok(Variant::Hilbert),
        "inclusion" => Ok(Variant::Inclusion),
        "equilibrium" => Ok(Variant::Equilibrium),
        "baseline" => Ok(Variant::Baseline),
        other => Err(config_err(format!(
            "unknown variant \"{other}\"; expected banach, hilbert, inclusion, equilibrium, or baseline"
        ))),
    }
}

fn build_space(cfg: &SpaceConfig) -> Result<SpaceSpec> {
    let mut space = SpaceSpec::new(cfg.dim, cfg.p)?;
    if let Some(c) = cfg.smoothness_const {
        space = space.with_smoothness_const(c)?;
    }
    if let Some(tau) = cfg.convexity_const {
        space = space.with_convexity_const(tau)?;
    }
    Ok(space)
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| config_err(format!("config parse error: {e}")))
    }

    #[cfg(test)]
    pub fn render(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn to_problem(&self) -> Result<ProblemSpec> {
        let variant = parse_variant(&self.variant)?;
        let space1 = build_space(&self.space1)?;
        let space2 = build_space(&self.space2)?;
        let operator = LinearOperator::new(self.operator.matrix.clone(), &space1, &space2)?;
        let base_set = BoxSet::new(self.base_set.lower.clone(), self.base_set.upper.clone())?;
        let x0 = match &self.init.x0 {
            Some(coords) => Some(Point::new(&space1, coords.clone())?),
            None => None,
        };
        let x1 = Point::new(&space1, self.init.x1.clone())?;
        let theta = match &self.schedule.theta {
            Some(text) => parse_rule(text)?,
            None => SequenceRule::Const(0.0),
        };
        let schedule = ScheduleSpec {
            gamma: parse_rule(&self.schedule.gamma)?,
            alpha: parse_rule(&self.schedule.alpha)?,
            theta,
        };
        let mut stop = StoppingRule::max_iter(self.stop.max_iter)?;
        if let Some(tol) = self.stop.step_tol {
            stop = stop.with_step_tol(tol)?;
        }
        if let Some(tol) = self.stop.residual_tol {
            stop = stop.with_residual_tol(tol)?;
        }
        let known_solution = match &self.known_solution {
            Some(coords) => Some(Point::new(&space1, coords.clone())?),
            None => None,
        };
        Ok(ProblemSpec {
            projection_tol: self
                .projection_tol
                .unwrap_or_else(|| ProblemSpec::default_projection_tol(&space1)),
            map_t: self.map_t.build()?,
            map_s: self.map_s.build()?,
            space1,
            space2,
            operator,
            base_set,
            x0,
            x1,
            schedule,
            stop,
            variant,
            known_solution,
        })
    }
}
