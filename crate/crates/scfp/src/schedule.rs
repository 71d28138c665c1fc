//! Per-iteration parameter schedules and their feasible ranges.

use crate::error::{Error, Result};
use crate::space::{LinearOperator, SpaceSpec};

/// A scalar sequence indexed by the step counter n >= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SequenceRule {
    Const(f64),
    /// (a n + b) / (c n + d).
    Rational { a: f64, b: f64, c: f64, d: f64 },
}

impl SequenceRule {
    pub fn eval(&self, n: usize) -> f64 {
        match self {
            SequenceRule::Const(v) => *v,
            SequenceRule::Rational { a, b, c, d } => {
                let x = n as f64;
                (a * x + b) / (c * x + d)
            }
        }
    }
}

/// The three parameter sequences driving a run: the correction step gamma,
/// the averaging weight alpha, and the inertial weight theta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScheduleSpec {
    pub gamma: SequenceRule,
    pub alpha: SequenceRule,
    pub theta: SequenceRule,
}

impl ScheduleSpec {
    /// Evaluates and range-checks the schedules at one step: gamma must lie
    /// strictly inside (0, gamma_bound), alpha strictly inside (0, 1), and
    /// theta must be finite. Returns (gamma, alpha, theta).
    pub fn check_at(&self, n: usize, gamma_bound: f64) -> Result<(f64, f64, f64)> {
        let gamma = self.gamma.eval(n);
        if !gamma.is_finite() || gamma <= 0.0 || gamma >= gamma_bound {
            return Err(Error::ScheduleOutOfRange {
                n,
                detail: format!("gamma_{n} = {gamma} outside (0, {gamma_bound})"),
            });
        }
        let alpha = self.alpha.eval(n);
        if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
            return Err(Error::ScheduleOutOfRange {
                n,
                detail: format!("alpha_{n} = {alpha} outside (0, 1)"),
            });
        }
        let theta = self.theta.eval(n);
        if !theta.is_finite() {
            return Err(Error::ScheduleOutOfRange {
                n,
                detail: format!("theta_{n} = {theta} is not finite"),
            });
        }
        Ok((gamma, alpha, theta))
    }

    /// Range-checks every step up to `max_iter`.
    pub fn validate(&self, gamma_bound: f64, max_iter: usize) -> Result<()> {
        for n in 1..=max_iter {
            self.check_at(n, gamma_bound)?;
        }
        Ok(())
    }
}

/// Supremum of admissible correction steps, (q / (C_q ||A||^q))^(1/(q-1))
/// with q and C_q taken from the codomain space. Infinite when A = 0. For
/// p = 2 with C_2 = 1 this reduces to the familiar 2 / ||A||^2.
pub fn gamma_upper_bound(space2: &SpaceSpec, a: &LinearOperator) -> f64 {
    let norm = a.norm_upper_bound();
    if norm == 0.0 {
        return f64::INFINITY;
    }
    let q = space2.q();
    let cq = space2.smoothness_const();
    (q / (cq * norm.powf(q))).powf(1.0 / (q - 1.0))
}

/// The four benchmark schedules, numbered 1 through 4:
///
/// 1. gamma = 1, alpha = 1/7, theta = 1/5 (all constant);
/// 2. gamma = (2n+3)/(2n), alpha = 1/7, theta = 1/5;
/// 3. gamma = (2n+3)/(2n), alpha = n/(7n+5), theta = 1/5;
/// 4. gamma = (2n+3)/(2n), alpha = n/(7n+5), theta = (2n+1)/(10n+2).
pub fn schedule_case(id: u32) -> Result<ScheduleSpec> {
    let decaying_gamma = SequenceRule::Rational { a: 2.0, b: 3.0, c: 2.0, d: 0.0 };
    let seventh = SequenceRule::Rational { a: 0.0, b: 1.0, c: 0.0, d: 7.0 };
    let fifth = SequenceRule::Rational { a: 0.0, b: 1.0, c: 0.0, d: 5.0 };
    let growing_alpha = SequenceRule::Rational { a: 1.0, b: 0.0, c: 7.0, d: 5.0 };
    match id {
        1 => Ok(ScheduleSpec { gamma: SequenceRule::Const(1.0), alpha: seventh, theta: fifth }),
        2 => Ok(ScheduleSpec { gamma: decaying_gamma, alpha: seventh, theta: fifth }),
        3 => Ok(ScheduleSpec { gamma: decaying_gamma, alpha: growing_alpha, theta: fifth }),
        4 => Ok(ScheduleSpec {
            gamma: decaying_gamma,
            alpha: growing_alpha,
            theta: SequenceRule::Rational { a: 2.0, b: 1.0, c: 10.0, d: 2.0 },
        }),
        other => Err(Error::InvalidValue(format!("unknown schedule case {other}; valid ids are 1-4"))),
    }
}
