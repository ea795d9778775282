//! Right-continuous piecewise-constant functions on `[0, T]`.
//!
//! The empirical mean, variance and their difference are exactly of this
//! form, so suprema and integrals of them are computed exactly over the
//! breakpoint set. No evaluation grid is involved anywhere in production
//! paths; grids appear only as oracles in tests.

use crate::error::{Error, Result};

/// A step function: value `values[i]` on `[breakpoints[i], breakpoints[i+1])`
/// and `values[k]` on `[breakpoints[k], T]`, with `breakpoints[0] == 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
    horizon: f64,
}

impl StepFunction {
    /// Builds a step function, validating the breakpoint layout.
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>, horizon: f64) -> Result<Self> {
        if !horizon.is_finite() || horizon <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "horizon must be positive, got {horizon}"
            )));
        }
        if breakpoints.is_empty() || breakpoints.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "need matching non-empty breakpoints/values, got {}/{}",
                breakpoints.len(),
                values.len()
            )));
        }
        if breakpoints[0] != 0.0 {
            return Err(Error::InvalidParameter(format!(
                "first breakpoint must be 0, got {}",
                breakpoints[0]
            )));
        }
        if breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidParameter(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if *breakpoints.last().unwrap() > horizon {
            return Err(Error::InvalidParameter(format!(
                "last breakpoint {} exceeds horizon {horizon}",
                breakpoints.last().unwrap()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("non-finite value".into()));
        }
        Ok(Self {
            breakpoints,
            values,
            horizon,
        })
    }

    /// Constant function on `[0, T]`.
    pub fn constant(value: f64, horizon: f64) -> Result<Self> {
        Self::new(vec![0.0], vec![value], horizon)
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Value at `t` (right-continuous lookup).
    pub fn value_at(&self, t: f64) -> Result<f64> {
        if !(0.0..=self.horizon).contains(&t) {
            return Err(Error::TimeOutOfRange {
                t,
                horizon: self.horizon,
            });
        }
        let idx = self.breakpoints.partition_point(|&b| b <= t);
        Ok(self.values[idx - 1])
    }

    /// Value on the final segment, i.e. the value at `T`.
    pub fn last_value(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Exact supremum over `[0, T]`. Piecewise-constant and right-continuous,
    /// so the sup is attained on some piece.
    pub fn sup(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Exact `∫_0^T f(t) dt`.
    pub fn integral(&self) -> f64 {
        let mut total = 0.0;
        for (i, &c) in self.values.iter().enumerate() {
            let left = self.breakpoints[i];
            let right = self.breakpoints.get(i + 1).copied().unwrap_or(self.horizon);
            total += c * (right - left);
        }
        total
    }

    /// Exact `∫_0^T (T - t) f(t)^2 dt`, the squared normalizer of the
    /// integral statistic. On each piece the antiderivative of `(T - t)` is
    /// `-(T - t)^2 / 2`, hence the closed form below.
    pub fn weighted_square_integral(&self) -> f64 {
        let horizon = self.horizon;
        let mut total = 0.0;
        for (i, &c) in self.values.iter().enumerate() {
            let left = self.breakpoints[i];
            let right = self.breakpoints.get(i + 1).copied().unwrap_or(horizon);
            let a = horizon - left;
            let b = horizon - right;
            total += c * c * (a * a - b * b) * 0.5;
        }
        total
    }

    /// `a·f + b·g` on the merged breakpoint set of `f` and `g`.
    pub fn linear_combination(a: f64, f: &Self, b: f64, g: &Self) -> Result<Self> {
        if f.horizon != g.horizon {
            return Err(Error::InvalidParameter(format!(
                "mismatched horizons: {} vs {}",
                f.horizon, g.horizon
            )));
        }
        let mut breakpoints =
            Vec::with_capacity(f.breakpoints.len() + g.breakpoints.len());
        let mut values = Vec::with_capacity(breakpoints.capacity());
        let (mut i, mut j) = (0usize, 0usize);
        while i < f.breakpoints.len() || j < g.breakpoints.len() {
            let bi = f.breakpoints.get(i).copied().unwrap_or(f64::INFINITY);
            let bj = g.breakpoints.get(j).copied().unwrap_or(f64::INFINITY);
            let t = bi.min(bj);
            if bi == t {
                i += 1;
            }
            if bj == t {
                j += 1;
            }
            breakpoints.push(t);
            values.push(a * f.values[i - 1] + b * g.values[j - 1]);
        }
        Self::new(breakpoints, values, f.horizon)
    }
}
