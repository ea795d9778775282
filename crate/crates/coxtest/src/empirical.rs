//! Empirical mean and variance curves of a trajectory sample.
//!
//! For a sample `N^(1), ..., N^(n)` the curves are
//!
//! ```text
//! mean(t)     = (1/n) sum_i N_t^(i)
//! variance(t) = (1/(n-1)) sum_i (N_t^(i) - mean(t))^2
//! ```
//!
//! Counts only change at event times, so all three curves (mean, variance
//! and their difference) are step functions on the merged breakpoint set.
//! Count sums and sums of squares are accumulated in integer arithmetic and
//! divided out once per breakpoint, which makes the curves exact up to a
//! single rounding per stored value.

use crate::error::Result;
use crate::step::StepFunction;
use crate::trajectory::TrajectorySet;

/// The empirical mean, variance and variance-minus-mean curves of a sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCurves {
    /// Empirical mean, non-decreasing.
    pub mean: StepFunction,
    /// Empirical variance with the `(n - 1)` divisor, non-negative.
    pub variance: StepFunction,
    /// `variance - mean`, the process both test statistics are built from.
    pub diff: StepFunction,
    /// Sample size.
    pub n: usize,
    /// Common horizon.
    pub horizon: f64,
}

impl EmpiricalCurves {
    /// Computes all three curves on the merged breakpoint set.
    pub fn from_set(set: &TrajectorySet) -> Self {
        let n = set.len();
        let horizon = set.horizon();

        // (event time, trajectory index), globally sorted by time
        let mut events: Vec<(f64, u32)> = Vec::with_capacity(set.total_events());
        for (idx, traj) in set.trajectories().iter().enumerate() {
            events.extend(traj.events().iter().map(|&t| (t, idx as u32)));
        }
        events.sort_unstable_by(|a, b| a.0.partial_cmp(&b.0).expect("finite times"));

        let mut breakpoints = Vec::with_capacity(events.len() + 1);
        let mut mean_values = Vec::with_capacity(events.len() + 1);
        let mut var_values = Vec::with_capacity(events.len() + 1);
        let mut diff_values = Vec::with_capacity(events.len() + 1);

        // running per-trajectory counts plus their sum and sum of squares
        let mut counts = vec![0u64; n];
        let mut sum: u64 = 0; // sum_i N_i
        let mut sum_sq: u64 = 0; // sum_i N_i^2

        let nn = n as i128;
        let var_denom = (n * (n - 1)) as f64;
        let push_values =
            |sum: u64, sum_sq: u64, mv: &mut Vec<f64>, vv: &mut Vec<f64>, dv: &mut Vec<f64>| {
                // n * sum((N_i - mean)^2) = n * sum_sq - sum^2, exactly
                let var_num = nn * sum_sq as i128 - (sum as i128) * (sum as i128);
                let diff_num = var_num - (nn - 1) * sum as i128;
                mv.push(sum as f64 / n as f64);
                vv.push(var_num as f64 / var_denom);
                dv.push(diff_num as f64 / var_denom);
            };

        breakpoints.push(0.0);
        push_values(sum, sum_sq, &mut mean_values, &mut var_values, &mut diff_values);

        let mut i = 0;
        while i < events.len() {
            let t = events[i].0;
            // absorb every event at this exact time (ties within and across
            // trajectories collapse onto one breakpoint)
            while i < events.len() && events[i].0 == t {
                let traj = events[i].1 as usize;
                let c = counts[traj];
                sum += 1;
                sum_sq += 2 * c + 1;
                counts[traj] = c + 1;
                i += 1;
            }
            breakpoints.push(t);
            push_values(sum, sum_sq, &mut mean_values, &mut var_values, &mut diff_values);
        }

        let mean = StepFunction::new(breakpoints.clone(), mean_values, horizon)
            .expect("merged breakpoints are valid by construction");
        let variance = StepFunction::new(breakpoints.clone(), var_values, horizon)
            .expect("merged breakpoints are valid by construction");
        let diff = StepFunction::new(breakpoints, diff_values, horizon)
            .expect("merged breakpoints are valid by construction");

        Self {
            mean,
            variance,
            diff,
            n,
            horizon,
        }
    }

    /// The normalizer `I = sqrt(∫_0^T (T - t) mean(t)^2 dt)` of the integral
    /// statistic. Zero when the sample carries no (interior) events.
    pub fn i_hat(&self) -> f64 {
        self.mean.weighted_square_integral().sqrt()
    }

    /// `mean(T)`, the normalizer of the supremum statistic.
    pub fn mean_at_horizon(&self) -> f64 {
        self.mean.last_value()
    }
}

/// Convenience wrapper computing `I` directly from a sample.
pub fn i_hat(set: &TrajectorySet) -> Result<f64> {
    Ok(EmpiricalCurves::from_set(set).i_hat())
}
