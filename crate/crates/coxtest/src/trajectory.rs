//! Counting-process trajectories and samples of them.
//!
//! A [`Trajectory`] is one observed counting path on `[0, T]`, stored as its
//! sorted jump times. A [`TrajectorySet`] is a sample of `n >= 2` such paths
//! sharing one horizon; every statistic in this crate is a function of a
//! `TrajectorySet`.

use crate::error::{Error, Result};

/// One counting path: sorted event times on `(0, T]` plus the horizon `T`.
///
/// The counting process starts at zero, so events at exactly `t = 0` are
/// rejected. Duplicate times are kept and count as multiple jumps; callers
/// can detect them with [`Trajectory::has_tied_events`].
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    events: Vec<f64>,
    horizon: f64,
}

impl Trajectory {
    /// Builds a trajectory from event times (sorted here) and a horizon.
    pub fn new(mut events: Vec<f64>, horizon: f64) -> Result<Self> {
        if !horizon.is_finite() || horizon <= 0.0 {
            return Err(Error::InvalidTrajectory(format!(
                "horizon must be a positive real, got {horizon}"
            )));
        }
        if events.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidTrajectory("non-finite event time".into()));
        }
        events.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite times"));
        if let Some(&first) = events.first() {
            if first <= 0.0 {
                return Err(Error::InvalidTrajectory(format!(
                    "event time {first} is not strictly positive (counts start at 0)"
                )));
            }
        }
        if let Some(&last) = events.last() {
            if last > horizon {
                return Err(Error::InvalidTrajectory(format!(
                    "event time {last} exceeds the horizon {horizon}"
                )));
            }
        }
        Ok(Self { events, horizon })
    }

    /// Sorted event times.
    pub fn events(&self) -> &[f64] {
        &self.events
    }

    /// Observation horizon `T`.
    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Total number of events on `(0, T]`.
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// True when at least two events share one time (ties are kept, not merged).
    pub fn has_tied_events(&self) -> bool {
        self.events.windows(2).any(|w| w[0] == w[1])
    }

    /// `N_t`: number of events in `[0, t]`. Right-continuous, so a jump is
    /// included at its own time.
    pub fn count_at(&self, t: f64) -> Result<u64> {
        if !(0.0..=self.horizon).contains(&t) {
            return Err(Error::TimeOutOfRange {
                t,
                horizon: self.horizon,
            });
        }
        Ok(self.events.partition_point(|&e| e <= t) as u64)
    }
}

/// A sample of `n >= 2` trajectories observed over one common horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySet {
    trajectories: Vec<Trajectory>,
    horizon: f64,
}

impl TrajectorySet {
    /// Builds a sample, checking `n >= 2` and a common horizon.
    pub fn new(trajectories: Vec<Trajectory>) -> Result<Self> {
        if trajectories.len() < 2 {
            return Err(Error::InvalidSample(format!(
                "need at least 2 trajectories, got {}",
                trajectories.len()
            )));
        }
        let horizon = trajectories[0].horizon();
        if let Some(t) = trajectories.iter().find(|t| t.horizon() != horizon) {
            return Err(Error::InvalidSample(format!(
                "mismatched horizons: {} vs {}",
                horizon,
                t.horizon()
            )));
        }
        Ok(Self {
            trajectories,
            horizon,
        })
    }

    pub fn trajectories(&self) -> &[Trajectory] {
        &self.trajectories
    }

    /// Sample size `n`.
    pub fn len(&self) -> usize {
        self.trajectories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trajectories.is_empty()
    }

    /// Common horizon `T`.
    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Total event count across the sample.
    pub fn total_events(&self) -> usize {
        self.trajectories.iter().map(Trajectory::len).sum()
    }
}
