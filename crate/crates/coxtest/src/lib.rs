//! Nonparametric tests for whether i.i.d. counting-process trajectories come
//! from a Poisson process, together with exact point-process simulators and a
//! Monte Carlo harness for level and power studies.
//!
//! The test compares the empirical mean and variance functions of the sample:
//! they coincide exactly when the process is Poisson, and the variance
//! dominates otherwise. Two statistics are offered, the supremum and the
//! integral of the variance-minus-mean process, both standardized to
//! parameter-free limit laws.
//!
//! # Layout
//!
//! - [`trajectory`]: counting paths and samples of them
//! - [`step`]: exact step-function arithmetic (the curves' carrier)
//! - [`empirical`]: empirical mean/variance curves and normalizers
//! - [`poisson_test`]: the two tests and their asymptotic power functions
//! - [`normal`]: standard normal CDF and quantile
//! - [`simulate`]: exact samplers for the null and alternative models
//! - [`ks`]: Kolmogorov-Smirnov distances used to validate limit laws
//! - [`mc`]: Monte Carlo level/power studies and the drifted-supremum oracle
//! - [`io`]: CSV ingestion, windowing and serialization

pub mod empirical;
pub mod error;
pub mod io;
pub mod ks;
pub mod mc;
pub mod normal;
pub mod poisson_test;
pub mod simulate;
pub mod step;
pub mod trajectory;

pub use empirical::{i_hat, EmpiricalCurves};
pub use error::{Error, Result};
pub use poisson_test::{analytic_power_g1, analytic_power_g2, run_test, PowerParams, TestReport};
pub use step::StepFunction;
pub use trajectory::{Trajectory, TrajectorySet};
