//! The two overdispersion test statistics and their asymptotic power.
//!
//! For a sample of counting paths the null "the process is Poisson" is
//! equivalent to its mean and variance functions being equal, so the tests
//! are built from the variance-minus-mean process `D = variance - mean`:
//!
//! ```text
//! S1 = sup_{t <= T} D(t)          (supremum statistic)
//! S2 = ∫_0^T D(t) dt              (integral statistic)
//! ```
//!
//! Standardized by `sqrt(n) / mean(T)` and `sqrt(n) / I`, they converge under
//! the null to `|N(0,2)|` and `N(0,4)`, which yields the rejection regions
//!
//! ```text
//! t1 = sqrt(n) S1 / mean(T) >= sqrt(2) q_{1-alpha/2}
//! t2 = sqrt(n) S2 / I       >= 2 q_{1-alpha}
//! ```
//!
//! and the matching p-values `2 (1 - Phi(t1 / sqrt(2)))` and
//! `1 - Phi(t2 / 2)`. Ties at the threshold reject.

use serde::Serialize;

use crate::empirical::EmpiricalCurves;
use crate::error::{Error, Result};
use crate::normal::{normal_cdf, normal_quantile};
use crate::trajectory::TrajectorySet;

/// Everything a test run produces: raw statistics, normalizers, standardized
/// statistics, p-values and level-alpha decisions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestReport {
    /// Supremum of variance - mean.
    pub s1: f64,
    /// Integral of variance - mean.
    pub s2: f64,
    /// Normalizer of the supremum statistic: empirical mean at the horizon.
    pub m_hat_t: f64,
    /// Normalizer of the integral statistic.
    pub i_hat: f64,
    /// `sqrt(n) * s1 / m_hat_t`.
    pub t1: f64,
    /// `sqrt(n) * s2 / i_hat`.
    pub t2: f64,
    /// p-value of the supremum test (folded-normal tail).
    pub p1: f64,
    /// p-value of the integral test (one-sided normal tail).
    pub p2: f64,
    /// Test level.
    pub alpha: f64,
    /// Decision of the supremum test at level alpha.
    pub reject1: bool,
    /// Decision of the integral test at level alpha.
    pub reject2: bool,
    /// Sample size.
    pub n: usize,
}

/// Runs both tests at level `alpha` on a sample.
///
/// Fails with [`Error::DegenerateSample`] when the normalizers vanish (no
/// events before the horizon), since the standardized statistics are then
/// undefined.
pub fn run_test(set: &TrajectorySet, alpha: f64) -> Result<TestReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "level must lie in (0, 1), got {alpha}"
        )));
    }
    let curves = EmpiricalCurves::from_set(set);
    report_from_curves(&curves, alpha)
}

/// Same as [`run_test`], reusing already computed curves.
pub fn report_from_curves(curves: &EmpiricalCurves, alpha: f64) -> Result<TestReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "level must lie in (0, 1), got {alpha}"
        )));
    }
    let n = curves.n;
    let s1 = curves.diff.sup();
    let s2 = curves.diff.integral();
    let m_hat_t = curves.mean_at_horizon();
    let i_hat = curves.i_hat();
    if m_hat_t == 0.0 || i_hat == 0.0 {
        return Err(Error::DegenerateSample(
            "the sample has no events before the horizon, normalizers vanish".into(),
        ));
    }
    let sqrt_n = (n as f64).sqrt();
    let t1 = sqrt_n * s1 / m_hat_t;
    let t2 = sqrt_n * s2 / i_hat;
    // limits |N(0,2)| and N(0,4); t1 >= 0 always, the clamp is unreachable
    // in exact arithmetic and kept for float safety
    let p1 = (2.0 * (1.0 - normal_cdf(t1 / std::f64::consts::SQRT_2))).clamp(0.0, 1.0);
    let p2 = 1.0 - normal_cdf(t2 / 2.0);
    let reject1 = t1 >= std::f64::consts::SQRT_2 * normal_quantile(1.0 - alpha / 2.0)?;
    let reject2 = t2 >= 2.0 * normal_quantile(1.0 - alpha)?;
    Ok(TestReport {
        s1,
        s2,
        m_hat_t,
        i_hat,
        t1,
        t2,
        p1,
        p2,
        alpha,
        reject1,
        reject2,
        n,
    })
}

/// Parameters of the constant-baseline local alternative: intensity
/// `lambda0 + d_n Z` with `var(Z) = w^2` and `sqrt(n) d_n^2 -> d`.
/// The whole drift enters the limiting power only through `x = d w^2 T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerParams {
    /// Constant baseline intensity, positive.
    pub lambda0: f64,
    /// Drift summary `x = d w^2 T`, non-negative.
    pub x: f64,
    /// Test level.
    pub alpha: f64,
}

impl PowerParams {
    pub fn new(lambda0: f64, x: f64, alpha: f64) -> Result<Self> {
        if !(lambda0 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "lambda0 must be positive, got {lambda0}"
            )));
        }
        if !(x >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "x must be non-negative, got {x}"
            )));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "level must lie in (0, 1), got {alpha}"
            )));
        }
        Ok(Self { lambda0, x, alpha })
    }

    /// From the raw local-alternative parameters: drift limit `d`, variance
    /// `w_sq` of the random level and horizon `T`.
    pub fn from_drift(lambda0: f64, d: f64, w_sq: f64, horizon: f64, alpha: f64) -> Result<Self> {
        Self::new(lambda0, d * w_sq * horizon, alpha)
    }
}

/// Limiting power of the supremum test under the local alternative: the
/// first-passage law of a drifted Brownian motion gives the closed form
///
/// ```text
/// g1(x) = exp(sqrt(2) x q / lambda0) (1 - Phi(q + x / (sqrt(2) lambda0)))
///         + 1 - Phi(q - x / (sqrt(2) lambda0)),   q = q_{1-alpha/2}.
/// ```
pub fn analytic_power_g1(p: PowerParams) -> f64 {
    let q = normal_quantile(1.0 - p.alpha / 2.0).expect("alpha validated");
    let shift = p.x / (std::f64::consts::SQRT_2 * p.lambda0);
    let exponent = std::f64::consts::SQRT_2 * p.x * q / p.lambda0;
    let upper = 1.0 - normal_cdf(q + shift);
    // the product stays finite: the Gaussian tail decays faster than the
    // exponential grows for every x
    let value = exponent.exp() * upper + 1.0 - normal_cdf(q - shift);
    value.clamp(0.0, 1.0)
}

/// Limiting power of the integral test under the local alternative:
/// `g2(x) = 1 - Phi(q_{1-alpha} - x / (sqrt(3) lambda0))`.
pub fn analytic_power_g2(p: PowerParams) -> f64 {
    let q = normal_quantile(1.0 - p.alpha).expect("alpha validated");
    1.0 - normal_cdf(q - p.x / (3.0f64.sqrt() * p.lambda0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trajectory::Trajectory;
    use proptest::prelude::*;

    fn fixture() -> TrajectorySet {
        TrajectorySet::new(vec![
            Trajectory::new(vec![0.2, 0.3], 1.0).unwrap(),
            Trajectory::new(vec![0.5], 1.0).unwrap(),
            Trajectory::new(vec![], 1.0).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn fixture_report() {
        // hand piecewise computation, cross-checked against 40-digit
        // arithmetic: s1 = 2/3, s2 = 2/15, m(T) = 1, I^2 = 14/75,
        // t1 = 2/sqrt(3), t2 = 2/sqrt(14)
        let report = run_test(&fixture(), 0.05).unwrap();
        assert!((report.s1 - 2.0 / 3.0).abs() < 1e-12);
        assert!((report.s2 - 2.0 / 15.0).abs() < 1e-12);
        assert!((report.m_hat_t - 1.0).abs() < 1e-12);
        assert!((report.i_hat - (14.0f64 / 75.0).sqrt()).abs() < 1e-12);
        assert!((report.t1 - 1.1547005383792515).abs() < 1e-12);
        assert!((report.t2 - 0.53452248382484877).abs() < 1e-12);
        assert!((report.p1 - 0.41421617824252512).abs() < 1e-10);
        assert!((report.p2 - 0.39463401306714063).abs() < 1e-10);
        assert!(!report.reject1);
        assert!(!report.reject2);
    }

    #[test]
    fn single_event_pair_is_never_rejected_below_half() {
        let set = TrajectorySet::new(vec![
            Trajectory::new(vec![0.5], 1.0).unwrap(),
            Trajectory::new(vec![], 1.0).unwrap(),
        ])
        .unwrap();
        for alpha in [0.01, 0.05, 0.2, 0.49] {
            let report = run_test(&set, alpha).unwrap();
            assert_eq!(report.s1, 0.0);
            assert_eq!(report.s2, 0.0);
            assert_eq!(report.p1, 1.0);
            assert_eq!(report.p2, 0.5);
            assert!(!report.reject1);
            assert!(!report.reject2);
        }
    }

    #[test]
    fn all_empty_sample_is_degenerate() {
        let set = TrajectorySet::new(vec![
            Trajectory::new(vec![], 1.0).unwrap(),
            Trajectory::new(vec![], 1.0).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            run_test(&set, 0.05),
            Err(Error::DegenerateSample(_))
        ));
    }

    #[test]
    fn alpha_outside_unit_interval_rejected() {
        assert!(run_test(&fixture(), 0.0).is_err());
        assert!(run_test(&fixture(), 1.0).is_err());
    }

    #[test]
    fn power_functions_equal_alpha_at_zero_drift() {
        for alpha in [0.05, 0.1] {
            let p = PowerParams::new(1.0, 0.0, alpha).unwrap();
            assert!((analytic_power_g1(p) - alpha).abs() < 1e-12);
            assert!((analytic_power_g2(p) - alpha).abs() < 1e-12);
        }
    }

    #[test]
    fn power_functions_match_reference_at_unit_drift() {
        // 40-digit reference: g1 = 0.166293493907, g2 = 0.142872299104
        let p = PowerParams::new(1.0, 1.0, 0.05).unwrap();
        assert!((analytic_power_g1(p) - 0.166293493907).abs() < 2e-3);
        assert!((analytic_power_g2(p) - 0.142872299104).abs() < 2e-3);
        // and much tighter, since both sides use high-accuracy Phi
        assert!((analytic_power_g1(p) - 0.166293493907).abs() < 1e-10);
        assert!((analytic_power_g2(p) - 0.142872299104).abs() < 1e-10);
    }

    #[test]
    fn power_saturates_for_large_drift() {
        let p = PowerParams::new(1.0, 50.0, 0.05).unwrap();
        assert!(analytic_power_g1(p) >= 0.999);
        assert!(analytic_power_g2(p) >= 0.999);
    }

    #[test]
    fn power_curves_are_monotone_and_continuous_on_grid() {
        for lambda0 in [0.5, 1.0, 2.0] {
            for alpha in [0.05, 0.1] {
                let mut prev = (alpha, alpha);
                let mut x = 0.0;
                while x <= 5.0 + 1e-9 {
                    let p = PowerParams::new(lambda0, x, alpha).unwrap();
                    let cur = (analytic_power_g1(p), analytic_power_g2(p));
                    assert!(cur.0 >= prev.0 - 1e-12, "g1 dipped at x={x}");
                    assert!(cur.1 >= prev.1 - 1e-12, "g2 dipped at x={x}");
                    // continuity: steps of 0.1 move the value by < 0.1
                    assert!((cur.0 - prev.0).abs() < 0.1);
                    assert!((cur.1 - prev.1).abs() < 0.1);
                    prev = cur;
                    x += 0.1;
                }
            }
        }
    }

    fn arb_set() -> impl Strategy<Value = TrajectorySet> {
        let traj = proptest::collection::vec(0.001f64..1.0, 0..10)
            .prop_map(|ev| Trajectory::new(ev, 1.0).unwrap());
        proptest::collection::vec(traj, 2..8)
            .prop_filter("need events", |ts| ts.iter().any(|t| !t.is_empty()))
            .prop_map(|ts| TrajectorySet::new(ts).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn decisions_cohere_with_p_values(set in arb_set(), alpha in 0.01f64..0.3) {
            let report = run_test(&set, alpha).unwrap();
            prop_assert_eq!(report.reject1, report.p1 <= alpha);
            prop_assert_eq!(report.reject2, report.p2 <= alpha);
        }

        #[test]
        fn s1_is_nonnegative_and_dominates_average(set in arb_set()) {
            let report = run_test(&set, 0.05).unwrap();
            prop_assert!(report.s1 >= 0.0);
            // sup of diff >= its average over [0, T]
            let horizon = set.horizon();
            prop_assert!(report.s1 >= report.s2 / horizon - 1e-12);
        }

        #[test]
        fn decisions_are_invariant_under_time_rescaling(set in arb_set(), scale in 0.05f64..20.0) {
            let report = run_test(&set, 0.05).unwrap();
            let rescaled = TrajectorySet::new(
                set.trajectories()
                    .iter()
                    .map(|t| {
                        Trajectory::new(
                            t.events().iter().map(|&e| e * scale).collect(),
                            t.horizon() * scale,
                        )
                        .unwrap()
                    })
                    .collect(),
            )
            .unwrap();
            let other = run_test(&rescaled, 0.05).unwrap();
            prop_assert!((report.t1 - other.t1).abs() < 1e-9);
            prop_assert!((report.t2 - other.t2).abs() < 1e-9);
            prop_assert_eq!(report.reject1, other.reject1);
            prop_assert_eq!(report.reject2, other.reject2);
        }
    }
}
