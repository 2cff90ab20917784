//! Individual-level evaluation of a theory of distributive justice: the
//! exact criterion for criterion-type theories, the deviation metric for
//! every theory, and the thresholded approximate criterion.
//!
//! Nothing in this module looks at group labels; that separation is what
//! distinguishes the justice check from the structural-injustice check in
//! [`crate::fairness`].

use serde::Serialize;

use crate::config::{AuditConfig, JusticeMetricChoice, TheorySpec};
use crate::metrics::{self, MetricError, UtilityVector};
use crate::population::Population;
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JusticeError {
    #[error("maximin is optimization-type and admits no standalone criterion")]
    OptimizationTypeTheory,
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// Whether smaller or larger metric values mean better fulfillment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Minimize,
    Maximize,
}

/// A justice metric evaluation: which statistic, its value, and its
/// optimization direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JusticeMetric<F> {
    pub name: &'static str,
    pub value: F,
    pub direction: Direction,
}

/// The individual-level half of an audit.
///
/// `criterion_holds` is present exactly for criterion-type theories;
/// `approximate_holds` is present exactly when an approximate-justice
/// threshold was configured.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JusticeVerdict<F> {
    pub theory: TheorySpec<F>,
    pub criterion_holds: Option<bool>,
    pub metric_name: &'static str,
    pub metric_value: F,
    pub direction: Direction,
    pub approximate_holds: Option<bool>,
}

/// Checks perfect (up to `tol`) fulfillment of a criterion-type theory over
/// an already deservingness-filtered population.
///
/// Egalitarian: `max - min <= tol`. Sufficientarian: every utility strictly
/// above the threshold. Maximin has no counterfactual-free criterion and is
/// rejected.
pub fn check_justice_criterion<F: Real>(
    p: &Population<F>,
    theory: &TheorySpec<F>,
    tol: F,
) -> Result<bool, JusticeError> {
    let v = UtilityVector::new(p.utilities())?;
    match *theory {
        TheorySpec::Egalitarian => Ok(metrics::range_difference(&v) <= tol),
        TheorySpec::Sufficientarian { threshold } => {
            Ok(v.values().iter().all(|&u| u > threshold))
        }
        TheorySpec::Maximin { .. } => Err(JusticeError::OptimizationTypeTheory),
    }
}

/// Quantifies deviation from the theory's ideal distribution.
pub fn justice_metric<F: Real>(
    p: &Population<F>,
    theory: &TheorySpec<F>,
    cfg: &AuditConfig<F>,
) -> Result<JusticeMetric<F>, JusticeError> {
    let v = UtilityVector::new(p.utilities())?;
    let metric = match *theory {
        TheorySpec::Egalitarian => {
            let (name, value) = match cfg.justice_metric_choice {
                JusticeMetricChoice::Gini => ("gini", metrics::gini(&v)?),
                JusticeMetricChoice::Variance => ("variance", metrics::variance(&v)),
                JusticeMetricChoice::RangeDifference => {
                    ("range_difference", metrics::range_difference(&v))
                }
                JusticeMetricChoice::RangeRatio => ("range_ratio", metrics::range_ratio(&v)?),
            };
            JusticeMetric {
                name,
                value,
                direction: Direction::Minimize,
            }
        }
        TheorySpec::Sufficientarian { threshold } => JusticeMetric {
            name: "share_above_threshold",
            value: metrics::share_above(&v, threshold),
            direction: Direction::Maximize,
        },
        TheorySpec::Maximin { tail_fraction } => JusticeMetric {
            name: "tail_mean",
            value: metrics::tail_mean(&v, tail_fraction)?,
            direction: Direction::Maximize,
        },
    };
    Ok(metric)
}

/// Thresholds a metric into an approximate criterion. Comparisons are
/// strict: a value exactly at the threshold fails.
pub fn approximate_criterion<F: Real>(metric_value: F, direction: Direction, threshold: F) -> bool {
    match direction {
        Direction::Minimize => metric_value < threshold,
        Direction::Maximize => metric_value > threshold,
    }
}

/// Runs criterion, metric, and (if configured) approximate criterion for the
/// given theory over an already-filtered population.
pub fn evaluate_justice<F: Real>(
    p: &Population<F>,
    theory: &TheorySpec<F>,
    cfg: &AuditConfig<F>,
) -> Result<JusticeVerdict<F>, JusticeError> {
    let criterion_holds = if theory.is_criterion_type() {
        Some(check_justice_criterion(p, theory, cfg.equality_tolerance)?)
    } else {
        None
    };
    let metric = justice_metric(p, theory, cfg)?;
    let approximate_holds = cfg
        .approximate_justice_threshold
        .map(|t| approximate_criterion(metric.value, metric.direction, t));
    Ok(JusticeVerdict {
        theory: *theory,
        criterion_holds,
        metric_name: metric.name,
        metric_value: metric.value,
        direction: metric.direction,
        approximate_holds,
    })
}
