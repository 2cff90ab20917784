//! Audit configuration: which theory of distributive justice the system is
//! supposed to follow, and the knobs shared by the justice and fairness
//! evaluations.

use serde::Serialize;

use crate::scalar::Real;

pub const DEFAULT_TAIL_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("sufficientarian threshold must be finite")]
    NonFiniteThreshold,
    #[error("maximin tail fraction must lie in (0, 1]")]
    InvalidTailFraction,
    #[error("equality tolerance must be non-negative and finite")]
    InvalidTolerance,
    #[error("leveling-up pattern requires a leveling-up threshold")]
    MissingLevelingUpThreshold,
}

/// The theory of distributive justice a distribution is audited against.
///
/// Egalitarianism and sufficientarianism are criterion-type theories: their
/// fulfillment is decidable from the actual distribution alone. Maximin is
/// optimization-type: it only yields a metric to compare candidate
/// distributions, never a standalone pass/fail criterion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TheorySpec<F> {
    Egalitarian,
    Sufficientarian { threshold: F },
    Maximin { tail_fraction: F },
}

impl<F: Real> TheorySpec<F> {
    pub fn egalitarian() -> Self {
        Self::Egalitarian
    }

    /// Every individual's utility must strictly exceed `threshold`.
    pub fn sufficientarian(threshold: F) -> Result<Self, ConfigError> {
        if !threshold.is_finite() {
            return Err(ConfigError::NonFiniteThreshold);
        }
        Ok(Self::Sufficientarian { threshold })
    }

    /// Judge distributions by the mean utility of the worst-off
    /// `tail_fraction` of individuals; `tail_fraction` must lie in (0, 1].
    pub fn maximin(tail_fraction: F) -> Result<Self, ConfigError> {
        if !(tail_fraction > F::zero() && tail_fraction <= F::one()) {
            return Err(ConfigError::InvalidTailFraction);
        }
        Ok(Self::Maximin { tail_fraction })
    }

    /// Maximin with the default worst-off fraction of 5%.
    pub fn maximin_default() -> Self {
        Self::Maximin {
            tail_fraction: F::from_f64(DEFAULT_TAIL_FRACTION).expect("0.05 fits any float"),
        }
    }

    /// True for theories whose fulfillment is checkable from the actual
    /// distribution alone.
    pub fn is_criterion_type(&self) -> bool {
        matches!(self, Self::Egalitarian | Self::Sufficientarian { .. })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::Egalitarian => "egalitarian",
            Self::Sufficientarian { .. } => "sufficientarian",
            Self::Maximin { .. } => "maximin",
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        match *self {
            Self::Egalitarian => Ok(()),
            Self::Sufficientarian { threshold } => Self::sufficientarian(threshold).map(|_| ()),
            Self::Maximin { tail_fraction } => Self::maximin(tail_fraction).map(|_| ()),
        }
    }
}

/// Which inequality statistic quantifies deviation from egalitarian justice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JusticeMetricChoice {
    Gini,
    Variance,
    RangeDifference,
    RangeRatio,
}

/// How per-group measures are collapsed into one disparity number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DisparityChoice {
    MaxGap,
    MaxRatio,
    Variance,
}

/// Which distributive pattern the structural-injustice check applies to the
/// per-group measures: equality across groups, or a per-group floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FairnessPattern {
    Egalitarian,
    LevelingUp,
}

/// Shared audit knobs.
///
/// `equality_tolerance` is the absolute tolerance under which two values (or
/// a max-gap disparity) count as "equal"; it gates both the egalitarian
/// justice criterion and the group fairness criterion. Fairness verdicts are
/// always max-gap based so that `criterion_holds` has one unambiguous
/// meaning; a differently configured `disparity_choice` is reported
/// alongside, never used for the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuditConfig<F> {
    pub equality_tolerance: F,
    pub justice_metric_choice: JusticeMetricChoice,
    pub disparity_choice: DisparityChoice,
    pub leveling_up_threshold: Option<F>,
    pub approximate_justice_threshold: Option<F>,
    /// Groups smaller than this trigger a report warning (1 disables).
    pub min_group_size: usize,
}

impl<F: Real> Default for AuditConfig<F> {
    fn default() -> Self {
        Self {
            equality_tolerance: F::zero(),
            justice_metric_choice: JusticeMetricChoice::Variance,
            disparity_choice: DisparityChoice::MaxGap,
            leveling_up_threshold: None,
            approximate_justice_threshold: None,
            min_group_size: 1,
        }
    }
}

impl<F: Real> AuditConfig<F> {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.equality_tolerance >= F::zero() && self.equality_tolerance.is_finite()) {
            return Err(ConfigError::InvalidTolerance);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sufficientarian_requires_finite_threshold() {
        assert!(TheorySpec::sufficientarian(10.0).is_ok());
        assert_eq!(
            TheorySpec::sufficientarian(f64::NAN).unwrap_err(),
            ConfigError::NonFiniteThreshold
        );
    }

    #[test]
    fn maximin_fraction_bounds() {
        assert!(TheorySpec::maximin(0.05).is_ok());
        assert!(TheorySpec::maximin(1.0).is_ok());
        assert_eq!(TheorySpec::maximin(0.0).unwrap_err(), ConfigError::InvalidTailFraction);
        assert_eq!(TheorySpec::maximin(1.5).unwrap_err(), ConfigError::InvalidTailFraction);
    }

    #[test]
    fn criterion_type_split() {
        assert!(TheorySpec::<f64>::egalitarian().is_criterion_type());
        assert!(TheorySpec::sufficientarian(0.0).unwrap().is_criterion_type());
        assert!(!TheorySpec::<f64>::maximin_default().is_criterion_type());
    }

    #[test]
    fn default_config_is_valid() {
        AuditConfig::<f64>::default().validate().unwrap();
        let bad = AuditConfig::<f64> {
            equality_tolerance: -1.0,
            ..AuditConfig::default()
        };
        assert_eq!(bad.validate().unwrap_err(), ConfigError::InvalidTolerance);
    }
}
