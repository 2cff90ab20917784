//! Group-level structural-injustice evaluation: per-group measures under
//! each theory, disparities across groups, the equality-pattern fairness
//! criterion, leveling-up floors, and the naive group translations of each
//! theory kept purely as contrast baselines.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::{DisparityChoice, TheorySpec};
use crate::metrics::{self, MetricError, UtilityVector};
use crate::population::GroupedPopulation;
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FairnessError {
    #[error("group `{0}` has no members")]
    EmptyGroup(String),
    #[error("ratio disparity is undefined for non-positive group measures")]
    NonPositiveValues,
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// One measure value per group, plus which theory the measure realizes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupMeasureTable<F> {
    pub measure_name: &'static str,
    pub per_group: BTreeMap<String, F>,
    pub basis_theory: TheorySpec<F>,
}

impl<F: Real> GroupMeasureTable<F> {
    pub fn values(&self) -> impl Iterator<Item = F> + '_ {
        self.per_group.values().copied()
    }
}

/// Verdict of the equality-pattern fairness criterion over one measure
/// table. The verdict is always max-gap based; `criterion_holds` is true
/// exactly when the largest between-group gap is within the equality
/// tolerance. The optional leveling-up map is a separate per-group floor
/// check attached when a floor is configured.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FairnessVerdict<F> {
    pub criterion_holds: bool,
    pub disparity_name: &'static str,
    pub disparity_value: F,
    pub pairwise_gaps: BTreeMap<String, F>,
    pub leveling_up: Option<BTreeMap<String, bool>>,
}

impl<F: Real> FairnessVerdict<F> {
    /// True when every group clears the leveling-up floor; `None` when no
    /// floor was configured.
    pub fn leveling_up_pass(&self) -> Option<bool> {
        self.leveling_up
            .as_ref()
            .map(|m| m.values().all(|&pass| pass))
    }
}

fn for_each_group<F: Real, T>(
    g: &GroupedPopulation<F>,
    mut f: impl FnMut(&str, &UtilityVector<F>) -> Result<T, FairnessError>,
) -> Result<BTreeMap<String, T>, FairnessError> {
    let mut out = BTreeMap::new();
    for (label, members) in g.iter() {
        if members.is_empty() {
            return Err(FairnessError::EmptyGroup(label.to_string()));
        }
        let v = UtilityVector::from_slice(members.utilities())?;
        out.insert(label.to_string(), f(label, &v)?);
    }
    Ok(out)
}

/// Expected utility per group: the measure behind the egalitarian fairness
/// criterion.
pub fn egalitarian_group_measures<F: Real>(
    g: &GroupedPopulation<F>,
) -> Result<GroupMeasureTable<F>, FairnessError> {
    Ok(GroupMeasureTable {
        measure_name: "group_mean",
        per_group: for_each_group(g, |_, v| Ok(metrics::mean(v)))?,
        basis_theory: TheorySpec::Egalitarian,
    })
}

/// Share of each group strictly above the threshold: the per-group mean of
/// the binarized utility `I(U > t)`.
pub fn sufficientarian_group_measures<F: Real>(
    g: &GroupedPopulation<F>,
    threshold: F,
) -> Result<GroupMeasureTable<F>, FairnessError> {
    Ok(GroupMeasureTable {
        measure_name: "group_share_above_threshold",
        per_group: for_each_group(g, |_, v| Ok(metrics::share_above(v, threshold)))?,
        basis_theory: TheorySpec::Sufficientarian { threshold },
    })
}

/// How likely each group's members are to land in the population-wide
/// worst-off set of size `ceil(q * n)`. Membership is selected on
/// `(utility, id)` ascending, so the set is unique even under utility ties.
pub fn maximin_membership_rates<F: Real>(
    g: &GroupedPopulation<F>,
    tail_fraction: F,
) -> Result<GroupMeasureTable<F>, FairnessError> {
    for (label, members) in g.iter() {
        if members.is_empty() {
            return Err(FairnessError::EmptyGroup(label.to_string()));
        }
    }
    let k = metrics::tail_size(tail_fraction, g.total_size())?;
    let mut all: Vec<(&str, &str, F)> = g.members().collect();
    all.sort_by(|a, b| {
        a.2.partial_cmp(&b.2)
            .expect("finite by construction")
            .then_with(|| a.1.cmp(b.1))
    });

    let mut counts: BTreeMap<&str, usize> = g.labels().map(|l| (l, 0)).collect();
    for (label, _, _) in &all[..k] {
        *counts.get_mut(label).expect("label from same partition") += 1;
    }

    let per_group = counts
        .into_iter()
        .map(|(label, count)| {
            let size = g.get(label).expect("label from same partition").len();
            let rate = F::from_usize(count).expect("count fits scalar")
                / F::from_usize(size).expect("size fits scalar");
            (label.to_string(), rate)
        })
        .collect();

    Ok(GroupMeasureTable {
        measure_name: "worst_set_membership_rate",
        per_group,
        basis_theory: TheorySpec::Maximin { tail_fraction },
    })
}

/// Mean utility of the worst-off `ceil(q * n_g)` members within each group,
/// computed per group independently.
pub fn maximin_group_tail_means<F: Real>(
    g: &GroupedPopulation<F>,
    tail_fraction: F,
) -> Result<GroupMeasureTable<F>, FairnessError> {
    Ok(GroupMeasureTable {
        measure_name: "group_tail_mean",
        per_group: for_each_group(g, |_, v| Ok(metrics::tail_mean(v, tail_fraction)?))?,
        basis_theory: TheorySpec::Maximin { tail_fraction },
    })
}

/// Collapses a measure table into one disparity number.
///
/// Callers must supply a table with at least one group; `MaxRatio` requires
/// strictly positive measures.
pub fn disparity<F: Real>(
    tbl: &GroupMeasureTable<F>,
    kind: DisparityChoice,
) -> Result<F, FairnessError> {
    assert!(!tbl.per_group.is_empty(), "measure table has no groups");
    let values: Vec<F> = tbl.values().collect();
    let v = UtilityVector::new(values).expect("non-empty and finite");
    match kind {
        DisparityChoice::MaxGap => Ok(metrics::range_difference(&v)),
        DisparityChoice::MaxRatio => {
            metrics::range_ratio(&v).map_err(|_| FairnessError::NonPositiveValues)
        }
        DisparityChoice::Variance => Ok(metrics::variance(&v)),
    }
}

/// Equality-pattern fairness criterion: holds when the max-gap disparity is
/// within `tol`. A single-group table holds vacuously. Pairwise gaps are
/// keyed `"a|b"` for every unordered label pair.
pub fn fairness_criterion<F: Real>(tbl: &GroupMeasureTable<F>, tol: F) -> FairnessVerdict<F> {
    let gap = disparity(tbl, DisparityChoice::MaxGap).expect("max gap is total");
    let entries: Vec<(&String, F)> = tbl.per_group.iter().map(|(l, &v)| (l, v)).collect();
    let mut pairwise_gaps = BTreeMap::new();
    for (i, (label_a, a)) in entries.iter().enumerate() {
        for (label_b, b) in &entries[i + 1..] {
            pairwise_gaps.insert(format!("{label_a}|{label_b}"), (*a - *b).abs());
        }
    }
    FairnessVerdict {
        criterion_holds: gap <= tol,
        disparity_name: "max_gap",
        disparity_value: gap,
        pairwise_gaps,
        leveling_up: None,
    }
}

/// Leveling-up floor: each group's measure must strictly exceed `t_lu`.
pub fn leveling_up_check<F: Real>(
    tbl: &GroupMeasureTable<F>,
    t_lu: F,
) -> BTreeMap<String, bool> {
    tbl.per_group
        .iter()
        .map(|(label, &value)| (label.clone(), value > t_lu))
        .collect()
}

/// Naive group translation of sufficientarianism ("every group's expected
/// utility is above the threshold"). Contrast baseline only; never feeds a
/// verdict or the selection constraint.
pub fn naive_sufficientarian_group_check<F: Real>(
    g: &GroupedPopulation<F>,
    threshold: F,
) -> Result<BTreeMap<String, bool>, FairnessError> {
    for_each_group(g, |_, v| Ok(metrics::mean(v) > threshold))
}

/// Naive group translation of maximin ("maximize the expected utility of
/// the worst-off group"): the group with the lowest mean utility, ties
/// resolved by label order. Contrast baseline only.
pub fn naive_maximin_objective<F: Real>(
    g: &GroupedPopulation<F>,
) -> Result<(String, F), FairnessError> {
    let means = egalitarian_group_measures(g)?;
    let mut worst: Option<(String, F)> = None;
    for (label, &value) in &means.per_group {
        let better = match &worst {
            Some((_, current)) => value < *current,
            None => true,
        };
        if better {
            worst = Some((label.clone(), value));
        }
    }
    Ok(worst.expect("grouped population has at least one group"))
}
