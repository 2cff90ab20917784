//! Population data model: individual records, deservingness filtering, and
//! the partition of a population into socio-demographic groups.
//!
//! All types are immutable after construction and safe to share across
//! threads. Record order is insertion order; every downstream computation
//! that needs a tie-break keys on `(utility, id)` ascending, so results are
//! deterministic for a given input.

use std::collections::BTreeMap;

use crate::scalar::Real;

/// Errors raised while building or transforming populations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PopulationError {
    #[error("duplicate record id `{0}`")]
    DuplicateId(String),
    #[error("record `{0}` has a non-finite utility")]
    NonFiniteUtility(String),
    #[error("no records supplied")]
    EmptyInput,
    #[error("no records remain after filtering for deservingness")]
    EmptyAfterFilter,
}

/// One individual: a unique id, a group label, the scalar utility the
/// decision-making system assigned to them, and whether they belong to the
/// equally-deserving set under audit (defaults to true).
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationRecord<F> {
    pub id: String,
    pub group: String,
    pub utility: F,
    pub deserving: bool,
}

impl<F: Real> PopulationRecord<F> {
    pub fn new(id: impl Into<String>, group: impl Into<String>, utility: F) -> Self {
        Self {
            id: id.into(),
            group: group.into(),
            utility,
            deserving: true,
        }
    }

    pub fn with_deserving(mut self, deserving: bool) -> Self {
        self.deserving = deserving;
        self
    }
}

impl<F: Real> From<(&str, &str, F)> for PopulationRecord<F> {
    fn from((id, group, utility): (&str, &str, F)) -> Self {
        Self::new(id, group, utility)
    }
}

impl<F: Real> From<(&str, &str, F, bool)> for PopulationRecord<F> {
    fn from((id, group, utility, deserving): (&str, &str, F, bool)) -> Self {
        Self::new(id, group, utility).with_deserving(deserving)
    }
}

impl<F: Real> From<(String, String, F)> for PopulationRecord<F> {
    fn from((id, group, utility): (String, String, F)) -> Self {
        Self::new(id, group, utility)
    }
}

impl<F: Real> From<(String, String, F, bool)> for PopulationRecord<F> {
    fn from((id, group, utility, deserving): (String, String, F, bool)) -> Self {
        Self::new(id, group, utility).with_deserving(deserving)
    }
}

/// An ordered, validated set of records. Non-empty by construction; ids are
/// unique and utilities finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<F> {
    records: Vec<PopulationRecord<F>>,
}

impl<F: Real> Population<F> {
    /// Validates and assembles a population: rejects duplicate ids,
    /// non-finite utilities, and empty input.
    pub fn build(records: Vec<PopulationRecord<F>>) -> Result<Self, PopulationError> {
        if records.is_empty() {
            return Err(PopulationError::EmptyInput);
        }
        let mut seen = std::collections::BTreeSet::new();
        for record in &records {
            if !record.utility.is_finite() {
                return Err(PopulationError::NonFiniteUtility(record.id.clone()));
            }
            if !seen.insert(record.id.as_str()) {
                return Err(PopulationError::DuplicateId(record.id.clone()));
            }
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[PopulationRecord<F>] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    /// Utilities in record order.
    pub fn utilities(&self) -> Vec<F> {
        self.records.iter().map(|r| r.utility).collect()
    }

    /// Retains exactly the records flagged deserving, preserving order.
    pub fn filter_deserving(&self) -> Result<Self, PopulationError> {
        let records: Vec<_> = self
            .records
            .iter()
            .filter(|r| r.deserving)
            .cloned()
            .collect();
        if records.is_empty() {
            return Err(PopulationError::EmptyAfterFilter);
        }
        Ok(Self { records })
    }

    /// Number of records excluded by [`filter_deserving`](Self::filter_deserving).
    pub fn undeserving_count(&self) -> usize {
        self.records.iter().filter(|r| !r.deserving).count()
    }

    /// Partitions the population by group label. Per-group member order is
    /// record order.
    pub fn group_view(&self) -> GroupedPopulation<F> {
        let mut groups: BTreeMap<String, GroupMembers<F>> = BTreeMap::new();
        for record in &self.records {
            let members = groups.entry(record.group.clone()).or_default();
            members.ids.push(record.id.clone());
            members.utilities.push(record.utility);
        }
        GroupedPopulation {
            groups,
            total_size: self.records.len(),
        }
    }
}

/// Convenience constructor from raw tuples `(id, group, utility)` or
/// `(id, group, utility, deserving)`.
pub fn build_population<F, R>(raw: impl IntoIterator<Item = R>) -> Result<Population<F>, PopulationError>
where
    F: Real,
    R: Into<PopulationRecord<F>>,
{
    Population::build(raw.into_iter().map(Into::into).collect())
}

/// Members of one group, in record order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GroupMembers<F> {
    ids: Vec<String>,
    utilities: Vec<F>,
}

impl<F: Real> GroupMembers<F> {
    pub fn len(&self) -> usize {
        self.utilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.utilities.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn utilities(&self) -> &[F] {
        &self.utilities
    }
}

/// A population partitioned by group label. Labels iterate in lexicographic
/// order; the concatenation of group member lists is a permutation of the
/// source records.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupedPopulation<F> {
    groups: BTreeMap<String, GroupMembers<F>>,
    total_size: usize,
}

impl<F: Real> GroupedPopulation<F> {
    pub fn total_size(&self) -> usize {
        self.total_size
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// Group labels in lexicographic order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.groups.keys().map(String::as_str)
    }

    pub fn get(&self, label: &str) -> Option<&GroupMembers<F>> {
        self.groups.get(label)
    }

    /// `(label, members)` pairs in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &GroupMembers<F>)> {
        self.groups.iter().map(|(l, m)| (l.as_str(), m))
    }

    /// All `(label, id, utility)` triples across groups.
    pub fn members(&self) -> impl Iterator<Item = (&str, &str, F)> + '_ {
        self.groups.iter().flat_map(|(label, members)| {
            members
                .ids
                .iter()
                .zip(&members.utilities)
                .map(move |(id, u)| (label.as_str(), id.as_str(), *u))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wage_distribution_1() -> Population<f64> {
        build_population(vec![
            ("Anna", "A", 10.0),
            ("Berta", "B", 20.0),
            ("Anton", "A", 30.0),
            ("Basti", "B", 40.0),
            ("Adriana", "A", 50.0),
            ("Barbara", "B", 60.0),
        ])
        .unwrap()
    }

    fn wage_distribution_2() -> Population<f64> {
        build_population(vec![
            ("Berta", "B", 10.0),
            ("Basti", "B", 20.0),
            ("Barbara", "B", 30.0),
            ("Anna", "A", 40.0),
            ("Anton", "A", 50.0),
            ("Adriana", "A", 60.0),
        ])
        .unwrap()
    }

    #[test]
    fn builds_from_tuples() {
        let p: Population<f64> = build_population(vec![("i1", "A", 10.0), ("i2", "B", 20.0)]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.records()[0].id, "i1");
        assert!(p.records()[0].deserving);
    }

    #[test]
    fn rejects_duplicate_ids() {
        let err = build_population::<f64, _>(vec![("i1", "A", 10.0), ("i1", "B", 20.0)]).unwrap_err();
        assert_eq!(err, PopulationError::DuplicateId("i1".into()));
    }

    #[test]
    fn rejects_non_finite_utilities() {
        let err = build_population::<f64, _>(vec![("i1", "A", f64::NAN)]).unwrap_err();
        assert_eq!(err, PopulationError::NonFiniteUtility("i1".into()));
        let err = build_population::<f64, _>(vec![("i1", "A", f64::INFINITY)]).unwrap_err();
        assert_eq!(err, PopulationError::NonFiniteUtility("i1".into()));
    }

    #[test]
    fn rejects_empty_input() {
        let err = Population::<f64>::build(vec![]).unwrap_err();
        assert_eq!(err, PopulationError::EmptyInput);
    }

    #[test]
    fn wage_population_has_expected_groups() {
        let p = wage_distribution_1();
        assert_eq!(p.len(), 6);
        let g = p.group_view();
        assert_eq!(g.group_count(), 2);
        assert_eq!(g.get("A").unwrap().utilities(), &[10.0, 30.0, 50.0]);
        assert_eq!(g.get("B").unwrap().utilities(), &[20.0, 40.0, 60.0]);
    }

    #[test]
    fn second_wage_distribution_groups() {
        let g = wage_distribution_2().group_view();
        assert_eq!(g.get("A").unwrap().utilities(), &[40.0, 50.0, 60.0]);
        assert_eq!(g.get("B").unwrap().utilities(), &[10.0, 20.0, 30.0]);
    }

    #[test]
    fn filter_keeps_all_when_all_deserving() {
        let p = wage_distribution_1();
        assert_eq!(p.filter_deserving().unwrap(), p);
    }

    #[test]
    fn filter_keeps_flagged_subset_in_order() {
        let p: Population<f64> = build_population(vec![
            ("s1", "g1", 3.0, true),
            ("s2", "g1", 4.0, false),
            ("s3", "g2", 2.0, true),
            ("s4", "g2", 1.0, false),
            ("s5", "g1", 3.0, true),
        ])
        .unwrap();
        let filtered = p.filter_deserving().unwrap();
        let ids: Vec<_> = filtered.records().iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["s1", "s3", "s5"]);
        assert_eq!(p.undeserving_count(), 2);
    }

    #[test]
    fn filter_errors_when_nothing_remains() {
        let p: Population<f64> = build_population(vec![("s1", "g1", 3.0, false)]).unwrap();
        assert_eq!(p.filter_deserving().unwrap_err(), PopulationError::EmptyAfterFilter);
    }

    #[test]
    fn single_group_view_is_degenerate_partition() {
        let p: Population<f64> = build_population(vec![("a", "only", 1.0), ("b", "only", 2.0)]).unwrap();
        let g = p.group_view();
        assert_eq!(g.group_count(), 1);
        assert_eq!(g.get("only").unwrap().utilities(), &[1.0, 2.0]);
        assert_eq!(g.total_size(), 2);
    }

    #[test]
    fn grouping_works_for_f32() {
        let p: Population<f32> = build_population(vec![("a", "A", 1.0f32), ("b", "B", 2.0f32)]).unwrap();
        assert_eq!(p.group_view().total_size(), 2);
    }
}
