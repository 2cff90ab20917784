//! Scalar statistics over a utility vector: inequality measures, threshold
//! shares, and worst-off tail means. Everything downstream (justice
//! criteria, group fairness measures, candidate scoring) reduces to these.
//!
//! All functions are pure and deterministic: sums run in a fixed order, the
//! worst-off tail is selected from a stable ascending sort.

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("utility vector must be non-empty")]
    EmptyVector,
    #[error("utility vector contains a non-finite value")]
    NonFiniteValue,
    #[error("gini is undefined for negative values")]
    NegativeValues,
    #[error("gini is undefined when the mean is zero")]
    ZeroMean,
    #[error("range ratio is undefined when the minimum is not positive")]
    NonPositiveMinimum,
    #[error("tail fraction must lie in (0, 1]")]
    InvalidFraction,
}

/// A non-empty vector of finite utilities.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityVector<F> {
    values: Vec<F>,
}

impl<F: Real> UtilityVector<F> {
    pub fn new(values: Vec<F>) -> Result<Self, MetricError> {
        if values.is_empty() {
            return Err(MetricError::EmptyVector);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(MetricError::NonFiniteValue);
        }
        Ok(Self { values })
    }

    pub fn from_slice(values: &[F]) -> Result<Self, MetricError> {
        Self::new(values.to_vec())
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }
}

fn from_count<F: Real>(n: usize) -> F {
    F::from_usize(n).expect("count representable as scalar")
}

/// Arithmetic mean. Computed about the first element so that constant
/// vectors come out exactly equal to that constant.
pub fn mean<F: Real>(v: &UtilityVector<F>) -> F {
    mean_slice(v.values())
}

pub(crate) fn mean_slice<F: Real>(values: &[F]) -> F {
    debug_assert!(!values.is_empty());
    let base = values[0];
    let mut sum = F::zero();
    for &value in values {
        sum = sum + (value - base);
    }
    base + sum / from_count(values.len())
}

/// Population variance (divide by n).
pub fn variance<F: Real>(v: &UtilityVector<F>) -> F {
    let mu = mean(v);
    let mut sum = F::zero();
    for &value in v.values() {
        let d = value - mu;
        sum = sum + d * d;
    }
    sum / from_count(v.len())
}

/// Gini coefficient via the mean-absolute-difference form
/// `sum_ij |u_i - u_j| / (2 n^2 mu)`. Requires non-negative values and a
/// strictly positive mean; lies in [0, 1).
pub fn gini<F: Real>(v: &UtilityVector<F>) -> Result<F, MetricError> {
    if v.values().iter().any(|&u| u < F::zero()) {
        return Err(MetricError::NegativeValues);
    }
    let mu = mean(v);
    if !(mu > F::zero()) {
        return Err(MetricError::ZeroMean);
    }
    let values = v.values();
    let n = from_count::<F>(values.len());
    let mut abs_diff_sum = F::zero();
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            abs_diff_sum = abs_diff_sum + (a - b).abs();
        }
    }
    let two = F::one() + F::one();
    // i<j pairs counted once above; the double sum counts both orders.
    Ok(two * abs_diff_sum / (two * n * n * mu))
}

/// `max - min`, always non-negative.
pub fn range_difference<F: Real>(v: &UtilityVector<F>) -> F {
    let (min, max) = min_max(v.values());
    max - min
}

/// `max / min`; requires a strictly positive minimum.
pub fn range_ratio<F: Real>(v: &UtilityVector<F>) -> Result<F, MetricError> {
    let (min, max) = min_max(v.values());
    if !(min > F::zero()) {
        return Err(MetricError::NonPositiveMinimum);
    }
    Ok(max / min)
}

fn min_max<F: Real>(values: &[F]) -> (F, F) {
    let mut min = values[0];
    let mut max = values[0];
    for &value in &values[1..] {
        if value < min {
            min = value;
        }
        if value > max {
            max = value;
        }
    }
    (min, max)
}

/// Share of values strictly above `t`, in [0, 1].
pub fn share_above<F: Real>(v: &UtilityVector<F>, t: F) -> F {
    let count = v.values().iter().filter(|&&u| u > t).count();
    from_count::<F>(count) / from_count(v.len())
}

/// Size of the worst-off set for fraction `q` over `n` individuals:
/// `ceil(q * n)`, clamped to [1, n]. `q` must lie in (0, 1].
pub fn tail_size<F: Real>(q: F, n: usize) -> Result<usize, MetricError> {
    if !(q > F::zero() && q <= F::one()) {
        return Err(MetricError::InvalidFraction);
    }
    let k = (q * from_count::<F>(n))
        .ceil()
        .to_usize()
        .ok_or(MetricError::InvalidFraction)?;
    Ok(k.clamp(1, n))
}

/// Mean utility of the worst-off `ceil(q * n)` individuals. Equals the full
/// mean at `q = 1`. The selected set is deterministic (ascending value
/// order); ties at the boundary cannot change the mean.
pub fn tail_mean<F: Real>(v: &UtilityVector<F>, q: F) -> Result<F, MetricError> {
    let k = tail_size(q, v.len())?;
    let mut sorted = v.values().to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite by construction"));
    Ok(mean_slice(&sorted[..k]))
}
