//! Scalar abstraction for utility values.

use std::fmt::{Debug, Display};

/// Floating-point scalar used for utilities and all derived statistics:
/// f32 or f64.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}
