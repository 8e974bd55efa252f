//! Scalar abstraction for Hamiltonian coefficients and dense oracles.

use std::fmt::{Debug, Display};
use std::str::FromStr;

/// Real coefficient type of a Hamiltonian: `f32` or `f64`.
pub trait Coefficient:
    num_traits::Float + num_traits::FromPrimitive + FromStr + Display + Debug + Default + Send + Sync + 'static
{
    /// Magnitude below which an ingested term is discarded.
    fn drop_tolerance() -> Self {
        Self::from_f64(1e-10).unwrap()
    }

    fn to_f64_lossy(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Coefficient for f32 {}
impl Coefficient for f64 {}

/// Scalars the dense linear-algebra oracles can run on.
pub trait OracleScalar: Coefficient + nalgebra::RealField + Copy {}

impl OracleScalar for f32 {}
impl OracleScalar for f64 {}
