//! Exact Jack polynomials, interpolation Jack polynomials and generalized
//! binomial coefficients over the rational-function field `Q(t)`, together
//! with a decision procedure for the cone of rational functions expressible
//! as ratios of nonnegative-coefficient polynomials and verification sweeps
//! for the associated positivity and monotonicity statements.

pub mod arith;
pub mod cli;
pub mod error;
pub mod interp;
pub mod linalg;
pub mod partitions;
pub mod positivity;
pub mod report;
pub mod symfunc;
pub mod tableaux;

pub use arith::{cone_member, ConeStatus, Extended, RatFun, Rational, TauPoly};
pub use error::{Error, Result};
pub use partitions::Partition;
