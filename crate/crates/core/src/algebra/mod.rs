//! Exact arithmetic: rationals, sparse multivariate polynomials, truncated
//! power series and interpolation.

pub mod interp;
pub mod poly;
pub mod series;

pub use interp::{interpolate, q_factorial, q_pochhammer};
pub use poly::{rat, ratio, MultiPoly};
pub use series::{deformed_exp, TruncatedSeries};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;
