//! Exact construction and verification of Gauss-Appell polynomials.
//!
//! A Gauss-Appell polynomial composes an Appell sequence (Bernoulli, Euler,
//! Genocchi, Hermite, or a user-supplied generator `A(t)`) with the umbra of
//! the Gauss hypergeometric series. Everything is computed over exact
//! rationals:
//!
//! - [`series`]: truncated power series in the `t^k/k!` convention
//! - [`hypergeom`]: Pochhammer symbols and `2F1` coefficient streams
//! - [`appell`]: Appell families, their numbers and log-derivative coefficients
//! - [`gauss_appell`]: the polynomials by several independent constructions
//! - [`umbral`]: the formal umbral algebra and its operator identities

pub mod appell;
pub mod error;
pub mod gauss_appell;
pub mod hypergeom;
pub mod polynomial;
pub mod rational;
pub mod sampling;
pub mod series;
pub mod umbral;

pub use appell::{
    appell_numbers, beta_coefficients, builtin_family, AppellFamily, AppellNumbers,
    EulerConvention, FamilyName,
};
pub use error::{Error, Result};
pub use hypergeom::{
    gauss_2f1_series_in_t, gauss_coefficients, pochhammer, shift_params, GaussCoefficients,
    HypergeomParams,
};
pub use polynomial::{BivariatePolynomial, Polynomial};
pub use rational::Rational;
pub use series::PowerSeries;
