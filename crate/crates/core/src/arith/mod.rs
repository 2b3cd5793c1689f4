//! Exact arithmetic: coefficients, dense univariate polynomials, sparse
//! bivariate and trivariate polynomials, interpolation.

pub mod bipoly;
pub mod coeff;
pub mod interp;
pub mod poly;
pub mod univariate;

pub use bipoly::{BiPoly, TriPoly};
pub use coeff::{int_bitsize, rat_bitsize, Coeff, ExactDiv, FieldCoeff};
pub use interp::interpolate;
pub use poly::Poly;
pub use univariate::*;
