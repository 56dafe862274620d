//! Exact arithmetic: scalars, Laurent polynomials, truncated series, matrices, normal forms
//! and symmetric-function decomposition.

pub mod matrix;
mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod snf;
pub mod symmetric;

use alloc::string::String;

pub use matrix::{IntMatrix, Matrix, QMatrix};
pub use poly::{var_cmp, LaurentPoly, Monomial, Poly, QPoly};
pub use ring::{eval_poly, EvalError, Integers, PolyRing, Ring};
pub use scalar::{binomial, binomial_q, binomial_usize, Scalar};
pub use series::TruncSeries;
pub use snf::{hermite_rows, integer_kernel, smith_normal_form, solve_integer, Smith};
pub use symmetric::{decompose_symmetric, elementary_symmetric, recompose, subsets, Block};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("not symmetric: the transposition ({0} {1}) changes the polynomial")]
    NotSymmetric(String, String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}
