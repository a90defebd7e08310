//! Exact scalars, sparse polynomials on the series side (`x` variables) and
//! the dual side (`y` variables), the contraction action between them, and
//! exact linear algebra over the rationals.

mod linalg;
mod monomial;
mod parse;
mod poly;
mod subspace;

pub use linalg::{rref, solve_linear, Matrix, Rref};
pub use monomial::{binomial, monomial_basis, monomials_of_degree, MultiIndex};
pub use parse::{parse_dual, parse_poly, parse_series, ParsedPoly};
pub use poly::{contract, pairing, Dual, DualPoly, JetElement, Poly, Series, SeriesPoly, Side};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar; always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}
