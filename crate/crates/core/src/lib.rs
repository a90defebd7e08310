//! Macaulay inverse systems for Artinian local algebras, with the structure
//! theory of Gorenstein algebras of socle degree three.
//!
//! * [`dualcore`]: exact scalars, polynomials, contraction, linear algebra.
//! * [`invsys`]: annihilators, perps, Hilbert functions, Gorenstein checks.
//! * [`socle3`]: canonical-grading witnesses and `{1,m,n,1}` normal forms.
//! * [`cubics`]: classification of binary and ternary cubic forms.

pub mod dualcore;
pub mod invsys;
pub mod socle3;
pub mod cubics;
pub mod random;
pub mod selftest;
pub mod error;

pub use error::{Error, ParseError, Result};
