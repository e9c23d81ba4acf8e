//! Exact monodromy zeta functions of polynomial families `f + σ·g`.
//!
//! Local zeta functions of germ families are read off Newton diagrams and
//! glued together by integration with respect to the Euler characteristic
//! over a stratification of the zero set, affine part and part at infinity.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod germ;
pub mod localize;
pub mod newton;
pub mod poly;
pub mod zeta;

pub use error::{FixtureError, GermError, NewtonError, ParseError, PolyError, StrataError};
pub use poly::{format_poly, parse_poly, Exponent, GermFamily, Poly, Support};
pub use zeta::{format_zeta, parse_zeta, CycloProd};
