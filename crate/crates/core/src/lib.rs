//! Construction and exhaustive analysis of 2x2 sum-rank metric codes built
//! from elliptic function fields `y^2 = f(x)` over GF(q), q odd.
//!
//! Layering, bottom up: [`gf`] (finite fields), [`upoly`] (polynomials and
//! rational functions), [`series`] (truncated Laurent series), [`effield`]
//! (the function field, its places, valuations and Riemann-Roch spaces),
//! [`srcodes`] (operators, their matrices and the two code constructions)
//! and [`srmetric`] (weights, enumeration and bounds).

pub mod effield;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod series;
pub mod srcodes;
pub mod srmetric;
pub mod upoly;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{Fe, Field};
pub use upoly::{Poly, RationalFunction};
