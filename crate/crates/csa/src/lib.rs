//! Exact arithmetic for central simple algebras over Q.
//!
//! The crate decides which monic polynomials arise as reduced characteristic
//! polynomials of elements of a central simple algebra, enumerates the
//! conjugacy classes sharing a given characteristic polynomial, and checks
//! both answers against explicit quaternion matrix computations. Everything
//! is exact: rationals, big integers, and residue rings, with no floating
//! point anywhere in the math.

pub mod brauer;
pub mod charpoly;
pub mod classes;
pub mod doc;
pub mod error;
pub mod factor;
pub mod intfactor;
pub mod intpoly;
pub mod parse;
pub mod poly;
pub mod quat;
pub mod rat;
pub mod splitting;
pub mod zmod;

pub use error::{Error, Result};
pub use factor::{factor_over_q, is_irreducible, Factorization};
pub use poly::RatPoly;
pub use rat::Rat;
