//! Exact computations for the coordinate rings of cones over the classical
//! groups `O(n)`, `SO(2m)` and `Sp(2m)`.
//!
//! Two independent routes lead to the Hilbert series: summing squared
//! dimensions of irreducible representations ([`hilbert`]) and counting
//! standard monomials of a Groebner basis of the vanishing ideal
//! ([`groebner`]).

pub mod cone;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod partitions;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
