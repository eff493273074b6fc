//! Sparse polynomials over the rationals in the entries `x_{ij}` of a generic
//! matrix.

pub mod division;
pub mod monomial;
pub mod mpoly;
pub mod order;
pub mod text;

pub use division::{normal_form, s_polynomial};
pub use monomial::{monomials_of_degree, Monomial, VarGrid};
pub use mpoly::{q, MPoly, Scalar};
pub use order::{MonomialOrder, OrderKind};
pub use text::{format_monomial, format_poly, parse_poly};
