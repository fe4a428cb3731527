//! Independent checks: exact integer linear algebra, Laurent polynomials,
//! Fox calculus and exhaustive enumeration.

pub mod enumerate;
pub mod fox;
pub mod laurent;
pub mod matrix;

pub use fox::{abelianization, alexander_from_gauss, alexander_polynomial, Abelianization};
pub use laurent::LaurentPolynomial;
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
