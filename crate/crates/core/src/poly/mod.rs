//! Exact sparse polynomials in the Horowitz variables, polynomial self-maps,
//! Jacobians and symbolic determinants.

mod map;
mod matrix;
mod monomial;
mod polynomial;
mod text;

pub use map::PolyMap;
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
