//! Exact big-integer linear algebra.
//!
//! Nothing in this module rounds: determinants use fraction-free Bareiss
//! elimination, characteristic polynomials come from exact evaluation and
//! interpolation (cross-checked by Faddeev–LeVerrier), and block identities
//! are checked over the rationals.

mod charpoly;
mod matrix;
mod poly;
mod rational;
mod schur;

pub use charpoly::{char_poly_exact, char_poly_faddeev_leverrier, char_poly_with_cap, DEFAULT_MATRIX_CAP};
pub use matrix::{det_exact, matrix_of, IntMatrix, MatrixKind};
pub use poly::{FactoredPolynomial, IntPolynomial};
pub use rational::RatMatrix;
pub use schur::{schur_charpoly_check, schur_determinant_check, SchurCheck};
