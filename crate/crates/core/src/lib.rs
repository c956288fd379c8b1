//! Exact spectral verification for power graphs of finite groups.
//!
//! The crate covers two families of groups: the cyclic group `Z_n` and the
//! non-abelian group
//!
//! ```text
//! G(k, p) = < s, r : r^(2^k p) = s^2 = e, s r s^-1 = r^(2^(k-1) p - 1) >
//! ```
//!
//! of order `2^(k+1) p` (`k >= 2`, `p` an odd prime). For these it builds the
//! true power graph, the block-matrix model graph in which `<r>` is a clique,
//! and compares both against closed-form characteristic polynomials, spectra,
//! Laplacian energy and spectral-radius bounds.
//!
//! Everything here is pure computation on `alloc` types; the `powspec` crate
//! adds file formats, reports and the command line.
//!
//! Module map:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`group`] | group specs, canonical elements, orders, cyclic subgroups, class partition |
//! | [`graph`] | power graphs, the block model, decomposition census, graph diffs |
//! | [`linalg`] | big-integer matrices and polynomials, exact determinants and characteristic polynomials |
//! | [`formulas`] | closed forms parameterised by `(k, p)` |
//! | [`spectra`] | Jacobi eigensolver, clustering, spectral radius, Laplacian energy |
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod formulas;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod primes;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{GroupElement, GroupSpec};
pub use linalg::{FactoredPolynomial, IntMatrix, IntPolynomial, MatrixKind};
