//! Verification runs, reports and exports on top of [`powspec_core`].
//!
//! [`verify::run_verification`] runs every exact and numeric check for one
//! `(k, p)` and returns a [`report::VerificationReport`]; [`sweep`] does the
//! same over a grid in parallel; [`export`] writes graphs, spectra and
//! polynomials as DOT, JSON or CSV. The `powspec` binary wraps all of this.

pub mod anchors;
pub mod error;
pub mod export;
pub mod numfmt;
pub mod report;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use report::{Check, Construction, Status, VerificationReport};
pub use verify::{run_verification, VerifyConfig};

/// Environment variable overriding the matrix-order cap for exact checks.
pub const MATRIX_CAP_ENV: &str = "POWSPEC_MATRIX_CAP";
