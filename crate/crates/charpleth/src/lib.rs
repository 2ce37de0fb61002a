//! Exact character-table arithmetic for finite groups: symmetric,
//! exterior and Schur-functor powers of characters, irreducibility and
//! Frobenius-Schur analysis, and the closed-form dimension inequalities
//! used to rule out candidate subgroups acting irreducibly on Sym^k.
//!
//! Everything is computed over exact cyclotomic arithmetic; no result in
//! this crate depends on floating point or on iteration order.

pub mod analysis;
pub mod bounds;
pub mod chartab;
pub mod error;
pub mod exactnum;
pub mod extraspecial;
pub mod fixtures;
pub mod plethysm;
pub mod suites;
pub mod tablegen;

pub(crate) mod par;

pub use error::{Error, Result};
pub use par::configure_threads;
