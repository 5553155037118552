//! Exact construction and verification of twisted tensor products of
//! algebras, their two-sided (L-R) generalization, L-R-smash products over
//! bialgebras, iterated products and invariance under twisting by 2-cocycles.
//!
//! All arithmetic is exact (ℚ or GF(p)); every identity is checked on all
//! basis tuples and a failing check reports the lexicographically first
//! failing tuple.

pub mod algebra;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod exactfield;
pub mod hopf;
pub mod invariance;
pub mod io;
pub mod iterate;
pub mod report;
pub mod search;
pub mod twisted;

pub use error::{Error, Result};
