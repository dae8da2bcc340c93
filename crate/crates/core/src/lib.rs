//! Exact q-series arithmetic and a two-color partition laboratory.
//!
//! The crate is layered bottom-up:
//!
//! - [`series`]: truncated power series over arbitrary-precision integers.
//! - [`qengine`]: q-Pochhammer products, rational expansions, smallest-part
//!   sums and `2phi1`.
//! - [`special`]: third-order mock theta functions and theta series.
//! - [`partitions`]: two-color partition families, brute-force enumerators
//!   and their generating functions.
//! - [`registry`]: the catalog of identities and the verifier that compares
//!   independently computed sides coefficient by coefficient.

pub mod partitions;
pub mod qengine;
pub mod registry;
pub mod series;
pub mod special;

pub use series::{Comparison, Series, SeriesError};
