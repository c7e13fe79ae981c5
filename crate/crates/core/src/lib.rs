//! Exact counting and enumeration of Schreier-type families.
//!
//! A Schreier set is a finite set of positive integers whose minimum is at
//! least its cardinality. This crate works with several relatives of that
//! condition: multiset versions where repeated elements count with
//! multiplicity, colored versions, power-law versions (`min > |S|^p`), and
//! integer compositions with a part bound tied to the number of parts.
//!
//! Each family comes in two independent routes: a brute-force enumerator
//! ([`enumerate`]) and a closed-form counter ([`closed_form`]). The
//! [`verify`] module cross-checks the two against the recurrence sequences
//! in [`sequences`] over parameter grids. All arithmetic is exact; counts
//! are arbitrary-precision naturals and there is no floating point anywhere.

pub mod closed_form;
mod error;
pub mod enumerate;
pub mod pascal;
pub mod sequences;
pub mod verify;

pub use error::Error;

/// Arbitrary-precision nonnegative count. Every counting operation in this
/// crate returns one of these; nothing saturates or wraps.
pub type BigCount = num_bigint::BigUint;
