//! Picture-hanging puzzles as words in the free group on the nails.
//!
//! A wire wound around `n` nails is a reduced word in `F_n`; pulling a nail
//! sets its letters to zero, and the picture falls when the word collapses
//! to the empty word. This crate provides the word algebra ([`word`]),
//! monotone puzzle specifications and the solves-checker ([`spec`]), the
//! explicit construction families with exact length accounting
//! ([`construct`]), and symmetry-quotiented exhaustive search for minimal
//! solutions ([`search`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod construct;
pub mod search;
pub mod spec;
pub mod word;

pub use spec::{CheckMode, Convention, Outcome, Spec, SpecError, SpecParseError, Verdict};
pub use word::{Expr, Letter, Nail, NailSet, Word};
