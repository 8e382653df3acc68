//! Explicit solution families with exact length accounting.
//!
//! Every builder produces an [`Expr`] so that the unreduced symbol count (what
//! the length recurrences count) is kept alongside the reduced word. A
//! [`ConstructionReport`] bundles both with the solves-checker's verdict.

mod audit;
mod catalog;
mod corank2;
mod easy;
mod extension;
mod huffman;
mod lengths;
mod split;

use alloc::string::String;
use core::fmt;

use crate::spec::{CheckMode, Spec, SpecError, Verdict};
use crate::word::{Expr, Nail, Word};

pub use audit::{node_vanish_audit, Audit, Branch, NodeEvent, NodePath};
pub use catalog::{catalog, CATALOG_NAMES};
pub use corank2::{wastlund_corank2, wastlund_corank2_expr};
pub use easy::{balanced_k1, chain, chain_expr, chain_updown, chain_updown_expr};
pub use extension::{
    extend, extend_checked, extension_expr, extension_greedy, extension_ladder, LadderStep,
};
pub use huffman::{huffman_tree, tree_cost};
pub use lengths::{l2_closed_form, length_table, split_length, LengthRow};
pub use split::{demaine_split, demaine_split_expr, SplitPlan};

/// Largest nail count any builder materializes a word for.
pub const MAX_BUILD_NAILS: u8 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    ThresholdOutOfRange {
        k: u32,
        n: usize,
    },
    TooFewNails {
        needed: usize,
        got: usize,
    },
    TooManyNails {
        max: usize,
        got: usize,
    },
    NotPowerOfTwo(usize),
    EmptyHuffman,
    UnknownCatalogEntry(String),
    /// An input to `extend` does not solve the puzzle it is supposed to.
    BadInput {
        which: &'static str,
        verdict: Verdict,
    },
    Overflow,
    Spec(SpecError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::ThresholdOutOfRange { k, n } => {
                write!(f, "threshold {k} is out of range for {n} nails")
            }
            ConstructError::TooFewNails { needed, got } => {
                write!(f, "needs at least {needed} nails, got {got}")
            }
            ConstructError::TooManyNails { max, got } => {
                write!(f, "at most {max} nails supported, got {got}")
            }
            ConstructError::NotPowerOfTwo(n) => write!(f, "{n} nails is not a power of two"),
            ConstructError::EmptyHuffman => f.write_str("huffman tree needs at least one leaf"),
            ConstructError::UnknownCatalogEntry(name) => {
                write!(f, "no catalog entry named {name:?}")
            }
            ConstructError::BadInput { which, verdict } => write!(f, "input {which}: {verdict}"),
            ConstructError::Overflow => f.write_str("length does not fit in 128 bits"),
            ConstructError::Spec(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<SpecError> for ConstructError {
    fn from(e: SpecError) -> Self {
        ConstructError::Spec(e)
    }
}

/// A built solution: expression, reduced word, both lengths and the verdict
/// against the Demaine `k`-of-`n` puzzle it targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub method: String,
    pub k: u32,
    pub n: u8,
    pub expr: Expr,
    pub word: Word,
    pub unreduced: u64,
    pub reduced: u64,
    pub verdict: Verdict,
}

impl ConstructionReport {
    /// Flattens `expr` and checks it against Demaine `k`-of-`n`.
    pub fn build(
        method: &str,
        k: u32,
        n: u8,
        expr: Expr,
        mode: CheckMode,
    ) -> Result<ConstructionReport, ConstructError> {
        let flat = expr.flatten();
        let spec = Spec::threshold(k, n)?;
        let verdict = spec.check(&flat.word, mode)?;
        Ok(ConstructionReport {
            method: method.into(),
            k,
            n,
            unreduced: flat.symbol_count,
            reduced: flat.word.len() as u64,
            word: flat.word,
            expr,
            verdict,
        })
    }
}

/// Full check while it is cheap, essential removals beyond that.
pub fn default_check_mode(n: u8) -> CheckMode {
    if n <= 10 {
        CheckMode::Full
    } else {
        CheckMode::Essential
    }
}

/// `{1, ..., n}` as an ordered nail list.
pub fn nails(n: u8) -> alloc::vec::Vec<Nail> {
    (1..=n).filter_map(Nail::new).collect()
}
