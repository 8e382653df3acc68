//! Exhaustive search for minimal solutions, quotiented by symmetry.
//!
//! Two words are equivalent when one maps to the other by relabeling nails,
//! flipping the sign of a nail, reversing, or rotating. Each class has one
//! canonical representative (see [`canonical_form`]); the enumerator visits
//! only prefixes that can still extend to one.

mod canon;
mod enumerate;

use alloc::vec::Vec;
use core::fmt;

use crate::spec::{CheckMode, Spec};
use crate::word::{Letter, Word};

use canon::{canonical_letters, code};
use enumerate::Enumerator;

/// Largest universe the search accepts.
pub const MAX_SEARCH_NAILS: u8 = 6;
/// Longest word the search accepts.
pub const MAX_SEARCH_LEN: usize = 32;
/// Lengths at or above this need [`SearchConfig::allow_long`].
pub const LONG_RUN_LENGTH: usize = 14;

/// The canonical representative of a word's symmetry class.
///
/// Ordered by length, then letter by letter in `+1 < -1 < +2 < ...` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalWord {
    word: Word,
}

impl Ord for CanonicalWord {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        let key = |w: &Word| {
            w.letters()
                .iter()
                .map(|l| code(l.signed()))
                .collect::<Vec<_>>()
        };
        (self.word.len(), key(&self.word)).cmp(&(other.word.len(), key(&other.word)))
    }
}

impl PartialOrd for CanonicalWord {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl CanonicalWord {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Nails used; canonical words use exactly `1..=n`.
    pub fn n(&self) -> u8 {
        self.word.support().len() as u8
    }

    pub fn into_word(self) -> Word {
        self.word
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    ZeroWord,
    NotThreshold,
    ThresholdZero,
    TooManyNails { n: u8, max: u8 },
    LengthTooLarge { length: usize, max: usize },
    LongRunNotAllowed { length: usize },
    BadShard { shards: u32, shard_id: u32 },
    BudgetExceeded { nodes: u64, length: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::ZeroWord => f.write_str("the empty word has no canonical form"),
            SearchError::NotThreshold => f.write_str("search needs a k-of-n threshold puzzle"),
            SearchError::ThresholdZero => f.write_str("0-of-n is solved by the empty word"),
            SearchError::TooManyNails { n, max } => {
                write!(f, "search supports at most {max} nails, got {n}")
            }
            SearchError::LengthTooLarge { length, max } => {
                write!(f, "search supports lengths up to {max}, got {length}")
            }
            SearchError::LongRunNotAllowed { length } => {
                write!(f, "length {length} is a long run; enable it explicitly")
            }
            SearchError::BadShard { shards, shard_id } => {
                write!(f, "shard {shard_id} out of range for {shards} shards")
            }
            SearchError::BudgetExceeded { nodes, length } => {
                write!(
                    f,
                    "node budget exhausted after {nodes} nodes at length {length}"
                )
            }
        }
    }
}

impl core::error::Error for SearchError {}

/// Canonical representative of `w`'s class. The word is cyclically reduced
/// first, since rotation is one of the symmetries.
pub fn canonical_form(w: &Word) -> Result<CanonicalWord, SearchError> {
    let c = w.cyclically_reduced();
    if c.is_empty() {
        return Err(SearchError::ZeroWord);
    }
    let signed: Vec<i8> = c.letters().iter().map(|l| l.signed()).collect();
    Ok(CanonicalWord {
        word: from_letters(&canonical_letters(&signed)),
    })
}

/// Whether two nonzero words lie in the same symmetry class.
pub fn equivalent(a: &Word, b: &Word) -> Result<bool, SearchError> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn from_letters(ls: &[i8]) -> Word {
    Word::from_reduced(
        ls.iter()
            .map(|&l| Letter::from_signed(l as i64).expect("nonzero letter"))
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Abort once more nodes than this have been explored.
    pub node_budget: Option<u64>,
    /// Required for lengths of [`LONG_RUN_LENGTH`] and above.
    pub allow_long: bool,
    pub shards: u32,
    pub shard_id: u32,
    /// Depth at which prefixes are dealt out to shards.
    pub prefix_depth: usize,
    /// The progress callback fires every this many nodes.
    pub progress_every: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            allow_long: false,
            shards: 1,
            shard_id: 0,
            prefix_depth: 4,
            progress_every: 1_000_000_000,
        }
    }
}

impl SearchConfig {
    pub fn long() -> Self {
        SearchConfig {
            allow_long: true,
            ..Self::default()
        }
    }

    pub fn shard(self, shards: u32, shard_id: u32) -> Self {
        SearchConfig {
            shards,
            shard_id,
            ..self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub spec: Spec,
    pub length: usize,
    /// Sorted canonical solutions.
    pub solutions: Vec<CanonicalWord>,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    /// Combines per-shard outcomes of one search.
    pub fn merge(parts: Vec<SearchOutcome>) -> Option<SearchOutcome> {
        let mut it = parts.into_iter();
        let mut acc = it.next()?;
        for p in it {
            acc.nodes_explored += p.nodes_explored;
            acc.solutions.extend(p.solutions);
        }
        acc.solutions.sort();
        Some(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimum {
    Found(SearchOutcome),
    NotFound {
        max_length: usize,
        nodes_explored: u64,
    },
}

fn threshold(spec: &Spec) -> Result<(u8, u32), SearchError> {
    let k = spec.demaine_k().ok_or(SearchError::NotThreshold)?;
    if k == 0 {
        return Err(SearchError::ThresholdZero);
    }
    if spec.n() > MAX_SEARCH_NAILS {
        return Err(SearchError::TooManyNails {
            n: spec.n(),
            max: MAX_SEARCH_NAILS,
        });
    }
    Ok((spec.n(), k))
}

/// Shortest length worth searching: every nail appears, twice each unless
/// removing a single nail must already drop the picture.
pub fn min_admissible_length(n: u8, k: u32) -> usize {
    if k < n as u32 {
        2 * n as usize
    } else {
        n as usize
    }
}

/// Whether a solution of this length can exist at all. Below the top
/// threshold every net exponent is zero, so the length is even.
pub fn admissible_length(n: u8, k: u32, length: usize) -> bool {
    length >= min_admissible_length(n, k) && (k == n as u32 || length.is_multiple_of(2))
}

/// All canonical solutions of exactly `length` letters.
pub fn search_length(
    spec: &Spec,
    length: usize,
    cfg: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    search_length_with_progress(spec, length, cfg, &mut |_| {})
}

pub fn search_length_with_progress(
    spec: &Spec,
    length: usize,
    cfg: &SearchConfig,
    progress: &mut dyn FnMut(u64),
) -> Result<SearchOutcome, SearchError> {
    let (n, k) = threshold(spec)?;
    if length > MAX_SEARCH_LEN {
        return Err(SearchError::LengthTooLarge {
            length,
            max: MAX_SEARCH_LEN,
        });
    }
    if length >= LONG_RUN_LENGTH && !cfg.allow_long {
        return Err(SearchError::LongRunNotAllowed { length });
    }
    if cfg.shards == 0 || cfg.shard_id >= cfg.shards {
        return Err(SearchError::BadShard {
            shards: cfg.shards,
            shard_id: cfg.shard_id,
        });
    }
    let mut outcome = SearchOutcome {
        spec: spec.clone(),
        length,
        solutions: Vec::new(),
        nodes_explored: 0,
    };
    if !admissible_length(n, k, length) {
        return Ok(outcome);
    }
    let mut e = Enumerator::new(n, k, length, *cfg, progress);
    let run = e.run();
    outcome.nodes_explored = e.nodes;
    run?;
    for w in &e.found {
        let word = from_letters(w);
        assert!(
            spec.check(&word, CheckMode::Essential)
                .is_ok_and(|v| v.is_ok()),
            "search accepted a non-solution: {word}"
        );
        outcome.solutions.push(CanonicalWord { word });
    }
    outcome.solutions.sort();
    Ok(outcome)
}

/// Searches admissible lengths in increasing order up to `max_length` and
/// stops at the first that has solutions.
pub fn find_minimum(
    spec: &Spec,
    max_length: usize,
    cfg: &SearchConfig,
) -> Result<Minimum, SearchError> {
    let (n, k) = threshold(spec)?;
    let mut nodes = 0u64;
    for length in min_admissible_length(n, k)..=max_length {
        if !admissible_length(n, k, length) {
            continue;
        }
        let out = search_length(spec, length, cfg)?;
        nodes += out.nodes_explored;
        if !out.solutions.is_empty() {
            return Ok(Minimum::Found(SearchOutcome {
                nodes_explored: nodes,
                ..out
            }));
        }
    }
    Ok(Minimum::NotFound {
        max_length,
        nodes_explored: nodes,
    })
}

#[cfg(test)]
mod tests;
