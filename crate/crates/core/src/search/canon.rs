//! Canonical representatives under nail relabeling (S1), per-nail sign flips
//! (S2), reversal (S3) and cyclic rotation (S4).
//!
//! Letters compare as `+1 < -1 < +2 < -2 < ...`. A word is canonical when it
//! is the least S1+S2-normalized form among all rotations of itself and of
//! its reversal.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::word::MAX_NAIL;

/// Sort key of a signed letter: `+j -> 2j-2`, `-j -> 2j-1`.
#[inline]
pub(crate) fn code(l: i8) -> u8 {
    let a = l.unsigned_abs();
    if l > 0 {
        2 * a - 2
    } else {
        2 * a - 1
    }
}

/// Incremental S1+S2 normalizer: relabels nails in order of first occurrence
/// and makes each first occurrence positive.
#[derive(Clone, Copy)]
pub(crate) struct Normalizer {
    label: [i8; MAX_NAIL as usize + 1],
    next: i8,
}

impl Normalizer {
    #[inline]
    pub(crate) fn new() -> Normalizer {
        Normalizer {
            label: [0; MAX_NAIL as usize + 1],
            next: 1,
        }
    }

    #[inline]
    pub(crate) fn map(&mut self, l: i8) -> i8 {
        let a = l.unsigned_abs() as usize;
        if self.label[a] == 0 {
            // first occurrence becomes +next
            self.label[a] = if l > 0 { self.next } else { -self.next };
            self.next += 1;
        }
        let m = self.label[a];
        if l > 0 {
            m
        } else {
            -m
        }
    }
}

pub(crate) fn normalize<I: IntoIterator<Item = i8>>(seq: I) -> Vec<i8> {
    let mut n = Normalizer::new();
    seq.into_iter().map(|l| n.map(l)).collect()
}

/// Iterates the `2L` candidate sequences of a cyclic word: every rotation,
/// then every rotation of the reversal.
fn candidate(w: &[i8], idx: usize) -> impl Iterator<Item = i8> + '_ {
    let len = w.len();
    let (reversed, start) = (idx >= len, idx % len);
    (0..len).map(move |t| {
        if reversed {
            w[(start + len - t) % len]
        } else {
            w[(start + t) % len]
        }
    })
}

fn compare_normalized<I: Iterator<Item = i8>>(seq: I, reference: &[i8]) -> Ordering {
    let mut n = Normalizer::new();
    for (l, &r) in seq.zip(reference) {
        let c = code(n.map(l)).cmp(&code(r));
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}

/// Least normalized candidate of a nonempty cyclically reduced word.
pub(crate) fn canonical_letters(w: &[i8]) -> Vec<i8> {
    debug_assert!(!w.is_empty());
    let mut best = normalize(w.iter().copied());
    for idx in 1..2 * w.len() {
        if compare_normalized(candidate(w, idx), &best) == Ordering::Less {
            best = normalize(candidate(w, idx));
        }
    }
    best
}

/// True iff `w` (already S1+S2-normalized) is the least of its candidates.
pub(crate) fn is_canonical(w: &[i8]) -> bool {
    (1..2 * w.len()).all(|idx| compare_normalized(candidate(w, idx), w) != Ordering::Less)
}
