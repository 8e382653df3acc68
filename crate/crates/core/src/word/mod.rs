//! Free-group arithmetic on nail generators, in additive notation.
//!
//! A [`Word`] is a freely reduced sequence of signed nail labels: `1+2-1-2`
//! is the commutator of nails 1 and 2. Removing a nail from the wall is
//! [`Word::restrict`]: every letter on that nail is deleted and the rest is
//! reduced again.

mod expr;
mod text;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

pub use expr::{Expr, Flattened};
pub use text::{ParseError, ParseErrorKind};

/// Largest nail label a [`Word`] may mention.
pub const MAX_NAIL: u8 = 64;

/// A 1-based nail label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nail(u8);

impl Nail {
    pub fn new(index: u8) -> Option<Nail> {
        (1..=MAX_NAIL).contains(&index).then_some(Nail(index))
    }

    #[inline]
    pub fn index(self) -> u8 {
        self.0
    }

    #[inline]
    fn bit(self) -> u64 {
        1u64 << (self.0 - 1)
    }
}

impl fmt::Display for Nail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A nail with a winding direction. Stored as a signed byte: `+j` or `-j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter(i8);

impl Letter {
    #[inline]
    pub fn new(nail: Nail, positive: bool) -> Letter {
        let v = nail.0 as i8;
        Letter(if positive { v } else { -v })
    }

    #[inline]
    pub fn pos(nail: Nail) -> Letter {
        Letter::new(nail, true)
    }

    #[inline]
    pub fn neg(nail: Nail) -> Letter {
        Letter::new(nail, false)
    }

    /// Builds a letter from a nonzero signed label in `-64..=64`.
    pub fn from_signed(value: i64) -> Result<Letter, WordError> {
        if value == 0 {
            return Err(WordError::ZeroNail);
        }
        if value.unsigned_abs() > MAX_NAIL as u64 {
            return Err(WordError::NailOutOfRange(value));
        }
        Ok(Letter(value as i8))
    }

    #[inline]
    pub fn signed(self) -> i8 {
        self.0
    }

    #[inline]
    pub fn nail(self) -> Nail {
        Nail(self.0.unsigned_abs())
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of nails, bit `j-1` standing for nail `j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NailSet(u64);

impl NailSet {
    pub const EMPTY: NailSet = NailSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> NailSet {
        NailSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn universe(n: u8) -> NailSet {
        debug_assert!(n <= MAX_NAIL);
        if n >= 64 {
            NailSet(u64::MAX)
        } else {
            NailSet((1u64 << n) - 1)
        }
    }

    pub fn from_nails<I: IntoIterator<Item = Nail>>(nails: I) -> NailSet {
        nails.into_iter().fold(NailSet::EMPTY, |s, n| s.with(n))
    }

    /// Convenience for tests and literals; panics on labels outside `1..=64`.
    pub fn of(labels: &[u8]) -> NailSet {
        NailSet::from_nails(
            labels
                .iter()
                .map(|&l| Nail::new(l).expect("nail label in 1..=64")),
        )
    }

    #[inline]
    pub fn with(self, nail: Nail) -> NailSet {
        NailSet(self.0 | nail.bit())
    }

    #[inline]
    pub fn contains(self, nail: Nail) -> bool {
        self.0 & nail.bit() != 0
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: NailSet) -> NailSet {
        NailSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: NailSet) -> NailSet {
        NailSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: NailSet) -> NailSet {
        NailSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: NailSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Nail> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros();
            bits &= bits - 1;
            Some(Nail(t as u8 + 1))
        })
    }
}

impl fmt::Display for NailSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordError {
    ZeroNail,
    NailOutOfRange(i64),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::ZeroNail => f.write_str("0 is not a nail"),
            WordError::NailOutOfRange(v) => {
                write!(f, "nail {v} is outside 1..={MAX_NAIL}")
            }
        }
    }
}

impl core::error::Error for WordError {}

/// A freely reduced word: no letter is adjacent to its own inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

/// Support, net exponents and cyclic core of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub support: NailSet,
    pub net_exponent: BTreeMap<Nail, i64>,
    pub cyclic_reduced: Word,
}

impl Word {
    /// The zero expression.
    pub const fn empty() -> Word {
        Word(Vec::new())
    }

    /// Freely reduces an arbitrary letter sequence with a single stack pass.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Reduces a sequence of signed labels.
    pub fn from_signed(values: &[i64]) -> Result<Word, WordError> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_signed(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::reduce(letters))
    }

    /// Wraps letters already known to be reduced. Checked in debug builds.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        Word(letters)
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|l| l.0 as i64).collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Reverses the word and flips every sign: `-(x + y) = -y - x`.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self + other`, reduced at the junction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.reserve(other.len());
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// `[a, b] = a + b - a - b`.
    pub fn commutator(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(2 * (self.len() + other.len()));
        let forward = self.0.iter().chain(&other.0).copied();
        let backward = self
            .0
            .iter()
            .rev()
            .chain(other.0.iter().rev())
            .map(|l| l.inverse());
        for l in forward.chain(backward) {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Sets every nail in `removed` to zero and reduces.
    pub fn restrict(&self, removed: NailSet) -> Word {
        let mut out = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if !removed.contains(l.nail()) {
                push_reduced(&mut out, l);
            }
        }
        Word(out)
    }

    /// True iff removing `removed` reduces the word to zero. Allocation-free
    /// for words up to 256 letters.
    pub fn vanishes_under(&self, removed: NailSet) -> bool {
        if self.len() <= 256 {
            let mut stack = [0i8; 256];
            let mut top = 0usize;
            for &l in &self.0 {
                if removed.contains(l.nail()) {
                    continue;
                }
                if top > 0 && stack[top - 1] == -l.0 {
                    top -= 1;
                } else {
                    stack[top] = l.0;
                    top += 1;
                }
            }
            top == 0
        } else {
            self.restrict(removed).is_empty()
        }
    }

    pub fn support(&self) -> NailSet {
        self.0.iter().fold(NailSet::EMPTY, |s, l| s.with(l.nail()))
    }

    /// Strips conjugating pairs: the first and last letters of the result are
    /// never mutual inverses.
    pub fn cyclically_reduced(&self) -> Word {
        let s = &self.0;
        let (mut lo, mut hi) = (0usize, s.len());
        while hi - lo >= 2 && s[lo] == s[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(s[lo..hi].to_vec())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() < 2 || self.0[0] != self.0[self.len() - 1].inverse()
    }

    pub fn analyze(&self) -> Analysis {
        let mut net = BTreeMap::new();
        for &l in &self.0 {
            *net.entry(l.nail()).or_insert(0i64) += if l.is_positive() { 1 } else { -1 };
        }
        Analysis {
            support: self.support(),
            net_exponent: net,
            cyclic_reduced: self.cyclically_reduced(),
        }
    }
}

#[inline]
fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}
