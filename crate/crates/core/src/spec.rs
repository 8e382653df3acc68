//! Monotone puzzle specifications and the solves-checker.
//!
//! A specification maps each removal set `S` of nails to hang or fall. A word
//! solves it when `w|S = 0` exactly at the fall sets. Threshold puzzles come in
//! two conventions: Demaine's `k`-of-`n` falls once `k` nails are gone,
//! Wästlund's hangs while `k` nails remain; they translate by `k <-> n-k+1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::word::{NailSet, Word, MAX_NAIL};

/// Largest universe for explicit tables and full-mode checks.
pub const MAX_TABLE_NAILS: u8 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Demaine,
    Wastlund,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Demaine => "demaine",
            Convention::Wastlund => "wastlund",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Hang,
    Fall,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Hang => "hang",
            Outcome::Fall => "fall",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combinator {
    And,
    Or,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every subset of the universe.
    Full,
    /// Only the minimal fall sets and maximal hang sets.
    Essential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    EmptyUniverse,
    UniverseTooLarge {
        n: u8,
        max: u8,
    },
    ThresholdOutOfRange {
        k: u32,
        n: u8,
        convention: Convention,
    },
    NotMonotone {
        at: NailSet,
    },
    HangsAtFullSet,
    UniverseMismatch {
        left: u8,
        right: u8,
    },
    SupportOutsideUniverse {
        support: NailSet,
        n: u8,
    },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::EmptyUniverse => f.write_str("a specification needs at least one nail"),
            SpecError::UniverseTooLarge { n, max } => {
                write!(f, "{n} nails exceeds the limit of {max} for this operation")
            }
            SpecError::ThresholdOutOfRange { k, n, convention } => {
                write!(
                    f,
                    "{k}-of-{n} is out of range in the {convention} convention"
                )
            }
            SpecError::NotMonotone { at } => {
                write!(
                    f,
                    "specification is not monotone: falls at {at} but hangs above it"
                )
            }
            SpecError::HangsAtFullSet => {
                f.write_str("specification hangs with every nail removed; no wire realizes it")
            }
            SpecError::UniverseMismatch { left, right } => {
                write!(f, "universes differ: {left} vs {right} nails")
            }
            SpecError::SupportOutsideUniverse { support, n } => {
                write!(f, "word uses nails {support}, outside 1..={n}")
            }
        }
    }
}

impl core::error::Error for SpecError {}

/// Translates a threshold between conventions: `k -> n - k + 1`.
///
/// Demaine thresholds live in `0..=n` (0 falls everywhere), Wästlund
/// thresholds in `1..=n+1`.
pub fn translate(k: u32, n: u8, from: Convention) -> Result<u32, SpecError> {
    let n32 = n as u32;
    let ok = match from {
        Convention::Demaine => k <= n32,
        Convention::Wastlund => (1..=n32 + 1).contains(&k),
    };
    if !ok {
        return Err(SpecError::ThresholdOutOfRange {
            k,
            n,
            convention: from,
        });
    }
    Ok(n32 + 1 - k)
}

/// Explicit fall table, one bit per removal set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FallTable {
    bits: Vec<u64>,
}

impl FallTable {
    fn new(n: u8) -> FallTable {
        let size = 1usize << n;
        FallTable {
            bits: vec![0; size.div_ceil(64)],
        }
    }

    #[inline]
    fn get(&self, s: u64) -> bool {
        self.bits[(s >> 6) as usize] >> (s & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, s: u64) {
        self.bits[(s >> 6) as usize] |= 1 << (s & 63);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpecKind {
    Threshold { k: u8, convention: Convention },
    Table(FallTable),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spec {
    n: u8,
    kind: SpecKind,
}

/// The removals whose outcome implies every other by monotonicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialRemovals {
    pub must_fall: Vec<NailSet>,
    pub must_hang: Vec<NailSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Counterexample {
        removed: NailSet,
        expected: Outcome,
        got: Word,
    },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Ok => f.write_str("ok"),
            Verdict::Counterexample {
                removed,
                expected,
                got,
            } => write!(
                f,
                "counterexample: removing {removed} should {expected} but leaves {got}"
            ),
        }
    }
}

impl Spec {
    /// Demaine `k`-of-`n`: falls iff at least `k` nails are removed.
    pub fn threshold(k: u32, n: u8) -> Result<Spec, SpecError> {
        Spec::threshold_with(k, n, Convention::Demaine)
    }

    /// Wästlund `k`-of-`n`: hangs iff at least `k` nails remain.
    pub fn wastlund(k: u32, n: u8) -> Result<Spec, SpecError> {
        Spec::threshold_with(k, n, Convention::Wastlund)
    }

    pub fn threshold_with(k: u32, n: u8, convention: Convention) -> Result<Spec, SpecError> {
        if n == 0 {
            return Err(SpecError::EmptyUniverse);
        }
        if n > MAX_NAIL {
            return Err(SpecError::UniverseTooLarge { n, max: MAX_NAIL });
        }
        translate(k, n, convention)?;
        Ok(Spec {
            n,
            kind: SpecKind::Threshold {
                k: k as u8,
                convention,
            },
        })
    }

    /// Builds a table spec from a predicate, validating monotonicity and the
    /// forced fall at the full set.
    pub fn from_fn<F: Fn(NailSet) -> bool>(n: u8, falls: F) -> Result<Spec, SpecError> {
        if n == 0 {
            return Err(SpecError::EmptyUniverse);
        }
        if n > MAX_TABLE_NAILS {
            return Err(SpecError::UniverseTooLarge {
                n,
                max: MAX_TABLE_NAILS,
            });
        }
        let mut table = FallTable::new(n);
        for s in 0..(1u64 << n) {
            if falls(NailSet::from_bits(s)) {
                table.set(s);
            }
        }
        let spec = Spec {
            n,
            kind: SpecKind::Table(table),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Falls iff at least `k` nails of `nails` are removed; other nails of the
    /// universe are irrelevant.
    pub fn threshold_on(k: u32, nails: NailSet, n: u8) -> Result<Spec, SpecError> {
        if !nails.is_subset(NailSet::universe(n.min(MAX_NAIL))) || k > nails.len() {
            return Err(SpecError::ThresholdOutOfRange {
                k,
                n,
                convention: Convention::Demaine,
            });
        }
        Spec::from_fn(n, |s| s.intersection(nails).len() >= k)
    }

    /// The specification a word solves: fall exactly where it vanishes.
    pub fn solved_by(word: &Word, n: u8) -> Result<Spec, SpecError> {
        let support = word.support();
        if !support.is_subset(NailSet::universe(n.min(MAX_NAIL))) {
            return Err(SpecError::SupportOutsideUniverse { support, n });
        }
        Spec::from_fn(n, |s| word.vanishes_under(s))
    }

    #[inline]
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn kind(&self) -> &SpecKind {
        &self.kind
    }

    pub fn universe(&self) -> NailSet {
        NailSet::universe(self.n)
    }

    /// Demaine-convention threshold, for threshold kinds.
    pub fn demaine_k(&self) -> Option<u32> {
        match self.kind {
            SpecKind::Threshold {
                k,
                convention: Convention::Demaine,
            } => Some(k as u32),
            SpecKind::Threshold {
                k,
                convention: Convention::Wastlund,
            } => Some(self.n as u32 + 1 - k as u32),
            SpecKind::Table(_) => None,
        }
    }

    #[inline]
    pub fn falls(&self, removed: NailSet) -> bool {
        debug_assert!(removed.is_subset(self.universe()));
        match &self.kind {
            SpecKind::Table(t) => t.get(removed.bits()),
            SpecKind::Threshold { .. } => removed.len() >= self.demaine_k().unwrap_or(0),
        }
    }

    pub fn outcome(&self, removed: NailSet) -> Outcome {
        if self.falls(removed) {
            Outcome::Fall
        } else {
            Outcome::Hang
        }
    }

    fn validate(&self) -> Result<(), SpecError> {
        if !self.falls(self.universe()) {
            return Err(SpecError::HangsAtFullSet);
        }
        if let Some(at) = self.monotonicity_violation() {
            return Err(SpecError::NotMonotone { at });
        }
        Ok(())
    }

    pub fn is_monotone(&self) -> bool {
        self.monotonicity_violation().is_none()
    }

    fn monotonicity_violation(&self) -> Option<NailSet> {
        let SpecKind::Table(table) = &self.kind else {
            return None;
        };
        let full = self.universe().bits();
        for s in 0..=full {
            if !table.get(s) {
                continue;
            }
            let mut free = full & !s;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                free &= free - 1;
                if !table.get(s | bit) {
                    return Some(NailSet::from_bits(s));
                }
            }
        }
        None
    }

    /// Materializes any spec as a table (`n <= 20`).
    pub fn to_table(&self) -> Result<Spec, SpecError> {
        match self.kind {
            SpecKind::Table(_) => Ok(self.clone()),
            SpecKind::Threshold { .. } => Spec::from_fn(self.n, |s| self.falls(s)),
        }
    }

    pub fn essential_removals(&self) -> EssentialRemovals {
        match &self.kind {
            SpecKind::Threshold { .. } => {
                let k = self.demaine_k().unwrap_or(0);
                if k == 0 {
                    return EssentialRemovals {
                        must_fall: vec![NailSet::EMPTY],
                        must_hang: vec![],
                    };
                }
                EssentialRemovals {
                    must_fall: subsets_of_size(self.n, k).collect(),
                    must_hang: subsets_of_size(self.n, k - 1).collect(),
                }
            }
            SpecKind::Table(table) => {
                let full = self.universe().bits();
                let mut must_fall = Vec::new();
                let mut must_hang = Vec::new();
                for s in subsets_by_size(self.n) {
                    let b = s.bits();
                    if table.get(b) {
                        if each_bit(b).all(|bit| !table.get(b & !bit)) {
                            must_fall.push(s);
                        }
                    } else if each_bit(full & !b).all(|bit| table.get(b | bit)) {
                        must_hang.push(s);
                    }
                }
                EssentialRemovals {
                    must_fall,
                    must_hang,
                }
            }
        }
    }

    /// Checks `w|S = 0 <=> f(S) = fall`. Reports the first failing removal in
    /// size-ascending, then numeric, order.
    pub fn check(&self, word: &Word, mode: CheckMode) -> Result<Verdict, SpecError> {
        let support = word.support();
        if !support.is_subset(self.universe()) {
            return Err(SpecError::SupportOutsideUniverse { support, n: self.n });
        }
        let probe = |s: NailSet| -> Option<Verdict> {
            let vanishes = word.vanishes_under(s);
            let falls = self.falls(s);
            (vanishes != falls).then(|| Verdict::Counterexample {
                removed: s,
                expected: if falls { Outcome::Fall } else { Outcome::Hang },
                got: word.restrict(s),
            })
        };
        match mode {
            CheckMode::Full => {
                if self.n > MAX_TABLE_NAILS {
                    return Err(SpecError::UniverseTooLarge {
                        n: self.n,
                        max: MAX_TABLE_NAILS,
                    });
                }
                Ok(subsets_by_size(self.n)
                    .find_map(probe)
                    .unwrap_or(Verdict::Ok))
            }
            CheckMode::Essential => {
                let e = self.essential_removals();
                let mut sets = e.must_fall;
                sets.extend(e.must_hang);
                sets.sort_by_key(|s| (s.len(), s.bits()));
                Ok(sets.into_iter().find_map(probe).unwrap_or(Verdict::Ok))
            }
        }
    }

    /// Pointwise `min` (and) or `max` (or) with `hang < fall`.
    pub fn combine(&self, other: &Spec, op: Combinator) -> Result<Spec, SpecError> {
        if self.n != other.n {
            return Err(SpecError::UniverseMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Spec::from_fn(self.n, |s| match op {
            Combinator::And => self.falls(s) && other.falls(s),
            Combinator::Or => self.falls(s) || other.falls(s),
        })
    }

    /// True iff the two specs disagree at some superset of `removed`.
    pub fn separates_above(&self, other: &Spec, removed: NailSet) -> Result<bool, SpecError> {
        if self.n != other.n {
            return Err(SpecError::UniverseMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.n > MAX_TABLE_NAILS {
            return Err(SpecError::UniverseTooLarge {
                n: self.n,
                max: MAX_TABLE_NAILS,
            });
        }
        let free = self.universe().bits() & !removed.bits();
        // Walk all submasks of `free`.
        let mut extra = free;
        loop {
            let s = NailSet::from_bits(removed.bits() | extra);
            if self.falls(s) != other.falls(s) {
                return Ok(true);
            }
            if extra == 0 {
                return Ok(false);
            }
            extra = (extra - 1) & free;
        }
    }
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpecKind::Threshold {
                k,
                convention: Convention::Demaine,
            } => {
                write!(f, "{k}-of-{}", self.n)
            }
            SpecKind::Threshold { k, convention } => write!(f, "{k}-of-{}@{convention}", self.n),
            SpecKind::Table(_) => write!(f, "table on {} nails", self.n),
        }
    }
}

impl FromStr for Convention {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "demaine" => Ok(Convention::Demaine),
            "wastlund" => Ok(Convention::Wastlund),
            _ => Err(SpecParseError::UnknownConvention),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecParseError {
    /// Not of the form `K-of-N` with an optional `@convention`.
    Syntax,
    UnknownConvention,
    Invalid(SpecError),
}

impl fmt::Display for SpecParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecParseError::Syntax => f.write_str("expected K-of-N[@demaine|@wastlund]"),
            SpecParseError::UnknownConvention => {
                f.write_str("convention must be demaine or wastlund")
            }
            SpecParseError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SpecParseError {}

/// Parses `K-of-N`, `K-of-N@demaine` or `K-of-N@wastlund`.
impl FromStr for Spec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (body, convention) = match s.trim().split_once('@') {
            Some((body, c)) => (body, c.parse()?),
            None => (s.trim(), Convention::Demaine),
        };
        let (k, n) = body.split_once("-of-").ok_or(SpecParseError::Syntax)?;
        let k: u32 = k.parse().map_err(|_| SpecParseError::Syntax)?;
        let n: u8 = n.parse().map_err(|_| SpecParseError::Syntax)?;
        Spec::threshold_with(k, n, convention).map_err(SpecParseError::Invalid)
    }
}

fn each_bit(mut bits: u64) -> impl Iterator<Item = u64> {
    core::iter::from_fn(move || {
        (bits != 0).then(|| {
            let b = bits & bits.wrapping_neg();
            bits &= bits - 1;
            b
        })
    })
}

/// All `size`-element subsets of `{1..n}` in increasing numeric order.
pub fn subsets_of_size(n: u8, size: u32) -> impl Iterator<Item = NailSet> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = (size <= n as u32).then(|| (1u128 << size) - 1);
    core::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(NailSet::from_bits(cur as u64))
    })
}

/// Every subset of `{1..n}`, size-ascending then numeric.
pub fn subsets_by_size(n: u8) -> impl Iterator<Item = NailSet> {
    (0..=n as u32).flat_map(move |size| subsets_of_size(n, size))
}
