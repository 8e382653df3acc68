//! Depth-first enumeration of canonical, cyclically reduced words.
//!
//! Rules applied while extending a prefix:
//! - no letter next to its inverse, and the last letter is not the inverse of
//!   the first;
//! - nail `j+1` only after nail `j` (S1), first occurrence positive (S2);
//! - remaining-budget bounds: every nail must be used, and below the top
//!   threshold every net exponent must return to zero;
//! - for each must-fall removal, the prefix restricted to the surviving nails
//!   reduces to some `u`, and the suffix must cancel it, so `|u|` cannot
//!   exceed the letters left;
//! - a rotation or reversal whose normalized prefix is already smaller than
//!   the word's own prefix is smaller whatever follows, so the prefix cannot
//!   be canonical.
//!
//! Full rotation/reversal minimality and the must-hang removals are checked on
//! complete words.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::canon::{code, is_canonical};
use super::{SearchConfig, SearchError, MAX_SEARCH_LEN, MAX_SEARCH_NAILS};
use crate::spec::subsets_of_size;

const NAIL_SLOTS: usize = MAX_SEARCH_NAILS as usize + 1;
/// At most `C(6, 3)` must-fall removals.
const MAX_STACKS: usize = 32;

#[derive(Clone, Copy)]
struct SmallNorm {
    label: [i8; NAIL_SLOTS],
    next: i8,
}

impl SmallNorm {
    const NEW: SmallNorm = SmallNorm {
        label: [0; NAIL_SLOTS],
        next: 1,
    };

    #[inline]
    fn map(&mut self, l: i8) -> i8 {
        let a = l.unsigned_abs() as usize;
        if self.label[a] == 0 {
            self.label[a] = if l > 0 { self.next } else { -self.next };
            self.next += 1;
        }
        if l > 0 {
            self.label[a]
        } else {
            -self.label[a]
        }
    }
}

#[derive(Clone, Copy)]
struct Rotation {
    alive: bool,
    norm: SmallNorm,
}

pub(crate) struct Enumerator<'p> {
    n: usize,
    len: usize,
    zero_net: bool,
    buf: [i8; MAX_SEARCH_LEN],
    net: [i32; NAIL_SLOTS],
    used: usize,
    /// Surviving-nail masks of the must-fall removals.
    survivors: Vec<u64>,
    stacks: Vec<[i8; MAX_SEARCH_LEN]>,
    stack_len: Vec<u8>,
    must_hang: Vec<u64>,
    rotations: [Rotation; MAX_SEARCH_LEN],
    cfg: SearchConfig,
    prefix_depth: usize,
    prefix_counter: u64,
    pub(crate) nodes: u64,
    next_progress: u64,
    progress: &'p mut dyn FnMut(u64),
    pub(crate) found: Vec<Vec<i8>>,
}

impl<'p> Enumerator<'p> {
    pub(crate) fn new(
        n: u8,
        k: u32,
        len: usize,
        cfg: SearchConfig,
        progress: &'p mut dyn FnMut(u64),
    ) -> Enumerator<'p> {
        let full = (1u64 << n) - 1;
        let survivors: Vec<u64> = subsets_of_size(n, k)
            .map(|s| full & !s.bits())
            .filter(|&m| m != 0)
            .collect();
        let must_hang = subsets_of_size(n, k - 1).map(|s| s.bits()).collect();
        let count = survivors.len();
        assert!(count <= MAX_STACKS);
        Enumerator {
            n: n as usize,
            len,
            zero_net: k < n as u32,
            buf: [0; MAX_SEARCH_LEN],
            net: [0; NAIL_SLOTS],
            used: 0,
            survivors,
            stacks: vec![[0; MAX_SEARCH_LEN]; count],
            stack_len: vec![0; count],
            must_hang,
            rotations: [Rotation {
                alive: false,
                norm: SmallNorm::NEW,
            }; MAX_SEARCH_LEN],
            prefix_depth: cfg.prefix_depth.clamp(1, len),
            next_progress: cfg.progress_every,
            cfg,
            prefix_counter: 0,
            nodes: 0,
            progress,
            found: Vec::new(),
        }
    }

    pub(crate) fn run(&mut self) -> Result<(), SearchError> {
        self.extend(0)
    }

    /// Letters still needed to use every nail and, below the top threshold,
    /// to bring every net exponent back to zero.
    fn letters_needed(&self) -> usize {
        let unseen = self.n - self.used;
        if self.zero_net {
            let imbalance: u32 = self.net[1..=self.used]
                .iter()
                .map(|e| e.unsigned_abs())
                .sum();
            imbalance as usize + 2 * unseen
        } else {
            unseen
        }
    }

    fn extend(&mut self, t: usize) -> Result<(), SearchError> {
        let max_nail = (self.used + 1).min(self.n);
        for nail in 1..=max_nail {
            for sign in [1i8, -1] {
                if nail == self.used + 1 && sign < 0 {
                    continue; // S2
                }
                let x = sign * nail as i8;
                if t > 0 && self.buf[t - 1] == -x {
                    continue;
                }
                if t + 1 == self.len && self.buf[0] == -x {
                    continue;
                }
                self.place(t, x)?;
            }
        }
        Ok(())
    }

    fn place(&mut self, t: usize, x: i8) -> Result<(), SearchError> {
        let remaining = self.len - t - 1;
        let nail = x.unsigned_abs() as usize;
        let was_used = self.used;
        if nail > self.used {
            self.used = nail;
        }
        self.net[nail] += x.signum() as i32;
        self.buf[t] = x;

        let saved_rot = self.rotations;
        let saved_len: [u8; MAX_STACKS] = {
            let mut a = [0u8; MAX_STACKS];
            for (i, &l) in self.stack_len.iter().enumerate() {
                a[i] = l;
            }
            a
        };
        let ok = self.letters_needed() <= remaining
            && self.push_stacks(x, remaining)
            && self.rotations_ok(t, x)
            && self.reversal_ok(t);

        let mut result = Ok(());
        if ok {
            result = self.visit(t);
        }

        // undo
        self.rotations = saved_rot;
        for ((len, stack), &old) in self
            .stack_len
            .iter_mut()
            .zip(&mut self.stacks)
            .zip(&saved_len)
        {
            if *len < old {
                // a deeper push may have overwritten the popped slot
                stack[old as usize - 1] = -x;
            }
            *len = old;
        }
        self.net[nail] -= x.signum() as i32;
        self.used = was_used;
        result
    }

    fn visit(&mut self, t: usize) -> Result<(), SearchError> {
        let depth = t + 1;
        let owned = if depth < self.prefix_depth {
            self.cfg.shard_id == 0
        } else if depth == self.prefix_depth {
            let mine = self.prefix_counter % self.cfg.shards as u64 == self.cfg.shard_id as u64;
            self.prefix_counter += 1;
            if !mine {
                return Ok(());
            }
            true
        } else {
            true
        };
        if owned {
            self.nodes += 1;
            if let Some(budget) = self.cfg.node_budget {
                if self.nodes > budget {
                    return Err(SearchError::BudgetExceeded {
                        nodes: self.nodes,
                        length: self.len,
                    });
                }
            }
            if self.nodes >= self.next_progress {
                (self.progress)(self.nodes);
                self.next_progress = self.next_progress.saturating_add(self.cfg.progress_every);
            }
        }
        if depth == self.len {
            self.accept();
            Ok(())
        } else {
            self.extend(depth)
        }
    }

    /// Pushes `x` onto every restricted stack that keeps its nail, then checks
    /// that every stack can still be cancelled by the letters left.
    fn push_stacks(&mut self, x: i8, remaining: usize) -> bool {
        let bit = 1u64 << (x.unsigned_abs() - 1);
        let mut longest = 0;
        for i in 0..self.survivors.len() {
            if self.survivors[i] & bit != 0 {
                let l = self.stack_len[i] as usize;
                if l > 0 && self.stacks[i][l - 1] == -x {
                    self.stack_len[i] -= 1;
                } else {
                    self.stacks[i][l] = x;
                    self.stack_len[i] += 1;
                }
            }
            longest = longest.max(self.stack_len[i] as usize);
        }
        longest <= remaining
    }

    fn rotations_ok(&mut self, t: usize, x: i8) -> bool {
        if t > 0 {
            self.rotations[t] = Rotation {
                alive: true,
                norm: SmallNorm::NEW,
            };
        }
        for p in 1..=t {
            let rot = &mut self.rotations[p];
            if !rot.alive {
                continue;
            }
            let m = rot.norm.map(x);
            match code(m).cmp(&code(self.buf[t - p])) {
                Ordering::Less => return false,
                Ordering::Greater => rot.alive = false,
                Ordering::Equal => {}
            }
        }
        true
    }

    fn reversal_ok(&self, t: usize) -> bool {
        let mut norm = SmallNorm::NEW;
        for q in 0..=t {
            let m = norm.map(self.buf[t - q]);
            match code(m).cmp(&code(self.buf[q])) {
                Ordering::Less => return false,
                Ordering::Greater => return true,
                Ordering::Equal => {}
            }
        }
        true
    }

    fn accept(&mut self) {
        let w = &self.buf[..self.len];
        if self.used != self.n || !is_canonical(w) {
            return;
        }
        // every must-fall stack is empty here, since none may outlast the word
        if self.must_hang.iter().any(|&removed| vanishes(w, removed)) {
            return;
        }
        self.found.push(w.to_vec());
    }
}

fn vanishes(w: &[i8], removed: u64) -> bool {
    let mut stack = [0i8; MAX_SEARCH_LEN];
    let mut top = 0;
    for &l in w {
        if removed >> (l.unsigned_abs() - 1) & 1 == 1 {
            continue;
        }
        if top > 0 && stack[top - 1] == -l {
            top -= 1;
        } else {
            stack[top] = l;
            top += 1;
        }
    }
    top == 0
}
