//! Binary splitting in Demaine's convention.
//!
//! With the nails split into `L` (first `ceil(n/2)`) and `R`, removing at
//! least `k` nails means removing at least `j` in `L` and `k-j` in `R` for
//! some feasible `j`. Each such cross term `D_j` is a sum of solutions on the
//! two halves; the terms are joined by a Huffman-shaped commutator tree.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::easy::{balanced_k1, chain_expr, chain_updown_expr};
use super::huffman::huffman_tree;
use super::{default_check_mode, nails, ConstructError, ConstructionReport, MAX_BUILD_NAILS};
use crate::word::{Expr, Nail};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPlan {
    pub left: Vec<Nail>,
    pub right: Vec<Nail>,
    /// `max(0, k - |R|) ..= min(k, |L|)`
    pub feasible: RangeInclusive<u32>,
}

impl SplitPlan {
    pub fn new(k: u32, nails: &[Nail]) -> Result<SplitPlan, ConstructError> {
        if nails.len() < 2 {
            return Err(ConstructError::TooFewNails {
                needed: 2,
                got: nails.len(),
            });
        }
        let (l, r) = nails.split_at(nails.len().div_ceil(2));
        let (nl, nr) = (l.len() as u32, r.len() as u32);
        Ok(SplitPlan {
            left: l.to_vec(),
            right: r.to_vec(),
            feasible: k.saturating_sub(nr)..=k.min(nl),
        })
    }
}

/// Builds the binary-splitting expression for Demaine `k`-of-`|nails|`.
pub fn demaine_split_expr(k: u32, nails: &[Nail]) -> Result<Expr, ConstructError> {
    let m = nails.len() as u32;
    if k < 1 || k > m {
        return Err(ConstructError::ThresholdOutOfRange { k, n: nails.len() });
    }
    if k == 1 {
        return balanced_k1(nails);
    }
    if k == m {
        return Ok(chain_expr(nails));
    }
    if k == m - 1 {
        return Ok(chain_updown_expr(nails));
    }
    let plan = SplitPlan::new(k, nails)?;
    let mut leaves = Vec::new();
    for j in plan.feasible.clone() {
        let d = if j == 0 {
            demaine_split_expr(k, &plan.right)?
        } else if j == k {
            demaine_split_expr(k, &plan.left)?
        } else {
            Expr::sum([
                demaine_split_expr(j, &plan.left)?,
                demaine_split_expr(k - j, &plan.right)?,
            ])
        };
        let len = d.symbol_count();
        leaves.push((d, len));
    }
    huffman_tree(leaves)
}

/// Binary-splitting solution of Demaine `k`-of-`n` on nails `1..=n`.
pub fn demaine_split(k: u32, n: u8) -> Result<ConstructionReport, ConstructError> {
    if n > MAX_BUILD_NAILS {
        return Err(ConstructError::TooManyNails {
            max: MAX_BUILD_NAILS as usize,
            got: n as usize,
        });
    }
    let expr = demaine_split_expr(k, &nails(n))?;
    ConstructionReport::build("split", k, n, expr, default_check_mode(n))
}
