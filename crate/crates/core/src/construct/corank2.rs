//! Co-rank-2 puzzles: Demaine `(n-2)`-of-`n`, i.e. Wästlund 3-of-`n`.
//!
//! In Wästlund's convention the picture hangs iff at least three nails remain
//! in total, which over a balanced split is the OR of "three remain in L",
//! "three remain in R", "one in L and two in R", "two in L and one in R".
//! Each hang condition is an OR and the word is their sum (a conjunction of
//! falls). The cross conditions are commutators of the linear chain
//! (Wästlund 1-of-m) and up-down chain (Wästlund 2-of-m):
//!
//! `W3(V) = W3(L) + [W2(R), W1(L)] + [W1(R), W2(L)] + W3(R)`, `W3(2 nails) = 0`.
//!
//! The cross terms are oriented so that each ends on the nails the next term
//! does not start with; the other orientations also solve the puzzle but lose
//! letters to free reduction at the junctions.
//!
//! Length satisfies `L(n) = 2 L(n/2) + 6n`, so `L(2^i) = 6 (i-1) 2^i`.

use super::easy::{chain_expr, chain_updown_expr};
use super::{default_check_mode, nails, ConstructError, ConstructionReport, MAX_BUILD_NAILS};
use crate::word::{Expr, Nail};

pub fn wastlund_corank2_expr(nails: &[Nail]) -> Result<Expr, ConstructError> {
    let m = nails.len();
    if m < 2 {
        return Err(ConstructError::TooFewNails { needed: 2, got: m });
    }
    if !m.is_power_of_two() {
        return Err(ConstructError::NotPowerOfTwo(m));
    }
    if m == 2 {
        return Ok(Expr::Zero);
    }
    let (l, r) = nails.split_at(m / 2);
    Ok(Expr::sum([
        wastlund_corank2_expr(l)?,
        Expr::comm(chain_updown_expr(r), chain_expr(l)),
        Expr::comm(chain_expr(r), chain_updown_expr(l)),
        wastlund_corank2_expr(r)?,
    ]))
}

/// Solution of Demaine `(n-2)`-of-`n` on nails `1..=n`, `n` a power of two.
pub fn wastlund_corank2(n: u8) -> Result<ConstructionReport, ConstructError> {
    if n > MAX_BUILD_NAILS {
        return Err(ConstructError::TooManyNails {
            max: MAX_BUILD_NAILS as usize,
            got: n as usize,
        });
    }
    let expr = wastlund_corank2_expr(&nails(n))?;
    let k = (n as u32).saturating_sub(2);
    ConstructionReport::build("wastlund", k, n, expr, default_check_mode(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{CheckMode, Spec};

    #[test]
    fn four_nails_is_24() {
        let r = wastlund_corank2(4).unwrap();
        assert_eq!((r.unreduced, r.reduced), (24, 24));
        assert_eq!(r.k, 2);
        assert!(r.verdict.is_ok(), "{}", r.verdict);
    }

    #[test]
    fn eight_nails_is_96() {
        let r = wastlund_corank2(8).unwrap();
        assert_eq!((r.unreduced, r.reduced), (96, 96));
        let v = Spec::threshold(6, 8)
            .unwrap()
            .check(&r.word, CheckMode::Essential)
            .unwrap();
        assert!(v.is_ok());
    }

    #[test]
    fn two_nails_is_empty() {
        let r = wastlund_corank2(2).unwrap();
        assert!(r.word.is_empty());
        assert_eq!(r.k, 0);
        assert!(r.verdict.is_ok());
    }

    #[test]
    fn rejects_non_powers_of_two() {
        assert_eq!(wastlund_corank2(6), Err(ConstructError::NotPowerOfTwo(6)));
        assert!(wastlund_corank2(1).is_err());
    }

    #[test]
    fn satisfies_the_recurrence() {
        let mut prev = 0u64;
        for i in 1..=6u32 {
            let n = 1u8 << i;
            let r = wastlund_corank2(n).unwrap();
            if i > 1 {
                assert_eq!(r.unreduced, 2 * prev + 6 * n as u64);
            }
            assert_eq!(r.reduced, r.unreduced);
            prev = r.unreduced;
        }
    }
}
