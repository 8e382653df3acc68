//! One-step extension: `H_k(n) = A + n + B - A - n` with `A` solving
//! `k`-of-`(n-1)` and `B` solving `(k-1)`-of-`(n-1)`.
//!
//! Exponential in `n`, but the junction between `B` and `-A` can cancel, which
//! gives the short small-`n` solutions.

use alloc::vec;
use alloc::vec::Vec;

use super::easy::{balanced_k1, chain_expr, chain_updown_expr};
use super::{nails, ConstructError, ConstructionReport};
use crate::spec::{CheckMode, Spec};
use crate::word::{Expr, Letter, Nail, NailSet, Word};

/// The extension as an expression; its symbol count is `2|A| + |B| + 2`
/// when `a` and `b` are given as words.
pub fn extension_expr(a: Expr, b: Expr, new_nail: Nail) -> Expr {
    Expr::sum([
        a.clone(),
        Expr::nail(new_nail),
        b,
        Expr::neg(a),
        Expr::Leaf(Letter::neg(new_nail)),
    ])
}

fn check_shape(k: u32, a: &Word, b: &Word, new_nail: Nail) -> Result<(), ConstructError> {
    let n = new_nail.index() as u32;
    if k < 2 || k + 1 > n {
        return Err(ConstructError::ThresholdOutOfRange { k, n: n as usize });
    }
    let below = NailSet::universe(new_nail.index() - 1);
    for w in [a, b] {
        if !w.support().is_subset(below) {
            return Err(crate::spec::SpecError::SupportOutsideUniverse {
                support: w.support(),
                n: new_nail.index() - 1,
            }
            .into());
        }
    }
    Ok(())
}

/// `reduce(A + n + B - A - n)`.
pub fn extend(k: u32, a: &Word, b: &Word, new_nail: Nail) -> Result<Word, ConstructError> {
    check_shape(k, a, b, new_nail)?;
    let n = Word::reduce([Letter::pos(new_nail)]);
    Ok(a.concat(&n)
        .concat(b)
        .concat(&a.invert())
        .concat(&n.invert()))
}

/// Like [`extend`], but first verifies that `A` and `B` solve their puzzles.
pub fn extend_checked(k: u32, a: &Word, b: &Word, new_nail: Nail) -> Result<Word, ConstructError> {
    check_shape(k, a, b, new_nail)?;
    let m = new_nail.index() - 1;
    let mode = super::default_check_mode(m);
    let va = Spec::threshold(k, m)?.check(a, mode)?;
    if !va.is_ok() {
        return Err(ConstructError::BadInput {
            which: "A",
            verdict: va,
        });
    }
    let vb = Spec::threshold(k - 1, m)?.check(b, mode)?;
    if !vb.is_ok() {
        return Err(ConstructError::BadInput {
            which: "B",
            verdict: vb,
        });
    }
    extend(k, a, b, new_nail)
}

/// One rung of the `2`-of-`4` extension ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderStep {
    pub label: &'static str,
    /// The `1`-of-`3` solution used as `B`.
    pub b: Expr,
    pub report: ConstructionReport,
}

fn c(a: Expr, b: Expr) -> Expr {
    Expr::comm(a, b)
}

/// The four documented `1`-of-`3` orientations plugged into the `2`-of-`4`
/// extension with `A = 1+2+3-1-2-3`, longest first.
pub fn extension_ladder() -> Vec<LadderStep> {
    let n = Expr::n;
    let orientations = [
        ("[1,[2,3]]", c(n(1), c(n(2), n(3)))),
        ("[[1,2],3]", c(c(n(1), n(2)), n(3))),
        ("[1,[3,2]]", c(n(1), c(n(3), n(2)))),
        ("[[2,1],3]", c(c(n(2), n(1)), n(3))),
    ];
    let a = chain_updown_expr(&nails(3));
    let four = Nail::new(4).unwrap();
    orientations
        .into_iter()
        .map(|(label, b)| {
            let expr = extension_expr(a.clone(), b.clone(), four);
            let report = ConstructionReport::build("extension", 2, 4, expr, CheckMode::Full)
                .expect("2-of-4 is a valid puzzle");
            LadderStep { label, b, report }
        })
        .collect()
}

/// Every orientation of every commutator node in `e`.
fn orientations(e: &Expr) -> Vec<Expr> {
    match e {
        Expr::Comm(a, b) => {
            let mut out = Vec::new();
            let (oa, ob) = (orientations(a), orientations(b));
            for x in &oa {
                for y in &ob {
                    out.push(c(x.clone(), y.clone()));
                    out.push(c(y.clone(), x.clone()));
                }
            }
            out
        }
        other => vec![other.clone()],
    }
}

/// Largest `n` accepted by [`extension_greedy`].
pub const MAX_GREEDY_NAILS: u8 = 9;

fn greedy(k: u32, m: u8) -> Result<Expr, ConstructError> {
    let ns = nails(m);
    if k == 1 {
        return balanced_k1(&ns);
    }
    if k == m as u32 {
        return Ok(chain_expr(&ns));
    }
    if k + 1 == m as u32 {
        return Ok(chain_updown_expr(&ns));
    }
    let a = greedy(k, m - 1)?;
    let b = greedy(k - 1, m - 1)?;
    let candidates = if k - 1 == 1 {
        orientations(&b)
    } else {
        vec![b.clone(), Expr::neg(b)]
    };
    let nail = Nail::new(m).unwrap();
    let aw = a.word();
    let mut best: Option<(usize, Expr)> = None;
    for cand in candidates {
        let len = extend(k, &aw, &cand.word(), nail)?.len();
        if best.as_ref().is_none_or(|(l, _)| len < *l) {
            best = Some((len, cand));
        }
    }
    let (_, b) = best.expect("at least one orientation");
    Ok(extension_expr(Expr::from_word(&aw), b, nail))
}

/// Extension chain for Demaine `k`-of-`n`, picking at each step the
/// orientation of the `(k-1)` part that cancels most at the junction.
pub fn extension_greedy(k: u32, n: u8) -> Result<ConstructionReport, ConstructError> {
    if n > MAX_GREEDY_NAILS {
        return Err(ConstructError::TooManyNails {
            max: MAX_GREEDY_NAILS as usize,
            got: n as usize,
        });
    }
    if k < 1 || k > n as u32 {
        return Err(ConstructError::ThresholdOutOfRange { k, n: n as usize });
    }
    let expr = greedy(k, n)?;
    ConstructionReport::build("extension", k, n, expr, super::default_check_mode(n))
}
