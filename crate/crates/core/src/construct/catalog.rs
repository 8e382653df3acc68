//! Known `2`-of-`4` solutions, from Demaine's 80-symbol tree down to the two
//! length-16 optima.

use alloc::string::ToString;

use super::easy::chain_updown_expr;
use super::extension::extension_expr;
use super::{ConstructError, ConstructionReport};
use crate::spec::CheckMode;
use crate::word::{Expr, Nail, Word};

pub const CATALOG_NAMES: &[&str] = &[
    "demaine80",
    "reoriented58",
    "reoriented54",
    "dropped52",
    "atoms44",
    "huffman-good32",
    "huffman-bad44",
    "extension24",
    "extension22",
    "extension20",
    "extension18",
    "optimal16-w1",
    "optimal16-w2",
];

pub(crate) const W1: &str = "1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4";
pub(crate) const W2: &str = "1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4";

fn c(a: Expr, b: Expr) -> Expr {
    Expr::comm(a, b)
}

fn p(a: u8, b: u8) -> Expr {
    Expr::sum([Expr::n(a), Expr::n(b)])
}

fn updown(labels: &[u8]) -> Expr {
    let ns: alloc::vec::Vec<Nail> = labels.iter().filter_map(|&l| Nail::new(l)).collect();
    chain_updown_expr(&ns)
}

fn extension_with(b: Expr) -> Expr {
    extension_expr(updown(&[1, 2, 3]), b, Nail::new(4).unwrap())
}

fn expr_for(name: &str) -> Option<Expr> {
    let n = Expr::n;
    Some(match name {
        "demaine80" => c(
            c(p(1, 2), c(p(1, 3), p(1, 4))),
            c(p(2, 3), c(p(2, 4), p(3, 4))),
        ),
        "reoriented58" => c(
            c(p(1, 2), c(p(3, 1), p(4, 1))),
            c(p(3, 2), c(p(2, 4), p(3, 4))),
        ),
        "reoriented54" => c(
            c(c(p(2, 1), p(3, 1)), p(3, 4)),
            c(p(4, 1), c(p(3, 2), p(4, 2))),
        ),
        "dropped52" => c(c(p(1, 2), c(p(1, 3), p(1, 4))), c(p(2, 3), p(2, 4))),
        "atoms44" => c(c(p(1, 2), updown(&[1, 3, 4])), updown(&[2, 3, 4])),
        "huffman-good32" => c(
            c(p(1, 2), p(3, 4)),
            Expr::sum([c(n(1), n(2)), c(n(3), n(4))]),
        ),
        "huffman-bad44" => c(
            c(p(1, 2), Expr::sum([c(n(1), n(2)), c(n(3), n(4))])),
            p(3, 4),
        ),
        "extension24" => extension_with(c(n(1), c(n(2), n(3)))),
        "extension22" => extension_with(c(c(n(1), n(2)), n(3))),
        "extension20" => extension_with(c(n(1), c(n(3), n(2)))),
        "extension18" => extension_with(c(c(n(2), n(1)), n(3))),
        "optimal16-w1" => Expr::from_word(&W1.parse::<Word>().ok()?),
        "optimal16-w2" => Expr::from_word(&W2.parse::<Word>().ok()?),
        _ => return None,
    })
}

/// A named `2`-of-`4` exhibit, checked in full mode.
pub fn catalog(name: &str) -> Result<ConstructionReport, ConstructError> {
    let expr =
        expr_for(name).ok_or_else(|| ConstructError::UnknownCatalogEntry(name.to_string()))?;
    ConstructionReport::build(name, 2, 4, expr, CheckMode::Full)
}
