use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::ConstructError;
use crate::word::Expr;

/// Combines subexpressions into a commutator tree by repeatedly merging the
/// two shortest items, the shorter one as the left argument. A leaf at depth
/// `d` is duplicated `2^d` times, so this places long leaves near the root.
///
/// Ties go to the earlier item: input order for leaves, merge order for
/// subtrees (which come after all leaves).
pub fn huffman_tree(leaves: Vec<(Expr, u64)>) -> Result<Expr, ConstructError> {
    if leaves.is_empty() {
        return Err(ConstructError::EmptyHuffman);
    }
    let mut slots: Vec<Option<Expr>> = Vec::with_capacity(2 * leaves.len());
    let mut heap = BinaryHeap::new();
    for (expr, len) in leaves {
        heap.push(Reverse((len, slots.len())));
        slots.push(Some(expr));
    }
    while heap.len() > 1 {
        let Reverse((la, a)) = heap.pop().unwrap();
        let Reverse((lb, b)) = heap.pop().unwrap();
        let merged = Expr::comm(slots[a].take().unwrap(), slots[b].take().unwrap());
        heap.push(Reverse((2 * (la + lb), slots.len())));
        slots.push(Some(merged));
    }
    let Reverse((_, root)) = heap.pop().unwrap();
    Ok(slots[root].take().unwrap())
}

/// Total length of the Huffman tree over `lengths`, without building it.
pub fn tree_cost(lengths: &[u128]) -> Option<u128> {
    let mut heap: BinaryHeap<Reverse<u128>> = lengths.iter().map(|&l| Reverse(l)).collect();
    while heap.len() > 1 {
        let Reverse(a) = heap.pop()?;
        let Reverse(b) = heap.pop()?;
        heap.push(Reverse(a.checked_add(b)?.checked_mul(2)?));
    }
    heap.pop().map(|Reverse(x)| x)
}
