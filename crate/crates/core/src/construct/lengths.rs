//! Length accounting without materializing words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::easy::balanced_k1_len;
use super::huffman::tree_cost;
use super::ConstructError;

/// `(8/3) 6^i - 4 * 4^i`, the unreduced length of the binary-splitting
/// `2`-of-`2^i` solution, as an exact integer.
pub fn l2_closed_form(i: u32) -> Result<u128, ConstructError> {
    if i < 2 {
        return Err(ConstructError::ThresholdOutOfRange {
            k: 2,
            n: 1usize << i,
        });
    }
    let six = 6u128.checked_pow(i).ok_or(ConstructError::Overflow)?;
    let four = 4u128.checked_pow(i).ok_or(ConstructError::Overflow)?;
    let num = six.checked_mul(8).ok_or(ConstructError::Overflow)? - four * 12;
    debug_assert_eq!(num % 3, 0);
    Ok(num / 3)
}

/// Unreduced length of the binary-splitting solution of `k`-of-`m`, computed
/// from leaf lengths alone. Mirrors the builder's base cases and split.
pub fn split_length(k: u32, m: u64) -> Result<u128, ConstructError> {
    split_length_memo(k, m, &mut BTreeMap::new())
}

fn split_length_memo(
    k: u32,
    m: u64,
    memo: &mut BTreeMap<(u32, u64), u128>,
) -> Result<u128, ConstructError> {
    if k < 1 || k as u64 > m {
        return Err(ConstructError::ThresholdOutOfRange { k, n: m as usize });
    }
    if k == 1 {
        return Ok(balanced_k1_len(m));
    }
    if k as u64 == m {
        return Ok(m as u128);
    }
    if k as u64 + 1 == m {
        return Ok(2 * m as u128);
    }
    if let Some(&v) = memo.get(&(k, m)) {
        return Ok(v);
    }
    let l = m.div_ceil(2);
    let r = m - l;
    let lo = (k as u64).saturating_sub(r) as u32;
    let hi = (k as u64).min(l) as u32;
    let mut leaves = Vec::new();
    for j in lo..=hi {
        let len = if j == 0 {
            split_length_memo(k, r, memo)?
        } else if j == k {
            split_length_memo(k, l, memo)?
        } else {
            split_length_memo(j, l, memo)?
                .checked_add(split_length_memo(k - j, r, memo)?)
                .ok_or(ConstructError::Overflow)?
        };
        leaves.push(len);
    }
    let total = tree_cost(&leaves).ok_or(ConstructError::Overflow)?;
    memo.insert((k, m), total);
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LengthRow {
    pub i: u32,
    pub n: u64,
    pub length: u128,
    /// `L_k(2^i) / L_k(2^(i-1))`, when the previous row exists.
    pub ratio: Option<f64>,
}

/// `L_k(2^i)` for every `i <= i_max` with `2^i >= k`.
pub fn length_table(k: u32, i_max: u32) -> Result<Vec<LengthRow>, ConstructError> {
    if k < 1 {
        return Err(ConstructError::ThresholdOutOfRange { k, n: 0 });
    }
    if i_max > 62 {
        return Err(ConstructError::Overflow);
    }
    let mut memo = BTreeMap::new();
    let mut rows: Vec<LengthRow> = Vec::new();
    for i in 0..=i_max {
        let n = 1u64 << i;
        if n < k as u64 {
            continue;
        }
        let length = split_length_memo(k, n, &mut memo)?;
        let ratio = rows.last().map(|p| length as f64 / p.length as f64);
        rows.push(LengthRow {
            i,
            n,
            length,
            ratio,
        });
    }
    Ok(rows)
}
