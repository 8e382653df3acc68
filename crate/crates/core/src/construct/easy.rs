//! The three easy cases: `k = n`, `k = n-1` and `k = 1`.

use super::ConstructError;
use crate::word::{Expr, Letter, Nail, Word};

/// `1 + 2 + ... + m` over the given nails; solves `m`-of-`m`.
pub fn chain_expr(nails: &[Nail]) -> Expr {
    Expr::sum(nails.iter().map(|&n| Expr::nail(n)))
}

/// `1 + ... + m - 1 - ... - m`; solves `(m-1)`-of-`m`.
pub fn chain_updown_expr(nails: &[Nail]) -> Expr {
    let up = nails.iter().map(|&n| Expr::nail(n));
    let down = nails.iter().map(|&n| Expr::Leaf(Letter::neg(n)));
    Expr::sum(up.chain(down))
}

pub fn chain(n: u8) -> Result<Word, ConstructError> {
    if n < 1 {
        return Err(ConstructError::TooFewNails { needed: 1, got: 0 });
    }
    Ok(chain_expr(&super::nails(n)).word())
}

pub fn chain_updown(n: u8) -> Result<Word, ConstructError> {
    if n < 2 {
        return Err(ConstructError::TooFewNails {
            needed: 2,
            got: n as usize,
        });
    }
    Ok(chain_updown_expr(&super::nails(n)).word())
}

/// Balanced commutator tree: `[first ceil(m/2) nails, rest]`, recursively.
/// Solves `1`-of-`m`; for `m = 2^i` the word has length `4^i`.
pub fn balanced_k1(nails: &[Nail]) -> Result<Expr, ConstructError> {
    match nails.len() {
        0 => Err(ConstructError::TooFewNails { needed: 1, got: 0 }),
        1 => Ok(Expr::nail(nails[0])),
        m => {
            let (l, r) = nails.split_at(m.div_ceil(2));
            Ok(Expr::comm(balanced_k1(l)?, balanced_k1(r)?))
        }
    }
}

pub(crate) fn balanced_k1_len(m: u64) -> u128 {
    if m <= 1 {
        return m as u128;
    }
    let l = m.div_ceil(2);
    2 * (balanced_k1_len(l) + balanced_k1_len(m - l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::nails;
    use crate::spec::{CheckMode, Spec};

    #[test]
    fn chain_examples() {
        assert_eq!(chain(3).unwrap().to_signed(), [1, 2, 3]);
        assert_eq!(chain(1).unwrap().to_signed(), [1]);
        assert!(chain(0).is_err());
        let v = Spec::threshold(3, 3)
            .unwrap()
            .check(&chain(3).unwrap(), CheckMode::Full);
        assert!(v.unwrap().is_ok());
    }

    #[test]
    fn chain_updown_examples() {
        assert_eq!(chain_updown(3).unwrap().to_signed(), [1, 2, 3, -1, -2, -3]);
        assert_eq!(chain_updown(2).unwrap().to_signed(), [1, 2, -1, -2]);
        assert!(chain_updown(1).is_err());
        let v = Spec::threshold(2, 3)
            .unwrap()
            .check(&chain_updown(3).unwrap(), CheckMode::Full);
        assert!(v.unwrap().is_ok());
    }

    #[test]
    fn balanced_examples() {
        let t = balanced_k1(&nails(4)).unwrap();
        assert_eq!(
            t,
            Expr::comm(
                Expr::comm(Expr::n(1), Expr::n(2)),
                Expr::comm(Expr::n(3), Expr::n(4))
            )
        );
        assert_eq!(t.word().len(), 16);
        assert_eq!(balanced_k1(&nails(1)).unwrap(), Expr::n(1));
        assert_eq!(
            balanced_k1(&nails(2)).unwrap().word().to_signed(),
            [1, 2, -1, -2]
        );
        assert!(balanced_k1(&[]).is_err());
    }

    #[test]
    fn easy_cases_solve_and_have_stated_lengths() {
        for n in 1..=8u8 {
            let spec = Spec::threshold(n as u32, n).unwrap();
            assert!(spec
                .check(&chain(n).unwrap(), CheckMode::Full)
                .unwrap()
                .is_ok());
            let t = balanced_k1(&nails(n)).unwrap();
            assert_eq!(t.symbol_count() as u128, balanced_k1_len(n as u64));
            let one = Spec::threshold(1, n).unwrap();
            assert!(
                one.check(&t.word(), CheckMode::Full).unwrap().is_ok(),
                "1-of-{n}"
            );
            if n >= 2 {
                let w = chain_updown(n).unwrap();
                assert_eq!(w.len(), 2 * n as usize);
                let spec = Spec::threshold(n as u32 - 1, n).unwrap();
                assert!(spec.check(&w, CheckMode::Full).unwrap().is_ok());
            }
        }
        for i in 0..=4 {
            let n = 1u8 << i;
            assert_eq!(balanced_k1(&nails(n)).unwrap().word().len(), 1 << (2 * i));
        }
    }
}
