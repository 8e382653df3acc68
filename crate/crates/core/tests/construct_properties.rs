//! Construction families against the solves-checker.

use phang_core::construct::{
    demaine_split, extend, l2_closed_form, split_length, wastlund_corank2, ConstructError,
};
use phang_core::{CheckMode, Letter, Nail, Spec, Word};
use proptest::prelude::*;

#[test]
fn split_solves_every_cell_up_to_eight_nails() {
    for n in 1..=8u8 {
        for k in 1..=n as u32 {
            let r = demaine_split(k, n).unwrap();
            let v = Spec::threshold(k, n)
                .unwrap()
                .check(&r.word, CheckMode::Full)
                .unwrap();
            assert!(v.is_ok(), "{k}-of-{n}: {v}");
            assert!(r.reduced <= r.unreduced);
            assert_eq!(r.reduced % 2, r.unreduced % 2);
            assert_eq!(split_length(k, n as u64).unwrap(), r.unreduced as u128);
        }
    }
    assert!(matches!(
        demaine_split(0, 4),
        Err(ConstructError::ThresholdOutOfRange { .. })
    ));
    assert!(matches!(
        demaine_split(5, 4),
        Err(ConstructError::ThresholdOutOfRange { .. })
    ));
}

#[test]
fn split_two_of_powers_of_two_matches_closed_form() {
    for i in 2..=6u32 {
        let r = demaine_split(2, 1 << i).unwrap();
        assert_eq!(r.unreduced as u128, l2_closed_form(i).unwrap(), "i={i}");
    }
}

#[test]
fn corank2_is_exact() {
    for i in 1..=5u32 {
        let n = 1u8 << i;
        let r = wastlund_corank2(n).unwrap();
        let expected = 6 * (i as u64 - 1) * (1 << i);
        assert_eq!((r.unreduced, r.reduced), (expected, expected), "n={n}");
        assert!(r.verdict.is_ok(), "n={n}: {}", r.verdict);
    }
}

fn conjugate(w: &Word, g: &[(u8, bool)]) -> Word {
    let g = Word::reduce(
        g.iter()
            .map(|&(j, s)| Letter::new(Nail::new(j).unwrap(), s)),
    );
    g.concat(w).concat(&g.invert())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // A solves k-of-(n-1), B solves (k-1)-of-(n-1); disguise both by
    // conjugation and check the extension still solves k-of-n.
    #[test]
    fn extension_of_any_valid_pair_solves(
        n in 3..=6u8,
        k_seed in 0..100u32,
        ga in prop::collection::vec((1..=5u8, any::<bool>()), 0..4),
        gb in prop::collection::vec((1..=5u8, any::<bool>()), 0..4),
    ) {
        let m = n - 1;
        let k = 2 + k_seed % (n as u32 - 2);
        let clip = |g: &[(u8, bool)]| g.iter().map(|&(j, s)| (1 + (j - 1) % m, s)).collect::<Vec<_>>();
        let a = conjugate(&demaine_split(k, m).unwrap().word, &clip(&ga));
        let b = conjugate(&demaine_split(k - 1, m).unwrap().word, &clip(&gb));
        let h = extend(k, &a, &b, Nail::new(n).unwrap()).unwrap();
        let v = Spec::threshold(k, n).unwrap().check(&h, CheckMode::Full).unwrap();
        prop_assert!(v.is_ok(), "{}-of-{}: {}", k, n, v);
    }
}
