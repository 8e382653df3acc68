use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::spec::CheckMode;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn codes(ls: &[i8]) -> Vec<u8> {
    ls.iter().map(|&l| code(l)).collect()
}

fn permutations(n: usize) -> Vec<Vec<i8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as i8);
            out.push(q);
        }
    }
    out
}

// Least image over the whole symmetry group, by brute force.
fn orbit_min(ls: &[i8], n: usize) -> Vec<i8> {
    let len = ls.len();
    let mut best: Option<Vec<i8>> = None;
    for perm in permutations(n) {
        for flips in 0..(1u32 << n) {
            let image: Vec<i8> = ls
                .iter()
                .map(|&l| {
                    let a = l.unsigned_abs() as usize;
                    let s = if flips >> (a - 1) & 1 == 1 {
                        -l.signum()
                    } else {
                        l.signum()
                    };
                    s * perm[a - 1]
                })
                .collect();
            for rev in [false, true] {
                for r in 0..len {
                    let cand: Vec<i8> = (0..len)
                        .map(|t| {
                            if rev {
                                image[(r + len - t) % len]
                            } else {
                                image[(r + t) % len]
                            }
                        })
                        .collect();
                    if best.as_ref().is_none_or(|b| codes(&cand) < codes(b)) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best.unwrap()
}

// Every cyclically reduced word of the given length over nails 1..=n. With
// `normalized`, only words whose nails first appear in order and positively;
// every symmetry class has such a member.
fn words(n: i8, len: usize, normalized: bool) -> Vec<Vec<i8>> {
    words_with(n, len, normalized, true)
}

fn words_with(n: i8, len: usize, normalized: bool, cyclic: bool) -> Vec<Vec<i8>> {
    fn go(n: i8, len: usize, flags: (bool, bool), cur: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        let (normalized, cyclic) = flags;
        if cur.len() == len {
            if !cyclic || len < 2 || cur[0] != -cur[len - 1] {
                out.push(cur.clone());
            }
            return;
        }
        let seen = cur.iter().map(|l| l.abs()).max().unwrap_or(0);
        for j in 1..=n {
            for l in [j, -j] {
                if cur.last() == Some(&-l) {
                    continue;
                }
                if normalized && (j > seen + 1 || (j == seen + 1 && l < 0)) {
                    continue;
                }
                cur.push(l);
                go(n, len, flags, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, len, (normalized, cyclic), &mut Vec::new(), &mut out);
    out
}

fn cyclic_words(n: i8, len: usize) -> Vec<Vec<i8>> {
    words(n, len, false)
}

fn signed(w: &Word) -> Vec<i8> {
    w.letters().iter().map(|l| l.signed()).collect()
}

#[test]
fn canonical_example() {
    assert_eq!(
        canonical_form(&w("2+3+1-2-3-1")).unwrap().to_string(),
        "1+2+3-1-2-3"
    );
    assert_eq!(canonical_form(&Word::empty()), Err(SearchError::ZeroWord));
    assert_eq!(canonical_form(&w("1-1")), Err(SearchError::ZeroWord));
}

#[test]
fn canonical_matches_orbit_minimum() {
    for n in 1..=3i8 {
        for len in 1..=6 {
            for ls in cyclic_words(n, len) {
                let c = canonical_form(&from_letters(&ls)).unwrap();
                assert_eq!(signed(c.word()), orbit_min(&ls, n as usize), "{ls:?}");
            }
        }
    }
}

#[test]
fn canonical_is_a_retraction() {
    for ls in cyclic_words(3, 5).into_iter().step_by(7) {
        let c = canonical_form(&from_letters(&ls)).unwrap();
        assert_eq!(canonical_form(c.word()).unwrap(), c);
        assert!(canon::is_canonical(&signed(c.word())));
    }
}

#[test]
fn equivalence_under_symmetries() {
    let a = w("1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4");
    // relabel 1<->3, flip 2, reverse, rotate
    let mut ls = signed(&a);
    for l in ls.iter_mut() {
        *l = match *l {
            1 => 3,
            -1 => -3,
            3 => 1,
            -3 => -1,
            2 => -2,
            -2 => 2,
            x => x,
        };
    }
    ls.reverse();
    ls.rotate_left(5);
    assert!(equivalent(&a, &from_letters(&ls)).unwrap());
    assert!(!equivalent(&a, &w("1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4")).unwrap());
}

// Brute force: every cyclically reduced word of this length that solves the
// puzzle, up to symmetry.
fn brute_solutions(spec: &Spec, len: usize) -> BTreeSet<CanonicalWord> {
    words(spec.n() as i8, len, true)
        .into_iter()
        .map(|ls| Word::reduce(ls.iter().map(|&l| Letter::from_signed(l as i64).unwrap())))
        .filter(|word| spec.check(word, CheckMode::Full).unwrap().is_ok())
        .map(|word| canonical_form(&word).unwrap())
        .collect()
}

#[test]
fn search_agrees_with_brute_force() {
    for n in 1..=3u8 {
        for k in 1..=n as u32 {
            let spec = Spec::threshold(k, n).unwrap();
            for len in 1..=8 {
                let found: BTreeSet<_> = search_length(&spec, len, &SearchConfig::default())
                    .unwrap()
                    .solutions
                    .into_iter()
                    .collect();
                assert_eq!(found, brute_solutions(&spec, len), "{k}-of-{n} at {len}");
            }
        }
    }
    for k in 1..=4 {
        let spec = Spec::threshold(k, 4).unwrap();
        for len in [4, 6, 8, 10] {
            let found: BTreeSet<_> = search_length(&spec, len, &SearchConfig::default())
                .unwrap()
                .solutions
                .into_iter()
                .collect();
            assert_eq!(found, brute_solutions(&spec, len), "{k}-of-4 at {len}");
        }
    }
}

#[test]
fn known_minima() {
    let cfg = SearchConfig::default();
    let min = |k, n, max| match find_minimum(&Spec::threshold(k, n).unwrap(), max, &cfg).unwrap() {
        Minimum::Found(o) => o,
        Minimum::NotFound { .. } => panic!("{k}-of-{n}: none up to {max}"),
    };
    assert_eq!(min(1, 2, 12).length, 4);
    assert_eq!(min(2, 3, 12).length, 6);
    let one_of_three = min(1, 3, 12);
    assert_eq!(one_of_three.length, 10);
    assert_eq!(one_of_three.solutions.len(), 1);
    assert_eq!(one_of_three.solutions[0].to_string(), "1+2-1-2+3+2+1-2-1-3");
    assert_eq!(min(1, 1, 4).length, 1);
    assert_eq!(min(3, 3, 4).length, 3);
}

#[test]
fn sharding_partitions_the_search() {
    let spec = Spec::threshold(1, 3).unwrap();
    let whole = search_length(&spec, 12, &SearchConfig::default()).unwrap();
    for shards in [2u32, 3, 8] {
        let parts = (0..shards)
            .map(|i| search_length(&spec, 12, &SearchConfig::default().shard(shards, i)).unwrap())
            .collect();
        assert_eq!(
            SearchOutcome::merge(parts).unwrap(),
            whole,
            "{shards} shards"
        );
    }
}

#[test]
fn guards() {
    let spec = Spec::threshold(2, 4).unwrap();
    let cfg = SearchConfig::default();
    assert_eq!(
        search_length(&spec, 14, &cfg),
        Err(SearchError::LongRunNotAllowed { length: 14 })
    );
    assert!(matches!(
        search_length(
            &spec,
            12,
            &SearchConfig {
                node_budget: Some(10),
                ..cfg
            }
        ),
        Err(SearchError::BudgetExceeded { .. })
    ));
    assert_eq!(search_length(&spec, 9, &cfg).unwrap().nodes_explored, 0);
    assert_eq!(
        search_length(&spec, 8, &cfg.shard(2, 2)),
        Err(SearchError::BadShard {
            shards: 2,
            shard_id: 2
        })
    );
    assert_eq!(
        search_length(&Spec::threshold(0, 3).unwrap(), 4, &cfg),
        Err(SearchError::ThresholdZero)
    );
    assert!(matches!(
        search_length(&Spec::threshold(2, 7).unwrap(), 4, &cfg),
        Err(SearchError::TooManyNails { .. })
    ));
}

#[test]
fn cyclic_filter_loses_no_minimum() {
    let cfg = SearchConfig::default();
    for n in 1..=3u8 {
        for k in 1..=n as u32 {
            let spec = Spec::threshold(k, n).unwrap();
            let brute = (1..=8).find(|&len| {
                words_with(n as i8, len, true, false).into_iter().any(|ls| {
                    let word =
                        Word::reduce(ls.iter().map(|&l| Letter::from_signed(l as i64).unwrap()));
                    word.len() == len && spec.check(&word, CheckMode::Full).unwrap().is_ok()
                })
            });
            let searched = match find_minimum(&spec, 8, &cfg).unwrap() {
                Minimum::Found(o) => Some(o.length),
                Minimum::NotFound { .. } => None,
            };
            assert_eq!(searched, brute, "{k}-of-{n}");
        }
    }
}

fn image(ls: &[i8], perm: &[i8], flips: u32, invert: bool, rot: usize) -> Word {
    let mut v: Vec<i8> = ls
        .iter()
        .map(|&l| {
            let a = l.unsigned_abs() as usize;
            let s = if flips >> (a - 1) & 1 == 1 {
                -l.signum()
            } else {
                l.signum()
            };
            s * perm[a - 1]
        })
        .collect();
    if invert {
        v.reverse();
        v.iter_mut().for_each(|l| *l = -*l);
    }
    let len = v.len();
    v.rotate_left(rot % len);
    Word::reduce(v.iter().map(|&l| Letter::from_signed(l as i64).unwrap()))
}

#[test]
fn symmetries_preserve_solutions_and_class() {
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(3);
    let solutions = [
        ("1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4", 2u32, 4u8),
        ("1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4", 2, 4),
        ("1+2-1-2+3+2+1-2-1-3", 1, 3),
        ("1+2+3-1-2-3", 2, 3),
    ];
    for (text, k, n) in solutions {
        let base = w(text);
        let spec = Spec::threshold(k, n).unwrap();
        let ls = signed(&base);
        for _ in 0..200 {
            let mut perm: Vec<i8> = (1..=n as i8).collect();
            perm.shuffle(&mut rng);
            let img = image(&ls, &perm, rng.gen(), rng.gen(), rng.gen_range(0..ls.len()));
            assert!(spec.check(&img, CheckMode::Full).unwrap().is_ok(), "{img}");
            assert!(equivalent(&base, &img).unwrap());
        }
        assert!(equivalent(&base, &base.invert()).unwrap());
        assert_eq!(canonical_form(&base).unwrap().n(), n);
    }
}
