//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use phang_core::construct::{
    catalog, demaine_split, extension_expr, extension_ladder, l2_closed_form, length_table,
    node_vanish_audit, wastlund_corank2,
};
use phang_core::search::{
    equivalent, find_minimum, search_length, Minimum, SearchConfig, SearchOutcome,
};
use phang_core::{CheckMode, Expr, Nail, NailSet, Spec, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const W1: &str = "1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4";
const W2: &str = "1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4";

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn within(elapsed: Duration, limit_secs: f64, what: &str) {
    assert!(
        elapsed.as_secs_f64() < limit_secs,
        "{what} took {elapsed:?}, limit {limit_secs} s"
    );
}

fn random_word(rng: &mut StdRng) -> Word {
    let n = rng.gen_range(1..=8i64);
    let len = rng.gen_range(0..=64);
    let v: Vec<i64> = (0..len)
        .map(|_| rng.gen_range(1..=n) * if rng.gen() { 1 } else { -1 })
        .collect();
    Word::from_signed(&v).unwrap()
}

fn c1_word_axioms() -> String {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1);
    let count = 100_000;
    for _ in 0..count {
        let (a, b, c) = (
            random_word(&mut rng),
            random_word(&mut rng),
            random_word(&mut rng),
        );
        assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        assert_eq!(a.concat(&Word::empty()), a);
        assert!(a.concat(&a.invert()).is_empty() && a.invert().concat(&a).is_empty());
        let s = NailSet::from_bits(rng.gen_range(0..256));
        assert_eq!(
            a.concat(&b).restrict(s),
            a.restrict(s).concat(&b.restrict(s))
        );
        assert_eq!(a.invert().restrict(s), a.restrict(s).invert());
        assert_eq!(
            a.commutator(&b).restrict(s),
            a.restrict(s).commutator(&b.restrict(s))
        );
    }
    within(start.elapsed(), 10.0, "word suites");
    format!("{count} random word triples in {:.2?}", start.elapsed())
}

fn c2_split_matrix() -> String {
    let start = Instant::now();
    let mut cells = 0;
    for n in 1..=8u8 {
        for k in 1..=n as u32 {
            let r = demaine_split(k, n).unwrap();
            let v = Spec::threshold(k, n)
                .unwrap()
                .check(&r.word, CheckMode::Full)
                .unwrap();
            assert!(v.is_ok(), "{k}-of-{n}: {v}");
            cells += 1;
        }
    }
    assert_eq!(cells, 36);
    within(start.elapsed(), 60.0, "validity matrix");
    format!("{cells} cells in {:.2?}", start.elapsed())
}

fn c3_closed_form() -> String {
    for i in 2..=6u32 {
        let built = demaine_split(2, 1 << i).unwrap().unreduced as u128;
        let closed = (8 * 6u128.pow(i) - 12 * 4u128.pow(i)) / 3;
        assert_eq!(built, closed, "i={i}");
        assert_eq!(l2_closed_form(i).unwrap(), closed);
    }
    assert_eq!(demaine_split(2, 4).unwrap().unreduced, 32);
    assert_eq!(l2_closed_form(10).unwrap(), 157_048_832);
    "i=2..6 built, i=10 arithmetic".into()
}

fn c4_corank2() -> String {
    let start = Instant::now();
    let mut lengths = Vec::new();
    for i in 1..=5u32 {
        let n = 1u8 << i;
        let r = wastlund_corank2(n).unwrap();
        let expected = 6 * (i as u64 - 1) * (1 << i);
        assert_eq!((r.unreduced, r.reduced), (expected, expected), "n={n}");
        let mode = if i <= 3 {
            CheckMode::Full
        } else {
            CheckMode::Essential
        };
        let v = Spec::threshold(n as u32 - 2, n)
            .unwrap()
            .check(&r.word, mode)
            .unwrap();
        assert!(v.is_ok(), "n={n}: {v}");
        lengths.push(r.reduced);
    }
    within(start.elapsed(), 60.0, "co-rank-2");
    format!("lengths {lengths:?}")
}

fn c5_extension() -> String {
    let ladder: Vec<u64> = extension_ladder()
        .iter()
        .map(|s| s.report.reduced)
        .collect();
    assert_eq!(ladder, [24, 22, 20, 18]);
    let eighteen = &extension_ladder()[3].report.word;
    assert_eq!(eighteen.to_string(), "1+2+3-1-2-3+4+2+1-2-1+3+1+2-3-2-1-4");

    let b = Expr::comm(
        Expr::comm(Expr::n(1), Expr::n(2)),
        Expr::comm(Expr::n(3), Expr::n(4)),
    );
    let step = extension_expr(Expr::from_word(eighteen), b, Nail::new(5).unwrap());
    let flat = step.flatten();
    let v = Spec::threshold(2, 5)
        .unwrap()
        .check(&flat.word, CheckMode::Full)
        .unwrap();
    assert!(v.is_ok(), "n=5 step: {v}");
    let got = (flat.symbol_count, flat.word.len() as u64);
    assert_eq!(got, (58, 54), "n=5 step (unreduced, reduced)");
    "ladder 24/22/20/18, n=5 step 58/54".into()
}

fn c6_catalog() -> String {
    let lengths = |name: &str| {
        let r = catalog(name).unwrap();
        assert!(r.verdict.is_ok(), "{name}: {}", r.verdict);
        (r.unreduced, r.reduced)
    };
    assert_eq!(lengths("demaine80"), (80, 68));
    assert_eq!(lengths("dropped52").1, 52);
    assert_eq!(lengths("atoms44").1, 44);
    assert_eq!(lengths("huffman-good32").0, 32);
    assert_eq!(lengths("huffman-bad44").0, 44);
    let tree = catalog("demaine80").unwrap().expr;
    let audit = node_vanish_audit(&tree, &Spec::threshold(2, 4).unwrap()).unwrap();
    assert!(audit
        .harmless
        .iter()
        .any(|e| e.removed == NailSet::of(&[3, 4])));
    assert!(audit
        .vanishing
        .iter()
        .chain(&audit.harmless)
        .all(|e| e.removed.len() >= 2));
    assert!(audit.is_clean());
    format!(
        "{} harmless collapses, none at size <= 1",
        audit.harmless.len()
    )
}

fn minimum(k: u32, n: u8, max: usize, cfg: &SearchConfig) -> SearchOutcome {
    match find_minimum(&Spec::threshold(k, n).unwrap(), max, cfg).unwrap() {
        Minimum::Found(o) => o,
        Minimum::NotFound { .. } => panic!("{k}-of-{n}: nothing up to {max}"),
    }
}

fn c7_minima() -> String {
    let cfg = SearchConfig::long();
    let classes = |o: &SearchOutcome| (o.length, o.solutions.len());
    assert_eq!(classes(&minimum(2, 3, 16, &cfg)), (6, 1));
    let one_of_three = minimum(1, 3, 16, &cfg);
    assert_eq!(classes(&one_of_three), (10, 1));
    assert_eq!(one_of_three.solutions[0].to_string(), "1+2-1-2+3+2+1-2-1-3");
    let one_of_four = minimum(1, 4, 16, &cfg);
    assert_eq!(classes(&one_of_four), (16, 1));
    let balanced = Expr::comm(
        Expr::comm(Expr::n(1), Expr::n(2)),
        Expr::comm(Expr::n(3), Expr::n(4)),
    );
    assert!(equivalent(one_of_four.solutions[0].word(), &balanced.word()).unwrap());
    let two_of_four = minimum(2, 4, 16, &cfg);
    assert_eq!(classes(&two_of_four), (16, 2));
    for printed in [W1, W2] {
        let hits = two_of_four
            .solutions
            .iter()
            .filter(|s| equivalent(s.word(), &word(printed)).unwrap());
        assert_eq!(hits.count(), 1, "{printed}");
    }

    let start = Instant::now();
    let spec = Spec::threshold(2, 4).unwrap();
    for len in 1..=12 {
        assert!(search_length(&spec, len, &SearchConfig::default())
            .unwrap()
            .solutions
            .is_empty());
    }
    within(start.elapsed(), 60.0, "2-of-4 up to 12");
    format!("2-of-4 lengths <= 12 eliminated in {:.2?}", start.elapsed())
}

fn c8_length14() -> String {
    let spec = Spec::threshold(2, 4).unwrap();
    let start = Instant::now();
    let single = search_length(&spec, 14, &SearchConfig::long()).unwrap();
    let elapsed = start.elapsed();
    assert!(single.solutions.is_empty());
    within(elapsed, 1800.0, "length 14");
    let parts = (0..8)
        .map(|i| search_length(&spec, 14, &SearchConfig::long().shard(8, i)).unwrap())
        .collect();
    let merged = SearchOutcome::merge(parts).unwrap();
    assert_eq!(merged, single);
    format!(
        "{} nodes in {elapsed:.2?}, 8 shards agree",
        single.nodes_explored
    )
}

fn c9_ratios() -> String {
    let mut last = Vec::new();
    for k in 2..=4 {
        let devs: Vec<f64> = length_table(k, 12)
            .unwrap()
            .iter()
            .filter_map(|r| r.ratio)
            .map(|x| (x - 6.0).abs())
            .collect();
        assert!(devs.windows(2).all(|p| p[1] < p[0]), "k={k}: {devs:?}");
        last.push(format!("k={k} {:.3}", 6.0 + devs.last().unwrap()));
    }
    format!("ratio at i=12: {}", last.join(", "))
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 9] = [
        ("word axioms and removal homomorphism", c1_word_axioms),
        ("binary splitting validity matrix", c2_split_matrix),
        ("binary splitting closed form", c3_closed_form),
        ("co-rank-2 exact lengths", c4_corank2),
        ("extension ladder and n=5 step", c5_extension),
        ("2-of-4 catalog and audit", c6_catalog),
        ("search minima", c7_minima),
        ("2-of-4 length-14 elimination", c8_length14),
        ("successive ratios approach 6", c9_ratios),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!(
                    "FAIL criterion {}: {name}: {}",
                    i + 1,
                    msg.replace('\n', " ")
                );
            }
        }
    }
    let _ = panic::take_hook();
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
