use std::collections::BTreeSet;

use latwidth::classify::{all_params, ENUMERATION_LIMIT};
use latwidth::{
    canonical_form, classify_polygon, enumerate_minimal, enumerate_with_stats, generate,
    Classification, Error, Tag,
};

/// Class counts for d = 5..=10. Values for d <= 6 were cross-checked
/// against the exhaustive search; d = 10 is the recorded regression value.
const COUNTS: [(i64, usize); 6] = [(5, 47), (6, 126), (7, 271), (8, 628), (9, 1285), (10, 2656)];

#[test]
fn class_counts_regression() {
    for (d, n) in COUNTS {
        assert_eq!(enumerate_minimal(d).unwrap().len(), n, "d={d}");
    }
}

#[test]
fn output_is_sorted_and_independent_of_jobs() {
    let a = enumerate_with_stats(7, 1).unwrap();
    let b = enumerate_with_stats(7, 5).unwrap();
    let ka: Vec<_> = a.classes.iter().map(|c| c.key().to_string()).collect();
    let kb: Vec<_> = b.classes.iter().map(|c| c.key().to_string()).collect();
    assert_eq!(ka, kb);
    assert_eq!(a.stats, b.stats);
    let order: Vec<_> = a
        .classes
        .iter()
        .map(|c| (c.point_count, c.key().to_string()))
        .collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);
    assert_eq!(ka.iter().collect::<BTreeSet<_>>().len(), ka.len());
}

#[test]
fn stats_account_for_every_tuple() {
    for d in 2..=9 {
        let e = enumerate_with_stats(d, 4).unwrap();
        let tuples: usize = e.stats.values().map(|s| s.tuples).sum();
        assert_eq!(tuples, all_params(d).len());
        let classes: usize = e.stats.values().map(|s| s.classes).sum();
        assert_eq!(classes, e.classes.len());
        for s in e.stats.values() {
            assert_eq!(
                s.tuples,
                s.wrong_width + s.not_minimal + s.collisions + s.classes
            );
            // Every in-range tuple produced a minimal polygon of width d.
            assert_eq!((s.wrong_width, s.not_minimal), (0, 0), "d={d}");
        }
    }
}

#[test]
fn representative_is_the_smallest_tuple() {
    let classes = enumerate_minimal(6).unwrap();
    for params in all_params(6) {
        let key = canonical_form(&generate(&params).unwrap())
            .key()
            .to_string();
        let class = classes.iter().find(|c| c.key() == key).unwrap();
        assert!((class.tag(), &class.params) <= (params.tag(), &params));
    }
}

#[test]
fn families_appear_from_their_first_width() {
    let tags = |d| {
        enumerate_minimal(d)
            .unwrap()
            .iter()
            .map(|c| c.tag())
            .collect::<BTreeSet<Tag>>()
    };
    assert_eq!(tags(1), BTreeSet::from([Tag::T1]));
    assert!(tags(6).len() >= 4);
}

#[test]
fn classify_round_trips_every_class() {
    for d in 1..=6 {
        for c in enumerate_minimal(d).unwrap() {
            match classify_polygon(&c.polygon()).unwrap() {
                Classification::Minimal { class, witness } => {
                    assert_eq!(class.key(), c.key());
                    assert_eq!(c.polygon().apply(&witness).unwrap(), class.polygon());
                }
                other => panic!("d={d}: {other:?}"),
            }
        }
    }
}

#[test]
fn limits_are_enforced() {
    assert!(matches!(
        enumerate_minimal(ENUMERATION_LIMIT + 1),
        Err(Error::OutOfRange(_))
    ));
    assert!(matches!(enumerate_minimal(-1), Err(Error::OutOfRange(_))));
}
