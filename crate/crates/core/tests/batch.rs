//! End-to-end batch runs over the default corpus: fixed report order,
//! deterministic output, and the expected verdict profile.

use deltakit::harness::{batch, default_corpus, Verdict};
use deltakit::DEFAULT_ENUM_BUDGET;

#[test]
fn the_default_batch_is_deterministic_with_the_expected_verdicts() {
    let a = batch(42, DEFAULT_ENUM_BUDGET).unwrap();

    // fixed merge order, independent of execution interleaving
    let heads: Vec<&str> = a.reports.iter().take(7).map(|r| r.check.as_str()).collect();
    assert_eq!(heads, ["initial", "interval", "indecomposable", "A1", "A3", "A3", "A4"]);
    assert_eq!(a.reports.last().unwrap().check, "intervalUniqueness");

    let corpus = default_corpus(42).unwrap();
    let count = |name: &str| a.reports.iter().filter(|r| r.check == name).count();
    assert_eq!(count("A5"), corpus.categories.len());
    assert_eq!(count("A6"), 3);
    assert_eq!(count("A7"), 16);
    assert_eq!(count("hmono"), corpus.categories.len() + corpus.relcategories.len());
    assert_eq!(count("intervalUniqueness"), 1);

    // nothing fails; the two ambient statements stay unverifiable, and the
    // h-mono instances that are not complete name their hypothesis
    for r in &a.reports {
        match r.check.as_str() {
            "A1" | "A4" => {
                assert_eq!(r.verdict, Verdict::Unverifiable);
                assert!(!r.hypothesis_notes.is_empty());
            }
            "hmono" => {
                assert!(matches!(r.verdict, Verdict::Pass | Verdict::Unverifiable));
                if r.verdict == Verdict::Unverifiable {
                    assert!(r.hypothesis_notes.iter().any(|n| n.contains("complete")));
                }
            }
            _ => assert!(r.passed(), "{} failed: {:?}", r.check, r.witnesses),
        }
    }

    // every report names the corpus it quantified over
    assert!(a
        .reports
        .iter()
        .all(|r| r.hypothesis_notes.iter().any(|n| n.starts_with("corpus:"))));

    // a second run serializes identically, wrapper included
    let b = batch(42, DEFAULT_ENUM_BUDGET).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn reseeding_changes_only_the_seeded_instances() {
    let a = batch(42, DEFAULT_ENUM_BUDGET).unwrap();
    let c = batch(7, DEFAULT_ENUM_BUDGET).unwrap();
    assert_eq!(a.reports.len(), c.reports.len());
    assert_eq!(a.seed, 42);
    assert_eq!(c.seed, 7);
    for (x, y) in a.reports.iter().zip(&c.reports) {
        assert_eq!(x.check, y.check);
        assert_eq!(x.verdict == Verdict::Fail, y.verdict == Verdict::Fail);
    }
}
