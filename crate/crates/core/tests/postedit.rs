mod support;

use numtrans::verify::{extract_pairs, post_edit, Style, Verdict};
use numtrans::{scan, Direction, NumericValue};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{corrupted_corpus, CorruptedCase, Corruption};

fn values(text: &str, lang: numtrans::Lang) -> Vec<NumericValue> {
    scan(text, lang)
        .into_iter()
        .filter_map(|e| {
            // Long bare digit runs scan as number strings.
            let c = e.canonical;
            c.value().cloned().or_else(|| c.literal().and_then(|l| l.parse().ok()))
        })
        .collect()
}

fn corpus() -> Vec<CorruptedCase> {
    corrupted_corpus(&mut ChaCha8Rng::seed_from_u64(2024), 200)
}

#[test]
fn corpus_is_well_formed() {
    let cases = corpus();
    assert_eq!(cases.len(), 200);
    for kind in [Corruption::TimesTen, Corruption::TenthOf, Corruption::UnitSwap, Corruption::DigitDrop] {
        assert!(cases.iter().any(|c| c.injected.iter().any(|(_, k)| *k == kind)), "{kind:?}");
    }
    for c in &cases {
        let tgt = c.direction.target();
        assert_eq!(values(&c.source, c.direction.source()), c.truth, "{}", c.source);
        assert_eq!(values(&c.clean, tgt), c.truth, "{}", c.clean);
        let corrupted = values(&c.corrupted, tgt);
        assert_eq!(corrupted.len(), c.truth.len(), "{}", c.corrupted);
        for (i, v) in corrupted.iter().enumerate() {
            let injected = c.injected.iter().any(|(j, _)| *j == i);
            assert_eq!(v != &c.truth[i], injected, "{}", c.corrupted);
        }
    }
}

#[test]
fn every_injected_error_is_corrected() {
    for style in [Style::LargeUnit, Style::Digits] {
        for c in corpus() {
            let r = post_edit(&c.source, &c.corrupted, c.direction, style);
            assert_eq!(r.edit_count, c.injected.len(), "{c:?}\n{}", r.edited);
            assert_eq!(r.unresolved, 0, "{c:?}");
            assert_eq!(values(&r.edited, c.direction.target()), c.truth, "{c:?}\n{}", r.edited);
        }
    }
}

#[test]
fn large_unit_style_restores_the_clean_translation() {
    for c in corpus() {
        let r = post_edit(&c.source, &c.corrupted, c.direction, Style::LargeUnit);
        assert_eq!(r.edited, c.clean);
    }
}

#[test]
fn second_pass_edits_nothing() {
    for c in corpus() {
        let once = post_edit(&c.source, &c.corrupted, c.direction, Style::LargeUnit);
        let twice = post_edit(&c.source, &once.edited, c.direction, Style::LargeUnit);
        assert_eq!(twice.edit_count, 0, "{}", once.edited);
        assert_eq!(twice.edited, once.edited);
    }
}

#[test]
fn clean_translations_are_left_alone() {
    for c in corpus() {
        let r = post_edit(&c.source, &c.clean, c.direction, Style::LargeUnit);
        assert_eq!(r.edit_count, 0, "{}", c.clean);
        assert_eq!(r.edited, c.clean);
    }
}

#[test]
fn verdicts_agree_in_both_directions() {
    for c in corpus() {
        let forward = extract_pairs(&c.source, &c.corrupted, c.direction);
        let backward = extract_pairs(&c.corrupted, &c.source, c.direction.reversed());
        let mismatches = |pairs: Vec<numtrans::verify::NumericPair>| {
            pairs
                .into_iter()
                .map(numtrans::verify::verify_pair)
                .filter(|p| matches!(p.verdict, Some(Verdict::Mismatch { .. })))
                .count()
        };
        assert_eq!(mismatches(forward), c.injected.len());
        assert_eq!(mismatches(backward), c.injected.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Swapping the translated amount for any other value is always flagged.
    #[test]
    fn any_changed_amount_is_flagged(seed in any::<u64>(), factor in 2u64..1000) {
        let c = corrupted_corpus(&mut ChaCha8Rng::seed_from_u64(seed), 1).remove(0);
        let tgt = c.direction.target();
        let wrong = c.truth[0].clone() * NumericValue::from(factor);
        let rendered = |v: &NumericValue| numtrans::format::render_large_unit(&numtrans::CanonicalNumeral::scalar(v.clone()), tgt);
        prop_assume!(!c.truth.contains(&wrong));
        let mutated = c.clean.replacen(&rendered(&c.truth[0]), &rendered(&wrong), 1);
        prop_assume!(mutated != c.clean);
        let r = post_edit(&c.source, &mutated, c.direction, Style::LargeUnit);
        prop_assert!(r.edit_count >= 1, "{}", mutated);
        prop_assert_eq!(values(&r.edited, tgt), c.truth);
    }
}

#[test]
fn direction_reversal_is_an_involution() {
    for d in [Direction::EnZh, Direction::ZhEn] {
        assert_eq!(d.reversed().reversed(), d);
        assert_eq!(d.reversed().source(), d.target());
    }
}
