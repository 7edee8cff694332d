use num_rational::Ratio;
use numtrans::eval::{judge, load_dataset, load_hypotheses, pass_rate, render_table, DatasetItem, Hypothesis, Label};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn load() -> (Vec<DatasetItem>, Vec<Hypothesis>) {
    (
        load_dataset(fixture("examples.jsonl")).unwrap(),
        load_hypotheses(fixture("examples_hyps.jsonl")).unwrap(),
    )
}

#[test]
fn pass_rate_equals_hand_count() {
    let (items, hyps) = load();
    assert_eq!(items.len(), 20);
    let hand = hyps.iter().filter(|h| h.label == Some(Label::Pass)).count() as u64;
    assert_eq!(hand, 15);
    let r = pass_rate(&items, &hyps).unwrap();
    assert_eq!(r.pass_rate(), Some(Ratio::new(hand, 20)));
    for v in &r.items {
        let h = hyps.iter().find(|h| h.id == v.id).unwrap();
        assert_eq!(Some(v.judgement.passed), h.label.map(|l| l == Label::Pass), "{}", v.id);
    }
}

#[test]
fn table_lists_both_directions() {
    let (items, hyps) = load();
    let t = render_table(&pass_rate(&items, &hyps).unwrap());
    assert!(t.contains("EN-ZH"), "{t}");
    assert!(t.contains("ZH-EN"), "{t}");
    assert!(t.contains("75.00 (15/20)"), "{t}");
}

#[test]
fn result_is_invariant_under_permutation() {
    let (items, hyps) = load();
    let base = pass_rate(&items, &hyps).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let mut i2 = items.clone();
        let mut h2 = hyps.clone();
        i2.shuffle(&mut rng);
        h2.shuffle(&mut rng);
        assert_eq!(pass_rate(&i2, &h2).unwrap(), base);
    }
}

#[test]
fn missing_or_stray_hypotheses_are_errors() {
    let (items, mut hyps) = load();
    let last = hyps.pop().unwrap();
    assert!(pass_rate(&items, &hyps).is_err());
    hyps.push(last);
    hyps.push(Hypothesis {
        id: "nope".into(),
        hypothesis: String::new(),
        label: None,
    });
    assert!(pass_rate(&items, &hyps).is_err());
}

proptest! {
    /// Extra text around a hypothesis never turns a pass into a fail.
    #[test]
    fn judge_is_monotone_in_hypothesis_text(idx in 0usize..20, prefix in "\\PC{0,12}", suffix in "\\PC{0,12}") {
        let (items, hyps) = load();
        let item = &items[idx];
        let h = &hyps.iter().find(|h| h.id == item.id).unwrap().hypothesis;
        let before = judge(item, h).passed;
        let after = judge(item, &format!("{prefix}{h}{suffix}")).passed;
        prop_assert!(!before || after);
    }

    /// Appending a reference for every target always passes.
    #[test]
    fn appending_references_passes(idx in 0usize..20, pick in any::<prop::sample::Index>()) {
        let (items, hyps) = load();
        let item = &items[idx];
        let mut h = hyps.iter().find(|h| h.id == item.id).unwrap().hypothesis.clone();
        for t in &item.targets {
            h.push(' ');
            h.push_str(pick.get(&t.references));
        }
        prop_assert!(judge(item, &h).passed);
    }

    /// Dropping targets or adding references never lowers a verdict.
    #[test]
    fn judge_is_monotone_in_targets(idx in 0usize..20, extra in "[a-z0-9]{1,6}") {
        let (items, hyps) = load();
        let item = &items[idx];
        let h = &hyps.iter().find(|h| h.id == item.id).unwrap().hypothesis;
        let before = judge(item, h).passed;
        let mut looser = item.clone();
        looser.targets.truncate(1);
        for t in &mut looser.targets {
            t.references.push(extra.clone());
        }
        prop_assert!(!before || judge(&looser, h).passed);
    }
}
