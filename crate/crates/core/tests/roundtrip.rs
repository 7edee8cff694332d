mod support;

use numtrans::format::{render_digits, render_forms, render_large_unit};
use numtrans::{parse_number, CanonicalNumeral, Lang, NumericType, NumericValue};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(c: &CanonicalNumeral) -> Vec<String> {
    let mut bad = Vec::new();
    for lang in [Lang::En, Lang::Zh] {
        let forms = render_forms(c, lang);
        if forms.is_empty() {
            bad.push(format!("{c}: no {lang:?} forms"));
        }
        if c.kind() != NumericType::Formula {
            let d = render_digits(c, lang).unwrap();
            if !forms.contains(&d) {
                bad.push(format!("{c}: digit form {d} not among {lang:?} forms"));
            }
        }
        for f in forms {
            match parse_number(&f, lang) {
                Ok(p) if &p == c => {}
                other => bad.push(format!("{c}: {lang:?} form {f:?} -> {other:?}")),
            }
        }
    }
    bad
}

#[test]
fn random_canonicals_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    for _ in 0..10_000 {
        bad.extend(check(&support::random_canonical(&mut rng)));
    }
    bad.truncate(40);
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

proptest! {
    #[test]
    fn large_unit_rendering_is_exact(mantissa in 1u64..1_000_000, places in 0i64..4, k in 0i64..16) {
        let v = NumericValue::from(mantissa).scale(k - places);
        let c = CanonicalNumeral::scalar(v);
        for lang in [Lang::En, Lang::Zh] {
            let s = render_large_unit(&c, lang);
            prop_assert_eq!(parse_number(&s, lang).unwrap(), c.clone(), "{}", s);
        }
    }

    #[test]
    fn scale_words_multiply_exactly(mantissa in 1u64..100_000, places in 0i64..5, unit in 0usize..3) {
        let (word, k) = [("million", 6), ("billion", 9), ("trillion", 12)][unit];
        let m = NumericValue::from(mantissa).scale(-places);
        let c = parse_number(&format!("{} {word}", m.to_plain_string()), Lang::En).unwrap();
        prop_assert_eq!(c.value().unwrap(), &m.scale(k));
    }
}
