//! Workspace acceptance suite: one PASS/FAIL line per criterion. Exits
//! nonzero if any criterion fails.

#[path = "../../core/tests/support/mod.rs"]
mod support;
#[path = "../../llm/tests/support/mod.rs"]
mod fuzz;

use std::time::{Duration, Instant};

use numtrans::eval::{judge, load_dataset, load_hypotheses, pass_rate, Label};
use numtrans::format::{render_digits, render_forms};
use numtrans::normalize::normalize_for_match;
use numtrans::verify::{post_edit, Style};
use numtrans::{parse_number, scan, CanonicalNumeral, Direction, Lang, NumericType, NumericValue};
use numtrans_llm::mock::{MockServer, Reply};
use numtrans_llm::{parse_pair_list, LlmClient, LlmConfig, Strategy};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const REVENUE_SRC: &str = "某公司去年的年收入超过了1000亿美元，净利润达到5000万美元，总资产达到三千五百亿美元，其中包括134亿美元的现金储备。";
const REVENUE_MT: &str = "A company's revenue last year exceeded $10 billion, net profit reached $50 million, and total assets reached $35 billion, including $3.4 billion in cash reserves.";

type Outcome = Result<String, String>;

fn root(rel: &str) -> String {
    format!("{}/../../{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn revenue_case() -> Outcome {
    let started = Instant::now();
    let r = post_edit(REVENUE_SRC, REVENUE_MT, Direction::ZhEn, Style::LargeUnit);
    let elapsed = started.elapsed();
    let missing: Vec<&str> = ["100 billion", "50 million", "350 billion", "13.4 billion"]
        .into_iter()
        .filter(|v| !r.edited.contains(v))
        .collect();
    if !missing.is_empty() {
        return Err(format!("missing {missing:?} in {:?}", r.edited));
    }
    if r.edit_count != 3 {
        return Err(format!("edit_count {} != 3", r.edit_count));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("4/4 values, 3 edits, {elapsed:?}"))
}

fn type_examples() -> Outcome {
    let items = load_dataset(root("fixtures/examples.jsonl")).map_err(|e| e.to_string())?;
    let mut good = 0;
    let mut bad = Vec::new();
    for item in &items {
        let t = &item.targets[0];
        let example = t.source_span.slice(&item.source).unwrap_or_default();
        let Ok(canonical) = parse_number(example, item.direction.source()) else {
            bad.push(format!("{}: example {example:?} does not parse", item.id));
            continue;
        };
        let forms: Vec<String> = render_forms(&canonical, item.direction.target())
            .iter()
            .map(|f| normalize_for_match(f))
            .collect();
        let mut cell_ok = canonical.kind() == item.kind;
        for r in &t.references {
            let parses = parse_number(r, item.direction.target()).ok().as_ref() == Some(&canonical);
            let rendered = forms.contains(&normalize_for_match(r));
            if !parses || !rendered {
                bad.push(format!("{}: {r:?} parses={parses} rendered={rendered}", item.id));
                cell_ok = false;
            }
        }
        good += usize::from(cell_ok);
    }
    if items.len() == 20 && good == 20 {
        Ok("20/20 cells".into())
    } else {
        Err(format!("{good}/{} cells; {}", items.len(), bad.join("; ")))
    }
}

fn oracles() -> Outcome {
    let scalar = |n: u64| CanonicalNumeral::scalar(NumericValue::from(n));
    let mut zh: Vec<u64> = (0..100_000).collect();
    for k in 4..=12 {
        zh.extend((1..1000u64).map(|d| d * 10u64.pow(k)));
    }
    let zh_bad: Vec<u64> = zh
        .iter()
        .copied()
        .filter(|&n| parse_number(&support::zh_place_value(n), Lang::Zh).ok() != Some(scalar(n)))
        .collect();
    let en_bad: Vec<u64> = (0..10_000)
        .filter(|&n| parse_number(&support::en_words_oracle(n), Lang::En).ok() != Some(scalar(n)))
        .collect();
    if zh_bad.is_empty() && en_bad.is_empty() {
        Ok(format!("zh {}/{}, en 10000/10000", zh.len(), zh.len()))
    } else {
        Err(format!("zh failures {:?}, en failures {:?}", &zh_bad[..zh_bad.len().min(5)], &en_bad[..en_bad.len().min(5)]))
    }
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut forms = 0usize;
    let mut bad = Vec::new();
    for _ in 0..10_000 {
        let c = support::random_canonical(&mut rng);
        for lang in [Lang::En, Lang::Zh] {
            let all = render_forms(&c, lang);
            if all.is_empty() {
                bad.push(format!("{c}: no {lang:?} forms"));
            }
            if c.kind() != NumericType::Formula && !render_digits(&c, lang).is_ok_and(|d| all.contains(&d)) {
                bad.push(format!("{c}: {lang:?} digit form missing"));
            }
            for f in all {
                forms += 1;
                if parse_number(&f, lang).ok().as_ref() != Some(&c) {
                    bad.push(format!("{c}: {f:?}"));
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("10000 canonicals, {forms} forms"))
    } else {
        Err(format!("{} failures, e.g. {}", bad.len(), bad[..bad.len().min(3)].join("; ")))
    }
}

fn values(text: &str, lang: Lang) -> Vec<NumericValue> {
    scan(text, lang)
        .into_iter()
        .filter_map(|e| {
            let c = e.canonical;
            c.value().cloned().or_else(|| c.literal().and_then(|l| l.parse().ok()))
        })
        .collect()
}

fn synthetic_pe() -> Outcome {
    let cases = support::corrupted_corpus(&mut ChaCha8Rng::seed_from_u64(2024), 200);
    let injected: usize = cases.iter().map(|c| c.injected.len()).sum();
    let mut fixed = 0;
    let mut bad = Vec::new();
    for c in &cases {
        let tgt = c.direction.target();
        let once = post_edit(&c.source, &c.corrupted, c.direction, Style::LargeUnit);
        let after = values(&once.edited, tgt);
        fixed += c
            .injected
            .iter()
            .filter(|(i, _)| after.get(*i) == Some(&c.truth[*i]))
            .count();
        if after != c.truth || once.edit_count != c.injected.len() {
            bad.push(format!("{:?} -> {:?}", c.corrupted, once.edited));
        }
        let twice = post_edit(&c.source, &once.edited, c.direction, Style::LargeUnit);
        if twice.edit_count != 0 {
            bad.push(format!("second pass edited {:?}", once.edited));
        }
    }
    if cases.len() == 200 && bad.is_empty() && fixed == injected {
        Ok(format!("200 sentences, {fixed}/{injected} injected errors corrected, second pass 0 edits"))
    } else {
        Err(format!("{fixed}/{injected} corrected; {}", bad[..bad.len().min(3)].join("; ")))
    }
}

fn harness() -> Outcome {
    let items = load_dataset(root("fixtures/examples.jsonl")).map_err(|e| e.to_string())?;
    let hyps = load_hypotheses(root("fixtures/examples_hyps.jsonl")).map_err(|e| e.to_string())?;
    let hand = hyps.iter().filter(|h| h.label == Some(Label::Pass)).count() as u64;
    let r = pass_rate(&items, &hyps).map_err(|e| e.to_string())?;
    if r.overall.passed != hand || r.overall.total != 20 {
        return Err(format!("pass rate {}/{} vs hand count {hand}/20", r.overall.passed, r.overall.total));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let (mut i2, mut h2) = (items.clone(), hyps.clone());
        i2.shuffle(&mut rng);
        h2.shuffle(&mut rng);
        if pass_rate(&i2, &h2).ok().as_ref() != Some(&r) {
            return Err("result changed under permutation".into());
        }
    }
    for item in &items {
        let h = &hyps.iter().find(|h| h.id == item.id).ok_or("missing hypothesis")?.hypothesis;
        let before = judge(item, h).passed;
        for pad in ["", " extra words", "，另有123。"] {
            if before && !judge(item, &format!("{pad}{h}{pad}")).passed {
                return Err(format!("{}: padding flipped a pass", item.id));
            }
        }
        let with_refs = item.targets.iter().fold(h.clone(), |acc, t| format!("{acc} {}", t.references[0]));
        if !judge(item, &with_refs).passed {
            return Err(format!("{}: adding references did not pass", item.id));
        }
    }
    Ok(format!("{}/20 equals hand count; monotonicity and permutation invariance hold", r.overall.passed))
}

async fn llm_golden() -> Outcome {
    let server = MockServer::scripted(vec![Reply::Text("[(\"72.2 billion\", \"722亿\")]".into())])
        .await
        .map_err(|e| e.to_string())?;
    let client = LlmClient::new(LlmConfig::new(server.url(), "mock-model")).map_err(|e| e.to_string())?;
    for s in Strategy::ALL {
        client.translate(REVENUE_SRC, Direction::ZhEn, s).await.map_err(|e| e.to_string())?;
    }
    let pairs = client
        .extract_pairs("It will provide EUR 72.2 billion over 7 years in funding.", "它将在7年内提供722亿欧元的资金。")
        .await
        .map_err(|e| e.to_string())?;
    if pairs != [("72.2 billion".to_string(), "722亿".to_string())] {
        return Err(format!("extraction returned {pairs:?}"));
    }
    let bodies = server.bodies();
    for (body, name) in bodies.iter().zip(["base", "icl", "cot", "extract"]) {
        let want = std::fs::read_to_string(root(&format!("crates/llm/tests/golden/{name}.json"))).map_err(|e| e.to_string())?;
        if *body != want {
            return Err(format!("{name} request body differs from golden file"));
        }
    }
    if !bodies[3].contains(r#"output:[(\"72.2 billion\", \"722亿\")]"#) {
        return Err("extraction prompt lacks the one-shot example".into());
    }
    let mut bad = 0;
    for (pairs, text) in fuzz::cases(&mut ChaCha8Rng::seed_from_u64(11), 1000) {
        if parse_pair_list(&text).ok().as_ref() != Some(&pairs) {
            bad += 1;
        }
    }
    if bad > 0 {
        return Err(format!("list parser failed {bad}/1000 fuzzed answers"));
    }
    Ok("4/4 golden bodies, 1000/1000 fuzzed answers".into())
}

fn main() {
    let rt = tokio::runtime::Builder::new_multi_thread().enable_all().build().unwrap();
    let checks: Vec<(&str, Outcome)> = vec![
        ("Post-edit golden case", revenue_case()),
        ("Type example coverage", type_examples()),
        ("Oracle equivalence", oracles()),
        ("Round-trip property", round_trip()),
        ("Synthetic PE corpus", synthetic_pe()),
        ("PR harness", harness()),
        ("llm_client mock", rt.block_on(llm_golden())),
    ];
    let mut failed = 0;
    for (name, outcome) in &checks {
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{}/{} criteria passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
