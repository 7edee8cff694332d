//! Randomized serializer for pair-list answers, shared with the workspace
//! acceptance suite.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const ALPHABET: &[char] = &[
    'a', 'b', 'm', 'i', 'l', 'o', 'n', ' ', '0', '1', '2', '7', '9', '.', ',', '%', '-', '/', '$', '(', ')', '[', ']',
    '"', '\'', '\\', '万', '亿', '点', '零', '，', '、', '：', '“', '”', '‘', '’', '`',
];

pub fn random_string(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(1..12);
    let s: String = (0..n).map(|_| *ALPHABET.choose(rng).unwrap()).collect();
    if s.trim().is_empty() {
        "0".into()
    } else {
        s
    }
}

/// One quoted string in a randomly chosen style. Backslashes and every
/// character the reader accepts as a closer for that style are escaped.
fn quote(s: &str, rng: &mut ChaCha8Rng) -> String {
    let (open, close, special): (&str, &str, &[char]) = match rng.gen_range(0..6) {
        0 => ("\"", "\"", &['"']),
        1 => ("'", "'", &['\'']),
        2 => ("``", "\"", &['"', '”', '\'']),
        3 => ("“", "”", &['”', '"']),
        4 => ("‘", "’", &['’', '\'']),
        _ => ("「", "」", &['」']),
    };
    let mut out = String::from(open);
    for c in s.chars() {
        if c == '\\' || special.contains(&c) {
            out.push('\\');
        }
        out.push(c);
    }
    out.push_str(close);
    out
}

fn bare_ok(s: &str) -> bool {
    s == s.trim()
        && !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '.' || c == ' ' || c == '万' || c == '亿')
        && !s.starts_with('`')
}

fn ws(rng: &mut ChaCha8Rng) -> &'static str {
    ["", "", " ", "  ", "\n", "\n  ", "\t"].choose(rng).unwrap()
}

pub fn serialize(pairs: &[(String, String)], rng: &mut ChaCha8Rng) -> String {
    let mut out = String::new();
    if rng.gen_bool(0.5) {
        out.push_str(["output:", "Here are the pairs:\n", "Sure! ", "结果："].choose(rng).unwrap());
    }
    out.push('[');
    for (i, (a, b)) in pairs.iter().enumerate() {
        if i > 0 {
            out.push_str(ws(rng));
            out.push_str([",", "，"].choose(rng).unwrap());
        }
        out.push_str(ws(rng));
        let (open, close) = *[("(", ")"), ("[", "]"), ("（", "）")].choose(rng).unwrap();
        out.push_str(open);
        for (k, s) in [a, b].into_iter().enumerate() {
            if k == 1 {
                out.push_str(ws(rng));
                out.push_str([",", "，"].choose(rng).unwrap());
            }
            out.push_str(ws(rng));
            if bare_ok(s) && rng.gen_bool(0.2) {
                out.push_str(s);
            } else {
                out.push_str(&quote(s, rng));
            }
        }
        out.push_str(ws(rng));
        if rng.gen_bool(0.1) {
            out.push(',');
        }
        out.push_str(close);
    }
    out.push_str(ws(rng));
    if !pairs.is_empty() && rng.gen_bool(0.3) {
        out.push(',');
    }
    out.push(']');
    if rng.gen_bool(0.5) {
        out.push_str(["", ".", "\nHope this helps.", " 以上。"].choose(rng).unwrap());
    }
    out
}

/// `n` random pair lists with their serialized text.
pub fn cases(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Vec<(String, String)>, String)> {
    (0..n)
        .map(|_| {
            let k = rng.gen_range(0..5);
            let pairs: Vec<(String, String)> = (0..k).map(|_| (random_string(rng), random_string(rng))).collect();
            let text = serialize(&pairs, rng);
            (pairs, text)
        })
        .collect()
}
