//! Character-width and punctuation normalization.
//!
//! Every mapping here is one char to one char, so character offsets computed
//! on normalized text are valid in the original.

/// Folds full-width forms to ASCII and unifies tilde variants. Sentence
/// punctuation that is never part of a numeral (`，` `；` `！` `？`) is left
/// alone so scanners can still see clause boundaries.
pub fn fold_char(c: char) -> char {
    match c {
        '，' | '；' | '！' | '？' => c,
        '\u{FF01}'..='\u{FF5E}' => char::from_u32(c as u32 - 0xFEE0).unwrap_or(c),
        '\u{3000}' => ' ',
        '〜' | '∼' => '~',
        '–' | '—' | '‒' | '‐' | '‑' => '-',
        _ => c,
    }
}

pub fn fold_width(s: &str) -> String {
    s.chars().map(fold_char).collect()
}

/// Maps traditional and financial numeral characters onto the simplified
/// forms the Chinese grammar understands.
pub fn fold_zh_alias(c: char) -> char {
    match c {
        '壹' => '一',
        '贰' | '貳' | '弍' => '二',
        '叁' | '參' | '叄' => '三',
        '肆' => '四',
        '伍' => '五',
        '陆' | '陸' => '六',
        '柒' => '七',
        '捌' => '八',
        '玖' => '九',
        '拾' => '十',
        '佰' => '百',
        '仟' => '千',
        '萬' => '万',
        '億' => '亿',
        '兩' => '两',
        '點' => '点',
        '負' => '负',
        _ => c,
    }
}

/// Normalization applied to both hypotheses and references before
/// containment matching: width folding (including sentence punctuation),
/// one dash and one tilde for all their variants, whitespace runs collapsed
/// to one space and trimmed.
pub fn normalize_for_match(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut pending_space = false;
    for c in s.chars() {
        let c = match c {
            '\u{FF01}'..='\u{FF5E}' => char::from_u32(c as u32 - 0xFEE0).unwrap_or(c),
            '−' | '﹣' => '-',
            other => fold_char(other),
        };
        if c.is_whitespace() {
            pending_space = true;
            continue;
        }
        if pending_space && !out.is_empty() {
            out.push(' ');
        }
        pending_space = false;
        out.push(c);
    }
    out
}
