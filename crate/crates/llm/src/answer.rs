//! Tolerant reader for the bracketed pair lists models return, e.g.
//! `output:[("72.2 billion", "722亿")]`, possibly wrapped in prose, with
//! any common quote style, full-width punctuation and trailing commas.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no pair list found in answer: {reason}")]
pub struct AnswerError {
    pub reason: String,
    pub raw: String,
}

/// Parses the first well-formed list of pairs in `raw`.
pub fn parse_pair_list(raw: &str) -> Result<Vec<(String, String)>, AnswerError> {
    let chars: Vec<char> = raw.chars().collect();
    let mut last_err = "no `[` or `(` in answer".to_string();
    for (i, &c) in chars.iter().enumerate() {
        if c != '[' && c != '［' {
            continue;
        }
        let mut p = Reader { s: &chars, pos: i };
        match p.list() {
            Ok(pairs) => return Ok(pairs),
            Err(e) => last_err = e,
        }
    }
    // Bare tuples with no enclosing list.
    if let Some(i) = chars.iter().position(|&c| c == '(' || c == '（') {
        let mut p = Reader { s: &chars, pos: i };
        match p.items(None) {
            Ok(pairs) if !pairs.is_empty() => return Ok(pairs),
            Ok(_) => {}
            Err(e) => last_err = e,
        }
    }
    Err(AnswerError {
        reason: last_err,
        raw: raw.to_string(),
    })
}

struct Reader<'a> {
    s: &'a [char],
    pos: usize,
}

fn is_open(c: char) -> Option<char> {
    match c {
        '(' => Some(')'),
        '（' => Some('）'),
        '[' => Some(']'),
        '［' => Some('］'),
        _ => None,
    }
}

fn is_comma(c: char) -> bool {
    matches!(c, ',' | '，' | '、')
}

fn is_close(c: char) -> bool {
    matches!(c, ')' | '）' | ']' | '］')
}

impl Reader<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.s.get(self.pos + k).copied()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err<T>(&self, what: &str) -> Result<T, String> {
        Err(format!("{what} at character {}", self.pos))
    }

    fn list(&mut self) -> Result<Vec<(String, String)>, String> {
        let close = match self.peek().and_then(is_open) {
            Some(c) => c,
            None => return self.err("expected `[`"),
        };
        self.pos += 1;
        self.items(Some(close))
    }

    /// Pairs up to `close`, or to the end of the last tuple when `None`.
    fn items(&mut self, close: Option<char>) -> Result<Vec<(String, String)>, String> {
        let mut out = Vec::new();
        loop {
            self.ws();
            match self.peek() {
                Some(c) if Some(c) == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(c) if is_open(c).is_some() => out.push(self.pair()?),
                Some(c) if is_comma(c) && !out.is_empty() => self.pos += 1,
                _ if close.is_none() && !out.is_empty() => return Ok(out),
                None => return self.err("unterminated list"),
                Some(_) => return self.err("expected a pair"),
            }
        }
    }

    fn pair(&mut self) -> Result<(String, String), String> {
        let close = is_open(self.peek().unwrap_or(' ')).ok_or_else(|| format!("expected `(` at character {}", self.pos))?;
        self.pos += 1;
        self.ws();
        let a = self.string()?;
        self.ws();
        match self.peek() {
            Some(c) if is_comma(c) => self.pos += 1,
            _ => return self.err("expected `,` between the two sides"),
        }
        self.ws();
        let b = self.string()?;
        self.ws();
        if self.peek().is_some_and(is_comma) {
            self.pos += 1;
            self.ws();
        }
        if self.peek() != Some(close) {
            return self.err(&format!("expected `{close}`"));
        }
        self.pos += 1;
        Ok((a, b))
    }

    /// True when the next non-space character ends a string.
    fn at_delimiter(&self, from: usize) -> bool {
        let mut i = from;
        while self.s.get(i).is_some_and(|c| c.is_whitespace()) {
            i += 1;
        }
        self.s.get(i).is_none_or(|&c| is_comma(c) || is_close(c))
    }

    fn string(&mut self) -> Result<String, String> {
        let (closers, skip): (&[&str], usize) = match (self.peek(), self.peek_at(1)) {
            (Some('`'), Some('`')) => (&["\"", "''", "”"], 2),
            (Some('"'), _) => (&["\""], 1),
            (Some('\''), _) => (&["'"], 1),
            (Some('“'), _) => (&["”", "\""], 1),
            (Some('‘'), _) => (&["’", "'"], 1),
            (Some('「'), _) => (&["」"], 1),
            (Some('`'), _) => (&["`"], 1),
            _ => return self.bare(),
        };
        let start = self.pos;
        self.pos += skip;
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c == '\\' {
                if let Some(n) = self.peek_at(1) {
                    out.push(n);
                    self.pos += 2;
                    continue;
                }
            }
            for close in closers {
                let len = close.chars().count();
                let hit = close.chars().enumerate().all(|(k, ch)| self.peek_at(k) == Some(ch));
                if hit && self.at_delimiter(self.pos + len) {
                    self.pos += len;
                    return Ok(out);
                }
            }
            out.push(c);
            self.pos += 1;
        }
        self.pos = start;
        self.err("unterminated string")
    }

    fn bare(&mut self) -> Result<String, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| !is_comma(c) && !is_close(c) && is_open(c).is_none()) {
            self.pos += 1;
        }
        let s: String = self.s[start..self.pos].iter().collect();
        let s = s.trim();
        if s.is_empty() {
            return self.err("expected a string");
        }
        Ok(s.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn example_answer() {
        let want = pairs(&[("72.2 billion", "722亿")]);
        assert_eq!(parse_pair_list("output:[(\"72.2 billion\", \"722亿\")]").unwrap(), want);
        assert_eq!(parse_pair_list("[(``72.2 billion\", ``722亿\")]").unwrap(), want);
        assert_eq!(parse_pair_list("[('72.2 billion', '722亿'),]").unwrap(), want);
        assert_eq!(parse_pair_list("Here you go:\n[\n  [“72.2 billion”，“722亿”]\n]\nDone.").unwrap(), want);
        assert_eq!(parse_pair_list("（72.2 billion, 722亿）").unwrap(), want);
    }

    #[test]
    fn empty_and_order() {
        assert!(parse_pair_list("[]").unwrap().is_empty());
        assert_eq!(
            parse_pair_list("[(\"7\", \"7\"), (\"72.2 billion\", \"722亿\")]").unwrap(),
            pairs(&[("7", "7"), ("72.2 billion", "722亿")])
        );
    }

    #[test]
    fn skips_bracketed_prose() {
        let raw = "For the [Source]-[Target] pair: [(\"1 million\", \"100万\")]";
        assert_eq!(parse_pair_list(raw).unwrap(), pairs(&[("1 million", "100万")]));
    }

    #[test]
    fn inner_quotes_without_escapes() {
        let raw = "[('the 90's', '90年代')]";
        assert_eq!(parse_pair_list(raw).unwrap(), pairs(&[("the 90's", "90年代")]));
    }

    #[test]
    fn failures_carry_raw_text() {
        for raw in ["", "no list here", "[(\"a\"", "[(\"a\" \"b\")]", "[(", "[\u{0}"] {
            let e = parse_pair_list(raw).unwrap_err();
            assert_eq!(e.raw, raw);
        }
    }
}
