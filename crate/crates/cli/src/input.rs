use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

/// Lines from a file, `-`/absent meaning standard input. Blank lines are
/// dropped; trailing carriage returns are stripped.
pub fn read_lines(path: Option<&Path>) -> Result<Vec<String>> {
    let reader: Box<dyn Read> = match path {
        Some(p) if p != Path::new("-") => {
            Box::new(std::fs::File::open(p).with_context(|| format!("cannot open {}", p.display()))?)
        }
        _ => Box::new(std::io::stdin()),
    };
    let mut out = Vec::new();
    for line in BufReader::new(reader).lines() {
        let line = line.context("reading input")?;
        let line = line.trim_end_matches('\r');
        if !line.trim().is_empty() {
            out.push(line.to_string());
        }
    }
    Ok(out)
}

/// One sentence pair: a JSON object with `source` and `target`, or the two
/// sentences separated by a tab.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct PairInput {
    #[serde(default)]
    pub id: Option<String>,
    pub source: String,
    pub target: String,
}

pub fn parse_pair_line(line: &str, line_no: usize) -> Result<PairInput> {
    if line.trim_start().starts_with('{') {
        return serde_json::from_str(line).with_context(|| format!("line {line_no}: expected {{\"source\", \"target\"}}"));
    }
    match line.split_once('\t') {
        Some((s, t)) => Ok(PairInput {
            id: None,
            source: s.to_string(),
            target: t.to_string(),
        }),
        None => bail!("line {line_no}: expected a JSON object or `source<TAB>target`"),
    }
}
