//! Reference-list datasets and the pass-rate metric.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::normalize::normalize_for_match;
use crate::parse::Span;
use crate::types::{Direction, NumericType};

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("hypothesis ids do not match the dataset: {0}")]
    IdMismatch(String),
}

fn line_err(line: usize, message: impl Into<String>) -> DatasetError {
    DatasetError::Line {
        line,
        message: message.into(),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SpanRepr {
    Pair([usize; 2]),
    Object { start: usize, end: usize },
}

fn de_span<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Span, D::Error> {
    let (start, end) = match SpanRepr::deserialize(d)? {
        SpanRepr::Pair([s, e]) => (s, e),
        SpanRepr::Object { start, end } => (start, end),
    };
    if start > end {
        return Err(serde::de::Error::custom(format!("source_span start {start} is after end {end}")));
    }
    Ok(Span { start, end })
}

fn ser_span<S: serde::Serializer>(sp: &Span, s: S) -> Result<S::Ok, S::Error> {
    [sp.start, sp.end].serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetEntry {
    #[serde(deserialize_with = "de_span", serialize_with = "ser_span")]
    pub source_span: Span,
    pub references: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetItem {
    pub id: String,
    pub direction: Direction,
    #[serde(rename = "type")]
    pub kind: NumericType,
    pub source: String,
    pub targets: Vec<TargetEntry>,
}

impl DatasetItem {
    pub fn validate(&self) -> Result<(), String> {
        if self.id.is_empty() {
            return Err("field `id`: empty".into());
        }
        if self.targets.is_empty() {
            return Err("field `targets`: at least one entry required".into());
        }
        let len = self.source.chars().count();
        for (i, t) in self.targets.iter().enumerate() {
            if t.references.is_empty() {
                return Err(format!("field `targets[{i}].references`: empty list"));
            }
            if t.references.iter().any(|r| normalize_for_match(r).is_empty()) {
                return Err(format!("field `targets[{i}].references`: blank reference"));
            }
            if t.source_span.end > len {
                return Err(format!(
                    "field `targets[{i}].source_span`: end {} beyond source length {len}",
                    t.source_span.end
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub id: String,
    pub hypothesis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<Label>,
}

fn parse_lines<T: for<'de> Deserialize<'de>>(
    text: &str,
    check: impl Fn(&T) -> Result<(), String>,
) -> Result<Vec<T>, DatasetError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let item: T = serde_json::from_str(line).map_err(|e| line_err(line_no, e.to_string()))?;
        check(&item).map_err(|m| line_err(line_no, m))?;
        out.push(item);
    }
    Ok(out)
}

fn reject_duplicates<'a>(ids: impl Iterator<Item = &'a str>) -> Result<(), DatasetError> {
    let mut seen = HashSet::new();
    for (i, id) in ids.enumerate() {
        if !seen.insert(id) {
            return Err(line_err(i + 1, format!("duplicate id `{id}`")));
        }
    }
    Ok(())
}

/// Parses dataset JSONL. Blank lines are skipped; errors name the line.
pub fn parse_dataset(text: &str) -> Result<Vec<DatasetItem>, DatasetError> {
    let mut line_of = Vec::new();
    for (i, l) in text.lines().enumerate() {
        if !l.trim().is_empty() {
            line_of.push(i + 1);
        }
    }
    let items: Vec<DatasetItem> = parse_lines(text, DatasetItem::validate)?;
    reject_duplicates(items.iter().map(|it| it.id.as_str())).map_err(|e| match e {
        DatasetError::Line { line, message } => line_err(line_of[line - 1], message),
        other => other,
    })?;
    Ok(items)
}

pub fn parse_hypotheses(text: &str) -> Result<Vec<Hypothesis>, DatasetError> {
    let hyps: Vec<Hypothesis> = parse_lines(text, |_: &Hypothesis| Ok(()))?;
    reject_duplicates(hyps.iter().map(|h| h.id.as_str()))?;
    Ok(hyps)
}

fn read(path: &Path) -> Result<String, DatasetError> {
    std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_dataset(path: impl AsRef<Path>) -> Result<Vec<DatasetItem>, DatasetError> {
    parse_dataset(&read(path.as_ref())?)
}

pub fn load_hypotheses(path: impl AsRef<Path>) -> Result<Vec<Hypothesis>, DatasetError> {
    parse_hypotheses(&read(path.as_ref())?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmetTarget {
    pub index: usize,
    pub source_text: String,
    pub references: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Judgement {
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unmet: Vec<UnmetTarget>,
}

/// Pass iff every target entry has at least one reference contained in the
/// hypothesis after normalization.
pub fn judge(item: &DatasetItem, hypothesis: &str) -> Judgement {
    let hyp = normalize_for_match(hypothesis);
    let unmet: Vec<UnmetTarget> = item
        .targets
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.references.iter().any(|r| hyp.contains(&normalize_for_match(r))))
        .map(|(index, t)| UnmetTarget {
            index,
            source_text: t.source_span.slice(&item.source).unwrap_or_default().to_string(),
            references: t.references.clone(),
        })
        .collect();
    Judgement {
        passed: unmet.is_empty(),
        unmet,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: u64,
    pub total: u64,
}

impl Tally {
    fn add(&mut self, passed: bool) {
        self.total += 1;
        self.passed += u64::from(passed);
    }

    /// Exact pass rate; `None` for an empty tally.
    pub fn rate(&self) -> Option<Ratio<u64>> {
        (self.total > 0).then(|| Ratio::new(self.passed, self.total))
    }

    fn percent(&self) -> Option<f64> {
        self.rate().map(|r| *r.numer() as f64 * 100.0 / *r.denom() as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellTally {
    pub direction: Direction,
    #[serde(rename = "type")]
    pub kind: NumericType,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemVerdict {
    pub id: String,
    pub direction: Direction,
    #[serde(rename = "type")]
    pub kind: NumericType,
    #[serde(flatten)]
    pub judgement: Judgement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalResult {
    pub overall: Tally,
    pub by_direction: Vec<(Direction, Tally)>,
    pub cells: Vec<CellTally>,
    pub items: Vec<ItemVerdict>,
}

impl EvalResult {
    pub fn pass_rate(&self) -> Option<Ratio<u64>> {
        self.overall.rate()
    }
}

/// Judges every item against the hypothesis with the same id. Counts are
/// exact; cells and items are reported in a fixed order.
pub fn pass_rate(items: &[DatasetItem], hypotheses: &[Hypothesis]) -> Result<EvalResult, DatasetError> {
    let mut by_id: BTreeMap<&str, &Hypothesis> = BTreeMap::new();
    for h in hypotheses {
        if by_id.insert(&h.id, h).is_some() {
            return Err(DatasetError::IdMismatch(format!("duplicate hypothesis id `{}`", h.id)));
        }
    }
    let item_ids: HashSet<&str> = items.iter().map(|i| i.id.as_str()).collect();
    if let Some(extra) = by_id.keys().find(|k| !item_ids.contains(*k)) {
        return Err(DatasetError::IdMismatch(format!("no dataset item with id `{extra}`")));
    }
    let mut overall = Tally::default();
    let mut dirs: BTreeMap<Direction, Tally> = BTreeMap::new();
    let mut cells: BTreeMap<(Direction, NumericType), Tally> = BTreeMap::new();
    let mut verdicts = Vec::with_capacity(items.len());
    for item in items {
        let h = by_id
            .get(item.id.as_str())
            .ok_or_else(|| DatasetError::IdMismatch(format!("no hypothesis for item `{}`", item.id)))?;
        let j = judge(item, &h.hypothesis);
        overall.add(j.passed);
        dirs.entry(item.direction).or_default().add(j.passed);
        cells.entry((item.direction, item.kind)).or_default().add(j.passed);
        verdicts.push(ItemVerdict {
            id: item.id.clone(),
            direction: item.direction,
            kind: item.kind,
            judgement: j,
        });
    }
    verdicts.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(EvalResult {
        overall,
        by_direction: dirs.into_iter().collect(),
        cells: cells
            .into_iter()
            .map(|((direction, kind), tally)| CellTally { direction, kind, tally })
            .collect(),
        items: verdicts,
    })
}

/// Per-type pass rates, one row per direction plus an overall column.
pub fn render_table(r: &EvalResult) -> String {
    let fmt = |t: Option<&Tally>| match t.and_then(|t| t.percent().map(|p| (t, p))) {
        Some((t, p)) => format!("{p:.2} ({}/{})", t.passed, t.total),
        None => "-".to_string(),
    };
    let mut header = vec!["Direction".to_string()];
    header.extend(NumericType::ALL.iter().map(|k| k.label().to_string()));
    header.push("Overall".into());
    let mut rows = vec![header];
    for (dir, tally) in &r.by_direction {
        let mut row = vec![dir.to_string().to_uppercase()];
        for k in NumericType::ALL {
            let cell = r.cells.iter().find(|c| c.direction == *dir && c.kind == k);
            row.push(fmt(cell.map(|c| &c.tally)));
        }
        row.push(fmt(Some(tally)));
        rows.push(row);
    }
    let mut all = vec!["All".to_string()];
    all.extend(NumericType::ALL.iter().map(|k| {
        let mut t = Tally::default();
        for c in r.cells.iter().filter(|c| c.kind == *k) {
            t.passed += c.tally.passed;
            t.total += c.tally.total;
        }
        fmt(Some(&t))
    }));
    all.push(fmt(Some(&r.overall)));
    rows.push(all);

    let cols = rows[0].len();
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .zip(&width)
            .map(|(s, w)| format!("{s:<w$}", w = *w))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
        if i == 0 {
            let rule: Vec<String> = width.iter().map(|w| "-".repeat(*w)).collect();
            let _ = writeln!(out, "{}", rule.join("-+-"));
        }
    }
    out
}
