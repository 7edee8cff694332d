mod input;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use futures::stream::{self, StreamExt};
use numtrans::eval::{load_dataset, load_hypotheses, pass_rate, render_table, DatasetItem, Hypothesis, TargetEntry};
use numtrans::format::render_forms;
use numtrans::verify::{extract_pairs, pairs_from_strings, post_edit_pairs, verify_pair, NumericPair, Style, Verdict};
use numtrans::{parse_number, scan, Direction, Lang};
use numtrans_llm::{LlmClient, LlmConfig, Strategy};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::input::{parse_pair_line, read_lines, PairInput};

#[derive(Parser)]
#[command(name = "numtrans", version, about = "Check and correct numerals in Chinese/English translations")]
struct Cli {
    /// Log requests and responses (API key redacted) to standard error.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Extractor {
    Rules,
    Llm,
}

#[derive(Subcommand)]
enum Command {
    /// Parse numerals into canonical form, one per argument or input line.
    Parse {
        #[arg(short, long)]
        lang: Lang,
        texts: Vec<String>,
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List the numeric pairs of each sentence pair.
    Extract(PairArgs),
    /// Pair and compare the numerals of each sentence pair.
    Verify(PairArgs),
    /// Replace mistranslated numerals in each target sentence.
    Postedit {
        #[command(flatten)]
        pairs: PairArgs,
        #[arg(short, long, default_value = "digits")]
        style: Style,
    },
    /// Generate reference lists for the numerals of source sentences.
    Genrefs {
        #[arg(short, long)]
        direction: Direction,
        texts: Vec<String>,
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// `json` writes dataset lines loadable by `evaluate`.
        #[arg(short, long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Pass rate of hypotheses against a dataset, per direction and type.
    Evaluate {
        #[arg(long)]
        dataset: PathBuf,
        /// Hypothesis JSONL (`id`, `hypothesis`). Without it, translations
        /// are requested with `--strategy`.
        #[arg(long)]
        hyp: Option<PathBuf>,
        #[arg(long)]
        strategy: Option<Strategy>,
        /// Post-edit each hypothesis before judging.
        #[arg(long)]
        postedit: bool,
        #[arg(long, value_enum, default_value = "rules")]
        extractor: Extractor,
        #[arg(long, default_value = "large_unit")]
        style: Style,
        /// Write the judged hypotheses here.
        #[arg(long)]
        save_hyp: Option<PathBuf>,
        #[arg(short, long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct PairArgs {
    #[arg(short, long)]
    direction: Direction,
    /// A single source sentence; requires `--target`.
    #[arg(long, requires = "target")]
    source: Option<String>,
    #[arg(long, requires = "source")]
    target: Option<String>,
    /// JSONL (`source`, `target`, optional `id`) or tab-separated pairs.
    #[arg(short, long, conflicts_with = "source")]
    input: Option<PathBuf>,
    #[arg(short, long, value_enum, default_value = "rules")]
    extractor: Extractor,
    #[arg(short, long, value_enum)]
    format: Option<Format>,
}

impl PairArgs {
    fn inputs(&self) -> Result<Vec<PairInput>> {
        if let (Some(s), Some(t)) = (&self.source, &self.target) {
            return Ok(vec![PairInput {
                id: None,
                source: s.clone(),
                target: t.clone(),
            }]);
        }
        read_lines(self.input.as_deref())?
            .iter()
            .enumerate()
            .map(|(i, l)| parse_pair_line(l, i + 1))
            .collect()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let filter = if cli.verbose { "numtrans_llm=debug,info" } else { "warn" };
    tracing_subscriber::fmt()
        .with_env_filter(tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| filter.into()))
        .with_writer(std::io::stderr)
        .init();
    if let Some(n) = std::env::var(numtrans_llm::config::ENV_PARALLELISM).ok().and_then(|v| v.trim().parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when some records failed but output was still produced.
fn run(command: Command) -> Result<bool> {
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    let ok = match command {
        Command::Parse {
            lang,
            texts,
            input,
            format,
        } => cmd_parse(&mut out, lang, texts_or_lines(texts, input.as_deref())?, format)?,
        Command::Extract(args) => {
            let inputs = args.inputs()?;
            let pairs = collect_pairs(&inputs, args.direction, args.extractor)?;
            for (p, pairs) in inputs.iter().zip(pairs) {
                match args.format.unwrap_or(Format::Json) {
                    Format::Json => emit(&mut out, &json!({"id": p.id, "pairs": pairs}))?,
                    Format::Text => writeln!(out, "{}", pairs.iter().map(pair_text).collect::<Vec<_>>().join(" | "))?,
                }
            }
            true
        }
        Command::Verify(args) => {
            let inputs = args.inputs()?;
            let pairs = collect_pairs(&inputs, args.direction, args.extractor)?;
            for (n, (p, pairs)) in inputs.iter().zip(pairs).enumerate() {
                let pairs: Vec<NumericPair> = pairs.into_iter().map(verify_pair).collect();
                match args.format.unwrap_or(Format::Json) {
                    Format::Json => emit(&mut out, &json!({"id": p.id, "summary": summary(&pairs), "pairs": pairs}))?,
                    Format::Text => {
                        for pair in &pairs {
                            writeln!(out, "{}\t{}\t{}", n + 1, verdict_text(pair), pair_text(pair))?;
                        }
                    }
                }
            }
            true
        }
        Command::Postedit { pairs: args, style } => {
            let inputs = args.inputs()?;
            let pairs = collect_pairs(&inputs, args.direction, args.extractor)?;
            let reports: Vec<_> = inputs
                .par_iter()
                .zip(pairs)
                .map(|(p, pairs)| post_edit_pairs(&p.target, args.direction, pairs, style))
                .collect();
            for (p, r) in inputs.iter().zip(reports) {
                match args.format.unwrap_or(Format::Text) {
                    Format::Text => writeln!(out, "{}", r.edited)?,
                    Format::Json => emit(&mut out, &json!({"id": p.id, "report": r}))?,
                }
            }
            true
        }
        Command::Genrefs {
            direction,
            texts,
            input,
            format,
        } => cmd_genrefs(&mut out, direction, texts_or_lines(texts, input.as_deref())?, format)?,
        Command::Evaluate {
            dataset,
            hyp,
            strategy,
            postedit,
            extractor,
            style,
            save_hyp,
            format,
        } => {
            let items = load_dataset(&dataset)?;
            let mut hyps = match (hyp, strategy) {
                (Some(path), None) => load_hypotheses(&path)?,
                (None, Some(s)) => translate_all(&items, s)?,
                (Some(_), Some(_)) => bail!("give either --hyp or --strategy, not both"),
                (None, None) => bail!("--hyp or --strategy is required"),
            };
            if postedit {
                hyps = postedit_hypotheses(&items, hyps, extractor, style)?;
            }
            if let Some(path) = save_hyp {
                write_jsonl(&path, &hyps)?;
            }
            let result = pass_rate(&items, &hyps)?;
            match format {
                Format::Text => write!(out, "{}", render_table(&result))?,
                Format::Json => emit(&mut out, &result)?,
            }
            true
        }
    };
    out.flush()?;
    Ok(ok)
}

fn texts_or_lines(texts: Vec<String>, input: Option<&Path>) -> Result<Vec<String>> {
    if !texts.is_empty() {
        if input.is_some() {
            bail!("give text arguments or --input, not both");
        }
        return Ok(texts);
    }
    read_lines(input)
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_jsonl<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?);
    for r in rows {
        emit(&mut f, r)?;
    }
    f.flush()?;
    Ok(())
}

fn cmd_parse(out: &mut impl Write, lang: Lang, texts: Vec<String>, format: Format) -> Result<bool> {
    let results: Vec<_> = texts.par_iter().map(|t| parse_number(t, lang)).collect();
    let mut ok = true;
    for (t, r) in texts.iter().zip(results) {
        match (&r, format) {
            (Ok(c), Format::Json) => emit(out, &json!({"input": t, "canonical": c}))?,
            (Ok(c), Format::Text) => writeln!(out, "{t}\t{c}")?,
            (Err(e), Format::Json) => emit(out, &json!({"input": t, "error": e.to_string()}))?,
            (Err(e), Format::Text) => writeln!(out, "{t}\terror: {e}")?,
        }
        if let Err(e) = r {
            eprintln!("{t:?}: {e}");
            ok = false;
        }
    }
    Ok(ok)
}

fn cmd_genrefs(out: &mut impl Write, direction: Direction, texts: Vec<String>, format: Format) -> Result<bool> {
    let found: Vec<_> = texts.par_iter().map(|t| scan(t, direction.source())).collect();
    let mut ok = true;
    for (n, (text, exprs)) in texts.iter().zip(found).enumerate() {
        if exprs.is_empty() {
            eprintln!("line {}: no numerals found", n + 1);
            ok = false;
            continue;
        }
        let refs: Vec<Vec<String>> = exprs
            .iter()
            .map(|e| render_forms(&e.canonical, direction.target()).into_iter().collect())
            .collect();
        match format {
            Format::Json => {
                let item = DatasetItem {
                    id: (n + 1).to_string(),
                    direction,
                    kind: exprs[0].canonical.kind(),
                    source: text.clone(),
                    targets: exprs
                        .iter()
                        .zip(refs)
                        .map(|(e, references)| TargetEntry {
                            source_span: e.span,
                            references,
                        })
                        .collect(),
                };
                emit(out, &item)?;
            }
            Format::Text => {
                for (e, r) in exprs.iter().zip(refs) {
                    writeln!(out, "{}\t{}", e.surface, r.join(" | "))?;
                }
            }
        }
    }
    Ok(ok)
}

fn llm_client() -> Result<LlmClient> {
    let cfg = LlmConfig::from_env().context("LLM endpoint configuration")?;
    Ok(LlmClient::new(cfg)?)
}

fn runtime() -> Result<tokio::runtime::Runtime> {
    Ok(tokio::runtime::Builder::new_multi_thread().enable_all().build()?)
}

/// Runs `f` over `items` with at most the client's parallelism in flight;
/// results come back in input order.
fn llm_map<T, R, F, Fut>(client: &LlmClient, items: &[T], f: F) -> Result<Vec<R>>
where
    F: Fn(LlmClient, &T) -> Fut,
    Fut: std::future::Future<Output = Result<R>>,
{
    let rt = runtime()?;
    let limit = client.config().parallelism;
    let results: Vec<Result<R>> = rt.block_on(
        stream::iter(items.iter().map(|it| f(client.clone(), it)))
            .buffered(limit)
            .collect(),
    );
    results
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.with_context(|| format!("record {}", i + 1)))
        .collect()
}

fn collect_pairs(inputs: &[PairInput], direction: Direction, extractor: Extractor) -> Result<Vec<Vec<NumericPair>>> {
    match extractor {
        Extractor::Rules => Ok(inputs
            .par_iter()
            .map(|p| extract_pairs(&p.source, &p.target, direction))
            .collect()),
        Extractor::Llm => {
            let client = llm_client()?;
            let raw = llm_map(&client, inputs, |c, p| {
                let (s, t) = (p.source.clone(), p.target.clone());
                async move { Ok(c.extract_pairs(&s, &t).await?) }
            })?;
            Ok(inputs
                .iter()
                .zip(raw)
                .map(|(p, raw)| pairs_from_strings(&p.source, &p.target, direction, &raw))
                .collect())
        }
    }
}

fn translate_all(items: &[DatasetItem], strategy: Strategy) -> Result<Vec<Hypothesis>> {
    let client = llm_client()?;
    llm_map(&client, items, |c, item| {
        let (id, source, direction) = (item.id.clone(), item.source.clone(), item.direction);
        async move {
            let hypothesis = c.translate(&source, direction, strategy).await?;
            Ok(Hypothesis {
                id,
                hypothesis,
                label: None,
            })
        }
    })
}

fn postedit_hypotheses(
    items: &[DatasetItem],
    hyps: Vec<Hypothesis>,
    extractor: Extractor,
    style: Style,
) -> Result<Vec<Hypothesis>> {
    let mut inputs = Vec::with_capacity(hyps.len());
    let directions: Vec<Direction> = hyps
        .iter()
        .map(|h| {
            let item = items
                .iter()
                .find(|i| i.id == h.id)
                .with_context(|| format!("no dataset item with id `{}`", h.id))?;
            inputs.push(PairInput {
                id: Some(h.id.clone()),
                source: item.source.clone(),
                target: h.hypothesis.clone(),
            });
            Ok(item.direction)
        })
        .collect::<Result<_>>()?;
    let mut pairs = Vec::with_capacity(inputs.len());
    for dir in [Direction::EnZh, Direction::ZhEn] {
        let idx: Vec<usize> = (0..inputs.len()).filter(|&i| directions[i] == dir).collect();
        let subset: Vec<PairInput> = idx.iter().map(|&i| inputs[i].clone()).collect();
        pairs.extend(idx.into_iter().zip(collect_pairs(&subset, dir, extractor)?));
    }
    pairs.sort_by_key(|(i, _)| *i);
    Ok(hyps
        .into_iter()
        .zip(pairs)
        .zip(directions)
        .map(|((h, (_, p)), dir)| Hypothesis {
            hypothesis: post_edit_pairs(&h.hypothesis, dir, p, style).edited,
            ..h
        })
        .collect())
}

fn side(m: &Option<numtrans::verify::Mention>) -> &str {
    m.as_ref().map(|m| m.surface.as_str()).unwrap_or("-")
}

fn pair_text(p: &NumericPair) -> String {
    format!("{} => {}", side(&p.source), side(&p.target))
}

fn verdict_text(p: &NumericPair) -> String {
    match &p.verdict {
        Some(Verdict::Match) => "match".into(),
        Some(Verdict::Mismatch { expected }) => format!("mismatch (expected {expected})"),
        Some(Verdict::Omitted) => "omitted".into(),
        Some(Verdict::Spurious) => "spurious".into(),
        Some(Verdict::Unverifiable { reason }) => format!("unverifiable ({reason})"),
        None => "-".into(),
    }
}

fn summary(pairs: &[NumericPair]) -> serde_json::Value {
    let count = |f: fn(&Verdict) -> bool| pairs.iter().filter(|p| p.verdict.as_ref().is_some_and(f)).count();
    json!({
        "match": count(|v| matches!(v, Verdict::Match)),
        "mismatch": count(|v| matches!(v, Verdict::Mismatch { .. })),
        "omitted": count(|v| matches!(v, Verdict::Omitted)),
        "spurious": count(|v| matches!(v, Verdict::Spurious)),
        "unverifiable": count(|v| matches!(v, Verdict::Unverifiable { .. })),
    })
}
