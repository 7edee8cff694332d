use std::fmt;
use std::str::FromStr;

use numtrans::Direction;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Base,
    Icl,
    Cot,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Base, Strategy::Icl, Strategy::Cot];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Base => "base",
            Strategy::Icl => "icl",
            Strategy::Cot => "cot",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "base" => Ok(Strategy::Base),
            "icl" => Ok(Strategy::Icl),
            "cot" => Ok(Strategy::Cot),
            other => Err(format!("unknown strategy `{other}` (expected base, icl or cot)")),
        }
    }
}

const BASE: &str = "You are a good translator. Help me translate the [Source] sentence into [Target] sentence.";

const ICL: &str = "You are a good translator. Help me translate the [Source] sentence into [Target] sentence \
based on the given unit conversion principle.
Unit Conversion Principle:
1 million = 100 万
1 billion = 10 亿
1 trillion = 1 万亿
1 万 = 10 thousand
1 亿 = 100 million";

const COT: &str = "You are a good translator. Help me translate the [Source] sentence into [Target] sentence \
step by step.
Please pay attention to the unit conversion between Chinese and English and first translate the \
numerical parts, and then translate the sentence.";

const EXTRACT: &str = "You are an excellent extractor of numerical translation pairs. Please extract all the \
numerical translation pairs from the given [Source]-[Target] translation pairs. Please output the extracted \
numerical translation pairs in the form of list without giving any explanation. Here is an example: \
[Source]: It will provide EUR 72.2 billion over 7 years in funding. [Target]: 它将在7年内提供722亿欧元的资金。
output:[(\"72.2 billion\", \"722亿\")]. Here is the [Source]-[Target] translation pair you need to extract: \
[Source sentence], [Target sentence]";

fn fill_languages(template: &str, direction: Direction) -> String {
    template
        .replace("[Source]", direction.source().name())
        .replace("[Target]", direction.target().name())
}

pub fn template(strategy: Strategy) -> &'static str {
    match strategy {
        Strategy::Base => BASE,
        Strategy::Icl => ICL,
        Strategy::Cot => COT,
    }
}

/// The instruction followed by the sentence on its own line.
pub fn translation_prompt(source: &str, direction: Direction, strategy: Strategy) -> String {
    let head = fill_languages(template(strategy), direction);
    format!("{head}\n{}: {source}", direction.source().name())
}

/// The extraction instruction with its one-shot example. Only the two
/// sentence slots are filled; the example's labels stay as written.
pub fn extraction_prompt(source: &str, target: &str) -> String {
    EXTRACT
        .replace("[Source sentence]", source)
        .replace("[Target sentence]", target)
}
