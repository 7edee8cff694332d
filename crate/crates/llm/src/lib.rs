//! Chat-completion client for the translation strategies and the pair
//! extraction prompt, plus a scripted local server for tests.

pub mod answer;
pub mod client;
pub mod config;
pub mod mock;
pub mod prompt;

use std::time::Duration;

pub use answer::{parse_pair_list, AnswerError};
pub use client::{ChatMessage, ChatRequest, LlmClient};
pub use config::LlmConfig;
pub use prompt::{extraction_prompt, translation_prompt, Strategy};

#[derive(Debug, thiserror::Error)]
pub enum LlmError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("transport: {0}")]
    Transport(String),
    #[error("request timed out after {0:?}")]
    Timeout(Duration),
    #[error("endpoint returned HTTP {code}: {body}")]
    Status { code: u16, body: String },
    #[error("malformed response: {0}")]
    Response(String),
    #[error("model returned an empty completion")]
    EmptyCompletion,
    #[error("could not read pairs from answer ({reason}): {raw}")]
    Extraction { reason: String, raw: String },
}

impl LlmError {
    pub fn is_retryable(&self) -> bool {
        match self {
            LlmError::Transport(_) | LlmError::Timeout(_) => true,
            LlmError::Status { code, .. } => *code == 429 || *code >= 500,
            _ => false,
        }
    }
}
