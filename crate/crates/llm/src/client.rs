use std::sync::Arc;
use std::time::Duration;

use numtrans::Direction;
use serde::{Deserialize, Serialize};
use tokio::sync::Semaphore;

use crate::answer::parse_pair_list;
use crate::prompt::{extraction_prompt, translation_prompt, Strategy};
use crate::{LlmConfig, LlmError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatMessage {
    pub role: String,
    pub content: String,
}

/// Chat-completion request body. Field order is fixed, so the same
/// prompt always serializes to the same bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatRequest {
    pub model: String,
    pub messages: Vec<ChatMessage>,
    pub temperature: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub stream: bool,
}

#[derive(Debug, Deserialize)]
struct ChatResponse {
    #[serde(default)]
    choices: Vec<Choice>,
}

#[derive(Debug, Deserialize)]
struct Choice {
    message: Option<ChoiceMessage>,
}

#[derive(Debug, Deserialize)]
struct ChoiceMessage {
    #[serde(default)]
    content: Option<String>,
}

/// Immutable after construction; clones share the connection pool and the
/// in-flight limit.
#[derive(Debug, Clone)]
pub struct LlmClient {
    cfg: Arc<LlmConfig>,
    http: reqwest::Client,
    permits: Arc<Semaphore>,
}

impl LlmClient {
    pub fn new(cfg: LlmConfig) -> Result<Self, LlmError> {
        cfg.validate()?;
        let http = reqwest::Client::builder()
            .timeout(cfg.timeout)
            .build()
            .map_err(|e| LlmError::Config(format!("http client: {e}")))?;
        Ok(LlmClient {
            permits: Arc::new(Semaphore::new(cfg.parallelism)),
            cfg: Arc::new(cfg),
            http,
        })
    }

    pub fn config(&self) -> &LlmConfig {
        &self.cfg
    }

    pub fn request_body(&self, prompt: &str) -> String {
        let req = ChatRequest {
            model: self.cfg.model.clone(),
            messages: vec![ChatMessage {
                role: "user".into(),
                content: prompt.to_string(),
            }],
            temperature: self.cfg.temperature,
            seed: self.cfg.seed,
            stream: false,
        };
        serde_json::to_string(&req).expect("request serializes")
    }

    /// Sends one prompt and returns the completion text.
    pub async fn complete(&self, prompt: &str) -> Result<String, LlmError> {
        let body = self.request_body(prompt);
        let _permit = self.permits.acquire().await.map_err(|_| LlmError::Config("client closed".into()))?;
        let mut attempt = 0;
        loop {
            match self.send_once(&body).await {
                Ok(text) => return Ok(text),
                Err(e) if e.is_retryable() && attempt < self.cfg.max_retries => {
                    let wait = self.cfg.backoff.saturating_mul(1 << attempt.min(16));
                    tracing::warn!(attempt = attempt + 1, error = %e, "retrying after {wait:?}");
                    tokio::time::sleep(wait).await;
                    attempt += 1;
                }
                Err(e) => return Err(e),
            }
        }
    }

    async fn send_once(&self, body: &str) -> Result<String, LlmError> {
        tracing::debug!(endpoint = %self.cfg.endpoint, authorization = self.cfg.api_key.as_ref().map(|_| "Bearer <redacted>"), %body, "request");
        let mut req = self
            .http
            .post(&self.cfg.endpoint)
            .header(reqwest::header::CONTENT_TYPE, "application/json")
            .body(body.to_string());
        if let Some(key) = &self.cfg.api_key {
            req = req.bearer_auth(key);
        }
        let timeout = self.cfg.timeout + Duration::from_millis(50);
        let res = tokio::time::timeout(timeout, async {
            let res = req.send().await?;
            let status = res.status();
            let text = res.text().await?;
            Ok::<_, reqwest::Error>((status, text))
        })
        .await;
        let (status, text) = match res {
            Err(_) => return Err(LlmError::Timeout(self.cfg.timeout)),
            Ok(Err(e)) if e.is_timeout() => return Err(LlmError::Timeout(self.cfg.timeout)),
            Ok(Err(e)) => return Err(LlmError::Transport(self.redact(&e.to_string()))),
            Ok(Ok(v)) => v,
        };
        tracing::debug!(status = status.as_u16(), body = %text, "response");
        if !status.is_success() {
            return Err(LlmError::Status {
                code: status.as_u16(),
                body: self.redact(&text),
            });
        }
        let parsed: ChatResponse =
            serde_json::from_str(&text).map_err(|e| LlmError::Response(format!("{e}: {}", self.redact(&text))))?;
        let content = parsed
            .choices
            .into_iter()
            .next()
            .and_then(|c| c.message)
            .and_then(|m| m.content)
            .unwrap_or_default();
        if content.trim().is_empty() {
            return Err(LlmError::EmptyCompletion);
        }
        Ok(content)
    }

    fn redact(&self, s: &str) -> String {
        match &self.cfg.api_key {
            Some(k) if !k.is_empty() => s.replace(k.as_str(), "<redacted>"),
            _ => s.to_string(),
        }
    }

    pub async fn translate(&self, source: &str, direction: Direction, strategy: Strategy) -> Result<String, LlmError> {
        self.complete(&translation_prompt(source, direction, strategy)).await
    }

    /// Asks the model for the numeric pairs of a sentence pair, in answer
    /// order.
    pub async fn extract_pairs(&self, source: &str, target: &str) -> Result<Vec<(String, String)>, LlmError> {
        let raw = self.complete(&extraction_prompt(source, target)).await?;
        parse_pair_list(&raw).map_err(|e| LlmError::Extraction {
            reason: e.reason,
            raw: e.raw,
        })
    }
}
