use std::fmt;
use std::time::Duration;

use crate::LlmError;

pub const ENV_ENDPOINT: &str = "NUMTRANS_ENDPOINT";
pub const ENV_API_KEY: &str = "NUMTRANS_API_KEY";
pub const ENV_MODEL: &str = "NUMTRANS_MODEL";
pub const ENV_TIMEOUT: &str = "NUMTRANS_TIMEOUT_SECS";
pub const ENV_RETRIES: &str = "NUMTRANS_MAX_RETRIES";
pub const ENV_PARALLELISM: &str = "NUMTRANS_PARALLELISM";

/// Connection settings. `endpoint` is the full chat-completions URL.
#[derive(Clone, PartialEq)]
pub struct LlmConfig {
    pub endpoint: String,
    pub model: String,
    pub api_key: Option<String>,
    pub timeout: Duration,
    pub max_retries: u32,
    pub temperature: f64,
    pub seed: Option<u64>,
    /// Upper bound on in-flight requests per client.
    pub parallelism: usize,
    /// Delay before the first retry; doubles on each further attempt.
    pub backoff: Duration,
}

impl LlmConfig {
    pub fn new(endpoint: impl Into<String>, model: impl Into<String>) -> Self {
        LlmConfig {
            endpoint: endpoint.into(),
            model: model.into(),
            api_key: None,
            timeout: Duration::from_secs(60),
            max_retries: 3,
            temperature: 0.0,
            seed: Some(0),
            parallelism: 4,
            backoff: Duration::from_millis(500),
        }
    }

    /// Reads the `NUMTRANS_*` variables. Endpoint and model are required.
    pub fn from_env() -> Result<Self, LlmError> {
        Self::from_lookup(|k| std::env::var(k).ok())
    }

    pub fn from_lookup(get: impl Fn(&str) -> Option<String>) -> Result<Self, LlmError> {
        let need = |k: &str| get(k).filter(|v| !v.trim().is_empty()).ok_or_else(|| LlmError::Config(format!("{k} is not set")));
        let mut cfg = LlmConfig::new(need(ENV_ENDPOINT)?, need(ENV_MODEL)?);
        cfg.api_key = get(ENV_API_KEY).filter(|v| !v.is_empty());
        if let Some(v) = get(ENV_TIMEOUT) {
            let secs: f64 = v.trim().parse().map_err(|_| LlmError::Config(format!("{ENV_TIMEOUT}: not a number: {v}")))?;
            if !(secs.is_finite() && secs > 0.0) {
                return Err(LlmError::Config(format!("{ENV_TIMEOUT} must be positive")));
            }
            cfg.timeout = Duration::from_secs_f64(secs);
        }
        if let Some(v) = get(ENV_RETRIES) {
            cfg.max_retries = v.trim().parse().map_err(|_| LlmError::Config(format!("{ENV_RETRIES}: not a count: {v}")))?;
        }
        if let Some(v) = get(ENV_PARALLELISM) {
            cfg.parallelism = v.trim().parse().map_err(|_| LlmError::Config(format!("{ENV_PARALLELISM}: not a count: {v}")))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), LlmError> {
        if self.endpoint.trim().is_empty() {
            return Err(LlmError::Config("endpoint is empty".into()));
        }
        if self.model.trim().is_empty() {
            return Err(LlmError::Config("model is empty".into()));
        }
        if self.timeout.is_zero() {
            return Err(LlmError::Config("timeout must be positive".into()));
        }
        if self.parallelism == 0 {
            return Err(LlmError::Config("parallelism must be at least 1".into()));
        }
        if !self.temperature.is_finite() || self.temperature < 0.0 {
            return Err(LlmError::Config("temperature must be a non-negative number".into()));
        }
        Ok(())
    }
}

impl fmt::Debug for LlmConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LlmConfig")
            .field("endpoint", &self.endpoint)
            .field("model", &self.model)
            .field("api_key", &self.api_key.as_ref().map(|_| "<redacted>"))
            .field("timeout", &self.timeout)
            .field("max_retries", &self.max_retries)
            .field("temperature", &self.temperature)
            .field("seed", &self.seed)
            .field("parallelism", &self.parallelism)
            .finish()
    }
}
