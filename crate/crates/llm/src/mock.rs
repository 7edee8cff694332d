//! Local chat-completion server with scripted replies, for tests.

use std::net::SocketAddr;
use std::sync::{Arc, Mutex};
use std::time::Duration;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::post;
use axum::Router;
use tokio::task::JoinHandle;

use crate::ChatRequest;

#[derive(Debug, Clone)]
pub enum Reply {
    /// Answer with the last message of the request.
    Echo,
    /// Answer with fixed completion text.
    Text(String),
    /// Fail with a status code and body.
    Status(u16, String),
    /// Send a raw body with status 200.
    Raw(String),
    /// Wait, then reply.
    Delay(Duration, Box<Reply>),
}

type Script = dyn Fn(&ChatRequest, usize) -> Reply + Send + Sync;

#[derive(Debug, Clone)]
pub struct Received {
    pub body: String,
    pub authorization: Option<String>,
}

struct Shared {
    script: Box<Script>,
    log: Mutex<Vec<Received>>,
}

pub struct MockServer {
    addr: SocketAddr,
    shared: Arc<Shared>,
    task: JoinHandle<()>,
}

impl MockServer {
    /// Starts on an ephemeral port. `script` sees each parsed request and
    /// its zero-based arrival index.
    pub async fn start(script: impl Fn(&ChatRequest, usize) -> Reply + Send + Sync + 'static) -> std::io::Result<Self> {
        let shared = Arc::new(Shared {
            script: Box::new(script),
            log: Mutex::new(Vec::new()),
        });
        let app = Router::new()
            .route("/v1/chat/completions", post(handle))
            .with_state(shared.clone());
        let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await?;
        let addr = listener.local_addr()?;
        let task = tokio::spawn(async move {
            let _ = axum::serve(listener, app).await;
        });
        Ok(MockServer { addr, shared, task })
    }

    /// Replies in order; the last reply repeats.
    pub async fn scripted(replies: Vec<Reply>) -> std::io::Result<Self> {
        assert!(!replies.is_empty(), "at least one reply");
        Self::start(move |_, i| replies[i.min(replies.len() - 1)].clone()).await
    }

    pub fn url(&self) -> String {
        format!("http://{}/v1/chat/completions", self.addr)
    }

    pub fn received(&self) -> Vec<Received> {
        self.shared.log.lock().unwrap().clone()
    }

    pub fn bodies(&self) -> Vec<String> {
        self.received().into_iter().map(|r| r.body).collect()
    }
}

impl Drop for MockServer {
    fn drop(&mut self) {
        self.task.abort();
    }
}

fn completion(text: &str) -> Response {
    let body = serde_json::json!({
        "id": "mock",
        "object": "chat.completion",
        "choices": [{"index": 0, "message": {"role": "assistant", "content": text}, "finish_reason": "stop"}],
    });
    (StatusCode::OK, [("content-type", "application/json")], body.to_string()).into_response()
}

async fn handle(State(shared): State<Arc<Shared>>, headers: HeaderMap, body: Bytes) -> Response {
    let text = String::from_utf8_lossy(&body).into_owned();
    let index = {
        let mut log = shared.log.lock().unwrap();
        log.push(Received {
            body: text.clone(),
            authorization: headers
                .get("authorization")
                .and_then(|v| v.to_str().ok())
                .map(str::to_string),
        });
        log.len() - 1
    };
    let req: ChatRequest = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => return (StatusCode::BAD_REQUEST, e.to_string()).into_response(),
    };
    let mut reply = (shared.script)(&req, index);
    loop {
        match reply {
            Reply::Delay(d, next) => {
                tokio::time::sleep(d).await;
                reply = *next;
            }
            Reply::Echo => {
                let last = req.messages.last().map(|m| m.content.as_str()).unwrap_or_default();
                return completion(last);
            }
            Reply::Text(t) => return completion(&t),
            Reply::Raw(b) => return (StatusCode::OK, [("content-type", "application/json")], b).into_response(),
            Reply::Status(code, b) => {
                let code = StatusCode::from_u16(code).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
                return (code, b).into_response();
            }
        }
    }
}
