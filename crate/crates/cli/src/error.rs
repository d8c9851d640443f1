use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or malformed input file.
    #[error("{path}: {reason}")]
    Input { path: String, reason: String },
    #[error(transparent)]
    Domain(#[from] largescale::Error),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> String {
        match self {
            CliError::Usage(_) => "usage".into(),
            CliError::Input { .. } => "input".into(),
            CliError::Domain(e) => {
                let debug = format!("{e:?}");
                let end = debug.find(['(', ' ', '{']).unwrap_or(debug.len());
                debug[..end].to_string()
            }
            CliError::Unsupported(_) => "unsupported".into(),
            CliError::Failed(_) => "failed".into(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Input { path, .. } = self {
            v["path"] = json!(path);
        }
        v
    }
}
