use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Io(String),
    Domain(cohiggs::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, detail) = match self {
            CliError::Malformed(d) => ("MalformedInput", d.clone()),
            CliError::Io(d) => ("Io", d.clone()),
            CliError::Domain(e) => (e.kind(), e.to_string()),
        };
        json!({"error": {"kind": kind, "detail": detail}})
    }
}

impl From<cohiggs::Error> for CliError {
    fn from(e: cohiggs::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<cohiggs::json::SchemaError> for CliError {
    fn from(e: cohiggs::json::SchemaError) -> Self {
        CliError::Malformed(e.0)
    }
}

pub type CliResult<T> = Result<T, CliError>;
