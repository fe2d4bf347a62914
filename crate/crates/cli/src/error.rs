use thiserror::Error;

/// Failures that stop a run before any check result exists.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    /// Map a library error to a configuration or resource error.
    pub fn classify(e: &(dyn std::error::Error + 'static)) -> CliError {
        if is_resource_limit(e) {
            let msg = e.to_string();
            CliError::Resource(msg.strip_prefix("resource limit: ").unwrap_or(&msg).to_string())
        } else {
            CliError::Config(e.to_string())
        }
    }
}

/// Every crate wraps `ExactError::ResourceLimit` transparently, so its
/// message prefix survives any number of wrapping layers.
pub fn is_resource_limit(e: &(dyn std::error::Error + 'static)) -> bool {
    let mut cur = Some(e);
    while let Some(err) = cur {
        if err.to_string().starts_with("resource limit") {
            return true;
        }
        cur = err.source();
    }
    false
}
