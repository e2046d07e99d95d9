//! placeholder
#[derive(Debug, thiserror::Error)]
pub enum HarnessError { #[error("x")] X }
