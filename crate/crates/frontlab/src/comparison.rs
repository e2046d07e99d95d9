//! placeholder
#[derive(Debug, thiserror::Error)]
pub enum ComparisonError { #[error("x")] X }
