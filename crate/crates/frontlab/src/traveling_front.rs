//! placeholder
#[derive(Debug, thiserror::Error)]
pub enum FrontError { #[error("x")] X }
