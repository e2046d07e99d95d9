//! placeholder
#[derive(Debug, thiserror::Error)]
pub enum SpectralError { #[error("x")] X }
