//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Reaction(#[from] crate::reactions::ReactionError),
    #[error(transparent)]
    Spectral(#[from] crate::spectral::SpectralError),
    #[error(transparent)]
    Front(#[from] crate::traveling_front::FrontError),
    #[error(transparent)]
    Pde(#[from] crate::pde::PdeError),
    #[error(transparent)]
    Comparison(#[from] crate::comparison::ComparisonError),
    #[error(transparent)]
    Harness(#[from] crate::harness::HarnessError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
