//! Error types shared across the crate.

use thiserror::Error;

/// Failure while loading or assembling an ontology.
#[derive(Debug, Error)]
pub enum OntologyError {
    /// A line in an input file could not be parsed.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// The parsed data does not form a single rooted tree.
    #[error("ontology integrity: {0}")]
    Integrity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl OntologyError {
    pub(crate) fn parse(path: &std::path::Path, line: usize, message: impl Into<String>) -> Self {
        OntologyError::Parse {
            path: path.display().to_string(),
            line,
            message: message.into(),
        }
    }
}

/// Why a text could not be scored.
///
/// `NoConcepts` is deliberately distinct from a zero score: a score of 0
/// means "focused on a single concept", while `NoConcepts` means the text
/// carried no recognizable noun signal at all.
#[derive(Debug, Error, PartialEq, Eq, Clone, Copy)]
pub enum ScoreError {
    #[error("empty text")]
    EmptyText,
    #[error("no word matched a noun concept")]
    NoConcepts,
}
