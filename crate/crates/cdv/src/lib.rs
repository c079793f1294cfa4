//! Conceptual diversity of text.
//!
//! A text that says "entity" implies every concept there is; a text that
//! says "lounger" pins down a single one. This crate measures where a
//! text sits on that axis: literal noun concepts are located in a rooted
//! concept hierarchy (WordNet nouns or a synthetic tree), their
//! frequencies are pushed down to all descendant concepts, and the
//! Shannon entropy of the resulting distribution — between 0 and
//! log2(N) bits — is the conceptual diversity value (CDV).
//!
//! ```
//! use cdv::ontology::synthetic;
//!
//! let ontology = synthetic::load_str(
//!     "animal - animal\nbird animal bird\nparrot bird parrot\ndog animal dog\n",
//!     "inline",
//! )?;
//! let report = cdv::conceptual_diversity("a parrot is an animal", &ontology)?;
//! assert!(report.cdv > 0.0);
//! assert!(report.cdv <= ontology.max_diversity());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! The `cdv` binary exposes the same pipeline on the command line; the
//! crate's `examples/` directory walks through each capability.

pub mod cli;
pub mod diversity;
pub mod error;
pub mod ontology;
pub mod textproc;

pub use diversity::{
    calculate_entropy, conceptual_diversity, diversity_series, normalize, Contributor,
    DiversityReport, FrequencyTable, Scorer, SeriesPoint,
};
pub use error::{OntologyError, ScoreError};
pub use ontology::{build_tree, NodeId, Ontology, OntologyNode};
pub use textproc::{clean, extract_concepts, tokenize, ConceptCounts, Extractor, Stoplist, Token};
