//! Literal noun-concept extraction: greedy longest-match of token spans
//! against the ontology lemma index.

use std::collections::BTreeMap;

use crate::ontology::{NodeId, Ontology};
use crate::textproc::{lemmatize_noun, Stoplist, Token};

/// Longest multiword span tried, in tokens.
pub const MAX_SPAN: usize = 4;

/// Literal noun-concept frequencies found in one text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConceptCounts {
    /// Node id -> occurrences (each multiword match counts once).
    pub counts: BTreeMap<NodeId, u64>,
    /// Number of matches; equals the sum of `counts`.
    pub matched_tokens: u64,
    /// Surfaces that matched nothing, in token order.
    pub skipped_tokens: Vec<String>,
}

/// Configurable concept extractor. Nounhood is dictionary-based:
/// a span counts as a noun exactly when one of its candidate lemmas is in
/// the ontology's lemma index and the span surface is not stoplisted.
#[derive(Debug, Clone)]
pub struct Extractor {
    stoplist: Stoplist,
    multiword: bool,
}

impl Default for Extractor {
    fn default() -> Self {
        Extractor {
            stoplist: Stoplist::shipped().clone(),
            multiword: true,
        }
    }
}

impl Extractor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_stoplist(mut self, stoplist: Stoplist) -> Self {
        self.stoplist = stoplist;
        self
    }

    /// Enable or disable multiword span matching (single tokens only when
    /// disabled). Defaults to enabled.
    pub fn multiword(mut self, enabled: bool) -> Self {
        self.multiword = enabled;
        self
    }

    /// Greedy scan: at each position try spans of MAX_SPAN..1 tokens,
    /// longest first; on a match consume the whole span, otherwise record
    /// the single token as skipped and advance one.
    pub fn extract(&self, tokens: &[Token], ontology: &Ontology) -> ConceptCounts {
        let mut result = ConceptCounts::default();
        let exceptions = ontology.exceptions();
        let mut position = 0;
        while position < tokens.len() {
            let widest = if self.multiword {
                MAX_SPAN.min(tokens.len() - position)
            } else {
                1
            };
            // No multiword lemma can match here unless some lemma starts
            // with "<token>_" or an exception maps the joined span.
            let multi_possible = widest > 1
                && ontology.any_lemma_with_prefix(&format!("{}_", tokens[position].surface));

            let mut matched: Option<(NodeId, usize)> = None;
            for span in (1..=widest).rev() {
                let joined = join(&tokens[position..position + span]);
                if span > 1 && !multi_possible && !exceptions.contains_key(&joined) {
                    continue;
                }
                if self.stoplist.contains(&joined) {
                    continue;
                }
                if let Some(node) = lemmatize_noun(&joined, exceptions)
                    .iter()
                    .find_map(|candidate| ontology.lookup(candidate))
                {
                    matched = Some((node, span));
                    break;
                }
            }

            match matched {
                Some((node, span)) => {
                    *result.counts.entry(node).or_insert(0) += 1;
                    result.matched_tokens += 1;
                    position += span;
                }
                None => {
                    result
                        .skipped_tokens
                        .push(tokens[position].surface.clone());
                    position += 1;
                }
            }
        }
        result
    }
}

fn join(tokens: &[Token]) -> String {
    let mut out = String::with_capacity(tokens.iter().map(|t| t.surface.len() + 1).sum());
    for (i, token) in tokens.iter().enumerate() {
        if i > 0 {
            out.push('_');
        }
        out.push_str(&token.surface);
    }
    out
}

/// Extraction with the shipped stoplist and multiword matching enabled.
pub fn extract_concepts(tokens: &[Token], ontology: &Ontology) -> ConceptCounts {
    Extractor::new().extract(tokens, ontology)
}
