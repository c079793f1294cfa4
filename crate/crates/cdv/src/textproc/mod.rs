//! Text preparation: cleaning, tokenization, noun lemmatization, and
//! extraction of literal noun concepts against a loaded ontology.

mod extract;
mod lemma;
mod stoplist;

pub use extract::{extract_concepts, ConceptCounts, Extractor, MAX_SPAN};
pub use lemma::lemmatize_noun;
pub use stoplist::Stoplist;

use unicode_normalization::UnicodeNormalization;

/// A cleaned word with its 0-based position in the token stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub position: usize,
}

/// Normalize raw text for matching: NFC, lowercase, punctuation to
/// spaces. Intra-word hyphens survive, `'s` clitics are stripped, other
/// apostrophes are deleted, digit-only tokens are dropped, whitespace is
/// collapsed.
pub fn clean(text: &str) -> String {
    let lowered: String = text.nfc().collect::<String>().to_lowercase();
    let mut scratch = String::with_capacity(lowered.len());
    for c in lowered.chars() {
        match c {
            '\u{2019}' => scratch.push('\''),
            c if c.is_alphanumeric() || c == '\'' || c == '-' => scratch.push(c),
            _ => scratch.push(' '),
        }
    }

    let mut words: Vec<String> = Vec::new();
    for raw in scratch.split_whitespace() {
        let mut word = raw.trim_matches(|c| c == '\'' || c == '-');
        if let Some(stripped) = word.strip_suffix("'s") {
            word = stripped.trim_end_matches(|c| c == '\'' || c == '-');
        }
        let word: String = word.chars().filter(|&c| c != '\'').collect();
        if word.is_empty() || word.chars().all(|c| c.is_numeric()) {
            continue;
        }
        words.push(word);
    }
    words.join(" ")
}

/// Split cleaned text on whitespace, assigning sequential positions.
pub fn tokenize(cleaned: &str) -> Vec<Token> {
    cleaned
        .split_whitespace()
        .enumerate()
        .map(|(position, surface)| Token {
            surface: surface.to_string(),
            position,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_basic_sentence() {
        assert_eq!(
            clean("He discovered an unknown entity."),
            "he discovered an unknown entity"
        );
    }

    #[test]
    fn clean_empty_is_empty() {
        assert_eq!(clean(""), "");
    }

    #[test]
    fn clean_keeps_intra_word_hyphens() {
        assert_eq!(clean("E-coli strains!!"), "e-coli strains");
        assert_eq!(clean("well - known"), "well known");
    }

    #[test]
    fn clean_strips_clitics_and_apostrophes() {
        assert_eq!(clean("Today's o'clock dogs' don't"), "today oclock dogs dont");
    }

    #[test]
    fn clean_drops_digit_only_tokens() {
        assert_eq!(clean("in 1990 k2 rose 42 %"), "in k2 rose");
    }

    #[test]
    fn tokenize_positions() {
        let tokens = tokenize("he discovered an unknown entity");
        assert_eq!(tokens.len(), 5);
        assert_eq!(tokens[4].surface, "entity");
        assert_eq!(tokens[4].position, 4);
        assert!(tokenize("").is_empty());
        assert_eq!(tokenize("a  b").len(), 2);
    }
}
