//! Line-oriented ontology format for tests and experiments.
//!
//! One node per line: `<key> <parent-key-or-"-"> <lemma>[,lemma...]`.
//! `#` starts a comment, blank lines are ignored, parents may be declared
//! after their children. Sense order for a polysemous lemma is its order
//! of appearance in the file.

use std::path::Path;

use crate::error::OntologyError;
use crate::ontology::{build_tree, Ontology, RawOntology, RawSynset};

pub fn parse_str(text: &str, origin: &str) -> Result<RawOntology, OntologyError> {
    let path = Path::new(origin);
    let mut raw = RawOntology::default();
    for (number, line) in text.lines().enumerate() {
        let number = number + 1;
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let key = fields.next().unwrap().to_string();
        let parent = fields
            .next()
            .ok_or_else(|| OntologyError::parse(path, number, "missing parent key"))?;
        let lemmas_field = fields
            .next()
            .ok_or_else(|| OntologyError::parse(path, number, "missing lemma list"))?;
        if let Some(extra) = fields.next() {
            return Err(OntologyError::parse(
                path,
                number,
                format!("unexpected trailing field {extra:?}"),
            ));
        }
        let lemmas: Vec<String> = lemmas_field
            .split(',')
            .filter(|l| !l.is_empty())
            .map(|l| l.to_lowercase())
            .collect();
        if lemmas.is_empty() {
            return Err(OntologyError::parse(path, number, "empty lemma list"));
        }
        for lemma in &lemmas {
            raw.sense_order
                .entry(lemma.clone())
                .or_default()
                .push(key.clone());
        }
        raw.synsets.push(RawSynset {
            key,
            lemmas,
            hypernyms: if parent == "-" {
                Vec::new()
            } else {
                vec![parent.to_string()]
            },
        });
    }
    Ok(raw)
}

pub fn parse_file(path: &Path) -> Result<RawOntology, OntologyError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        OntologyError::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    parse_str(&text, &path.display().to_string())
}

/// Parse and assemble in one step.
pub fn load_file(path: &Path) -> Result<Ontology, OntologyError> {
    build_tree(parse_file(path)?)
}

pub fn load_str(text: &str, origin: &str) -> Result<Ontology, OntologyError> {
    build_tree(parse_str(text, origin)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIVE_NODE: &str = "\
# five node fixture
a - alpha
b a beta
c a gamma
d b delta
e b epsilon
";

    #[test]
    fn five_node_fixture_builds() {
        let ontology = load_str(FIVE_NODE, "fixture").unwrap();
        assert_eq!(ontology.concept_count(), 5);
        let d = ontology.lookup("delta").unwrap();
        assert_eq!(ontology.node(d).depth, 2);
    }

    #[test]
    fn forward_parent_references_are_fine() {
        let ontology = load_str("b a beta\na - alpha\n", "fixture").unwrap();
        assert_eq!(ontology.node(ontology.root()).primary_lemma(), "alpha");
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let ontology = load_str("\n# comment\na - alpha # trailing\n\n", "fixture").unwrap();
        assert_eq!(ontology.concept_count(), 1);
    }

    #[test]
    fn sense_order_is_file_order() {
        let text = "r - root\nx r bass,fish\ny r bass,sound\n";
        let ontology = load_str(text, "fixture").unwrap();
        let hit = ontology.lookup("bass").unwrap();
        assert_eq!(ontology.node(hit).source_key, "x");
    }

    #[test]
    fn bad_line_reports_position() {
        let err = load_str("a\n", "fixture").unwrap_err();
        assert!(err.to_string().contains("fixture:1"));
    }
}
