//! Surface-form stoplist. Stoplisted surfaces never contribute a concept.

use std::collections::HashSet;
use std::path::Path;
use std::sync::OnceLock;

const DEFAULT_LIST: &str = include_str!("../../assets/stoplist.txt");

/// Set of surfaces excluded from concept matching. Matching is by exact
/// cleaned surface; multiword spans are only blocked when the joined form
/// itself is listed.
#[derive(Debug, Clone, Default)]
pub struct Stoplist {
    entries: HashSet<String>,
}

impl Stoplist {
    pub fn empty() -> Self {
        Self::default()
    }

    /// One surface per line, `#` comments, blank lines ignored. An entry
    /// may contain spaces; it is stored in the underscore-joined form the
    /// span matcher probes with.
    pub fn from_text(text: &str) -> Self {
        let entries = text
            .lines()
            .map(|line| match line.find('#') {
                Some(pos) => line[..pos].trim(),
                None => line.trim(),
            })
            .filter(|line| !line.is_empty())
            .map(|line| line.to_lowercase().split_whitespace().collect::<Vec<_>>().join("_"))
            .collect();
        Stoplist { entries }
    }

    pub fn from_file(path: &Path) -> std::io::Result<Self> {
        Ok(Self::from_text(&std::fs::read_to_string(path)?))
    }

    /// The list shipped with the crate: closed-class words, single
    /// letters, and a few high-frequency non-noun homographs.
    pub fn shipped() -> &'static Stoplist {
        static SHIPPED: OnceLock<Stoplist> = OnceLock::new();
        SHIPPED.get_or_init(|| Stoplist::from_text(DEFAULT_LIST))
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains(surface)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let list = Stoplist::from_text("# heading\nthe\n\nof # inline\n");
        assert!(list.contains("the"));
        assert!(list.contains("of"));
        assert_eq!(list.len(), 2);
    }

    #[test]
    fn multiword_entries_join_with_underscores() {
        let list = Stoplist::from_text("laying on\n");
        assert!(list.contains("laying_on"));
        assert!(!list.contains("laying"));
    }

    #[test]
    fn shipped_list_covers_function_words_and_letters() {
        let list = Stoplist::shipped();
        for surface in ["i", "the", "an", "of", "on", "my", "like", "q"] {
            assert!(list.contains(surface), "missing {surface}");
        }
        assert!(!list.contains("entity"));
        assert!(!list.contains("lounger"));
    }
}
