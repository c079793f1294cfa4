//! Rule-plus-exception noun lemmatizer in the style of WordNet's morphy.

use std::collections::BTreeMap;

/// Suffix detachment rules, applied to the end of the surface (for
/// multiword surfaces that is the last word).
const RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
];

/// Candidate lemmas for a lowercase surface, best first: exception-list
/// lemmas, the surface itself, then each detachment result. Duplicates
/// are removed, order preserved.
pub fn lemmatize_noun(surface: &str, exceptions: &BTreeMap<String, Vec<String>>) -> Vec<String> {
    let mut candidates: Vec<String> = Vec::with_capacity(4);
    let mut push = |candidate: String| {
        if !candidate.is_empty() && !candidates.contains(&candidate) {
            candidates.push(candidate);
        }
    };

    if let Some(lemmas) = exceptions.get(surface) {
        for lemma in lemmas {
            push(lemma.clone());
        }
    }
    push(surface.to_string());
    for (suffix, replacement) in RULES {
        if surface.len() > suffix.len() {
            if let Some(stem) = surface.strip_suffix(suffix) {
                push(format!("{stem}{replacement}"));
            }
        }
    }
    candidates
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exc(pairs: &[(&str, &[&str])]) -> BTreeMap<String, Vec<String>> {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.iter().map(|s| s.to_string()).collect()))
            .collect()
    }

    #[test]
    fn plural_s_rule() {
        let candidates = lemmatize_noun("cells", &BTreeMap::new());
        assert!(candidates.contains(&"cell".to_string()));
        assert_eq!(candidates[0], "cells"); // surface first without exceptions
    }

    #[test]
    fn identity_for_base_form() {
        assert_eq!(lemmatize_noun("entity", &BTreeMap::new()), vec!["entity"]);
    }

    #[test]
    fn exception_list_wins() {
        let exceptions = exc(&[("women", &["woman"])]);
        assert_eq!(lemmatize_noun("women", &exceptions)[0], "woman");
        // "men" -> "man" detachment also yields "woman"; deduplicated.
        let all = lemmatize_noun("women", &exceptions);
        assert_eq!(all.iter().filter(|c| c.as_str() == "woman").count(), 1);
    }

    #[test]
    fn multiple_exception_lemmas_keep_file_order() {
        let exceptions = exc(&[("axes", &["axe", "axis"])]);
        let candidates = lemmatize_noun("axes", &exceptions);
        assert_eq!(&candidates[..2], &["axe".to_string(), "axis".to_string()]);
        assert!(candidates.contains(&"ax".to_string())); // xes rule
    }

    #[test]
    fn suffix_rules_cover_common_plurals() {
        let none = BTreeMap::new();
        assert!(lemmatize_noun("glasses", &none).contains(&"glass".to_string()));
        assert!(lemmatize_noun("boxes", &none).contains(&"box".to_string()));
        assert!(lemmatize_noun("churches", &none).contains(&"church".to_string()));
        assert!(lemmatize_noun("bushes", &none).contains(&"bush".to_string()));
        assert!(lemmatize_noun("facilities", &none).contains(&"facility".to_string()));
        assert!(lemmatize_noun("living_things", &none).contains(&"living_thing".to_string()));
    }

    #[test]
    fn no_empty_candidates() {
        assert_eq!(lemmatize_noun("s", &BTreeMap::new()), vec!["s"]);
    }
}
