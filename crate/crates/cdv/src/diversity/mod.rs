//! The conceptual diversity metric.
//!
//! A text's literal noun-concept frequencies are pushed down the ontology
//! so every concept also carries the weight of the ancestors that imply
//! it, then Shannon entropy over the resulting distribution yields the
//! score (in bits, base 2). The accumulated frequency of a node always
//! equals the sum of literal counts over its ancestors-or-self; that
//! closed form is the normative contract for the propagation pass.

use std::collections::VecDeque;
use std::num::NonZeroUsize;

use serde::{Deserialize, Serialize};

use crate::error::ScoreError;
use crate::ontology::{NodeId, Ontology};
use crate::textproc::{clean, tokenize, ConceptCounts, Extractor, Token};

/// Accumulated concept frequencies after propagation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequencyTable {
    /// (node, accumulated frequency) for every node with a positive
    /// count, in breadth-first visit order.
    pub entries: Vec<(NodeId, u64)>,
    /// Sum of all accumulated frequencies.
    pub f_sum: u64,
}

impl FrequencyTable {
    /// Number of distinct concepts carrying weight.
    pub fn concept_types(&self) -> usize {
        self.entries.len()
    }
}

/// Spread literal counts into a dense per-node scratch array.
///
/// The shared ontology is never mutated; every scoring works on its own
/// array, so concurrent scorings cannot interfere.
///
/// Panics if a node id is out of range for the ontology — that is a
/// caller bug, not an input error.
pub fn assign_frequencies(counts: &ConceptCounts, concept_count: usize) -> Vec<u64> {
    let mut scratch = vec![0u64; concept_count];
    for (&node, &count) in &counts.counts {
        scratch[node as usize] = count;
    }
    scratch
}

/// Push frequencies down the tree: breadth-first from the root, each
/// child inherits its parent's accumulated count on top of its own.
/// Every node left with a positive count becomes a table entry.
pub fn propagate_frequencies(ontology: &Ontology, mut counts: Vec<u64>) -> FrequencyTable {
    assert_eq!(
        counts.len(),
        ontology.concept_count(),
        "scratch array must cover every node"
    );
    let mut entries = Vec::new();
    let mut f_sum = 0u64;
    let mut queue = VecDeque::new();
    queue.push_back(ontology.root());
    while let Some(id) = queue.pop_front() {
        let accumulated = counts[id as usize];
        if accumulated > 0 {
            entries.push((id, accumulated));
            f_sum += accumulated;
        }
        for &child in &ontology.node(id).children {
            counts[child as usize] += accumulated;
            queue.push_back(child);
        }
    }
    FrequencyTable { entries, f_sum }
}

/// Shannon entropy of the table in bits: -sum(p * log2 p) with
/// p = frequency / f_sum. Zero for an empty table or a single entry.
pub fn calculate_entropy(table: &FrequencyTable) -> f64 {
    if table.f_sum == 0 || table.entries.len() <= 1 {
        return 0.0;
    }
    let total = table.f_sum as f64;
    let mut entropy = 0.0;
    for &(_, frequency) in &table.entries {
        if frequency > 0 {
            let p = frequency as f64 / total;
            entropy -= p * p.log2();
        }
    }
    entropy.max(0.0)
}

/// Min-max normalization onto [0, 1] with minimum 0 and maximum `e_max`.
///
/// Panics when `cdv` exceeds `e_max` beyond float tolerance; summation
/// rounding within 1e-9 is clamped instead.
pub fn normalize(cdv: f64, e_max: f64) -> f64 {
    if e_max == 0.0 {
        return 0.0;
    }
    assert!(
        (0.0..=e_max + 1e-9).contains(&cdv),
        "cdv {cdv} outside [0, {e_max}]"
    );
    (cdv / e_max).min(1.0)
}

/// One literal concept occurrence count in a report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiteralCount {
    pub node: NodeId,
    pub concept: String,
    pub lemma: String,
    pub count: u64,
}

/// One concept's share of the final entropy.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Contributor {
    pub node: NodeId,
    /// Stable external identifier of the concept.
    pub concept: String,
    pub lemma: String,
    /// -p * log2(p) for this concept, in bits.
    pub contribution: f64,
}

/// Full scoring result for one text.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiversityReport {
    /// Conceptual diversity value in bits.
    pub cdv: f64,
    /// cdv / e_max, in [0, 1].
    pub cdv_normalized: f64,
    /// log2(N) for the ontology the text was scored against.
    pub e_max: f64,
    /// Distinct concepts after propagation.
    pub concept_types: usize,
    /// Total accumulated frequency after propagation.
    pub f_sum: u64,
    /// Number of span matches in the text.
    pub matched_tokens: u64,
    /// Literal (pre-propagation) concept counts, by node id.
    pub literal_counts: Vec<LiteralCount>,
    /// Surfaces that matched nothing, in token order.
    pub skipped_tokens: Vec<String>,
    /// Largest entropy contributions, descending.
    pub top_contributors: Vec<Contributor>,
}

/// One emitted point of a prefix series. `cdv` is `None` when the prefix
/// contained no matched concept yet (a gap, not a zero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    /// 0-based position of the last token of the prefix.
    pub position: usize,
    pub cdv: Option<f64>,
}

/// Configured scoring pipeline: clean -> tokenize -> extract ->
/// propagate -> entropy -> normalize.
#[derive(Debug, Clone, Default)]
pub struct Scorer {
    extractor: Extractor,
    top_k: usize,
}

impl Scorer {
    pub fn new() -> Self {
        Scorer {
            extractor: Extractor::new(),
            top_k: 10,
        }
    }

    pub fn with_extractor(mut self, extractor: Extractor) -> Self {
        self.extractor = extractor;
        self
    }

    /// How many top contributors a report keeps (default 10).
    pub fn top_k(mut self, top_k: usize) -> Self {
        self.top_k = top_k;
        self
    }

    /// Score one text. `EmptyText` when nothing survives cleaning,
    /// `NoConcepts` when no token matches a noun concept.
    pub fn score(&self, text: &str, ontology: &Ontology) -> Result<DiversityReport, ScoreError> {
        let tokens = tokenize(&clean(text));
        if tokens.is_empty() {
            return Err(ScoreError::EmptyText);
        }
        let counts = self.extractor.extract(&tokens, ontology);
        if counts.counts.is_empty() {
            return Err(ScoreError::NoConcepts);
        }
        Ok(self.report(counts, ontology))
    }

    /// Diversity of each token-stream prefix ending at multiples of
    /// `stride`, plus the final position. Propagation is re-run per
    /// emitted point.
    pub fn series(
        &self,
        text: &str,
        ontology: &Ontology,
        stride: NonZeroUsize,
    ) -> Result<Vec<SeriesPoint>, ScoreError> {
        let tokens = tokenize(&clean(text));
        if tokens.is_empty() {
            return Err(ScoreError::EmptyText);
        }
        let stride = stride.get();
        let mut ends: Vec<usize> = (stride..=tokens.len()).step_by(stride).collect();
        if ends.last() != Some(&tokens.len()) {
            ends.push(tokens.len());
        }

        let mut points = Vec::with_capacity(ends.len());
        for end in ends {
            let prefix: &[Token] = &tokens[..end];
            let counts = self.extractor.extract(prefix, ontology);
            let cdv = if counts.counts.is_empty() {
                None
            } else {
                let scratch = assign_frequencies(&counts, ontology.concept_count());
                Some(calculate_entropy(&propagate_frequencies(ontology, scratch)))
            };
            points.push(SeriesPoint {
                position: end - 1,
                cdv,
            });
        }
        Ok(points)
    }

    fn report(&self, counts: ConceptCounts, ontology: &Ontology) -> DiversityReport {
        let scratch = assign_frequencies(&counts, ontology.concept_count());
        let table = propagate_frequencies(ontology, scratch);
        let cdv = calculate_entropy(&table);
        let e_max = ontology.max_diversity();

        let total = table.f_sum as f64;
        let mut contributors: Vec<Contributor> = table
            .entries
            .iter()
            .map(|&(node, frequency)| {
                let p = frequency as f64 / total;
                Contributor {
                    node,
                    concept: ontology.node(node).source_key.clone(),
                    lemma: ontology.node(node).primary_lemma().to_string(),
                    contribution: -p * p.log2(),
                }
            })
            .collect();
        contributors.sort_by(|a, b| {
            b.contribution
                .partial_cmp(&a.contribution)
                .unwrap()
                .then(a.node.cmp(&b.node))
        });
        contributors.truncate(self.top_k);

        DiversityReport {
            cdv,
            cdv_normalized: normalize(cdv, e_max),
            e_max,
            concept_types: table.concept_types(),
            f_sum: table.f_sum,
            matched_tokens: counts.matched_tokens,
            literal_counts: counts
                .counts
                .iter()
                .map(|(&node, &count)| LiteralCount {
                    node,
                    concept: ontology.node(node).source_key.clone(),
                    lemma: ontology.node(node).primary_lemma().to_string(),
                    count,
                })
                .collect(),
            skipped_tokens: counts.skipped_tokens,
            top_contributors: contributors,
        }
    }
}

/// Score with the default pipeline configuration.
pub fn conceptual_diversity(text: &str, ontology: &Ontology) -> Result<DiversityReport, ScoreError> {
    Scorer::new().score(text, ontology)
}

/// Prefix series with the default pipeline configuration.
pub fn diversity_series(
    text: &str,
    ontology: &Ontology,
    stride: NonZeroUsize,
) -> Result<Vec<SeriesPoint>, ScoreError> {
    Scorer::new().series(text, ontology, stride)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::synthetic;
    use std::collections::BTreeMap;

    /// A(root) -> {B, C}, B -> {D, E}; lemmas alpha..epsilon.
    fn five_node() -> Ontology {
        synthetic::load_str(
            "a - alpha\nb a beta\nc a gamma\nd b delta\ne b epsilon\n",
            "fixture",
        )
        .unwrap()
    }

    fn literal(ontology: &Ontology, pairs: &[(&str, u64)]) -> ConceptCounts {
        let mut counts = BTreeMap::new();
        let mut matched = 0;
        for &(lemma, count) in pairs {
            counts.insert(ontology.lookup(lemma).unwrap(), count);
            matched += count;
        }
        ConceptCounts {
            counts,
            matched_tokens: matched,
            skipped_tokens: Vec::new(),
        }
    }

    fn table_for(ontology: &Ontology, pairs: &[(&str, u64)]) -> FrequencyTable {
        let scratch = assign_frequencies(&literal(ontology, pairs), ontology.concept_count());
        propagate_frequencies(ontology, scratch)
    }

    #[test]
    fn assign_writes_dense_array() {
        let ontology = five_node();
        let scratch = assign_frequencies(&literal(&ontology, &[("beta", 2), ("delta", 1)]), 5);
        let b = ontology.lookup("beta").unwrap() as usize;
        let d = ontology.lookup("delta").unwrap() as usize;
        let mut expected = vec![0u64; 5];
        expected[b] = 2;
        expected[d] = 1;
        assert_eq!(scratch, expected);

        assert_eq!(
            assign_frequencies(&ConceptCounts::default(), 5),
            vec![0u64; 5]
        );
        let root = ontology.root() as usize;
        let scratch = assign_frequencies(&literal(&ontology, &[("alpha", 1)]), 5);
        assert_eq!(scratch[root], 1);
        assert_eq!(scratch.iter().sum::<u64>(), 1);
    }

    #[test]
    fn root_flood_is_uniform() {
        let ontology = five_node();
        let table = table_for(&ontology, &[("alpha", 1)]);
        assert_eq!(table.concept_types(), 5);
        assert_eq!(table.f_sum, 5);
        assert!(table.entries.iter().all(|&(_, f)| f == 1));
    }

    #[test]
    fn subtree_flood() {
        let ontology = five_node();
        let table = table_for(&ontology, &[("beta", 1)]);
        assert_eq!(table.concept_types(), 3);
        assert_eq!(table.f_sum, 3);
    }

    #[test]
    fn ancestor_path_sums() {
        // literal {A:1, B:1} -> A:1, B:2, C:1, D:2, E:2; f_sum = 8
        let ontology = five_node();
        let table = table_for(&ontology, &[("alpha", 1), ("beta", 1)]);
        let by_lemma: BTreeMap<&str, u64> = table
            .entries
            .iter()
            .map(|&(node, f)| (ontology.node(node).primary_lemma(), f))
            .collect();
        assert_eq!(
            by_lemma,
            BTreeMap::from([("alpha", 1), ("beta", 2), ("gamma", 1), ("delta", 2), ("epsilon", 2)])
        );
        assert_eq!(table.f_sum, 8);
    }

    #[test]
    fn entropy_uniform_five() {
        let table = FrequencyTable {
            entries: (0..5).map(|i| (i, 1)).collect(),
            f_sum: 5,
        };
        assert!((calculate_entropy(&table) - 5f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn entropy_single_entry_is_zero_regardless_of_count() {
        let table = FrequencyTable {
            entries: vec![(3, 7)],
            f_sum: 7,
        };
        assert_eq!(calculate_entropy(&table), 0.0);
    }

    #[test]
    fn entropy_hand_computed_mixture() {
        // {1,2,1,2,2}/8: 2 * 0.375 + 3 * 0.5 = 2.25 exactly
        let table = FrequencyTable {
            entries: vec![(0, 1), (1, 2), (2, 1), (3, 2), (4, 2)],
            f_sum: 8,
        };
        assert!((calculate_entropy(&table) - 2.25).abs() < 1e-12);
    }

    #[test]
    fn entropy_empty_table_is_zero() {
        let table = FrequencyTable {
            entries: Vec::new(),
            f_sum: 0,
        };
        assert_eq!(calculate_entropy(&table), 0.0);
    }

    #[test]
    fn normalize_bounds() {
        assert!((normalize(16.68, 16.68) - 1.0).abs() < 1e-12);
        assert_eq!(normalize(0.0, 16.68), 0.0);
        assert!((normalize(8.34, 16.68) - 0.5).abs() < 1e-12);
        assert_eq!(normalize(0.0, 0.0), 0.0);
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn normalize_rejects_invariant_breach() {
        normalize(2.0, 1.0);
    }

    #[test]
    fn score_root_only_text_hits_max() {
        let ontology = five_node();
        let report = conceptual_diversity("alpha!", &ontology).unwrap();
        assert!((report.cdv - ontology.max_diversity()).abs() < 1e-9);
        assert!((report.cdv_normalized - 1.0).abs() < 1e-9);
    }

    #[test]
    fn score_single_leaf_is_zero() {
        let ontology = five_node();
        let report = conceptual_diversity("delta delta delta", &ontology).unwrap();
        assert_eq!(report.cdv, 0.0);
        assert_eq!(report.cdv_normalized, 0.0);
        assert_eq!(report.concept_types, 1);
    }

    #[test]
    fn score_errors_are_distinct() {
        let ontology = five_node();
        assert_eq!(
            conceptual_diversity("", &ontology).unwrap_err(),
            ScoreError::EmptyText
        );
        assert_eq!(
            conceptual_diversity("...", &ontology).unwrap_err(),
            ScoreError::EmptyText
        );
        assert_eq!(
            conceptual_diversity("qwxz blorp", &ontology).unwrap_err(),
            ScoreError::NoConcepts
        );
    }

    #[test]
    fn series_single_token() {
        let ontology = five_node();
        let points =
            diversity_series("alpha", &ontology, NonZeroUsize::new(1).unwrap()).unwrap();
        assert_eq!(points.len(), 1);
        assert_eq!(points[0].position, 0);
        assert!((points[0].cdv.unwrap() - ontology.max_diversity()).abs() < 1e-9);
    }

    #[test]
    fn series_large_stride_matches_full_score() {
        let ontology = five_node();
        let text = "delta then beta then alpha";
        let points =
            diversity_series(text, &ontology, NonZeroUsize::new(100).unwrap()).unwrap();
        assert_eq!(points.len(), 1);
        let full = conceptual_diversity(text, &ontology).unwrap();
        assert!((points[0].cdv.unwrap() - full.cdv).abs() < 1e-12);
    }

    #[test]
    fn series_gap_before_first_match() {
        let ontology = five_node();
        let points =
            diversity_series("xyzzy delta", &ontology, NonZeroUsize::new(1).unwrap()).unwrap();
        assert_eq!(points[0].cdv, None);
        assert_eq!(points[1].cdv, Some(0.0));
    }

    #[test]
    fn series_leaf_leaf_root() {
        let ontology = five_node();
        let points =
            diversity_series("delta delta alpha", &ontology, NonZeroUsize::new(1).unwrap())
                .unwrap();
        assert_eq!(points[0].cdv, Some(0.0));
        assert_eq!(points[1].cdv, Some(0.0));
        // {A:1, D:2}: A1 B1 C1 D3 E1, f=7
        let expected = calculate_entropy(&FrequencyTable {
            entries: vec![(0, 1), (1, 1), (2, 1), (3, 3), (4, 1)],
            f_sum: 7,
        });
        assert!((points[2].cdv.unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn top_contributors_sorted_and_truncated() {
        let ontology = five_node();
        let report = Scorer::new()
            .top_k(2)
            .score("beta delta", &ontology)
            .unwrap();
        assert_eq!(report.top_contributors.len(), 2);
        assert!(
            report.top_contributors[0].contribution >= report.top_contributors[1].contribution
        );
    }
}
