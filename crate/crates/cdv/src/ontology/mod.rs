//! The concept hierarchy: a single rooted tree of noun concepts plus a
//! sorted lemma index for O(log N) lookup.
//!
//! Two loaders produce the same intermediate [`RawOntology`]: the WordNet
//! database reader in [`wordnet`] and the line-oriented test format in
//! [`synthetic`]. [`build_tree`] turns either into an immutable [`Ontology`].

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::OntologyError;

pub mod cache;
pub mod synthetic;
pub mod wordnet;

/// Dense 0-based node identifier.
pub type NodeId = u32;

/// One concept (synset) in the hierarchy.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OntologyNode {
    pub id: NodeId,
    /// Stable external identifier: WordNet synset offset or test-file key.
    pub source_key: String,
    /// Lowercase lemmas; multiword lemmas joined with underscores.
    pub lemmas: Vec<String>,
    /// Absent only for the root.
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    /// Edges on the root path; root = 0.
    pub depth: u32,
}

impl OntologyNode {
    /// The first lemma, used when a single display name is needed.
    pub fn primary_lemma(&self) -> &str {
        self.lemmas.first().map(String::as_str).unwrap_or("")
    }
}

/// A synset as read from disk, before tree assembly.
#[derive(Debug, Clone)]
pub struct RawSynset {
    pub key: String,
    pub lemmas: Vec<String>,
    /// Hypernym keys in file order; the first listed one becomes the parent.
    pub hypernyms: Vec<String>,
}

/// Loader output: synsets plus the auxiliary tables the tree builder needs.
#[derive(Debug, Default)]
pub struct RawOntology {
    pub synsets: Vec<RawSynset>,
    /// Morphological exceptions: inflected form -> lemmas.
    pub exceptions: Vec<(String, Vec<String>)>,
    /// Per-lemma synset keys in sense order (best sense first). Lemmas
    /// absent from this table fall back to smallest-node-id order.
    pub sense_order: HashMap<String, Vec<String>>,
}

/// Immutable rooted concept tree with a sorted lemma index.
///
/// Safe to share across threads; scoring never mutates it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Ontology {
    nodes: Vec<OntologyNode>,
    root: NodeId,
    /// Sorted ascending by (lemma, node id). A lemma may map to several
    /// nodes; `first_sense` resolves which one a lookup returns.
    lemma_index: Vec<(String, NodeId)>,
    /// Aligned with `lemma_index`: for every entry, the node of the best
    /// sense of that entry's lemma.
    first_sense: Vec<NodeId>,
    exceptions: BTreeMap<String, Vec<String>>,
    warnings: Vec<String>,
}

impl Ontology {
    /// Total number of concepts (N).
    pub fn concept_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &OntologyNode {
        &self.nodes[id as usize]
    }

    pub fn nodes(&self) -> &[OntologyNode] {
        &self.nodes
    }

    pub fn lemma_index(&self) -> &[(String, NodeId)] {
        &self.lemma_index
    }

    /// Morphological exception table (inflected form -> lemmas).
    pub fn exceptions(&self) -> &BTreeMap<String, Vec<String>> {
        &self.exceptions
    }

    /// Non-fatal irregularities found while building (e.g. reattached orphans).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Upper bound of the diversity score for this ontology: log2(N) bits.
    pub fn max_diversity(&self) -> f64 {
        (self.nodes.len() as f64).log2()
    }

    /// Binary search the lemma index. Returns the best-sense node for the
    /// lemma, or `None` when the lemma is unknown. The lemma must already
    /// be lowercase with underscores joining multiword parts.
    pub fn lookup(&self, lemma: &str) -> Option<NodeId> {
        self.lookup_counted(lemma).0
    }

    /// Same as [`Ontology::lookup`] but also reports how many string
    /// comparisons the probe performed.
    pub fn lookup_counted(&self, lemma: &str) -> (Option<NodeId>, u32) {
        let mut comparisons = 0u32;
        let start = self.lemma_index.partition_point(|(l, _)| {
            comparisons += 1;
            l.as_str() < lemma
        });
        if start < self.lemma_index.len() {
            comparisons += 1;
            if self.lemma_index[start].0 == lemma {
                return (Some(self.first_sense[start]), comparisons);
            }
        }
        (None, comparisons)
    }

    /// Whether any indexed lemma starts with `prefix`. Used by the
    /// multiword matcher to prune span probes cheaply.
    pub(crate) fn any_lemma_with_prefix(&self, prefix: &str) -> bool {
        let start = self
            .lemma_index
            .partition_point(|(l, _)| l.as_str() < prefix);
        match self.lemma_index.get(start) {
            Some((l, _)) => l.starts_with(prefix),
            None => false,
        }
    }
}

/// Assemble a validated tree from loader output.
///
/// Only the first listed hypernym becomes the parent, so a synset with
/// several hypernyms contributes exactly one tree edge. Non-root synsets
/// without any hypernym are attached under the root and reported in
/// [`Ontology::warnings`].
pub fn build_tree(raw: RawOntology) -> Result<Ontology, OntologyError> {
    if raw.synsets.is_empty() {
        return Err(OntologyError::Integrity("no synsets".into()));
    }

    let mut id_by_key: HashMap<&str, NodeId> = HashMap::with_capacity(raw.synsets.len());
    for (i, synset) in raw.synsets.iter().enumerate() {
        if id_by_key.insert(&synset.key, i as NodeId).is_some() {
            return Err(OntologyError::Integrity(format!(
                "duplicate synset key {}",
                synset.key
            )));
        }
    }

    let mut roots: Vec<NodeId> = Vec::new();
    let mut parent: Vec<Option<NodeId>> = vec![None; raw.synsets.len()];
    for (i, synset) in raw.synsets.iter().enumerate() {
        match synset.hypernyms.first() {
            None => roots.push(i as NodeId),
            Some(key) => match id_by_key.get(key.as_str()) {
                Some(&pid) => parent[i] = Some(pid),
                None => {
                    return Err(OntologyError::Integrity(format!(
                        "hypernym target {key} of synset {} not found",
                        synset.key
                    )))
                }
            },
        }
    }

    let mut warnings = Vec::new();
    let root = match roots.len() {
        0 => return Err(OntologyError::Integrity("no root synset".into())),
        1 => roots[0],
        _ => {
            // Keep the synset actually named "entity" as root and treat the
            // rest as orphans hanging directly under it.
            let named: Vec<NodeId> = roots
                .iter()
                .copied()
                .filter(|&id| raw.synsets[id as usize].lemmas.first().map(String::as_str) == Some("entity"))
                .collect();
            if named.len() != 1 {
                return Err(OntologyError::Integrity(format!(
                    "multiple roots: {}",
                    roots
                        .iter()
                        .map(|&id| raw.synsets[id as usize].key.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                )));
            }
            let root = named[0];
            for &id in &roots {
                if id != root {
                    parent[id as usize] = Some(root);
                    warnings.push(format!(
                        "orphan synset {} attached under root",
                        raw.synsets[id as usize].key
                    ));
                }
            }
            root
        }
    };

    let mut nodes: Vec<OntologyNode> = raw
        .synsets
        .iter()
        .enumerate()
        .map(|(i, synset)| OntologyNode {
            id: i as NodeId,
            source_key: synset.key.clone(),
            lemmas: synset.lemmas.clone(),
            parent: parent[i],
            children: Vec::new(),
            depth: 0,
        })
        .collect();
    for i in 0..nodes.len() {
        if let Some(pid) = nodes[i].parent {
            let child = nodes[i].id;
            nodes[pid as usize].children.push(child);
        }
    }

    // Depths via BFS; anything left unvisited sits on a hypernym cycle.
    let mut visited = vec![false; nodes.len()];
    let mut queue = std::collections::VecDeque::new();
    visited[root as usize] = true;
    queue.push_back(root);
    let mut seen = 0usize;
    while let Some(id) = queue.pop_front() {
        seen += 1;
        let depth = nodes[id as usize].depth;
        let children = nodes[id as usize].children.clone();
        for child in children {
            if visited[child as usize] {
                return Err(OntologyError::Integrity(format!(
                    "cycle detected at synset {}",
                    nodes[child as usize].source_key
                )));
            }
            visited[child as usize] = true;
            nodes[child as usize].depth = depth + 1;
            queue.push_back(child);
        }
    }
    if seen != nodes.len() {
        return Err(OntologyError::Integrity(format!(
            "cycle detected: {} of {} synsets unreachable from root",
            nodes.len() - seen,
            nodes.len()
        )));
    }

    let (lemma_index, first_sense) = build_lemma_index(&nodes, &raw.sense_order, &id_by_key);

    let mut exceptions: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (form, lemmas) in raw.exceptions {
        exceptions.entry(form).or_default().extend(lemmas);
    }

    Ok(Ontology {
        nodes,
        root,
        lemma_index,
        first_sense,
        exceptions,
        warnings,
    })
}

fn build_lemma_index(
    nodes: &[OntologyNode],
    sense_order: &HashMap<String, Vec<String>>,
    id_by_key: &HashMap<&str, NodeId>,
) -> (Vec<(String, NodeId)>, Vec<NodeId>) {
    let mut pairs: Vec<(String, NodeId)> = Vec::new();
    for node in nodes {
        let mut seen = Vec::new();
        for lemma in &node.lemmas {
            if !seen.contains(&lemma) {
                seen.push(lemma);
                pairs.push((lemma.clone(), node.id));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();

    // Per-lemma sense rank: position in the loader's sense table, falling
    // back to node-id order for pairs the table does not mention.
    let rank_of = |lemma: &str, id: NodeId| -> (usize, NodeId) {
        let rank = sense_order
            .get(lemma)
            .and_then(|keys| {
                keys.iter()
                    .position(|key| id_by_key.get(key.as_str()) == Some(&id))
            })
            .unwrap_or(usize::MAX);
        (rank, id)
    };

    let mut first_sense = vec![0 as NodeId; pairs.len()];
    let mut run_start = 0;
    while run_start < pairs.len() {
        let lemma = pairs[run_start].0.as_str();
        let mut run_end = run_start + 1;
        while run_end < pairs.len() && pairs[run_end].0 == lemma {
            run_end += 1;
        }
        let best = pairs[run_start..run_end]
            .iter()
            .map(|&(_, id)| id)
            .min_by_key(|&id| rank_of(lemma, id))
            .expect("non-empty run");
        for slot in &mut first_sense[run_start..run_end] {
            *slot = best;
        }
        run_start = run_end;
    }

    (pairs, first_sense)
}
