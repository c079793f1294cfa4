//! Load a WordNet noun database and print structural statistics:
//! concept count, maximum diversity, depth distribution, index size.
//!
//! Usage: cargo run --example wordnet_stats [-- <dict-dir>]
//! Defaults to the vendored database under testdata/.

use std::path::PathBuf;
use std::time::Instant;

use cdv::ontology::wordnet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata/wordnet/dict")
        });

    let start = Instant::now();
    let ontology = wordnet::load_dir(&dir)?;
    let elapsed = start.elapsed();

    let n = ontology.concept_count();
    println!("loaded {} in {elapsed:.2?}", dir.display());
    println!("concepts (N):        {n}");
    println!("max diversity:       {:.4} bits", ontology.max_diversity());
    println!("lemma index entries: {}", ontology.lemma_index().len());
    println!("exception entries:   {}", ontology.exceptions().len());
    println!("warnings:            {}", ontology.warnings().len());

    let max_depth = ontology.nodes().iter().map(|n| n.depth).max().unwrap_or(0);
    let mut histogram = vec![0usize; max_depth as usize + 1];
    for node in ontology.nodes() {
        histogram[node.depth as usize] += 1;
    }
    println!("max depth:           {max_depth}");
    println!("depth histogram:");
    for (depth, count) in histogram.iter().enumerate() {
        let bar = "#".repeat((count * 60 / n).max(usize::from(*count > 0)));
        println!("  {depth:>3} {count:>6} {bar}");
    }

    let leaves = ontology.nodes().iter().filter(|n| n.children.is_empty()).count();
    println!("leaf concepts:       {leaves} ({:.1}%)", 100.0 * leaves as f64 / n as f64);
    Ok(())
}
