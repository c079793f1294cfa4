//! Make a score auditable: which concepts carry the entropy, what was
//! matched literally, and what never matched at all.
//!
//! Usage: cargo run --example top_contributors [-- "text"]

use std::path::PathBuf;

use cdv::ontology::wordnet;
use cdv::Scorer;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| {
        "Living things respond to stimuli and adapt to environmental changes.".to_string()
    });

    let dict = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata/wordnet/dict");
    let ontology = wordnet::load_dir(&dict)?;
    let report = Scorer::new().top_k(15).score(&text, &ontology)?;

    println!("text: {text:?}");
    println!("cdv {:.4} bits over {} concept types\n", report.cdv, report.concept_types);

    println!("literal matches (what the text actually said):");
    for literal in &report.literal_counts {
        let node = ontology.node(literal.node);
        println!(
            "  {:>3}x {:<22} depth {:<3} synset {}",
            literal.count,
            literal.lemma,
            node.depth,
            literal.concept
        );
    }

    println!("\nlargest entropy contributions (hidden concepts included):");
    for c in &report.top_contributors {
        println!("  {:.6} bits  {:<22} ({})", c.contribution, c.lemma, c.concept);
    }

    if !report.skipped_tokens.is_empty() {
        println!("\nnever matched: {}", report.skipped_tokens.join(" "));
    }
    Ok(())
}
