//! Score a single text against the vendored WordNet noun database and
//! print the full report.
//!
//! Usage: cargo run --example score_text [-- "Some text to score."]

use std::path::PathBuf;

use cdv::ontology::wordnet;
use cdv::Scorer;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "He discovered an unknown entity.".to_string());

    let dict = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata/wordnet/dict");
    let ontology = wordnet::load_dir(&dict)?;

    let report = Scorer::new().top_k(5).score(&text, &ontology)?;

    println!("text: {text:?}");
    println!(
        "cdv: {:.4} bits of a possible {:.4} (normalized {:.4})",
        report.cdv, report.e_max, report.cdv_normalized
    );
    println!(
        "{} concept types carry weight, total frequency {}",
        report.concept_types, report.f_sum
    );
    println!("literal concepts:");
    for literal in &report.literal_counts {
        println!("  {:>4}x {} ({})", literal.count, literal.lemma, literal.concept);
    }
    if !report.skipped_tokens.is_empty() {
        println!("skipped: {}", report.skipped_tokens.join(" "));
    }
    println!("top contributors:");
    for c in &report.top_contributors {
        println!("  {:.6} bits  {} ({})", c.contribution, c.lemma, c.concept);
    }
    Ok(())
}
