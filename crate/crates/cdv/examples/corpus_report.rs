//! Score every document in a directory concurrently and print a small
//! ranking table plus corpus statistics, the way the CLI's corpus mode
//! does.
//!
//! Usage: cargo run --example corpus_report [-- <dir>]
//! Defaults to the tiny corpus under testdata/ scored against the
//! vendored WordNet database.

use std::path::PathBuf;

use cdv::ontology::wordnet;
use cdv::Scorer;
use rayon::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| manifest.join("testdata/corpus"));

    let ontology = wordnet::load_dir(&manifest.join("testdata/wordnet/dict"))?;
    let scorer = Scorer::new();

    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)?
        .filter_map(|entry| entry.ok())
        .map(|entry| entry.path())
        .filter(|path| path.is_file())
        .collect();
    files.sort();

    let mut scored: Vec<(String, f64, usize)> = files
        .par_iter()
        .filter_map(|path| {
            let doc_id = path.file_name()?.to_string_lossy().into_owned();
            let text = std::fs::read_to_string(path).ok()?;
            let report = scorer.score(&text, &ontology).ok()?;
            Some((doc_id, report.cdv, report.concept_types))
        })
        .collect();
    scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());

    println!("{:<24} {:>10} {:>8}", "document", "cdv", "types");
    for (doc_id, cdv, types) in &scored {
        println!("{doc_id:<24} {cdv:>10.4} {types:>8}");
    }
    if !scored.is_empty() {
        let values: Vec<f64> = scored.iter().map(|(_, cdv, _)| *cdv).collect();
        println!(
            "\n{} documents: min {:.4}, max {:.4}, mean {:.4}",
            values.len(),
            values.iter().copied().fold(f64::INFINITY, f64::min),
            values.iter().copied().fold(0.0f64, f64::max),
            values.iter().sum::<f64>() / values.len() as f64
        );
    }
    Ok(())
}
