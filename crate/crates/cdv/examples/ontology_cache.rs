//! The ontology cache in action: first load parses the database files
//! and writes a content-hashed cache next to them; later loads reuse it.
//!
//! This example copies the vendored database into a temp directory so it
//! never modifies the repository.
//!
//! Usage: cargo run --example ontology_cache

use std::path::PathBuf;
use std::time::Instant;

use cdv::ontology::cache::{self, CacheStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata/wordnet/dict");
    let dir = std::env::temp_dir().join(format!("cdv-cache-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    for name in ["index.noun", "data.noun", "noun.exc"] {
        std::fs::copy(source.join(name), dir.join(name))?;
    }

    for round in 1..=3 {
        let started = Instant::now();
        let (ontology, status) = cache::load_dir_cached(&dir)?;
        println!(
            "round {round}: {:>8} in {:>9.2?}  (N = {})",
            match status {
                CacheStatus::Hit => "cache hit",
                CacheStatus::Rebuilt => "parsed",
            },
            started.elapsed(),
            ontology.concept_count()
        );
    }

    let cache_file = cache::cache_path(&dir);
    println!(
        "cache file {} ({} bytes)",
        cache_file.display(),
        std::fs::metadata(&cache_file)?.len()
    );

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
