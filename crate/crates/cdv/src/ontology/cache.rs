//! Binary cache of a built ontology, keyed by a hash of the source files.
//!
//! Layout: magic, format version, 32-byte input hash, bincode payload.
//! A stale or corrupt cache is rebuilt silently; failing to write the
//! cache is never fatal.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::OntologyError;
use crate::ontology::{wordnet, Ontology};

const MAGIC: &[u8; 4] = b"CDVO";
pub const FORMAT_VERSION: u32 = 1;

/// File name used for the auto-built cache inside an ontology directory.
pub const CACHE_FILE: &str = ".cdv.cache";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    /// Loaded from a valid cache file.
    Hit,
    /// Parsed from source (cache absent, stale, or disabled).
    Rebuilt,
}

/// Serialize with the versioned header. Output is byte-deterministic for
/// equal ontologies and input hashes.
pub fn encode(ontology: &Ontology, input_hash: &[u8; 32]) -> Vec<u8> {
    let payload = bincode::serialize(ontology).expect("ontology serializes");
    let mut out = Vec::with_capacity(payload.len() + 40);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(input_hash);
    out.extend_from_slice(&payload);
    out
}

/// Decode a cache blob. Returns `None` when the header, version, or input
/// hash does not match — callers rebuild from source in that case.
pub fn decode(bytes: &[u8], input_hash: &[u8; 32]) -> Option<Ontology> {
    let payload = bytes.strip_prefix(MAGIC.as_slice())?;
    let (version, payload) = payload.split_first_chunk::<4>()?;
    if u32::from_le_bytes(*version) != FORMAT_VERSION {
        return None;
    }
    let (stored_hash, payload) = payload.split_first_chunk::<32>()?;
    if stored_hash != input_hash {
        return None;
    }
    bincode::deserialize(payload).ok()
}

/// Content hash of the WordNet source files in `dir`.
pub fn hash_inputs(dir: &Path) -> Result<[u8; 32], OntologyError> {
    let mut hasher = Sha256::new();
    for name in [wordnet::INDEX_NOUN, wordnet::DATA_NOUN] {
        hasher.update(fs::read(dir.join(name))?);
    }
    let exc = dir.join(wordnet::NOUN_EXC);
    if exc.exists() {
        hasher.update(fs::read(exc)?);
    }
    Ok(hasher.finalize().into())
}

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

/// Load a WordNet directory through the cache: reuse a matching cache
/// file, otherwise parse the sources and try to write one.
pub fn load_dir_cached(dir: &Path) -> Result<(Ontology, CacheStatus), OntologyError> {
    let input_hash = hash_inputs(dir)?;
    let path = cache_path(dir);
    if let Ok(bytes) = fs::read(&path) {
        if let Some(ontology) = decode(&bytes, &input_hash) {
            return Ok((ontology, CacheStatus::Hit));
        }
    }
    let ontology = wordnet::load_dir(dir)?;
    let _ = write_atomically(&path, &encode(&ontology, &input_hash));
    Ok((ontology, CacheStatus::Rebuilt))
}

fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::synthetic;

    fn sample() -> Ontology {
        synthetic::load_str("a - alpha\nb a beta\nc a gamma\n", "fixture").unwrap()
    }

    #[test]
    fn encode_decode_round_trip() {
        let ontology = sample();
        let hash = [7u8; 32];
        let bytes = encode(&ontology, &hash);
        let back = decode(&bytes, &hash).unwrap();
        assert_eq!(back.concept_count(), ontology.concept_count());
        assert_eq!(back.lookup("beta"), ontology.lookup("beta"));
    }

    #[test]
    fn stale_hash_or_bad_version_is_rejected() {
        let ontology = sample();
        let bytes = encode(&ontology, &[7u8; 32]);
        assert!(decode(&bytes, &[8u8; 32]).is_none());

        let mut tampered = bytes.clone();
        tampered[4] ^= 0xff; // version word
        assert!(decode(&tampered, &[7u8; 32]).is_none());
        assert!(decode(b"short", &[7u8; 32]).is_none());
    }

    #[test]
    fn encoding_is_deterministic() {
        let hash = [1u8; 32];
        assert_eq!(encode(&sample(), &hash), encode(&sample(), &hash));
    }
}
