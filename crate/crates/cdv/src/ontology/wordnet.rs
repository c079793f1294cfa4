//! Reader for the WordNet 3.x plain-text noun database (`index.noun`,
//! `data.noun`, optional `noun.exc`).
//!
//! Only nouns and the hypernym relation are consumed: `@` (hypernym) and
//! `@i` (instance hypernym) pointers become candidate parents, everything
//! else is ignored. Lemmas are lowercased; `index.noun` supplies the
//! per-lemma sense order.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::OntologyError;
use crate::ontology::{build_tree, Ontology, RawOntology, RawSynset};

/// Conventional file names inside a WordNet `dict` directory.
pub const INDEX_NOUN: &str = "index.noun";
pub const DATA_NOUN: &str = "data.noun";
pub const NOUN_EXC: &str = "noun.exc";

/// Parse the three database files into loader output.
///
/// `noun_exc` may be `None`; the lemmatizer then runs on detachment rules
/// alone. License header lines (leading two spaces) are skipped.
pub fn parse_wordnet(
    index_noun: &Path,
    data_noun: &Path,
    noun_exc: Option<&Path>,
) -> Result<RawOntology, OntologyError> {
    let mut raw = RawOntology::default();

    parse_data_noun(&mut open(data_noun)?, data_noun, &mut raw)?;
    parse_index_noun(&mut open(index_noun)?, index_noun, &mut raw)?;
    if let Some(path) = noun_exc {
        parse_noun_exc(&mut open(path)?, path, &mut raw)?;
    }

    if raw.synsets.is_empty() {
        return Err(OntologyError::Integrity("no synsets".into()));
    }
    let offsets: HashSet<&str> = raw.synsets.iter().map(|s| s.key.as_str()).collect();
    for synset in &raw.synsets {
        for target in &synset.hypernyms {
            if !offsets.contains(target.as_str()) {
                return Err(OntologyError::Integrity(format!(
                    "hypernym target {target} of synset {} not found",
                    synset.key
                )));
            }
        }
    }
    Ok(raw)
}

/// Parse and assemble a WordNet `dict` directory in one step.
/// `noun.exc` is picked up when present.
pub fn load_dir(dir: &Path) -> Result<Ontology, OntologyError> {
    let exc = dir.join(NOUN_EXC);
    let raw = parse_wordnet(
        &dir.join(INDEX_NOUN),
        &dir.join(DATA_NOUN),
        exc.exists().then_some(exc.as_path()),
    )?;
    build_tree(raw)
}

fn open(path: &Path) -> Result<BufReader<File>, OntologyError> {
    Ok(BufReader::new(File::open(path).map_err(|e| {
        OntologyError::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?))
}

fn is_header(line: &str) -> bool {
    line.starts_with("  ") || line.trim().is_empty()
}

fn parse_data_noun<R: Read>(
    reader: &mut BufReader<R>,
    path: &Path,
    raw: &mut RawOntology,
) -> Result<(), OntologyError> {
    for (number, line) in reader.lines().enumerate() {
        let line = line?;
        let number = number + 1;
        if is_header(&line) {
            continue;
        }
        let body = line.split('|').next().unwrap_or(&line);
        let mut fields = body.split_whitespace();
        let mut next = |what: &str| {
            fields
                .next()
                .ok_or_else(|| OntologyError::parse(path, number, format!("missing {what}")))
        };

        let offset = next("synset_offset")?.to_string();
        let _lex_filenum = next("lex_filenum")?;
        let ss_type = next("ss_type")?;
        if ss_type != "n" {
            return Err(OntologyError::parse(
                path,
                number,
                format!("expected noun synset, got ss_type {ss_type}"),
            ));
        }
        let w_cnt = usize::from_str_radix(next("w_cnt")?, 16)
            .map_err(|_| OntologyError::parse(path, number, "w_cnt is not hexadecimal"))?;
        let mut lemmas = Vec::with_capacity(w_cnt);
        for _ in 0..w_cnt {
            let word = next("word")?;
            let _lex_id = next("lex_id")?;
            lemmas.push(word.to_lowercase());
        }
        let p_cnt: usize = next("p_cnt")?
            .parse()
            .map_err(|_| OntologyError::parse(path, number, "p_cnt is not a number"))?;
        let mut hypernyms = Vec::new();
        for _ in 0..p_cnt {
            let symbol = next("pointer_symbol")?;
            let target = next("pointer offset")?;
            let pos = next("pointer pos")?;
            let _source_target = next("pointer source/target")?;
            if (symbol == "@" || symbol == "@i") && pos == "n" {
                hypernyms.push(target.to_string());
            }
        }
        raw.synsets.push(RawSynset {
            key: offset,
            lemmas,
            hypernyms,
        });
    }
    Ok(())
}

fn parse_index_noun<R: Read>(
    reader: &mut BufReader<R>,
    path: &Path,
    raw: &mut RawOntology,
) -> Result<(), OntologyError> {
    for (number, line) in reader.lines().enumerate() {
        let line = line?;
        let number = number + 1;
        if is_header(&line) {
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut next = |what: &str| {
            fields
                .next()
                .ok_or_else(|| OntologyError::parse(path, number, format!("missing {what}")))
        };

        let lemma = next("lemma")?.to_string();
        let _pos = next("pos")?;
        let synset_cnt: usize = next("synset_cnt")?
            .parse()
            .map_err(|_| OntologyError::parse(path, number, "synset_cnt is not a number"))?;
        let p_cnt: usize = next("p_cnt")?
            .parse()
            .map_err(|_| OntologyError::parse(path, number, "p_cnt is not a number"))?;
        for _ in 0..p_cnt {
            next("ptr_symbol")?;
        }
        let _sense_cnt = next("sense_cnt")?;
        let _tagsense_cnt = next("tagsense_cnt")?;
        let mut senses = Vec::with_capacity(synset_cnt);
        for _ in 0..synset_cnt {
            senses.push(next("synset_offset")?.to_string());
        }
        raw.sense_order.insert(lemma, senses);
    }
    Ok(())
}

fn parse_noun_exc<R: Read>(
    reader: &mut BufReader<R>,
    path: &Path,
    raw: &mut RawOntology,
) -> Result<(), OntologyError> {
    for (number, line) in reader.lines().enumerate() {
        let line = line?;
        if is_header(&line) || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace().map(str::to_lowercase);
        let form = fields.next().ok_or_else(|| {
            OntologyError::parse(path, number + 1, "missing inflected form")
        })?;
        let lemmas: Vec<String> = fields.collect();
        if lemmas.is_empty() {
            return Err(OntologyError::parse(
                path,
                number + 1,
                format!("exception {form} lists no lemmas"),
            ));
        }
        raw.exceptions.push((form, lemmas));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn reader(s: &str) -> BufReader<Cursor<&str>> {
        BufReader::new(Cursor::new(s))
    }

    const DATA_FIXTURE: &str = concat!(
        "  1 dummy license header line  \n",
        "00000001 03 n 01 entity 0 001 ~ 00000002 n 0000 | that which exists  \n",
        "00000002 03 n 02 object 0 thing 0 002 @ 00000001 n 0000 ~ 00000003 n 0000 | a physical object  \n",
        "00000003 03 n 01 rock 0 001 @ 00000002 n 0000 | mineral matter  \n",
    );

    #[test]
    fn entity_synset_has_no_hypernyms() {
        let mut raw = RawOntology::default();
        parse_data_noun(&mut reader(DATA_FIXTURE), Path::new("data.noun"), &mut raw).unwrap();
        let entity = &raw.synsets[0];
        assert_eq!(entity.lemmas, vec!["entity"]);
        assert!(entity.hypernyms.is_empty());
    }

    #[test]
    fn three_synset_fixture_yields_two_hypernym_edges() {
        let mut raw = RawOntology::default();
        parse_data_noun(&mut reader(DATA_FIXTURE), Path::new("data.noun"), &mut raw).unwrap();
        assert_eq!(raw.synsets.len(), 3);
        let edges: usize = raw.synsets.iter().map(|s| s.hypernyms.len()).sum();
        assert_eq!(edges, 2);
        assert_eq!(raw.synsets[1].lemmas, vec!["object", "thing"]);
    }

    #[test]
    fn instance_hypernym_counts_as_hypernym() {
        let data = concat!(
            "00000001 03 n 01 entity 0 000 | root  \n",
            "00000002 03 n 01 london 0 001 @i 00000001 n 0000 | a place  \n",
        );
        let mut raw = RawOntology::default();
        parse_data_noun(&mut reader(data), Path::new("data.noun"), &mut raw).unwrap();
        assert_eq!(raw.synsets[1].hypernyms, vec!["00000001"]);
    }

    #[test]
    fn malformed_line_names_file_and_line() {
        let data = "00000001 03 n zz entity 0 000 | bad w_cnt  \n";
        let mut raw = RawOntology::default();
        let err =
            parse_data_noun(&mut reader(data), Path::new("data.noun"), &mut raw).unwrap_err();
        let message = err.to_string();
        assert!(message.contains("data.noun:1"), "got: {message}");
    }

    #[test]
    fn index_noun_records_sense_order() {
        let index = concat!(
            "  1 header  \n",
            "bank n 2 1 @ 2 1 00000005 00000004  \n",
            "entity n 1 1 ~ 1 1 00000001  \n",
        );
        let mut raw = RawOntology::default();
        parse_index_noun(&mut reader(index), Path::new("index.noun"), &mut raw).unwrap();
        assert_eq!(
            raw.sense_order.get("bank").unwrap(),
            &vec!["00000005".to_string(), "00000004".to_string()]
        );
    }

    #[test]
    fn noun_exc_pairs_are_lowercased_and_kept() {
        let exc = "women woman\naxes axe axis\n";
        let mut raw = RawOntology::default();
        parse_noun_exc(&mut reader(exc), Path::new("noun.exc"), &mut raw).unwrap();
        assert_eq!(raw.exceptions[0], ("women".into(), vec!["woman".into()]));
        assert_eq!(raw.exceptions[1].1, vec!["axe".to_string(), "axis".into()]);
    }

    #[test]
    fn empty_data_file_is_no_synsets() {
        let index = "entity n 1 1 ~ 1 1 00000001  \n";
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("data.noun"), "  1 header only  \n").unwrap();
        std::fs::write(dir.path().join("index.noun"), index).unwrap();
        let err = parse_wordnet(
            &dir.path().join("index.noun"),
            &dir.path().join("data.noun"),
            None,
        )
        .unwrap_err();
        assert!(err.to_string().contains("no synsets"));
    }

    #[test]
    fn missing_hypernym_target_is_integrity_error() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("data.noun"),
            "00000001 03 n 01 entity 0 001 @ 00000099 n 0000 | dangling  \n",
        )
        .unwrap();
        std::fs::write(dir.path().join("index.noun"), "entity n 1 0 1 1 00000001  \n").unwrap();
        let err = parse_wordnet(
            &dir.path().join("index.noun"),
            &dir.path().join("data.noun"),
            None,
        )
        .unwrap_err();
        assert!(err.to_string().contains("00000099"));
    }
}
