//! Command-line front end: load an ontology, score texts, files, stdin,
//! or whole corpus directories; emit text, JSON, or CSV reports and
//! per-word diversity series.

use std::io::{Read, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diversity::{DiversityReport, Scorer, SeriesPoint};
use crate::error::ScoreError;
use crate::ontology::{cache, synthetic, wordnet, Ontology};
use crate::textproc::{Extractor, Stoplist};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_ONTOLOGY: i32 = 2;
/// Empty text or no matched concepts in single-text mode.
pub const EXIT_NO_SIGNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cdv",
    version,
    about = "Conceptual diversity of text: entropy over ontology concepts",
    group(ArgGroup::new("input").required(true).multiple(false))
)]
struct Args {
    /// WordNet dict directory (or a synthetic ontology file)
    #[arg(long, env = "CDV_ONTOLOGY", value_name = "PATH")]
    ontology: PathBuf,

    /// Score this text
    #[arg(long, group = "input", value_name = "TEXT")]
    text: Option<String>,

    /// Score the contents of a file
    #[arg(long, group = "input", value_name = "FILE")]
    file: Option<PathBuf>,

    /// Read the text to score from standard input
    #[arg(long, group = "input")]
    stdin: bool,

    /// Score every file in a directory
    #[arg(long, group = "input", value_name = "DIR")]
    corpus: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Report normalized scores in [0, 1] instead of bits
    #[arg(long)]
    normalize: bool,

    /// Emit a (position, cdv) prefix series with this stride
    #[arg(long, value_name = "STRIDE")]
    series: Option<NonZeroUsize>,

    /// Disable multiword span matching
    #[arg(long)]
    no_multiword: bool,

    /// Replace the shipped stoplist with this file
    #[arg(long, value_name = "FILE")]
    stoplist: Option<PathBuf>,

    /// Number of top contributors to include in reports
    #[arg(long, value_name = "K", default_value_t = 10)]
    top: usize,

    /// Always parse the ontology from source, skipping the cache
    #[arg(long)]
    no_cache: bool,
}

/// What to score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    Inline(String),
    File(PathBuf),
    Stdin,
    Corpus(PathBuf),
}

/// Resolved invocation parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ontology_path: PathBuf,
    pub input: InputSource,
    pub format: Format,
    pub normalize: bool,
    pub series_stride: Option<NonZeroUsize>,
    pub multiword: bool,
    pub stoplist_path: Option<PathBuf>,
    pub explain_top_k: usize,
    pub use_cache: bool,
}

impl From<Args> for RunConfig {
    fn from(args: Args) -> Self {
        let input = if let Some(text) = args.text {
            InputSource::Inline(text)
        } else if let Some(file) = args.file {
            InputSource::File(file)
        } else if let Some(dir) = args.corpus {
            InputSource::Corpus(dir)
        } else {
            InputSource::Stdin
        };
        RunConfig {
            ontology_path: args.ontology,
            input,
            format: args.format,
            normalize: args.normalize,
            series_stride: args.series,
            multiword: !args.no_multiword,
            stoplist_path: args.stoplist,
            explain_top_k: args.top,
            use_cache: !args.no_cache,
        }
    }
}

/// One scored document as serialized in JSON output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DocRecord {
    pub doc_id: String,
    pub cdv: f64,
    pub cdv_normalized: f64,
    pub e_max: f64,
    pub n_concepts_ontology: usize,
    pub concept_types: usize,
    pub f_sum: u64,
    pub matched: u64,
    pub skipped: Vec<String>,
    pub top_contributors: Vec<ContributorRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContributorRecord {
    pub concept: String,
    pub lemma: String,
    pub contribution: f64,
}

impl DocRecord {
    pub fn new(doc_id: String, report: &DiversityReport, ontology: &Ontology) -> Self {
        DocRecord {
            doc_id,
            cdv: report.cdv,
            cdv_normalized: report.cdv_normalized,
            e_max: report.e_max,
            n_concepts_ontology: ontology.concept_count(),
            concept_types: report.concept_types,
            f_sum: report.f_sum,
            matched: report.matched_tokens,
            skipped: report.skipped_tokens.clone(),
            top_contributors: report
                .top_contributors
                .iter()
                .map(|c| ContributorRecord {
                    concept: c.concept.clone(),
                    lemma: c.lemma.clone(),
                    contribution: c.contribution,
                })
                .collect(),
        }
    }
}

pub const CSV_HEADERS: [&str; 7] = [
    "doc_id",
    "cdv",
    "cdv_normalized",
    "concept_types",
    "f_sum",
    "matched",
    "skipped",
];

/// Parse process arguments and run. Returns the process exit code.
pub fn main_entry() -> i32 {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    run(RunConfig::from(args))
}

/// Execute a resolved configuration, writing reports to stdout and
/// diagnostics to stderr.
pub fn run(config: RunConfig) -> i32 {
    let stoplist = match &config.stoplist_path {
        None => Stoplist::shipped().clone(),
        Some(path) => match Stoplist::from_file(path) {
            Ok(list) => list,
            Err(err) => {
                eprintln!("error: stoplist {}: {err}", path.display());
                return EXIT_USAGE;
            }
        },
    };
    let scorer = Scorer::new()
        .with_extractor(
            Extractor::new()
                .with_stoplist(stoplist)
                .multiword(config.multiword),
        )
        .top_k(config.explain_top_k);

    let ontology = match load_ontology(&config.ontology_path, config.use_cache) {
        Ok(ontology) => ontology,
        Err(err) => {
            eprintln!("error: ontology: {err}");
            return EXIT_ONTOLOGY;
        }
    };
    for warning in ontology.warnings() {
        eprintln!("warning: {warning}");
    }

    match &config.input {
        InputSource::Corpus(dir) => run_corpus(&config, &scorer, &ontology, dir),
        single => {
            let (doc_id, text) = match read_single(single) {
                Ok(pair) => pair,
                Err(err) => {
                    eprintln!("error: {err}");
                    return EXIT_USAGE;
                }
            };
            run_single(&config, &scorer, &ontology, &doc_id, &text)
        }
    }
}

/// A directory is treated as WordNet database files, a plain file as the
/// line-oriented synthetic format.
fn load_ontology(path: &Path, use_cache: bool) -> Result<Ontology, crate::error::OntologyError> {
    if path.is_dir() {
        if use_cache {
            Ok(cache::load_dir_cached(path)?.0)
        } else {
            wordnet::load_dir(path)
        }
    } else {
        synthetic::load_file(path)
    }
}

fn read_single(input: &InputSource) -> std::io::Result<(String, String)> {
    match input {
        InputSource::Inline(text) => Ok(("text".to_string(), text.clone())),
        InputSource::Stdin => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(("stdin".to_string(), text))
        }
        InputSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))
            })?;
            let doc_id = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok((doc_id, text))
        }
        InputSource::Corpus(_) => unreachable!("corpus handled separately"),
    }
}

fn run_single(
    config: &RunConfig,
    scorer: &Scorer,
    ontology: &Ontology,
    doc_id: &str,
    text: &str,
) -> i32 {
    if let Some(stride) = config.series_stride {
        return match scorer.series(text, ontology, stride) {
            Ok(points) => {
                print_series(config, ontology, &points);
                EXIT_OK
            }
            Err(err) => {
                eprintln!("error: {err}");
                EXIT_NO_SIGNAL
            }
        };
    }
    match scorer.score(text, ontology) {
        Ok(report) => {
            let record = DocRecord::new(doc_id.to_string(), &report, ontology);
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            match config.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&record).unwrap()),
                Format::Csv => {
                    let mut writer = csv::Writer::from_writer(out);
                    write_csv_header(&mut writer);
                    write_csv_record(&mut writer, &record);
                    writer.flush().unwrap();
                    Ok(())
                }
                Format::Text => print_text_report(&mut out, config, &record, &report),
            }
            .unwrap();
            EXIT_OK
        }
        Err(err) => {
            eprintln!(
                "error: {}",
                match err {
                    ScoreError::EmptyText => "empty text",
                    ScoreError::NoConcepts => "no word matched a noun concept",
                }
            );
            EXIT_NO_SIGNAL
        }
    }
}

fn print_text_report(
    out: &mut impl Write,
    config: &RunConfig,
    record: &DocRecord,
    report: &DiversityReport,
) -> std::io::Result<()> {
    if config.normalize {
        writeln!(out, "cdv_normalized: {:.6}", record.cdv_normalized)?;
        writeln!(out, "cdv: {:.4} bits", record.cdv)?;
    } else {
        writeln!(out, "cdv: {:.4} bits", record.cdv)?;
        writeln!(out, "cdv_normalized: {:.6}", record.cdv_normalized)?;
    }
    writeln!(
        out,
        "e_max: {:.4} bits over {} concepts",
        record.e_max, record.n_concepts_ontology
    )?;
    writeln!(
        out,
        "concept_types: {}  f_sum: {}  matched: {}  skipped: {}",
        record.concept_types,
        record.f_sum,
        record.matched,
        record.skipped.len()
    )?;
    if !report.literal_counts.is_empty() {
        let shown: Vec<String> = report
            .literal_counts
            .iter()
            .take(config.explain_top_k)
            .map(|l| format!("{}×{}", l.lemma, l.count))
            .collect();
        writeln!(out, "literal concepts: {}", shown.join(", "))?;
    }
    if !record.top_contributors.is_empty() {
        writeln!(out, "top contributors:")?;
        for (i, c) in record.top_contributors.iter().enumerate() {
            writeln!(
                out,
                "  {:>2}. {} ({})  {:.6}",
                i + 1,
                c.lemma,
                c.concept,
                c.contribution
            )?;
        }
    }
    Ok(())
}

fn print_series(config: &RunConfig, ontology: &Ontology, points: &[SeriesPoint]) {
    let scale = if config.normalize {
        let e_max = ontology.max_diversity();
        if e_max > 0.0 {
            1.0 / e_max
        } else {
            0.0
        }
    } else {
        1.0
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match config.format {
        Format::Json => {
            let scaled: Vec<SeriesPoint> = points
                .iter()
                .map(|p| SeriesPoint {
                    position: p.position,
                    cdv: p.cdv.map(|v| v * scale),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&scaled).unwrap()).unwrap();
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["position", "cdv"]).unwrap();
            for point in points {
                let value = match point.cdv {
                    Some(v) => format!("{}", v * scale),
                    None => String::new(),
                };
                writer
                    .write_record([point.position.to_string(), value])
                    .unwrap();
            }
            writer.flush().unwrap();
        }
        Format::Text => {
            for point in points {
                match point.cdv {
                    Some(v) => writeln!(out, "{}\t{:.6}", point.position, v * scale).unwrap(),
                    None => writeln!(out, "{}\t-", point.position).unwrap(),
                }
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct CorpusSummary {
    count: usize,
    errors: usize,
    min_cdv: Option<f64>,
    max_cdv: Option<f64>,
    mean_cdv: Option<f64>,
}

#[derive(Debug, Serialize)]
struct CorpusOutput {
    documents: Vec<DocRecord>,
    errors: Vec<CorpusError>,
    summary: CorpusSummary,
}

#[derive(Debug, Serialize)]
struct CorpusError {
    doc_id: String,
    error: String,
}

fn run_corpus(config: &RunConfig, scorer: &Scorer, ontology: &Ontology, dir: &Path) -> i32 {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .filter(|p| {
                p.file_name()
                    .map(|n| !n.to_string_lossy().starts_with('.'))
                    .unwrap_or(false)
            })
            .collect(),
        Err(err) => {
            eprintln!("error: corpus {}: {err}", dir.display());
            return EXIT_USAGE;
        }
    };
    files.sort();

    // Documents are independent; score them in parallel against the
    // shared ontology, output stays in doc-id order.
    let results: Vec<(String, Result<DocRecord, String>)> = files
        .par_iter()
        .map(|path| {
            let doc_id = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            let outcome = std::fs::read_to_string(path)
                .map_err(|e| e.to_string())
                .and_then(|text| {
                    scorer
                        .score(&text, ontology)
                        .map_err(|e| e.to_string())
                        .map(|report| DocRecord::new(doc_id.clone(), &report, ontology))
                });
            (doc_id, outcome)
        })
        .collect();

    let mut documents = Vec::new();
    let mut errors = Vec::new();
    for (doc_id, outcome) in results {
        match outcome {
            Ok(record) => documents.push(record),
            Err(error) => errors.push(CorpusError { doc_id, error }),
        }
    }

    let cdvs: Vec<f64> = documents.iter().map(|d| d.cdv).collect();
    let summary = CorpusSummary {
        count: documents.len(),
        errors: errors.len(),
        min_cdv: cdvs.iter().copied().reduce(f64::min),
        max_cdv: cdvs.iter().copied().reduce(f64::max),
        mean_cdv: if cdvs.is_empty() {
            None
        } else {
            Some(cdvs.iter().sum::<f64>() / cdvs.len() as f64)
        },
    };

    for e in &errors {
        eprintln!("error: {}: {}", e.doc_id, e.error);
    }

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match config.format {
        Format::Json => {
            let output = CorpusOutput {
                documents,
                errors,
                summary,
            };
            writeln!(out, "{}", serde_json::to_string(&output).unwrap()).unwrap();
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            write_csv_header(&mut writer);
            for record in &documents {
                write_csv_record(&mut writer, record);
            }
            writer.flush().unwrap();
            // Keep stdout purely rectangular; the summary goes to stderr.
            eprintln!("{}", summary_line(&summary));
        }
        Format::Text => {
            for record in &documents {
                writeln!(
                    out,
                    "{}: cdv={:.4} normalized={:.6} types={} f_sum={} matched={} skipped={}",
                    record.doc_id,
                    record.cdv,
                    record.cdv_normalized,
                    record.concept_types,
                    record.f_sum,
                    record.matched,
                    record.skipped.len()
                )
                .unwrap();
            }
            writeln!(out, "{}", summary_line(&summary)).unwrap();
        }
    }
    EXIT_OK
}

fn summary_line(summary: &CorpusSummary) -> String {
    match (summary.min_cdv, summary.max_cdv, summary.mean_cdv) {
        (Some(min), Some(max), Some(mean)) => format!(
            "summary: count={} errors={} min={:.4} max={:.4} mean={:.4}",
            summary.count, summary.errors, min, max, mean
        ),
        _ => format!(
            "summary: count={} errors={} (no scored documents)",
            summary.count, summary.errors
        ),
    }
}

fn write_csv_header<W: Write>(writer: &mut csv::Writer<W>) {
    writer.write_record(CSV_HEADERS).unwrap();
}

fn write_csv_record<W: Write>(writer: &mut csv::Writer<W>, record: &DocRecord) {
    writer
        .write_record([
            record.doc_id.clone(),
            record.cdv.to_string(),
            record.cdv_normalized.to_string(),
            record.concept_types.to_string(),
            record.f_sum.to_string(),
            record.matched.to_string(),
            record.skipped.len().to_string(),
        ])
        .unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn args_to_config_resolves_input() {
        let args = Args::try_parse_from([
            "cdv",
            "--ontology",
            "ont.txt",
            "--text",
            "hello",
            "--no-multiword",
        ])
        .unwrap();
        let config = RunConfig::from(args);
        assert_eq!(config.input, InputSource::Inline("hello".into()));
        assert!(!config.multiword);
        assert!(config.use_cache);
        assert_eq!(config.explain_top_k, 10);
    }

    #[test]
    fn conflicting_inputs_rejected() {
        let err = Args::try_parse_from([
            "cdv",
            "--ontology",
            "o",
            "--text",
            "x",
            "--stdin",
        ])
        .unwrap_err();
        assert_eq!(err.kind(), ErrorKind::ArgumentConflict);
    }

    #[test]
    fn missing_input_rejected() {
        let err = Args::try_parse_from(["cdv", "--ontology", "o"]).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::MissingRequiredArgument);
    }

    #[test]
    fn zero_stride_rejected() {
        let err = Args::try_parse_from([
            "cdv",
            "--ontology",
            "o",
            "--text",
            "x",
            "--series",
            "0",
        ])
        .unwrap_err();
        assert_eq!(err.kind(), ErrorKind::ValueValidation);
    }
}
