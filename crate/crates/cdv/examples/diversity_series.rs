//! Watch diversity evolve as a text unfolds: the prefix series scores
//! every stride-th word position, so you can see where a text turns
//! general or narrows down.
//!
//! Usage: cargo run --example diversity_series [-- <stride>]

use std::num::NonZeroUsize;
use std::path::PathBuf;

use cdv::ontology::wordnet;

const TEXT: &str = "I keep a lounger on the porch. Last summer an unknown \
animal, maybe a bird, kept visiting it at dusk. The whole thing became an \
entity of neighborhood legend.";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let stride: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(2);
    let stride = NonZeroUsize::new(stride).ok_or("stride must be at least 1")?;

    let dict = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata/wordnet/dict");
    let ontology = wordnet::load_dir(&dict)?;
    let e_max = ontology.max_diversity();

    println!("{TEXT}\n");
    println!("word  cdv (bits)  0 {:>56} {e_max:.2}", "...");
    for point in cdv::diversity_series(TEXT, &ontology, stride)? {
        match point.cdv {
            Some(value) => {
                let bar = "#".repeat((value / e_max * 60.0).round() as usize);
                println!("{:>4}  {value:>9.4}  {bar}", point.position);
            }
            None => println!("{:>4}  {:>9}  (no concepts yet)", point.position, "-"),
        }
    }
    Ok(())
}
