//! The whole pipeline on a hand-made ontology, one stage at a time:
//! clean -> tokenize -> extract -> assign -> propagate -> entropy.
//!
//! Usage: cargo run --example synthetic_ontology

use cdv::diversity::{assign_frequencies, propagate_frequencies};
use cdv::ontology::synthetic;
use cdv::{calculate_entropy, clean, extract_concepts, normalize, tokenize};

const TREE: &str = "
# A toy hierarchy. One node per line: <key> <parent-or-'-'> <lemmas,...>
living  -       living_thing
animal  living  animal
plant   living  plant
bird    animal  bird
dog     animal  dog
parrot  bird    parrot
owl     bird    owl
daisy   plant   daisy
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ontology = synthetic::load_str(TREE, "inline")?;
    println!(
        "ontology: {} concepts, max diversity log2(N) = {:.4} bits",
        ontology.concept_count(),
        ontology.max_diversity()
    );

    for text in ["A parrot!", "Some animal...", "The animal was a parrot."] {
        println!("\ntext: {text:?}");
        let cleaned = clean(text);
        println!("  cleaned:  {cleaned:?}");
        let tokens = tokenize(&cleaned);
        let counts = extract_concepts(&tokens, &ontology);
        print!("  literal: ");
        for (&node, &count) in &counts.counts {
            print!(" {}x{}", ontology.node(node).primary_lemma(), count);
        }
        println!();

        let scratch = assign_frequencies(&counts, ontology.concept_count());
        let table = propagate_frequencies(&ontology, scratch);
        print!("  propagated ({} types, f_sum {}):", table.concept_types(), table.f_sum);
        for &(node, frequency) in &table.entries {
            print!(" {}={}", ontology.node(node).primary_lemma(), frequency);
        }
        println!();

        let cdv = calculate_entropy(&table);
        println!(
            "  cdv = {:.4} bits (normalized {:.4})",
            cdv,
            normalize(cdv, ontology.max_diversity())
        );
    }
    Ok(())
}
