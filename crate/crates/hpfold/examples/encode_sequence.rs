//! Translate an amino-acid sequence into the class alphabets used by the
//! energy models, and show which residues each class contains.
//!
//! Run with: cargo run --example encode_sequence

use hpfold::{one_letter_string, parse_sequence, ClassScheme};

fn main() {
    // met-enkephalin, in both accepted input spellings
    let seq = parse_sequence("YGGFM", false).unwrap();
    let same = parse_sequence("tyr-gly-gly-phe-met", true).unwrap();
    assert_eq!(seq, same);
    println!("sequence: {}", one_letter_string(&seq));

    for name in ["hp", "hpnx", "hhpnx", "crippen4", "yhhx"] {
        let scheme = ClassScheme::by_name(name).unwrap();
        println!("  {:9} -> {}", name, scheme.encode(&seq));
    }

    println!();
    println!("class membership under hpnx:");
    let hpnx = ClassScheme::by_name("hpnx").unwrap();
    for (i, label) in hpnx.labels().iter().enumerate() {
        println!(
            "  {} = {{{}}}",
            label,
            one_letter_string(&hpnx.preimage(i))
        );
    }
}
