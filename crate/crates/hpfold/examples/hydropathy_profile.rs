//! Sliding-window hydropathy profile of a peptide, computed in exact
//! tenths and displayed as rounded means.
//!
//! Run with: cargo run --example hydropathy_profile

use hpfold::{hydropathy_profile, one_letter_string, parse_sequence};

fn main() {
    // a 20-residue stretch mixing a hydrophobic core with charged ends
    let seq = parse_sequence("DEKRAVILFFLIVAGGSTNQ", false).unwrap();
    let text = one_letter_string(&seq);

    for window in [1usize, 5, 9] {
        let profile = hydropathy_profile(&seq, window).unwrap();
        println!("window {window}:");
        let values = profile.display_values();
        let offset = window / 2;
        for (i, mean) in values.iter().enumerate() {
            let center = i + offset;
            let bar_len = profile.sums_tenths()[i].max(0) as usize / 5;
            println!(
                "  {:2} {}  {:>6}  {}",
                center,
                text.as_bytes()[center] as char,
                mean,
                "#".repeat(bar_len)
            );
        }
        println!();
    }
    println!("Sums are exact integers in tenths; means are shown in");
    println!("hundredths with round-half-away-from-zero.");
}
