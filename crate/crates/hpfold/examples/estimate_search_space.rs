//! Closed-form estimates of conformation-space size, next to exact walk
//! counts while those are still computable.
//!
//! Run with: cargo run --release --example estimate_search_space

use hpfold::{count_saws, estimate_conformations, EstimateMode, LatticeName};

fn main() {
    println!("exact square-lattice walk counts vs k^(3n) with k = 3:");
    for n in [4u64, 8, 12] {
        let exact = count_saws(LatticeName::Square, n as usize - 1, false);
        let estimate = estimate_conformations(n, 3, EstimateMode::Simplified).unwrap();
        println!("  n = {n:2}: exact {exact:>10}   estimate {}", estimate.value);
    }

    println!();
    println!("growth of the two estimate modes, k = 3:");
    println!("{:>5} {:>14} {:>14}", "n", "full digits", "simple digits");
    for n in [10u64, 25, 50, 100, 200] {
        let full = estimate_conformations(n, 3, EstimateMode::Full).unwrap();
        let simple = estimate_conformations(n, 3, EstimateMode::Simplified).unwrap();
        println!(
            "{n:>5} {:>14} {:>14}",
            full.value.to_string().len(),
            simple.value.to_string().len()
        );
    }

    println!();
    let v = estimate_conformations(50, 3, EstimateMode::Simplified).unwrap();
    println!("3^(3 * 50) = {}", v.value);
    println!("Counts like these are why the search module exists: exhaustive");
    println!("enumeration is only an oracle for short chains.");
}
