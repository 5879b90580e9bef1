//! Load a contact-energy matrix from text instead of the built-in
//! registry, then score a fold with it.
//!
//! Run with: cargo run --example custom_matrix

use hpfold::{fold, parse_matrix, LatticeName, MoveString};

const MATRIX: &str = "\
# three solvent classes: oily (O), wet (W), indifferent (I)
# values are symmetric and read in fractional energy units
O W I
O -2.5  0.5  0
W  0.5 -0.25 0
I  0    0    0
";

fn main() {
    let model = parse_matrix(MATRIX, "solvent3").unwrap();
    println!("loaded {} with alphabet {:?}", model.name(), model.alphabet());

    let moves = MoveString::parse("AACBBCAA", LatticeName::Square).unwrap();
    let conf = fold(&moves).unwrap();
    for enc in ["OWOWOWOWO", "OOOOWWWWI"] {
        let energy = model.evaluate(&conf, enc).unwrap();
        println!("  {enc} on {}: {} milli-units", moves.labels(), energy);
    }

    // entries are parsed exactly: 0.5 means 500 milli-units, and more than
    // three fractional digits is rejected rather than rounded
    let too_fine = "A\nA 0.0001\n";
    println!("0.0001 entry: {}", parse_matrix(too_fine, "x").unwrap_err());

    let lopsided = "A B\nA 0 1\nB 2 0\n";
    println!("asymmetric table: {}", parse_matrix(lopsided, "x").unwrap_err());
}
