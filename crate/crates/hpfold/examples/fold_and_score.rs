//! Fold a move string into lattice coordinates, list its contacts, and
//! score it under two hydrophobic-polar energy tables.
//!
//! Run with: cargo run --example fold_and_score

use hpfold::{fold, EnergyModel, LatticeName, MoveString};

fn main() {
    // a U-shaped four-residue walk on the square lattice
    let moves = MoveString::parse("ACB", LatticeName::Square).unwrap();
    let conf = fold(&moves).unwrap();

    println!("moves {} on {}", moves.labels(), moves.lattice().as_str());
    for (i, p) in conf.points().iter().enumerate() {
        println!("  residue {i}: ({}, {}, {})", p.x, p.y, p.z);
    }

    let contacts = conf.contacts();
    println!("contacts (non-bonded lattice neighbours): {contacts:?}");

    let enc = "HPPH";
    for model_name in ["hp", "hp-li"] {
        let model = EnergyModel::by_name(model_name).unwrap();
        let energy = model.evaluate(&conf, enc).unwrap();
        println!(
            "{enc} under {model_name}: {} milli-units ({:.3})",
            energy,
            energy as f64 / 1000.0
        );
    }

    // the same shape collides if extended back toward residue 0
    let bad = MoveString::parse("ACBD", LatticeName::Square).unwrap();
    println!("folding ACBD: {}", fold(&bad).unwrap_err());
}
