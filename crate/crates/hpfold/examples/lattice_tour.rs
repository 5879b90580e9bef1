//! Walk through the five supported lattices: basis vectors in exact
//! ring coordinates, coordination number, contact shell, reverse-move
//! pairing, and point-group size.
//!
//! Run with: cargo run --example lattice_tour

use hpfold::{LatticeName, LatticeSpec};

fn main() {
    for name in LatticeName::ALL {
        let lat = LatticeSpec::get(name);
        println!(
            "{} (dimension {}, coordination {})",
            name.as_str(),
            lat.dimension(),
            lat.basis_size()
        );
        println!("  contact |d|^2 = {}", lat.contact_norm_sq());
        println!("  point group: {} symmetries", lat.point_group().len());
        for (i, v) in lat.basis().iter().enumerate() {
            let back = lat.opposite(i);
            println!(
                "  {} = ({}, {}, {})   reverse move {}",
                lat.move_label(i).unwrap(),
                v.x,
                v.y,
                v.z,
                lat.move_label(back).unwrap()
            );
        }
        println!();
    }
    println!("All coordinates are a + b*sqrt(3) pairs scaled by 4, so every");
    println!("basis vector, distance, and symmetry check is exact integer");
    println!("arithmetic; no floating point is involved anywhere.");
}
