//! Count self-avoiding walks on each lattice, and show how pinning the
//! first move interacts with lattice symmetry.
//!
//! Run with: cargo run --release --example count_walks

use hpfold::{count_saws, LatticeName, LatticeSpec};
use num_bigint::BigUint;

fn main() {
    println!("free walks c(n):");
    print!("{:>3}", "n");
    for lattice in LatticeName::ALL {
        print!("{:>10}", lattice.as_str());
    }
    println!();
    for steps in 1..=5 {
        print!("{steps:>3}");
        for lattice in LatticeName::ALL {
            print!("{:>10}", count_saws(lattice, steps, false));
        }
        println!();
    }

    println!();
    println!("c(n) versus coordination * fixed-first-move count, n = 3:");
    for lattice in LatticeName::ALL {
        let z = LatticeSpec::get(lattice).basis_size();
        let free = count_saws(lattice, 3, false);
        let fixed = count_saws(lattice, 3, true);
        let product = fixed.clone() * BigUint::from(z);
        let verdict = if product == free { "equal" } else { "differs" };
        println!(
            "  {:7} c(3) = {:5}  z * c_fixed(3) = {} * {} = {:5}  {}",
            lattice.as_str(),
            free,
            z,
            fixed,
            product,
            verdict
        );
    }

    println!();
    println!("On square, hex, cubic, and fcc the point group moves any first");
    println!("step to any other, so fixing it divides the count by z. The");
    println!("hcp contact shell has two symmetry orbits (six in-plane and six");
    println!("out-of-plane directions), so its counts do not divide evenly.");
}
