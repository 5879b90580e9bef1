//! Simplified on-lattice protein structure prediction.
//!
//! Chains of residues are folded as self-avoiding walks on one of five exact
//! lattices (square, hexagonal, simple cubic, FCC, and a published HCP-style
//! shell). Conformations are scored by pairwise contact energies under
//! HP-family models or arbitrary 20×20 matrices, ground states are found by
//! exhaustive enumeration where feasible, and larger chains are searched with
//! chain growth plus simulated annealing.
//!
//! All geometry is exact: coordinates live in Z[√3] with integer components,
//! so contact tests and symmetry checks never involve floating point. Energies
//! are exact integers in milli-units (the HP model's −1 per H–H contact is
//! stored as −1000).
//!
//! Quick start:
//!
//! ```
//! use hpfold::{fold, parse_sequence, ClassScheme, EnergyModel, LatticeName, MoveString};
//!
//! let lattice = LatticeName::Square;
//! let seq = parse_sequence("VKKV", false).unwrap();
//! let enc = ClassScheme::by_name("hp").unwrap().encode(&seq);
//! assert_eq!(enc, "HPPH");
//! let model = EnergyModel::by_name("hp").unwrap();
//! // A=+x, C=+y, B=-x on the square lattice: a U-shape with one H-H contact
//! let moves = MoveString::parse("ACB", lattice).unwrap();
//! let conf = fold(&moves).unwrap();
//! assert_eq!(model.evaluate(&conf, &enc).unwrap(), -1000);
//! ```

pub mod chain;
pub mod cli;
pub mod energy;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod search;
pub mod seqcodec;

pub use chain::{fold, Conformation, MoveString};
pub use energy::{load_matrix, parse_matrix, EnergyModel, MODEL_NAMES};
pub use error::{Error, Result};
pub use oracle::{
    count_saws, enumerate_ground_states, estimate_conformations, CountEstimate, EnumOptions,
    EnumerationReport, EstimateMode,
};
pub use search::{anneal, chain_grow, SearchConfig, SearchResult};
pub use geometry::{LatticeName, LatticePoint, LatticeSpec, NormSq, Permutation, RingScalar};
pub use seqcodec::{
    hydropathy_profile, one_letter_string, parse_fasta, parse_sequence, ClassScheme,
    HydropathyProfile, Property, Residue,
};
