//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any operation in this crate.
///
/// Every variant describes an input the caller can fix; none of them wrap
/// internal invariant violations (those panic).
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown lattice '{0}' (expected square | hex | cubic | fcc | hcp)")]
    UnknownLattice(String),

    #[error("unknown energy model '{0}'")]
    UnknownModel(String),

    #[error("unknown class scheme '{0}' (expected hp | hpnx | hhpnx | crippen4 | yhhx)")]
    UnknownScheme(String),

    #[error("move index {index} out of range for lattice with {basis_size} basis vectors")]
    MoveIndexOutOfRange { index: usize, basis_size: usize },

    #[error("invalid move label '{label}' at position {position}")]
    BadMoveLabel { label: char, position: usize },

    #[error("walk collides with itself at residue index {index}")]
    Collision { index: usize },

    #[error("cannot parse residue token '{token}' at position {position}")]
    SequenceParse { token: String, position: usize },

    #[error("sequence is empty")]
    EmptySequence,

    #[error("window must be odd, got {0}")]
    WindowEven(usize),

    #[error("window {window} exceeds sequence length {len}")]
    WindowTooLarge { window: usize, len: usize },

    #[error("encoding length {got} does not match chain length {expected}")]
    EncodingLength { expected: usize, got: usize },

    #[error("class label '{label}' not in alphabet of model '{model}'")]
    UnknownClassLabel { label: char, model: String },

    #[error("matrix file line {line}: {message}")]
    MatrixFormat { line: usize, message: String },

    #[error("matrix file line {line}: row has {got} values, expected {expected}")]
    MatrixDimension {
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("matrix is not symmetric: entry ({a},{b}) differs from ({b},{a})")]
    MatrixAsymmetric { a: char, b: char },

    #[error("scheme alphabet '{scheme}' does not match model alphabet '{model}'")]
    SchemeModelMismatch { scheme: String, model: String },

    #[error("chain needs at least {min} residues, got {got}")]
    ChainTooShort { min: usize, got: usize },

    #[error("invalid search config: {0}")]
    InvalidConfig(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
