//! Command-line surface: encode, score, enumerate, search, hydropathy, and
//! estimate subcommands over the library.
//!
//! Exit codes: 0 on success, 2 on any argument or validation problem (with a
//! single diagnostic line on the error stream), 1 on internal failures such
//! as an unwritable output stream. All output is deterministic given the
//! invocation, including the seed.
//!
//! Sequences come from exactly one source: `--seq` inline or `--seq-file`
//! (FASTA-like, `>` headers skipped). With `--scheme`, the sequence is parsed
//! as residues and encoded; without it, the sequence is taken directly as a
//! class string over the model's alphabet, which is how residue-level 20×20
//! matrices and pre-encoded HP-style strings are scored.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::energy::{load_matrix, EnergyModel};
use crate::error::{Error, Result};
use crate::geometry::LatticeName;
use crate::oracle::{enumerate_ground_states, estimate_conformations, EnumOptions, EstimateMode};
use crate::search::{anneal, SearchConfig};
use crate::seqcodec::{
    format_milli, hydropathy_profile, one_letter_string, parse_fasta, parse_sequence, ClassScheme,
    Residue,
};
use crate::{fold, MoveString};

#[derive(Parser)]
#[command(
    name = "hpfold",
    version,
    about = "Lattice protein folding: exact enumeration, contact-energy scoring, and annealed search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a residue sequence as a class string
    Encode {
        #[command(flatten)]
        seq: SeqArgs,
        /// Class scheme: hp | hpnx | hhpnx | crippen4 | yhhx
        #[arg(long)]
        scheme: String,
    },
    /// Fold a move string and score it under an energy model
    Score {
        /// Lattice: square | hex | cubic | fcc | hcp
        #[arg(long)]
        lattice: String,
        /// Move labels, A = first basis vector
        #[arg(long)]
        moves: String,
        #[command(flatten)]
        seq: SeqArgs,
        /// Encode residues with this scheme; omit to read the sequence as a
        /// class string
        #[arg(long)]
        scheme: Option<String>,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustively enumerate all walks and report the exact ground state
    Enumerate {
        /// Lattice: square | hex | cubic | fcc | hcp
        #[arg(long)]
        lattice: String,
        #[command(flatten)]
        seq: SeqArgs,
        /// Encode residues with this scheme; omit to read the sequence as a
        /// class string
        #[arg(long)]
        scheme: Option<String>,
        #[command(flatten)]
        model: ModelArgs,
        /// Pin the first move to basis vector A
        #[arg(long)]
        fix_first_move: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Maximum minimum-energy representatives to report
        #[arg(long, default_value_t = 10)]
        reps: usize,
    },
    /// Search for low-energy folds by simulated annealing
    Search {
        /// Lattice: square | hex | cubic | fcc | hcp
        #[arg(long)]
        lattice: String,
        #[command(flatten)]
        seq: SeqArgs,
        /// Encode residues with this scheme; omit to read the sequence as a
        /// class string
        #[arg(long)]
        scheme: Option<String>,
        #[command(flatten)]
        model: ModelArgs,
        /// Seed for the ChaCha8 generator
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Mutation steps per pass
        #[arg(long, default_value_t = 1000)]
        iterations: u64,
        /// Initial temperature, milli-units
        #[arg(long, default_value_t = 2000.0)]
        t0: f64,
        /// Geometric cooling factor per iteration, in (0,1)
        #[arg(long, default_value_t = 0.995)]
        alpha: f64,
        /// Additional independent passes
        #[arg(long, default_value_t = 0)]
        restarts: u64,
        /// Record the best-so-far trace
        #[arg(long)]
        trace: bool,
        /// json emits the result object; tsv emits the trace table
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sliding-window hydropathy profile of a sequence
    Hydropathy {
        #[command(flatten)]
        seq: SeqArgs,
        /// Window width, odd and at most the sequence length
        #[arg(long, default_value_t = 1)]
        window: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed-form conformation-count estimate for an n-residue chain
    Estimate {
        /// Chain length in residues
        #[arg(long)]
        n: u64,
        /// Discrete states per torsion angle
        #[arg(long)]
        k: u64,
        /// full (k per backbone and side-chain angle) | simplified (k^(3n))
        #[arg(long, default_value = "full")]
        mode: String,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["seq", "seq_file"])))]
struct SeqArgs {
    /// Inline sequence
    #[arg(long)]
    seq: Option<String>,
    /// FASTA-like sequence file ('>' headers skipped)
    #[arg(long)]
    seq_file: Option<PathBuf>,
    /// Parse the inline sequence as three-letter residue codes
    #[arg(long, requires = "seq")]
    three_letter: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("energy").required(true).args(["model", "matrix_file"])))]
struct ModelArgs {
    /// Registry model: hp | hp-li | hp-backofen | hpnx-a | hpnx-b |
    /// crippen1234 | yhhx | yhhx-corrected | hhpnx
    #[arg(long)]
    model: Option<String>,
    /// External matrix file
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            // one diagnostic line: the message paragraph, usage text dropped
            let rendered = e.render().to_string();
            let message = rendered
                .split("\n\n")
                .next()
                .unwrap_or("error: invalid arguments")
                .split_whitespace()
                .collect::<Vec<_>>()
                .join(" ");
            eprintln!("{message}");
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                eprintln!("error: cannot write output");
                return 1;
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Encode { seq, scheme } => {
            let scheme = ClassScheme::by_name(&scheme)?;
            let residues = load_residues(&seq)?;
            Ok(format!("{}\n", scheme.encode(&residues)))
        }
        Command::Score {
            lattice,
            moves,
            seq,
            scheme,
            model,
            format,
        } => {
            let lattice = LatticeName::parse(&lattice)?;
            let model = load_model(&model)?;
            let enc = class_string(&seq, scheme.as_deref(), &model)?;
            let moves = MoveString::parse(&moves, lattice)?;
            let conf = fold(&moves)?;
            let energy = model.evaluate(&conf, &enc)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Wire<'a> {
                        lattice: &'a str,
                        moves: String,
                        enc: &'a str,
                        model: &'a str,
                        energy_milli: i64,
                    }
                    Ok(format!(
                        "{}\n",
                        serde_json::to_string(&Wire {
                            lattice: lattice.as_str(),
                            moves: moves.labels(),
                            enc: &enc,
                            model: model.name(),
                            energy_milli: energy,
                        })
                        .expect("score serialization cannot fail")
                    ))
                }
                Format::Tsv => Ok(format!("{}\n", format_milli(energy))),
            }
        }
        Command::Enumerate {
            lattice,
            seq,
            scheme,
            model,
            fix_first_move,
            workers,
            reps,
        } => {
            let lattice = LatticeName::parse(&lattice)?;
            let model = load_model(&model)?;
            let enc = class_string(&seq, scheme.as_deref(), &model)?;
            if workers < 1 {
                return Err(Error::InvalidConfig("workers must be at least 1".into()));
            }
            let report = enumerate_ground_states(
                lattice,
                &enc,
                &model,
                &EnumOptions {
                    fix_first_move,
                    workers,
                    representative_cap: reps,
                },
            )?;
            Ok(format!("{}\n", report.to_json_string()))
        }
        Command::Search {
            lattice,
            seq,
            scheme,
            model,
            seed,
            iterations,
            t0,
            alpha,
            restarts,
            trace,
            format,
        } => {
            let lattice = LatticeName::parse(&lattice)?;
            let model = load_model(&model)?;
            let enc = class_string(&seq, scheme.as_deref(), &model)?;
            let config = SearchConfig {
                seed,
                iterations,
                t0_milli: t0,
                alpha,
                restarts,
                record_trace: trace || format == Format::Tsv,
            };
            let result = anneal(lattice, &enc, &model, &config)?;
            match format {
                Format::Json => Ok(format!("{}\n", result.to_json_string())),
                Format::Tsv => {
                    let mut out = String::from("iteration\tbest_energy\n");
                    for &(step, energy) in result.trace().expect("tsv runs record a trace") {
                        writeln!(out, "{step}\t{}", format_milli(energy)).unwrap();
                    }
                    Ok(out)
                }
            }
        }
        Command::Hydropathy { seq, window, format } => {
            let residues = load_residues(&seq)?;
            let profile = hydropathy_profile(&residues, window)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Wire<'a> {
                        sequence: String,
                        window: usize,
                        sum_tenths: &'a [i64],
                        mean: Vec<String>,
                    }
                    Ok(format!(
                        "{}\n",
                        serde_json::to_string(&Wire {
                            sequence: one_letter_string(&residues),
                            window,
                            sum_tenths: profile.sums_tenths(),
                            mean: profile.display_values(),
                        })
                        .expect("profile serialization cannot fail")
                    ))
                }
                Format::Tsv => {
                    let mut out = String::from("position\tmean\n");
                    for (i, value) in profile.display_values().iter().enumerate() {
                        writeln!(out, "{i}\t{value}").unwrap();
                    }
                    Ok(out)
                }
            }
        }
        Command::Estimate { n, k, mode } => {
            let mode = EstimateMode::parse(&mode)?;
            let estimate = estimate_conformations(n, k, mode)?;
            Ok(format!("{}\n", estimate.value))
        }
    }
}

fn load_residues(args: &SeqArgs) -> Result<Vec<Residue>> {
    match (&args.seq, &args.seq_file) {
        (Some(text), None) => parse_sequence(text, args.three_letter),
        (None, Some(path)) => parse_fasta(&std::fs::read_to_string(path)?),
        _ => unreachable!("clap enforces exactly one sequence source"),
    }
}

/// The class string to evaluate: scheme-encoded residues, or the sequence
/// itself when no scheme is given.
fn class_string(args: &SeqArgs, scheme: Option<&str>, model: &EnergyModel) -> Result<String> {
    match scheme {
        Some(name) => {
            let scheme = ClassScheme::by_name(name)?;
            if scheme.labels() != model.alphabet() {
                return Err(Error::SchemeModelMismatch {
                    scheme: scheme.name().to_string(),
                    model: model.name().to_string(),
                });
            }
            Ok(scheme.encode(&load_residues(args)?))
        }
        None => {
            let enc: String = match (&args.seq, &args.seq_file) {
                (Some(text), None) => {
                    if args.three_letter {
                        one_letter_string(&parse_sequence(text, true)?)
                    } else {
                        text.split_whitespace().collect()
                    }
                }
                (None, Some(path)) => std::fs::read_to_string(path)?
                    .lines()
                    .filter(|line| !line.trim_start().starts_with('>'))
                    .flat_map(str::split_whitespace)
                    .collect(),
                _ => unreachable!("clap enforces exactly one sequence source"),
            };
            if enc.is_empty() {
                return Err(Error::EmptySequence);
            }
            Ok(enc)
        }
    }
}

fn load_model(args: &ModelArgs) -> Result<EnergyModel> {
    match (&args.model, &args.matrix_file) {
        (Some(name), None) => EnergyModel::by_name(name),
        (None, Some(path)) => load_matrix(path),
        _ => unreachable!("clap enforces exactly one energy source"),
    }
}

// Keep the derive assertions close to the surface they guard.
#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn encode_matches_library() {
        let out = execute(Command::Encode {
            seq: SeqArgs {
                seq: Some("YGGFM".into()),
                seq_file: None,
                three_letter: false,
            },
            scheme: "hp".into(),
        })
        .unwrap();
        assert_eq!(out, "HHHHH\n");
    }

    #[test]
    fn score_without_scheme_reads_class_string() {
        let out = execute(Command::Score {
            lattice: "square".into(),
            moves: "ACB".into(),
            seq: SeqArgs {
                seq: Some("HPPH".into()),
                seq_file: None,
                three_letter: false,
            },
            scheme: None,
            model: ModelArgs {
                model: Some("hp".into()),
                matrix_file: None,
            },
            format: Format::Tsv,
        })
        .unwrap();
        assert_eq!(out, "-1.000\n");
    }

    #[test]
    fn scheme_and_model_alphabets_must_match() {
        let err = execute(Command::Score {
            lattice: "square".into(),
            moves: "ACB".into(),
            seq: SeqArgs {
                seq: Some("YGGF".into()),
                seq_file: None,
                three_letter: false,
            },
            scheme: Some("hpnx".into()),
            model: ModelArgs {
                model: Some("hp".into()),
                matrix_file: None,
            },
            format: Format::Json,
        })
        .unwrap_err();
        assert!(matches!(err, Error::SchemeModelMismatch { .. }));
    }

    #[test]
    fn estimate_prints_decimal() {
        let out = execute(Command::Estimate {
            n: 2,
            k: 2,
            mode: "full".into(),
        })
        .unwrap();
        assert_eq!(out, "64\n");
    }
}
