//! Amino-acid alphabet, class-scheme encoders, and hydropathy profiles.
//!
//! The twenty standard residues carry their one- and three-letter codes, a
//! property class (hydrophobic, polar-neutral, polar-positive, or
//! polar-negative), and a Kyte-Doolittle hydropathy index stored as integer
//! tenths so profile arithmetic stays exact.
//!
//! A [`ClassScheme`] maps each residue to a coarse class label. The shipped
//! schemes pair with the energy-model registry:
//!
//! | scheme   | labels        | partition                                       |
//! |----------|---------------|-------------------------------------------------|
//! | hp       | H P           | hydrophobic vs the rest                         |
//! | hpnx     | H P N X       | hydrophobic, positive, negative, polar-neutral  |
//! | hhpnx    | h H P N X     | hpnx with A and V split out into h              |
//! | crippen4 | 1 2 3 4       | 1={GYHSRNE} 2={AV} 3={LICMF} 4={PWTKDQ}         |
//! | yhhx     | Y h H X       | the crippen4 partition relabeled                |

use std::fmt;

use crate::error::{Error, Result};

/// One of the twenty standard amino acids, in the published table order:
/// ten hydrophobic, five polar-neutral, three positive, two negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Residue {
    Gly = 0,
    Ala,
    Pro,
    Val,
    Leu,
    Ile,
    Met,
    Phe,
    Tyr,
    Trp,
    Ser,
    Thr,
    Cys,
    Asn,
    Gln,
    Lys,
    His,
    Arg,
    Asp,
    Glu,
}

/// Coarse physicochemical property of a residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Hydrophobic,
    PolarNeutral,
    PolarPositive,
    PolarNegative,
}

// (one-letter, three-letter, property, hydropathy in tenths), in enum order.
const RESIDUE_DATA: [(char, &str, Property, i64); 20] = [
    ('G', "Gly", Property::Hydrophobic, -4),
    ('A', "Ala", Property::Hydrophobic, 18),
    ('P', "Pro", Property::Hydrophobic, 16),
    ('V', "Val", Property::Hydrophobic, 42),
    ('L', "Leu", Property::Hydrophobic, 38),
    ('I', "Ile", Property::Hydrophobic, 45),
    ('M', "Met", Property::Hydrophobic, 19),
    ('F', "Phe", Property::Hydrophobic, 28),
    ('Y', "Tyr", Property::Hydrophobic, -13),
    ('W', "Trp", Property::Hydrophobic, -9),
    ('S', "Ser", Property::PolarNeutral, -8),
    ('T', "Thr", Property::PolarNeutral, -7),
    ('C', "Cys", Property::PolarNeutral, 25),
    ('N', "Asn", Property::PolarNeutral, -35),
    ('Q', "Gln", Property::PolarNeutral, -35),
    ('K', "Lys", Property::PolarPositive, -39),
    ('H', "His", Property::PolarPositive, -32),
    ('R', "Arg", Property::PolarPositive, -45),
    ('D', "Asp", Property::PolarNegative, -35),
    ('E', "Glu", Property::PolarNegative, -35),
];

impl Residue {
    pub const ALL: [Residue; 20] = [
        Residue::Gly,
        Residue::Ala,
        Residue::Pro,
        Residue::Val,
        Residue::Leu,
        Residue::Ile,
        Residue::Met,
        Residue::Phe,
        Residue::Tyr,
        Residue::Trp,
        Residue::Ser,
        Residue::Thr,
        Residue::Cys,
        Residue::Asn,
        Residue::Gln,
        Residue::Lys,
        Residue::His,
        Residue::Arg,
        Residue::Asp,
        Residue::Glu,
    ];

    pub fn one_letter(self) -> char {
        RESIDUE_DATA[self as usize].0
    }

    pub fn three_letter(self) -> &'static str {
        RESIDUE_DATA[self as usize].1
    }

    pub fn property(self) -> Property {
        RESIDUE_DATA[self as usize].2
    }

    pub fn is_hydrophobic(self) -> bool {
        self.property() == Property::Hydrophobic
    }

    /// Kyte-Doolittle hydropathy index as exact integer tenths.
    pub fn hydropathy_tenths(self) -> i64 {
        RESIDUE_DATA[self as usize].3
    }

    pub fn from_one_letter(c: char) -> Option<Residue> {
        let up = c.to_ascii_uppercase();
        Residue::ALL.iter().copied().find(|r| r.one_letter() == up)
    }

    pub fn from_three_letter(s: &str) -> Option<Residue> {
        Residue::ALL
            .iter()
            .copied()
            .find(|r| r.three_letter().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_letter())
    }
}

/// Parse a residue sequence. One-letter mode reads each non-whitespace
/// character; three-letter mode splits on whitespace and hyphens. Both are
/// case-insensitive. Errors carry the offending token and its 0-based index.
pub fn parse_sequence(text: &str, three_letter: bool) -> Result<Vec<Residue>> {
    let mut seq = Vec::new();
    if three_letter {
        let tokens = text
            .split(|c: char| c.is_ascii_whitespace() || c == '-')
            .filter(|t| !t.is_empty());
        for (position, token) in tokens.enumerate() {
            match Residue::from_three_letter(token) {
                Some(r) => seq.push(r),
                None => {
                    return Err(Error::SequenceParse {
                        token: token.to_string(),
                        position,
                    })
                }
            }
        }
    } else {
        let chars = text.chars().filter(|c| !c.is_ascii_whitespace());
        for (position, c) in chars.enumerate() {
            match Residue::from_one_letter(c) {
                Some(r) => seq.push(r),
                None => {
                    return Err(Error::SequenceParse {
                        token: c.to_string(),
                        position,
                    })
                }
            }
        }
    }
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(seq)
}

/// Parse FASTA-like text: lines starting with `>` are identifiers and are
/// skipped; all other lines are concatenated as one-letter codes.
pub fn parse_fasta(text: &str) -> Result<Vec<Residue>> {
    let body: String = text
        .lines()
        .filter(|line| !line.trim_start().starts_with('>'))
        .collect::<Vec<_>>()
        .join(" ");
    parse_sequence(&body, false)
}

/// Render a sequence as its one-letter string.
pub fn one_letter_string(seq: &[Residue]) -> String {
    seq.iter().map(|r| r.one_letter()).collect()
}

/// A total mapping from the twenty residues onto a small class alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassScheme {
    name: &'static str,
    labels: Vec<char>,
    // class index per residue, in Residue enum order
    map: [u8; 20],
}

// crippen4 group per residue, in enum order:
// 1={G,Y,H,S,R,N,E} 2={A,V} 3={L,I,C,M,F} 4={P,W,T,K,D,Q}
const CRIPPEN_GROUP: [u8; 20] = [
    0, // Gly → 1
    1, // Ala → 2
    3, // Pro → 4
    1, // Val → 2
    2, // Leu → 3
    2, // Ile → 3
    2, // Met → 3
    2, // Phe → 3
    0, // Tyr → 1
    3, // Trp → 4
    0, // Ser → 1
    3, // Thr → 4
    2, // Cys → 3
    0, // Asn → 1
    3, // Gln → 4
    3, // Lys → 4
    0, // His → 1
    0, // Arg → 1
    3, // Asp → 4
    0, // Glu → 1
];

impl ClassScheme {
    /// Look up a scheme: `hp`, `hpnx`, `hhpnx`, `crippen4`, or `yhhx`.
    pub fn by_name(name: &str) -> Result<ClassScheme> {
        let (labels, map): (Vec<char>, [u8; 20]) = match name {
            "hp" => {
                let mut map = [0u8; 20];
                for r in Residue::ALL {
                    map[r as usize] = if r.is_hydrophobic() { 0 } else { 1 };
                }
                (vec!['H', 'P'], map)
            }
            "hpnx" | "hhpnx" => {
                let mut map = [0u8; 20];
                let offset = if name == "hhpnx" { 1 } else { 0 };
                for r in Residue::ALL {
                    map[r as usize] = offset
                        + match r.property() {
                            Property::Hydrophobic => 0,
                            Property::PolarPositive => 1,
                            Property::PolarNegative => 2,
                            Property::PolarNeutral => 3,
                        };
                }
                if name == "hhpnx" {
                    // A and V split out of H into the h class
                    map[Residue::Ala as usize] = 0;
                    map[Residue::Val as usize] = 0;
                    (vec!['h', 'H', 'P', 'N', 'X'], map)
                } else {
                    (vec!['H', 'P', 'N', 'X'], map)
                }
            }
            "crippen4" => (vec!['1', '2', '3', '4'], CRIPPEN_GROUP),
            // the crippen4 partition with display labels Y,h,H,X for groups 1-4
            "yhhx" => (vec!['Y', 'h', 'H', 'X'], CRIPPEN_GROUP),
            other => return Err(Error::UnknownScheme(other.to_string())),
        };
        Ok(ClassScheme {
            name: match name {
                "hp" => "hp",
                "hpnx" => "hpnx",
                "hhpnx" => "hhpnx",
                "crippen4" => "crippen4",
                _ => "yhhx",
            },
            labels,
            map,
        })
    }

    pub fn name(&self) -> &str {
        self.name
    }

    /// The ordered class alphabet.
    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    /// Class index of a residue, an index into [`ClassScheme::labels`].
    pub fn class_index(&self, r: Residue) -> usize {
        self.map[r as usize] as usize
    }

    pub fn class_label(&self, r: Residue) -> char {
        self.labels[self.class_index(r)]
    }

    /// Elementwise encoding of a sequence as a class string.
    pub fn encode(&self, seq: &[Residue]) -> String {
        seq.iter().map(|&r| self.class_label(r)).collect()
    }

    /// Residues mapping to the class at `index`, in table order.
    pub fn preimage(&self, index: usize) -> Vec<Residue> {
        Residue::ALL
            .iter()
            .copied()
            .filter(|&r| self.class_index(r) == index)
            .collect()
    }
}

/// A sliding-window hydropathy profile over a sequence. Window sums are kept
/// as exact integer tenths; means are produced on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HydropathyProfile {
    window: usize,
    sums_tenths: Vec<i64>,
}

/// Mean hydropathy over every window of odd width `window ≤ len`.
pub fn hydropathy_profile(seq: &[Residue], window: usize) -> Result<HydropathyProfile> {
    if window.is_multiple_of(2) {
        return Err(Error::WindowEven(window));
    }
    if window > seq.len() {
        return Err(Error::WindowTooLarge {
            window,
            len: seq.len(),
        });
    }
    let tenths: Vec<i64> = seq.iter().map(|r| r.hydropathy_tenths()).collect();
    let mut sums = Vec::with_capacity(seq.len() - window + 1);
    let mut sum: i64 = tenths[..window].iter().sum();
    sums.push(sum);
    for i in window..tenths.len() {
        sum += tenths[i] - tenths[i - window];
        sums.push(sum);
    }
    Ok(HydropathyProfile {
        window,
        sums_tenths: sums,
    })
}

/// Integer division rounding half away from zero.
fn div_round_half_away(numer: i64, denom: i64) -> i64 {
    debug_assert!(denom > 0);
    if numer >= 0 {
        (numer + denom / 2) / denom
    } else {
        -((-numer + denom / 2) / denom)
    }
}

impl HydropathyProfile {
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn len(&self) -> usize {
        self.sums_tenths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums_tenths.is_empty()
    }

    /// Exact window sums in tenths.
    pub fn sums_tenths(&self) -> &[i64] {
        &self.sums_tenths
    }

    /// Window means in hundredths, rounded half away from zero.
    /// The mean in tenths is `sum/window`, so hundredths are `10·sum/window`.
    pub fn means_centi(&self) -> Vec<i64> {
        self.sums_tenths
            .iter()
            .map(|&s| div_round_half_away(10 * s, self.window as i64))
            .collect()
    }

    /// Display strings with two decimals, e.g. `4.50`, `-0.35`.
    pub fn display_values(&self) -> Vec<String> {
        self.means_centi()
            .iter()
            .map(|&c| format_centi(c))
            .collect()
    }
}

/// Format a hundredths value as a signed two-decimal string.
pub fn format_centi(centi: i64) -> String {
    let sign = if centi < 0 { "-" } else { "" };
    let mag = centi.abs();
    format!("{sign}{}.{:02}", mag / 100, mag % 100)
}

/// Format a milli-unit value as a signed three-decimal string, e.g. `-0.317`.
pub fn format_milli(milli: i64) -> String {
    let sign = if milli < 0 { "-" } else { "" };
    let mag = milli.abs();
    format!("{sign}{}.{:03}", mag / 1000, mag % 1000)
}
