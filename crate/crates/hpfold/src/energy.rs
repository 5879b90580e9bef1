//! Contact-energy models and the conformation evaluator.
//!
//! An [`EnergyModel`] is a symmetric matrix of exact integer milli-units over
//! a small class alphabet: the printed value −0.317 is stored as −317. The
//! registry ships the published HP-family matrices; arbitrary matrices (for
//! instance 20×20 residue-level potentials) load from plain text files.
//!
//! The energy of a conformation is the sum of matrix entries over its
//! contacts, pairs of residues adjacent on the lattice but not in the chain.
//! Lower is better throughout.
//!
//! Registry models and alphabets:
//!
//! | name           | alphabet  | notes                                     |
//! |----------------|-----------|-------------------------------------------|
//! | hp             | H P       | single −1 reward for H-H                  |
//! | hp-li          | H P       | H-H −3, H-P −1                            |
//! | hp-backofen    | H P       | H-H −2.5, H-P −1                          |
//! | hpnx-a         | H P N X   | charge split, neutral P-P and N-N         |
//! | hpnx-b         | H P N X   | same with P-P and N-N penalized +1        |
//! | crippen1234    | 1 2 3 4   | statistical potential, three decimals     |
//! | yhhx           | Y h H X   | integer rescale of crippen1234, h-h −2    |
//! | yhhx-corrected | Y h H X   | the published correction, h-h +2          |
//! | hhpnx          | h H P N X | hpnx-b with the A/V class spliced in      |
//!
//! The yhhx tables carry a per-class occurrence-frequency row (`f_q`); it is
//! stored as metadata and plays no role in evaluation.

use crate::chain::Conformation;
use crate::error::{Error, Result};

/// A symmetric contact-energy matrix over a class alphabet, in milli-units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyModel {
    name: String,
    alphabet: Vec<char>,
    // row-major k×k
    matrix: Vec<i64>,
    class_freq: Option<Vec<i64>>,
}

/// Names accepted by [`EnergyModel::by_name`], in documentation order.
pub const MODEL_NAMES: [&str; 9] = [
    "hp",
    "hp-li",
    "hp-backofen",
    "hpnx-a",
    "hpnx-b",
    "crippen1234",
    "yhhx",
    "yhhx-corrected",
    "hhpnx",
];

impl EnergyModel {
    /// Look up a published model by registry name.
    pub fn by_name(name: &str) -> Result<EnergyModel> {
        let (alphabet, rows, class_freq): (&[char], &[&[i64]], Option<&[i64]>) = match name {
            "hp" => (&['H', 'P'], &[&[-1000, 0], &[0, 0]], None),
            "hp-li" => (&['H', 'P'], &[&[-3000, -1000], &[-1000, 0]], None),
            "hp-backofen" => (&['H', 'P'], &[&[-2500, -1000], &[-1000, 0]], None),
            "hpnx-a" => (
                &['H', 'P', 'N', 'X'],
                &[
                    &[-4000, 0, 0, 0],
                    &[0, 0, -1000, 0],
                    &[0, -1000, 0, 0],
                    &[0, 0, 0, 0],
                ],
                None,
            ),
            "hpnx-b" => (
                &['H', 'P', 'N', 'X'],
                &[
                    &[-4000, 0, 0, 0],
                    &[0, 1000, -1000, 0],
                    &[0, -1000, 1000, 0],
                    &[0, 0, 0, 0],
                ],
                None,
            ),
            "crippen1234" => (
                &['1', '2', '3', '4'],
                &[
                    &[-12, -74, -54, 123],
                    &[-74, 123, -317, 156],
                    &[-54, -317, -263, -10],
                    &[123, 156, -10, -4],
                ],
                None,
            ),
            "yhhx" => (
                &['Y', 'h', 'H', 'X'],
                &[
                    &[0, -1000, -1000, 2000],
                    &[-1000, -2000, -4000, 2000],
                    &[-1000, -4000, -3000, 0],
                    &[2000, 2000, 0, 0],
                ],
                Some(&[10, 16, 36, 28]),
            ),
            "yhhx-corrected" => (
                &['Y', 'h', 'H', 'X'],
                &[
                    &[0, -1000, -1000, 2000],
                    &[-1000, 2000, -4000, 2000],
                    &[-1000, -4000, -3000, 0],
                    &[2000, 2000, 0, 0],
                ],
                Some(&[10, 16, 36, 28]),
            ),
            "hhpnx" => (
                &['h', 'H', 'P', 'N', 'X'],
                &[
                    &[2000, -4000, 0, 0, 0],
                    &[-4000, -3000, 0, 0, 0],
                    &[0, 0, 1000, -1000, 0],
                    &[0, 0, -1000, 1000, 0],
                    &[0, 0, 0, 0, 0],
                ],
                None,
            ),
            other => return Err(Error::UnknownModel(other.to_string())),
        };
        let model = EnergyModel {
            name: name.to_string(),
            alphabet: alphabet.to_vec(),
            matrix: rows.iter().flat_map(|r| r.iter().copied()).collect(),
            class_freq: class_freq.map(<[i64]>::to_vec),
        };
        model.check_symmetry()?;
        Ok(model)
    }

    /// Build a model from parts, enforcing symmetry and square shape.
    pub fn from_parts(name: String, alphabet: Vec<char>, matrix: Vec<i64>) -> Result<EnergyModel> {
        assert_eq!(matrix.len(), alphabet.len() * alphabet.len());
        let model = EnergyModel {
            name,
            alphabet,
            matrix,
            class_freq: None,
        };
        model.check_symmetry()?;
        Ok(model)
    }

    fn check_symmetry(&self) -> Result<()> {
        let k = self.alphabet.len();
        for i in 0..k {
            for j in (i + 1)..k {
                if self.matrix[i * k + j] != self.matrix[j * k + i] {
                    return Err(Error::MatrixAsymmetric {
                        a: self.alphabet[i],
                        b: self.alphabet[j],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The ordered class alphabet; labels are case-sensitive.
    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    /// Matrix entry by class indices, milli-units.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.alphabet.len() + j]
    }

    /// Matrix entry by class labels, milli-units.
    pub fn entry_by_label(&self, a: char, b: char) -> Result<i64> {
        let i = self.require_label(a)?;
        let j = self.require_label(b)?;
        Ok(self.entry(i, j))
    }

    /// Per-class occurrence-frequency metadata, when the source table has it.
    pub fn class_freq(&self) -> Option<&[i64]> {
        self.class_freq.as_deref()
    }

    /// Alphabet index of a label; labels are case-sensitive.
    pub fn label_index(&self, label: char) -> Option<usize> {
        self.alphabet.iter().position(|&c| c == label)
    }

    fn require_label(&self, label: char) -> Result<usize> {
        self.label_index(label).ok_or(Error::UnknownClassLabel {
            label,
            model: self.name.clone(),
        })
    }

    /// Map a class string to alphabet indices.
    pub fn encode_indices(&self, enc: &str) -> Result<Vec<usize>> {
        enc.chars().map(|c| self.require_label(c)).collect()
    }

    /// Contact energy of a conformation under a class string, milli-units.
    pub fn evaluate(&self, conf: &Conformation, enc: &str) -> Result<i64> {
        let classes = self.encode_indices(enc)?;
        if classes.len() != conf.len() {
            return Err(Error::EncodingLength {
                expected: conf.len(),
                got: classes.len(),
            });
        }
        Ok(self.evaluate_indices(conf, &classes))
    }

    /// Evaluator core over pre-mapped class indices.
    pub fn evaluate_indices(&self, conf: &Conformation, classes: &[usize]) -> i64 {
        debug_assert_eq!(classes.len(), conf.len());
        conf.contacts_indexed()
            .iter()
            .map(|&(i, j)| self.entry(classes[i], classes[j]))
            .sum()
    }
}

/// Parse a matrix file: `#` starts a comment anywhere, the first content line
/// lists single-character class labels, and each following line repeats the
/// row label and gives one decimal value (at most three fractional digits)
/// per column. Values are read exactly into milli-units.
pub fn parse_matrix(text: &str, name: &str) -> Result<EnergyModel> {
    let mut content = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });

    let (header_line, header) = content.next().ok_or(Error::MatrixFormat {
        line: 0,
        message: "missing label header".to_string(),
    })?;
    let mut alphabet = Vec::new();
    for token in header.split_whitespace() {
        let mut chars = token.chars();
        let label = chars.next().unwrap();
        if chars.next().is_some() {
            return Err(Error::MatrixFormat {
                line: header_line,
                message: format!("label '{token}' is not a single character"),
            });
        }
        if alphabet.contains(&label) {
            return Err(Error::MatrixFormat {
                line: header_line,
                message: format!("duplicate label '{label}'"),
            });
        }
        alphabet.push(label);
    }
    let k = alphabet.len();
    if k == 0 || k > 26 {
        return Err(Error::MatrixFormat {
            line: header_line,
            message: format!("expected 1 to 26 labels, found {k}"),
        });
    }

    let mut matrix = vec![0i64; k * k];
    for row in 0..k {
        let (line, body) = content.next().ok_or(Error::MatrixFormat {
            line: header_line,
            message: format!("expected {k} matrix rows, found {row}"),
        })?;
        let mut tokens = body.split_whitespace();
        let row_label = tokens.next().unwrap();
        let mut label_chars = row_label.chars();
        if label_chars.next() != Some(alphabet[row]) || label_chars.next().is_some() {
            return Err(Error::MatrixFormat {
                line,
                message: format!(
                    "row label '{row_label}' does not match header label '{}'",
                    alphabet[row]
                ),
            });
        }
        let values: Vec<&str> = tokens.collect();
        if values.len() != k {
            return Err(Error::MatrixDimension {
                line,
                expected: k,
                got: values.len(),
            });
        }
        for (col, tok) in values.iter().enumerate() {
            matrix[row * k + col] =
                parse_decimal_milli(tok).map_err(|message| Error::MatrixFormat { line, message })?;
        }
    }
    if let Some((line, _)) = content.next() {
        return Err(Error::MatrixFormat {
            line,
            message: format!("unexpected content after {k} matrix rows"),
        });
    }

    let model = EnergyModel {
        name: name.to_string(),
        alphabet,
        matrix,
        class_freq: None,
    };
    model.check_symmetry()?;
    Ok(model)
}

/// Read a matrix file from disk; the model is named after the path.
pub fn load_matrix(path: &std::path::Path) -> Result<EnergyModel> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix(&text, &path.display().to_string())
}

/// Exact decimal to milli-units: `-0.317` → −317, `2` → 2000. At most three
/// fractional digits; anything else is rejected with a description.
fn parse_decimal_milli(token: &str) -> std::result::Result<i64, String> {
    let bad = || format!("cannot parse value '{token}'");
    let (negative, rest) = match token.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    if frac_part.len() > 3 {
        return Err(format!(
            "value '{token}' has more than 3 fractional digits"
        ));
    }
    let int_val: i64 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().map_err(|_| bad())?
    };
    let mut frac_val: i64 = if frac_part.is_empty() {
        0
    } else {
        frac_part.parse().map_err(|_| bad())?
    };
    for _ in frac_part.len()..3 {
        frac_val *= 10;
    }
    let magnitude = int_val
        .checked_mul(1000)
        .and_then(|v| v.checked_add(frac_val))
        .ok_or_else(bad)?;
    Ok(if negative { -magnitude } else { magnitude })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{fold, MoveString};
    use crate::geometry::LatticeName;

    #[test]
    fn registry_knows_all_names_and_rejects_others() {
        for name in MODEL_NAMES {
            let model = EnergyModel::by_name(name).unwrap();
            assert_eq!(model.name(), name);
            assert_eq!(model.matrix.len(), model.size() * model.size());
        }
        assert!(matches!(
            EnergyModel::by_name("mj"),
            Err(Error::UnknownModel(_))
        ));
    }

    #[test]
    fn hp_family_entries() {
        let hp = EnergyModel::by_name("hp").unwrap();
        assert_eq!(hp.entry_by_label('H', 'H').unwrap(), -1000);
        assert_eq!(hp.entry_by_label('H', 'P').unwrap(), 0);
        assert_eq!(hp.entry_by_label('P', 'P').unwrap(), 0);
        assert_eq!(hp.matrix.iter().filter(|&&v| v != 0).count(), 1);

        let li = EnergyModel::by_name("hp-li").unwrap();
        assert_eq!(li.entry_by_label('H', 'H').unwrap(), -3000);
        assert_eq!(li.entry_by_label('P', 'H').unwrap(), -1000);

        let backofen = EnergyModel::by_name("hp-backofen").unwrap();
        assert_eq!(backofen.entry_by_label('H', 'H').unwrap(), -2500);
    }

    #[test]
    fn hpnx_variants_differ_only_on_the_charged_diagonal() {
        let a = EnergyModel::by_name("hpnx-a").unwrap();
        let b = EnergyModel::by_name("hpnx-b").unwrap();
        assert_eq!(a.entry_by_label('H', 'H').unwrap(), -4000);
        assert_eq!(a.entry_by_label('P', 'N').unwrap(), -1000);
        assert_eq!(a.entry_by_label('P', 'P').unwrap(), 0);
        assert_eq!(b.entry_by_label('P', 'P').unwrap(), 1000);
        assert_eq!(b.entry_by_label('N', 'N').unwrap(), 1000);
        for x in ['H', 'P', 'N', 'X'] {
            for y in ['H', 'P', 'N', 'X'] {
                if (x, y) != ('P', 'P') && (x, y) != ('N', 'N') {
                    assert_eq!(
                        a.entry_by_label(x, y).unwrap(),
                        b.entry_by_label(x, y).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn crippen_entries_in_exact_milli() {
        let m = EnergyModel::by_name("crippen1234").unwrap();
        assert_eq!(m.entry_by_label('2', '3').unwrap(), -317);
        assert_eq!(m.entry_by_label('2', '2').unwrap(), 123);
        assert_eq!(m.entry_by_label('4', '4').unwrap(), -4);
        assert_eq!(m.entry_by_label('1', '1').unwrap(), -12);
    }

    #[test]
    fn yhhx_correction_flips_one_sign() {
        let raw = EnergyModel::by_name("yhhx").unwrap();
        let fixed = EnergyModel::by_name("yhhx-corrected").unwrap();
        assert_eq!(raw.entry_by_label('h', 'h').unwrap(), -2000);
        assert_eq!(fixed.entry_by_label('h', 'h').unwrap(), 2000);
        assert_eq!(raw.class_freq().unwrap(), &[10, 16, 36, 28]);
        assert_eq!(fixed.class_freq().unwrap(), &[10, 16, 36, 28]);
        let hh = 4 + 1; // flat index of the (h,h) entry in a 4x4 table
        for (i, (x, y)) in raw.matrix.iter().zip(&fixed.matrix).enumerate() {
            if i == hh {
                continue;
            }
            assert_eq!(x, y);
        }
    }

    #[test]
    fn hhpnx_entries() {
        let m = EnergyModel::by_name("hhpnx").unwrap();
        assert_eq!(m.entry_by_label('h', 'h').unwrap(), 2000);
        assert_eq!(m.entry_by_label('h', 'H').unwrap(), -4000);
        assert_eq!(m.entry_by_label('H', 'H').unwrap(), -3000);
        assert_eq!(m.entry_by_label('P', 'P').unwrap(), 1000);
        assert_eq!(m.entry_by_label('X', 'X').unwrap(), 0);
    }

    #[test]
    fn labels_are_case_sensitive() {
        let m = EnergyModel::by_name("hhpnx").unwrap();
        assert_ne!(
            m.entry_by_label('h', 'h').unwrap(),
            m.entry_by_label('H', 'H').unwrap()
        );
        let hp = EnergyModel::by_name("hp").unwrap();
        assert!(matches!(
            hp.entry_by_label('p', 'H'),
            Err(Error::UnknownClassLabel { label: 'p', .. })
        ));
    }

    fn u_shape() -> Conformation {
        fold(&MoveString::parse("ACB", LatticeName::Square).unwrap()).unwrap()
    }

    #[test]
    fn evaluate_u_shape_under_hp_and_hp_li() {
        let conf = u_shape();
        let hp = EnergyModel::by_name("hp").unwrap();
        assert_eq!(hp.evaluate(&conf, "HPPH").unwrap(), -1000);
        let li = EnergyModel::by_name("hp-li").unwrap();
        assert_eq!(li.evaluate(&conf, "HPPH").unwrap(), -3000);
        // the (0,3) contact is P-P here, worth nothing under either model
        assert_eq!(hp.evaluate(&conf, "PHHP").unwrap(), 0);
        assert_eq!(li.evaluate(&conf, "PHHP").unwrap(), 0);
        // mixed ends make it an H-P contact, rewarded only by hp-li
        assert_eq!(hp.evaluate(&conf, "HPPP").unwrap(), 0);
        assert_eq!(li.evaluate(&conf, "HPPP").unwrap(), -1000);
    }

    #[test]
    fn straight_chain_scores_zero() {
        let conf = fold(&MoveString::parse("AAAA", LatticeName::Cubic).unwrap()).unwrap();
        for name in MODEL_NAMES {
            let model = EnergyModel::by_name(name).unwrap();
            let enc: String = std::iter::repeat_n(model.alphabet()[0], 5).collect();
            assert_eq!(model.evaluate(&conf, &enc).unwrap(), 0, "{name}");
        }
    }

    #[test]
    fn evaluate_validates_inputs() {
        let conf = u_shape();
        let hp = EnergyModel::by_name("hp").unwrap();
        assert!(matches!(
            hp.evaluate(&conf, "HPH"),
            Err(Error::EncodingLength {
                expected: 4,
                got: 3
            })
        ));
        assert!(matches!(
            hp.evaluate(&conf, "HPQH"),
            Err(Error::UnknownClassLabel { label: 'Q', .. })
        ));
    }

    #[test]
    fn parse_matrix_round_trips_the_hp_model() {
        let text = "\
# two-class model
H P
H -1 0
P 0 0
";
        let parsed = parse_matrix(text, "custom").unwrap();
        let hp = EnergyModel::by_name("hp").unwrap();
        assert_eq!(parsed.alphabet(), hp.alphabet());
        assert_eq!(parsed.matrix, hp.matrix);
    }

    #[test]
    fn parse_matrix_reads_fractions_exactly() {
        let text = "1 2\n1 -0.317 0.5 # trailing comment\n2 0.5 2\n";
        let m = parse_matrix(text, "t").unwrap();
        assert_eq!(m.entry_by_label('1', '1').unwrap(), -317);
        assert_eq!(m.entry_by_label('1', '2').unwrap(), 500);
        assert_eq!(m.entry_by_label('2', '2').unwrap(), 2000);
    }

    #[test]
    fn parse_matrix_rejects_bad_input() {
        assert!(matches!(
            parse_matrix("H P\nH -1 0\nP 0.0001 0\n", "t"),
            Err(Error::MatrixFormat { line: 3, .. })
        ));
        assert!(matches!(
            parse_matrix("H P\nH -1 0\nP 1 0\n", "t"),
            Err(Error::MatrixAsymmetric { a: 'H', b: 'P' })
        ));
        assert!(matches!(
            parse_matrix("H P\nH -1 0 0\nP 0 0\n", "t"),
            Err(Error::MatrixDimension {
                line: 2,
                expected: 2,
                got: 3
            })
        ));
        assert!(matches!(
            parse_matrix("H P\nP -1 0\nH 0 0\n", "t"),
            Err(Error::MatrixFormat { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("H P\nH -1 0\n", "t"),
            Err(Error::MatrixFormat { .. })
        ));
        assert!(matches!(
            parse_matrix("", "t"),
            Err(Error::MatrixFormat { line: 0, .. })
        ));
        assert!(matches!(
            parse_matrix("HP X\nHP 0 0\nX 0 0\n", "t"),
            Err(Error::MatrixFormat { line: 1, .. })
        ));
    }

    #[test]
    fn twenty_by_twenty_synthetic_matrix_loads() {
        let labels: Vec<char> = crate::seqcodec::Residue::ALL
            .iter()
            .map(|r| r.one_letter())
            .collect();
        let mut text = labels
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        text.push('\n');
        // symmetric synthetic entries: e(i,j) = i+j − 20 in milli
        for (i, a) in labels.iter().enumerate() {
            text.push(*a);
            for j in 0..labels.len() {
                text.push_str(&format!(" {}", (i + j) as i64 - 20));
            }
            text.push('\n');
        }
        let m = parse_matrix(&text, "synthetic").unwrap();
        assert_eq!(m.size(), 20);
        assert_eq!(m.entry_by_label('G', 'G').unwrap(), -20000);
        assert_eq!(m.entry_by_label('E', 'E').unwrap(), 18000);
        // evaluating a residue-level string works against the identity encoding
        let conf = u_shape();
        let e = m.evaluate(&conf, "GAPE").unwrap();
        // single contact (0,3): e(G,E) = (0 + 19) − 20 = −1 → −1000 milli
        assert_eq!(e, -1000);
    }

    #[test]
    fn decimal_parser_edge_cases() {
        assert_eq!(parse_decimal_milli("2").unwrap(), 2000);
        assert_eq!(parse_decimal_milli("-2.5").unwrap(), -2500);
        assert_eq!(parse_decimal_milli("0.004").unwrap(), 4);
        assert_eq!(parse_decimal_milli("-.5").unwrap(), -500);
        assert_eq!(parse_decimal_milli("3.").unwrap(), 3000);
        assert_eq!(parse_decimal_milli("+1.25").unwrap(), 1250);
        assert!(parse_decimal_milli("1.2345").is_err());
        assert!(parse_decimal_milli("1e3").is_err());
        assert!(parse_decimal_milli(".").is_err());
        assert!(parse_decimal_milli("--1").is_err());
    }
}
