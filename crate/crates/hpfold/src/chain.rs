//! Move strings and folded conformations.
//!
//! A chain of `n` residues is encoded as `n − 1` absolute moves, each an index
//! into the lattice basis; the label string uses `A` for index 0, `B` for 1,
//! and so on, in the published basis order. Folding places residue 0 at the
//! origin and walks the moves, rejecting any self-intersection with the index
//! of the first revisiting residue.
//!
//! Contacts are topological neighbor pairs `(i, j)` with `j > i + 1`: residues
//! adjacent on the lattice but not along the chain. Two routes compute them,
//! a pairwise scan over all residue pairs and a hash lookup of the basis-step
//! offsets of each residue; on these lattices a walk-reachable point at
//! contact distance is always a single basis step away, so both agree.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::{LatticeName, LatticePoint, LatticeSpec, Permutation};

/// A sequence of absolute moves on a fixed lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveString {
    lattice: LatticeName,
    moves: Vec<usize>,
}

impl MoveString {
    /// Wrap raw basis indices, validating each against the lattice.
    pub fn new(lattice: LatticeName, moves: Vec<usize>) -> Result<Self> {
        let spec = LatticeSpec::get(lattice);
        for &m in &moves {
            if m >= spec.basis_size() {
                return Err(Error::MoveIndexOutOfRange {
                    index: m,
                    basis_size: spec.basis_size(),
                });
            }
        }
        Ok(MoveString { lattice, moves })
    }

    /// Parse a label string such as `"ACB"`. Case-insensitive.
    pub fn parse(s: &str, lattice: LatticeName) -> Result<Self> {
        let spec = LatticeSpec::get(lattice);
        let mut moves = Vec::with_capacity(s.len());
        for (position, label) in s.chars().enumerate() {
            match spec.label_index(label) {
                Some(idx) => moves.push(idx),
                None => return Err(Error::BadMoveLabel { label, position }),
            }
        }
        Ok(MoveString { lattice, moves })
    }

    pub fn lattice(&self) -> LatticeName {
        self.lattice
    }

    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    /// Number of moves; the folded chain has one more residue.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// The label string, `A` = index 0.
    pub fn labels(&self) -> String {
        self.moves
            .iter()
            .map(|&m| (b'A' + m as u8) as char)
            .collect()
    }

    /// Apply a point-group element move-wise. The folded walk is the image of
    /// the original under the corresponding orthogonal symmetry.
    pub fn transform(&self, perm: &Permutation) -> MoveString {
        assert_eq!(
            perm.arity(),
            LatticeSpec::get(self.lattice).basis_size(),
            "permutation arity must match basis size"
        );
        MoveString {
            lattice: self.lattice,
            moves: self.moves.iter().map(|&m| perm.apply(m)).collect(),
        }
    }

    /// Walk the chain end to start: reversed move order, each move negated.
    pub fn reverse(&self) -> MoveString {
        let spec = LatticeSpec::get(self.lattice);
        MoveString {
            lattice: self.lattice,
            moves: self.moves.iter().rev().map(|&m| spec.opposite(m)).collect(),
        }
    }
}

impl std::fmt::Display for MoveString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.labels())
    }
}

/// A self-avoiding placement of residues, residue 0 at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conformation {
    lattice: LatticeName,
    points: Vec<LatticePoint>,
}

/// Fold a move string into a conformation, residue 0 at the origin.
/// Fails with the residue index of the first self-intersection.
pub fn fold(moves: &MoveString) -> Result<Conformation> {
    let spec = LatticeSpec::get(moves.lattice());
    let mut points = Vec::with_capacity(moves.len() + 1);
    let mut occupied = HashMap::with_capacity(moves.len() + 1);
    let mut cur = LatticePoint::ORIGIN;
    points.push(cur);
    occupied.insert(cur, 0usize);
    for (step, &m) in moves.moves().iter().enumerate() {
        cur = cur + spec.basis()[m];
        if occupied.contains_key(&cur) {
            return Err(Error::Collision { index: step + 1 });
        }
        occupied.insert(cur, step + 1);
        points.push(cur);
    }
    Ok(Conformation {
        lattice: moves.lattice(),
        points,
    })
}

impl Conformation {
    pub fn lattice(&self) -> LatticeName {
        self.lattice
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Number of residues.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Recover the move string that folds to this conformation.
    pub fn moves(&self) -> MoveString {
        let spec = LatticeSpec::get(self.lattice);
        let moves = self
            .points
            .windows(2)
            .map(|w| {
                spec.basis()
                    .iter()
                    .position(|&v| v == w[1] - w[0])
                    .expect("consecutive residues are one basis step apart")
            })
            .collect();
        MoveString {
            lattice: self.lattice,
            moves,
        }
    }

    /// Contact pairs `(i, j)`, `j > i + 1`, by pairwise distance scan.
    /// Pairs come out ordered by `i`, then `j`.
    pub fn contacts(&self) -> Vec<(usize, usize)> {
        let spec = LatticeSpec::get(self.lattice);
        let mut out = Vec::new();
        for i in 0..self.points.len() {
            for j in (i + 2)..self.points.len() {
                if spec.is_contact(self.points[i], self.points[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Contact pairs via hash lookup of basis-step offsets, same order as
    /// [`Conformation::contacts`].
    pub fn contacts_indexed(&self) -> Vec<(usize, usize)> {
        let spec = LatticeSpec::get(self.lattice);
        let index: HashMap<LatticePoint, usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        let mut out = Vec::new();
        for (i, &p) in self.points.iter().enumerate() {
            for &step in spec.basis() {
                if let Some(&j) = index.get(&(p + step)) {
                    if j > i + 1 {
                        out.push((i, j));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RingScalar;
    use proptest::prelude::*;

    fn square_pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(
            RingScalar::new(4 * x, 0),
            RingScalar::new(4 * y, 0),
            RingScalar::ZERO,
        )
    }

    #[test]
    fn parse_and_labels_round_trip() {
        let ms = MoveString::parse("acb", LatticeName::Square).unwrap();
        assert_eq!(ms.moves(), &[0, 2, 1]);
        assert_eq!(ms.labels(), "ACB");
        assert_eq!(ms.to_string(), "ACB");
    }

    #[test]
    fn parse_rejects_labels_outside_basis() {
        let err = MoveString::parse("AEB", LatticeName::Square).unwrap_err();
        assert!(matches!(
            err,
            Error::BadMoveLabel {
                label: 'E',
                position: 1
            }
        ));
        assert!(MoveString::parse("A B", LatticeName::Square).is_err());
        assert!(MoveString::parse("GHI", LatticeName::Hexagonal).is_err());
        assert!(MoveString::parse("GHIJKL", LatticeName::Fcc).is_ok());
    }

    #[test]
    fn new_rejects_out_of_range_indices() {
        assert!(matches!(
            MoveString::new(LatticeName::Square, vec![0, 4]),
            Err(Error::MoveIndexOutOfRange {
                index: 4,
                basis_size: 4
            })
        ));
    }

    #[test]
    fn fold_u_shape_on_square() {
        // A=+x, C=+y, B=-x: four residues around a unit square corner
        let ms = MoveString::parse("ACB", LatticeName::Square).unwrap();
        let conf = fold(&ms).unwrap();
        assert_eq!(
            conf.points(),
            &[
                square_pt(0, 0),
                square_pt(1, 0),
                square_pt(1, 1),
                square_pt(0, 1)
            ]
        );
        assert_eq!(conf.contacts(), vec![(0, 3)]);
        assert_eq!(conf.moves(), ms);
    }

    #[test]
    fn fold_reports_first_collision_index() {
        // A then B walks straight back onto residue 0
        let err = fold(&MoveString::parse("AB", LatticeName::Square).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Collision { index: 2 }));
        // the unit square closes onto residue 0 at residue 4
        let err = fold(&MoveString::parse("ACBD", LatticeName::Square).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Collision { index: 4 }));
    }

    #[test]
    fn transform_by_quarter_turn() {
        // A→C, C→B, B→D, D→A is the quarter turn x→y→−x→−y
        let rot = Permutation::new(vec![2, 3, 1, 0]);
        let ms = MoveString::parse("ACB", LatticeName::Square).unwrap();
        let turned = ms.transform(&rot);
        assert_eq!(turned.labels(), "CBD");
        // energy-relevant structure is unchanged
        assert_eq!(fold(&turned).unwrap().contacts(), vec![(0, 3)]);
    }

    #[test]
    fn reverse_retraces_the_walk() {
        let ms = MoveString::parse("ACB", LatticeName::Square).unwrap();
        let rev = ms.reverse();
        assert_eq!(rev.labels(), "ADB"); // opposite of B,C,A
        let fwd = fold(&ms).unwrap();
        let bwd = fold(&rev).unwrap();
        // same shape traversed end to start, translated to put the old end at origin
        let offset = fwd.points()[fwd.len() - 1];
        let mut retraced: Vec<LatticePoint> =
            fwd.points().iter().rev().map(|&p| p - offset).collect();
        assert_eq!(bwd.points(), &retraced[..]);
        retraced.reverse();
        assert_eq!(rev.reverse(), ms);
    }

    #[test]
    fn contacts_dual_route_on_a_dense_fold() {
        // a serpentine walk with several contacts
        let ms = MoveString::parse("AACBBCAA", LatticeName::Cubic).unwrap();
        let conf = fold(&ms).unwrap();
        assert_eq!(conf.contacts(), conf.contacts_indexed());
        assert!(!conf.contacts().is_empty());
    }

    #[test]
    fn hcp_out_of_plane_steps_fold_exactly() {
        // G then J returns to the origin exactly (J = −G)
        let err = fold(&MoveString::parse("GJ", LatticeName::Hcp).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Collision { index: 2 }));
        // H then K: (−√3/4,−1/4,√3/2) + (√3/4,1/4,−√3/2) = 0
        let err = fold(&MoveString::parse("HK", LatticeName::Hcp).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Collision { index: 2 }));
        let ok = fold(&MoveString::parse("GHI", LatticeName::Hcp).unwrap()).unwrap();
        assert_eq!(ok.len(), 4);
    }

    fn arb_walk(lattice: LatticeName, max_len: usize) -> impl Strategy<Value = MoveString> {
        let z = LatticeSpec::get(lattice).basis_size();
        prop::collection::vec(0..z, 1..=max_len)
            .prop_map(move |moves| MoveString::new(lattice, moves).unwrap())
    }

    fn arb_lattice() -> impl Strategy<Value = LatticeName> {
        prop::sample::select(LatticeName::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn prop_label_round_trip(lattice in arb_lattice(), moves in prop::collection::vec(0usize..4, 0..20)) {
            let ms = MoveString::new(lattice, moves).unwrap();
            let back = MoveString::parse(&ms.labels(), lattice).unwrap();
            prop_assert_eq!(back, ms);
        }

        #[test]
        fn prop_reverse_is_involutive(ms in arb_lattice().prop_flat_map(|l| arb_walk(l, 12))) {
            prop_assert_eq!(ms.reverse().reverse(), ms);
        }

        #[test]
        fn prop_contacts_agree_between_routes(ms in arb_lattice().prop_flat_map(|l| arb_walk(l, 14))) {
            if let Ok(conf) = fold(&ms) {
                prop_assert_eq!(conf.contacts(), conf.contacts_indexed());
            }
        }

        #[test]
        fn prop_transform_preserves_contacts(ms in arb_lattice().prop_flat_map(|l| arb_walk(l, 12))) {
            let spec = LatticeSpec::get(ms.lattice());
            if let Ok(conf) = fold(&ms) {
                for perm in spec.point_group() {
                    let turned = fold(&ms.transform(perm)).expect("symmetry preserves self-avoidance");
                    prop_assert_eq!(turned.contacts(), conf.contacts());
                }
            }
        }

        #[test]
        fn prop_reverse_flips_contact_indices(ms in arb_lattice().prop_flat_map(|l| arb_walk(l, 12))) {
            if let Ok(conf) = fold(&ms) {
                let n = conf.len();
                if let Ok(rev) = fold(&ms.reverse()) {
                    let mut flipped: Vec<(usize, usize)> = conf
                        .contacts()
                        .iter()
                        .map(|&(i, j)| (n - 1 - j, n - 1 - i))
                        .collect();
                    flipped.sort_unstable();
                    prop_assert_eq!(rev.contacts(), flipped);
                }
            }
        }

        #[test]
        fn prop_fold_then_moves_round_trips(ms in arb_lattice().prop_flat_map(|l| arb_walk(l, 14))) {
            if let Ok(conf) = fold(&ms) {
                prop_assert_eq!(conf.moves(), ms);
            }
        }
    }
}
