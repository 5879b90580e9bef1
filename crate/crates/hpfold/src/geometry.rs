//! Exact lattice geometry for the five folding lattices.
//!
//! Coordinates live in the ring Z[√3]: a [`RingScalar`] stores the pair
//! `(a, b)` denoting the exact real value `a + b·√3`. All stored coordinates
//! are scaled by 4 relative to the published basis vectors, which turns every
//! component — including the hexagonal/HCP quarter and √3/4 components — into
//! integer ring coefficients. Nothing in this module touches floating point,
//! so neighbor tests, norms, and symmetry checks are exact.
//!
//! The five lattices and their nearest-neighbor shells:
//!
//! | name   | dim | basis | contact ‖·‖² (scaled) |
//! |--------|-----|-------|------------------------|
//! | square | 2   | 4     | (16, 0)                |
//! | hex    | 2   | 6     | (16, 0)                |
//! | cubic  | 3   | 6     | (16, 0)                |
//! | fcc    | 3   | 12    | (32, 0)                |
//! | hcp    | 3   | 12    | (16, 0)                |
//!
//! FCC keeps its published integer vectors, so its neighbor distance is √2
//! rather than 1 (scaled squared norm 32). The published HCP shell is a
//! hexagon plus two antipodal triangles; it is taken verbatim even though it
//! is not a crystallographic HCP basis.
//!
//! Each lattice carries its point group: every permutation of basis indices
//! that preserves the exact Gram matrix of the basis. Since the basis spans
//! the ambient space, these permutations are exactly the orthogonal symmetries
//! fixing the origin and the neighbor shell.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// An exact element of Z[√3]: the real value `a + b·√3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingScalar {
    pub a: i64,
    pub b: i64,
}

impl RingScalar {
    pub const ZERO: RingScalar = RingScalar { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        RingScalar { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: Self) -> Self {
        RingScalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: Self) -> Self {
        RingScalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for RingScalar {
    type Output = RingScalar;
    fn neg(self) -> Self {
        RingScalar::new(-self.a, -self.b)
    }
}

impl Mul for RingScalar {
    type Output = RingScalar;
    // (a₁ + b₁√3)(a₂ + b₂√3) = a₁a₂ + 3b₁b₂ + (a₁b₂ + b₁a₂)√3
    fn mul(self, rhs: Self) -> Self {
        RingScalar::new(
            self.a * rhs.a + 3 * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "√3"),
            (0, -1) => write!(f, "-√3"),
            (0, b) => write!(f, "{b}√3"),
            (a, 1) => write!(f, "{a}+√3"),
            (a, -1) => write!(f, "{a}-√3"),
            (a, b) if b > 0 => write!(f, "{a}+{b}√3"),
            (a, b) => write!(f, "{a}{b}√3"),
        }
    }
}

/// A lattice node, coordinates scaled ×4. 2D lattices keep `z` at zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub x: RingScalar,
    pub y: RingScalar,
    pub z: RingScalar,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint {
        x: RingScalar::ZERO,
        y: RingScalar::ZERO,
        z: RingScalar::ZERO,
    };

    pub const fn new(x: RingScalar, y: RingScalar, z: RingScalar) -> Self {
        LatticePoint { x, y, z }
    }

    /// Exact squared Euclidean norm, `r + s·√3` in scaled-squared units.
    pub fn norm_sq(self) -> NormSq {
        let n = self.x * self.x + self.y * self.y + self.z * self.z;
        NormSq { r: n.a, s: n.b }
    }

    /// Exact inner product with another point.
    pub fn inner(self, rhs: LatticePoint) -> RingScalar {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: Self) -> Self {
        LatticePoint::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: Self) -> Self {
        LatticePoint::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> Self {
        LatticePoint::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Exact squared distance `r + s·√3`. A contact requires `s = 0` and `r`
/// equal to the lattice's contact norm, both exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NormSq {
    pub r: i64,
    pub s: i64,
}

impl NormSq {
    pub const fn new(r: i64, s: i64) -> Self {
        NormSq { r, s }
    }
}

impl fmt::Display for NormSq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// The five lattice names. String form is the lowercase external name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeName {
    Square,
    Hexagonal,
    Cubic,
    Fcc,
    Hcp,
}

impl LatticeName {
    pub const ALL: [LatticeName; 5] = [
        LatticeName::Square,
        LatticeName::Hexagonal,
        LatticeName::Cubic,
        LatticeName::Fcc,
        LatticeName::Hcp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LatticeName::Square => "square",
            LatticeName::Hexagonal => "hex",
            LatticeName::Cubic => "cubic",
            LatticeName::Fcc => "fcc",
            LatticeName::Hcp => "hcp",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(LatticeName::Square),
            "hex" => Ok(LatticeName::Hexagonal),
            "cubic" => Ok(LatticeName::Cubic),
            "fcc" => Ok(LatticeName::Fcc),
            "hcp" => Ok(LatticeName::Hcp),
            other => Err(Error::UnknownLattice(other.to_string())),
        }
    }
}

impl fmt::Display for LatticeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LatticeName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LatticeName::parse(s)
    }
}

/// A permutation of basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(map: Vec<usize>) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            assert!(i < n && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Permutation(map)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.arity(), other.arity());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// A lattice: basis vectors (scaled ×4), contact norm, opposite-vector table,
/// and the point group as Gram-preserving basis permutations.
#[derive(Clone, Debug)]
pub struct LatticeSpec {
    name: LatticeName,
    dimension: u8,
    basis: Vec<LatticePoint>,
    contact_norm_sq: NormSq,
    opposite: Vec<usize>,
    point_group: Vec<Permutation>,
}

// Published basis vectors, scaled ×4, as (a, b) ring components per axis.

const SQUARE_BASIS: [[(i64, i64); 3]; 4] = [
    [(4, 0), (0, 0), (0, 0)],  // A = (1, 0)
    [(-4, 0), (0, 0), (0, 0)], // B = (-1, 0)
    [(0, 0), (4, 0), (0, 0)],  // C = (0, 1)
    [(0, 0), (-4, 0), (0, 0)], // D = (0, -1)
];

const HEX_BASIS: [[(i64, i64); 3]; 6] = [
    [(4, 0), (0, 0), (0, 0)],   // A = (1, 0)
    [(2, 0), (0, 2), (0, 0)],   // B = (1/2, √3/2)
    [(-2, 0), (0, 2), (0, 0)],  // C = (-1/2, √3/2)
    [(-2, 0), (0, -2), (0, 0)], // D = (-1/2, -√3/2)
    [(2, 0), (0, -2), (0, 0)],  // E = (1/2, -√3/2)
    [(-4, 0), (0, 0), (0, 0)],  // F = (-1, 0)
];

const CUBIC_BASIS: [[(i64, i64); 3]; 6] = [
    [(4, 0), (0, 0), (0, 0)],  // A = (1, 0, 0)
    [(-4, 0), (0, 0), (0, 0)], // B = (-1, 0, 0)
    [(0, 0), (4, 0), (0, 0)],  // C = (0, 1, 0)
    [(0, 0), (-4, 0), (0, 0)], // D = (0, -1, 0)
    [(0, 0), (0, 0), (4, 0)],  // E = (0, 0, 1)
    [(0, 0), (0, 0), (-4, 0)], // F = (0, 0, -1)
];

const FCC_BASIS: [[(i64, i64); 3]; 12] = [
    [(4, 0), (4, 0), (0, 0)],   // A = (1, 1, 0)
    [(-4, 0), (-4, 0), (0, 0)], // B = (-1, -1, 0)
    [(-4, 0), (4, 0), (0, 0)],  // C = (-1, 1, 0)
    [(4, 0), (-4, 0), (0, 0)],  // D = (1, -1, 0)
    [(0, 0), (4, 0), (4, 0)],   // E = (0, 1, 1)
    [(0, 0), (-4, 0), (-4, 0)], // F = (0, -1, -1)
    [(0, 0), (4, 0), (-4, 0)],  // G = (0, 1, -1)
    [(0, 0), (-4, 0), (4, 0)],  // H = (0, -1, 1)
    [(-4, 0), (0, 0), (-4, 0)], // I = (-1, 0, -1)
    [(4, 0), (0, 0), (4, 0)],   // J = (1, 0, 1)
    [(-4, 0), (0, 0), (4, 0)],  // K = (-1, 0, 1)
    [(4, 0), (0, 0), (-4, 0)],  // L = (1, 0, -1)
];

const HCP_BASIS: [[(i64, i64); 3]; 12] = [
    [(4, 0), (0, 0), (0, 0)],    // A = (1, 0, 0)
    [(2, 0), (0, 2), (0, 0)],    // B = (1/2, √3/2, 0)
    [(-2, 0), (0, 2), (0, 0)],   // C = (-1/2, √3/2, 0)
    [(-2, 0), (0, -2), (0, 0)],  // D = (-1/2, -√3/2, 0)
    [(2, 0), (0, -2), (0, 0)],   // E = (1/2, -√3/2, 0)
    [(-4, 0), (0, 0), (0, 0)],   // F = (-1, 0, 0)
    [(0, 0), (2, 0), (0, 2)],    // G = (0, 1/2, √3/2)
    [(0, -1), (-1, 0), (0, 2)],  // H = (-√3/4, -1/4, √3/2)
    [(0, 1), (-1, 0), (0, 2)],   // I = (√3/4, -1/4, √3/2)
    [(0, 0), (-2, 0), (0, -2)],  // J = (0, -1/2, -√3/2)
    [(0, 1), (1, 0), (0, -2)],   // K = (√3/4, 1/4, -√3/2)
    [(0, -1), (1, 0), (0, -2)],  // L = (-√3/4, 1/4, -√3/2)
];

fn build_basis(raw: &[[(i64, i64); 3]]) -> Vec<LatticePoint> {
    raw.iter()
        .map(|v| {
            LatticePoint::new(
                RingScalar::new(v[0].0, v[0].1),
                RingScalar::new(v[1].0, v[1].1),
                RingScalar::new(v[2].0, v[2].1),
            )
        })
        .collect()
}

impl LatticeSpec {
    /// Look up a lattice by name. Specs are built once and cached.
    pub fn get(name: LatticeName) -> &'static LatticeSpec {
        static REGISTRY: OnceLock<Vec<LatticeSpec>> = OnceLock::new();
        let all = REGISTRY.get_or_init(|| {
            LatticeName::ALL
                .iter()
                .map(|&n| LatticeSpec::build(n))
                .collect()
        });
        &all[LatticeName::ALL.iter().position(|&n| n == name).unwrap()]
    }

    /// Look up a lattice by its external name string.
    pub fn by_name(name: &str) -> Result<&'static LatticeSpec> {
        Ok(LatticeSpec::get(LatticeName::parse(name)?))
    }

    fn build(name: LatticeName) -> LatticeSpec {
        let (dimension, contact_r, basis): (u8, i64, Vec<LatticePoint>) = match name {
            LatticeName::Square => (2, 16, build_basis(&SQUARE_BASIS)),
            LatticeName::Hexagonal => (2, 16, build_basis(&HEX_BASIS)),
            LatticeName::Cubic => (3, 16, build_basis(&CUBIC_BASIS)),
            LatticeName::Fcc => (3, 32, build_basis(&FCC_BASIS)),
            LatticeName::Hcp => (3, 16, build_basis(&HCP_BASIS)),
        };
        let contact_norm_sq = NormSq::new(contact_r, 0);
        for v in &basis {
            assert_eq!(v.norm_sq(), contact_norm_sq, "{name}: basis norm mismatch");
        }
        let opposite: Vec<usize> = basis
            .iter()
            .map(|&v| {
                basis
                    .iter()
                    .position(|&w| w == -v)
                    .expect("basis is closed under negation")
            })
            .collect();
        for (i, &j) in opposite.iter().enumerate() {
            assert!(i != j && opposite[j] == i, "{name}: bad opposite table");
        }
        let point_group = gram_preserving_permutations(&basis);
        LatticeSpec {
            name,
            dimension,
            basis,
            contact_norm_sq,
            opposite,
            point_group,
        }
    }

    pub fn name(&self) -> LatticeName {
        self.name
    }

    pub fn dimension(&self) -> u8 {
        self.dimension
    }

    pub fn basis(&self) -> &[LatticePoint] {
        &self.basis
    }

    pub fn basis_size(&self) -> usize {
        self.basis.len()
    }

    pub fn contact_norm_sq(&self) -> NormSq {
        self.contact_norm_sq
    }

    /// Index of the negated basis vector: `basis[opposite(i)] = -basis[i]`.
    pub fn opposite(&self, i: usize) -> usize {
        self.opposite[i]
    }

    pub fn opposite_table(&self) -> &[usize] {
        &self.opposite
    }

    /// All Gram-preserving basis permutations, identity included.
    pub fn point_group(&self) -> &[Permutation] {
        &self.point_group
    }

    /// True iff `p` and `q` sit exactly one nearest-neighbor step apart.
    pub fn is_contact(&self, p: LatticePoint, q: LatticePoint) -> bool {
        (p - q).norm_sq() == self.contact_norm_sq
    }

    /// The move label for a basis index: `A` for 0, `B` for 1, ...
    pub fn move_label(&self, index: usize) -> Result<char> {
        if index < self.basis.len() {
            Ok((b'A' + index as u8) as char)
        } else {
            Err(Error::MoveIndexOutOfRange {
                index,
                basis_size: self.basis.len(),
            })
        }
    }

    /// Basis index for a move label, case-insensitive.
    pub fn label_index(&self, label: char) -> Option<usize> {
        let up = label.to_ascii_uppercase();
        if up.is_ascii_uppercase() {
            let idx = (up as u8 - b'A') as usize;
            (idx < self.basis.len()).then_some(idx)
        } else {
            None
        }
    }
}

/// All permutations π of the given vectors with
/// `inner(v[π(i)], v[π(j)]) = inner(v[i], v[j])` for every i, j.
///
/// Backtracking over partial images with incremental Gram checks; equivalent
/// to filtering all n! permutations but feasible for the 12-vector shells.
/// Results come out in lexicographic image order, identity first among them.
fn gram_preserving_permutations(basis: &[LatticePoint]) -> Vec<Permutation> {
    let n = basis.len();
    let gram: Vec<Vec<RingScalar>> = (0..n)
        .map(|i| (0..n).map(|j| basis[i].inner(basis[j])).collect())
        .collect();

    let mut out = Vec::new();
    let mut image = vec![0usize; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        n: usize,
        gram: &[Vec<RingScalar>],
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        if k == n {
            out.push(Permutation::new(image.to_vec()));
            return;
        }
        'cand: for cand in 0..n {
            if used[cand] || gram[cand][cand] != gram[k][k] {
                continue;
            }
            for j in 0..k {
                if gram[cand][image[j]] != gram[k][j] {
                    continue 'cand;
                }
            }
            image[k] = cand;
            used[cand] = true;
            extend(k + 1, n, gram, image, used, out);
            used[cand] = false;
        }
    }

    extend(0, n, &gram, &mut image, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn rs(a: i64, b: i64) -> RingScalar {
        RingScalar::new(a, b)
    }

    fn pt(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> LatticePoint {
        LatticePoint::new(rs(x.0, x.1), rs(y.0, y.1), rs(z.0, z.1))
    }

    #[test]
    fn ring_arithmetic_folds_sqrt3() {
        // (1 + 2√3)(3 - √3) = 3 - √3 + 6√3 - 2·3 = -3 + 5√3
        assert_eq!(rs(1, 2) * rs(3, -1), rs(-3, 5));
        assert_eq!(rs(0, 1) * rs(0, 1), rs(3, 0));
        assert_eq!(rs(2, -1) + rs(-2, 1), RingScalar::ZERO);
        assert_eq!(-rs(2, -1), rs(-2, 1));
    }

    #[test]
    fn norm_sq_examples() {
        // cubic step (4,0,0): 4² = 16
        assert_eq!(pt((4, 0), (0, 0), (0, 0)).norm_sq(), NormSq::new(16, 0));
        // hcp vector H = (-√3, -1, 2√3): 3 + 1 + 12 = 16, no cross terms
        assert_eq!(pt((0, -1), (-1, 0), (0, 2)).norm_sq(), NormSq::new(16, 0));
        // fcc vector (4,4,0): 16 + 16 = 32
        assert_eq!(pt((4, 0), (4, 0), (0, 0)).norm_sq(), NormSq::new(32, 0));
        // a vector with a genuine cross term: (1 + √3, 0, 0)
        assert_eq!(pt((1, 1), (0, 0), (0, 0)).norm_sq(), NormSq::new(4, 2));
    }

    #[test]
    fn registry_cubic_matches_published_vectors() {
        let lat = LatticeSpec::get(LatticeName::Cubic);
        let expect = [
            pt((4, 0), (0, 0), (0, 0)),
            pt((-4, 0), (0, 0), (0, 0)),
            pt((0, 0), (4, 0), (0, 0)),
            pt((0, 0), (-4, 0), (0, 0)),
            pt((0, 0), (0, 0), (4, 0)),
            pt((0, 0), (0, 0), (-4, 0)),
        ];
        assert_eq!(lat.basis(), &expect);
    }

    #[test]
    fn registry_hcp_vector_b() {
        // B = (1/2, √3/2, 0) scaled ×4 → x = (2,0), y = (0,2), z = (0,0)
        let lat = LatticeSpec::get(LatticeName::Hcp);
        assert_eq!(lat.basis()[1], pt((2, 0), (0, 2), (0, 0)));
    }

    #[test]
    fn registry_fcc_twelve_neighbors_at_norm_32() {
        let lat = LatticeSpec::get(LatticeName::Fcc);
        assert_eq!(lat.basis_size(), 12);
        for v in lat.basis() {
            assert_eq!(v.norm_sq(), NormSq::new(32, 0));
        }
    }

    #[test]
    fn basis_sizes_and_contact_norms() {
        let cases = [
            (LatticeName::Square, 4, 16),
            (LatticeName::Hexagonal, 6, 16),
            (LatticeName::Cubic, 6, 16),
            (LatticeName::Fcc, 12, 32),
            (LatticeName::Hcp, 12, 16),
        ];
        for (name, size, r) in cases {
            let lat = LatticeSpec::get(name);
            assert_eq!(lat.basis_size(), size, "{name}");
            assert_eq!(lat.contact_norm_sq(), NormSq::new(r, 0), "{name}");
            for v in lat.basis() {
                assert_eq!(v.norm_sq(), lat.contact_norm_sq(), "{name}");
            }
        }
    }

    #[test]
    fn opposite_is_a_fixed_point_free_involution() {
        for name in LatticeName::ALL {
            let lat = LatticeSpec::get(name);
            for i in 0..lat.basis_size() {
                let j = lat.opposite(i);
                assert_ne!(i, j);
                assert_eq!(lat.opposite(j), i);
                assert_eq!(lat.basis()[j] + lat.basis()[i], LatticePoint::ORIGIN);
            }
        }
    }

    #[test]
    fn is_contact_examples() {
        let sq = LatticeSpec::get(LatticeName::Square);
        let origin = LatticePoint::ORIGIN;
        assert!(sq.is_contact(origin, pt((4, 0), (0, 0), (0, 0))));
        assert!(!sq.is_contact(origin, pt((4, 0), (4, 0), (0, 0))));

        let fcc = LatticeSpec::get(LatticeName::Fcc);
        assert!(fcc.is_contact(origin, pt((4, 0), (4, 0), (0, 0))));
        assert!(!fcc.is_contact(origin, pt((4, 0), (0, 0), (0, 0))));
    }

    /// Independent oracle: filter all n! permutations by exact Gram equality.
    fn brute_force_point_group(basis: &[LatticePoint]) -> Vec<Permutation> {
        fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(items.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, items, out);
                if k.is_multiple_of(2) {
                    items.swap(i, k - 1);
                } else {
                    items.swap(0, k - 1);
                }
            }
        }
        let n = basis.len();
        let mut all = Vec::new();
        heap(n, &mut (0..n).collect(), &mut all);
        all.into_iter()
            .filter(|p| {
                (0..n).all(|i| {
                    (0..n).all(|j| basis[p[i]].inner(basis[p[j]]) == basis[i].inner(basis[j]))
                })
            })
            .map(Permutation::new)
            .collect()
    }

    #[test]
    fn point_group_sizes_match_brute_force() {
        for (name, size) in [
            (LatticeName::Square, 8),
            (LatticeName::Hexagonal, 12),
            (LatticeName::Cubic, 48),
        ] {
            let lat = LatticeSpec::get(name);
            assert_eq!(lat.point_group().len(), size, "{name}");
            let brute: HashSet<_> = brute_force_point_group(lat.basis()).into_iter().collect();
            let fast: HashSet<_> = lat.point_group().iter().cloned().collect();
            assert_eq!(brute, fast, "{name}");
        }
    }

    #[test]
    fn point_group_sizes_for_twelve_vector_shells() {
        // cuboctahedron (FCC shell) has full octahedral symmetry; the published
        // HCP shell (hexagon + antipodal triangles) is antiprismatic
        assert_eq!(LatticeSpec::get(LatticeName::Fcc).point_group().len(), 48);
        assert_eq!(LatticeSpec::get(LatticeName::Hcp).point_group().len(), 12);
    }

    #[test]
    fn point_group_is_a_group() {
        for name in LatticeName::ALL {
            let lat = LatticeSpec::get(name);
            let set: HashSet<_> = lat.point_group().iter().cloned().collect();
            assert!(set.contains(&Permutation::identity(lat.basis_size())));
            for p in lat.point_group() {
                assert!(set.contains(&p.inverse()), "{name}: inverse missing");
                for q in lat.point_group() {
                    assert!(set.contains(&p.compose(q)), "{name}: not closed");
                }
            }
        }
    }

    #[test]
    fn point_group_preserves_pairwise_norms() {
        for name in LatticeName::ALL {
            let lat = LatticeSpec::get(name);
            let b = lat.basis();
            for p in lat.point_group() {
                for i in 0..b.len() {
                    for j in 0..b.len() {
                        assert_eq!(
                            (b[p.apply(i)] - b[p.apply(j)]).norm_sq(),
                            (b[i] - b[j]).norm_sq()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_dimensional_lattices_have_zero_z() {
        for name in [LatticeName::Square, LatticeName::Hexagonal] {
            let lat = LatticeSpec::get(name);
            assert_eq!(lat.dimension(), 2);
            for v in lat.basis() {
                assert!(v.z.is_zero());
            }
        }
    }

    #[test]
    fn lattice_name_round_trip_and_rejection() {
        for name in LatticeName::ALL {
            assert_eq!(LatticeName::parse(name.as_str()).unwrap(), name);
        }
        assert!(matches!(
            LatticeName::parse("triangular"),
            Err(Error::UnknownLattice(_))
        ));
        assert!(LatticeName::parse("Square").is_err());
    }

    #[test]
    fn move_labels_round_trip() {
        let fcc = LatticeSpec::get(LatticeName::Fcc);
        assert_eq!(fcc.move_label(0).unwrap(), 'A');
        assert_eq!(fcc.move_label(11).unwrap(), 'L');
        assert!(fcc.move_label(12).is_err());
        assert_eq!(fcc.label_index('a'), Some(0));
        assert_eq!(fcc.label_index('L'), Some(11));
        assert_eq!(fcc.label_index('M'), None);
        let sq = LatticeSpec::get(LatticeName::Square);
        assert_eq!(sq.label_index('E'), None);
    }
}
