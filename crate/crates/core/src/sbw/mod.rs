//! Signed black/white squares and the pairing of their corners.
//!
//! Every square is the unit square with corners `SW=(0,0)`, `SE=(1,0)`,
//! `NE=(1,1)`, `NW=(0,1)`. `SW` and `NE` are negative, `SE` and `NW` are
//! positive. The horizontal sides `S`, `N` are black, the vertical sides `W`,
//! `E` are white, and every side runs from its negative corner to its
//! positive corner.

mod iso;
mod orbits;
mod text;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use iso::{canonical_form, find_isomorphism, isomorphic, CanonicalForm, Isomorphism};
pub use orbits::{
    criterion_check, induced_edge_bijection, orbit_decomposition, ComponentReport, CriterionReport,
    EdgeBijection, OrbitDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "B",
            Color::White => "W",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Corner {
    SW,
    SE,
    NE,
    NW,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::SW, Corner::SE, Corner::NE, Corner::NW];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn sign(self) -> Sign {
        match self {
            Corner::SW | Corner::NE => Sign::Negative,
            Corner::SE | Corner::NW => Sign::Positive,
        }
    }

    /// Image under the half-turn of the square.
    pub fn rotated(self) -> Corner {
        match self {
            Corner::SW => Corner::NE,
            Corner::NE => Corner::SW,
            Corner::SE => Corner::NW,
            Corner::NW => Corner::SE,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Corner::SW => "SW",
            Corner::SE => "SE",
            Corner::NE => "NE",
            Corner::NW => "NW",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    S,
    N,
    W,
    E,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::S, Side::N, Side::W, Side::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn color(self) -> Color {
        match self {
            Side::S | Side::N => Color::Black,
            Side::W | Side::E => Color::White,
        }
    }

    pub fn initial(self) -> Corner {
        match self {
            Side::S | Side::W => Corner::SW,
            Side::N | Side::E => Corner::NE,
        }
    }

    pub fn terminal(self) -> Corner {
        match self {
            Side::S | Side::E => Corner::SE,
            Side::N | Side::W => Corner::NW,
        }
    }

    pub fn rotated(self) -> Side {
        match self {
            Side::S => Side::N,
            Side::N => Side::S,
            Side::W => Side::E,
            Side::E => Side::W,
        }
    }

    /// The side of `color` leaving the negative corner `corner`.
    pub fn leaving(corner: Corner, color: Color) -> Side {
        match (corner, color) {
            (Corner::SW, Color::Black) => Side::S,
            (Corner::SW, Color::White) => Side::W,
            (Corner::NE, Color::Black) => Side::N,
            (Corner::NE, Color::White) => Side::E,
            _ => panic!("{corner:?} is not a negative corner"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::S => "S",
            Side::N => "N",
            Side::W => "W",
            Side::E => "E",
        }
    }
}

/// A corner of one square; squares are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CornerRef {
    pub square: usize,
    pub corner: Corner,
}

impl CornerRef {
    pub fn new(square: usize, corner: Corner) -> Self {
        CornerRef { square, corner }
    }

    pub fn sign(self) -> Sign {
        self.corner.sign()
    }

    /// Dense index `4 * (square - 1) + corner`.
    pub fn id(self) -> usize {
        4 * (self.square - 1) + self.corner.index()
    }

    pub fn from_id(id: usize) -> Self {
        CornerRef::new(id / 4 + 1, Corner::ALL[id % 4])
    }
}

impl fmt::Display for CornerRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.square, self.corner.name())
    }
}

/// A side of one square. The derived order (square, then `S<N<W<E`) is the
/// order used to start orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRef {
    pub square: usize,
    pub side: Side,
}

impl EdgeRef {
    pub fn new(square: usize, side: Side) -> Self {
        EdgeRef { square, side }
    }

    pub fn color(self) -> Color {
        self.side.color()
    }

    pub fn initial(self) -> CornerRef {
        CornerRef::new(self.square, self.side.initial())
    }

    pub fn terminal(self) -> CornerRef {
        CornerRef::new(self.square, self.side.terminal())
    }

    /// Dense index `4 * (square - 1) + side`.
    pub fn id(self) -> usize {
        4 * (self.square - 1) + self.side.index()
    }

    pub fn from_id(id: usize) -> Self {
        EdgeRef::new(id / 4 + 1, Side::ALL[id % 4])
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.square, self.side.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("a spec needs at least one square")]
    Empty,
    #[error("square index {square} out of range 1..={n}")]
    OutOfRange { square: usize, n: usize },
    #[error("{0} is not a positive corner (expected SE or NW)")]
    NotPositive(CornerRef),
    #[error("{0} is not a negative corner (expected SW or NE)")]
    NotNegative(CornerRef),
    #[error("positive corner {0} is paired twice")]
    DuplicateSource(CornerRef),
    #[error("negative corner {0} is hit twice")]
    DuplicateTarget(CornerRef),
    #[error("positive corner {0} is not paired")]
    MissingSource(CornerRef),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} pairing lines, found {found}")]
    LineCount { expected: usize, found: usize },
}

pub(crate) fn positive_slot(c: CornerRef) -> usize {
    2 * (c.square - 1) + usize::from(c.corner == Corner::NW)
}

pub(crate) fn negative_slot(c: CornerRef) -> usize {
    2 * (c.square - 1) + usize::from(c.corner == Corner::NE)
}

pub(crate) fn positive_at(slot: usize) -> CornerRef {
    let corner = if slot.is_multiple_of(2) {
        Corner::SE
    } else {
        Corner::NW
    };
    CornerRef::new(slot / 2 + 1, corner)
}

pub(crate) fn negative_at(slot: usize) -> CornerRef {
    let corner = if slot.is_multiple_of(2) {
        Corner::SW
    } else {
        Corner::NE
    };
    CornerRef::new(slot / 2 + 1, corner)
}

/// `n` SBW squares together with a bijection `phi` from the `2n` positive
/// corners onto the `2n` negative corners.
///
/// Positive corners are stored in slot order `1.SE, 1.NW, 2.SE, 2.NW, ...`
/// and negative corners in slot order `1.SW, 1.NE, 2.SW, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SbwSpec {
    n: usize,
    targets: Vec<usize>,
    sources: Vec<usize>,
}

impl SbwSpec {
    /// Builds a spec from explicit `(positive, negative)` pairs.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self, SpecError>
    where
        I: IntoIterator<Item = (CornerRef, CornerRef)>,
    {
        if n == 0 {
            return Err(SpecError::Empty);
        }
        let mut targets = vec![usize::MAX; 2 * n];
        let mut hit = vec![false; 2 * n];
        for (from, to) in pairs {
            for c in [from, to] {
                if c.square == 0 || c.square > n {
                    return Err(SpecError::OutOfRange {
                        square: c.square,
                        n,
                    });
                }
            }
            if from.sign() != Sign::Positive {
                return Err(SpecError::NotPositive(from));
            }
            if to.sign() != Sign::Negative {
                return Err(SpecError::NotNegative(to));
            }
            let s = positive_slot(from);
            if targets[s] != usize::MAX {
                return Err(SpecError::DuplicateSource(from));
            }
            let t = negative_slot(to);
            if hit[t] {
                return Err(SpecError::DuplicateTarget(to));
            }
            hit[t] = true;
            targets[s] = t;
        }
        if let Some(s) = targets.iter().position(|&t| t == usize::MAX) {
            return Err(SpecError::MissingSource(positive_at(s)));
        }
        Ok(Self::from_slots_unchecked(n, targets))
    }

    /// Builds a spec from slot indices: `targets[i]` is the negative slot hit
    /// by positive slot `i`. `targets` must be a permutation of `0..2n`.
    pub fn from_targets(targets: Vec<usize>) -> Result<Self, SpecError> {
        if targets.is_empty() || !targets.len().is_multiple_of(2) {
            return Err(SpecError::Empty);
        }
        let n = targets.len() / 2;
        let pairs: Vec<_> = targets
            .iter()
            .enumerate()
            .map(|(s, &t)| (positive_at(s), negative_at(t)))
            .collect();
        for (_, to) in &pairs {
            if to.square > n {
                return Err(SpecError::OutOfRange {
                    square: to.square,
                    n,
                });
            }
        }
        SbwSpec::new(n, pairs)
    }

    fn from_slots_unchecked(n: usize, targets: Vec<usize>) -> Self {
        let mut sources = vec![0; 2 * n];
        for (s, &t) in targets.iter().enumerate() {
            sources[t] = s;
        }
        SbwSpec {
            n,
            targets,
            sources,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Negative slot hit by each positive slot.
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    /// The image of a positive corner.
    pub fn phi(&self, v: CornerRef) -> CornerRef {
        assert_eq!(
            v.sign(),
            Sign::Positive,
            "phi is defined on positive corners"
        );
        negative_at(self.targets[positive_slot(v)])
    }

    /// The preimage of a negative corner.
    pub fn phi_inverse(&self, w: CornerRef) -> CornerRef {
        assert_eq!(
            w.sign(),
            Sign::Negative,
            "phi^-1 is defined on negative corners"
        );
        positive_at(self.sources[negative_slot(w)])
    }

    pub fn positive_corners(&self) -> impl Iterator<Item = CornerRef> + '_ {
        (0..2 * self.n).map(positive_at)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (CornerRef, CornerRef)> + '_ {
        self.positive_corners().map(|v| (v, self.phi(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> {
        (0..4 * self.n).map(EdgeRef::from_id)
    }

    /// Squares grouped by connectivity through `phi`, each group sorted,
    /// groups ordered by their smallest square.
    pub fn square_components(&self) -> Vec<Vec<usize>> {
        let mut uf = crate::union_find::UnionFind::new(self.n);
        for (v, w) in self.pairs() {
            uf.union(v.square - 1, w.square - 1);
        }
        let (class_of, count) = uf.classes();
        let mut groups = vec![Vec::new(); count];
        for (sq, &c) in class_of.iter().enumerate() {
            groups[c].push(sq + 1);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.square_components().len() == 1
    }

    /// Applies a square relabelling and half-turns; see [`Isomorphism`].
    pub fn transform(&self, iso: &Isomorphism) -> SbwSpec {
        let map = |c: CornerRef| {
            let corner = if iso.rotate[c.square - 1] {
                c.corner.rotated()
            } else {
                c.corner
            };
            CornerRef::new(iso.perm[c.square - 1], corner)
        };
        let mut targets = vec![0; 2 * self.n];
        for (v, w) in self.pairs() {
            targets[positive_slot(map(v))] = negative_slot(map(w));
        }
        SbwSpec::from_slots_unchecked(self.n, targets)
    }

    /// Disjoint union; the squares of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &SbwSpec) -> SbwSpec {
        let shift = 2 * self.n;
        let targets = self
            .targets
            .iter()
            .copied()
            .chain(other.targets.iter().map(|&t| t + shift))
            .collect();
        SbwSpec::from_slots_unchecked(self.n + other.n, targets)
    }
}
