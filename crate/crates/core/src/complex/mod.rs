//! Quotient complexes of SBW squares and cubes.
//!
//! Raw cells (one copy per square, cube, face, ...) are identified by
//! union-find; each class is represented by its minimal raw cell, and
//! classes are numbered in the order of their representatives.

mod cubed;
mod presentation;
mod squared;

use serde::Serialize;

pub use cubed::{boundary_complex, build_cubed_complex};
pub use presentation::{fundamental_group_presentation, ComplexError};
pub use squared::build_squared_complex;

pub const JSON_VERSION: u32 = 1;

/// One face of a cell's boundary. For 1-cells the faces are the tail (sign
/// -1) and head (sign +1). For squares the faces are the four sides read
/// counterclockwise from `SW`, with sign +1 when the side is run along its
/// own orientation. For cubes the sign is +1 when the face class is
/// represented by this cube's own face and -1 when it is the glued partner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub face: usize,
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellClass {
    pub label: String,
    /// Number of raw cells in the class.
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientComplex {
    pub version: u32,
    pub dim: usize,
    pub cells: Vec<Vec<CellClass>>,
    /// `attach[d][i]` is the boundary of cell `i` of dimension `d`
    /// (empty for `d = 0`).
    pub attach: Vec<Vec<Vec<Attachment>>>,
    pub counts: Vec<usize>,
    pub euler: i64,
}

impl QuotientComplex {
    pub(crate) fn new(cells: Vec<Vec<CellClass>>, attach: Vec<Vec<Vec<Attachment>>>) -> Self {
        let counts: Vec<usize> = cells.iter().map(Vec::len).collect();
        let euler = counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        QuotientComplex {
            version: JSON_VERSION,
            dim: cells.len() - 1,
            cells,
            attach,
            counts,
            euler,
        }
    }

    pub fn count(&self, d: usize) -> usize {
        self.counts.get(d).copied().unwrap_or(0)
    }

    /// (tail, head) vertex classes of a 1-cell.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let a = &self.attach[1][edge];
        (a[0].face, a[1].face)
    }

    /// Checks that every attachment refers to an existing cell one
    /// dimension down.
    pub fn is_well_formed(&self) -> bool {
        self.attach.len() == self.cells.len()
            && self.attach[0].iter().all(Vec::is_empty)
            && (1..self.cells.len()).all(|d| {
                self.attach[d].len() == self.cells[d].len()
                    && self.attach[d]
                        .iter()
                        .flatten()
                        .all(|a| a.face < self.cells[d - 1].len())
            })
    }
}

/// Numbers union-find classes and labels each by its representative.
pub(crate) fn classes_with_labels(
    uf: &mut crate::union_find::UnionFind,
    label: impl Fn(usize) -> String,
) -> (Vec<usize>, Vec<CellClass>) {
    let (class_of, count) = uf.classes();
    let mut cells: Vec<Option<CellClass>> = vec![None; count];
    for (raw, &c) in class_of.iter().enumerate() {
        match &mut cells[c] {
            Some(cell) => cell.size += 1,
            slot @ None => {
                *slot = Some(CellClass {
                    label: label(raw),
                    size: 1,
                })
            }
        }
    }
    (class_of, cells.into_iter().map(Option::unwrap).collect())
}
