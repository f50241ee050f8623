//! Link diagrams as combinatorial maps.
//!
//! A crossing has four germs numbered counterclockwise: 0 is the incoming
//! under-strand, 1 and 3 are over-strands, 2 is the outgoing under-strand.
//! Germ `g` of crossing `k` has id `4k + g`. The wedge between germs `g`
//! and `g + 1` is corner `g` of the crossing; corners 1 and 3 are black,
//! corners 0 and 2 white. This puts the black surface's half-twists in the
//! same position as the black sides of an SBW square whose corners
//! `SE, NE, NW, SW` sit on germs `0, 1, 2, 3`.

mod pd;
mod reconstruct;

use serde::Serialize;
use thiserror::Error;

pub use pd::{parse_pd, PdCode};
pub use reconstruct::{build_surface, reconstruct_diagram, Reconstruction};

use crate::sbw::{Color, Corner, CornerRef, SbwSpec};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("empty diagram")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("bad arc label `{0}` (labels are positive integers)")]
    BadLabel(String),
    #[error("crossing {crossing} has {found} labels, expected 4")]
    Arity { crossing: usize, found: usize },
    #[error("arc label {0} occurs only once")]
    UnpairedLabel(u32),
    #[error("arc label {label} occurs {count} times")]
    RepeatedLabel { label: u32, count: usize },
    #[error("diagram is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("non-planar PD data: V - E + F = {euler}, expected 2")]
    NonPlanar { euler: i64 },
    #[error("not alternating: arc {0} joins two germs of the same level")]
    NotAlternating(u32),
    #[error("genus {genus} surface with {components} component(s): no PD code")]
    NoPdCode { genus: usize, components: usize },
}

pub(crate) const GERM_CORNERS: [Corner; 4] = [Corner::SE, Corner::NE, Corner::NW, Corner::SW];

pub(crate) fn germ_of(c: CornerRef) -> usize {
    let pos = GERM_CORNERS.iter().position(|&g| g == c.corner).unwrap();
    4 * (c.square - 1) + pos
}

pub(crate) fn corner_of(germ: usize) -> CornerRef {
    CornerRef::new(germ / 4 + 1, GERM_CORNERS[germ % 4])
}

pub fn is_over(germ: usize) -> bool {
    germ % 4 % 2 == 1
}

pub(crate) fn opposite(germ: usize) -> usize {
    germ - germ % 4 + (germ % 4 + 2) % 4
}

fn clockwise(germ: usize) -> usize {
    germ - germ % 4 + (germ % 4 + 3) % 4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramModel {
    pub crossings: usize,
    /// The germ at the other end of each germ's arc.
    pub partner: Vec<usize>,
    /// Arc label of each germ.
    pub arc_label: Vec<u32>,
    /// Faces as cyclic corner sequences; a corner is named by the germ that
    /// opens it counterclockwise.
    pub faces: Vec<Vec<usize>>,
}

impl DiagramModel {
    pub(crate) fn from_partner(partner: Vec<usize>, arc_label: Vec<u32>) -> Self {
        let crossings = partner.len() / 4;
        let mut model = DiagramModel {
            crossings,
            partner,
            arc_label,
            faces: Vec::new(),
        };
        model.faces = model.trace();
        model
    }

    /// Orbits of "cross the arc, then turn to the next germ clockwise".
    fn trace(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.partner.len()];
        let mut faces = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut g = start;
            while !seen[g] {
                seen[g] = true;
                face.push(g);
                g = clockwise(self.partner[g]);
            }
            faces.push(face);
        }
        faces
    }

    pub fn euler(&self) -> i64 {
        self.crossings as i64 - 2 * self.crossings as i64 + self.faces.len() as i64
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.partner.len()).all(|g| is_over(g) != is_over(self.partner[g]))
    }

    /// The germs of each arc, under end first when the arc alternates.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&g| !is_over(g) || is_over(self.partner[g]) && g < self.partner[g])
            .map(|g| (g, self.partner[g]))
            .collect()
    }

    /// Arc labels around each crossing in germ order.
    pub fn crossing_labels(&self) -> Vec<[u32; 4]> {
        (0..self.crossings)
            .map(|k| std::array::from_fn(|p| self.arc_label[4 * k + p]))
            .collect()
    }
}

pub fn trace_faces(pd: &PdCode) -> Result<DiagramModel, DiagramError> {
    let mut first_end: std::collections::HashMap<u32, usize> = Default::default();
    let mut partner = vec![0; 4 * pd.len()];
    let mut arc_label = vec![0; 4 * pd.len()];
    for (k, labels) in pd.crossings.iter().enumerate() {
        for (p, &label) in labels.iter().enumerate() {
            let g = 4 * k + p;
            arc_label[g] = label;
            match first_end.remove(&label) {
                Some(h) => {
                    partner[g] = h;
                    partner[h] = g;
                }
                None => {
                    first_end.insert(label, g);
                }
            }
        }
    }
    let model = DiagramModel::from_partner(partner, arc_label);
    let euler = model.euler();
    if euler != 2 {
        return Err(DiagramError::NonPlanar { euler });
    }
    if let Some(g) = (0..model.partner.len()).find(|&g| is_over(g) == is_over(model.partner[g])) {
        return Err(DiagramError::NotAlternating(model.arc_label[g]));
    }
    Ok(model)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredDiagram {
    pub model: DiagramModel,
    pub face_colors: Vec<Color>,
}

impl ColoredDiagram {
    /// Sorted face degrees of one colour.
    pub fn face_degrees(&self, color: Color) -> Vec<usize> {
        let mut degrees: Vec<usize> = self
            .model
            .faces
            .iter()
            .zip(&self.face_colors)
            .filter(|(_, &c)| c == color)
            .map(|(f, _)| f.len())
            .collect();
        degrees.sort_unstable();
        degrees
    }
}

fn corner_color(corner: usize) -> Color {
    if corner % 2 == 1 {
        Color::Black
    } else {
        Color::White
    }
}

/// Colours every face by the colour of its corners and checks that all
/// corners of a face agree.
pub fn checkerboard_coloring(model: DiagramModel) -> Result<ColoredDiagram, DiagramError> {
    let mut face_colors = Vec::with_capacity(model.faces.len());
    for face in &model.faces {
        let color = corner_color(face[0]);
        if let Some(&g) = face.iter().find(|&&g| corner_color(g) != color) {
            return Err(DiagramError::NotAlternating(model.arc_label[g]));
        }
        face_colors.push(color);
    }
    Ok(ColoredDiagram { model, face_colors })
}

/// One SBW square per crossing with germs `0, 1, 2, 3` on corners
/// `SE, NE, NW, SW`; every arc pairs the positive corner at its under end
/// with the negative corner at its over end.
pub fn extract_sbw(diagram: &ColoredDiagram) -> SbwSpec {
    let model = &diagram.model;
    let pairs = (0..model.partner.len())
        .filter(|&g| !is_over(g))
        .map(|g| (corner_of(g), corner_of(model.partner[g])));
    SbwSpec::new(model.crossings, pairs)
        .expect("an alternating diagram pairs every under end with an over end")
}

/// Number of link components, by following strands straight through
/// crossings.
pub fn component_count(model: &DiagramModel) -> usize {
    let mut uf = UnionFind::new(model.partner.len());
    for g in 0..model.partner.len() {
        uf.union(g, model.partner[g]);
        uf.union(g, opposite(g));
    }
    uf.classes().1
}

/// PD code to SBW spec: parse, trace, colour and extract.
pub fn spec_from_pd(pd: &PdCode) -> Result<SbwSpec, DiagramError> {
    let colored = checkerboard_coloring(trace_faces(pd)?)?;
    Ok(extract_sbw(&colored))
}
