//! Isomorphism of corner pairings.
//!
//! Two specs are isomorphic when one is obtained from the other by
//! renumbering the squares and giving some squares a half-turn. The half-turn
//! is the only non-trivial symmetry of a square that keeps signs, colours and
//! side orientations.

use super::{negative_slot, positive_at, positive_slot, Corner, CornerRef, SbwSpec};

/// Square `i` (1-based) of the source becomes square `perm[i - 1]`, turned
/// by a half-turn first when `rotate[i - 1]` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub perm: Vec<usize>,
    pub rotate: Vec<bool>,
}

impl Isomorphism {
    pub fn identity(n: usize) -> Self {
        Isomorphism {
            perm: (1..=n).collect(),
            rotate: vec![false; n],
        }
    }
}

/// Complete isomorphism invariant: the pairing table of a canonically
/// relabelled representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub targets: Vec<u32>,
}

impl CanonicalForm {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 * (self.targets.len() + 1));
        out.extend_from_slice(&(self.n as u32).to_be_bytes());
        for t in &self.targets {
            out.extend_from_slice(&t.to_be_bytes());
        }
        out
    }

    pub fn spec(&self) -> SbwSpec {
        SbwSpec::from_targets(self.targets.iter().map(|&t| t as usize).collect())
            .expect("canonical form always encodes a valid spec")
    }
}

struct Labelling {
    order: Vec<usize>,
    new_index: Vec<Option<usize>>,
    rotate: Vec<bool>,
}

impl Labelling {
    fn frame(&self, c: CornerRef) -> CornerRef {
        let corner = if self.rotate[c.square - 1] {
            c.corner.rotated()
        } else {
            c.corner
        };
        CornerRef::new(self.new_index[c.square - 1].unwrap() + 1, corner)
    }
}

/// Breadth-first labelling of the component of `start`. Each newly reached
/// square is oriented so the corner it was reached through becomes `SW`
/// (reached through `phi`) or `SE` (reached through `phi^-1`).
fn label_from(spec: &SbwSpec, start: usize, rotate_start: bool) -> Labelling {
    let n = spec.n();
    let mut lab = Labelling {
        order: vec![start],
        new_index: vec![None; n],
        rotate: vec![false; n],
    };
    lab.new_index[start - 1] = Some(0);
    lab.rotate[start - 1] = rotate_start;
    let mut head = 0;
    while head < lab.order.len() {
        let sq = lab.order[head];
        head += 1;
        for local in [Corner::SE, Corner::NW, Corner::SW, Corner::NE] {
            let corner = if lab.rotate[sq - 1] {
                local.rotated()
            } else {
                local
            };
            let here = CornerRef::new(sq, corner);
            let (there, wanted) = match local {
                Corner::SE | Corner::NW => (spec.phi(here), Corner::SW),
                Corner::SW | Corner::NE => (spec.phi_inverse(here), Corner::SE),
            };
            if lab.new_index[there.square - 1].is_none() {
                lab.new_index[there.square - 1] = Some(lab.order.len());
                lab.rotate[there.square - 1] = there.corner != wanted;
                lab.order.push(there.square);
            }
        }
    }
    lab
}

fn encode(spec: &SbwSpec, lab: &Labelling) -> Vec<u32> {
    let mut code = vec![0; 2 * lab.order.len()];
    for &sq in &lab.order {
        for corner in [Corner::SE, Corner::NW] {
            let v = CornerRef::new(sq, corner);
            code[positive_slot(lab.frame(v))] = negative_slot(lab.frame(spec.phi(v))) as u32;
        }
    }
    code
}

/// Canonical form via minimal breadth-first code per component, components
/// sorted by (size, code) and concatenated.
pub fn canonical_form(spec: &SbwSpec) -> CanonicalForm {
    let mut parts: Vec<Vec<u32>> = spec
        .square_components()
        .into_iter()
        .map(|squares| {
            squares
                .iter()
                .flat_map(|&sq| [false, true].map(|rot| (sq, rot)))
                .map(|(sq, rot)| encode(spec, &label_from(spec, sq, rot)))
                .min()
                .expect("components are non-empty")
        })
        .collect();
    parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut targets = Vec::with_capacity(2 * spec.n());
    let mut offset = 0u32;
    for part in parts {
        let len = part.len() as u32;
        targets.extend(part.into_iter().map(|t| t + offset));
        offset += len;
    }
    CanonicalForm {
        n: spec.n(),
        targets,
    }
}

pub fn isomorphic(a: &SbwSpec, b: &SbwSpec) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// Backtracking search for an explicit isomorphism `a -> b`, trying every
/// relabelling and half-turn pattern consistent with the pairs fixed so far.
pub fn find_isomorphism(a: &SbwSpec, b: &SbwSpec) -> Option<Isomorphism> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let mut iso = Isomorphism {
        perm: vec![0; n],
        rotate: vec![false; n],
    };
    let mut used = vec![false; n];
    if extend(a, b, 0, &mut iso, &mut used) {
        Some(iso)
    } else {
        None
    }
}

fn image(iso: &Isomorphism, c: CornerRef) -> CornerRef {
    let corner = if iso.rotate[c.square - 1] {
        c.corner.rotated()
    } else {
        c.corner
    };
    CornerRef::new(iso.perm[c.square - 1], corner)
}

fn extend(
    a: &SbwSpec,
    b: &SbwSpec,
    depth: usize,
    iso: &mut Isomorphism,
    used: &mut [bool],
) -> bool {
    let n = a.n();
    if depth == n {
        return true;
    }
    let sq = depth + 1;
    for target in 1..=n {
        if used[target - 1] {
            continue;
        }
        for rot in [false, true] {
            iso.perm[sq - 1] = target;
            iso.rotate[sq - 1] = rot;
            // every pair with both ends among the placed squares must map to a pair of `b`
            let consistent = (0..2 * sq).map(positive_at).all(|v| {
                let w = a.phi(v);
                w.square > sq || b.phi(image(iso, v)) == image(iso, w)
            });
            if consistent {
                used[target - 1] = true;
                if extend(a, b, depth + 1, iso, used) {
                    return true;
                }
                used[target - 1] = false;
            }
        }
    }
    false
}
