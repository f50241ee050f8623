use super::{classes_with_labels, Attachment, CellClass, QuotientComplex};
use crate::sbw::{induced_edge_bijection, CornerRef, EdgeRef, SbwSpec, Side};
use crate::union_find::UnionFind;

/// Sides of a square read counterclockwise from `SW`, with the direction in
/// which the boundary runs along each.
pub(crate) const BOUNDARY_WORD: [(Side, i32); 4] =
    [(Side::S, 1), (Side::E, -1), (Side::N, 1), (Side::W, -1)];

/// The squared complex obtained by gluing every side `e` to `psi(e)` by the
/// orientation-preserving map.
pub fn build_squared_complex(spec: &SbwSpec) -> QuotientComplex {
    let n = spec.n();
    let psi = induced_edge_bijection(spec);

    let mut vertices = UnionFind::new(4 * n);
    let mut edges = UnionFind::new(4 * n);
    for e in spec.edges() {
        let f = psi.apply(e);
        edges.union(e.id(), f.id());
        vertices.union(e.initial().id(), f.initial().id());
        vertices.union(e.terminal().id(), f.terminal().id());
    }

    let (vertex_of, vertex_cells) =
        classes_with_labels(&mut vertices, |raw| CornerRef::from_id(raw).to_string());
    let (edge_of, edge_cells) =
        classes_with_labels(&mut edges, |raw| EdgeRef::from_id(raw).to_string());

    let mut edge_attach = vec![Vec::new(); edge_cells.len()];
    for e in spec.edges() {
        let slot = &mut edge_attach[edge_of[e.id()]];
        if slot.is_empty() {
            *slot = vec![
                Attachment {
                    face: vertex_of[e.initial().id()],
                    sign: -1,
                },
                Attachment {
                    face: vertex_of[e.terminal().id()],
                    sign: 1,
                },
            ];
        }
    }

    let squares: Vec<CellClass> = (1..=n)
        .map(|i| CellClass {
            label: format!("s{i}"),
            size: 1,
        })
        .collect();
    let square_attach = (1..=n)
        .map(|sq| {
            BOUNDARY_WORD
                .iter()
                .map(|&(side, sign)| Attachment {
                    face: edge_of[EdgeRef::new(sq, side).id()],
                    sign,
                })
                .collect()
        })
        .collect();

    let vertex_attach = vec![Vec::new(); vertex_cells.len()];
    QuotientComplex::new(
        vec![vertex_cells, edge_cells, squares],
        vec![vertex_attach, edge_attach, square_attach],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_square_counts() {
        let phi1 = SbwSpec::from_targets(vec![0, 1]).unwrap();
        let c2 = build_squared_complex(&phi1);
        assert_eq!(c2.counts, vec![2, 3, 1]);
        assert_eq!(c2.euler, 0);
        assert!(c2.is_well_formed());
        let labels: Vec<_> = c2.cells[0].iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, vec!["1.SW", "1.SE"]);
        // W and E are glued; the square reads S, E^-1, N, E^-1 in edge classes
        let word: Vec<_> = c2.attach[2][0].iter().map(|a| (a.face, a.sign)).collect();
        assert_eq!(word, vec![(0, 1), (2, -1), (1, 1), (2, -1)]);
    }

    #[test]
    fn edges_are_orbits() {
        let torus = SbwSpec::from_targets(vec![2, 3, 1, 0]).unwrap();
        let c2 = build_squared_complex(&torus);
        assert_eq!(c2.count(1), 2);
        assert_eq!(c2.count(2), 2);
    }
}
