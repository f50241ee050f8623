//! From a corner pairing back to a surface and a diagram on it.

use serde::Serialize;

use super::{germ_of, is_over, opposite, DiagramError, DiagramModel, PdCode};
use crate::sbw::{
    criterion_check, induced_edge_bijection, orbit_decomposition, positive_slot, Color, CornerRef,
    EdgeRef, SbwSpec, Side,
};
use crate::surface::{FaceKind, PolygonComplex, PolygonSide, SurfaceModel};

/// The closed surface made of the squares, one connecting edge from every
/// positive corner `v` to `phi(v)`, and one black (white) disc per orbit of
/// the edge bijection on black (white) sides, attached along
/// `e, gamma_0, psi(e), gamma_1, ...`.
///
/// Edges `0..4n` are the square sides in side-id order, edges
/// `4n..6n` the connecting edges in positive-slot order.
pub fn build_surface(spec: &SbwSpec) -> SurfaceModel {
    let n = spec.n();
    let mut pc = PolygonComplex::default();
    for e in spec.edges() {
        pc.add_edge(e.to_string());
    }
    for (v, w) in spec.pairs() {
        pc.add_edge(format!("{v}->{w}"));
    }
    let connecting = |v: CornerRef| 4 * n + positive_slot(v);
    let forward = |edge| PolygonSide {
        edge,
        forward: true,
    };

    for sq in 1..=n {
        let sides = [
            (Side::S, true),
            (Side::E, false),
            (Side::N, true),
            (Side::W, false),
        ]
        .into_iter()
        .map(|(side, fwd)| PolygonSide {
            edge: EdgeRef::new(sq, side).id(),
            forward: fwd,
        })
        .collect();
        pc.add_face(FaceKind::Square, format!("s{sq}"), sides);
    }

    let orbits = orbit_decomposition(&induced_edge_bijection(spec));
    for (color, kind, prefix) in [
        (Color::Black, FaceKind::Black, "b"),
        (Color::White, FaceKind::White, "w"),
    ] {
        for (i, orbit) in orbits.of_color(color).iter().enumerate() {
            let sides = orbit
                .iter()
                .flat_map(|e| [forward(e.id()), forward(connecting(e.terminal()))])
                .collect();
            pc.add_face(kind, format!("{prefix}{}", i + 1), sides);
        }
    }
    pc.analyze()
}

/// The surface, the alternating diagram on it, and a PD code when the
/// surface is a sphere.
#[derive(Clone, Debug, Serialize)]
pub struct Reconstruction {
    pub surface: SurfaceModel,
    pub diagram: DiagramModel,
    pub pd: Option<PdCode>,
}

impl Reconstruction {
    pub fn pd_code(&self) -> Result<&PdCode, DiagramError> {
        self.pd.as_ref().ok_or_else(|| DiagramError::NoPdCode {
            genus: self.surface.components.iter().filter_map(|c| c.genus).sum(),
            components: self.surface.components.len(),
        })
    }
}

/// Places a crossing in every square (over-strand on the `SW-NE` diagonal,
/// under-strand on `SE-NW`) and joins the crossings along the connecting
/// edges.
pub fn reconstruct_diagram(spec: &SbwSpec) -> Reconstruction {
    let surface = build_surface(spec);
    let mut partner = vec![0; 4 * spec.n()];
    let mut arc_label = vec![0; 4 * spec.n()];
    for (v, w) in spec.pairs() {
        let (a, b) = (germ_of(v), germ_of(w));
        partner[a] = b;
        partner[b] = a;
        let label = positive_slot(v) as u32 + 1;
        arc_label[a] = label;
        arc_label[b] = label;
    }
    let diagram = DiagramModel::from_partner(partner, arc_label);
    let pd = criterion_check(spec)
        .verdict
        .then(|| sphere_pd_code(&diagram));
    Reconstruction {
        surface,
        diagram,
        pd,
    }
}

/// Walks every link component starting at the first unlabelled under germ
/// (crossings in order, germ 0 before germ 2), entering the crossing there,
/// and numbers arcs in the order they are left.
fn sphere_pd_code(diagram: &DiagramModel) -> PdCode {
    let germs = diagram.partner.len();
    let mut label = vec![0u32; germs];
    let mut incoming = vec![false; germs];
    let mut next = 1;
    for start in (0..germs).filter(|&g| !is_over(g)) {
        if label[start] != 0 {
            continue;
        }
        let mut cur = start;
        loop {
            incoming[cur] = true;
            let out = opposite(cur);
            if label[out] != 0 {
                break;
            }
            let far = diagram.partner[out];
            label[out] = next;
            label[far] = next;
            next += 1;
            cur = far;
        }
    }
    let crossings = (0..diagram.crossings)
        .map(|k| {
            let first = if incoming[4 * k] { 0 } else { 2 };
            debug_assert!(incoming[4 * k + first]);
            std::array::from_fn(|i| label[4 * k + (first + i) % 4])
        })
        .collect();
    PdCode::new(crossings).expect("a diagram on the sphere gives a valid PD code")
}
