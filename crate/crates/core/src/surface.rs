//! Closed surfaces given as polygons glued along labelled edges.
//!
//! Vertices are not supplied: they are recovered from the polygon corners,
//! so the vertex count is the one of the surface the polygons actually glue
//! up to.

use serde::Serialize;

use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Square,
    Black,
    White,
    Top,
    Bottom,
}

/// One side of a polygon: an edge index and whether the polygon runs along
/// the edge's own orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonSide {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polygon {
    pub kind: FaceKind,
    pub label: String,
    pub sides: Vec<PolygonSide>,
}

#[derive(Clone, Debug, Default)]
pub struct PolygonComplex {
    pub edge_labels: Vec<String>,
    pub faces: Vec<Polygon>,
}

impl PolygonComplex {
    pub fn add_edge(&mut self, label: impl Into<String>) -> usize {
        self.edge_labels.push(label.into());
        self.edge_labels.len() - 1
    }

    pub fn add_face(&mut self, kind: FaceKind, label: impl Into<String>, sides: Vec<PolygonSide>) {
        self.faces.push(Polygon {
            kind,
            label: label.into(),
            sides,
        });
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceComponent {
    pub faces: Vec<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub face_count: usize,
    pub euler: i64,
    pub orientable: bool,
    /// Orientable genus; `None` for non-orientable components.
    pub genus: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceModel {
    pub vertices: usize,
    pub edges: Vec<String>,
    pub faces: Vec<Polygon>,
    /// Vertex class of each edge's (tail, head).
    pub edge_ends: Vec<(usize, usize)>,
    pub euler: i64,
    pub closed: bool,
    pub orientable: bool,
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceModel {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Genus of a connected orientable surface.
    pub fn genus(&self) -> Option<usize> {
        match self.components.as_slice() {
            [only] => only.genus,
            _ => None,
        }
    }

    pub fn is_sphere(&self) -> bool {
        self.closed && self.genus() == Some(0)
    }
}

impl PolygonComplex {
    pub fn analyze(self) -> SurfaceModel {
        let edge_count = self.edge_labels.len();
        let tail = |e: usize| 2 * e;
        let head = |e: usize| 2 * e + 1;
        let start = |s: &PolygonSide| {
            if s.forward {
                tail(s.edge)
            } else {
                head(s.edge)
            }
        };
        let end = |s: &PolygonSide| {
            if s.forward {
                head(s.edge)
            } else {
                tail(s.edge)
            }
        };

        let mut ends = UnionFind::new(2 * edge_count);
        // (face, position in face, +1 / -1 for forward / backward)
        let mut occurrences: Vec<Vec<(usize, usize, i8)>> = vec![Vec::new(); edge_count];
        for (f, face) in self.faces.iter().enumerate() {
            let k = face.sides.len();
            for i in 0..k {
                let here = &face.sides[i];
                let next = &face.sides[(i + 1) % k];
                ends.union(end(here), start(next));
                occurrences[here.edge].push((f, i, if here.forward { 1 } else { -1 }));
            }
        }
        let (vertex_of, vertex_count) = ends.classes();
        let edge_ends = (0..edge_count)
            .map(|e| (vertex_of[tail(e)], vertex_of[head(e)]))
            .collect();

        let closed = occurrences.iter().all(|occ| occ.len() == 2);

        // Orient faces so that the two runs along every edge are opposite:
        // o_f * d_f = -o_g * d_g.
        let face_count = self.faces.len();
        let mut components = UnionFind::new(face_count);
        for occ in &occurrences {
            for w in occ.windows(2) {
                components.union(w[0].0, w[1].0);
            }
        }
        let mut orientation: Vec<i8> = vec![0; face_count];
        let mut bad = vec![false; face_count];
        for root in 0..face_count {
            if orientation[root] != 0 {
                continue;
            }
            orientation[root] = 1;
            let mut stack = vec![root];
            while let Some(f) = stack.pop() {
                for (i, side) in self.faces[f].sides.iter().enumerate() {
                    let d = if side.forward { 1 } else { -1 };
                    for &(g, j, dg) in &occurrences[side.edge] {
                        if (g, j) == (f, i) {
                            continue;
                        }
                        let want = -orientation[f] * d * dg;
                        if orientation[g] == 0 {
                            orientation[g] = want;
                            stack.push(g);
                        } else if orientation[g] != want {
                            bad[f] = true;
                        }
                    }
                }
            }
        }

        let (comp_of, comp_count) = components.classes();
        let mut comps: Vec<SurfaceComponent> = (0..comp_count)
            .map(|_| SurfaceComponent {
                faces: Vec::new(),
                vertices: 0,
                edges: 0,
                face_count: 0,
                euler: 0,
                orientable: true,
                genus: None,
            })
            .collect();
        for f in 0..face_count {
            let c = &mut comps[comp_of[f]];
            c.faces.push(f);
            c.face_count += 1;
            if bad[f] {
                c.orientable = false;
            }
        }
        let mut vertex_seen = vec![false; vertex_count];
        for (e, occ) in occurrences.iter().enumerate() {
            let Some(&(f, _, _)) = occ.first() else {
                continue;
            };
            let c = &mut comps[comp_of[f]];
            c.edges += 1;
            for v in [vertex_of[tail(e)], vertex_of[head(e)]] {
                if !vertex_seen[v] {
                    vertex_seen[v] = true;
                    c.vertices += 1;
                }
            }
        }
        for c in &mut comps {
            c.euler = c.vertices as i64 - c.edges as i64 + c.face_count as i64;
            if c.orientable && closed {
                c.genus = usize::try_from((2 - c.euler) / 2).ok();
            }
        }

        SurfaceModel {
            vertices: vertex_count,
            euler: vertex_count as i64 - edge_count as i64 + face_count as i64,
            closed,
            orientable: comps.iter().all(|c| c.orientable),
            components: comps,
            edges: self.edge_labels,
            faces: self.faces,
            edge_ends,
        }
    }
}
