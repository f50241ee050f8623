use super::squared::BOUNDARY_WORD;
use super::{classes_with_labels, Attachment, CellClass, QuotientComplex};
use crate::sbw::{induced_edge_bijection, CornerRef, EdgeRef, SbwSpec};
use crate::surface::{FaceKind, PolygonComplex, PolygonSide, SurfaceModel};
use crate::union_find::UnionFind;

/// Heights of the three copies of each square, in raw-cell order. Level 0
/// comes first so that the squared complex sits at the front of every
/// dimension.
const LEVELS: [&str; 3] = ["0", "+1", "-1"];

struct Layout {
    n: usize,
}

impl Layout {
    fn vertex(&self, level: usize, c: CornerRef) -> usize {
        level * 4 * self.n + c.id()
    }

    fn horizontal(&self, level: usize, e: EdgeRef) -> usize {
        level * 4 * self.n + e.id()
    }

    /// `c x [0,1]` for `upper`, `c x [-1,0]` otherwise; oriented away from
    /// height 0.
    fn vertical(&self, upper: bool, c: CornerRef) -> usize {
        12 * self.n + if upper { 0 } else { 4 * self.n } + c.id()
    }

    fn level_face(&self, level: usize, square: usize) -> usize {
        level * self.n + square - 1
    }

    fn side_face(&self, upper: bool, e: EdgeRef) -> usize {
        3 * self.n + if upper { 0 } else { 4 * self.n } + e.id()
    }

    fn vertex_label(&self, raw: usize) -> String {
        let n4 = 4 * self.n;
        format!("{}@{}", CornerRef::from_id(raw % n4), LEVELS[raw / n4])
    }

    fn edge_label(&self, raw: usize) -> String {
        let n4 = 4 * self.n;
        if raw < 12 * self.n {
            format!("{}@{}", EdgeRef::from_id(raw % n4), LEVELS[raw / n4])
        } else {
            let r = raw - 12 * self.n;
            format!(
                "{}|{}",
                CornerRef::from_id(r % n4),
                if r < n4 { "+" } else { "-" }
            )
        }
    }

    fn face_label(&self, raw: usize) -> String {
        let n = self.n;
        if raw < 3 * n {
            format!("s{}@{}", raw % n + 1, LEVELS[raw / n])
        } else {
            let r = raw - 3 * n;
            format!(
                "{}|{}",
                EdgeRef::from_id(r % (4 * n)),
                if r < 4 * n { "+" } else { "-" }
            )
        }
    }

    /// Boundary of a raw 2-cell in raw edges.
    fn face_word(&self, raw: usize) -> Vec<(usize, i32)> {
        let n = self.n;
        if raw < 3 * n {
            let (level, square) = (raw / n, raw % n + 1);
            BOUNDARY_WORD
                .iter()
                .map(|&(side, sign)| (self.horizontal(level, EdgeRef::new(square, side)), sign))
                .collect()
        } else {
            let r = raw - 3 * n;
            let upper = r < 4 * n;
            let e = EdgeRef::from_id(r % (4 * n));
            let far = if upper { 1 } else { 2 };
            vec![
                (self.horizontal(0, e), 1),
                (self.vertical(upper, e.terminal()), 1),
                (self.horizontal(far, e), -1),
                (self.vertical(upper, e.initial()), -1),
            ]
        }
    }
}

/// The cubed complex: an upper cube `s x [0,1]` and a lower cube
/// `s x [-1,0]` over every square, the lower side face over `e` glued to the
/// upper side face over `psi(e)` by `(x, t) -> (f_e(x), -t)`.
pub fn build_cubed_complex(spec: &SbwSpec) -> QuotientComplex {
    let n = spec.n();
    let layout = Layout { n };
    let psi = induced_edge_bijection(spec);

    let mut vertices = UnionFind::new(12 * n);
    let mut edges = UnionFind::new(20 * n);
    let mut faces = UnionFind::new(11 * n);
    for e in spec.edges() {
        let f = psi.apply(e);
        faces.union(layout.side_face(false, e), layout.side_face(true, f));
        // t = 0 stays at 0, t = -1 goes to t = +1
        edges.union(layout.horizontal(0, e), layout.horizontal(0, f));
        edges.union(layout.horizontal(2, e), layout.horizontal(1, f));
        for (a, b) in [(e.initial(), f.initial()), (e.terminal(), f.terminal())] {
            edges.union(layout.vertical(false, a), layout.vertical(true, b));
            vertices.union(layout.vertex(0, a), layout.vertex(0, b));
            vertices.union(layout.vertex(2, a), layout.vertex(1, b));
        }
    }

    let (vertex_of, vertex_cells) = classes_with_labels(&mut vertices, |r| layout.vertex_label(r));
    let (edge_of, edge_cells) = classes_with_labels(&mut edges, |r| layout.edge_label(r));
    let (face_of, face_cells) = classes_with_labels(&mut faces, |r| layout.face_label(r));

    let raw_edge_ends = |raw: usize| -> (usize, usize) {
        if raw < 12 * n {
            let level = raw / (4 * n);
            let e = EdgeRef::from_id(raw % (4 * n));
            (
                layout.vertex(level, e.initial()),
                layout.vertex(level, e.terminal()),
            )
        } else {
            let r = raw - 12 * n;
            let c = CornerRef::from_id(r % (4 * n));
            (
                layout.vertex(0, c),
                layout.vertex(if r < 4 * n { 1 } else { 2 }, c),
            )
        }
    };

    let mut edge_attach: Vec<Vec<Attachment>> = vec![Vec::new(); edge_cells.len()];
    for raw in 0..20 * n {
        let slot = &mut edge_attach[edge_of[raw]];
        if slot.is_empty() {
            let (tail, head) = raw_edge_ends(raw);
            *slot = vec![
                Attachment {
                    face: vertex_of[tail],
                    sign: -1,
                },
                Attachment {
                    face: vertex_of[head],
                    sign: 1,
                },
            ];
        }
    }

    let mut face_attach: Vec<Vec<Attachment>> = vec![Vec::new(); face_cells.len()];
    for raw in 0..11 * n {
        let slot = &mut face_attach[face_of[raw]];
        if slot.is_empty() {
            *slot = layout
                .face_word(raw)
                .into_iter()
                .map(|(edge, sign)| Attachment {
                    face: edge_of[edge],
                    sign,
                })
                .collect();
        }
    }

    let mut representative = vec![usize::MAX; face_cells.len()];
    for raw in (0..11 * n).rev() {
        representative[face_of[raw]] = raw;
    }
    let cube_face = |raw: usize| Attachment {
        face: face_of[raw],
        sign: if representative[face_of[raw]] == raw {
            1
        } else {
            -1
        },
    };

    let mut cubes = Vec::with_capacity(2 * n);
    let mut cube_attach = Vec::with_capacity(2 * n);
    for (upper, name, level) in [(true, "U", 1), (false, "L", 2)] {
        for sq in 1..=n {
            cubes.push(CellClass {
                label: format!("{name}{sq}"),
                size: 1,
            });
            let mut boundary = vec![
                cube_face(layout.level_face(0, sq)),
                cube_face(layout.level_face(level, sq)),
            ];
            boundary.extend(
                BOUNDARY_WORD
                    .iter()
                    .map(|&(side, _)| cube_face(layout.side_face(upper, EdgeRef::new(sq, side)))),
            );
            cube_attach.push(boundary);
        }
    }

    let vertex_attach = vec![Vec::new(); vertex_cells.len()];
    QuotientComplex::new(
        vec![vertex_cells, edge_cells, face_cells, cubes],
        vec![vertex_attach, edge_attach, face_attach, cube_attach],
    )
}

/// The free faces of a cubed complex (2-cells lying on exactly one cube),
/// glued along their shared edges and split into connected surfaces.
pub fn boundary_complex(c3: &QuotientComplex) -> Vec<SurfaceModel> {
    assert!(c3.dim >= 3, "boundary_complex expects a cubed complex");
    let mut uses = vec![0usize; c3.count(2)];
    for cube in &c3.attach[3] {
        for a in cube {
            uses[a.face] += 1;
        }
    }
    let free: Vec<usize> = (0..uses.len()).filter(|&f| uses[f] == 1).collect();

    // split into components first so that each surface carries only its own cells
    let mut uf = UnionFind::new(free.len());
    let mut first_face_of_edge = vec![usize::MAX; c3.count(1)];
    for (i, &f) in free.iter().enumerate() {
        for a in &c3.attach[2][f] {
            match first_face_of_edge[a.face] {
                usize::MAX => first_face_of_edge[a.face] = i,
                j => {
                    uf.union(i, j);
                }
            }
        }
    }
    let (comp_of, count) = uf.classes();

    (0..count)
        .map(|c| {
            let mut pc = PolygonComplex::default();
            let mut local = vec![usize::MAX; c3.count(1)];
            for (_, &f) in free.iter().enumerate().filter(|(i, _)| comp_of[*i] == c) {
                let sides = c3.attach[2][f]
                    .iter()
                    .map(|a| {
                        if local[a.face] == usize::MAX {
                            local[a.face] = pc.add_edge(c3.cells[1][a.face].label.clone());
                        }
                        PolygonSide {
                            edge: local[a.face],
                            forward: a.sign > 0,
                        }
                    })
                    .collect();
                let label = c3.cells[2][f].label.clone();
                let kind = if label.ends_with("@-1") {
                    FaceKind::Bottom
                } else {
                    FaceKind::Top
                };
                pc.add_face(kind, label, sides);
            }
            pc.analyze()
        })
        .collect()
}
