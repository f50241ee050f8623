//! Alternating diagrams with known invariants.

mod common;

use std::collections::HashMap;

use sbwcube::complex::{
    boundary_complex, build_cubed_complex, build_squared_complex, fundamental_group_presentation,
};
use sbwcube::diagram::{
    checkerboard_coloring, component_count, reconstruct_diagram, spec_from_pd, trace_faces,
    ColoredDiagram, PdCode,
};
use sbwcube::homology::first_homology;
use sbwcube::{criterion_check, induced_edge_bijection, isomorphic, orbit_decomposition, Color};

/// (name, link components, determinant)
const EXPECTED: &[(&str, usize, i128)] = &[
    ("3_1", 1, 3),
    ("4_1", 1, 5),
    ("5_1", 1, 5),
    ("5_2", 1, 7),
    ("6_1", 1, 9),
    ("6_2", 1, 11),
    ("6_3", 1, 13),
    ("7_1", 1, 7),
    ("7_4", 1, 15),
    ("8_1", 1, 13),
    ("8_12", 1, 29),
    ("8_18", 1, 45),
    ("L4a1", 2, 4),
    ("L6a4", 3, 16),
    ("curl", 1, 1),
    ("hopf", 2, 2),
];

fn colored(pd: &PdCode) -> ColoredDiagram {
    checkerboard_coloring(trace_faces(pd).unwrap()).unwrap()
}

fn abs_det(mut m: Vec<Vec<i128>>) -> i128 {
    // fraction-free elimination
    let k = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for i in 0..k {
        let Some(p) = (i..k).find(|&r| m[r][i] != 0) else {
            return 0;
        };
        if p != i {
            m.swap(p, i);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
            }
            m[r][i] = 0;
        }
        prev = m[i][i];
    }
    if k == 0 {
        1
    } else {
        (sign * m[k - 1][k - 1]).abs()
    }
}

fn reduced(m: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    m.into_iter()
        .skip(1)
        .map(|row| row.into_iter().skip(1).collect())
        .collect()
}

/// Determinant from Fox colourings, read straight off the PD records.
fn fox_determinant(pd: &PdCode) -> i128 {
    let mut arc: HashMap<u32, usize> = HashMap::new();
    // over-strand labels b and d name the same arc
    let mut next = 0;
    let mut parent: Vec<usize> = Vec::new();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for x in &pd.crossings {
        for &l in x {
            arc.entry(l).or_insert_with(|| {
                parent.push(next);
                next += 1;
                next - 1
            });
        }
    }
    for &[_, b, _, d] in &pd.crossings {
        let (rb, rd) = (root(&mut parent, arc[&b]), root(&mut parent, arc[&d]));
        parent[rb] = rd;
    }
    let mut index: HashMap<usize, usize> = HashMap::new();
    for i in 0..parent.len() {
        let r = root(&mut parent, i);
        let len = index.len();
        index.entry(r).or_insert(len);
    }
    let cls = |l: u32, p: &mut [usize]| index[&root(p, arc[&l])];
    let mut m = vec![vec![0i128; index.len()]; pd.len()];
    for (k, &[a, b, c, _]) in pd.crossings.iter().enumerate() {
        m[k][cls(b, &mut parent)] += 2;
        m[k][cls(a, &mut parent)] -= 1;
        m[k][cls(c, &mut parent)] -= 1;
    }
    abs_det(reduced(m))
}

/// Spanning trees of the black Tait graph, built from the traced faces.
fn tait_spanning_trees(d: &ColoredDiagram) -> i128 {
    let mut black_index = HashMap::new();
    let mut face_of_corner = vec![0; 4 * d.model.crossings];
    for (f, face) in d.model.faces.iter().enumerate() {
        if d.face_colors[f] == Color::Black {
            let len = black_index.len();
            black_index.insert(f, len);
        }
        for &g in face {
            face_of_corner[g] = f;
        }
    }
    let v = black_index.len();
    let mut lap = vec![vec![0i128; v]; v];
    for k in 0..d.model.crossings {
        let a = black_index[&face_of_corner[4 * k + 1]];
        let b = black_index[&face_of_corner[4 * k + 3]];
        if a != b {
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
    }
    abs_det(reduced(lap))
}

#[test]
fn corpus_has_expected_entries() {
    let names: Vec<String> = common::corpus().into_iter().map(|(n, _)| n).collect();
    let expected: Vec<&str> = EXPECTED.iter().map(|e| e.0).collect();
    assert_eq!(names, expected);
}

#[test]
fn corpus_diagrams_are_the_named_links() {
    for ((name, pd), &(_, links, det)) in common::corpus().iter().zip(EXPECTED) {
        let d = colored(pd);
        assert_eq!(component_count(&d.model), links, "{name}");
        assert_eq!(
            fox_determinant(pd),
            det,
            "{name}: Fox colouring determinant"
        );
        assert_eq!(
            tait_spanning_trees(&d),
            det,
            "{name}: Tait graph spanning trees"
        );
    }
}

#[test]
fn corpus_satisfies_criterion() {
    for (name, pd) in common::corpus() {
        let spec = spec_from_pd(&pd).unwrap();
        let report = criterion_check(&spec);
        assert_eq!(spec.n(), pd.len(), "{name}");
        assert_eq!(report.orbits, pd.len() + 2, "{name}");
        assert!(report.verdict && report.connected, "{name}");
        let mirror = spec_from_pd(&pd.mirror()).unwrap();
        assert!(criterion_check(&mirror).verdict, "{name} mirror");
    }
}

#[test]
fn orbit_sizes_match_region_degrees() {
    for (name, pd) in common::corpus() {
        let d = colored(&pd);
        let orbits = orbit_decomposition(&induced_edge_bijection(&spec_from_pd(&pd).unwrap()));
        for color in [Color::Black, Color::White] {
            assert_eq!(orbits.sizes(color), d.face_degrees(color), "{name} {color}");
        }
    }
}

#[test]
fn first_homology_counts_components() {
    for ((name, pd), &(_, links, _)) in common::corpus().iter().zip(EXPECTED) {
        let spec = spec_from_pd(pd).unwrap();
        for complex in [build_squared_complex(&spec), build_cubed_complex(&spec)] {
            let h1 = first_homology(&fundamental_group_presentation(&complex).unwrap());
            assert_eq!(
                (h1.rank, h1.torsion.len()),
                (links, 0),
                "{name} dim {}",
                complex.dim
            );
        }
    }
}

#[test]
fn trefoil_squared_complex() {
    let trefoil = common::corpus()
        .into_iter()
        .find(|(n, _)| n == "3_1")
        .unwrap()
        .1;
    let c2 = build_squared_complex(&spec_from_pd(&trefoil).unwrap());
    assert_eq!(c2.counts, vec![2, 5, 3]);
    assert_eq!(c2.euler, 0);
    let p = fundamental_group_presentation(&c2).unwrap();
    assert_eq!((p.generators, p.relators.len()), (4, 3));
    assert!(p.is_valid());
    assert_eq!(first_homology(&p).to_string(), "Z");
}

#[test]
fn boundary_tori_per_component() {
    for ((name, pd), &(_, links, _)) in common::corpus().iter().zip(EXPECTED) {
        let c3 = build_cubed_complex(&spec_from_pd(pd).unwrap());
        let boundary = boundary_complex(&c3);
        assert_eq!(boundary.len(), links, "{name}");
        for s in &boundary {
            assert!(s.closed && s.orientable && s.euler == 0, "{name}");
        }
    }
}

#[test]
fn reconstruction_round_trip() {
    for (name, pd) in common::corpus() {
        let spec = spec_from_pd(&pd).unwrap();
        let r = reconstruct_diagram(&spec);
        assert!(r.surface.is_sphere(), "{name}");
        let back = r.pd_code().unwrap();
        assert_eq!(back.len(), pd.len());
        assert!(isomorphic(&spec_from_pd(back).unwrap(), &spec), "{name}");
        assert_eq!(fox_determinant(back), fox_determinant(&pd), "{name}");
    }
}
