//! Independent reimplementations checked against the library.

mod common;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sbwcube::complex::{build_cubed_complex, build_squared_complex};
use sbwcube::homology::smith_diagonal;
use sbwcube::{
    canonical_form, find_isomorphism, induced_edge_bijection, isomorphic, orbit_decomposition,
    Corner, CornerRef, EdgeRef, SbwSpec,
};

fn xy(c: Corner) -> (i32, i32) {
    match c {
        Corner::SW => (0, 0),
        Corner::SE => (2, 0),
        Corner::NE => (2, 2),
        Corner::NW => (0, 2),
    }
}

/// A point of a cube in doubled coordinates: `x, y` in `0..=2`, `t` in
/// `-2..=2`. Barycentres of cells have odd coordinates along their
/// directions.
type Point = (usize, i32, i32, i32);

/// Cell counts of the cubed complex computed from coordinates: every side
/// face point `(p, t)` with `t <= 0` over edge `e` is identified with
/// `(f(p), -t)` over `psi(e)`, `f` the orientation-preserving affine map.
fn coordinate_counts(spec: &SbwSpec, max_level: i32) -> Vec<usize> {
    let psi = induced_edge_bijection(spec);
    let mut points: Vec<Point> = Vec::new();
    for sq in 1..=spec.n() {
        for x in 0..=2 {
            for y in 0..=2 {
                for t in -max_level..=max_level {
                    points.push((sq, x, y, t));
                }
            }
        }
    }
    let index: HashMap<Point, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let at = |e: EdgeRef, u: i32| {
        let (a, b) = (xy(e.initial().corner), xy(e.terminal().corner));
        (a.0 + (b.0 - a.0) * u / 2, a.1 + (b.1 - a.1) * u / 2)
    };
    for e in spec.edges() {
        let f = psi.apply(e);
        for u in 0..=2 {
            for t in -max_level..=0 {
                let (x, y) = at(e, u);
                let (fx, fy) = at(f, u);
                let a = index[&(e.square, x, y, t)];
                let b = index[&(f.square, fx, fy, -t)];
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut classes: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); 4];
    for (i, &(_, x, y, t)) in points.iter().enumerate() {
        let dim = [x, y, t].iter().filter(|&&c| c.rem_euclid(2) == 1).count();
        classes[dim].insert(root(&mut parent, i));
    }
    let mut counts: Vec<usize> = classes.iter().map(BTreeSet::len).collect();
    if max_level == 0 {
        counts.truncate(3);
    }
    counts
}

fn brute_force_cycles(spec: &SbwSpec) -> Vec<Vec<usize>> {
    let psi = induced_edge_bijection(spec);
    let mut cycles = Vec::new();
    let mut seen = BTreeSet::new();
    for start in spec.edges() {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        let mut k = 1;
        // apply psi k times until it returns
        loop {
            let mut e = start;
            for _ in 0..k {
                e = psi.apply(e);
            }
            if e == start {
                break;
            }
            cycle.push(e);
            k += 1;
        }
        seen.extend(cycle.iter().copied());
        let mut ids: Vec<usize> = cycle.iter().map(|e| e.id()).collect();
        ids.sort_unstable();
        cycles.push(ids);
    }
    cycles.sort();
    cycles
}

fn all_isomorphisms(n: usize) -> Vec<sbwcube::Isomorphism> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n);
                out.push(q);
            }
        }
        out
    }
    let mut out = Vec::new();
    for perm in perms(n) {
        for mask in 0..1usize << n {
            let rotate = (0..n).map(|i| mask >> i & 1 == 1).collect();
            out.push(sbwcube::Isomorphism {
                perm: perm.clone(),
                rotate,
            });
        }
    }
    out
}

#[test]
fn cubed_complex_matches_coordinate_model() {
    for n in 1..=3 {
        for spec in common::all_specs(n) {
            assert_eq!(
                build_cubed_complex(&spec).counts,
                coordinate_counts(&spec, 2),
                "{spec}"
            );
            assert_eq!(
                build_squared_complex(&spec).counts,
                coordinate_counts(&spec, 0),
                "{spec}"
            );
        }
    }
}

#[test]
fn orbits_match_brute_force_cycles() {
    for n in 1..=2 {
        for spec in common::all_specs(n) {
            let decomposition = orbit_decomposition(&induced_edge_bijection(&spec));
            let mut ours: Vec<Vec<usize>> = decomposition
                .iter()
                .map(|(_, orbit)| {
                    let mut ids: Vec<usize> = orbit.iter().map(|e| e.id()).collect();
                    ids.sort_unstable();
                    ids
                })
                .collect();
            ours.sort();
            assert_eq!(ours, brute_force_cycles(&spec), "{spec}");
        }
    }
}

#[test]
fn canonical_dedup_matches_explicit_search() {
    for n in 1..=2 {
        let specs = common::all_specs(n);
        let isos = all_isomorphisms(n);
        for a in &specs {
            for b in &specs {
                let by_search = isos.iter().any(|iso| a.transform(iso) == *b);
                assert_eq!(
                    canonical_form(a) == canonical_form(b),
                    by_search,
                    "{a} vs {b}"
                );
                assert_eq!(isomorphic(a, b), by_search);
                if let Some(iso) = find_isomorphism(a, b) {
                    assert_eq!(a.transform(&iso), *b);
                }
            }
        }
    }
}

/// Invariant factors as quotients of gcds of `k x k` minors.
fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<BigInt> {
    fn det(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.is_empty() {
            return BigInt::from(1);
        }
        let mut total = BigInt::zero();
        for (j, &c) in cols.iter().enumerate() {
            let entry = m[rows[0]][c];
            if entry == 0 {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = BigInt::from(entry) * det(m, &rows[1..], &rest);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0..1usize << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut d = vec![BigInt::from(1)];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                g = g.gcd(&det(m, &rows, &cols));
            }
        }
        if g.is_zero() {
            break;
        }
        d.push(g);
    }
    d.windows(2).map(|w| &w[1] / &w[0]).collect()
}

proptest! {
    #[test]
    fn smith_matches_determinantal_divisors(
        m in (1..=4usize, 1..=4usize).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
        })
    ) {
        let big: Vec<Vec<BigInt>> = m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let ours: Vec<BigInt> = smith_diagonal(big).into_iter().map(|d| d.abs()).collect();
        prop_assert_eq!(ours, determinantal_divisors(&m));
    }

    #[test]
    fn cubed_complex_matches_coordinate_model_at_random(spec in common::spec_strategy(6)) {
        prop_assert_eq!(build_cubed_complex(&spec).counts, coordinate_counts(&spec, 2));
    }
}

#[test]
fn coordinate_model_sanity() {
    // one square with phi(SE) = SW, phi(NW) = NE
    let phi1 = SbwSpec::new(
        1,
        [
            (CornerRef::new(1, Corner::SE), CornerRef::new(1, Corner::SW)),
            (CornerRef::new(1, Corner::NW), CornerRef::new(1, Corner::NE)),
        ],
    )
    .unwrap();
    assert_eq!(
        coordinate_counts(&phi1, 0),
        build_squared_complex(&phi1).counts
    );
}
