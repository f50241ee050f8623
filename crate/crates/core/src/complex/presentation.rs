use std::collections::VecDeque;

use thiserror::Error;

use super::QuotientComplex;
use crate::homology::GroupPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex is disconnected ({components} components); no single fundamental group")]
    Disconnected { components: usize },
    #[error("complex has no vertices")]
    Empty,
}

/// Presentation of the fundamental group of the 2-skeleton.
///
/// The spanning tree is grown breadth-first from vertex class 0, scanning
/// incident edges in class order. Generators are the remaining edge classes
/// in class order; each 2-cell contributes its boundary word with tree edges
/// dropped.
pub fn fundamental_group_presentation(
    c: &QuotientComplex,
) -> Result<GroupPresentation, ComplexError> {
    let vertices = c.count(0);
    if vertices == 0 {
        return Err(ComplexError::Empty);
    }
    let edges = c.count(1);
    let mut incident = vec![Vec::new(); vertices];
    for e in 0..edges {
        let (tail, head) = c.endpoints(e);
        incident[tail].push(e);
        if head != tail {
            incident[head].push(e);
        }
    }

    let mut reached = vec![false; vertices];
    let mut in_tree = vec![false; edges];
    let mut queue = VecDeque::from([0]);
    reached[0] = true;
    while let Some(v) = queue.pop_front() {
        for &e in &incident[v] {
            let (tail, head) = c.endpoints(e);
            let other = if tail == v { head } else { tail };
            if !reached[other] {
                reached[other] = true;
                in_tree[e] = true;
                queue.push_back(other);
            }
        }
    }
    let unreached = reached.iter().filter(|r| !**r).count();
    if unreached > 0 {
        // count components for the diagnostic
        let mut uf = crate::union_find::UnionFind::new(vertices);
        for e in 0..edges {
            let (t, h) = c.endpoints(e);
            uf.union(t, h);
        }
        return Err(ComplexError::Disconnected {
            components: uf.classes().1,
        });
    }

    let mut generator = vec![0i64; edges];
    let mut next = 0;
    for e in 0..edges {
        if !in_tree[e] {
            next += 1;
            generator[e] = next;
        }
    }
    let relators = c
        .attach
        .get(2)
        .map(|faces| {
            faces
                .iter()
                .map(|word| {
                    word.iter()
                        .filter(|a| !in_tree[a.face])
                        .map(|a| generator[a.face] * i64::from(a.sign))
                        .collect()
                })
                .collect()
        })
        .unwrap_or_default();
    Ok(GroupPresentation {
        generators: next as usize,
        relators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_squared_complex;
    use crate::homology::first_homology;
    use crate::sbw::SbwSpec;

    #[test]
    fn single_square_presentation() {
        let c2 = build_squared_complex(&SbwSpec::from_targets(vec![0, 1]).unwrap());
        let p = fundamental_group_presentation(&c2).unwrap();
        assert_eq!(p.generators, 2);
        assert_eq!(p.relators.len(), 1);
        assert!(p.is_valid());
    }

    #[test]
    fn disconnected_is_an_error() {
        let a = SbwSpec::from_targets(vec![0, 1]).unwrap();
        let c2 = build_squared_complex(&a.disjoint_union(&a));
        assert_eq!(
            fundamental_group_presentation(&c2),
            Err(ComplexError::Disconnected { components: 2 })
        );
    }

    #[test]
    fn hopf_homology() {
        let c2 = build_squared_complex(&SbwSpec::from_targets(vec![2, 3, 0, 1]).unwrap());
        let h = first_homology(&fundamental_group_presentation(&c2).unwrap());
        assert_eq!((h.rank, h.torsion.len()), (2, 0));
    }
}
