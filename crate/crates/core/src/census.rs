//! Exhaustive enumeration of corner pairings for small `n`.
//!
//! Raw pairings are indexed by their rank among the permutations of the
//! `2n` negative slots in lexicographic order, which makes every stage
//! data-parallel while keeping the output order fixed.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{boundary_complex, build_cubed_complex, build_squared_complex};
use crate::diagram::{component_count, reconstruct_diagram, spec_from_pd};
use crate::sbw::{canonical_form, criterion_check, isomorphic, CanonicalForm, SbwSpec};
use crate::surface::SurfaceModel;

pub const DEFAULT_ISO_CAP: usize = 4;
pub const DEFAULT_RAW_CAP: usize = 3;
/// Above this, `(2n)!` no longer fits comfortably in a census run.
pub const HARD_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("n must be at least 1")]
    Zero,
    #[error("n = {n} exceeds the cap of {cap} (pass an explicit override to go up to {HARD_CAP})")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub up_to_iso: usize,
    pub raw: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            up_to_iso: DEFAULT_ISO_CAP,
            raw: DEFAULT_RAW_CAP,
        }
    }
}

impl Caps {
    /// Lifts both caps to the hard limit.
    pub fn overridden() -> Self {
        Caps {
            up_to_iso: HARD_CAP,
            raw: HARD_CAP,
        }
    }

    fn check(&self, n: usize, up_to_iso: bool) -> Result<(), CensusError> {
        let cap = if up_to_iso { self.up_to_iso } else { self.raw }.min(HARD_CAP);
        match n {
            0 => Err(CensusError::Zero),
            n if n > cap => Err(CensusError::CapExceeded { n, cap }),
            _ => Ok(()),
        }
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// The `index`-th permutation of `0..len` in lexicographic order.
pub fn nth_permutation(len: usize, mut index: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..len).collect();
    let mut out = Vec::with_capacity(len);
    for remaining in (1..=len).rev() {
        let block = factorial(remaining - 1);
        out.push(pool.remove(index / block));
        index %= block;
    }
    out
}

fn raw_spec(n: usize, index: usize) -> SbwSpec {
    SbwSpec::from_targets(nth_permutation(2 * n, index)).expect("permutations are valid pairings")
}

/// Per isomorphism class: first raw index and class size.
fn classes(n: usize) -> Vec<(CanonicalForm, usize, usize)> {
    let total = factorial(2 * n);
    let merged = (0..total)
        .into_par_iter()
        .fold(
            HashMap::new,
            |mut acc: HashMap<CanonicalForm, (usize, usize)>, i| {
                let entry = acc.entry(canonical_form(&raw_spec(n, i))).or_insert((i, 0));
                entry.0 = entry.0.min(i);
                entry.1 += 1;
                acc
            },
        )
        .reduce(HashMap::new, |mut a, b| {
            for (k, (first, size)) in b {
                let entry = a.entry(k).or_insert((first, 0));
                entry.0 = entry.0.min(first);
                entry.1 += size;
            }
            a
        });
    let mut out: Vec<_> = merged
        .into_iter()
        .map(|(k, (first, size))| (k, first, size))
        .collect();
    out.sort_by_key(|&(_, first, _)| first);
    out
}

/// All `(2n)!` pairings in lexicographic order, or the first pairing of each
/// isomorphism class in that order.
pub fn enumerate(n: usize, up_to_iso: bool, caps: Caps) -> Result<Vec<SbwSpec>, CensusError> {
    caps.check(n, up_to_iso)?;
    let specs = if up_to_iso {
        classes(n)
            .into_iter()
            .map(|(_, first, _)| raw_spec(n, first))
            .collect()
    } else {
        (0..factorial(2 * n))
            .into_par_iter()
            .map(|i| raw_spec(n, i))
            .collect()
    };
    Ok(specs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    /// Pairing table of the class representative (negative slot per positive slot).
    pub representative: Vec<usize>,
    pub size: usize,
    pub orbits: usize,
    pub orbit_identity: bool,
    pub verdict: bool,
    pub euler_m: i64,
    pub genus: usize,
    pub connected: bool,
    pub surface_components: usize,
    /// Link components of the reconstructed diagram, for sphere classes.
    pub link_components: Option<usize>,
    /// Whether re-extraction from the reconstructed PD code gives an
    /// isomorphic pairing, for sphere classes.
    pub round_trip: Option<bool>,
    /// Cross-module identities that failed for this class.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub total_bijections: usize,
    pub isomorphism_classes: usize,
    pub verdict_yes_classes: usize,
    pub verdict_yes_bijections: usize,
    pub classes: Vec<CensusClass>,
}

impl CensusRow {
    pub fn all_consistent(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.failures.is_empty() && c.round_trip != Some(false))
    }
}

fn surface_failures(n: usize, orbits: usize, m: &SurfaceModel) -> Vec<String> {
    let mut failures = Vec::new();
    let expected = (4 * n, 6 * n, n + orbits);
    let found = (m.vertex_count(), m.edge_count(), m.face_count());
    if found != expected {
        failures.push(format!("surface cells {found:?} != {expected:?}"));
    }
    if !m.closed || !m.orientable {
        failures.push("surface not closed and orientable".into());
    }
    if m.euler != orbits as i64 - n as i64 {
        failures.push(format!("surface euler {} != orbits - n", m.euler));
    }
    failures
}

pub fn classify(spec: &SbwSpec, size: usize) -> CensusClass {
    let n = spec.n();
    let report = criterion_check(spec);
    let m = reconstruct_diagram(spec);
    let mut failures = surface_failures(n, report.orbits, &m.surface);
    if m.surface.components.len() != report.components.len() {
        failures.push("surface components differ from square components".into());
    }

    let c2 = build_squared_complex(spec);
    let c3 = build_cubed_complex(spec);
    if c2.euler != c3.euler {
        failures.push(format!(
            "euler(C2) = {} but euler(C3) = {}",
            c2.euler, c3.euler
        ));
    }

    let mut link_components = None;
    let mut round_trip = None;
    if let Some(pd) = &m.pd {
        let links = component_count(&m.diagram);
        link_components = Some(links);
        round_trip = Some(
            spec_from_pd(pd)
                .map(|back| isomorphic(&back, spec))
                .unwrap_or(false),
        );
        if c2.count(0) != 2 || c2.euler != 0 {
            failures.push(format!(
                "C2 has {} vertices and euler {}",
                c2.count(0),
                c2.euler
            ));
        }
        let boundary = boundary_complex(&c3);
        if boundary.len() != links
            || !boundary
                .iter()
                .all(|s| s.closed && s.orientable && s.euler == 0)
        {
            failures.push("boundary is not one torus per link component".into());
        }
    }

    CensusClass {
        representative: spec.targets().to_vec(),
        size,
        orbits: report.orbits,
        orbit_identity: report.orbit_identity,
        verdict: report.verdict,
        euler_m: report.euler_m,
        genus: report.genus,
        connected: report.connected,
        surface_components: m.surface.components.len(),
        link_components,
        round_trip,
        failures,
    }
}

pub fn census_report(n: usize, caps: Caps) -> Result<CensusRow, CensusError> {
    caps.check(n, true)?;
    let classes: Vec<CensusClass> = classes(n)
        .into_par_iter()
        .map(|(_, first, size)| classify(&raw_spec(n, first), size))
        .collect();
    let yes: Vec<_> = classes.iter().filter(|c| c.verdict).collect();
    Ok(CensusRow {
        n,
        total_bijections: factorial(2 * n),
        isomorphism_classes: classes.len(),
        verdict_yes_classes: yes.len(),
        verdict_yes_bijections: yes.iter().map(|c| c.size).sum(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_in_lexicographic_order() {
        let all: Vec<_> = (0..24).map(|i| nth_permutation(4, i)).collect();
        assert_eq!(all[0], vec![0, 1, 2, 3]);
        assert_eq!(all[23], vec![3, 2, 1, 0]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn caps() {
        assert_eq!(enumerate(0, true, Caps::default()), Err(CensusError::Zero));
        assert_eq!(
            enumerate(4, false, Caps::default()),
            Err(CensusError::CapExceeded { n: 4, cap: 3 })
        );
        assert!(census_report(6, Caps::overridden()).is_err());
        assert_eq!(enumerate(2, false, Caps::default()).unwrap().len(), 24);
    }

    #[test]
    fn one_square_row() {
        let row = census_report(1, Caps::default()).unwrap();
        assert_eq!(row.total_bijections, 2);
        assert_eq!(row.isomorphism_classes, 2);
        assert!(row
            .classes
            .iter()
            .all(|c| c.verdict && c.genus == 0 && c.round_trip == Some(true)));
        assert!(row.all_consistent());
    }
}
