#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use sbwcube::diagram::{parse_pd, PdCode};
use sbwcube::{Isomorphism, SbwSpec};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/pd")
}

/// `(name, code)` for every file in the PD corpus, sorted by name.
pub fn corpus() -> Vec<(String, PdCode)> {
    let mut out: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|entry| entry.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "pd"))
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let code = parse_pd(&std::fs::read_to_string(&p).unwrap()).unwrap();
            (name, code)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Every spec with `n` squares.
pub fn all_specs(n: usize) -> Vec<SbwSpec> {
    sbwcube::census::enumerate(n, false, sbwcube::census::Caps::default()).unwrap()
}

pub fn spec_strategy(max_n: usize) -> impl Strategy<Value = SbwSpec> {
    (1..=max_n)
        .prop_flat_map(|n| Just((0..2 * n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|t| SbwSpec::from_targets(t).unwrap())
}

pub fn iso_strategy(n: usize) -> impl Strategy<Value = Isomorphism> {
    (
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(perm, rotate)| Isomorphism { perm, rotate })
}

pub fn spec_with_iso(max_n: usize) -> impl Strategy<Value = (SbwSpec, Isomorphism)> {
    spec_strategy(max_n).prop_flat_map(|s| {
        let n = s.n();
        (Just(s), iso_strategy(n))
    })
}
