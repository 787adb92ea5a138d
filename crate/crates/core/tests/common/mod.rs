//! Shared corpus for the integration tests.

#![allow(dead_code)]

use configurable::constructions::{
    circulant_regular, minimal_nontrivial, sm_plus_one, subdivision_configuration, ScaffoldOptions,
};
use configurable::{decide, find_anchors, Configuration, SearchProblem};

/// Oracle witness for scale factor `d`.
pub fn oracle(d: usize, r: usize, k: usize) -> Configuration {
    decide(&SearchProblem::for_scale(d, r, k))
        .witness
        .unwrap_or_else(|| panic!("no witness for d={d}, (r,k)=({r},{k})"))
}

pub fn fano() -> Configuration {
    decide(&SearchProblem::new(7, 7, 3, 3)).witness.expect("Fano")
}

/// Subdivided circulant with `b` vertices of degree `k`.
pub fn subdivided(k: usize, b: usize) -> Configuration {
    subdivision_configuration(circulant_regular(k, b).unwrap().graph()).unwrap()
}

pub fn lifted(base: &Configuration) -> Configuration {
    sm_plus_one(&find_anchors(base).unwrap()).unwrap()
}

/// Verified configurations from every source, grouped by nothing in
/// particular.
pub fn corpus() -> Vec<Configuration> {
    let mut out = Vec::new();
    for d in 7..=12 {
        out.push(oracle(d, 3, 3));
    }
    out.push(oracle(3, 3, 4));
    out.push(oracle(4, 3, 4));
    out.push(oracle(13, 4, 4));
    for (k, b) in [(2, 5), (3, 4), (3, 6), (4, 5), (4, 10), (5, 8), (6, 9)] {
        out.push(subdivided(k, b));
    }
    out.push(lifted(&fano()));
    out.push(minimal_nontrivial(3, 3, &ScaffoldOptions::default()).unwrap());
    out.push(minimal_nontrivial(3, 4, &ScaffoldOptions::default()).unwrap());
    out
}

/// Independent check of the partial-linear-space condition: every pair of
/// points shares at most one line.
pub fn pairs_share_at_most_one_line(c: &Configuration) -> bool {
    let mut lines_of = vec![Vec::new(); c.v()];
    for &(p, l) in c.incidences() {
        if p < c.v() {
            lines_of[p].push(l);
        }
    }
    for a in 0..c.v() {
        for b in a + 1..c.v() {
            let shared = lines_of[a].iter().filter(|l| lines_of[b].contains(l)).count();
            if shared > 1 {
                return false;
            }
        }
    }
    true
}
