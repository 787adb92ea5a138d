//! Nontrivial `(r,k)` configurations from copies of `K_{r,k}` glued along a
//! girth-5 scaffold.
//!
//! Each copy keeps a spanning double star: point 0 on every line and line 0
//! through every point. The remaining `(r-1)(k-1)` incidences form the grid
//! `A = {(i,j) : i >= 1, j >= 1}`. Every scaffold edge `{u,w}` consumes one
//! `A`-incidence from each copy and replaces the pair by the two crossing
//! incidences.

use serde::Serialize;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::RegularGraph;

use super::{certified, regular_graph_with_girth, ScaffoldOptions};

/// One swap: scaffold edge `{u,w}` with `u < w` uses incidence
/// `(i,j)` of copy `u` and `(i2,j2)` of copy `w`, producing
/// `(x_i of u, y_j2 of w)` and `(x_i2 of w, y_j of u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SwapRecord {
    pub scaffold_edge: (usize, usize),
    pub from_u: (usize, usize),
    pub from_w: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct SurgeryPlan {
    pub config: Configuration,
    pub swaps: Vec<SwapRecord>,
}

/// Lexicographic list of the non-tree incidences of one `K_{r,k}` copy,
/// with `k` points and `r` lines.
fn grid(r: usize, k: usize) -> Vec<(usize, usize)> {
    (1..k).flat_map(|i| (1..r).map(move |j| (i, j))).collect()
}

/// Runs the gluing over a given scaffold, whose degree must be
/// `(r-1)(k-1)`.
pub fn surgery_on_scaffold(r: usize, k: usize, scaffold: &RegularGraph) -> Result<SurgeryPlan> {
    if r < 3 || k < 3 {
        return Err(Error::InfeasibleParameters(format!(
            "surgery needs r, k >= 3, got r={r}, k={k}"
        )));
    }
    let a = grid(r, k);
    if scaffold.degree() != a.len() {
        return Err(Error::InfeasibleParameters(format!(
            "scaffold degree {} differs from (r-1)(k-1) = {}",
            scaffold.degree(),
            a.len()
        )));
    }
    let copies = scaffold.vertex_count();
    let point = |copy: usize, i: usize| copy * k + i;
    let line = |copy: usize, j: usize| copy * r + j;

    let mut inc = Vec::with_capacity(copies * r * k);
    for c in 0..copies {
        for j in 0..r {
            inc.push((point(c, 0), line(c, j)));
        }
        for i in 1..k {
            inc.push((point(c, i), line(c, 0)));
        }
    }

    // slot_of[u][t]: A-incidence consumed by the t-th neighbor of u in
    // ascending order.
    let g = scaffold.graph();
    let sorted_neighbors: Vec<Vec<usize>> = (0..copies)
        .map(|u| {
            let mut ns = g.neighbors(u).to_vec();
            ns.sort_unstable();
            ns
        })
        .collect();
    let rank = |u: usize, w: usize| {
        sorted_neighbors[u]
            .binary_search(&w)
            .expect("w is a neighbor of u")
    };

    let mut swaps = Vec::with_capacity(g.edge_count());
    for (u, w) in g.edges() {
        let (i, j) = a[rank(u, w)];
        let (i2, j2) = a[rank(w, u)];
        inc.push((point(u, i), line(w, j2)));
        inc.push((point(w, i2), line(u, j)));
        swaps.push(SwapRecord {
            scaffold_edge: (u, w),
            from_u: (i, j),
            from_w: (i2, j2),
        });
    }

    let config = Configuration::new(copies * k, copies * r, r, k, inc);
    Ok(SurgeryPlan {
        config: certified(config)?,
        swaps,
    })
}

/// A verified `(r,k)` configuration for any `r, k >= 3`, built on a scaffold
/// of degree `rk - r - k + 1` and girth at least 5.
pub fn minimal_nontrivial(r: usize, k: usize, opts: &ScaffoldOptions) -> Result<Configuration> {
    if r < 3 || k < 3 {
        return Err(Error::InfeasibleParameters(format!(
            "surgery needs r, k >= 3, got r={r}, k={k}; use the r = 2 route"
        )));
    }
    let opts = ScaffoldOptions {
        girth: opts.girth.max(5),
        ..*opts
    };
    let scaffold = regular_graph_with_girth((r - 1) * (k - 1), &opts)?;
    Ok(surgery_on_scaffold(r, k, &scaffold)?.config)
}
