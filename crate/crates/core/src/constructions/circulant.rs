use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::{RegularGraph, SimpleGraph};

use super::certified;

/// Connected `k`-regular graph on `b` vertices.
///
/// Vertex `i` is joined to `j` when their cyclic distance is at most
/// `floor(k/2)`; for odd `k` each vertex is also joined to its antipode
/// `i + b/2`.
pub fn circulant_regular(k: usize, b: usize) -> Result<RegularGraph> {
    if k < 2 {
        return Err(Error::InfeasibleParameters(format!(
            "degree {k} is below 2"
        )));
    }
    if b < k + 1 {
        return Err(Error::InfeasibleParameters(format!(
            "{b} vertices cannot carry a {k}-regular graph (need at least {})",
            k + 1
        )));
    }
    if k % 2 == 1 && b % 2 == 1 {
        return Err(Error::InfeasibleParameters(format!(
            "odd degree {k} needs an even vertex count, got {b}"
        )));
    }
    let mut g = SimpleGraph::new(b);
    let half = k / 2;
    for i in 0..b {
        for t in 1..=half {
            g.add_edge(i, (i + t) % b);
        }
    }
    if k % 2 == 1 {
        for i in 0..b / 2 {
            g.add_edge(i, i + b / 2);
        }
    }
    RegularGraph::new(g)
}

/// The `(|E|, |V|, 2, k)`-configuration of a connected `k`-regular graph:
/// points are edges, lines are vertices.
///
/// Points follow the sorted edge list, so the output is deterministic.
pub fn subdivision_configuration(g: &SimpleGraph) -> Result<Configuration> {
    let g = RegularGraph::new(g.clone())?;
    let edges = g.graph().edges();
    let mut inc = Vec::with_capacity(2 * edges.len());
    for (p, &(a, b)) in edges.iter().enumerate() {
        inc.push((p, a));
        inc.push((p, b));
    }
    certified(Configuration::new(
        edges.len(),
        g.vertex_count(),
        2,
        g.degree(),
        inc,
    ))
}

/// Inverse of [`subdivision_configuration`]: each point of an `r = 2`
/// configuration becomes the edge between its two lines.
pub fn collapse_subdivision(config: &Configuration) -> Result<SimpleGraph> {
    if config.r() != 2 {
        return Err(Error::InfeasibleParameters(format!(
            "collapsing needs r = 2, got r = {}",
            config.r()
        )));
    }
    let edges: Vec<(usize, usize)> = config
        .lines_of_points()
        .into_iter()
        .map(|ls| match ls[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::NotRegular(format!("a point lies on {} lines", ls.len()))),
        })
        .collect::<Result<_>>()?;
    SimpleGraph::from_edges(config.b(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::tuple_of;

    /// The adjacency rule evaluated pair by pair on 1-based labels.
    fn rule(k: usize, b: usize, i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        let half = if k.is_multiple_of(2) { k / 2 } else { (k - 1) / 2 };
        let near = j - i <= half || i + b - j <= half;
        let antipodal = k % 2 == 1 && j == i + b / 2;
        near || antipodal
    }

    #[test]
    fn matches_the_pairwise_rule() {
        for k in 2..9 {
            for b in k + 1..24 {
                let Ok(g) = circulant_regular(k, b) else {
                    assert!(k % 2 == 1 && b % 2 == 1);
                    continue;
                };
                for i in 1..=b {
                    for j in i + 1..=b {
                        assert_eq!(g.graph().has_edge(i - 1, j - 1), rule(k, b, i, j), "k={k} b={b} {i}-{j}");
                    }
                }
                assert_eq!(g.edge_count(), k * b / 2);
                assert_eq!(g.degree(), k);
            }
        }
    }

    #[test]
    fn examples() {
        let g = circulant_regular(4, 10).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert!(g.graph().is_connected());

        let tri = circulant_regular(2, 3).unwrap();
        assert_eq!(tri.graph().edges(), vec![(0, 1), (0, 2), (1, 2)]);

        assert!(matches!(circulant_regular(3, 5), Err(Error::InfeasibleParameters(_))));
        assert!(matches!(circulant_regular(4, 4), Err(Error::InfeasibleParameters(_))));
    }

    #[test]
    fn subdivision_examples() {
        let k4 = subdivision_configuration(&SimpleGraph::complete(4)).unwrap();
        assert_eq!((k4.v(), k4.b(), k4.r(), k4.k()), (6, 4, 2, 3));

        let c = subdivision_configuration(circulant_regular(4, 10).unwrap().graph()).unwrap();
        let t = tuple_of(&c);
        assert_eq!((t.v, t.b, t.r, t.k, t.d), (20, 10, 2, 4, 10));

        let hex = subdivision_configuration(&SimpleGraph::cycle(6)).unwrap();
        assert_eq!((hex.v(), hex.b(), hex.r(), hex.k()), (6, 6, 2, 2));
    }

    #[test]
    fn subdivision_rejects_bad_graphs() {
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(subdivision_configuration(&path), Err(Error::NotRegular(_))));
        let two = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(subdivision_configuration(&two), Err(Error::NotConnected)));
    }

    #[test]
    fn collapse_round_trip() {
        for k in 2..6 {
            for b in k + 1..12 {
                if let Ok(g) = circulant_regular(k, b) {
                    let c = subdivision_configuration(g.graph()).unwrap();
                    let back = collapse_subdivision(&c).unwrap();
                    assert_eq!(back.edges(), g.graph().edges());
                }
            }
        }
    }
}
