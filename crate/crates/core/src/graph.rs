//! Simple undirected graphs, girth, and the regular-graph wrapper used by the
//! constructions.

use std::collections::{HashSet, VecDeque};

use crate::config::Configuration;
use crate::error::{Error, Result};

/// Undirected graph on vertices `0..n` without loops. Parallel edges are
/// rejected by [`SimpleGraph::add_edge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Format(format!("edge ({a},{b}) out of range for {n} vertices")));
            }
            if a == b || !g.add_edge(a, b) {
                return Err(Error::NotRegular(format!("edge ({a},{b}) is a loop or repeated")));
            }
        }
        Ok(g)
    }

    /// The cycle `C_n`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).expect("cycle is simple for n >= 3")
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Returns `false` (and does nothing) for loops and existing edges.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        if a == b || self.has_edge(a, b) {
            return false;
        }
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.edge_count += 1;
        true
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        let Some(i) = self.adj[a].iter().position(|&x| x == b) else {
            return false;
        };
        self.adj[a].swap_remove(i);
        let j = self.adj[b].iter().position(|&x| x == a).expect("symmetric");
        self.adj[b].swap_remove(j);
        self.edge_count -= 1;
        true
    }

    /// Edges `(a,b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out.sort_unstable();
        out
    }

    /// Component id per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.adj.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.adj.len();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut touched = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist[s] = 0;
            touched.push(s);
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                // Any cycle found from here on is at least 2*dist[u]+1 long.
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            for &t in &touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            if best == 3 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Distance from `a` to `b` if it is at most `limit`, ignoring the edge
    /// `{a,b}` itself when present.
    pub fn distance_avoiding_edge(&self, a: usize, b: usize, limit: usize) -> Option<usize> {
        if a == b {
            return Some(0);
        }
        let mut seen = HashSet::from([a]);
        let mut frontier = vec![a];
        for depth in 1..=limit {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if u == a && w == b {
                        continue;
                    }
                    if w == b {
                        return Some(depth);
                    }
                    if seen.insert(w) {
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        None
    }

    /// Vertices within distance `radius` of `s` (including `s`), as a mask.
    pub fn ball(&self, s: usize, radius: usize, mask: &mut Vec<bool>) {
        mask.clear();
        mask.resize(self.adj.len(), false);
        mask[s] = true;
        let mut frontier = vec![s];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !mask[w] {
                        mask[w] = true;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
    }
}

/// A connected simple graph in which every vertex has the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularGraph {
    graph: SimpleGraph,
    degree: usize,
}

impl RegularGraph {
    pub fn new(graph: SimpleGraph) -> Result<Self> {
        let degree = if graph.vertex_count() == 0 {
            0
        } else {
            graph.degree(0)
        };
        if let Some(u) = (0..graph.vertex_count()).find(|&u| graph.degree(u) != degree) {
            return Err(Error::NotRegular(format!(
                "vertex {u} has degree {} but vertex 0 has degree {degree}",
                graph.degree(u)
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(RegularGraph { graph, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    pub fn girth(&self) -> Option<usize> {
        self.graph.girth()
    }
}

/// Girth of the incidence graph of a configuration.
pub fn configuration_girth(config: &Configuration) -> Option<usize> {
    config.incidence_graph().girth()
}
