//! The configuration data model.
//!
//! A configuration is stored as a bipartite incidence structure between
//! points `0..v` and lines `0..b`. Indices are dense and 0-based in memory;
//! the JSON and DOT encodings use 1-based labels `x_i` / `y_j`.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An incidence between point `.0` and line `.1`.
pub type Incidence = (usize, usize);

/// A candidate `(v,b,r,k)`-configuration.
///
/// Construction does not validate anything beyond sorting the incidence
/// list; use [`crate::verify`] to certify it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    v: usize,
    b: usize,
    r: usize,
    k: usize,
    incidences: Vec<Incidence>,
}

impl Configuration {
    pub fn new(v: usize, b: usize, r: usize, k: usize, mut incidences: Vec<Incidence>) -> Self {
        incidences.sort_unstable();
        Configuration {
            v,
            b,
            r,
            k,
            incidences,
        }
    }

    /// The empty configuration, the identity for amalgamation.
    pub fn empty(r: usize, k: usize) -> Self {
        Configuration::new(0, 0, r, k, Vec::new())
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.v == 0 && self.b == 0
    }

    /// Sorted incidence list.
    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn has_incidence(&self, point: usize, line: usize) -> bool {
        self.incidences.binary_search(&(point, line)).is_ok()
    }

    /// Lines through each point. Incidences naming a point outside `0..v`
    /// are skipped.
    pub fn lines_of_points(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.v];
        for &(p, l) in &self.incidences {
            if p < self.v && l < self.b {
                out[p].push(l);
            }
        }
        out
    }

    /// Points on each line, ascending.
    pub fn points_of_lines(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.b];
        for &(p, l) in &self.incidences {
            if p < self.v && l < self.b {
                out[l].push(p);
            }
        }
        out
    }

    /// Points and lines exchanged: a `(b,v,k,r)` structure.
    pub fn dual(&self) -> Configuration {
        Configuration::new(
            self.b,
            self.v,
            self.k,
            self.r,
            self.incidences.iter().map(|&(p, l)| (l, p)).collect(),
        )
    }

    /// Applies `point_perm[old] = new` and `line_perm[old] = new`.
    pub fn relabel(&self, point_perm: &[usize], line_perm: &[usize]) -> Configuration {
        debug_assert_eq!(point_perm.len(), self.v);
        debug_assert_eq!(line_perm.len(), self.b);
        Configuration::new(
            self.v,
            self.b,
            self.r,
            self.k,
            self.incidences
                .iter()
                .map(|&(p, l)| (point_perm[p], line_perm[l]))
                .collect(),
        )
    }

    /// Disjoint union with `other` placed after `self`.
    pub fn disjoint_union(&self, other: &Configuration) -> Configuration {
        let mut inc = self.incidences.clone();
        inc.extend(
            other
                .incidences
                .iter()
                .map(|&(p, l)| (p + self.v, l + self.b)),
        );
        Configuration::new(self.v + other.v, self.b + other.b, self.r, self.k, inc)
    }

    /// The bipartite incidence graph: points are vertices `0..v`, lines are
    /// vertices `v..v+b`.
    pub fn incidence_graph(&self) -> crate::graph::SimpleGraph {
        let mut g = crate::graph::SimpleGraph::new(self.v + self.b);
        for &(p, l) in &self.incidences {
            if p < self.v && l < self.b {
                g.add_edge(p, self.v + l);
            }
        }
        g
    }

    pub fn tuple(&self) -> Tuple {
        tuple_of(self)
    }

    pub fn to_document(&self) -> ConfigDocument {
        ConfigDocument {
            v: self.v,
            b: self.b,
            r: self.r,
            k: self.k,
            incidences: self
                .incidences
                .iter()
                .map(|&(p, l)| [p + 1, l + 1])
                .collect(),
        }
    }

    pub fn from_document(doc: &ConfigDocument) -> Result<Configuration> {
        let mut inc = Vec::with_capacity(doc.incidences.len());
        for &[p, l] in &doc.incidences {
            if p == 0 || l == 0 {
                return Err(Error::Format(format!(
                    "incidence [{p},{l}] uses a 0 label; labels are 1-based"
                )));
            }
            inc.push((p - 1, l - 1));
        }
        Ok(Configuration::new(doc.v, doc.b, doc.r, doc.k, inc))
    }

    /// Canonical JSON: fixed key order, incidences sorted, no whitespace.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Configuration> {
        let doc: ConfigDocument = serde_json::from_str(text)?;
        Configuration::from_document(&doc)
    }

    /// Graphviz rendering: points as circles, lines as boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let (v, b, r, k) = (self.v, self.b, self.r, self.k);
        let _ = writeln!(out, "graph configuration_{v}_{b}_{r}_{k} {{");
        let _ = writeln!(out, "  node [shape=circle];");
        for p in 0..self.v {
            let _ = writeln!(out, "  x{};", p + 1);
        }
        let _ = writeln!(out, "  node [shape=box];");
        for l in 0..self.b {
            let _ = writeln!(out, "  y{};", l + 1);
        }
        for &(p, l) in &self.incidences {
            let _ = writeln!(out, "  x{} -- y{};", p + 1, l + 1);
        }
        out.push_str("}\n");
        out
    }
}

/// Wire form of a configuration. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDocument {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub incidences: Vec<[usize; 2]>,
}

/// Parameters of a configurable tuple together with its scale factor `d`,
/// where `v = d*k/gcd(r,k)` and `b = d*r/gcd(r,k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tuple {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub d: usize,
}

impl Tuple {
    pub fn from_scale(d: usize, r: usize, k: usize) -> Tuple {
        let g = r.gcd(&k).max(1);
        Tuple {
            v: d * k / g,
            b: d * r / g,
            r,
            k,
            d,
        }
    }
}

/// Scale factor of a configuration. Assumes `v*r == b*k`, which `verify`
/// checks.
pub fn tuple_of(config: &Configuration) -> Tuple {
    let (r, k) = (config.r, config.k);
    let g = r.gcd(&k);
    let d = (config.v * g).checked_div(k).unwrap_or(0);
    Tuple {
        v: config.v,
        b: config.b,
        r,
        k,
        d,
    }
}

/// Point/line counts for scale factor `d`.
pub fn counts_for_scale(d: usize, r: usize, k: usize) -> (usize, usize) {
    let t = Tuple::from_scale(d, r, k);
    (t.v, t.b)
}

/// Smallest `d` allowed by the necessary conditions: `v >= r(k-1)+1` and
/// its dual `b >= k(r-1)+1`.
pub fn scale_lower_bound(r: usize, k: usize) -> usize {
    if r == 0 || k == 0 {
        return 0;
    }
    let g = r.gcd(&k);
    let from_points = (r * (k - 1) + 1) * g;
    let from_lines = (k * (r - 1) + 1) * g;
    from_points.div_ceil(k).max(from_lines.div_ceil(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_examples() {
        let fano = crate::fixtures::fano();
        assert_eq!(
            tuple_of(&fano),
            Tuple {
                v: 7,
                b: 7,
                r: 3,
                k: 3,
                d: 7
            }
        );
        let k4 = Configuration::new(6, 4, 2, 3, vec![]);
        assert_eq!(tuple_of(&k4).d, 2);
        assert_eq!(tuple_of(&Configuration::empty(3, 3)).d, 0);
    }

    #[test]
    fn from_scale_reproduces_counts() {
        for r in 1..8 {
            for k in 1..8 {
                for d in 0..20 {
                    let t = Tuple::from_scale(d, r, k);
                    let c = Configuration::new(t.v, t.b, r, k, vec![]);
                    assert_eq!(tuple_of(&c), t);
                    assert_eq!(t.v * r, t.b * k);
                }
            }
        }
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(scale_lower_bound(3, 3), 7);
        assert_eq!(scale_lower_bound(2, 3), 2);
        assert_eq!(scale_lower_bound(3, 4), 3);
        assert_eq!(scale_lower_bound(4, 3), 3);
        // (3,5): v = 5d >= 13 gives 3, but b = 3d >= 11 forces 4.
        assert_eq!(scale_lower_bound(3, 5), 4);
        assert_eq!(scale_lower_bound(5, 3), 4);
    }

    #[test]
    fn json_is_one_based_and_sorted() {
        let c = Configuration::new(2, 1, 1, 2, vec![(1, 0), (0, 0)]);
        assert_eq!(
            c.to_json(),
            r#"{"v":2,"b":1,"r":1,"k":2,"incidences":[[1,1],[2,1]]}"#
        );
        assert_eq!(Configuration::from_json(&c.to_json()).unwrap(), c);
        assert!(Configuration::from_json(
            r#"{"v":1,"b":1,"r":1,"k":1,"incidences":[[0,1]]}"#
        )
        .is_err());
    }

    #[test]
    fn dot_shapes() {
        let dot = crate::fixtures::fano().to_dot();
        assert!(dot.contains("node [shape=circle]"));
        assert!(dot.contains("node [shape=box]"));
        assert_eq!(dot.matches(" -- ").count(), 21);
    }
}
