//! Three pairwise-disjoint incidences ("anchors") that let configurations be
//! glued together by edge swaps.

use std::collections::VecDeque;

use crate::config::{Configuration, Incidence};
use crate::error::{Error, Result};

/// A configuration relabeled so that `(x_1,y_1)`, `(x_2,y_2)` and
/// `(x_v,y_b)` are incidences with six distinct endpoints.
///
/// In 0-based indices the anchors are `(0,0)`, `(1,1)` and `(v-1,b-1)`.
/// The empty configuration carries no anchors and acts as the identity for
/// amalgamation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchoredConfiguration {
    config: Configuration,
    /// `point_perm[old] = new` relative to the configuration handed to
    /// [`find_anchors`].
    point_perm: Vec<usize>,
    line_perm: Vec<usize>,
}

impl AnchoredConfiguration {
    /// The empty configuration, which needs no anchors.
    pub fn empty(r: usize, k: usize) -> Self {
        AnchoredConfiguration {
            config: Configuration::empty(r, k),
            point_perm: Vec::new(),
            line_perm: Vec::new(),
        }
    }

    /// Accepts a configuration that is already laid out with its anchors in
    /// the standard positions.
    pub fn from_standard_layout(config: Configuration) -> Result<Self> {
        if !config.is_empty() {
            check_layout(&config)?;
        }
        let point_perm = (0..config.v()).collect();
        let line_perm = (0..config.b()).collect();
        Ok(AnchoredConfiguration {
            config,
            point_perm,
            line_perm,
        })
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn into_config(self) -> Configuration {
        self.config
    }

    pub fn point_perm(&self) -> &[usize] {
        &self.point_perm
    }

    pub fn line_perm(&self) -> &[usize] {
        &self.line_perm
    }

    pub fn is_empty(&self) -> bool {
        self.config.is_empty()
    }

    /// `[a1, a2, a3]`, or `None` for the empty configuration.
    pub fn anchors(&self) -> Option<[Incidence; 3]> {
        if self.config.is_empty() {
            return None;
        }
        let (v, b) = (self.config.v(), self.config.b());
        Some([(0, 0), (1, 1), (v - 1, b - 1)])
    }
}

fn check_layout(config: &Configuration) -> Result<()> {
    let (v, b) = (config.v(), config.b());
    if v < 3 || b < 3 {
        return Err(Error::AnchorNotFound(format!(
            "need at least 3 points and 3 lines, got v={v}, b={b}"
        )));
    }
    for (p, l) in [(0, 0), (1, 1), (v - 1, b - 1)] {
        if !config.has_incidence(p, l) {
            return Err(Error::AnchorNotFound(format!(
                "x{} -- y{} is not an incidence",
                p + 1,
                l + 1
            )));
        }
    }
    Ok(())
}

/// A path `p0 - l0 - p1 - l1 - p2 - l2` with distinct vertices; its first,
/// third and fifth edges are the anchors.
type Path = [usize; 6];

/// Finds three pairwise-disjoint incidences and relabels the configuration
/// so that they sit at `(x_1,y_1)`, `(x_2,y_2)`, `(x_v,y_b)`.
///
/// Paths are enumerated lowest index first. Among them the first one whose
/// outer anchors are not bridges of the incidence graph is taken, so that
/// later swaps cannot disconnect the result; if every path has a bridge at
/// an end, the first path is used.
pub fn find_anchors(config: &Configuration) -> Result<AnchoredConfiguration> {
    if config.is_empty() {
        return Ok(AnchoredConfiguration::empty(config.r(), config.k()));
    }
    if config.r() < 2 || config.k() < 2 {
        return Err(Error::AnchorNotFound(format!(
            "degrees r={}, k={} must both be at least 2",
            config.r(),
            config.k()
        )));
    }
    let point_lines = config.lines_of_points();
    let line_points = config.points_of_lines();
    let adjacency = Adjacency {
        point_lines: &point_lines,
        line_points: &line_points,
    };

    const BRIDGE_CHECKS: usize = 64;
    let mut first = None;
    let mut chosen = None;
    let mut checked = 0;
    adjacency.for_each_path(|path| {
        if first.is_none() {
            first = Some(path);
        }
        checked += 1;
        let ends_ok = !adjacency.is_bridge(path[0], path[1])
            && !adjacency.is_bridge(path[4], path[5]);
        if ends_ok {
            chosen = Some(path);
        }
        ends_ok || checked >= BRIDGE_CHECKS
    });
    let path = chosen.or(first).ok_or_else(|| {
        Error::AnchorNotFound("no path with five edges and six distinct vertices".into())
    })?;
    let [p0, l0, p1, l1, p2, l2] = path;

    let (v, b) = (config.v(), config.b());
    let point_perm = layout_perm(v, p0, p1, p2);
    let line_perm = layout_perm(b, l0, l1, l2);
    let relabeled = config.relabel(&point_perm, &line_perm);
    Ok(AnchoredConfiguration {
        config: relabeled,
        point_perm,
        line_perm,
    })
}

/// Sends `first -> 0`, `second -> 1`, `last -> n-1`, and the rest in
/// ascending order into the remaining slots.
fn layout_perm(n: usize, first: usize, second: usize, last: usize) -> Vec<usize> {
    let mut perm = vec![usize::MAX; n];
    perm[first] = 0;
    perm[second] = 1;
    perm[last] = n - 1;
    let mut next = 2;
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    perm
}

struct Adjacency<'a> {
    point_lines: &'a [Vec<usize>],
    line_points: &'a [Vec<usize>],
}

impl Adjacency<'_> {
    /// Visits candidate paths in lexicographic order until `visit` returns
    /// `true`.
    fn for_each_path(&self, mut visit: impl FnMut(Path) -> bool) {
        for (p0, lines0) in self.point_lines.iter().enumerate() {
            for &l0 in lines0 {
                for &p1 in &self.line_points[l0] {
                    if p1 == p0 {
                        continue;
                    }
                    for &l1 in &self.point_lines[p1] {
                        if l1 == l0 {
                            continue;
                        }
                        for &p2 in &self.line_points[l1] {
                            if p2 == p1 || p2 == p0 {
                                continue;
                            }
                            for &l2 in &self.point_lines[p2] {
                                if l2 == l1 || l2 == l0 {
                                    continue;
                                }
                                if visit([p0, l0, p1, l1, p2, l2]) {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Whether removing the incidence `(point, line)` separates its ends.
    fn is_bridge(&self, point: usize, line: usize) -> bool {
        // Bipartite BFS over (is_line, index) starting at the point.
        let mut seen_points = vec![false; self.point_lines.len()];
        let mut seen_lines = vec![false; self.line_points.len()];
        let mut queue = VecDeque::from([(false, point)]);
        seen_points[point] = true;
        while let Some((is_line, u)) = queue.pop_front() {
            if is_line {
                for &p in &self.line_points[u] {
                    if u == line && p == point {
                        continue;
                    }
                    if !seen_points[p] {
                        seen_points[p] = true;
                        queue.push_back((false, p));
                    }
                }
            } else {
                for &l in &self.point_lines[u] {
                    if u == point && l == line {
                        continue;
                    }
                    if l == line {
                        return false;
                    }
                    if !seen_lines[l] {
                        seen_lines[l] = true;
                        queue.push_back((true, l));
                    }
                }
            }
        }
        true
    }
}
