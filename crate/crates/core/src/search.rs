//! Exhaustive backtracking decider for "does a `(v,b,r,k)`-configuration
//! exist?".
//!
//! Lines are `k`-subsets of the points, generated in lexicographically
//! nondecreasing order. Because every point below the smallest deficient
//! point is saturated, each new line must start with that point. Within a
//! line, a candidate must be deficient and share no line with the points
//! already chosen. Points that appear in no line yet are interchangeable,
//! so with symmetry pruning only the smallest of them is tried at each
//! position. Before a line is started, every deficient point must still
//! have enough compatible partners for its missing lines.
//!
//! The search first expands a fixed frontier of partial solutions and then
//! explores the subtrees in order, optionally on a thread pool. The verdict,
//! witness and node count do not depend on the number of workers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{scale_lower_bound, ConfigDocument, Configuration, Tuple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Wall-clock limit; exceeding it yields [`VerdictKind::Unknown`].
    pub time_budget: Option<Duration>,
    /// Limit on search nodes (candidate placements).
    pub node_budget: Option<u64>,
    /// Permutes the order in which candidates are tried. `0` keeps the
    /// natural order.
    pub seed: u64,
    /// Interchangeable-point pruning.
    pub symmetry: bool,
    /// Threads used for the subtrees below the frontier.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            time_budget: None,
            node_budget: None,
            seed: 0,
            symmetry: true,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub options: SearchOptions,
}

impl SearchProblem {
    pub fn new(v: usize, b: usize, r: usize, k: usize) -> Self {
        SearchProblem {
            v,
            b,
            r,
            k,
            options: SearchOptions::default(),
        }
    }

    pub fn for_scale(d: usize, r: usize, k: usize) -> Self {
        let t = Tuple::from_scale(d, r, k);
        SearchProblem::new(t.v, t.b, r, k)
    }

    pub fn with_options(mut self, options: SearchOptions) -> Self {
        self.options = options;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Exists,
    NotExists,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchVerdict {
    pub kind: VerdictKind,
    pub witness: Option<Configuration>,
    pub nodes: u64,
    pub elapsed: Duration,
    /// Why the search ended without exploring, or why it gave up.
    pub reason: Option<String>,
}

impl SearchVerdict {
    fn immediate(kind: VerdictKind, witness: Option<Configuration>, reason: &str, start: Instant) -> Self {
        SearchVerdict {
            kind,
            witness,
            nodes: 0,
            elapsed: start.elapsed(),
            reason: Some(reason.to_string()),
        }
    }

    pub fn exists(&self) -> bool {
        self.kind == VerdictKind::Exists
    }

    pub fn to_document(&self, problem: &SearchProblem) -> VerdictDocument {
        VerdictDocument {
            verdict: self.kind,
            v: problem.v,
            b: problem.b,
            r: problem.r,
            k: problem.k,
            nodes: self.nodes,
            elapsed_ms: Some(self.elapsed.as_millis() as u64),
            reason: self.reason.clone(),
            witness: self.witness.as_ref().map(Configuration::to_document),
        }
    }
}

/// JSON form of a verdict, witness inline.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub verdict: VerdictKind,
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub nodes: u64,
    /// Omitted from stored artifacts so that they are reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub reason: Option<String>,
    pub witness: Option<ConfigDocument>,
}

/// Decides configurability of `(v,b,r,k)`. Budget exhaustion yields
/// `Unknown`, never a wrong verdict.
pub fn decide(problem: &SearchProblem) -> SearchVerdict {
    let start = Instant::now();
    let (v, b, r, k) = (problem.v, problem.b, problem.r, problem.k);
    if v == 0 && b == 0 {
        return SearchVerdict::immediate(VerdictKind::Exists, Some(Configuration::empty(r, k)), "empty configuration", start);
    }
    if r == 0 || k == 0 {
        return SearchVerdict::immediate(VerdictKind::NotExists, None, "degree zero", start);
    }
    if v * r != b * k {
        return SearchVerdict::immediate(VerdictKind::NotExists, None, "vr != bk", start);
    }
    if v < r * (k - 1) + 1 {
        return SearchVerdict::immediate(VerdictKind::NotExists, None, "v < r(k-1)+1", start);
    }
    if b < k * (r - 1) + 1 {
        return SearchVerdict::immediate(VerdictKind::NotExists, None, "b < k(r-1)+1", start);
    }

    let shared = Shared {
        v,
        b,
        r,
        k,
        words: v.div_ceil(64),
        symmetry: problem.options.symmetry,
        rank: candidate_rank(v, problem.options.seed),
        deadline: problem.options.time_budget.map(|t| start + t),
        winner: AtomicUsize::new(usize::MAX),
    };
    let node_budget = problem.options.node_budget.unwrap_or(u64::MAX);

    let root = State::root(&shared);
    let mut frontier_nodes = 0u64;
    let frontier = match expand_frontier(&shared, root, &mut frontier_nodes, node_budget) {
        Ok(f) => f,
        Err(stop) => {
            return SearchVerdict {
                kind: VerdictKind::Unknown,
                witness: None,
                nodes: frontier_nodes,
                elapsed: start.elapsed(),
                reason: Some(stop.reason().into()),
            }
        }
    };

    let budget_left = node_budget.saturating_sub(frontier_nodes);
    let run = |(index, state): (usize, State)| -> (Outcome, u64, Option<Configuration>) {
        let mut worker = Walker::new(&shared, state, budget_left, index);
        let outcome = worker.search();
        if outcome == Outcome::Found {
            shared.winner.fetch_min(index, Ordering::SeqCst);
            let witness = worker.state.to_configuration(&shared);
            (outcome, worker.nodes, Some(witness))
        } else {
            (outcome, worker.nodes, None)
        }
    };
    let jobs: Vec<(usize, State)> = frontier.into_iter().enumerate().collect();
    let results: Vec<_> = if problem.options.workers > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(problem.options.workers)
            .build()
        {
            Ok(pool) => pool.install(|| jobs.into_par_iter().map(run).collect()),
            Err(_) => jobs.into_iter().map(run).collect(),
        }
    } else {
        // Sequential runs stop after the first witness.
        let mut out = Vec::new();
        for job in jobs {
            let res = run(job);
            let done = res.0 != Outcome::Exhausted;
            out.push(res);
            if done {
                break;
            }
        }
        out
    };

    let mut nodes = frontier_nodes;
    for (outcome, n, witness) in results {
        nodes += n;
        if nodes > node_budget {
            return SearchVerdict {
                kind: VerdictKind::Unknown,
                witness: None,
                nodes,
                elapsed: start.elapsed(),
                reason: Some(Stop::Nodes.reason().into()),
            };
        }
        match outcome {
            Outcome::Found => {
                return SearchVerdict {
                    kind: VerdictKind::Exists,
                    witness,
                    nodes,
                    elapsed: start.elapsed(),
                    reason: None,
                }
            }
            Outcome::Exhausted => {}
            Outcome::Stopped(stop) => {
                return SearchVerdict {
                    kind: VerdictKind::Unknown,
                    witness: None,
                    nodes,
                    elapsed: start.elapsed(),
                    reason: Some(stop.reason().into()),
                }
            }
        }
    }
    SearchVerdict {
        kind: VerdictKind::NotExists,
        witness: None,
        nodes,
        elapsed: start.elapsed(),
        reason: Some("search tree exhausted".into()),
    }
}

/// Result of scanning scale factors upward for the least configurable one.
#[derive(Clone, Debug)]
pub struct MinimalElement {
    /// Least `d` with a witness, if any was found.
    pub found: Option<(usize, Configuration)>,
    /// Scale factors proven impossible.
    pub absent: Vec<usize>,
    /// Scale factors left undecided by the budget.
    pub unknown: Vec<usize>,
}

impl MinimalElement {
    /// The found element is minimal only if nothing below it is undecided.
    pub fn is_proven_minimal(&self) -> bool {
        match &self.found {
            Some((d, _)) => self.unknown.iter().all(|u| u > d),
            None => false,
        }
    }
}

/// Scans `d = lower_bound ..= d_max` and stops at the first configurable
/// scale factor.
pub fn minimal_element(r: usize, k: usize, d_max: usize, options: &SearchOptions) -> MinimalElement {
    let mut out = MinimalElement {
        found: None,
        absent: (1..scale_lower_bound(r, k).min(d_max + 1)).collect(),
        unknown: Vec::new(),
    };
    for d in scale_lower_bound(r, k).max(1)..=d_max {
        let verdict = decide(&SearchProblem::for_scale(d, r, k).with_options(options.clone()));
        match verdict.kind {
            VerdictKind::Exists => {
                out.found = Some((d, verdict.witness.expect("exists carries a witness")));
                break;
            }
            VerdictKind::NotExists => out.absent.push(d),
            VerdictKind::Unknown => out.unknown.push(d),
        }
    }
    out
}

fn candidate_rank(v: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..v).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut rank = vec![0; v];
    for (i, &p) in order.iter().enumerate() {
        rank[p] = i;
    }
    rank
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stop {
    Nodes,
    Time,
    Cancelled,
}

impl Stop {
    fn reason(self) -> &'static str {
        match self {
            Stop::Nodes => "node budget exhausted",
            Stop::Time => "time budget exhausted",
            Stop::Cancelled => "cancelled",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    Stopped(Stop),
}

struct Shared {
    v: usize,
    b: usize,
    r: usize,
    k: usize,
    words: usize,
    symmetry: bool,
    rank: Vec<usize>,
    deadline: Option<Instant>,
    /// Lowest subtree index that has found a witness.
    winner: AtomicUsize,
}

/// A partial solution: the lines placed so far and derived bookkeeping.
#[derive(Clone)]
struct State {
    deg: Vec<u32>,
    /// Row `p` holds the points sharing a line with `p`.
    colined: Vec<u64>,
    deficient: Vec<u64>,
    /// Points that lie on at least one placed line.
    used: Vec<u64>,
    lines: Vec<usize>,
    placed: usize,
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(set: &mut [u64], i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

fn clear_bit(set: &mut [u64], i: usize) {
    set[i / 64] &= !(1 << (i % 64));
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

/// Clears bits `0..=i`.
fn clear_through(set: &mut [u64], i: usize) {
    let word = i / 64;
    for w in &mut set[..word] {
        *w = 0;
    }
    let keep = if i % 64 == 63 { 0 } else { !0u64 << (i % 64 + 1) };
    set[word] &= keep;
}

impl State {
    fn root(sh: &Shared) -> State {
        let mut deficient = vec![0u64; sh.words];
        for p in 0..sh.v {
            set_bit(&mut deficient, p);
        }
        State {
            deg: vec![0; sh.v],
            colined: vec![0; sh.v * sh.words],
            deficient,
            used: vec![0; sh.words],
            lines: vec![0; sh.b * sh.k],
            placed: 0,
        }
    }

    fn row(&self, sh: &Shared, p: usize) -> &[u64] {
        &self.colined[p * sh.words..(p + 1) * sh.words]
    }

    fn line(&self, sh: &Shared, i: usize) -> &[usize] {
        &self.lines[i * sh.k..(i + 1) * sh.k]
    }

    fn place(&mut self, sh: &Shared, line: &[usize]) {
        let base = self.placed * sh.k;
        self.lines[base..base + sh.k].copy_from_slice(line);
        self.placed += 1;
        for (i, &p) in line.iter().enumerate() {
            self.deg[p] += 1;
            set_bit(&mut self.used, p);
            if self.deg[p] as usize == sh.r {
                clear_bit(&mut self.deficient, p);
            }
            for &q in &line[i + 1..] {
                set_bit(&mut self.colined[p * sh.words..(p + 1) * sh.words], q);
                set_bit(&mut self.colined[q * sh.words..(q + 1) * sh.words], p);
            }
        }
    }

    fn unplace(&mut self, sh: &Shared) {
        self.placed -= 1;
        let base = self.placed * sh.k;
        for i in 0..sh.k {
            let p = self.lines[base + i];
            self.deg[p] -= 1;
            if self.deg[p] == 0 {
                clear_bit(&mut self.used, p);
            }
            set_bit(&mut self.deficient, p);
            for j in i + 1..sh.k {
                let q = self.lines[base + j];
                clear_bit(&mut self.colined[p * sh.words..(p + 1) * sh.words], q);
                clear_bit(&mut self.colined[q * sh.words..(q + 1) * sh.words], p);
            }
        }
    }

    /// Every deficient point needs `deficit * (k-1)` distinct partners
    /// among the deficient points it does not yet share a line with.
    fn capacity_ok(&self, sh: &Shared) -> bool {
        let mut p_iter = self.deficient.clone();
        while let Some(p) = first_bit(&p_iter) {
            clear_bit(&mut p_iter, p);
            let need = (sh.r - self.deg[p] as usize) * (sh.k - 1);
            let row = self.row(sh, p);
            let avail: usize = self
                .deficient
                .iter()
                .zip(row)
                .map(|(d, c)| (d & !c).count_ones() as usize)
                .sum::<usize>()
                - 1;
            if avail < need {
                return false;
            }
        }
        true
    }

    fn connected(&self, sh: &Shared) -> bool {
        let mut parent: Vec<usize> = (0..sh.v).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..self.placed {
            let line = self.line(sh, i);
            let root = find(&mut parent, line[0]);
            for &p in &line[1..] {
                let other = find(&mut parent, p);
                parent[other] = root;
            }
        }
        let root = find(&mut parent, 0);
        (0..sh.v).all(|p| find(&mut parent, p) == root)
    }

    fn to_configuration(&self, sh: &Shared) -> Configuration {
        let mut inc = Vec::with_capacity(sh.b * sh.k);
        for l in 0..self.placed {
            inc.extend(self.line(sh, l).iter().map(|&p| (p, l)));
        }
        Configuration::new(sh.v, sh.b, sh.r, sh.k, inc)
    }
}

/// Depth-first walker over one subtree. In collecting mode it stops after
/// one line and records the children instead of descending.
struct Walker<'a> {
    shared: &'a Shared,
    state: State,
    nodes: u64,
    budget: u64,
    index: usize,
    children: Option<Vec<State>>,
}

impl<'a> Walker<'a> {
    fn new(shared: &'a Shared, state: State, budget: u64, index: usize) -> Self {
        Walker {
            shared,
            state,
            nodes: 0,
            budget,
            index,
            children: None,
        }
    }

    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Stop::Nodes);
        }
        if self.nodes.is_multiple_of(1024) {
            if self.shared.winner.load(Ordering::Relaxed) < self.index {
                return Err(Stop::Cancelled);
            }
            if self.shared.deadline.is_some_and(|d| Instant::now() > d) {
                return Err(Stop::Time);
            }
        }
        Ok(())
    }

    fn search(&mut self) -> Outcome {
        match self.descend() {
            Ok(true) => Outcome::Found,
            Ok(false) => Outcome::Exhausted,
            Err(stop) => Outcome::Stopped(stop),
        }
    }

    /// On success the state holds the complete witness.
    fn descend(&mut self) -> Result<bool, Stop> {
        let sh = self.shared;
        if self.state.placed == sh.b {
            return Ok(self.state.connected(sh));
        }
        let Some(m) = first_bit(&self.state.deficient) else {
            return Ok(false);
        };
        if !self.state.capacity_ok(sh) {
            return Ok(false);
        }
        let tight = self.state.placed > 0 && self.state.line(sh, self.state.placed - 1)[0] == m;
        let mut avail = self.state.deficient.clone();
        for (a, c) in avail.iter_mut().zip(self.state.row(sh, m)) {
            *a &= !c;
        }
        clear_through(&mut avail, m);
        let mut line = vec![m; sh.k];
        self.fill(&mut line, 1, avail, tight)
    }

    fn fill(&mut self, line: &mut Vec<usize>, pos: usize, avail: Vec<u64>, tight: bool) -> Result<bool, Stop> {
        let sh = self.shared;
        if pos == sh.k {
            if let Some(children) = self.children.as_mut() {
                let mut child = self.state.clone();
                child.place(sh, line);
                children.push(child);
                return Ok(false);
            }
            self.state.place(sh, line);
            if self.descend()? {
                return Ok(true);
            }
            self.state.unplace(sh);
            return Ok(false);
        }
        if count(&avail) < sh.k - pos {
            return Ok(false);
        }
        let lower = if tight {
            self.state.line(sh, self.state.placed - 1)[pos]
        } else {
            0
        };
        let mut candidates = Vec::new();
        let mut scan = avail.clone();
        let mut smallest_fresh = None;
        while let Some(q) = first_bit(&scan) {
            clear_bit(&mut scan, q);
            let fresh = !bit(&self.state.used, q);
            if fresh && smallest_fresh.is_none() {
                smallest_fresh = Some(q);
            }
            if q < lower {
                continue;
            }
            if sh.symmetry && fresh && smallest_fresh != Some(q) {
                continue;
            }
            candidates.push(q);
        }
        candidates.sort_by_key(|&q| sh.rank[q]);
        for q in candidates {
            self.tick()?;
            line[pos] = q;
            let mut next = avail.clone();
            for (a, c) in next.iter_mut().zip(self.state.row(sh, q)) {
                *a &= !c;
            }
            clear_through(&mut next, q);
            if self.fill(line, pos + 1, next, tight && q == lower)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Expands partial solutions line by line until the frontier is wide
/// enough to split work, or a few levels deep.
fn expand_frontier(sh: &Shared, root: State, nodes: &mut u64, budget: u64) -> Result<Vec<State>, Stop> {
    const TARGET: usize = 64;
    const MAX_LEVELS: usize = 4;
    let mut level = vec![root];
    for _ in 0..MAX_LEVELS {
        if level.len() >= TARGET || level.iter().all(|s| s.placed == sh.b) {
            break;
        }
        let mut next = Vec::new();
        for state in level {
            if state.placed == sh.b {
                next.push(state);
                continue;
            }
            let mut walker = Walker::new(sh, state, budget.saturating_sub(*nodes), usize::MAX);
            walker.children = Some(Vec::new());
            let result = walker.descend();
            *nodes += walker.nodes;
            result?;
            next.extend(walker.children.take().unwrap_or_default());
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::tuple_of;
    use crate::semigroup::d2k;
    use crate::verify::verify;

    fn run(v: usize, b: usize, r: usize, k: usize, options: SearchOptions) -> SearchVerdict {
        decide(&SearchProblem::new(v, b, r, k).with_options(options))
    }

    fn assert_witness(verdict: &SearchVerdict, v: usize, b: usize) {
        let w = verdict.witness.as_ref().expect("witness");
        assert!(verify(w).is_pass());
        assert_eq!((w.v(), w.b()), (v, b));
    }

    #[test]
    fn fano_exists() {
        let verdict = run(7, 7, 3, 3, SearchOptions::default());
        assert_eq!(verdict.kind, VerdictKind::Exists);
        assert_witness(&verdict, 7, 7);
    }

    #[test]
    fn p2_rules_out_six() {
        let verdict = run(6, 6, 3, 3, SearchOptions::default());
        assert_eq!(verdict.kind, VerdictKind::NotExists);
        assert_eq!(verdict.nodes, 0);
        assert_eq!(verdict.reason.as_deref(), Some("v < r(k-1)+1"));
    }

    #[test]
    fn mobius_kantor_exists() {
        let verdict = run(8, 8, 3, 3, SearchOptions::default());
        assert_eq!(verdict.kind, VerdictKind::Exists);
        assert_witness(&verdict, 8, 8);
    }

    #[test]
    fn pre_checks() {
        assert_eq!(run(0, 0, 3, 3, SearchOptions::default()).kind, VerdictKind::Exists);
        assert_eq!(run(7, 6, 3, 3, SearchOptions::default()).kind, VerdictKind::NotExists);
        // (15,9,3,5) passes P1 and P2 but not the dual bound b >= k(r-1)+1.
        let dual = run(15, 9, 3, 5, SearchOptions::default());
        assert_eq!(dual.kind, VerdictKind::NotExists);
        assert_eq!(dual.reason.as_deref(), Some("b < k(r-1)+1"));
    }

    #[test]
    fn exhaustive_no() {
        // These pass every pre-check; their only completions are
        // disconnected.
        for (v, b, r, k) in [(2, 2, 1, 1), (6, 3, 1, 2)] {
            let verdict = run(v, b, r, k, SearchOptions::default());
            assert_eq!(verdict.kind, VerdictKind::NotExists);
            assert_eq!(verdict.reason.as_deref(), Some("search tree exhausted"));
        }
        let verdict = run(2, 2, 1, 1, SearchOptions::default());
        assert_eq!(verdict.reason.as_deref(), Some("search tree exhausted"));
    }

    #[test]
    fn node_budget_gives_unknown() {
        let verdict = run(13, 13, 4, 4, SearchOptions { node_budget: Some(3), ..Default::default() });
        assert_eq!(verdict.kind, VerdictKind::Unknown);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn time_budget_gives_unknown() {
        let verdict = run(
            31,
            31,
            6,
            6,
            SearchOptions { time_budget: Some(Duration::ZERO), ..Default::default() },
        );
        assert_eq!(verdict.kind, VerdictKind::Unknown);
    }

    #[test]
    fn symmetry_pruning_is_sound() {
        for r in 2..=4 {
            for k in 2..=4 {
                for v in 1..=10 {
                    if (v * r) % k != 0 {
                        continue;
                    }
                    let b = v * r / k;
                    let on = run(v, b, r, k, SearchOptions::default());
                    let off = run(v, b, r, k, SearchOptions { symmetry: false, ..Default::default() });
                    assert_eq!(on.kind, off.kind, "({v},{b},{r},{k})");
                    assert_ne!(on.kind, VerdictKind::Unknown);
                    if on.exists() {
                        assert_witness(&on, v, b);
                        assert_witness(&off, v, b);
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        for seed in [0, 7] {
            let options = SearchOptions { seed, ..Default::default() };
            let a = run(13, 13, 4, 4, options.clone());
            let b = run(13, 13, 4, 4, options);
            assert_eq!(a.kind, VerdictKind::Exists);
            assert_eq!((a.nodes, &a.witness), (b.nodes, &b.witness));
        }
    }

    #[test]
    fn independent_of_worker_count() {
        for (v, b, r, k) in [(13, 13, 4, 4), (10, 10, 3, 3), (9, 12, 4, 3), (8, 8, 2, 2)] {
            let one = run(v, b, r, k, SearchOptions::default());
            for workers in [2, 4] {
                let many = run(v, b, r, k, SearchOptions { workers, ..Default::default() });
                assert_eq!(one.kind, many.kind);
                assert_eq!(one.nodes, many.nodes, "({v},{b},{r},{k}) workers={workers}");
                assert_eq!(one.witness, many.witness);
            }
        }
    }

    #[test]
    fn agrees_with_d2k() {
        for k in 2..=6 {
            let s = d2k(k).unwrap();
            for d in 1.. {
                let t = Tuple::from_scale(d, 2, k);
                if t.v > 14 {
                    break;
                }
                let verdict = decide(&SearchProblem::for_scale(d, 2, k));
                assert_eq!(verdict.exists(), s.is_member(d), "k={k}, d={d}");
                assert_ne!(verdict.kind, VerdictKind::Unknown);
                if let Some(w) = &verdict.witness {
                    assert_eq!(tuple_of(w).d, d);
                }
            }
        }
    }

    #[test]
    fn minimal_elements() {
        let m = minimal_element(3, 3, 10, &SearchOptions::default());
        assert_eq!(m.found.as_ref().map(|f| f.0), Some(7));
        assert!(m.is_proven_minimal());
        let m = minimal_element(2, 3, 5, &SearchOptions::default());
        assert_eq!(m.found.as_ref().map(|f| f.0), Some(2));
        assert_eq!(m.absent, vec![1]);
    }
}
