//! Descriptions of `D_{r,k}`, the set of configurable scale factors.
//!
//! `D_{r,k} = D_{k,r}` by duality, so the work is done for `r <= k` and
//! witnesses are dualized back when the caller asked for `r > k`.
//!
//! * `r = 1`: a single line through `k` points, `D = {0, 1}`.
//! * `r = 2`: the closed form `d2k(k)`, witnessed by circulant graphs.
//! * `r = 3`: `{0} ∪ (d_min + N_0)` with `d_min = ⌈(2k+1)·gcd(3,k)/3⌉`.
//! * otherwise: bounds. The inner semigroup `⟨m, sm+1⟩` is built from the
//!   least element `m` the oracle finds (or a surgery construction), and is
//!   enlarged by oracle witnesses for its small gaps.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::anchors::find_anchors;
use crate::config::{scale_lower_bound, tuple_of, Configuration, Tuple};
use crate::constructions::{
    circulant_regular, minimal_nontrivial, sm_plus_one, subdivision_configuration, theorem_copies,
    ScaffoldOptions,
};
use crate::error::{Error, Result};
use crate::search::{decide, SearchOptions, SearchProblem, VerdictKind};
use crate::semigroup::{d2k, NumericalSemigroup};

/// Effort limits for [`drk_describe`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrkBudget {
    /// Options for every oracle call. A node budget keeps results
    /// deterministic; a time budget does not.
    pub search: SearchOptions,
    /// How many scale factors from the lower bound upward are tried when
    /// looking for the least element.
    pub scan: usize,
    /// How many gaps of the inner semigroup are handed to the oracle.
    pub gap_checks: usize,
    /// Witnesses for closed-form generators are searched only up to this
    /// many points.
    pub max_witness_points: usize,
    pub scaffold: ScaffoldOptions,
}

impl Default for DrkBudget {
    fn default() -> Self {
        DrkBudget {
            search: SearchOptions {
                node_budget: Some(2_000_000),
                ..SearchOptions::default()
            },
            scan: 4,
            gap_checks: 8,
            max_witness_points: 40,
            scaffold: ScaffoldOptions::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DrkKind {
    /// `r = 1` or `k = 1`: a finite set, not a numerical semigroup.
    FiniteSet,
    /// A closed form from the paper (`r = 2` or `r = 3`).
    ExactClosedForm,
    /// The inner semigroup is exact: every gap at or above the lower bound
    /// was proven absent by the oracle.
    ExactFiniteBase,
    /// `inner ⊆ D_{r,k} ⊆ {0} ∪ [outer_lower_bound, ∞)`.
    Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    SingleLine,
    Circulant,
    Oracle,
    Surgery,
    Theorem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub d: usize,
    pub source: WitnessSource,
    pub config: Configuration,
}

#[derive(Clone, Debug)]
pub struct DrkDescription {
    pub r: usize,
    pub k: usize,
    pub kind: DrkKind,
    /// Elements proven to lie in `D_{r,k}`; `None` for [`DrkKind::FiniteSet`].
    pub inner: Option<NumericalSemigroup>,
    /// The members when `kind` is [`DrkKind::FiniteSet`].
    pub finite_set: Option<Vec<usize>>,
    /// Least positive `d` allowed by P2 and its dual.
    pub outer_lower_bound: usize,
    pub witnesses: Vec<Witness>,
    /// Scale factors at or above the lower bound the oracle proved absent.
    pub proven_absent: Vec<usize>,
    pub notes: Vec<String>,
}

impl DrkDescription {
    /// `Some(true)` when `d` is known to be configurable, `Some(false)` when
    /// it is known not to be, `None` when the description leaves it open.
    pub fn classify(&self, d: usize) -> Option<bool> {
        if let Some(set) = &self.finite_set {
            return Some(set.contains(&d));
        }
        if d == 0 {
            return Some(true);
        }
        if d < self.outer_lower_bound || self.proven_absent.contains(&d) {
            return Some(false);
        }
        let inner = self.inner.as_ref()?;
        if inner.is_member(d) {
            Some(true)
        } else if self.kind == DrkKind::Bounds {
            None
        } else {
            Some(false)
        }
    }

    pub fn witness(&self, d: usize) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.d == d)
    }

    /// Serializable form; `witness_paths[i]` optionally names the file the
    /// caller stored `witnesses[i]` in.
    pub fn to_document(&self, witness_paths: &[Option<String>]) -> DrkDocument {
        let summary = self.inner.as_ref().map(NumericalSemigroup::summary);
        DrkDocument {
            generators: summary.as_ref().map(|s| s.generators.clone()),
            frobenius: summary.as_ref().map(|s| s.frobenius),
            gaps: summary.as_ref().and_then(|s| s.gaps.clone()),
            r: self.r,
            k: self.k,
            kind: self.kind,
            finite_set: self.finite_set.clone(),
            outer_lower_bound: self.outer_lower_bound,
            proven_absent: self.proven_absent.clone(),
            witnesses: self
                .witnesses
                .iter()
                .enumerate()
                .map(|(i, w)| WitnessReference {
                    d: w.d,
                    source: w.source,
                    path: witness_paths.get(i).cloned().flatten(),
                    tuple: tuple_of(&w.config),
                })
                .collect(),
            notes: self.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReference {
    pub d: usize,
    pub source: WitnessSource,
    pub path: Option<String>,
    pub tuple: Tuple,
}

/// JSON form of a [`DrkDescription`]. The semigroup fields come first and
/// match [`SemigroupSummary`](crate::semigroup::SemigroupSummary).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DrkDocument {
    pub generators: Option<Vec<usize>>,
    pub frobenius: Option<i64>,
    pub gaps: Option<Vec<usize>>,
    pub r: usize,
    pub k: usize,
    pub kind: DrkKind,
    pub finite_set: Option<Vec<usize>>,
    pub outer_lower_bound: usize,
    pub proven_absent: Vec<usize>,
    pub witnesses: Vec<WitnessReference>,
    pub notes: Vec<String>,
}

/// Least element of `D_{r,3}` other than 0: `⌈(2r+1)·gcd(3,r)/3⌉`.
pub fn k3_minimum(r: usize) -> usize {
    ((2 * r + 1) * r.gcd(&3)).div_ceil(3)
}

/// Describes `D_{r,k}` within `budget`.
pub fn drk_describe(r: usize, k: usize, budget: &DrkBudget) -> Result<DrkDescription> {
    if r == 0 || k == 0 {
        return Err(Error::InfeasibleParameters(format!(
            "r and k must be positive, got r={r}, k={k}"
        )));
    }
    let (lo, hi) = (r.min(k), r.max(k));
    let mut desc = match lo {
        1 => describe_single_line(hi),
        2 => describe_two(hi)?,
        3 => describe_three(hi, budget)?,
        _ => describe_bounds(lo, hi, budget)?,
    };
    if r > k {
        for w in &mut desc.witnesses {
            w.config = w.config.dual();
        }
    }
    desc.r = r;
    desc.k = k;
    Ok(desc)
}

/// `(1,k)`: connectivity forces a single line, so `v = k`, `b = 1` and
/// `d = 1`. The paper writes `{0, k}`, which are the point counts.
fn describe_single_line(k: usize) -> DrkDescription {
    let line = Configuration::new(k, 1, 1, k, (0..k).map(|p| (p, 0)).collect());
    DrkDescription {
        r: 1,
        k,
        kind: DrkKind::FiniteSet,
        inner: None,
        finite_set: Some(vec![0, 1]),
        outer_lower_bound: 1,
        witnesses: vec![Witness {
            d: 1,
            source: WitnessSource::SingleLine,
            config: line,
        }],
        proven_absent: Vec::new(),
        notes: vec![format!(
            "the paper states D_{{1,k}} = {{0,k}}; with d = v*gcd(r,k)/k the single line gives d = 1 (v = {k} points)"
        )],
    }
}

/// The `r = 2` witness for scale factor `d`: the subdivided circulant.
pub fn two_witness(d: usize, k: usize) -> Result<Configuration> {
    let t = Tuple::from_scale(d, 2, k);
    subdivision_configuration(circulant_regular(k, t.b)?.graph())
}

fn describe_two(k: usize) -> Result<DrkDescription> {
    let inner = d2k(k)?;
    let witnesses = inner
        .minimal_generators()
        .into_iter()
        .map(|d| {
            Ok(Witness {
                d,
                source: WitnessSource::Circulant,
                config: two_witness(d, k)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DrkDescription {
        r: 2,
        k,
        kind: DrkKind::ExactClosedForm,
        inner: Some(inner),
        finite_set: None,
        outer_lower_bound: scale_lower_bound(2, k),
        witnesses,
        proven_absent: Vec::new(),
        notes: Vec::new(),
    })
}

/// The search problem used for scale factor `d` of `(r,k)`. The oracle is
/// fastest with short lines, so when `r < k` it searches the dual `(k,r)`
/// and the second component says the witness must be dualized back.
pub fn oracle_problem(d: usize, r: usize, k: usize, options: &SearchOptions) -> (SearchProblem, bool) {
    let (problem, dualize) = if r < k {
        (SearchProblem::for_scale(d, k, r), true)
    } else {
        (SearchProblem::for_scale(d, r, k), false)
    };
    (problem.with_options(options.clone()), dualize)
}

/// Oracle call at scale factor `d` for `(r,k)`.
fn oracle(d: usize, r: usize, k: usize, options: &SearchOptions) -> (VerdictKind, Option<Configuration>) {
    let (problem, dualize) = oracle_problem(d, r, k, options);
    let verdict = decide(&problem);
    let witness = verdict
        .witness
        .map(|w| if dualize { w.dual() } else { w });
    (verdict.kind, witness)
}

/// `(3,k)` with `k >= 3`; the paper's formula in the orientation
/// `D_{k,3}`.
fn describe_three(k: usize, budget: &DrkBudget) -> Result<DrkDescription> {
    let m = k3_minimum(k);
    let lower = scale_lower_bound(3, k);
    let mut notes = Vec::new();
    if !((2 * k + 1) * k.gcd(&3)).is_multiple_of(3) {
        notes.push(format!(
            "(2r+1)/3*gcd(3,r) is not an integer for r={k}; using the ceiling {m}"
        ));
    }
    let mut witnesses = Vec::new();
    let mut validated = false;
    for d in m..2 * m {
        if Tuple::from_scale(d, 3, k).v > budget.max_witness_points {
            break;
        }
        match oracle(d, 3, k, &budget.search) {
            (VerdictKind::Exists, Some(config)) => {
                validated |= d == m;
                witnesses.push(Witness {
                    d,
                    source: WitnessSource::Oracle,
                    config,
                });
            }
            (VerdictKind::NotExists, _) => {
                notes.push(format!(
                    "the oracle proved d={d} absent, contradicting the k=3 closed form"
                ));
                return describe_bounds(3, k, budget).map(|mut desc| {
                    desc.notes.extend(notes);
                    desc
                });
            }
            _ => notes.push(format!("oracle budget exhausted at d={d}; no witness attached")),
        }
    }
    if !validated && k <= 5 {
        notes.push(format!("the least element {m} was not confirmed by the oracle"));
    }
    let inner = NumericalSemigroup::from_generators(&(m..2 * m).collect::<Vec<_>>())?;
    Ok(DrkDescription {
        r: 3,
        k,
        kind: DrkKind::ExactClosedForm,
        inner: Some(inner),
        finite_set: None,
        outer_lower_bound: lower,
        witnesses,
        proven_absent: Vec::new(),
        notes,
    })
}

fn describe_bounds(r: usize, k: usize, budget: &DrkBudget) -> Result<DrkDescription> {
    let lower = scale_lower_bound(r, k);
    let mut notes = Vec::new();
    let mut proven_absent = Vec::new();
    let mut undecided = Vec::new();
    let mut base: Option<Witness> = None;
    for d in lower..lower + budget.scan {
        match oracle(d, r, k, &budget.search) {
            (VerdictKind::Exists, Some(config)) => {
                base = Some(Witness {
                    d,
                    source: WitnessSource::Oracle,
                    config,
                });
                break;
            }
            (VerdictKind::NotExists, _) => proven_absent.push(d),
            _ => {
                notes.push(format!("oracle budget exhausted at d={d}"));
                undecided.push(d);
            }
        }
    }
    let base = match base {
        Some(w) => w,
        None => {
            let config = minimal_nontrivial(r, k, &budget.scaffold).map_err(|e| match e {
                Error::BudgetExhausted(msg) => Error::BudgetExhausted(format!(
                    "no element of D_{{{r},{k}}} found by the oracle or the surgery: {msg}"
                )),
                other => other,
            })?;
            Witness {
                d: tuple_of(&config).d,
                source: WitnessSource::Surgery,
                config,
            }
        }
    };
    let (mut inner, mut witnesses) = theorem_bound(base)?;

    // Enlarge the inner bound with oracle witnesses for its smallest gaps.
    let mut checks = 0;
    let mut exact = true;
    let mut candidate = lower;
    while inner.frobenius() >= candidate as i64 {
        if inner.is_member(candidate) || proven_absent.contains(&candidate) {
            candidate += 1;
            continue;
        }
        if undecided.contains(&candidate) {
            exact = false;
            candidate += 1;
            continue;
        }
        if checks == budget.gap_checks {
            exact = false;
            break;
        }
        checks += 1;
        match oracle(candidate, r, k, &budget.search) {
            (VerdictKind::Exists, Some(config)) => {
                witnesses.push(Witness {
                    d: candidate,
                    source: WitnessSource::Oracle,
                    config,
                });
                inner = generated(&witnesses)?;
            }
            (VerdictKind::NotExists, _) => proven_absent.push(candidate),
            _ => {
                notes.push(format!("oracle budget exhausted at d={candidate}"));
                exact = false;
            }
        }
        candidate += 1;
    }
    let generators = inner.minimal_generators();
    witnesses.retain(|w| generators.contains(&w.d));
    witnesses.sort_by_key(|w| w.d);
    proven_absent.sort_unstable();
    Ok(DrkDescription {
        r,
        k,
        kind: if exact {
            DrkKind::ExactFiniteBase
        } else {
            DrkKind::Bounds
        },
        inner: Some(inner),
        finite_set: None,
        outer_lower_bound: lower,
        witnesses,
        proven_absent,
        notes,
    })
}

/// The inner bound `⟨m, sm+1⟩` of Theorem (Drksemigroup) from a witness
/// for `m`, with the witnesses `[base, sm_plus_one(base)]`.
pub fn theorem_bound(base: Witness) -> Result<(NumericalSemigroup, Vec<Witness>)> {
    let (r, k) = (base.config.r(), base.config.k());
    let s = theorem_copies(r, k);
    let lifted = Witness {
        d: s * base.d + 1,
        source: WitnessSource::Theorem,
        config: sm_plus_one(&find_anchors(&base.config)?)?,
    };
    let witnesses = vec![base, lifted];
    Ok((generated(&witnesses)?, witnesses))
}

fn generated(witnesses: &[Witness]) -> Result<NumericalSemigroup> {
    let gens: Vec<usize> = witnesses.iter().map(|w| w.d).collect();
    NumericalSemigroup::from_generators(&gens)
}
