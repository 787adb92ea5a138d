//! Numerical semigroups given by generators.
//!
//! Membership, the Frobenius number and the gaps all come from the Apéry
//! set with respect to the smallest generator `m`: `d` is an element iff
//! `d >= ap[d mod m]`. The Apéry set is the table of shortest paths in the
//! residue graph modulo `m`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest genus for which [`NumericalSemigroup::summary`] lists the gaps.
pub const GAP_LISTING_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    /// `apery[c]`: least element congruent to `c` modulo `generators[0]`.
    apery: Vec<usize>,
    /// Index of the generator last added on the way to `apery[c]`.
    via: Vec<usize>,
}

/// Shortest paths from residue 0 in the graph `c -> (c + g) mod modulus`
/// weighted by `g`. Unreachable residues keep `usize::MAX`.
fn residue_paths(modulus: usize, generators: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; modulus];
    let mut via = vec![usize::MAX; modulus];
    let mut heap = BinaryHeap::new();
    dist[0] = 0;
    heap.push(Reverse((0usize, 0usize)));
    while let Some(Reverse((d, c))) = heap.pop() {
        if d > dist[c] {
            continue;
        }
        for (gi, &g) in generators.iter().enumerate() {
            let next = (c + g) % modulus;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                via[next] = gi;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    (dist, via)
}

impl NumericalSemigroup {
    /// `<a_1, ..., a_l>`; the generators must be positive with gcd 1.
    pub fn from_generators(gens: &[usize]) -> Result<Self> {
        let mut generators: Vec<usize> = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() || generators[0] == 0 {
            return Err(Error::InfeasibleParameters(
                "generators must be a nonempty set of positive integers".into(),
            ));
        }
        let gcd = generators.iter().fold(0, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotNumerical { generators, gcd });
        }
        let (apery, via) = residue_paths(generators[0], &generators);
        Ok(NumericalSemigroup {
            generators,
            apery,
            via,
        })
    }

    /// Sorted, deduplicated generators as given (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The minimal generating set.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &g in &self.generators {
            let others: Vec<usize> = out.clone();
            if others.is_empty() || !representable(g, &others) {
                out.push(g);
            }
        }
        out
    }

    pub fn multiplicity(&self) -> usize {
        self.generators[0]
    }

    pub fn is_member(&self, d: usize) -> bool {
        let m = self.multiplicity();
        d >= self.apery[d % m]
    }

    /// When `d` is an element, coefficients `n_i` (aligned with
    /// [`generators`](Self::generators)) with `sum n_i a_i = d`.
    pub fn contains(&self, d: usize) -> Option<Vec<usize>> {
        if !self.is_member(d) {
            return None;
        }
        let m = self.multiplicity();
        let mut coeffs = vec![0; self.generators.len()];
        let mut c = d % m;
        coeffs[0] = (d - self.apery[c]) / m;
        while c != 0 {
            let gi = self.via[c];
            coeffs[gi] += 1;
            let g = self.generators[gi];
            c = (c + m - g % m) % m;
        }
        Some(coeffs)
    }

    /// Largest gap, `-1` when the semigroup is all of `N_0`.
    pub fn frobenius(&self) -> i64 {
        let max = *self.apery.iter().max().expect("modulus is positive");
        max as i64 - self.multiplicity() as i64
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        let m = self.multiplicity();
        self.apery.iter().map(|a| a / m).sum()
    }

    pub fn gaps(&self) -> Vec<usize> {
        let f = self.frobenius();
        if f < 0 {
            return Vec::new();
        }
        (1..=f as usize).filter(|&d| !self.is_member(d)).collect()
    }

    /// Least element in each residue class modulo `m`, indexed by residue.
    pub fn apery_set(&self, m: usize) -> Result<Vec<usize>> {
        if m == 0 || !self.is_member(m) {
            return Err(Error::NotMember(m));
        }
        if m == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        Ok(residue_paths(m, &self.generators).0)
    }

    pub fn summary(&self) -> SemigroupSummary {
        let genus = self.genus();
        SemigroupSummary {
            generators: self.minimal_generators(),
            frobenius: self.frobenius(),
            genus,
            gaps: (genus <= GAP_LISTING_LIMIT).then(|| self.gaps()),
        }
    }
}

fn representable(d: usize, parts: &[usize]) -> bool {
    let mut reach = vec![false; d + 1];
    reach[0] = true;
    for x in 1..=d {
        reach[x] = parts.iter().any(|&p| p <= x && reach[x - p]);
    }
    reach[d]
}

/// JSON summary: `{"generators":[...],"frobenius":n,"genus":g,"gaps":[...]}`.
/// `gaps` is `null` when there are more than [`GAP_LISTING_LIMIT`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub generators: Vec<usize>,
    pub frobenius: i64,
    pub genus: usize,
    pub gaps: Option<Vec<usize>>,
}

/// The additive monoid generated by arbitrary positive integers, without
/// the gcd-1 requirement. Its complement is infinite when the gcd exceeds 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedMonoid {
    gcd: usize,
    reduced: NumericalSemigroup,
}

impl GeneratedMonoid {
    pub fn new(gens: &[usize]) -> Result<Self> {
        let gcd = gens.iter().fold(0, |acc, &g| acc.gcd(&g));
        if gcd == 0 {
            return Err(Error::InfeasibleParameters(
                "generators must be a nonempty set of positive integers".into(),
            ));
        }
        let reduced: Vec<usize> = gens.iter().map(|g| g / gcd).collect();
        Ok(GeneratedMonoid {
            gcd,
            reduced: NumericalSemigroup::from_generators(&reduced)?,
        })
    }

    pub fn gcd(&self) -> usize {
        self.gcd
    }

    pub fn is_member(&self, d: usize) -> bool {
        d.is_multiple_of(self.gcd) && self.reduced.is_member(d / self.gcd)
    }
}

/// `D_{2,k}`: `<k+1, ..., 2k+1>` for even `k`, `<(k+1)/2, ..., k>` for odd
/// `k`.
pub fn d2k(k: usize) -> Result<NumericalSemigroup> {
    if k < 2 {
        return Err(Error::InfeasibleParameters(format!("d2k needs k >= 2, got {k}")));
    }
    let gens: Vec<usize> = if k.is_multiple_of(2) {
        (k + 1..=2 * k + 1).collect()
    } else {
        (k.div_ceil(2)..=k).collect()
    };
    NumericalSemigroup::from_generators(&gens)
}
