//! Exact feasibility test for a candidate strong geodetic set.
//!
//! Only coverage of `V \ S` matters, so each pair contributes the distinct
//! values of `interior ∩ (V \ S)` over its geodesics (see
//! [`GeodesicFamily::interior_signatures`]); values strictly contained in
//! another value of the same pair are dropped. The search then assigns one
//! option per pair, most-constrained pair first, and prunes on
//!
//! * the union of all remaining options failing to contain the uncovered set,
//! * the sum over remaining pairs of their best new coverage falling short of
//!   the number of uncovered vertices,
//! * `(depth, covered)` states already shown to fail.

use std::collections::HashSet;

use crate::geodesics::{GeodesicError, GeodesicFamily, Signature};
use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

use super::certificate::{pairs, SgCertificate};

/// Outcome of a feasibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(SgCertificate),
    /// The search was exhausted. `best_covered` is the largest number of
    /// vertices (set members included) covered by any partial assignment the
    /// search visited.
    Infeasible {
        best_covered: usize,
    },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn certificate(&self) -> Option<&SgCertificate> {
        match self {
            Feasibility::Feasible(c) => Some(c),
            Feasibility::Infeasible { .. } => None,
        }
    }
}

struct PairOptions {
    /// Position of the pair in lexicographic pair order.
    pair_index: usize,
    options: Vec<Signature>,
}

fn undominated(mut sigs: Vec<Signature>) -> Vec<Signature> {
    let keep: Vec<bool> = (0..sigs.len())
        .map(|i| {
            !sigs.iter().enumerate().any(|(j, other)| {
                j != i && sigs[i].covered.is_subset(&other.covered) && sigs[i].covered != other.covered
            })
        })
        .collect();
    let mut k = keep.iter();
    sigs.retain(|_| *k.next().unwrap());
    sigs
}

struct Search<'a> {
    pairs: &'a [PairOptions],
    relevant: VertexSet,
    /// `suffix_union[i]`: union of every option of pairs `i..`.
    suffix_union: Vec<VertexSet>,
    failed: HashSet<(usize, VertexSet)>,
    choice: Vec<usize>,
    best: usize,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, covered: VertexSet) -> bool {
        let uncovered = self.relevant.difference(covered);
        self.best = self.best.max(covered.len());
        if uncovered.is_empty() {
            for c in &mut self.choice[depth..] {
                *c = 0;
            }
            return true;
        }
        if depth == self.pairs.len() || !uncovered.is_subset(&self.suffix_union[depth]) {
            return false;
        }
        let capacity: usize = self.pairs[depth..]
            .iter()
            .map(|p| p.options.iter().map(|o| o.covered.intersection(uncovered).len()).max().unwrap_or(0))
            .sum();
        if capacity < uncovered.len() || self.failed.contains(&(depth, covered)) {
            return false;
        }
        let options = &self.pairs[depth].options;
        let mut order: Vec<(usize, usize)> =
            options.iter().enumerate().map(|(i, o)| (o.covered.intersection(uncovered).len(), i)).collect();
        // larger new coverage first, then signature order
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, i) in order {
            self.choice[depth] = i;
            let next = covered.union(options[i].covered);
            if self.run(depth + 1, next) {
                return true;
            }
        }
        self.failed.insert((depth, covered));
        false
    }
}

/// Decides whether `set` (sorted, distinct, in range, `n <= 128`) is a strong
/// geodetic set of `g`.
pub(crate) fn feasibility(
    g: &Graph,
    dm: &DistanceMatrix,
    set: &[usize],
    cap: usize,
) -> Result<Feasibility, GeodesicError> {
    let n = g.n();
    if n > VertexSet::CAPACITY {
        return Err(GeodesicError::TooLarge(n));
    }
    if n == 1 {
        return Ok(if set == [0] {
            Feasibility::Feasible(SgCertificate { set: vec![0], geodesics: Vec::new() })
        } else {
            Feasibility::Infeasible { best_covered: 0 }
        });
    }
    if set.len() < 2 {
        return Ok(Feasibility::Infeasible { best_covered: set.len() });
    }
    let in_set: VertexSet = set.iter().copied().collect();
    let relevant = VertexSet::full(n).difference(in_set);

    let mut all = Vec::new();
    for (pair_index, (a, b)) in pairs(set).enumerate() {
        let fam = GeodesicFamily::new(g, dm, a, b).expect("pair endpoints are distinct and in range");
        let options = undominated(fam.interior_signatures(relevant, cap)?);
        all.push(PairOptions { pair_index, options });
    }
    all.sort_by_key(|p| (p.options.len(), p.pair_index));

    let mut suffix_union = vec![VertexSet::empty(); all.len() + 1];
    for i in (0..all.len()).rev() {
        let here = all[i].options.iter().fold(VertexSet::empty(), |acc, o| acc.union(o.covered));
        suffix_union[i] = suffix_union[i + 1].union(here);
    }

    let mut search =
        Search { pairs: &all, relevant, suffix_union, failed: HashSet::new(), choice: vec![0; all.len()], best: 0 };
    if !search.run(0, VertexSet::empty()) {
        return Ok(Feasibility::Infeasible { best_covered: set.len() + search.best });
    }
    let mut geodesics = vec![Vec::new(); all.len()];
    for (p, &c) in all.iter().zip(&search.choice) {
        geodesics[p.pair_index] = p.options[c].path.clone();
    }
    Ok(Feasibility::Feasible(SgCertificate { set: set.to_vec(), geodesics }))
}
