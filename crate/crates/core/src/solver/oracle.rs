//! Brute-force reference solver used only to validate [`super::sg_exact`].
//!
//! Nothing here reuses the distance matrix, the geodesic DAG, the bound
//! functions or the signature reduction: geodesics are found by
//! iterative-deepening DFS over simple paths, subsets are visited by
//! increasing size from 2, and every geodesic assignment is explored
//! depth-first. The only pruning is a coverage count (remaining pairs times
//! the longest interior cannot reach the uncovered count) plus a visited set
//! on `(pair index, covered mask)`, which never changes the verdict.

use std::collections::HashSet;

use crate::graph::Graph;

use super::certificate::SgCertificate;

/// All minimum-length simple `a,b`-paths, in lexicographic order.
pub(crate) fn shortest_paths_by_deepening(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, path: &mut Vec<usize>, b: usize, edges_left: usize, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if edges_left == 0 {
            if cur == b {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbors(cur) {
            if !path.contains(&w) {
                path.push(w);
                dfs(g, path, b, edges_left - 1, out);
                path.pop();
            }
        }
    }
    for len in 1..g.n() {
        let mut out = Vec::new();
        dfs(g, &mut vec![a], b, len, &mut out);
        if !out.is_empty() {
            return out;
        }
    }
    Vec::new()
}

fn mask_of(path: &[usize]) -> u64 {
    path.iter().fold(0, |m, &v| m | 1 << v)
}

struct Assignment<'a> {
    options: &'a [Vec<Vec<usize>>],
    full: u64,
    max_interior: usize,
    visited: HashSet<(usize, u64)>,
    choice: Vec<usize>,
}

impl Assignment<'_> {
    fn run(&mut self, idx: usize, covered: u64) -> bool {
        if covered == self.full {
            for c in &mut self.choice[idx..] {
                *c = 0;
            }
            return true;
        }
        let remaining = self.options.len() - idx;
        let uncovered = (self.full & !covered).count_ones() as usize;
        if remaining * self.max_interior < uncovered || !self.visited.insert((idx, covered)) {
            return false;
        }
        for (i, path) in self.options[idx].iter().enumerate() {
            self.choice[idx] = i;
            if self.run(idx + 1, covered | mask_of(path)) {
                return true;
            }
        }
        false
    }
}

/// Tries every geodesic assignment for `set` (sorted) and returns the first
/// covering one found.
pub(crate) fn oracle_feasible(
    g: &Graph,
    geodesics: &mut dyn FnMut(usize, usize) -> Vec<Vec<usize>>,
    set: &[usize],
) -> Option<SgCertificate> {
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if n == 1 {
        return (set == [0]).then(|| SgCertificate { set: vec![0], geodesics: Vec::new() });
    }
    let mut options = Vec::new();
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            options.push(geodesics(a, b));
        }
    }
    let max_interior = options.iter().flat_map(|ps| ps.iter().map(|p| p.len().saturating_sub(2))).max().unwrap_or(0);
    let mut search =
        Assignment { options: &options, full, max_interior, visited: HashSet::new(), choice: vec![0; options.len()] };
    let start = mask_of(set);
    search.run(0, start).then(|| SgCertificate {
        set: set.to_vec(),
        geodesics: options.iter().zip(&search.choice).map(|(ps, &c)| ps[c].clone()).collect(),
    })
}

/// Subsets of `0..n` with `k` elements, as sorted vectors in lexicographic order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}
