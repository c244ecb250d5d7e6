//! Shortest-path DAGs between vertex pairs.
//!
//! A [`GeodesicFamily`] stores, for a pair `(u, v)`, the subgraph of vertices
//! `w` with `d(u, w) + d(w, v) = d(u, v)` oriented away from `u`. Every
//! source-to-sink path in it is a `u,v`-geodesic and vice versa.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

/// Default per-pair limit on materialized geodesics / signature states.
pub const DEFAULT_GEODESIC_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeodesicError {
    #[error("geodesic endpoints must differ (got {0} twice)")]
    SameEndpoint(usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("pair ({u}, {v}) exceeds the geodesic cap of {cap}")]
    CapExceeded { u: usize, v: usize, cap: usize },
    #[error("graph of order {0} exceeds the vertex-set capacity of 128")]
    TooLarge(usize),
}

#[derive(Debug, Clone)]
pub struct GeodesicFamily {
    u: usize,
    v: usize,
    length: u32,
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
    /// Vertices on at least one geodesic, grouped by distance from `u`.
    layers: Vec<Vec<usize>>,
    count: u64,
}

/// Result of [`GeodesicFamily::enumerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub paths: Vec<Vec<usize>>,
    pub truncated: bool,
}

/// A geodesic together with the relevant vertices its interior covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub path: Vec<usize>,
    pub covered: VertexSet,
}

impl GeodesicFamily {
    pub fn new(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> Result<Self, GeodesicError> {
        let n = g.n();
        for x in [u, v] {
            if x >= n {
                return Err(GeodesicError::OutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GeodesicError::SameEndpoint(u));
        }
        let length = dm.get(u, v);
        let mut layers = vec![Vec::new(); length as usize + 1];
        let on = |w: usize| dm.get(u, w) + dm.get(w, v) == length;
        for w in (0..n).filter(|&w| on(w)) {
            layers[dm.get(u, w) as usize].push(w);
        }
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for layer in &layers[1..] {
            for &w in layer {
                let dw = dm.get(u, w);
                for &x in g.neighbors(w) {
                    if on(x) && dm.get(u, x) + 1 == dw {
                        preds[w].push(x);
                        succs[x].push(w);
                    }
                }
            }
        }
        for s in &mut succs {
            s.sort_unstable();
        }
        let mut paths_to = vec![0u64; n];
        paths_to[u] = 1;
        for layer in &layers[1..] {
            for &w in layer {
                paths_to[w] = preds[w].iter().fold(0u64, |acc, &x| acc.saturating_add(paths_to[x]));
            }
        }
        Ok(Self { u, v, length, preds, succs, layers, count: paths_to[v] })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// The common length `d(u, v)` of every geodesic in the family.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// Number of distinct geodesics, saturating at `u64::MAX`.
    pub fn count(&self) -> u64 {
        self.count
    }

    /// Predecessors of `w` in the DAG, ascending.
    pub fn predecessors(&self, w: usize) -> &[usize] {
        &self.preds[w]
    }

    pub fn successors(&self, w: usize) -> &[usize] {
        &self.succs[w]
    }

    /// Vertices lying on some geodesic, in increasing distance from `u`.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().flatten().copied()
    }

    /// The lexicographically smallest geodesic.
    pub fn first(&self) -> Vec<usize> {
        let mut path = vec![self.u];
        let mut cur = self.u;
        while cur != self.v {
            cur = self.succs[cur][0];
            path.push(cur);
        }
        path
    }

    /// Lists geodesics in lexicographic order, stopping after `cap`.
    pub fn enumerate(&self, cap: usize) -> Enumeration {
        assert!(cap >= 1, "enumeration cap must be positive");
        let mut paths = Vec::new();
        let mut stack = vec![self.u];
        self.enumerate_from(&mut stack, cap, &mut paths);
        Enumeration { paths, truncated: self.count > cap as u64 }
    }

    fn enumerate_from(&self, stack: &mut Vec<usize>, cap: usize, out: &mut Vec<Vec<usize>>) {
        let cur = *stack.last().unwrap();
        if cur == self.v {
            out.push(stack.clone());
            return;
        }
        for &w in &self.succs[cur] {
            if out.len() >= cap {
                return;
            }
            stack.push(w);
            self.enumerate_from(stack, cap, out);
            stack.pop();
        }
    }

    /// One geodesic per distinct value of `interior ∩ relevant`, namely the
    /// lexicographically least one, sorted by path.
    ///
    /// Works layer by layer over `(vertex, covered-so-far)` states, so the
    /// cost is bounded by the number of distinct states rather than the
    /// number of geodesics. More than `cap` live states is an error.
    pub fn interior_signatures(&self, relevant: VertexSet, cap: usize) -> Result<Vec<Signature>, GeodesicError> {
        let n = self.preds.len();
        if n > VertexSet::CAPACITY {
            return Err(GeodesicError::TooLarge(n));
        }
        let exceeded = GeodesicError::CapExceeded { u: self.u, v: self.v, cap };
        let mut states: Vec<BTreeMap<VertexSet, Vec<usize>>> = vec![BTreeMap::new(); n];
        states[self.u].insert(VertexSet::empty(), vec![self.u]);
        let mut live = 1usize;
        for layer in &self.layers[1..] {
            for &w in layer {
                let gain =
                    if w != self.v && relevant.contains(w) { VertexSet::singleton(w) } else { VertexSet::empty() };
                let mut here: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
                for &x in &self.preds[w] {
                    for (mask, prefix) in &states[x] {
                        let key = mask.union(gain);
                        let better = here.get(&key).is_none_or(|cur| lex_less_extended(prefix, cur));
                        if better {
                            let mut p = prefix.clone();
                            p.push(w);
                            here.insert(key, p);
                        }
                    }
                }
                live += here.len();
                if live > cap {
                    return Err(exceeded);
                }
                states[w] = here;
            }
        }
        let mut out: Vec<Signature> = std::mem::take(&mut states[self.v])
            .into_iter()
            .map(|(covered, path)| Signature { path, covered })
            .collect();
        out.sort_by(|a, b| a.path.cmp(&b.path));
        Ok(out)
    }
}

/// Whether `prefix + [w]` sorts before `current`, where `current` already
/// ends in `w` and has the same length.
fn lex_less_extended(prefix: &[usize], current: &[usize]) -> bool {
    prefix < &current[..prefix.len()]
}

/// Convenience wrapper around [`GeodesicFamily::new`].
pub fn geodesic_family(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> Result<GeodesicFamily, GeodesicError> {
    GeodesicFamily::new(g, dm, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, Petersen};

    fn family(g: &Graph, u: usize, v: usize) -> GeodesicFamily {
        let dm = DistanceMatrix::new(g).unwrap();
        GeodesicFamily::new(g, &dm, u, v).unwrap()
    }

    /// Every simple `u,v`-path of minimum length, by exhaustive DFS without
    /// using the distance matrix.
    fn brute_force_geodesics(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
        fn dfs(g: &Graph, path: &mut Vec<usize>, v: usize, all: &mut Vec<Vec<usize>>) {
            let cur = *path.last().unwrap();
            if cur == v {
                all.push(path.clone());
                return;
            }
            for &w in g.neighbors(cur) {
                if !path.contains(&w) {
                    path.push(w);
                    dfs(g, path, v, all);
                    path.pop();
                }
            }
        }
        let mut all = Vec::new();
        dfs(g, &mut vec![u], v, &mut all);
        let best = all.iter().map(Vec::len).min().unwrap();
        let mut short: Vec<_> = all.into_iter().filter(|p| p.len() == best).collect();
        short.sort();
        short
    }

    #[test]
    fn path_graph_has_one_geodesic() {
        let g = generators::path(5).unwrap();
        let fam = family(&g, 0, 4);
        assert_eq!(fam.count(), 1);
        assert_eq!(fam.enumerate(10).paths, vec![vec![0, 1, 2, 3, 4]]);
        let p3 = generators::path(3).unwrap();
        assert_eq!(family(&p3, 0, 2).enumerate(10), Enumeration { paths: vec![vec![0, 1, 2]], truncated: false });
    }

    #[test]
    fn bipartite_same_side_pairs() {
        let g = generators::complete_bipartite(3, 4).unwrap();
        assert_eq!(family(&g, 0, 1).count(), 4);
        assert_eq!(family(&g, 3, 4).count(), 3);
        let k23 = generators::complete_bipartite(2, 3).unwrap();
        let e = family(&k23, 0, 1).enumerate(10);
        assert_eq!(e.paths, vec![vec![0, 2, 1], vec![0, 3, 1], vec![0, 4, 1]]);
        assert!(!e.truncated);
    }

    #[test]
    fn cap_one_truncates() {
        let g = generators::complete_bipartite(2, 3).unwrap();
        let e = family(&g, 0, 1).enumerate(1);
        assert_eq!(e.paths.len(), 1);
        assert!(e.truncated);
        let single = family(&g, 0, 2).enumerate(1);
        assert!(!single.truncated);
    }

    #[test]
    fn petersen_outer_pair() {
        let g = generators::petersen().graph;
        let fam = family(&g, Petersen::u(0), Petersen::u(3));
        assert_eq!(fam.count(), 1);
        assert_eq!(fam.first(), vec![Petersen::u(0), Petersen::u(4), Petersen::u(3)]);
        assert_eq!(fam.enumerate(10).paths, brute_force_geodesics(&g, 0, 3));
    }

    #[test]
    fn same_endpoint_rejected() {
        let g = generators::path(3).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        assert_eq!(GeodesicFamily::new(&g, &dm, 1, 1).unwrap_err(), GeodesicError::SameEndpoint(1));
        assert!(matches!(GeodesicFamily::new(&g, &dm, 0, 7), Err(GeodesicError::OutOfRange { .. })));
    }

    #[test]
    fn signatures_bipartite() {
        let g = generators::complete_bipartite(4, 4).unwrap();
        let fam = family(&g, 0, 1);
        let opposite: VertexSet = (4..8).collect();
        let sigs = fam.interior_signatures(opposite, DEFAULT_GEODESIC_CAP).unwrap();
        assert_eq!(sigs.len(), 4);
        assert_eq!(sigs[0].path, vec![0, 4, 1]);
        assert_eq!(sigs[0].covered.to_vec(), vec![4]);
        let none = fam.interior_signatures(VertexSet::empty(), DEFAULT_GEODESIC_CAP).unwrap();
        assert_eq!(none.len(), 1);
        assert_eq!(none[0].path, vec![0, 4, 1]);
    }

    #[test]
    fn signatures_unique_path() {
        let g = generators::path(6).unwrap();
        let sigs = family(&g, 0, 5).interior_signatures(VertexSet::singleton(2), 10).unwrap();
        assert_eq!(sigs.len(), 1);
        assert_eq!(sigs[0].covered.to_vec(), vec![2]);
    }

    #[test]
    fn signature_cap() {
        let g = generators::complete_bipartite(2, 6).unwrap();
        let fam = family(&g, 0, 1);
        let err = fam.interior_signatures((2..8).collect(), 3).unwrap_err();
        assert!(matches!(err, GeodesicError::CapExceeded { cap: 3, .. }));
    }

    #[test]
    fn dag_matches_brute_force_on_small_corpus() {
        for seed in 0..30 {
            let g = generators::random_connected(7, 0.35, seed).unwrap();
            let dm = DistanceMatrix::new(&g).unwrap();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u == v {
                        continue;
                    }
                    let fam = GeodesicFamily::new(&g, &dm, u, v).unwrap();
                    let brute = brute_force_geodesics(&g, u, v);
                    assert_eq!(fam.count(), brute.len() as u64);
                    assert_eq!(fam.enumerate(10_000).paths, brute);
                }
            }
        }
    }

    #[test]
    fn signatures_match_enumerate_then_dedup() {
        for seed in 0..20 {
            let g = generators::random_connected(8, 0.3, 100 + seed).unwrap();
            let dm = DistanceMatrix::new(&g).unwrap();
            let relevant: VertexSet = (0..g.n()).filter(|v| !(v + seed as usize).is_multiple_of(3)).collect();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    let fam = GeodesicFamily::new(&g, &dm, u, v).unwrap();
                    let mut expected: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
                    for p in fam.enumerate(100_000).paths {
                        let covered: VertexSet =
                            p[1..p.len() - 1].iter().copied().filter(|&w| relevant.contains(w)).collect();
                        expected.entry(covered).or_insert(p);
                    }
                    let mut expected: Vec<_> =
                        expected.into_iter().map(|(covered, path)| Signature { path, covered }).collect();
                    expected.sort_by(|a, b| a.path.cmp(&b.path));
                    assert_eq!(fam.interior_signatures(relevant, DEFAULT_GEODESIC_CAP).unwrap(), expected);
                }
            }
        }
    }
}
