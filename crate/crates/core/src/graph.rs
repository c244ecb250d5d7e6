//! Simple undirected graphs, BFS distances and structural predicates.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(usize, usize),
}

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Self { adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.n(), &edges).expect("relabeling by a permutation keeps the graph simple")
    }

    /// BFS hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// True if the graph is isomorphic to a path `P_n` (`n >= 1`).
    pub fn is_path(&self) -> bool {
        let n = self.n();
        n >= 1 && self.m() == n - 1 && self.adj.iter().all(|l| l.len() <= 2) && self.is_connected()
    }

    /// True if every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Whether the neighborhood of `v` induces a clique.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nb = &self.adj[v];
        nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }
}

/// Sorted list of vertices whose neighborhoods are cliques.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.is_simplicial(v)).collect()
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    eccentricity: Vec<u32>,
    diameter: u32,
    radius: u32,
}

impl DistanceMatrix {
    /// BFS from every vertex. Disconnected input is reported with the first
    /// unreachable pair found.
    pub fn new(g: &Graph) -> Result<Self, GraphError> {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            for (t, d) in g.bfs(s).into_iter().enumerate() {
                match d {
                    Some(d) => dist.push(d),
                    None => return Err(GraphError::Disconnected(s, t)),
                }
            }
        }
        let eccentricity: Vec<u32> =
            (0..n).map(|u| dist[u * n..(u + 1) * n].iter().copied().max().unwrap_or(0)).collect();
        let diameter = eccentricity.iter().copied().max().unwrap_or(0);
        let radius = eccentricity.iter().copied().min().unwrap_or(0);
        Ok(Self { n, dist, eccentricity, diameter, radius })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.eccentricity[u]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// A pair `(u, v)`, `u < v`, realizing the diameter (lexicographically first).
    pub fn diametral_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v))).find(|&(u, v)| self.get(u, v) == self.diameter)
    }
}

/// Shorthand for [`DistanceMatrix::new`].
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    DistanceMatrix::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn build_small_graphs() {
        let p2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(p2.is_path());
        assert_eq!(p2.m(), 1);

        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.is_complete());
        assert_eq!(k3.neighbors(0), &[1, 2]);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(4, &[(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(4, &[(1, 0), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange(0, 3, 3)));
    }

    #[test]
    fn path_distances() {
        let dm = DistanceMatrix::new(&generators::path(5).unwrap()).unwrap();
        assert_eq!(dm.diameter(), 4);
        assert_eq!(dm.radius(), 2);
        assert_eq!(dm.diametral_pair(), Some((0, 4)));
    }

    #[test]
    fn bipartite_diameter() {
        let dm = DistanceMatrix::new(&generators::complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(dm.diameter(), 2);
        assert_eq!(dm.get(0, 1), 2);
        assert_eq!(dm.get(0, 3), 1);
    }

    #[test]
    fn disconnected_reports_witness() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(DistanceMatrix::new(&g), Err(GraphError::Disconnected(0, 2)));
        assert!(!g.is_connected());
    }

    #[test]
    fn simplicial() {
        assert_eq!(simplicial_vertices(&generators::complete(5).unwrap()), vec![0, 1, 2, 3, 4]);
        assert_eq!(simplicial_vertices(&generators::path(4).unwrap()), vec![0, 3]);
        assert!(simplicial_vertices(&generators::cycle(4).unwrap()).is_empty());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let dm = DistanceMatrix::new(&g).unwrap();
        assert_eq!((dm.diameter(), dm.radius()), (0, 0));
        assert!(g.is_path() && g.is_complete());
        assert_eq!(simplicial_vertices(&g), vec![0]);
    }
}
