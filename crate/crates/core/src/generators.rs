//! Deterministic graph constructors.
//!
//! Labelings are fixed so that certificates are reproducible:
//!
//! * `path(n)`: `0 - 1 - ... - (n-1)`.
//! * `complete_bipartite(n1, n2)`: `X = 0..n1`, `Y = n1..n1+n2`.
//! * `petersen()`: outer cycle `u_i = i`, inner pentagram `v_i = 5 + i`.
//! * `g_k(k)`, `g_kd(k, d)`: branch vertices `0..k`, then the subdivision
//!   vertices of each edge `{i, j}` of `K_k` (`i < j`, lexicographic edge
//!   order), with `e^1` adjacent to `i`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("{family}: {param} must be at least {min}, got {got}")]
    TooSmall { family: &'static str, param: &'static str, min: usize, got: usize },
    #[error("edge probability must lie in [0, 1], got {0}")]
    Probability(f64),
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {message}")]
    BadParams { family: String, message: String },
}

fn at_least(family: &'static str, param: &'static str, min: usize, got: usize) -> Result<(), GeneratorError> {
    if got < min {
        Err(GeneratorError::TooSmall { family, param, min, got })
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid edge list")
}

pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    at_least("path", "n", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    at_least("cycle", "n", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    at_least("complete", "n", 1, n)?;
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(build(n, &edges))
}

pub fn complete_bipartite(n1: usize, n2: usize) -> Result<Graph, GeneratorError> {
    at_least("complete_bipartite", "n1", 1, n1)?;
    at_least("complete_bipartite", "n2", 1, n2)?;
    let edges: Vec<_> = (0..n1).flat_map(|x| (n1..n1 + n2).map(move |y| (x, y))).collect();
    Ok(build(n1 + n2, &edges))
}

/// The Petersen graph together with its `u_i` / `v_i` naming.
#[derive(Debug, Clone)]
pub struct Petersen {
    pub graph: Graph,
}

impl Petersen {
    /// Outer-cycle vertex `u_i`.
    pub fn u(i: usize) -> usize {
        i % 5
    }

    /// Inner vertex `v_i`.
    pub fn v(i: usize) -> usize {
        5 + i % 5
    }

    /// Human-readable name of a vertex label.
    pub fn name(label: usize) -> String {
        if label < 5 {
            format!("u{label}")
        } else {
            format!("v{}", label - 5)
        }
    }
}

pub fn petersen() -> Petersen {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((Petersen::u(i), Petersen::u(i + 1)));
        edges.push((Petersen::v(i), Petersen::v(i + 2)));
        edges.push((Petersen::u(i), Petersen::v(i)));
    }
    Petersen { graph: build(10, &edges) }
}

/// Edges of `K_k` in lexicographic order.
fn clique_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

/// Subdivision of `K_k` whose subdivision vertices are joined into a clique.
pub fn g_k(k: usize) -> Result<Graph, GeneratorError> {
    at_least("g_k", "k", 3, k)?;
    let branch_edges = clique_edges(k);
    let n = k + branch_edges.len();
    let mut edges = Vec::new();
    for (idx, &(i, j)) in branch_edges.iter().enumerate() {
        edges.push((i, k + idx));
        edges.push((k + idx, j));
    }
    for a in k..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Ok(build(n, &edges))
}

/// Label of the `t`-th internal vertex (`1 <= t <= d-1`) on subdivided edge
/// number `edge_index` in a `g_kd(k, d)` graph.
pub fn g_kd_internal(k: usize, d: usize, edge_index: usize, t: usize) -> usize {
    debug_assert!((1..d).contains(&t));
    k + edge_index * (d - 1) + (t - 1)
}

/// Positions on each subdivided edge that belong to the clique set: the
/// middle vertex for even `d`, the two near-middle vertices for odd `d`.
pub fn g_kd_clique_positions(d: usize) -> Vec<usize> {
    if d.is_multiple_of(2) {
        vec![d / 2]
    } else {
        vec![(d - 1) / 2, d.div_ceil(2)]
    }
}

/// `(d-1)`-fold subdivision of `K_k` with the near-middle vertices of every
/// subdivided edge joined into a clique.
pub fn g_kd(k: usize, d: usize) -> Result<Graph, GeneratorError> {
    at_least("g_kd", "k", 3, k)?;
    at_least("g_kd", "d", 2, d)?;
    let branch_edges = clique_edges(k);
    let n = k + (d - 1) * branch_edges.len();
    let mut edges = Vec::new();
    let mut clique = Vec::new();
    let positions = g_kd_clique_positions(d);
    for (idx, &(i, j)) in branch_edges.iter().enumerate() {
        let mut prev = i;
        for t in 1..d {
            let x = g_kd_internal(k, d, idx, t);
            edges.push((prev, x));
            prev = x;
        }
        edges.push((prev, j));
        clique.extend(positions.iter().map(|&t| g_kd_internal(k, d, idx, t)));
    }
    let mut edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
    for (a_i, &a) in clique.iter().enumerate() {
        for &b in &clique[a_i + 1..] {
            edges.insert((a, b));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Ok(build(n, &edges))
}

/// Resampling attempts before [`random_connected`] falls back to overlaying a
/// spanning tree.
pub const RESAMPLE_LIMIT: usize = 1000;

/// Seeded Erdős–Rényi sample conditioned on connectivity.
///
/// Each attempt includes every pair independently with probability `p`. The
/// first connected attempt is returned; after [`RESAMPLE_LIMIT`] disconnected
/// attempts, a random spanning tree (drawn from the same generator) is added
/// to the last sample.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    at_least("random", "n", 1, n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = clique_edges(n);
    let mut edges = Vec::new();
    for _ in 0..RESAMPLE_LIMIT {
        edges = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        let g = build(n, &edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        let e = (parent.min(child), parent.max(child));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Ok(build(n, &edges))
}

/// Syntax accepted by [`named`].
pub const NAMED_SYNTAX: &str =
    "path:N | cycle:N | complete:N | kmn:N1,N2 | petersen | gk:K | gkd:K,D | random:N,P,SEED";

/// Builds a graph from a `family:params` string (see [`NAMED_SYNTAX`]).
pub fn named(spec: &str) -> Result<Graph, GeneratorError> {
    let (family, params) = spec.split_once(':').unwrap_or((spec, ""));
    let bad = |message: &str| GeneratorError::BadParams { family: family.to_string(), message: message.to_string() };
    let fields: Vec<&str> = if params.is_empty() { Vec::new() } else { params.split(',').map(str::trim).collect() };
    let ints = |count: usize| -> Result<Vec<usize>, GeneratorError> {
        if fields.len() != count {
            return Err(bad(&format!("expected {count} integer parameter(s)")));
        }
        fields.iter().map(|f| f.parse().map_err(|_| bad(&format!("not an integer: {f:?}")))).collect()
    };
    match family {
        "path" => path(ints(1)?[0]),
        "cycle" => cycle(ints(1)?[0]),
        "complete" => complete(ints(1)?[0]),
        "kmn" | "complete_bipartite" => {
            let v = ints(2)?;
            complete_bipartite(v[0], v[1])
        }
        "petersen" => {
            ints(0)?;
            Ok(petersen().graph)
        }
        "gk" => g_k(ints(1)?[0]),
        "gkd" => {
            let v = ints(2)?;
            g_kd(v[0], v[1])
        }
        "random" => {
            if fields.len() != 3 {
                return Err(bad("expected N,P,SEED"));
            }
            let n = fields[0].parse().map_err(|_| bad("N must be an integer"))?;
            let p = fields[1].parse().map_err(|_| bad("P must be a number"))?;
            let seed = fields[2].parse().map_err(|_| bad("SEED must be an integer"))?;
            random_connected(n, p, seed)
        }
        other => Err(GeneratorError::UnknownFamily(other.to_string())),
    }
}
