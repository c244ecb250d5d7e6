//! Exact strong geodetic number with certificates.
//!
//! [`sg_exact`] walks candidate sizes upward from the best lower bound. At
//! each size it visits the supersets of the simplicial vertices in
//! lexicographic order and stops at the first strong geodetic set, so every
//! smaller size has been exhausted when a result is returned.
//! [`sg_oracle`] is an unpruned reference used to validate it.

mod certificate;
mod oracle;
mod search;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundSandwich, BoundSource, BoundsError, TaggedBound};
use crate::geodesics::{GeodesicError, DEFAULT_GEODESIC_CAP};
use crate::graph::{simplicial_vertices, DistanceMatrix, Graph, GraphError};
use crate::vertex_set::VertexSet;

pub use certificate::{pairs, CertificateError, SgCertificate};
pub use search::Feasibility;

/// Default largest order accepted by [`sg_oracle`].
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

/// Hard ceiling for the oracle (its coverage masks are `u64`).
pub const ORACLE_MAX: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Per-pair cap on signature states; exceeding it is an error.
    pub geodesic_cap: usize,
    /// Maximum number of candidate subsets tested before giving up.
    pub subset_budget: Option<u64>,
    pub threads: usize,
    pub oracle_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { geodesic_cap: DEFAULT_GEODESIC_CAP, subset_budget: None, threads: 1, oracle_limit: DEFAULT_ORACLE_LIMIT }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph of order {n} exceeds the solver limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("resource limit: {0}")]
    Geodesic(#[from] GeodesicError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("unknown within budget: {lower} <= sg <= {upper} after {subsets_examined} subsets")]
    Inconclusive { lower: u64, upper: u64, subsets_examined: u64 },
    #[error("graph of order {n} exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("invalid vertex set: {0}")]
    InvalidSet(String),
}

impl SolveError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, SolveError::Geodesic(GeodesicError::CapExceeded { .. }) | SolveError::Inconclusive { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Oracle,
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SgResult {
    pub value: u64,
    pub certificate: SgCertificate,
    pub method: Method,
    pub bounds: BoundSandwich,
    /// Where the search started (exact) or the bound that applies (other methods).
    pub lower_bound_used: TaggedBound,
    pub subsets_examined: u64,
}

fn prepare(g: &Graph, max: usize) -> Result<DistanceMatrix, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if g.n() > max {
        return Err(SolveError::TooLarge { n: g.n(), max });
    }
    Ok(DistanceMatrix::new(g)?)
}

/// Checks whether `set` is a strong geodetic set and, if so, returns an
/// assignment witnessing it. `set` may be given in any order.
pub fn is_strong_geodetic_set(
    g: &Graph,
    dm: &DistanceMatrix,
    set: &[usize],
    cfg: &SolverConfig,
) -> Result<Feasibility, SolveError> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != set.len() {
        return Err(SolveError::InvalidSet("duplicate vertices".into()));
    }
    if let Some(&v) = sorted.iter().find(|&&v| v >= g.n()) {
        return Err(SolveError::InvalidSet(format!("vertex {v} out of range")));
    }
    if g.n() > VertexSet::CAPACITY {
        return Err(SolveError::TooLarge { n: g.n(), max: VertexSet::CAPACITY });
    }
    Ok(search::feasibility(g, dm, &sorted, cfg.geodesic_cap)?)
}

/// Lexicographic `k`-combinations of `items`.
struct Combinations<'a> {
    items: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    fn new(items: &'a [usize], k: usize) -> Self {
        Self { items, idx: (0..k).collect(), done: k > items.len() }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i]).collect();
        let (k, n) = (self.idx.len(), self.items.len());
        match (0..k).rev().find(|&i| self.idx[i] != i + n - k) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out
}

/// Computes `sg(g)` exactly.
///
/// With `threads > 1`, candidates at a fixed size are tested in parallel
/// batches; the reported certificate and `subsets_examined` are those of the
/// sequential run, i.e. the lexicographically first feasible candidate.
pub fn sg_exact(g: &Graph, cfg: &SolverConfig) -> Result<SgResult, SolveError> {
    let dm = prepare(g, VertexSet::CAPACITY)?;
    let bounds = BoundSandwich::new(g, &dm)?;
    let n = g.n();
    let start = bounds.lower();
    if n == 1 {
        let certificate = SgCertificate { set: vec![0], geodesics: Vec::new() };
        return Ok(SgResult {
            value: 1,
            certificate,
            method: Method::Exact,
            bounds,
            lower_bound_used: start,
            subsets_examined: 1,
        });
    }
    let simplicial = simplicial_vertices(g);
    let free: Vec<usize> = (0..n).filter(|v| simplicial.binary_search(v).is_err()).collect();

    let pool = if cfg.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .expect("failed to build solver thread pool"),
        )
    } else {
        None
    };
    let batch = if pool.is_some() { 32 * cfg.threads } else { 1 };

    let mut examined = 0u64;
    for k in start.value as usize..=n {
        let mut candidates = Combinations::new(&free, k - simplicial.len()).map(|c| merge_sorted(&simplicial, &c));
        loop {
            let mut chunk_len = batch;
            if let Some(budget) = cfg.subset_budget {
                chunk_len = chunk_len.min(budget.saturating_sub(examined) as usize);
            }
            let chunk: Vec<Vec<usize>> = candidates.by_ref().take(chunk_len.max(1)).collect();
            if chunk.is_empty() {
                break;
            }
            if cfg.subset_budget.is_some_and(|b| examined >= b) {
                return Err(SolveError::Inconclusive {
                    lower: k as u64,
                    upper: bounds.upper(),
                    subsets_examined: examined,
                });
            }
            let check = |set: &Vec<usize>| search::feasibility(g, &dm, set, cfg.geodesic_cap);
            let verdicts: Vec<_> = match &pool {
                Some(pool) => pool.install(|| chunk.par_iter().map(check).collect()),
                None => chunk.iter().map(check).collect(),
            };
            for verdict in verdicts {
                examined += 1;
                if let Feasibility::Feasible(certificate) = verdict? {
                    return Ok(SgResult {
                        value: k as u64,
                        certificate,
                        method: Method::Exact,
                        bounds,
                        lower_bound_used: start,
                        subsets_examined: examined,
                    });
                }
            }
        }
    }
    unreachable!("V(G) is always a strong geodetic set")
}

/// Reference solver: plain enumeration with no bounds and no simplicial
/// reduction. Accepts graphs up to `cfg.oracle_limit` vertices.
pub fn sg_oracle(g: &Graph, cfg: &SolverConfig) -> Result<SgResult, SolveError> {
    let n = g.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let limit = cfg.oracle_limit.min(ORACLE_MAX);
    if n > limit {
        return Err(SolveError::OracleLimit { n, limit });
    }
    if !g.is_connected() {
        let dm_err = DistanceMatrix::new(g).unwrap_err();
        return Err(dm_err.into());
    }
    let mut cache = std::collections::HashMap::new();
    let mut geodesics = |a: usize, b: usize| {
        cache.entry((a, b)).or_insert_with(|| oracle::shortest_paths_by_deepening(g, a, b)).clone()
    };
    let mut examined = 0u64;
    let first = if n == 1 { 1 } else { 2 };
    for k in first..=n {
        for set in oracle::subsets_of_size(n, k) {
            examined += 1;
            if let Some(certificate) = oracle::oracle_feasible(g, &mut geodesics, &set) {
                let dm = DistanceMatrix::new(g)?;
                let bounds = BoundSandwich::new(g, &dm)?;
                let lower_bound_used = TaggedBound { value: bounds.numeric.lb_trivial, source: BoundSource::Trivial };
                return Ok(SgResult {
                    value: k as u64,
                    certificate,
                    method: Method::Oracle,
                    bounds,
                    lower_bound_used,
                    subsets_examined: examined,
                });
            }
        }
    }
    unreachable!("V(G) is always a strong geodetic set")
}
