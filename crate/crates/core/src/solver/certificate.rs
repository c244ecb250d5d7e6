use serde::Serialize;
use thiserror::Error;

use crate::graph::{simplicial_vertices, DistanceMatrix, Graph};

/// A strong geodetic set with one fixed geodesic per unordered pair.
///
/// `geodesics[i]` belongs to the `i`-th pair `(a, b)`, `a < b`, of `set` in
/// lexicographic order and runs from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SgCertificate {
    pub set: Vec<usize>,
    pub geodesics: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("set is not sorted, has duplicates, or leaves the vertex range")]
    MalformedSet,
    #[error("expected {expected} geodesics, found {found}")]
    PathCount { expected: usize, found: usize },
    #[error("path {index} does not join pair ({a}, {b})")]
    Endpoints { index: usize, a: usize, b: usize },
    #[error("path {index} is not a geodesic")]
    NotGeodesic { index: usize },
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("simplicial vertex {0} is missing from the set")]
    MissingSimplicial(usize),
}

/// Unordered pairs of `set` in lexicographic order.
pub fn pairs(set: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    set.iter().enumerate().flat_map(move |(i, &a)| set[i + 1..].iter().map(move |&b| (a, b)))
}

impl SgCertificate {
    /// Re-checks every certificate invariant from scratch.
    pub fn validate(&self, g: &Graph, dm: &DistanceMatrix) -> Result<(), CertificateError> {
        let n = g.n();
        if self.set.windows(2).any(|w| w[0] >= w[1]) || self.set.iter().any(|&v| v >= n) {
            return Err(CertificateError::MalformedSet);
        }
        if let Some(&v) = simplicial_vertices(g).iter().find(|v| self.set.binary_search(v).is_err()) {
            return Err(CertificateError::MissingSimplicial(v));
        }
        let k = self.set.len();
        let expected = k * k.saturating_sub(1) / 2;
        if self.geodesics.len() != expected {
            return Err(CertificateError::PathCount { expected, found: self.geodesics.len() });
        }
        let mut covered = vec![false; n];
        for &s in &self.set {
            covered[s] = true;
        }
        for (index, ((a, b), path)) in pairs(&self.set).zip(&self.geodesics).enumerate() {
            if path.first() != Some(&a) || path.last() != Some(&b) {
                return Err(CertificateError::Endpoints { index, a, b });
            }
            let is_geodesic = path.len() as u32 == dm.get(a, b) + 1
                && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && path.iter().enumerate().all(|(i, &w)| dm.get(a, w) == i as u32);
            if !is_geodesic {
                return Err(CertificateError::NotGeodesic { index });
            }
            for &w in path {
                covered[w] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(CertificateError::Uncovered(v));
        }
        Ok(())
    }
}
