//! Closed-form bounds on the strong geodetic number in terms of order and
//! diameter.
//!
//! The ceilings are evaluated with integer arithmetic: each bound is the
//! least `r` satisfying a monotone polynomial inequality, found by binary
//! search. The `*_f64` variants evaluate the square-root expressions directly
//! and exist only as a cross-check.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{simplicial_vertices, DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("diameter {d} is inconsistent with order {n} (need 1 <= d <= n - 1)")]
    InconsistentDiameter { n: u64, d: u64 },
}

/// `(lower, upper)` valid for every graph of order `n`; `(1, 1)` for `n = 1`.
pub fn trivial_bounds(n: u64) -> Result<(u64, u64), BoundsError> {
    match n {
        0 => Err(BoundsError::EmptyGraph),
        1 => Ok((1, 1)),
        _ => Ok((2, n)),
    }
}

/// `n - d + 1`: drop the interior of a diametral path from `V(G)`.
pub fn ub_diameter(n: u64, d: u64) -> Result<u64, BoundsError> {
    if d < 1 || d + 1 > n {
        return Err(BoundsError::InconsistentDiameter { n, d });
    }
    Ok(n - d + 1)
}

/// Least `r` in `1..=hi` with `pred(r)`, for monotone `pred` with `pred(hi)`.
fn least_satisfying(hi: u64, pred: impl Fn(u128) -> bool) -> u64 {
    let (mut lo, mut hi) = (1u64, hi.max(1));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid as u128) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Each of the `C(r,2)` fixed geodesics covers at most `d + 1` vertices:
/// least `r` with `r(r-1)(d+1) >= 2n`.
///
/// Intended for `n >= 2`, `d >= 1`; returns `n` for `n <= 1`.
pub fn lb_path_capacity(n: u64, d: u64) -> u64 {
    if n <= 1 {
        return n;
    }
    let (n2, d1) = (2 * n as u128, d as u128 + 1);
    least_satisfying(n, |r| r * (r - 1) * d1 >= n2)
}

/// Refinement counting only geodesic interiors (at most `d - 1` vertices each)
/// on top of the `r` endpoints: least `r` with `r(r-1)(d-1) + 2r >= 2n`.
/// Diameter 1 means a complete graph, where the value is `n`.
pub fn lb_interior_capacity(n: u64, d: u64) -> u64 {
    if n <= 1 || d <= 1 {
        return n;
    }
    let (n2, dm1) = (2 * n as u128, d as u128 - 1);
    least_satisfying(n, |r| r * (r - 1) * dm1 + 2 * r >= n2)
}

/// `⌈(1 + √(1 + 8n/(d+1))) / 2⌉` in floating point.
pub fn lb_path_capacity_f64(n: u64, d: u64) -> u64 {
    let (n, d) = (n as f64, d as f64);
    ((1.0 + (1.0 + 8.0 * n / (d + 1.0)).sqrt()) / 2.0).ceil() as u64
}

/// `⌈(d - 3 + √((d-3)² + 8n(d-1))) / (2(d-1))⌉` in floating point, `n` for `d = 1`.
pub fn lb_interior_capacity_f64(n: u64, d: u64) -> u64 {
    if d <= 1 {
        return n;
    }
    let (n, d) = (n as f64, d as f64);
    let disc = (d - 3.0) * (d - 3.0) + 8.0 * n * (d - 1.0);
    ((d - 3.0 + disc.sqrt()) / (2.0 * (d - 1.0))).ceil() as u64
}

/// Number of simplicial vertices, floored at the trivial lower bound.
pub fn lb_simplicial(g: &Graph) -> u64 {
    let floor = trivial_bounds(g.n() as u64).map(|(lo, _)| lo).unwrap_or(0);
    (simplicial_vertices(g).len() as u64).max(floor)
}

/// Which argument produced a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    Trivial,
    PathCapacity,
    InteriorCapacity,
    Simplicial,
    /// All smaller set sizes were exhausted by search.
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TaggedBound {
    pub value: u64,
    pub source: BoundSource,
}

/// Bounds obtained from `n` and `d` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NumericBounds {
    pub n: u64,
    pub d: u64,
    pub lb_trivial: u64,
    pub lb_path_capacity: u64,
    pub lb_interior_capacity: u64,
    pub ub_diameter: u64,
    pub ub_trivial: u64,
}

impl NumericBounds {
    pub fn new(n: u64, d: u64) -> Result<Self, BoundsError> {
        let (lb_trivial, ub_trivial) = trivial_bounds(n)?;
        if n == 1 {
            if d != 0 {
                return Err(BoundsError::InconsistentDiameter { n, d });
            }
            return Ok(Self {
                n,
                d,
                lb_trivial,
                lb_path_capacity: 1,
                lb_interior_capacity: 1,
                ub_diameter: 1,
                ub_trivial,
            });
        }
        Ok(Self {
            n,
            d,
            lb_trivial,
            lb_path_capacity: lb_path_capacity(n, d),
            lb_interior_capacity: lb_interior_capacity(n, d),
            ub_diameter: ub_diameter(n, d)?,
            ub_trivial,
        })
    }
}

/// Every bound available for a concrete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundSandwich {
    #[serde(flatten)]
    pub numeric: NumericBounds,
    pub lb_simplicial: u64,
}

impl BoundSandwich {
    pub fn new(g: &Graph, dm: &DistanceMatrix) -> Result<Self, BoundsError> {
        let numeric = NumericBounds::new(g.n() as u64, dm.diameter() as u64)?;
        Ok(Self { numeric, lb_simplicial: lb_simplicial(g) })
    }

    /// The strongest lower bound; ties go to the first listed source.
    pub fn lower(&self) -> TaggedBound {
        let nb = &self.numeric;
        [
            (nb.lb_interior_capacity, BoundSource::InteriorCapacity),
            (nb.lb_path_capacity, BoundSource::PathCapacity),
            (self.lb_simplicial, BoundSource::Simplicial),
            (nb.lb_trivial, BoundSource::Trivial),
        ]
        .into_iter()
        .fold(None::<TaggedBound>, |best, (value, source)| match best {
            Some(b) if b.value >= value => Some(b),
            _ => Some(TaggedBound { value, source }),
        })
        .unwrap()
    }

    pub fn upper(&self) -> u64 {
        self.numeric.ub_diameter.min(self.numeric.ub_trivial)
    }

    pub fn contains(&self, value: u64) -> bool {
        self.lower().value <= value && value <= self.upper()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Least `r >= 1` with the inequality, by linear scan.
    fn scan(f: impl Fn(u64) -> bool) -> u64 {
        (1..).find(|&r| f(r)).unwrap()
    }

    #[test]
    fn trivial() {
        assert_eq!(trivial_bounds(2), Ok((2, 2)));
        assert_eq!(trivial_bounds(10), Ok((2, 10)));
        assert_eq!(trivial_bounds(1), Ok((1, 1)));
        assert_eq!(trivial_bounds(0), Err(BoundsError::EmptyGraph));
    }

    #[test]
    fn diameter_upper() {
        assert_eq!(ub_diameter(7, 6), Ok(2));
        assert_eq!(ub_diameter(10, 2), Ok(9));
        assert_eq!(ub_diameter(8, 3), Ok(6));
        assert!(ub_diameter(5, 5).is_err());
        assert!(ub_diameter(5, 0).is_err());
    }

    #[test]
    fn path_capacity_examples() {
        assert_eq!(lb_path_capacity(5, 4), 2);
        assert_eq!(lb_path_capacity(10, 2), 4);
        assert_eq!(lb_path_capacity(2, 1), 2);
        // (1 + sqrt(1 + 80/3)) / 2 ≈ 3.13
        let exact = (1.0 + (1.0 + 80.0f64 / 3.0).sqrt()) / 2.0;
        assert!(exact > 3.0 && exact < 4.0);
    }

    #[test]
    fn interior_capacity_examples() {
        assert_eq!(lb_interior_capacity(10, 2), 4);
        assert_eq!(lb_interior_capacity(4 + 3 * 6, 4), 4);
        assert_eq!(lb_interior_capacity(5, 1), 5);
        assert_eq!(lb_interior_capacity(7, 6), 2);
    }

    #[test]
    fn binary_search_matches_scan() {
        for n in 2..300u64 {
            for d in 1..n {
                let simple = scan(|r| r * (r - 1) * (d + 1) >= 2 * n);
                assert_eq!(lb_path_capacity(n, d), simple, "n={n} d={d}");
                if d >= 2 {
                    let refined = scan(|r| r * (r - 1) * (d - 1) + 2 * r >= 2 * n);
                    assert_eq!(lb_interior_capacity(n, d), refined, "n={n} d={d}");
                    assert!(refined >= simple);
                }
            }
        }
    }

    #[test]
    fn graph_bounds() {
        let k5 = generators::complete(5).unwrap();
        assert_eq!(lb_simplicial(&k5), 5);
        assert_eq!(lb_simplicial(&generators::path(6).unwrap()), 2);
        assert_eq!(lb_simplicial(&generators::petersen().graph), 2);

        let g = generators::petersen().graph;
        let dm = DistanceMatrix::new(&g).unwrap();
        let s = BoundSandwich::new(&g, &dm).unwrap();
        assert_eq!(s.lower(), TaggedBound { value: 4, source: BoundSource::InteriorCapacity });
        assert_eq!(s.upper(), 9);
        assert!(s.contains(4) && !s.contains(3));
    }

    #[test]
    fn single_vertex_sandwich() {
        let g = Graph::empty(1);
        let dm = DistanceMatrix::new(&g).unwrap();
        let s = BoundSandwich::new(&g, &dm).unwrap();
        assert_eq!((s.lower().value, s.upper()), (1, 1));
    }
}
