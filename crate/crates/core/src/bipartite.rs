//! Strong geodetic number of complete bipartite graphs.
//!
//! A geodesic of `K_{n1,n2}` is an edge or a 2-path between two vertices of
//! the same side, and distinct same-side pairs can use distinct middle
//! vertices. With `s1` chosen vertices in `X` and `s2` in `Y`, the set is a
//! strong geodetic set iff `C(s2,2) >= n1 - s1` and `C(s1,2) >= n2 - s2`, so
//! `sg` is the minimum of `s1 + s2` over that integer region.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::BoundSandwich;
use crate::graph::{DistanceMatrix, Graph};
use crate::solver::{pairs, Method, SgCertificate, SgResult, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("both sides must have at least 2 vertices (got {n1}, {n2})")]
    SideTooSmall { n1: u64, n2: u64 },
    #[error("closed form not applicable to K_{{{n1},{n2}}}: condition fails at s2 = {s2}")]
    NotApplicable { n1: u64, n2: u64, s2: u64 },
    #[error("{0} is not an odd perfect square")]
    NotOddSquare(u64),
    #[error("graph is not a complete bipartite graph with both sides of size >= 2")]
    NotCompleteBipartite,
}

/// `C(a, 2)`, taken as 0 for `a < 2`.
pub fn binom2(a: i64) -> i64 {
    if a < 2 {
        0
    } else {
        a * (a - 1) / 2
    }
}

/// Numbers of chosen vertices on each side of the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteSplit {
    pub s1: u64,
    pub s2: u64,
}

impl BipartiteSplit {
    pub fn size(&self) -> u64 {
        self.s1 + self.s2
    }

    pub fn is_feasible(&self, n1: u64, n2: u64) -> bool {
        let (s1, s2) = (self.s1 as i64, self.s2 as i64);
        self.s1 <= n1 && self.s2 <= n2 && binom2(s2) >= n1 as i64 - s1 && binom2(s1) >= n2 as i64 - s2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IpSolution {
    pub value: u64,
    pub split: BipartiteSplit,
}

fn check_sides(n1: u64, n2: u64) -> Result<(), BipartiteError> {
    if n1 < 2 || n2 < 2 {
        Err(BipartiteError::SideTooSmall { n1, n2 })
    } else {
        Ok(())
    }
}

fn ip_grid(n1: u64, n2: u64, max_gap: Option<u64>) -> Option<IpSolution> {
    let c1: Vec<i64> = (0..=n1 as i64).map(binom2).collect();
    let c2: Vec<i64> = (0..=n2 as i64).map(binom2).collect();
    let mut best: Option<(u64, u64, u64, BipartiteSplit)> = None;
    for s1 in 0..=n1 {
        for s2 in 0..=n2 {
            let gap = s1.abs_diff(s2);
            if max_gap.is_some_and(|m| gap > m) {
                continue;
            }
            if c2[s2 as usize] < n1 as i64 - s1 as i64 || c1[s1 as usize] < n2 as i64 - s2 as i64 {
                continue;
            }
            let key = (s1 + s2, gap, s1);
            if best.is_none_or(|b| key < (b.0, b.1, b.2)) {
                best = Some((key.0, key.1, key.2, BipartiteSplit { s1, s2 }));
            }
        }
    }
    best.map(|(value, _, _, split)| IpSolution { value, split })
}

/// Minimum of the integer program by enumerating the whole
/// `(n1+1) x (n2+1)` grid. Ties prefer a smaller `|s1 - s2|`, then a smaller `s1`.
pub fn sg_bipartite_ip(n1: u64, n2: u64) -> Result<IpSolution, BipartiteError> {
    check_sides(n1, n2)?;
    Ok(ip_grid(n1, n2, None).expect("s1 = n1, s2 = n2 is always feasible"))
}

/// Like [`sg_bipartite_ip`] restricted to `|s1 - s2| <= max_gap`; `None` if
/// the restricted region is empty.
pub fn sg_bipartite_ip_restricted(n1: u64, n2: u64, max_gap: u64) -> Result<Option<IpSolution>, BipartiteError> {
    check_sides(n1, n2)?;
    Ok(ip_grid(n1, n2, Some(max_gap)))
}

/// Which branch of the balanced closed form produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KnnCase {
    /// `8n - 7` is a perfect square: `s2 = s1 - 1`.
    Square,
    /// `8n - 7` is not a perfect square: `s1 = s2`.
    NonSquare,
    /// `n <= 5`, served from known values.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnnFormula {
    pub value: u64,
    pub split: BipartiteSplit,
    pub case: KnnCase,
}

fn is_perfect_square(x: u64) -> bool {
    let r = x.isqrt();
    r * r == x
}

/// `⌈(-1 + √(8n+1)) / 2⌉`, i.e. the least `s` with `s(s+1) >= 2n`.
pub fn balanced_side(n: u64) -> u64 {
    let mut s = ((8 * n + 1).isqrt() - 1) / 2;
    while s * (s + 1) < 2 * n {
        s += 1;
    }
    s
}

/// Closed form for `sg(K_{n,n})`.
pub fn sg_knn_formula(n: u64) -> Result<KnnFormula, BipartiteError> {
    check_sides(n, n)?;
    let table = |value, s1, s2| KnnFormula { value, split: BipartiteSplit { s1, s2 }, case: KnnCase::Table };
    match n {
        2 => return Ok(table(3, 2, 1)),
        3 => return Ok(table(3, 3, 0)),
        // taking one whole side already works: C(4,2) = 6 >= 4
        4 => return Ok(table(4, 4, 0)),
        5 => return Ok(table(5, 5, 0)),
        _ => {}
    }
    let b = balanced_side(n);
    Ok(if is_perfect_square(8 * n - 7) {
        KnnFormula { value: 2 * b - 1, split: BipartiteSplit { s1: b, s2: b - 1 }, case: KnnCase::Square }
    } else {
        KnnFormula { value: 2 * b, split: BipartiteSplit { s1: b, s2: b }, case: KnnCase::NonSquare }
    })
}

/// The applicability condition of [`sg_unbalanced_formula`]: for every
/// `0 <= s2 <= n2`, the `r = n1 - C(s2,2)` vertices of `X` left uncovered by
/// `Y`-pairs form a non-negative count with `C(r, 2) >= n1 - s2`.
///
/// Returns the first failing `s2`.
pub fn unbalanced_condition(n1: u64, n2: u64) -> Result<(), u64> {
    let n1i = n1 as i64;
    for s2 in 0..=n2 {
        let rest = n1i - binom2(s2 as i64);
        if rest < 0 || binom2(rest) < n1i - s2 as i64 {
            return Err(s2);
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnbalancedFormula {
    pub value: u64,
    pub split: BipartiteSplit,
}

/// Closed form for `sg(K_{n1,n2})` when `n1` is large compared to `n2`:
/// `n1` if `n2 = 2`, otherwise `n1 + n2 - C(n2, 2)`.
pub fn sg_unbalanced_formula(n1: u64, n2: u64) -> Result<UnbalancedFormula, BipartiteError> {
    check_sides(n1, n2)?;
    unbalanced_condition(n1, n2).map_err(|s2| BipartiteError::NotApplicable { n1, n2, s2 })?;
    Ok(if n2 == 2 {
        UnbalancedFormula { value: n1, split: BipartiteSplit { s1: n1, s2: 0 } }
    } else {
        let c = binom2(n2 as i64) as u64;
        UnbalancedFormula { value: n1 + n2 - c, split: BipartiteSplit { s1: n1 - c, s2: n2 } }
    })
}

/// For an odd perfect square `s`, the integer `k` with `s = 8k + 1`.
pub fn odd_square_mod8(s: u64) -> Result<u64, BipartiteError> {
    if s.is_multiple_of(2) || !is_perfect_square(s) {
        return Err(BipartiteError::NotOddSquare(s));
    }
    Ok((s - 1) / 8)
}

/// How [`sg_complete_bipartite`] obtained its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteMethod {
    BalancedFormula,
    UnbalancedFormula,
    IntegerProgram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BipartiteValue {
    pub n1: u64,
    pub n2: u64,
    pub value: u64,
    pub split: BipartiteSplit,
    pub method: BipartiteMethod,
}

/// Uses a closed form when one applies, the integer program otherwise.
pub fn sg_complete_bipartite(n1: u64, n2: u64) -> Result<BipartiteValue, BipartiteError> {
    check_sides(n1, n2)?;
    let (value, split, method) = if n1 == n2 {
        let f = sg_knn_formula(n1)?;
        (f.value, f.split, BipartiteMethod::BalancedFormula)
    } else if let Ok(f) = sg_unbalanced_formula(n1, n2) {
        (f.value, f.split, BipartiteMethod::UnbalancedFormula)
    } else {
        let ip = sg_bipartite_ip(n1, n2)?;
        (ip.value, ip.split, BipartiteMethod::IntegerProgram)
    };
    Ok(BipartiteValue { n1, n2, value, split, method })
}

/// The two sides `(X, Y)` of `g` if it is a complete bipartite graph, with `X`
/// the side containing vertex 0.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g.n() < 2 || g.degree(0) == 0 {
        return None;
    }
    let y: Vec<usize> = g.neighbors(0).to_vec();
    let x: Vec<usize> = (0..g.n()).filter(|v| y.binary_search(v).is_err()).collect();
    let complete =
        x.iter().all(|&a| g.neighbors(a) == y.as_slice()) && y.iter().all(|&b| g.neighbors(b) == x.as_slice());
    complete.then_some((x, y))
}

/// Builds an explicit certificate for a split: the first `s1` vertices of
/// `x`, the first `s2` of `y`, and same-side pairs routed through distinct
/// uncovered vertices of the other side while any remain.
pub fn certificate_from_split(x: &[usize], y: &[usize], split: BipartiteSplit) -> SgCertificate {
    let (s1, s2) = (split.s1 as usize, split.s2 as usize);
    let mut set: Vec<usize> = x[..s1].iter().chain(&y[..s2]).copied().collect();
    set.sort_unstable();
    let in_x = |v: usize| x.binary_search(&v).is_ok();
    let mut todo_x = x[s1..].iter().copied();
    let mut todo_y = y[s2..].iter().copied();
    let geodesics = pairs(&set)
        .map(|(a, b)| match (in_x(a), in_x(b)) {
            (true, true) => vec![a, todo_y.next().unwrap_or(y[0]), b],
            (false, false) => vec![a, todo_x.next().unwrap_or(x[0]), b],
            _ => vec![a, b],
        })
        .collect();
    SgCertificate { set, geodesics }
}

/// `sg` of a complete bipartite graph from the closed forms / integer
/// program, with a constructed certificate.
pub fn sg_formula(g: &Graph) -> Result<SgResult, SolveError> {
    let (x, y) = complete_bipartite_parts(g)
        .filter(|(x, y)| x.len() >= 2 && y.len() >= 2)
        .ok_or_else(|| SolveError::InvalidSet(BipartiteError::NotCompleteBipartite.to_string()))?;
    let dm = DistanceMatrix::new(g)?;
    let bounds = BoundSandwich::new(g, &dm)?;
    let v = sg_complete_bipartite(x.len() as u64, y.len() as u64).expect("sides checked above");
    Ok(SgResult {
        value: v.value,
        certificate: certificate_from_split(&x, &y, v.split),
        method: Method::Formula,
        bounds,
        lower_bound_used: bounds.lower(),
        subsets_examined: 0,
    })
}
