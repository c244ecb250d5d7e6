//! Verification suites: each one checks a family of claims over a corpus and
//! reports the first counterexample it finds.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bipartite::{
    sg_bipartite_ip, sg_bipartite_ip_restricted, sg_knn_formula, sg_unbalanced_formula, unbalanced_condition,
};
use crate::bounds::{lb_interior_capacity, BoundSandwich};
use crate::generators;
use crate::graph::{DistanceMatrix, Graph};
use crate::solver::{is_strong_geodetic_set, sg_exact, sg_oracle, SolverConfig, ORACLE_MAX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleEquivalence,
    KnnFormula,
    Balancing,
    UnbalancedFormula,
    BoundsSandwich,
    Constructions,
    Characterizations,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::OracleEquivalence,
        Suite::KnnFormula,
        Suite::Balancing,
        Suite::UnbalancedFormula,
        Suite::BoundsSandwich,
        Suite::Constructions,
        Suite::Characterizations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::KnnFormula => "knn-formula",
            Suite::Balancing => "balancing",
            Suite::UnbalancedFormula => "unbalanced-formula",
            Suite::BoundsSandwich => "bounds-sandwich",
            Suite::Constructions => "constructions",
            Suite::Characterizations => "characterizations",
        }
    }

    /// Default `max_n` of the suite.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::OracleEquivalence => 7,
            Suite::KnnFormula | Suite::Balancing => 500,
            Suite::UnbalancedFormula => 200,
            Suite::BoundsSandwich | Suite::Characterizations => 8,
            Suite::Constructions => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Largest order of the named graphs added to the sandwich and
/// characterization corpora.
pub const NAMED_CORPUS_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Upper limit of the swept parameter; `None` uses [`Suite::default_max_n`].
    pub max_n: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub k: RangeInclusive<usize>,
    pub d: RangeInclusive<usize>,
    pub solver: SolverConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_n: None, samples: 200, seed: 1, k: 3..=5, d: 3..=4, solver: SolverConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: u64,
    pub failures: u64,
    pub counterexample: Option<Value>,
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
    first: Option<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(counterexample());
            }
        }
    }

    fn report(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            passed: self.failures == 0,
            checks: self.checks,
            failures: self.failures,
            counterexample: self.first,
        }
    }
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>() })
}

/// `samples` seeded random connected graphs with `2 <= n <= max_n`.
pub fn random_corpus(samples: usize, max_n: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let p = rng.gen_range(0.15..0.85);
            let s: u64 = rng.gen();
            let name = format!("random:{n},{p},{s}");
            (name, generators::random_connected(n, p, s).expect("parameters are in range"))
        })
        .collect()
}

/// Every named family member with at most `max_n` vertices.
pub fn named_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut push = |name: String, g: Graph| {
        if g.n() <= max_n {
            out.push((name, g));
        }
    };
    for n in 1..=max_n {
        push(format!("path:{n}"), generators::path(n).unwrap());
        push(format!("complete:{n}"), generators::complete(n).unwrap());
    }
    for n in 3..=max_n {
        push(format!("cycle:{n}"), generators::cycle(n).unwrap());
    }
    for a in 1..=max_n {
        for b in a..=max_n - a {
            push(format!("kmn:{a},{b}"), generators::complete_bipartite(a, b).unwrap());
        }
    }
    push("petersen".into(), generators::petersen().graph);
    for k in 3..=max_n {
        if k + k * (k - 1) / 2 > max_n {
            break;
        }
        push(format!("gk:{k}"), generators::g_k(k).unwrap());
        for d in 3..=max_n {
            if k + (d - 1) * k * (k - 1) / 2 > max_n {
                break;
            }
            push(format!("gkd:{k},{d}"), generators::g_kd(k, d).unwrap());
        }
    }
    out
}

fn oracle_equivalence(cfg: &VerifyConfig, max_n: usize) -> SuiteReport {
    let mut tally = Tally::default();
    let solver = SolverConfig { oracle_limit: max_n.clamp(2, ORACLE_MAX), ..cfg.solver.clone() };
    for (name, g) in random_corpus(cfg.samples, max_n, cfg.seed) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let exact = sg_exact(&g, &solver);
        let oracle = sg_oracle(&g, &solver);
        let ok = match (&exact, &oracle) {
            (Ok(e), Ok(o)) => {
                e.value == o.value && e.certificate.validate(&g, &dm).is_ok() && o.certificate.validate(&g, &dm).is_ok()
            }
            _ => false,
        };
        tally.check(ok, || {
            json!({
                "graph": name,
                "edges": graph_json(&g),
                "exact": exact.as_ref().map(|r| r.value).map_err(|e| e.to_string()),
                "oracle": oracle.as_ref().map(|r| r.value).map_err(|e| e.to_string()),
            })
        });
    }
    tally.report(Suite::OracleEquivalence)
}

fn knn_formula(max_n: usize) -> SuiteReport {
    let mut tally = Tally::default();
    for n in 2..=max_n as u64 {
        let f = sg_knn_formula(n).unwrap();
        let ip = sg_bipartite_ip(n, n).unwrap();
        let ok = f.value == ip.value && f.split.is_feasible(n, n) && f.split.size() == f.value;
        tally.check(ok, || json!({ "n": n, "formula": f, "ip": ip }));
    }
    tally.report(Suite::KnnFormula)
}

fn balancing(max_n: usize) -> SuiteReport {
    let mut tally = Tally::default();
    for n in 6..=max_n as u64 {
        let full = sg_bipartite_ip(n, n).unwrap();
        let balanced = sg_bipartite_ip_restricted(n, n, 1).unwrap();
        tally.check(
            balanced.is_some_and(|b| b.value == full.value),
            || json!({ "n": n, "unrestricted": full, "balanced": balanced }),
        );
    }
    tally.report(Suite::Balancing)
}

/// Values of `n2` swept by the unbalanced-formula suite.
pub const UNBALANCED_N2: RangeInclusive<u64> = 2..=4;

fn unbalanced_formula(max_n: usize) -> SuiteReport {
    let mut tally = Tally::default();
    for n2 in UNBALANCED_N2 {
        for n1 in 2..=max_n as u64 {
            if unbalanced_condition(n1, n2).is_err() {
                continue;
            }
            let f = sg_unbalanced_formula(n1, n2).unwrap();
            let ip = sg_bipartite_ip(n1, n2).unwrap();
            tally.check(
                f.value == ip.value && f.split.is_feasible(n1, n2),
                || json!({ "n1": n1, "n2": n2, "formula": f, "ip": ip }),
            );
        }
    }
    tally.report(Suite::UnbalancedFormula)
}

fn mixed_corpus(cfg: &VerifyConfig, max_n: usize) -> Vec<(String, Graph)> {
    let mut corpus = random_corpus(cfg.samples, max_n, cfg.seed);
    corpus.extend(named_corpus(NAMED_CORPUS_MAX_N));
    corpus
}

fn bounds_sandwich(cfg: &VerifyConfig, max_n: usize) -> SuiteReport {
    let mut tally = Tally::default();
    for (name, g) in mixed_corpus(cfg, max_n) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let bounds = BoundSandwich::new(&g, &dm).unwrap();
        let exact = sg_exact(&g, &cfg.solver);
        let ok = exact.as_ref().is_ok_and(|r| bounds.contains(r.value));
        tally.check(ok, || {
            json!({ "graph": name, "bounds": bounds, "sg": exact.as_ref().map(|r| r.value).map_err(|e| e.to_string()) })
        });
    }
    tally.report(Suite::BoundsSandwich)
}

fn characterizations(cfg: &VerifyConfig, max_n: usize) -> SuiteReport {
    let mut tally = Tally::default();
    for (name, g) in mixed_corpus(cfg, max_n) {
        if g.n() < 2 {
            continue;
        }
        let exact = sg_exact(&g, &cfg.solver);
        let ok =
            exact.as_ref().is_ok_and(|r| (r.value == 2) == g.is_path() && (r.value == g.n() as u64) == g.is_complete());
        tally.check(ok, || {
            json!({
                "graph": name,
                "is_path": g.is_path(),
                "is_complete": g.is_complete(),
                "sg": exact.as_ref().map(|r| r.value).map_err(|e| e.to_string()),
            })
        });
    }
    tally.report(Suite::Characterizations)
}

/// Outcome of the checks on one `G_{k,d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionCheck {
    pub k: usize,
    pub d: usize,
    pub n: usize,
    pub diameter: u32,
    pub lower_bound: u64,
    pub branch_set_feasible: bool,
    /// Exact `sg`, computed only for `d = 2` where the graph is small.
    pub sg: Option<u64>,
}

impl ConstructionCheck {
    pub fn passed(&self) -> bool {
        self.diameter as usize == self.d
            && self.lower_bound == self.k as u64
            && self.branch_set_feasible
            && self.sg.is_none_or(|s| s == self.k as u64)
    }
}

pub fn check_construction(k: usize, d: usize, solver: &SolverConfig) -> Result<ConstructionCheck, String> {
    let g = generators::g_kd(k, d).map_err(|e| e.to_string())?;
    let dm = DistanceMatrix::new(&g).map_err(|e| e.to_string())?;
    let branch: Vec<usize> = (0..k).collect();
    let feasible = is_strong_geodetic_set(&g, &dm, &branch, solver).map_err(|e| e.to_string())?;
    let sg = if d == 2 { Some(sg_exact(&g, solver).map_err(|e| e.to_string())?.value) } else { None };
    Ok(ConstructionCheck {
        k,
        d,
        n: g.n(),
        diameter: dm.diameter(),
        lower_bound: lb_interior_capacity(g.n() as u64, dm.diameter() as u64),
        branch_set_feasible: feasible.is_feasible(),
        sg,
    })
}

fn constructions(cfg: &VerifyConfig) -> SuiteReport {
    let mut tally = Tally::default();
    let mut ds: Vec<usize> = cfg.d.clone().collect();
    if !ds.contains(&2) {
        ds.insert(0, 2);
    }
    for k in cfg.k.clone() {
        for &d in &ds {
            let outcome = check_construction(k, d, &cfg.solver);
            tally.check(outcome.as_ref().is_ok_and(ConstructionCheck::passed), || match &outcome {
                Ok(c) => json!(c),
                Err(e) => json!({ "k": k, "d": d, "error": e }),
            });
        }
    }
    tally.report(Suite::Constructions)
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let max_n = cfg.max_n.unwrap_or(suite.default_max_n());
    match suite {
        Suite::OracleEquivalence => oracle_equivalence(cfg, max_n),
        Suite::KnnFormula => knn_formula(max_n),
        Suite::Balancing => balancing(max_n),
        Suite::UnbalancedFormula => unbalanced_formula(max_n),
        Suite::BoundsSandwich => bounds_sandwich(cfg, max_n),
        Suite::Constructions => constructions(cfg),
        Suite::Characterizations => characterizations(cfg, max_n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
            assert_eq!(serde_json::to_value(s).unwrap(), json!(s.name()));
        }
        assert!("no-such-suite".parse::<Suite>().is_err());
    }

    #[test]
    fn corpora_are_deterministic_and_bounded() {
        let a = random_corpus(20, 6, 3);
        assert_eq!(a, random_corpus(20, 6, 3));
        assert!(a.iter().all(|(_, g)| (2..=6).contains(&g.n()) && g.is_connected()));
        let named = named_corpus(16);
        assert!(named.iter().all(|(_, g)| g.n() <= 16));
        for name in ["petersen", "gk:4", "gk:5", "gkd:3,3", "gkd:3,4", "gkd:4,3", "kmn:8,8", "cycle:16"] {
            assert!(named.iter().any(|(n, _)| n == name), "{name}");
        }
    }

    #[test]
    fn small_runs_pass() {
        let cfg = VerifyConfig { samples: 15, max_n: Some(6), ..VerifyConfig::default() };
        assert!(run_suite(Suite::OracleEquivalence, &cfg).passed);
        let cfg = VerifyConfig { max_n: Some(60), ..VerifyConfig::default() };
        for s in [Suite::KnnFormula, Suite::Balancing, Suite::UnbalancedFormula] {
            let r = run_suite(s, &cfg);
            assert!(r.passed && r.checks > 0, "{r:?}");
        }
        let cfg = VerifyConfig { k: 3..=3, d: 3..=3, ..VerifyConfig::default() };
        let r = run_suite(Suite::Constructions, &cfg);
        assert_eq!((r.passed, r.checks), (true, 2));
    }

    #[test]
    fn failures_carry_a_counterexample() {
        let mut t = Tally::default();
        t.check(true, || unreachable!());
        t.check(false, || json!({ "first": 1 }));
        t.check(false, || json!({ "second": 2 }));
        let r = t.report(Suite::Balancing);
        assert!(!r.passed);
        assert_eq!((r.checks, r.failures), (3, 2));
        assert_eq!(r.counterexample, Some(json!({ "first": 1 })));
    }
}
