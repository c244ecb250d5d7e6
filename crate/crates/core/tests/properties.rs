use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strong_geodetic::bipartite::{sg_bipartite_ip, sg_knn_formula};
use strong_geodetic::bounds::{lb_interior_capacity, lb_path_capacity, BoundSandwich};
use strong_geodetic::edge_list;
use strong_geodetic::generators::random_connected;
use strong_geodetic::geodesics::GeodesicFamily;
use strong_geodetic::graph::simplicial_vertices;
use strong_geodetic::{is_strong_geodetic_set, sg_exact, DistanceMatrix, Graph, SolverConfig};

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.1f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed).unwrap())
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_are_a_metric(g in random_graph(14)) {
        let dm = DistanceMatrix::new(&g).unwrap();
        for u in 0..g.n() {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..g.n() {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..g.n() {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
        prop_assert!(dm.radius() <= dm.diameter() && dm.diameter() <= 2 * dm.radius());
    }

    #[test]
    fn relabeling_preserves_sg_and_distances(g in random_graph(8), seed in any::<u64>()) {
        let perm = permutation(g.n(), seed);
        let h = g.relabel(&perm);
        let (dg, dh) = (DistanceMatrix::new(&g).unwrap(), DistanceMatrix::new(&h).unwrap());
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(dg.get(u, v), dh.get(perm[u], perm[v]));
            }
        }
        let cfg = SolverConfig::default();
        prop_assert_eq!(sg_exact(&g, &cfg).unwrap().value, sg_exact(&h, &cfg).unwrap().value);
    }

    #[test]
    fn leaves_are_simplicial_and_in_every_certificate(g in random_graph(9)) {
        let simplicial = simplicial_vertices(&g);
        let r = sg_exact(&g, &SolverConfig::default()).unwrap();
        for v in 0..g.n() {
            if g.degree(v) == 1 {
                prop_assert!(simplicial.contains(&v));
            }
        }
        for v in &simplicial {
            prop_assert!(r.certificate.set.contains(v));
        }
    }

    #[test]
    fn enumerated_paths_are_distinct_geodesics(g in random_graph(12), a in 0usize..12, b in 0usize..12) {
        let (a, b) = (a % g.n(), b % g.n());
        prop_assume!(a != b);
        let dm = DistanceMatrix::new(&g).unwrap();
        let fam = GeodesicFamily::new(&g, &dm, a, b).unwrap();
        let e = fam.enumerate(100_000);
        prop_assert!(!e.truncated);
        prop_assert_eq!(e.paths.len() as u64, fam.count());
        prop_assert_eq!(&e.paths[0], &fam.first());
        for w in e.paths.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for p in &e.paths {
            prop_assert_eq!(p.len() as u32, dm.get(a, b) + 1);
            prop_assert_eq!((p[0], *p.last().unwrap()), (a, b));
            prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn sets_missing_a_simplicial_vertex_are_infeasible(g in random_graph(9), mask in any::<u16>()) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let set: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        let verdict = is_strong_geodetic_set(&g, &dm, &set, &SolverConfig::default()).unwrap();
        if let Some(cert) = verdict.certificate() {
            prop_assert!(cert.validate(&g, &dm).is_ok());
            for v in simplicial_vertices(&g) {
                prop_assert!(set.contains(&v));
            }
        }
    }

    #[test]
    fn exact_result_is_certified_and_sandwiched(g in random_graph(9)) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let r = sg_exact(&g, &SolverConfig::default()).unwrap();
        prop_assert!(r.certificate.validate(&g, &dm).is_ok());
        prop_assert_eq!(r.certificate.set.len() as u64, r.value);
        prop_assert!(BoundSandwich::new(&g, &dm).unwrap().contains(r.value));
        // no smaller set survives: removing any vertex from the certificate fails
        for skip in 0..r.certificate.set.len() {
            let smaller: Vec<usize> = r.certificate.set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            prop_assert!(!is_strong_geodetic_set(&g, &dm, &smaller, &SolverConfig::default()).unwrap().is_feasible());
        }
    }

    #[test]
    fn edge_list_round_trip(g in random_graph(20)) {
        let text = edge_list::write(&g, &["generated"]);
        prop_assert_eq!(edge_list::parse(&text).unwrap(), g);
    }

    #[test]
    fn interior_bound_refines_path_bound(n in 2u64..1_000_000, d in 2u64..1000) {
        prop_assume!(d < n);
        prop_assert!(lb_interior_capacity(n, d) >= lb_path_capacity(n, d));
    }

    #[test]
    fn balanced_formula_matches_ip(n in 2u64..1200) {
        prop_assert_eq!(sg_knn_formula(n).unwrap().value, sg_bipartite_ip(n, n).unwrap().value);
    }
}
