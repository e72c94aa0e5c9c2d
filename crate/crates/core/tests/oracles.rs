//! Every algorithm against exhaustive enumeration on small random instances.

use grafalgo_core::ecolor::{self, ecolor_verify};
use grafalgo_core::matching::{self, matching_verify, matching_verify_weight, SizeAlgo, WeightAlgo};
use grafalgo_core::maxflow::{self, flow_verify};
use grafalgo_core::mincost::{self, mcf_verify};
use grafalgo_core::mst::{self, mst_verify};
use grafalgo_core::paths::{self, apsp_verify, spt_verify, ApspAlgo, SptAlgo};
use grafalgo_core::Error;
use grafalgo_testkit::{instances, oracles, rng, Rng};

#[test]
fn mst_matches_enumeration() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = r.gen_range(1..=7);
        let extra = r.gen_range(0..=6);
        let g = instances::connected_wgraph(&mut r, n, if n > 1 { extra } else { 0 }, 6);
        let (best, forests) = oracles::spanning_forests(&g);
        for algo in mst::Algo::ALL {
            let t = mst::mst(&g, algo);
            assert_eq!(t.weight, best, "{}", algo.name());
            let mut mine = t.edges.clone();
            mine.sort_unstable();
            assert!(forests.contains(&mine), "{} returned a non-minimal tree", algo.name());
            assert_eq!(mst_verify(&g, &t), Ok(()));
        }
    }
}

#[test]
fn mst_forest_of_disconnected_graph() {
    let mut r = rng(12);
    for _ in 0..100 {
        let g = instances::wdigraph(&mut r, 7, 4, 1, 9);
        // reuse the arcs as undirected edges
        let mut u = grafalgo_core::graph::WGraph::new(7, 4);
        for e in g.edges() {
            u.add_edge(g.tail(e), g.head(e), g.weight(e)).unwrap();
        }
        let (best, _) = oracles::spanning_forests(&u);
        for algo in mst::Algo::ALL {
            let t = mst::mst(&u, algo);
            assert_eq!(t.weight, best);
            assert_eq!(mst_verify(&u, &t), Ok(()));
        }
    }
}

#[test]
fn shortest_paths_match_enumeration() {
    let mut r = rng(21);
    for i in 0..400 {
        let n = r.gen_range(2..=7);
        let m = r.gen_range(0..=12);
        let lo = if i % 2 == 0 { 0 } else { -3 };
        let g = instances::wdigraph(&mut r, n, m, lo, 9);
        let negative = oracles::has_negative_cycle(&g);
        let negative_arc = g.edges().any(|e| g.weight(e) < 0);
        let s = r.gen_range(1..=n);
        let want = oracles::distances(&g, s);
        for algo in [SptAlgo::Dijkstra, SptAlgo::BellmanMoore] {
            match paths::spt(&g, s, algo) {
                Ok(t) => {
                    assert!(!negative_arc || algo == SptAlgo::BellmanMoore);
                    assert_eq!(t.dist, want, "{}", algo.name());
                    assert_eq!(spt_verify(&g, s, &t), Ok(()));
                }
                Err(Error::NegativeLength(_)) => assert_eq!(algo, SptAlgo::Dijkstra),
                Err(Error::NegativeCycle(c)) => {
                    assert!(negative);
                    let total: i64 = c.iter().map(|&e| g.weight(e)).sum();
                    assert!(total < 0);
                }
                Err(e) => panic!("{e}"),
            }
        }
        for algo in [ApspAlgo::Floyd, ApspAlgo::EdmondsKarp] {
            match paths::apsp(&g, algo) {
                Ok(a) => {
                    assert!(!negative);
                    for u in 1..=n {
                        assert_eq!(a.dist[u], oracles::distances(&g, u), "{}", algo.name());
                    }
                    assert_eq!(apsp_verify(&g, &a), Ok(()));
                }
                Err(Error::NegativeCycle(_)) => assert!(negative, "{}", algo.name()),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn max_flow_matches_cut_and_flow_enumeration() {
    let mut r = rng(31);
    for i in 0..400 {
        let n = r.gen_range(2..=7);
        let small = i % 2 == 0;
        let m = r.gen_range(0..=if small { 8 } else { 16 });
        let f0 = instances::flow_graph(&mut r, n, m, if small { 3 } else { 20 }, 0, 0);
        let cut = oracles::min_cut_capacity(&f0);
        if small {
            assert_eq!(oracles::max_flow_value(&f0), Some(cut));
        }
        for algo in maxflow::Algo::ALL {
            let mut f = f0.clone();
            let v = maxflow::max_flow(&mut f, algo).unwrap();
            assert_eq!(v, cut, "{}", algo.name());
            assert_eq!(flow_verify(&f, v), Ok(()));
        }
    }
}

#[test]
fn max_flow_with_floors_matches_enumeration() {
    let mut r = rng(32);
    let mut infeasible = 0;
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(1..=8);
        let f0 = instances::floor_graph(&mut r, n, m, 3);
        let want = oracles::max_flow_value(&f0);
        for algo in maxflow::Algo::ALL {
            let mut f = f0.clone();
            match (maxflow::max_flow(&mut f, algo), want) {
                (Ok(v), Some(w)) => {
                    assert_eq!(v, w, "{}", algo.name());
                    assert_eq!(flow_verify(&f, v), Ok(()));
                }
                (Err(Error::Infeasible { .. }), None) => infeasible += 1,
                (got, want) => panic!("{}: {got:?} vs {want:?}", algo.name()),
            }
        }
    }
    assert!(infeasible > 0);
}

#[test]
fn min_cost_flow_matches_enumeration() {
    let mut r = rng(41);
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(0..=8);
        let f0 = instances::flow_graph(&mut r, n, m, 3, 0, 5);
        let (flow, cost) = oracles::min_cost_max_flow(&f0).unwrap();
        for algo in mincost::Algo::ALL {
            let mut f = f0.clone();
            let res = mincost::min_cost_flow(&mut f, algo).unwrap();
            assert_eq!((res.flow, res.cost), (flow, cost), "{}", algo.name());
            assert_eq!(mcf_verify(&f, res), Ok(()));
        }
    }
}

#[test]
fn cycle_reduction_handles_negative_costs() {
    let mut r = rng(42);
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(0..=8);
        let f0 = instances::flow_graph(&mut r, n, m, 3, -4, 5);
        let want = oracles::min_cost_max_flow(&f0).unwrap();
        let mut f = f0.clone();
        let res = mincost::min_cost_flow(&mut f, mincost::Algo::Cr).unwrap();
        assert_eq!((res.flow, res.cost), want);
        assert_eq!(mcf_verify(&f, res), Ok(()));
        for algo in [mincost::Algo::Lc, mincost::Algo::Scale] {
            let mut f = f0.clone();
            match mincost::min_cost_flow(&mut f, algo) {
                Ok(res) => assert_eq!((res.flow, res.cost), want, "{}", algo.name()),
                Err(Error::NegativeCycle(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn matching_size_matches_enumeration() {
    let mut r = rng(51);
    for _ in 0..300 {
        let a = r.gen_range(1..=4);
        let b = r.gen_range(1..=4);
        let m = r.gen_range(0..=10);
        let g = instances::bipartite(&mut r, a, b, m);
        let want = oracles::max_matching_size(&g);
        for algo in SizeAlgo::ALL {
            let mm = matching::max_size_matching(&g, algo).unwrap();
            assert_eq!(mm.size(), want, "{}", algo.name());
            assert_eq!(matching_verify(&g, &mm), Ok(()));
        }
        let side = matching::bipartition(&g).unwrap();
        let mm = matching::hopcroft_karp(&g).unwrap();
        assert_eq!(matching::konig_cover(&g, &side, &mm).len(), want);
    }
}

#[test]
fn general_matching_matches_enumeration() {
    let mut r = rng(52);
    for _ in 0..400 {
        let n = r.gen_range(2..=8);
        let m = r.gen_range(0..=14);
        let g = instances::ugraph(&mut r, n, m);
        let mm = matching::edmonds_gabow(&g);
        assert_eq!(mm.size(), oracles::max_matching_size(&g));
        assert_eq!(matching_verify(&g, &mm), Ok(()));
    }
}

#[test]
fn matching_weight_matches_enumeration() {
    let mut r = rng(53);
    for _ in 0..300 {
        let a = r.gen_range(1..=4);
        let b = r.gen_range(1..=4);
        let m = r.gen_range(0..=10);
        let g = instances::wbipartite(&mut r, a, b, m, 9);
        let want = oracles::max_matching_weight(&g);
        for algo in WeightAlgo::ALL {
            let mm = matching::max_weight_matching(&g, algo).unwrap();
            assert_eq!(mm.weight(&g), want, "{}", algo.name());
            assert_eq!(matching_verify_weight(&g, &mm), Ok(()));
        }
    }
}

#[test]
fn edge_coloring_uses_max_degree_colors() {
    let mut r = rng(61);
    for _ in 0..200 {
        let g = instances::bipartite_multigraph(&mut r, 12, 40);
        let greedy = oracles::greedy_colors(&g);
        for algo in ecolor::Algo::ALL {
            let c = ecolor::ecolor(&g, algo).unwrap();
            assert_eq!(c.num_colors, g.max_degree());
            assert!(c.num_colors <= greedy);
            assert_eq!(ecolor_verify(&g, &c), Ok(0), "{}", algo.name());
            for class in c.classes() {
                let mm = matching::Matching::from_edges(&g, &class);
                assert_eq!(mm.size(), class.len());
            }
        }
    }
}
