//! Random instance builders for the oracle suites.

use grafalgo_core::graph::{FlowGraph, Graph, WGraph};
use rand::Rng;

/// Connected undirected weighted graph: a random spanning tree plus
/// `extra` more edges (parallel edges possible).
pub fn connected_wgraph(rng: &mut impl Rng, n: usize, extra: usize, wmax: i64) -> WGraph {
    let mut g = WGraph::new(n, n - 1 + extra);
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        g.add_edge(u, v, rng.gen_range(1..=wmax)).unwrap();
    }
    for _ in 0..extra {
        let (u, v) = distinct_pair(rng, n);
        g.add_edge(u, v, rng.gen_range(1..=wmax)).unwrap();
    }
    g
}

fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(1..=n);
    let mut v = rng.gen_range(1..n);
    if v >= u {
        v += 1;
    }
    (u, v)
}

/// Directed weighted graph with `m` random arcs and lengths in `lo..=hi`.
pub fn wdigraph(rng: &mut impl Rng, n: usize, m: usize, lo: i64, hi: i64) -> WGraph {
    let mut g = WGraph::new_directed(n, m);
    for _ in 0..m {
        let (u, v) = distinct_pair(rng, n);
        g.add_edge(u, v, rng.gen_range(lo..=hi)).unwrap();
    }
    g
}

/// Flow network on `n` vertices, source 1, sink `n`, `m` random arcs with
/// capacities in `1..=cmax` and costs in `cost_lo..=cost_hi`.
pub fn flow_graph(rng: &mut impl Rng, n: usize, m: usize, cmax: i64, cost_lo: i64, cost_hi: i64) -> FlowGraph {
    let mut f = FlowGraph::with_costs(n, m, 1, n).unwrap();
    for _ in 0..m {
        let (u, v) = distinct_pair(rng, n);
        let e = f.add_edge(u, v, rng.gen_range(1..=cmax)).unwrap();
        f.set_cost(e, rng.gen_range(cost_lo..=cost_hi)).unwrap();
    }
    f
}

/// Flow network without costs whose edges get random floors up to their
/// capacity with probability `1/4`.
pub fn floor_graph(rng: &mut impl Rng, n: usize, m: usize, cmax: i64) -> FlowGraph {
    let mut f = FlowGraph::with_floors(n, m, 1, n).unwrap();
    for _ in 0..m {
        let (u, v) = distinct_pair(rng, n);
        let cap = rng.gen_range(1..=cmax);
        let e = f.add_edge(u, v, cap).unwrap();
        if rng.gen_ratio(1, 4) {
            f.set_floor(e, rng.gen_range(1..=cap)).unwrap();
        }
    }
    f
}

/// Bipartite graph with sides `1..=a` and `a+1..=a+b` and `m` random edges
/// (parallel edges possible).
pub fn bipartite(rng: &mut impl Rng, a: usize, b: usize, m: usize) -> Graph {
    let mut g = Graph::new(a + b, m);
    for _ in 0..m {
        g.add_edge(rng.gen_range(1..=a), rng.gen_range(a + 1..=a + b)).unwrap();
    }
    g
}

/// Weighted version of [`bipartite`] with weights in `1..=wmax`.
pub fn wbipartite(rng: &mut impl Rng, a: usize, b: usize, m: usize, wmax: i64) -> WGraph {
    let mut g = WGraph::new(a + b, m);
    for _ in 0..m {
        g.add_edge(rng.gen_range(1..=a), rng.gen_range(a + 1..=a + b), rng.gen_range(1..=wmax)).unwrap();
    }
    g
}

/// Undirected graph with `m` random edges.
pub fn ugraph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut g = Graph::new(n, m);
    for _ in 0..m {
        let (u, v) = distinct_pair(rng, n);
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Bipartite multigraph on at most `nmax` vertices and `mmax` edges with
/// random side sizes.
pub fn bipartite_multigraph(rng: &mut impl Rng, nmax: usize, mmax: usize) -> Graph {
    let n = rng.gen_range(2..=nmax);
    let a = rng.gen_range(1..n);
    let m = rng.gen_range(0..=mmax);
    bipartite(rng, a, n - a, m)
}
