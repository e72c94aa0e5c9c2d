//! Exhaustive solvers for tiny instances. They share no code with the
//! library algorithms beyond reading the graph.

use grafalgo_core::graph::{FlowGraph, Graph, WGraph};
use grafalgo_core::{Edge, Vertex};

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        x = p[x];
    }
    x
}

fn components(g: &Graph) -> usize {
    let mut p: Vec<usize> = (0..=g.n()).collect();
    let mut c = g.n();
    for e in g.edges() {
        let (a, b) = (find(&mut p, g.left(e)), find(&mut p, g.right(e)));
        if a != b {
            p[a] = b;
            c -= 1;
        }
    }
    c
}

/// Weight of a minimum spanning forest and every edge set achieving it,
/// found by trying all acyclic edge subsets of the right size.
pub fn spanning_forests(g: &WGraph) -> (i64, Vec<Vec<Edge>>) {
    let edges: Vec<Edge> = g.edges().collect();
    let need = g.n() - components(g);
    let mut best = (i64::MAX, Vec::new());
    let mut chosen = Vec::new();
    fn rec(g: &WGraph, edges: &[Edge], i: usize, need: usize, chosen: &mut Vec<Edge>, best: &mut (i64, Vec<Vec<Edge>>)) {
        if chosen.len() == need {
            let mut p: Vec<usize> = (0..=g.n()).collect();
            for &e in chosen.iter() {
                let (a, b) = (find(&mut p, g.left(e)), find(&mut p, g.right(e)));
                if a == b {
                    return;
                }
                p[a] = b;
            }
            let w: i64 = chosen.iter().map(|&e| g.weight(e)).sum();
            if w < best.0 {
                *best = (w, vec![chosen.clone()]);
            } else if w == best.0 {
                best.1.push(chosen.clone());
            }
            return;
        }
        if edges.len() - i < need - chosen.len() {
            return;
        }
        chosen.push(edges[i]);
        rec(g, edges, i + 1, need, chosen, best);
        chosen.pop();
        rec(g, edges, i + 1, need, chosen, best);
    }
    rec(g, &edges, 0, need, &mut chosen, &mut best);
    if need == 0 {
        return (0, vec![Vec::new()]);
    }
    best
}

/// Shortest distances from `s` over all simple directed paths. Correct
/// whenever no negative cycle is reachable from `s`.
pub fn distances(g: &WGraph, s: Vertex) -> Vec<Option<i64>> {
    let n = g.n();
    let mut dist = vec![None; n + 1];
    let mut on_path = vec![false; n + 1];
    fn rec(g: &WGraph, u: Vertex, d: i64, on_path: &mut [bool], dist: &mut [Option<i64>]) {
        if dist[u].is_none_or(|x| d < x) {
            dist[u] = Some(d);
        }
        on_path[u] = true;
        for e in g.out_edges(u) {
            let v = g.head(e);
            if !on_path[v] {
                rec(g, v, d + g.weight(e), on_path, dist);
            }
        }
        on_path[u] = false;
    }
    rec(g, s, 0, &mut on_path, &mut dist);
    dist
}

/// Whether some directed cycle has negative total length, by trying every
/// simple cycle.
pub fn has_negative_cycle(g: &WGraph) -> bool {
    let n = g.n();
    fn rec(g: &WGraph, start: Vertex, u: Vertex, d: i64, on_path: &mut [bool]) -> bool {
        for e in g.out_edges(u) {
            let v = g.head(e);
            let dv = d + g.weight(e);
            if v == start && dv < 0 {
                return true;
            }
            // each cycle is found from its smallest vertex
            if v > start && !on_path[v] {
                on_path[v] = true;
                let found = rec(g, start, v, dv, on_path);
                on_path[v] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut on_path = vec![false; n + 1];
    (1..=n).any(|s| {
        on_path[s] = true;
        let found = rec(g, s, s, 0, &mut on_path);
        on_path[s] = false;
        found
    })
}

/// Minimum capacity of a cut separating source from sink, over every
/// vertex subset.
pub fn min_cut_capacity(f: &FlowGraph) -> i64 {
    let n = f.n();
    assert!(n <= 20);
    let (s, t) = (f.source(), f.sink());
    let edges: Vec<Edge> = f.edges().collect();
    let mut best = i64::MAX;
    for mask in 0u32..(1 << n) {
        let inside = |v: Vertex| mask >> (v - 1) & 1 == 1;
        if !inside(s) || inside(t) {
            continue;
        }
        let c: i64 = edges.iter().filter(|&&e| inside(f.tail(e)) && !inside(f.head(e))).map(|&e| f.cap(e)).sum();
        best = best.min(c);
    }
    best
}

/// Every integral flow between floor and capacity that is conserved at
/// all vertices other than source and sink, as `(value, cost)` pairs
/// passed to `visit`.
fn each_flow(f: &FlowGraph, mut visit: impl FnMut(i64, i64)) {
    let edges: Vec<Edge> = f.edges().collect();
    let n = f.n();
    let mut balance = vec![0i64; n + 1];
    // index of the last edge touching each vertex, for pruning
    let mut last_use = vec![0usize; n + 1];
    for (i, &e) in edges.iter().enumerate() {
        last_use[f.tail(e)] = i + 1;
        last_use[f.head(e)] = i + 1;
    }
    struct Ctx<'a, F> {
        f: &'a FlowGraph,
        edges: &'a [Edge],
        last_use: &'a [usize],
        visit: F,
    }
    fn rec<F: FnMut(i64, i64)>(c: &mut Ctx<F>, i: usize, balance: &mut [i64], cost: i64) {
        let (s, t) = (c.f.source(), c.f.sink());
        if i == c.edges.len() {
            (c.visit)(balance[s], cost);
            return;
        }
        let e = c.edges[i];
        let (u, v) = (c.f.tail(e), c.f.head(e));
        for x in c.f.floor(e)..=c.f.cap(e) {
            balance[u] += x;
            balance[v] -= x;
            let closed = |w: Vertex| w == s || w == t || c.last_use[w] != i + 1 || balance[w] == 0;
            if closed(u) && closed(v) {
                rec(c, i + 1, balance, cost + x * c.f.cost(e));
            }
            balance[u] -= x;
            balance[v] += x;
        }
    }
    // vertices never touched by an edge are trivially balanced
    let mut c = Ctx { f, edges: &edges, last_use: &last_use, visit: &mut visit };
    rec(&mut c, 0, &mut balance, 0);
}

/// Maximum flow value among all feasible integral flows, `None` if there
/// is none. Honors floors.
pub fn max_flow_value(f: &FlowGraph) -> Option<i64> {
    let mut best = None;
    each_flow(f, |v, _| {
        if best.is_none_or(|b| v > b) {
            best = Some(v);
        }
    });
    best
}

/// Maximum flow value and the least cost of a flow with that value.
pub fn min_cost_max_flow(f: &FlowGraph) -> Option<(i64, i64)> {
    let mut best: Option<(i64, i64)> = None;
    each_flow(f, |v, c| {
        if best.is_none_or(|(bv, bc)| v > bv || (v == bv && c < bc)) {
            best = Some((v, c));
        }
    });
    best
}

fn each_matching(g: &Graph, mut visit: impl FnMut(&[Edge])) {
    let edges: Vec<Edge> = g.edges().collect();
    let mut used = vec![false; g.n() + 1];
    let mut chosen = Vec::new();
    fn rec(g: &Graph, edges: &[Edge], i: usize, used: &mut [bool], chosen: &mut Vec<Edge>, visit: &mut dyn FnMut(&[Edge])) {
        if i == edges.len() {
            visit(chosen);
            return;
        }
        rec(g, edges, i + 1, used, chosen, visit);
        let (u, v) = (g.left(edges[i]), g.right(edges[i]));
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            chosen.push(edges[i]);
            rec(g, edges, i + 1, used, chosen, visit);
            chosen.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    rec(g, &edges, 0, &mut used, &mut chosen, &mut visit);
}

pub fn max_matching_size(g: &Graph) -> usize {
    let mut best = 0;
    each_matching(g, |m| best = best.max(m.len()));
    best
}

pub fn max_matching_weight(g: &WGraph) -> i64 {
    let mut best = 0;
    each_matching(g, |m| best = best.max(m.iter().map(|&e| g.weight(e)).sum()));
    best
}

/// Number of colors used by a greedy edge coloring (first color free at
/// both ends); an upper bound of `2Δ - 1` on the optimum.
pub fn greedy_colors(g: &Graph) -> usize {
    let mut used: Vec<Vec<bool>> = vec![Vec::new(); g.n() + 1];
    let mut most = 0;
    for e in g.edges() {
        let (u, v) = (g.left(e), g.right(e));
        let c = (0..)
            .find(|&c| !used[u].get(c).copied().unwrap_or(false) && !used[v].get(c).copied().unwrap_or(false))
            .unwrap();
        for w in [u, v] {
            if used[w].len() <= c {
                used[w].resize(c + 1, false);
            }
            used[w][c] = true;
        }
        most = most.max(c + 1);
    }
    most
}
