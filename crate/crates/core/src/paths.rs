//! Shortest paths: single source (Dijkstra, Bellman-Moore) and all pairs
//! (Floyd, and Edmonds-Karp reweighting with one Dijkstra per source).
//!
//! Edges of a directed graph are followed from tail to head; edges of an
//! undirected graph in both directions. Unreachable vertices have distance
//! `None`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::graph::WGraph;
use crate::heaps::{arity_for, DHeap};
use crate::{Edge, Error, Result, Vertex, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SptAlgo {
    Dijkstra,
    BellmanMoore,
}

impl SptAlgo {
    pub const ALL: [SptAlgo; 2] = [SptAlgo::Dijkstra, SptAlgo::BellmanMoore];

    pub fn name(self) -> &'static str {
        match self {
            SptAlgo::Dijkstra => "dijkstra",
            SptAlgo::BellmanMoore => "bellmanmoore",
        }
    }
}

impl FromStr for SptAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SptAlgo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown shortest path algorithm"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApspAlgo {
    Floyd,
    EdmondsKarp,
}

impl ApspAlgo {
    pub const ALL: [ApspAlgo; 2] = [ApspAlgo::Floyd, ApspAlgo::EdmondsKarp];

    pub fn name(self) -> &'static str {
        match self {
            ApspAlgo::Floyd => "floyd",
            ApspAlgo::EdmondsKarp => "edmondskarp",
        }
    }
}

impl FromStr for ApspAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ApspAlgo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown all-pairs algorithm"))
    }
}

/// Shortest path tree: the edge to each vertex's parent and its distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTree {
    pub source: Vertex,
    /// `parent[v]` is the last edge of the path to `v`; 0 at the source and
    /// at unreachable vertices.
    pub parent: Vec<Edge>,
    pub dist: Vec<Option<i64>>,
}

impl PathTree {
    fn new(n: usize, source: Vertex) -> Self {
        let mut dist = vec![None; n + 1];
        dist[source] = Some(0);
        PathTree { source, parent: vec![0; n + 1], dist }
    }

    /// Sum of the finite distances.
    pub fn distance_sum(&self) -> i64 {
        self.dist.iter().flatten().sum()
    }

    /// Tree edges in order of the vertex they lead to.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.parent.iter().copied().filter(|&e| e != 0)
    }
}

/// Distances and last edges of shortest paths between all pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Apsp {
    /// `dist[u][v]`, indexed from 1.
    pub dist: Vec<Vec<Option<i64>>>,
    /// `parent[u][v]`: last edge of a shortest `u`-`v` path, 0 if none.
    pub parent: Vec<Vec<Edge>>,
}

impl Apsp {
    /// Row `u` as a shortest path tree rooted at `u`.
    pub fn tree(&self, u: Vertex) -> PathTree {
        PathTree { source: u, parent: self.parent[u].clone(), dist: self.dist[u].clone() }
    }
}

fn check_source(g: &WGraph, s: Vertex) -> Result<()> {
    if s == 0 || s > g.n() {
        Err(Error::OutOfRange { index: s, bound: g.n() })
    } else {
        Ok(())
    }
}

pub fn spt(g: &WGraph, s: Vertex, algo: SptAlgo) -> Result<PathTree> {
    match algo {
        SptAlgo::Dijkstra => dijkstra(g, s),
        SptAlgo::BellmanMoore => bellman_moore(g, s),
    }
}

/// Dijkstra's algorithm on a d-heap of arity `2 + m/n`. Rejects graphs
/// with a negative edge length.
pub fn dijkstra(g: &WGraph, s: Vertex) -> Result<PathTree> {
    check_source(g, s)?;
    if let Some(e) = g.edges().find(|&e| g.weight(e) < 0) {
        return Err(Error::NegativeLength(e));
    }
    let mut heap = DHeap::with_arity(g.n(), arity_for(g.n(), g.m()));
    Ok(dijkstra_with(g, s, &mut heap, |e, _| g.weight(e)))
}

/// Dijkstra from `s` with a caller-supplied non-negative length function
/// `len(e, from)`.
fn dijkstra_with(
    g: &WGraph,
    s: Vertex,
    heap: &mut DHeap<i64>,
    len: impl Fn(Edge, Vertex) -> i64,
) -> PathTree {
    let mut t = PathTree::new(g.n(), s);
    let mut done = vec![false; g.n() + 1];
    heap.clear();
    heap.insert(s, 0).expect("empty heap");
    while let Ok(u) = heap.delete_min() {
        done[u] = true;
        let du = heap.key(u);
        t.dist[u] = Some(du);
        for e in g.out_edges(u) {
            let v = g.mate(u, e);
            if done[v] {
                continue;
            }
            let dv = du + len(e, u);
            if !heap.contains(v) {
                heap.insert(v, dv).expect("absent item");
                t.parent[v] = e;
            } else if dv < heap.key(v) {
                heap.change_key(v, dv).expect("present item");
                t.parent[v] = e;
            }
        }
    }
    t
}

/// Bellman-Moore: a queue of vertices whose distance improved. A vertex
/// removed from the queue more than `n` times proves a negative cycle
/// reachable from `s`.
pub fn bellman_moore(g: &WGraph, s: Vertex) -> Result<PathTree> {
    check_source(g, s)?;
    let n = g.n();
    let mut t = PathTree::new(n, s);
    let mut queued = vec![false; n + 1];
    let mut passes = vec![0usize; n + 1];
    let mut queue = VecDeque::from([s]);
    queued[s] = true;
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        passes[u] += 1;
        if passes[u] > n {
            let cycle = negative_cycle(g, Some(s)).expect("negative cycle reachable from source");
            return Err(Error::NegativeCycle(cycle));
        }
        let du = t.dist[u].expect("queued vertices are reached");
        for e in g.out_edges(u) {
            let v = g.mate(u, e);
            let dv = du + g.weight(e);
            if t.dist[v].is_none_or(|old| dv < old) {
                t.dist[v] = Some(dv);
                t.parent[v] = e;
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(t)
}

/// A negative cycle of `g` reachable from `from`, or anywhere when `from`
/// is `None`, as edges in cycle order.
pub fn negative_cycle(g: &WGraph, from: Option<Vertex>) -> Option<Vec<Edge>> {
    let mut arcs = Vec::with_capacity(2 * g.m());
    for e in g.edges() {
        arcs.push(Arc { from: g.tail(e), to: g.head(e), len: g.weight(e), id: e });
        if !g.is_directed() {
            arcs.push(Arc { from: g.head(e), to: g.tail(e), len: g.weight(e), id: e });
        }
    }
    find_negative_cycle(g.n(), &arcs, from)
}

/// Arc of an ad hoc digraph handed to [`find_negative_cycle`].
#[derive(Clone, Copy, Debug)]
pub struct Arc {
    pub from: Vertex,
    pub to: Vertex,
    pub len: i64,
    pub id: usize,
}

/// Bellman-Ford over an explicit arc list on vertices `1..=n`. Returns the
/// ids of the arcs of some negative cycle reachable from `from` (from any
/// vertex when `None`), in cycle order.
pub fn find_negative_cycle(n: usize, arcs: &[Arc], from: Option<Vertex>) -> Option<Vec<usize>> {
    let mut dist: Vec<Option<i64>> = match from {
        Some(s) => {
            let mut d = vec![None; n + 1];
            d[s] = Some(0);
            d
        }
        None => vec![Some(0); n + 1],
    };
    let mut pred: Vec<Option<usize>> = vec![None; n + 1];
    let mut last = 0;
    for _ in 0..n {
        last = 0;
        for (i, a) in arcs.iter().enumerate() {
            if let Some(du) = dist[a.from] {
                if dist[a.to].is_none_or(|dv| du + a.len < dv) {
                    dist[a.to] = Some(du + a.len);
                    pred[a.to] = Some(i);
                    last = a.to;
                }
            }
        }
        if last == 0 {
            return None;
        }
    }
    let mut v = last;
    for _ in 0..n {
        v = arcs[pred[v].expect("relaxed vertex has a predecessor")].from;
    }
    let start = v;
    let mut cycle = Vec::new();
    loop {
        let a = pred[v].expect("cycle vertex has a predecessor");
        cycle.push(arcs[a].id);
        v = arcs[a].from;
        if v == start {
            break;
        }
    }
    cycle.reverse();
    Some(cycle)
}

pub fn apsp(g: &WGraph, algo: ApspAlgo) -> Result<Apsp> {
    match algo {
        ApspAlgo::Floyd => floyd(g),
        ApspAlgo::EdmondsKarp => edmonds_karp(g),
    }
}

/// Floyd's algorithm.
pub fn floyd(g: &WGraph) -> Result<Apsp> {
    let n = g.n();
    let mut dist = vec![vec![None; n + 1]; n + 1];
    let mut parent = vec![vec![0; n + 1]; n + 1];
    for u in 1..=n {
        dist[u][u] = Some(0);
        for e in g.out_edges(u) {
            let v = g.mate(u, e);
            let w = g.weight(e);
            if dist[u][v].is_none_or(|d| w < d) {
                dist[u][v] = Some(w);
                parent[u][v] = e;
            }
        }
    }
    for k in 1..=n {
        for u in 1..=n {
            let Some(duk) = dist[u][k] else { continue };
            for v in 1..=n {
                let Some(dkv) = dist[k][v] else { continue };
                if dist[u][v].is_none_or(|d| duk + dkv < d) {
                    dist[u][v] = Some(duk + dkv);
                    parent[u][v] = parent[k][v];
                }
            }
        }
        if dist[k][k].is_some_and(|d| d < 0) {
            let cycle = negative_cycle(g, None).expect("negative diagonal entry");
            return Err(Error::NegativeCycle(cycle));
        }
    }
    if (1..=n).any(|u| dist[u][u].is_some_and(|d| d < 0)) {
        let cycle = negative_cycle(g, None).expect("negative diagonal entry");
        return Err(Error::NegativeCycle(cycle));
    }
    for u in 1..=n {
        parent[u][u] = 0;
    }
    Ok(Apsp { dist, parent })
}

/// Edmonds-Karp: Bellman-Moore from an artificial source adjacent to every
/// vertex yields potentials `p`; lengths `len(u,v) + p(u) - p(v)` are
/// non-negative, so Dijkstra from each vertex finds the distances, which
/// are then shifted back.
pub fn edmonds_karp(g: &WGraph) -> Result<Apsp> {
    let n = g.n();
    let p = potentials(g)?;
    let mut heap = DHeap::with_arity(n, arity_for(n, g.m()));
    let mut dist = vec![vec![None; n + 1]; n + 1];
    let mut parent = vec![vec![0; n + 1]; n + 1];
    for u in 1..=n {
        let t = dijkstra_with(g, u, &mut heap, |e, from| {
            g.weight(e) + p[from] - p[g.mate(from, e)]
        });
        for v in 1..=n {
            dist[u][v] = t.dist[v].map(|d| d - p[u] + p[v]);
        }
        parent[u] = t.parent;
    }
    Ok(Apsp { dist, parent })
}

/// Shortest distances from a virtual source joined to every vertex by a
/// zero-length edge.
fn potentials(g: &WGraph) -> Result<Vec<i64>> {
    let n = g.n();
    let mut p = vec![0i64; n + 1];
    let mut queued = vec![true; n + 1];
    let mut passes = vec![0usize; n + 1];
    let mut queue: VecDeque<Vertex> = (1..=n).collect();
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        passes[u] += 1;
        if passes[u] > n + 1 {
            let cycle = negative_cycle(g, None).expect("negative cycle exists");
            return Err(Error::NegativeCycle(cycle));
        }
        for e in g.out_edges(u) {
            let v = g.mate(u, e);
            if p[u] + g.weight(e) < p[v] {
                p[v] = p[u] + g.weight(e);
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(p)
}

/// Checks that `t` is a shortest path tree of `g` rooted at `s`.
pub fn spt_verify(g: &WGraph, s: Vertex, t: &PathTree) -> core::result::Result<(), Violation> {
    let n = g.n();
    if t.dist.len() != n + 1 || t.parent.len() != n + 1 || s == 0 || s > n {
        return Err(Violation::Source);
    }
    if t.dist[s] != Some(0) || t.parent[s] != 0 {
        return Err(Violation::Source);
    }
    for v in 1..=n {
        if v == s {
            continue;
        }
        let e = t.parent[v];
        match (e, t.dist[v]) {
            (0, None) => {}
            (0, Some(_)) | (_, None) => return Err(Violation::Reachability(v)),
            (e, Some(dv)) => {
                if !g.is_edge(e) || !(g.head(e) == v || (!g.is_directed() && g.tail(e) == v)) {
                    return Err(Violation::BadParent(v));
                }
                let u = g.mate(v, e);
                match t.dist[u] {
                    Some(du) if du + g.weight(e) == dv => {}
                    Some(_) => return Err(Violation::Bellman(e)),
                    None => return Err(Violation::BadParent(v)),
                }
            }
        }
    }
    for u in 1..=n {
        let Some(du) = t.dist[u] else { continue };
        for e in g.out_edges(u) {
            let v = g.mate(u, e);
            match t.dist[v] {
                None => return Err(Violation::Reachability(v)),
                Some(dv) if dv > du + g.weight(e) => return Err(Violation::Bellman(e)),
                Some(_) => {}
            }
        }
    }
    // every parent chain must reach the source
    let mut state = vec![0u8; n + 1];
    state[s] = 2;
    for v in 1..=n {
        if t.dist[v].is_none() || state[v] == 2 {
            continue;
        }
        let mut path = Vec::new();
        let mut x = v;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            x = g.mate(x, t.parent[x]);
        }
        if state[x] == 1 {
            return Err(Violation::BadParent(x));
        }
        for y in path {
            state[y] = 2;
        }
    }
    Ok(())
}

/// Checks every row of an all-pairs result with [`spt_verify`].
pub fn apsp_verify(g: &WGraph, r: &Apsp) -> core::result::Result<(), Violation> {
    let n = g.n();
    if r.dist.len() != n + 1 || r.parent.len() != n + 1 {
        return Err(Violation::Source);
    }
    (1..=n).try_for_each(|u| spt_verify(g, u, &r.tree(u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The six-vertex digraph with edges numbered in listing order.
    fn six() -> WGraph {
        let mut g = WGraph::new_directed(6, 15);
        let edges = [
            (1, 2, 5), (1, 3, 2), (1, 4, 4), (2, 6, 8), (3, 2, 7), (3, 4, 5), (3, 5, 1),
            (4, 2, 1), (4, 3, 2), (5, 1, 1), (5, 3, 7), (5, 4, 6), (5, 6, 8), (6, 2, 3),
            (6, 4, 1),
        ];
        for (u, v, w) in edges {
            g.add_edge(u, v, w).unwrap();
        }
        g
    }

    #[test]
    fn six_vertex_distances() {
        let g = six();
        for a in SptAlgo::ALL {
            let t = spt(&g, 1, a).unwrap();
            let d: Vec<i64> = t.dist[1..].iter().map(|d| d.unwrap()).collect();
            assert_eq!(d, vec![0, 5, 2, 4, 3, 11], "{}", a.name());
            assert_eq!(t.distance_sum(), 25);
            assert_eq!(t.edges().collect::<Vec<_>>(), vec![1, 2, 3, 7, 13]);
            assert_eq!(spt_verify(&g, 1, &t), Ok(()));
        }
        for a in ApspAlgo::ALL {
            let r = apsp(&g, a).unwrap();
            assert_eq!(r.dist[1][1..], [Some(0), Some(5), Some(2), Some(4), Some(3), Some(11)]);
            assert_eq!(apsp_verify(&g, &r), Ok(()));
        }
    }

    #[test]
    fn verifier_flags_bad_distance() {
        let g = six();
        let mut t = dijkstra(&g, 1).unwrap();
        t.dist[6] = Some(10);
        assert_eq!(spt_verify(&g, 1, &t), Err(Violation::Bellman(13)));
    }

    #[test]
    fn unreachable() {
        let mut g = WGraph::new_directed(3, 2);
        g.add_edge(2, 1, 4).unwrap();
        for a in SptAlgo::ALL {
            let t = spt(&g, 1, a).unwrap();
            assert_eq!(t.dist, vec![None, Some(0), None, None]);
            assert_eq!(spt_verify(&g, 1, &t), Ok(()));
        }
        let g = WGraph::new_directed(2, 0);
        let r = floyd(&g).unwrap();
        assert_eq!(r.dist[1], vec![None, Some(0), None]);
        assert_eq!(r, edmonds_karp(&g).unwrap());
    }

    #[test]
    fn negative_lengths() {
        let mut g = WGraph::new_directed(4, 5);
        g.add_edge(1, 2, 4).unwrap();
        g.add_edge(1, 3, 2).unwrap();
        g.add_edge(2, 3, -3).unwrap();
        g.add_edge(3, 4, 1).unwrap();
        assert_eq!(dijkstra(&g, 1), Err(Error::NegativeLength(3)));
        let t = bellman_moore(&g, 1).unwrap();
        assert_eq!(t.dist[4], Some(2));
        assert_eq!(floyd(&g).unwrap().dist, edmonds_karp(&g).unwrap().dist);
        g.add_edge(4, 2, 1).unwrap();
        let cyc = vec![5, 3, 4];
        assert_eq!(bellman_moore(&g, 1), Err(Error::NegativeCycle(cyc)));
        assert!(matches!(floyd(&g), Err(Error::NegativeCycle(_))));
        assert!(matches!(edmonds_karp(&g), Err(Error::NegativeCycle(_))));
    }
}
