//! Minimum spanning forests.
//!
//! All four algorithms return a spanning tree for every connected component
//! of the input. Equal weights are broken by edge number (Kruskal,
//! Cheriton-Tarjan) or vertex number (both Prim variants), so results are
//! deterministic but may differ between algorithms when weights tie.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::collections::Dsets;
use crate::graph::{edge_of, mate_endpoint, WGraph};
use crate::heaps::{arity_for, DHeap, FibHeap, LeftistHeaps};
use crate::{Edge, Error, Vertex, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Prim,
    PrimF,
    Kruskal,
    CheritonTarjan,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::Prim, Algo::PrimF, Algo::Kruskal, Algo::CheritonTarjan];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Prim => "prim",
            Algo::PrimF => "primf",
            Algo::Kruskal => "kruskal",
            Algo::CheritonTarjan => "cheritontarjan",
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown mst algorithm"))
    }
}

/// Edges of a spanning forest, in the order the algorithm chose them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mst {
    pub edges: Vec<Edge>,
    pub weight: i64,
}

impl Mst {
    fn from_edges(g: &WGraph, edges: Vec<Edge>) -> Self {
        let weight = edges.iter().map(|&e| g.weight(e)).sum();
        Mst { edges, weight }
    }
}

pub fn mst(g: &WGraph, algo: Algo) -> Mst {
    match algo {
        Algo::Prim => prim(g),
        Algo::PrimF => primf(g),
        Algo::Kruskal => kruskal(g),
        Algo::CheritonTarjan => cheriton_tarjan(g),
    }
}

/// Prim's algorithm with a d-heap of arity `2 + m/n`.
pub fn prim(g: &WGraph) -> Mst {
    prim_with_arity(g, arity_for(g.n(), g.m()))
}

/// Prim's algorithm with a d-heap of the given arity.
pub fn prim_with_arity(g: &WGraph, d: usize) -> Mst {
    let n = g.n();
    let mut heap: DHeap<i64> = DHeap::with_arity(n, d);
    let mut best = vec![0; n + 1];
    let mut done = vec![false; n + 1];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for s in 1..=n {
        if done[s] {
            continue;
        }
        heap.insert(s, 0).expect("fresh heap item");
        while let Ok(u) = heap.delete_min() {
            done[u] = true;
            if best[u] != 0 {
                edges.push(best[u]);
            }
            for e in g.edges_at(u) {
                let v = g.mate(u, e);
                if done[v] {
                    continue;
                }
                let w = g.weight(e);
                if !heap.contains(v) {
                    best[v] = e;
                    heap.insert(v, w).expect("absent item");
                } else if w < heap.key(v) {
                    best[v] = e;
                    heap.change_key(v, w).expect("present item");
                }
            }
        }
    }
    Mst::from_edges(g, edges)
}

/// Prim's algorithm with a Fibonacci heap.
pub fn primf(g: &WGraph) -> Mst {
    let n = g.n();
    let mut heap: FibHeap<i64> = FibHeap::new(n);
    let mut best = vec![0; n + 1];
    let mut done = vec![false; n + 1];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for s in 1..=n {
        if done[s] {
            continue;
        }
        heap.insert(s, 0).expect("fresh heap item");
        while let Ok(u) = heap.delete_min() {
            done[u] = true;
            if best[u] != 0 {
                edges.push(best[u]);
            }
            for e in g.edges_at(u) {
                let v = g.mate(u, e);
                if done[v] {
                    continue;
                }
                let w = g.weight(e);
                if !heap.contains(v) {
                    best[v] = e;
                    heap.insert(v, w).expect("absent item");
                } else if w < heap.key(v) {
                    best[v] = e;
                    heap.decrease_key(v, w).expect("smaller key");
                }
            }
        }
    }
    Mst::from_edges(g, edges)
}

/// Kruskal's algorithm: edges by increasing `(weight, number)`, skipping
/// those that would close a cycle.
pub fn kruskal(g: &WGraph) -> Mst {
    let mut order: Vec<Edge> = g.edges().collect();
    order.sort_by_key(|&e| (g.weight(e), e));
    let mut sets = Dsets::new(g.n());
    let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
    for e in order {
        let ru = sets.root(g.left(e));
        let rv = sets.root(g.right(e));
        if ru != rv {
            sets.link(ru, rv);
            edges.push(e);
            if edges.len() + 1 == g.n() {
                break;
            }
        }
    }
    Mst::from_edges(g, edges)
}

/// Cheriton and Tarjan's algorithm.
///
/// Each subtree of the growing forest owns a leftist heap holding the
/// endpoints of its incident edges, keyed by weight. Subtrees take turns in
/// a round-robin queue; the current one repeatedly removes its lightest
/// endpoint, discarding edges that have become internal, until it finds an
/// edge leaving the subtree. That edge joins two subtrees whose heaps are
/// melded and the merged subtree goes to the back of the queue. An edge
/// found internal, or chosen, has its other endpoint retired so that it is
/// dropped lazily when it surfaces in the other heap.
pub fn cheriton_tarjan(g: &WGraph) -> Mst {
    let n = g.n();
    let mut heaps: LeftistHeaps<i64> = LeftistHeaps::new(2 * g.max_edge() + 1);
    let mut heap = vec![0; n + 1];
    for u in 1..=n {
        for ep in g.endpoints_at(u) {
            heaps.set_key(ep, g.weight(edge_of(ep))).expect("endpoint in range");
            heap[u] = heaps.insert(ep, heap[u]).expect("endpoint in one heap");
        }
    }
    let mut sets = Dsets::new(n);
    let mut stamp = vec![0u32; n + 1];
    let mut queue: VecDeque<(Vertex, u32)> = (1..=n).map(|u| (u, 0)).collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    while let Some((r, s)) = queue.pop_front() {
        if !sets.is_root(r) || stamp[r] != s {
            continue;
        }
        let mut h = heap[r];
        let chosen = loop {
            match heaps.find_delete_min(h) {
                Err(_) => break None,
                Ok((ep, rest)) => {
                    h = rest;
                    let e = edge_of(ep);
                    heaps.retire(mate_endpoint(ep));
                    let (ru, rv) = (sets.root(g.left(e)), sets.root(g.right(e)));
                    if ru != rv {
                        break Some((e, if ru == r { rv } else { ru }));
                    }
                }
            }
        };
        heap[r] = h;
        if let Some((e, t)) = chosen {
            edges.push(e);
            let melded = heaps.meld(heap[r], heap[t]);
            let root = sets.link(r, t);
            heap[root] = melded;
            stamp[root] += 1;
            queue.push_back((root, stamp[root]));
        }
    }
    Mst::from_edges(g, edges)
}

/// Checks that `r` is a minimum spanning forest of `g` with the stated weight.
///
/// Reports the first failure among: edge validity, repetition, acyclicity,
/// total weight, spanning, and the cycle condition (no non-tree edge is
/// lighter than a tree edge on the tree path between its endpoints).
pub fn mst_verify(g: &WGraph, r: &Mst) -> Result<(), Violation> {
    let n = g.n();
    let mut in_tree = vec![false; g.max_edge() + 1];
    for &e in &r.edges {
        if !g.is_edge(e) {
            return Err(Violation::NotEdge(e));
        }
        if in_tree[e] {
            return Err(Violation::Repeated(e));
        }
        in_tree[e] = true;
    }
    let mut sets = Dsets::new(n);
    for &e in &r.edges {
        let (ru, rv) = (sets.root(g.left(e)), sets.root(g.right(e)));
        if ru == rv {
            return Err(Violation::Cycle(e));
        }
        sets.link(ru, rv);
    }
    let actual: i64 = r.edges.iter().map(|&e| g.weight(e)).sum();
    if actual != r.weight {
        return Err(Violation::Total { reported: r.weight, actual });
    }
    for e in g.edges() {
        if sets.root(g.left(e)) != sets.root(g.right(e)) {
            return Err(Violation::NotSpanning(g.right(e)));
        }
    }
    let forest = Lifting::new(g, &in_tree);
    for e in g.edges() {
        if in_tree[e] {
            continue;
        }
        let t = forest.heaviest(g, g.left(e), g.right(e));
        if g.weight(t) > g.weight(e) {
            return Err(Violation::CutOptimality { non_tree: e, tree: t });
        }
    }
    Ok(())
}

/// Rooted forest with binary lifting tables for path-maximum queries.
struct Lifting {
    depth: Vec<usize>,
    /// `up[k][u]`: ancestor `2^k` levels above `u` (0 past the root).
    up: Vec<Vec<Vertex>>,
    /// `heavy[k][u]`: heaviest edge on the path from `u` up `2^k` levels.
    heavy: Vec<Vec<Edge>>,
}

impl Lifting {
    fn new(g: &WGraph, in_tree: &[bool]) -> Self {
        let n = g.n();
        let mut depth = vec![0; n + 1];
        let mut parent = vec![0; n + 1];
        let mut pedge = vec![0; n + 1];
        let mut seen = vec![false; n + 1];
        let mut stack = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for e in g.edges_at(u) {
                    let v = g.mate(u, e);
                    if in_tree[e] && !seen[v] {
                        seen[v] = true;
                        parent[v] = u;
                        pedge[v] = e;
                        depth[v] = depth[u] + 1;
                        stack.push(v);
                    }
                }
            }
        }
        let mut up = vec![parent];
        let mut heavy = vec![pedge];
        let levels = usize::BITS - n.max(1).leading_zeros();
        for k in 1..levels as usize {
            let (pu, ph) = (&up[k - 1], &heavy[k - 1]);
            let mut nu = vec![0; n + 1];
            let mut nh = vec![0; n + 1];
            for u in 1..=n {
                let mid = pu[u];
                nu[u] = pu[mid];
                nh[u] = heavier(g, ph[u], ph[mid]);
            }
            up.push(nu);
            heavy.push(nh);
        }
        Lifting { depth, up, heavy }
    }

    /// Heaviest tree edge on the path between `u` and `v`, which must lie in
    /// the same tree and differ.
    fn heaviest(&self, g: &WGraph, mut u: Vertex, mut v: Vertex) -> Edge {
        let mut best = 0;
        if self.depth[u] < self.depth[v] {
            core::mem::swap(&mut u, &mut v);
        }
        let mut diff = self.depth[u] - self.depth[v];
        let mut k = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                best = heavier(g, best, self.heavy[k][u]);
                u = self.up[k][u];
            }
            diff >>= 1;
            k += 1;
        }
        if u == v {
            return best;
        }
        for k in (0..self.up.len()).rev() {
            if self.up[k][u] != self.up[k][v] {
                best = heavier(g, best, self.heavy[k][u]);
                best = heavier(g, best, self.heavy[k][v]);
                u = self.up[k][u];
                v = self.up[k][v];
            }
        }
        best = heavier(g, best, self.heavy[0][u]);
        heavier(g, best, self.heavy[0][v])
    }
}

fn heavier(g: &WGraph, a: Edge, b: Edge) -> Edge {
    match (a, b) {
        (0, _) => b,
        (_, 0) => a,
        _ if g.weight(b) > g.weight(a) => b,
        _ => a,
    }
}
