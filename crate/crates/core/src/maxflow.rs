//! Maximum flows.
//!
//! Every algorithm works on the residual capacities of a [`FlowGraph`], so
//! it can start from any feasible flow, including one that meets flow
//! floors. [`max_flow`] clears the flow, establishes the floors if there are
//! any, and then runs the chosen algorithm.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::dtrees::DynTrees;
use crate::graph::FlowGraph;
use crate::heaps::{arity_for, DHeap};
use crate::{Edge, Error, Result, Vertex, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    /// Shortest augmenting paths.
    Ffsp,
    /// Maximum-capacity augmenting paths.
    Ffmc,
    /// Capacity scaling.
    Ffs,
    Dinic,
    /// Dinic with dynamic trees.
    DinicDt,
    /// Preflow-push, first-in first-out.
    Ppf,
    /// Preflow-push, highest label first.
    Pphl,
}

impl Algo {
    pub const ALL: [Algo; 7] =
        [Algo::Ffsp, Algo::Ffmc, Algo::Ffs, Algo::Dinic, Algo::DinicDt, Algo::Ppf, Algo::Pphl];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Ffsp => "ffsp",
            Algo::Ffmc => "ffmc",
            Algo::Ffs => "ffs",
            Algo::Dinic => "dinic",
            Algo::DinicDt => "dinicdt",
            Algo::Ppf => "ppf",
            Algo::Pphl => "pphl",
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown max flow algorithm"))
    }
}

/// Computes a maximum flow from scratch and returns its value.
pub fn max_flow(f: &mut FlowGraph, algo: Algo) -> Result<i64> {
    if f.source() == f.sink() {
        return Err(Error::SourceIsSink);
    }
    f.clear_flow();
    if f.has_floors() && f.edges().any(|e| f.floor(e) > 0) {
        feasible_flow(f)?;
    }
    augment(f, algo)
}

/// Increases the current (feasible) flow to a maximum one and returns its value.
pub fn augment(f: &mut FlowGraph, algo: Algo) -> Result<i64> {
    if f.source() == f.sink() {
        return Err(Error::SourceIsSink);
    }
    match algo {
        Algo::Ffsp => ffsp(f),
        Algo::Ffmc => ffmc(f),
        Algo::Ffs => ffs(f),
        Algo::Dinic => dinic(f),
        Algo::DinicDt => dinic_dt(f),
        Algo::Ppf => preflow_push(f, false),
        Algo::Pphl => preflow_push(f, true),
    }
    Ok(f.total_flow())
}

/// Breadth-first search from the source over edges with residual capacity
/// at least `delta`. Returns the edge by which each vertex was reached when
/// the sink is reached.
fn bfs_path(f: &FlowGraph, delta: i64, pred: &mut [Edge], queue: &mut VecDeque<Vertex>) -> bool {
    let (s, t) = (f.source(), f.sink());
    pred.iter_mut().for_each(|p| *p = 0);
    queue.clear();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for e in f.edges_at(u) {
            let v = f.mate(u, e);
            if v != s && pred[v] == 0 && f.res(u, e) >= delta {
                pred[v] = e;
                if v == t {
                    return true;
                }
                queue.push_back(v);
            }
        }
    }
    false
}

/// Pushes the bottleneck amount along the path recorded in `pred`.
fn augment_path(f: &mut FlowGraph, pred: &[Edge]) -> i64 {
    let (s, t) = (f.source(), f.sink());
    let mut amount = i64::MAX;
    let mut v = t;
    while v != s {
        let u = f.mate(v, pred[v]);
        amount = amount.min(f.res(u, pred[v]));
        v = u;
    }
    let mut v = t;
    while v != s {
        let u = f.mate(v, pred[v]);
        f.push(u, pred[v], amount);
        v = u;
    }
    amount
}

fn ffsp(f: &mut FlowGraph) {
    let mut pred = vec![0; f.n() + 1];
    let mut queue = VecDeque::new();
    while bfs_path(f, 1, &mut pred, &mut queue) {
        augment_path(f, &pred);
    }
}

/// Ford-Fulkerson with maximum bottleneck paths, found by a Dijkstra-style
/// search on a d-heap keyed by negated bottleneck.
fn ffmc(f: &mut FlowGraph) {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    let mut heap: DHeap<i64> = DHeap::with_arity(n, arity_for(n, f.m()));
    let mut pred = vec![0; n + 1];
    let mut width = vec![0i64; n + 1];
    let mut done = vec![false; n + 1];
    loop {
        pred.iter_mut().for_each(|p| *p = 0);
        width.iter_mut().for_each(|w| *w = 0);
        done.iter_mut().for_each(|d| *d = false);
        heap.clear();
        width[s] = i64::MAX;
        heap.insert(s, -i64::MAX).expect("empty heap");
        while let Ok(u) = heap.delete_min() {
            done[u] = true;
            if u == t {
                break;
            }
            for e in f.edges_at(u) {
                let v = f.mate(u, e);
                let w = width[u].min(f.res(u, e));
                if done[v] || w <= width[v] {
                    continue;
                }
                width[v] = w;
                pred[v] = e;
                heap.insert_or_change(v, -w).expect("vertex in range");
            }
        }
        if !done[t] {
            return;
        }
        augment_path(f, &pred);
    }
}

/// Capacity scaling: augment along any path of residual capacity at least
/// `delta`, halving `delta` when none is left.
fn ffs(f: &mut FlowGraph) {
    let mut pred = vec![0; f.n() + 1];
    let mut queue = VecDeque::new();
    let top = f.max_cap();
    if top <= 0 {
        return;
    }
    let mut delta = 1i64 << (63 - top.leading_zeros());
    while delta >= 1 {
        while bfs_path(f, delta, &mut pred, &mut queue) {
            augment_path(f, &pred);
        }
        delta /= 2;
    }
}

/// Distances from the source in the residual graph, `usize::MAX` when
/// unreachable. Returns whether the sink is reachable.
fn levels(f: &FlowGraph, level: &mut [usize], queue: &mut VecDeque<Vertex>) -> bool {
    let s = f.source();
    level.iter_mut().for_each(|l| *l = usize::MAX);
    level[s] = 0;
    queue.clear();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for e in f.edges_at(u) {
            let v = f.mate(u, e);
            if level[v] == usize::MAX && f.res(u, e) > 0 {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level[f.sink()] != usize::MAX
}

#[inline]
fn admissible(f: &FlowGraph, level: &[usize], u: Vertex, e: Edge) -> bool {
    let v = f.mate(u, e);
    level[u] != usize::MAX && level[v] == level[u] + 1 && f.res(u, e) > 0
}

fn dinic(f: &mut FlowGraph) {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    let mut level = vec![0; n + 1];
    let mut current = vec![0; n + 1];
    let mut queue = VecDeque::new();
    let mut path: Vec<(Vertex, Edge)> = Vec::new();
    while levels(f, &mut level, &mut queue) {
        for u in 1..=n {
            current[u] = f.first_at(u);
        }
        path.clear();
        let mut u = s;
        loop {
            if u == t {
                let amount = path.iter().map(|&(x, e)| f.res(x, e)).min().expect("nonempty path");
                for &(x, e) in &path {
                    f.push(x, e, amount);
                }
                let cut = path.iter().position(|&(x, e)| f.res(x, e) == 0).expect("saturated edge");
                u = path[cut].0;
                path.truncate(cut);
                continue;
            }
            let mut e = current[u];
            while e != 0 && !admissible(f, &level, u, e) {
                e = f.next_at(u, e);
            }
            current[u] = e;
            if e != 0 {
                path.push((u, e));
                u = f.mate(u, e);
                continue;
            }
            if u == s {
                break;
            }
            level[u] = usize::MAX;
            let (x, e) = path.pop().expect("non-source vertex has a path edge");
            current[x] = f.next_at(x, e);
            u = x;
        }
    }
}

/// Dinic's algorithm with each blocking flow found on dynamic trees.
///
/// Admissible edges are linked into a forest rooted towards the sink, each
/// child carrying the residual capacity of its parent edge as cost. When
/// the tree containing the source is rooted at the sink, the minimum cost on
/// the source's path is pushed along the whole path at once and saturated
/// edges are cut. Flow on tree edges is only written back to the graph when
/// the edge is cut.
fn dinic_dt(f: &mut FlowGraph) {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    let mut level = vec![0; n + 1];
    let mut current = vec![0; n + 1];
    let mut queue = VecDeque::new();
    let mut link_edge = vec![0; n + 1];
    let mut link_res = vec![0i64; n + 1];
    let mut trees = DynTrees::new(n);

    let cut = |f: &mut FlowGraph,
               trees: &mut DynTrees,
               link_edge: &mut [Edge],
               link_res: &[i64],
               x: Vertex| {
        let e = link_edge[x];
        let left = trees.cost(x).expect("vertex in range");
        f.push(x, e, link_res[x] - left);
        trees.cut(x).expect("linked vertex");
        link_edge[x] = 0;
    };

    while levels(f, &mut level, &mut queue) {
        for u in 1..=n {
            current[u] = f.first_at(u);
        }
        loop {
            let v = trees.findroot(s).expect("source in range");
            if v == t {
                let (_, c) = trees.findcost(s).expect("source in range");
                trees.addcost(s, -c).expect("source in range");
                loop {
                    let (x, c) = trees.findcost(s).expect("source in range");
                    if c != 0 {
                        break;
                    }
                    cut(f, &mut trees, &mut link_edge, &link_res, x);
                }
                continue;
            }
            let mut e = current[v];
            while e != 0 && !admissible(f, &level, v, e) {
                e = f.next_at(v, e);
            }
            current[v] = e;
            if e != 0 {
                let w = f.mate(v, e);
                let r = f.res(v, e);
                trees.link(v, w, r).expect("root links into another tree");
                link_edge[v] = e;
                link_res[v] = r;
                continue;
            }
            if v == s {
                break;
            }
            level[v] = usize::MAX;
            let at: Vec<Edge> = f.edges_at(v).collect();
            for e in at {
                let x = f.mate(v, e);
                if link_edge[x] == e {
                    cut(f, &mut trees, &mut link_edge, &link_res, x);
                }
            }
        }
        for x in 1..=n {
            if link_edge[x] != 0 {
                cut(f, &mut trees, &mut link_edge, &link_res, x);
            }
        }
    }
}

/// Preflow-push with exact initial labels (breadth-first from the sink,
/// `n` for the source and for vertices that cannot reach the sink) and
/// every source edge saturated. Active vertices are discharged in FIFO
/// order, or highest label first.
fn preflow_push(f: &mut FlowGraph, highest: bool) {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    let mut d = vec![n; n + 1];
    let mut queue = VecDeque::new();
    d[t] = 0;
    queue.push_back(t);
    while let Some(v) = queue.pop_front() {
        for e in f.edges_at(v) {
            let u = f.mate(v, e);
            if u != s && d[u] == n && u != t && f.res(u, e) > 0 {
                d[u] = d[v] + 1;
                queue.push_back(u);
            }
        }
    }
    d[s] = n;

    let mut excess = vec![0i64; n + 1];
    for u in 1..=n {
        if u != s && u != t {
            excess[u] = -f.net_out(u);
        }
    }
    let source_edges: Vec<Edge> = f.edges_at(s).collect();
    for e in source_edges {
        let r = f.res(s, e);
        if r > 0 {
            let v = f.mate(s, e);
            f.push(s, e, r);
            excess[v] += r;
        }
    }

    let mut current: Vec<Edge> = (0..=n).map(|u| if u == 0 { 0 } else { f.first_at(u) }).collect();
    let mut active = Active::new(n, highest);
    for u in 1..=n {
        if u != s && u != t && excess[u] > 0 {
            active.add(u, d[u]);
        }
    }
    while let Some(u) = active.take() {
        while excess[u] > 0 {
            let e = current[u];
            if e == 0 {
                let mut low = usize::MAX;
                for e in f.edges_at(u) {
                    if f.res(u, e) > 0 {
                        low = low.min(d[f.mate(u, e)]);
                    }
                }
                d[u] = low + 1;
                current[u] = f.first_at(u);
                continue;
            }
            let v = f.mate(u, e);
            let r = f.res(u, e);
            if r > 0 && d[u] == d[v] + 1 {
                let x = r.min(excess[u]);
                f.push(u, e, x);
                excess[u] -= x;
                if v != s && v != t && excess[v] == 0 {
                    active.add(v, d[v]);
                }
                excess[v] += x;
                if excess[u] == 0 {
                    break;
                }
            }
            current[u] = f.next_at(u, e);
        }
    }
}

/// Active vertex set: a FIFO queue or label buckets.
struct Active {
    highest: bool,
    queue: VecDeque<Vertex>,
    buckets: Vec<Vec<Vertex>>,
    top: usize,
}

impl Active {
    fn new(n: usize, highest: bool) -> Self {
        let buckets = if highest { vec![Vec::new(); 2 * n + 1] } else { Vec::new() };
        Active { highest, queue: VecDeque::new(), buckets, top: 0 }
    }

    fn add(&mut self, u: Vertex, label: usize) {
        if self.highest {
            self.buckets[label].push(u);
            self.top = self.top.max(label);
        } else {
            self.queue.push_back(u);
        }
    }

    fn take(&mut self) -> Option<Vertex> {
        if !self.highest {
            return self.queue.pop_front();
        }
        loop {
            if let Some(u) = self.buckets[self.top].pop() {
                return Some(u);
            }
            if self.top == 0 {
                return None;
            }
            self.top -= 1;
        }
    }
}

/// Finds a flow that meets every floor, starting from zero flow.
///
/// Floors are moved into vertex demands of an auxiliary network with a new
/// source and sink and uncapacitated edges between the original sink and
/// source in both directions, so the flow found may have any value; the floors can be met exactly when a maximum flow of the
/// auxiliary network saturates every edge leaving the new source. On
/// failure the error names the source side of a minimum cut of the
/// auxiliary network (original vertices only) and the unmet demand.
pub fn feasible_flow(f: &mut FlowGraph) -> Result<()> {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    if s == t {
        return Err(Error::SourceIsSink);
    }
    let (ss, tt) = (n + 1, n + 2);
    let mut balance = vec![0i64; n + 1];
    let mut big = 1i64;
    for e in f.edges() {
        balance[f.head(e)] += f.floor(e);
        balance[f.tail(e)] -= f.floor(e);
        big = big.saturating_add(f.cap(e));
    }
    let mut aux = FlowGraph::new(n + 2, f.max_edge() + n + 2, ss, tt)?;
    for e in f.edges() {
        aux.join_with(f.tail(e), f.head(e), e, f.cap(e) - f.floor(e))?;
    }
    aux.add_edge(t, s, big)?;
    aux.add_edge(s, t, big)?;
    let mut demand = 0;
    for (v, &b) in balance.iter().enumerate().skip(1) {
        if b > 0 {
            aux.add_edge(ss, v, b)?;
            demand += b;
        } else if b < 0 {
            aux.add_edge(v, tt, -b)?;
        }
    }
    dinic(&mut aux);
    let value = aux.total_flow();
    if value < demand {
        let cut = residual_reachable(&aux);
        let cut = (1..=n).filter(|&v| cut[v]).collect();
        return Err(Error::Infeasible { cut, shortfall: demand - value });
    }
    for e in f.edges().collect::<Vec<_>>() {
        f.set_flow(e, f.floor(e) + aux.flow(e))?;
    }
    Ok(())
}

/// Vertices reachable from the source in the residual graph.
pub fn residual_reachable(f: &FlowGraph) -> Vec<bool> {
    let mut seen = vec![false; f.n() + 1];
    let mut queue = VecDeque::from([f.source()]);
    seen[f.source()] = true;
    while let Some(u) = queue.pop_front() {
        for e in f.edges_at(u) {
            let v = f.mate(u, e);
            if !seen[v] && f.res(u, e) > 0 {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Source side of the minimum cut certified by a maximum flow.
pub fn min_cut(f: &FlowGraph) -> Vec<Vertex> {
    let seen = residual_reachable(f);
    (1..=f.n()).filter(|&v| seen[v]).collect()
}

/// Checks that the flow in `f` is feasible, has value `reported`, and is
/// maximum (no augmenting path in the residual graph).
pub fn flow_verify(f: &FlowGraph, reported: i64) -> core::result::Result<(), Violation> {
    for e in f.edges() {
        if f.flow(e) > f.cap(e) {
            return Err(Violation::Capacity(e));
        }
        if f.flow(e) < f.floor(e) {
            return Err(Violation::Floor(e));
        }
        if f.flow(e) < 0 {
            return Err(Violation::Capacity(e));
        }
    }
    let (s, t) = (f.source(), f.sink());
    for v in 1..=f.n() {
        if v != s && v != t {
            let imbalance = f.net_out(v);
            if imbalance != 0 {
                return Err(Violation::Conservation { vertex: v, imbalance });
            }
        }
    }
    let actual = f.total_flow();
    if actual != reported {
        return Err(Violation::Total { reported, actual });
    }
    if -f.net_out(t) != actual {
        return Err(Violation::Total { reported, actual: -f.net_out(t) });
    }
    let mut pred = vec![0; f.n() + 1];
    if bfs_path(f, 1, &mut pred, &mut VecDeque::new()) {
        let mut path = vec![t];
        let mut v = t;
        while v != s {
            v = f.mate(v, pred[v]);
            path.push(v);
        }
        path.reverse();
        return Err(Violation::NotMaximal(path));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The ten-vertex network with source i and sink j, capacities only.
    pub(crate) fn ten() -> FlowGraph {
        let mut f = FlowGraph::new(10, 20, 9, 10).unwrap();
        let edges = [
            (2, 3, 7), (2, 4, 8), (2, 6, 6), (2, 8, 9), (3, 4, 1), (3, 5, 5), (4, 1, 1),
            (4, 7, 4), (4, 8, 1), (5, 1, 2), (5, 3, 7), (6, 8, 2), (6, 10, 15), (7, 3, 4),
            (7, 4, 3), (7, 10, 28), (8, 6, 7), (8, 7, 5), (9, 2, 16), (9, 3, 16),
        ];
        for (u, v, c) in edges {
            f.add_edge(u, v, c).unwrap();
        }
        f
    }

    #[test]
    fn ten_vertex_value() {
        for a in Algo::ALL {
            let mut f = ten();
            assert_eq!(max_flow(&mut f, a), Ok(17), "{}", a.name());
            assert_eq!(flow_verify(&f, 17), Ok(()), "{}", a.name());
        }
    }

    #[test]
    fn listed_flow_is_maximal() {
        let mut f = ten();
        let flows = [0, 4, 6, 6, 1, 0, 0, 4, 1, 0, 0, 0, 13, 0, 0, 4, 7, 0, 16, 1];
        for (e, &x) in flows.iter().enumerate() {
            f.set_flow(e + 1, x).unwrap();
        }
        assert_eq!(flow_verify(&f, 17), Ok(()));
        assert_eq!(min_cut(&f), vec![1, 3, 5, 9]);
        f.set_flow(8, 0).unwrap();
        assert_eq!(flow_verify(&f, 17), Err(Violation::Conservation { vertex: 4, imbalance: -4 }));
        f.set_flow(8, 5).unwrap();
        assert_eq!(flow_verify(&f, 17), Err(Violation::Capacity(8)));
    }

    #[test]
    fn zero_capacity() {
        let mut f = FlowGraph::new(3, 2, 1, 3).unwrap();
        f.add_edge(1, 2, 0).unwrap();
        f.add_edge(2, 3, 0).unwrap();
        for a in Algo::ALL {
            assert_eq!(max_flow(&mut f, a), Ok(0));
        }
        let mut f = FlowGraph::new(2, 0, 1, 1).unwrap();
        assert_eq!(max_flow(&mut f, Algo::Dinic), Err(Error::SourceIsSink));
    }

    #[test]
    fn floors() {
        // s=1, t=4; floor 2 on 1->2 but 2 can only pass 1 on to t
        let mut f = FlowGraph::with_floors(4, 4, 1, 4).unwrap();
        let a = f.add_edge(1, 2, 3).unwrap();
        f.add_edge(2, 4, 1).unwrap();
        f.add_edge(1, 3, 5).unwrap();
        f.add_edge(3, 4, 5).unwrap();
        f.set_floor(a, 2).unwrap();
        match max_flow(&mut f, Algo::Dinic) {
            Err(Error::Infeasible { shortfall, .. }) => assert_eq!(shortfall, 1),
            r => panic!("expected infeasible, got {:?}", r),
        }
        f.set_floor(a, 1).unwrap();
        for algo in Algo::ALL {
            assert_eq!(max_flow(&mut f, algo), Ok(6), "{}", algo.name());
            assert_eq!(flow_verify(&f, 6), Ok(()));
            assert!(f.flow(a) >= 1);
        }
    }

    #[test]
    fn floors_force_flow_around_a_cycle() {
        // floor on a cycle edge not on any source-sink path
        let mut f = FlowGraph::with_floors(4, 5, 1, 4).unwrap();
        f.add_edge(1, 4, 2).unwrap();
        let c = f.add_edge(2, 3, 4).unwrap();
        f.add_edge(3, 2, 4).unwrap();
        f.set_floor(c, 3).unwrap();
        for algo in Algo::ALL {
            assert_eq!(max_flow(&mut f, algo), Ok(2));
            assert_eq!(f.flow(c), 3);
            assert_eq!(flow_verify(&f, 2), Ok(()));
        }
    }
}
