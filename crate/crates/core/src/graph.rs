//! Graphs on vertex set `1..=n` with numbered edges.
//!
//! Edge `e` has endpoint numbers `2e` and `2e+1`; the adjacency list of a
//! vertex is a list of endpoint numbers, and all adjacency lists together
//! form one [`Dlists`] partition. For directed graphs the left endpoint is
//! the tail and the right endpoint the head.

use alloc::vec;
use alloc::vec::Vec;

use crate::collections::Dlists;
use crate::{Edge, Error, Result, Vertex};

/// Edge owning endpoint number `ep`.
#[inline]
pub fn edge_of(ep: usize) -> Edge {
    ep / 2
}

/// The other endpoint number of the same edge.
#[inline]
pub fn mate_endpoint(ep: usize) -> usize {
    ep ^ 1
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    directed: bool,
    left: Vec<Vertex>,
    right: Vec<Vertex>,
    adj: Dlists,
    first_ep: Vec<usize>,
    /// Free edge numbers; the lowest is handed out first.
    free: Vec<Edge>,
    m: usize,
}

impl Graph {
    /// Undirected graph with `n` vertices and room for `max_edge` edges.
    pub fn new(n: usize, max_edge: usize) -> Self {
        Graph {
            n,
            directed: false,
            left: vec![0; max_edge + 1],
            right: vec![0; max_edge + 1],
            adj: Dlists::new(2 * max_edge + 1),
            first_ep: vec![0; n + 1],
            free: (1..=max_edge).rev().collect(),
            m: 0,
        }
    }

    /// Directed graph; edges run from their left (tail) to right (head) endpoint.
    pub fn new_directed(n: usize, max_edge: usize) -> Self {
        let mut g = Self::new(n, max_edge);
        g.directed = true;
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_edge(&self) -> usize {
        self.left.len() - 1
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_edge(&self, e: Edge) -> bool {
        e != 0 && e < self.left.len() && self.left[e] != 0
    }

    pub fn left(&self, e: Edge) -> Vertex {
        self.left[e]
    }

    pub fn right(&self, e: Edge) -> Vertex {
        self.right[e]
    }

    pub fn tail(&self, e: Edge) -> Vertex {
        self.left[e]
    }

    pub fn head(&self, e: Edge) -> Vertex {
        self.right[e]
    }

    /// The endpoint of `e` that is not `u`.
    #[inline]
    pub fn mate(&self, u: Vertex, e: Edge) -> Vertex {
        if self.left[e] == u {
            self.right[e]
        } else {
            self.left[e]
        }
    }

    fn check_vertex(&self, u: Vertex) -> Result<()> {
        if u == 0 || u > self.n {
            Err(Error::OutOfRange { index: u, bound: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<Edge> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = *self.free.last().ok_or(Error::Full)?;
        self.join_with(u, v, e)?;
        Ok(e)
    }

    /// Adds edge `u`-`v` under the specific free edge number `e`.
    pub fn join_with(&mut self, u: Vertex, v: Vertex, e: Edge) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if e == 0 || e > self.max_edge() {
            return Err(Error::OutOfRange { index: e, bound: self.max_edge() });
        }
        if self.left[e] != 0 {
            return Err(Error::Duplicate(e));
        }
        let slot = self.free.iter().rposition(|&f| f == e).expect("free edge listed");
        self.free.remove(slot);
        self.left[e] = u;
        self.right[e] = v;
        self.attach(u, 2 * e);
        self.attach(v, 2 * e + 1);
        self.m += 1;
        Ok(())
    }

    fn attach(&mut self, u: Vertex, ep: usize) {
        if self.first_ep[u] == 0 {
            self.first_ep[u] = ep;
        } else {
            self.adj.join(self.first_ep[u], ep).expect("endpoint lists are disjoint");
        }
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<()> {
        if !self.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        let (u, v) = (self.left[e], self.right[e]);
        self.first_ep[u] = self.adj.remove(2 * e, self.first_ep[u])?;
        self.first_ep[v] = self.adj.remove(2 * e + 1, self.first_ep[v])?;
        self.left[e] = 0;
        self.right[e] = 0;
        self.m -= 1;
        let pos = self.free.iter().position(|&f| f < e).unwrap_or(self.free.len());
        self.free.insert(pos, e);
        Ok(())
    }

    /// Endpoint number of `e` at vertex `u`.
    pub fn endpoint_at(&self, u: Vertex, e: Edge) -> usize {
        if self.left[e] == u {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// First endpoint number in the adjacency list of `u`, 0 if none.
    pub fn first_endpoint(&self, u: Vertex) -> usize {
        self.first_ep[u]
    }

    /// Endpoint numbers at `u` in adjacency order.
    pub fn endpoints_at(&self, u: Vertex) -> impl Iterator<Item = usize> + '_ {
        let first = self.first_ep[u];
        core::iter::successors(if first == 0 { None } else { Some(first) }, move |&ep| {
            let nx = self.adj.next(ep);
            if nx == 0 {
                None
            } else {
                Some(nx)
            }
        })
    }

    /// First edge at `u`, 0 if none.
    pub fn first_at(&self, u: Vertex) -> Edge {
        edge_of(self.first_ep[u])
    }

    /// Edge after `e` in the adjacency list of `u`, 0 at the end.
    pub fn next_at(&self, u: Vertex, e: Edge) -> Edge {
        edge_of(self.adj.next(self.endpoint_at(u, e)))
    }

    /// All edges incident to `u`, in adjacency order.
    pub fn edges_at(&self, u: Vertex) -> impl Iterator<Item = Edge> + '_ {
        self.endpoints_at(u).map(edge_of)
    }

    /// Edges leaving `u`; every incident edge for undirected graphs.
    pub fn out_edges(&self, u: Vertex) -> impl Iterator<Item = Edge> + '_ {
        let directed = self.directed;
        self.endpoints_at(u).filter(move |&ep| !directed || ep % 2 == 0).map(edge_of)
    }

    /// Edges entering `u`; every incident edge for undirected graphs.
    pub fn in_edges(&self, u: Vertex) -> impl Iterator<Item = Edge> + '_ {
        let directed = self.directed;
        self.endpoints_at(u).filter(move |&ep| !directed || ep % 2 == 1).map(edge_of)
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.endpoints_at(u).count()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Live edges in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..self.left.len()).filter(move |&e| self.left[e] != 0)
    }
}

/// Graph with an integer weight (or length) per edge.
#[derive(Clone, Debug)]
pub struct WGraph {
    graph: Graph,
    weight: Vec<i64>,
}

impl WGraph {
    pub fn new(n: usize, max_edge: usize) -> Self {
        WGraph { graph: Graph::new(n, max_edge), weight: vec![0; max_edge + 1] }
    }

    pub fn new_directed(n: usize, max_edge: usize) -> Self {
        WGraph { graph: Graph::new_directed(n, max_edge), weight: vec![0; max_edge + 1] }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, w: i64) -> Result<Edge> {
        let e = self.graph.add_edge(u, v)?;
        self.weight[e] = w;
        Ok(e)
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<()> {
        self.graph.remove_edge(e)?;
        self.weight[e] = 0;
        Ok(())
    }

    pub fn weight(&self, e: Edge) -> i64 {
        self.weight[e]
    }

    pub fn set_weight(&mut self, e: Edge, w: i64) -> Result<()> {
        if !self.graph.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        self.weight[e] = w;
        Ok(())
    }
}

impl core::ops::Deref for WGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Directed flow network with capacities, flows, source and sink, and
/// optionally per-edge costs or flow floors.
#[derive(Clone, Debug)]
pub struct FlowGraph {
    graph: Graph,
    cap: Vec<i64>,
    flow: Vec<i64>,
    cost: Option<Vec<i64>>,
    floor: Option<Vec<i64>>,
    source: Vertex,
    sink: Vertex,
}

impl FlowGraph {
    pub fn new(n: usize, max_edge: usize, source: Vertex, sink: Vertex) -> Result<Self> {
        for v in [source, sink] {
            if v == 0 || v > n {
                return Err(Error::OutOfRange { index: v, bound: n });
            }
        }
        Ok(FlowGraph {
            graph: Graph::new_directed(n, max_edge),
            cap: vec![0; max_edge + 1],
            flow: vec![0; max_edge + 1],
            cost: None,
            floor: None,
            source,
            sink,
        })
    }

    /// Flow network whose edges carry costs (all zero until set).
    pub fn with_costs(n: usize, max_edge: usize, source: Vertex, sink: Vertex) -> Result<Self> {
        let mut f = Self::new(n, max_edge, source, sink)?;
        f.cost = Some(vec![0; max_edge + 1]);
        Ok(f)
    }

    /// Flow network whose edges carry floors (all zero until set).
    pub fn with_floors(n: usize, max_edge: usize, source: Vertex, sink: Vertex) -> Result<Self> {
        let mut f = Self::new(n, max_edge, source, sink)?;
        f.floor = Some(vec![0; max_edge + 1]);
        Ok(f)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn sink(&self) -> Vertex {
        self.sink
    }

    pub fn has_costs(&self) -> bool {
        self.cost.is_some()
    }

    pub fn has_floors(&self) -> bool {
        self.floor.is_some()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, cap: i64) -> Result<Edge> {
        if cap < 0 {
            return Err(Error::Parameter("negative capacity"));
        }
        let e = self.graph.add_edge(u, v)?;
        self.cap[e] = cap;
        self.flow[e] = 0;
        Ok(e)
    }

    /// Adds edge `u`->`v` under the specific free edge number `e`.
    pub fn join_with(&mut self, u: Vertex, v: Vertex, e: Edge, cap: i64) -> Result<()> {
        if cap < 0 {
            return Err(Error::Parameter("negative capacity"));
        }
        self.graph.join_with(u, v, e)?;
        self.cap[e] = cap;
        self.flow[e] = 0;
        Ok(())
    }

    pub fn set_cap(&mut self, e: Edge, cap: i64) -> Result<()> {
        if !self.graph.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        if cap < self.floor(e) {
            return Err(Error::FloorExceedsCapacity(e));
        }
        self.cap[e] = cap;
        Ok(())
    }

    /// Adds an edge with a cost; turns on costs if they were off.
    pub fn add_edge_with_cost(&mut self, u: Vertex, v: Vertex, cap: i64, cost: i64) -> Result<Edge> {
        let e = self.add_edge(u, v, cap)?;
        self.set_cost(e, cost)?;
        Ok(e)
    }

    pub fn cap(&self, e: Edge) -> i64 {
        self.cap[e]
    }

    pub fn flow(&self, e: Edge) -> i64 {
        self.flow[e]
    }

    pub fn cost(&self, e: Edge) -> i64 {
        self.cost.as_ref().map_or(0, |c| c[e])
    }

    pub fn floor(&self, e: Edge) -> i64 {
        self.floor.as_ref().map_or(0, |f| f[e])
    }

    pub fn set_cost(&mut self, e: Edge, c: i64) -> Result<()> {
        if !self.graph.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        let max = self.graph.max_edge();
        self.cost.get_or_insert_with(|| vec![0; max + 1])[e] = c;
        Ok(())
    }

    pub fn set_floor(&mut self, e: Edge, lo: i64) -> Result<()> {
        if !self.graph.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        if lo < 0 || lo > self.cap[e] {
            return Err(Error::FloorExceedsCapacity(e));
        }
        let max = self.graph.max_edge();
        self.floor.get_or_insert_with(|| vec![0; max + 1])[e] = lo;
        Ok(())
    }

    /// Sets the flow on `e` directly, without any consistency check beyond
    /// the edge existing. Used to load stored solutions.
    pub fn set_flow(&mut self, e: Edge, f: i64) -> Result<()> {
        if !self.graph.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        self.flow[e] = f;
        Ok(())
    }

    pub fn clear_flow(&mut self) {
        self.flow.iter_mut().for_each(|f| *f = 0);
    }

    pub fn tail(&self, e: Edge) -> Vertex {
        self.graph.left(e)
    }

    pub fn head(&self, e: Edge) -> Vertex {
        self.graph.right(e)
    }

    #[inline]
    pub fn mate(&self, u: Vertex, e: Edge) -> Vertex {
        self.graph.mate(u, e)
    }

    /// Amount that can still be pushed on `e` leaving vertex `from`:
    /// `cap - flow` from the tail, `flow - floor` from the head.
    #[inline]
    pub fn res(&self, from: Vertex, e: Edge) -> i64 {
        if self.graph.left(e) == from {
            self.cap[e] - self.flow[e]
        } else {
            self.flow[e] - self.floor(e)
        }
    }

    /// Checked form of [`res`](Self::res).
    pub fn residual_capacity(&self, e: Edge, from: Vertex) -> Result<i64> {
        if !self.graph.is_edge(e) {
            return Err(Error::NotEdge(e));
        }
        if self.graph.left(e) != from && self.graph.right(e) != from {
            return Err(Error::NotEndpoint { edge: e, vertex: from });
        }
        Ok(self.res(from, e))
    }

    /// Pushes `amount` units on `e` away from `from`.
    pub fn add_flow(&mut self, e: Edge, from: Vertex, amount: i64) -> Result<()> {
        let residual = self.residual_capacity(e, from)?;
        if amount < 0 || amount > residual {
            return Err(Error::ExceedsResidual { edge: e, amount, residual });
        }
        self.push(from, e, amount);
        Ok(())
    }

    #[inline]
    pub(crate) fn push(&mut self, from: Vertex, e: Edge, amount: i64) {
        if self.graph.left(e) == from {
            self.flow[e] += amount;
        } else {
            self.flow[e] -= amount;
        }
    }

    /// Cost of a unit pushed on `e` away from `from`.
    #[inline]
    pub fn cost_from(&self, from: Vertex, e: Edge) -> i64 {
        if self.graph.left(e) == from {
            self.cost(e)
        } else {
            -self.cost(e)
        }
    }

    /// Net flow leaving the source.
    pub fn total_flow(&self) -> i64 {
        self.net_out(self.source)
    }

    /// Flow out of `u` minus flow into `u`.
    pub fn net_out(&self, u: Vertex) -> i64 {
        self.graph
            .edges_at(u)
            .map(|e| if self.graph.left(e) == u { self.flow[e] } else { -self.flow[e] })
            .sum()
    }

    pub fn total_cost(&self) -> i64 {
        self.graph.edges().map(|e| self.flow[e] * self.cost(e)).sum()
    }

    pub fn max_cap(&self) -> i64 {
        self.graph.edges().map(|e| self.cap[e]).max().unwrap_or(0)
    }
}

impl core::ops::Deref for FlowGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_vertex() -> Graph {
        let mut g = Graph::new(5, 10);
        for (u, v) in [(1, 2), (1, 3), (1, 4), (2, 5), (3, 4), (4, 5)] {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    #[test]
    fn endpoint_numbering() {
        let mut g = Graph::new(3, 4);
        let e = g.add_edge(1, 2).unwrap();
        assert_eq!(e, 1);
        assert_eq!(g.endpoints_at(1).collect::<Vec<_>>(), vec![2]);
        assert_eq!(g.endpoints_at(2).collect::<Vec<_>>(), vec![3]);
        assert_eq!(g.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert_eq!(g.add_edge(2, 4), Err(Error::OutOfRange { index: 4, bound: 3 }));
        for ep in 2..4 {
            assert_eq!(edge_of(ep), 1);
            assert_eq!(edge_of(mate_endpoint(ep)), 1);
        }
    }

    #[test]
    fn figure3_adjacency_of_a() {
        // a=1, b=2, c=3, d=4; edge 1 = a-b, edge 3 = d-a, edge 2 = a-c
        let mut g = Graph::new(5, 6);
        g.join_with(1, 2, 1).unwrap();
        g.join_with(4, 1, 3).unwrap();
        g.join_with(1, 3, 2).unwrap();
        assert_eq!(g.endpoints_at(1).collect::<Vec<_>>(), vec![2, 7, 4]);
        assert_eq!(g.edges_at(1).collect::<Vec<_>>(), vec![1, 3, 2]);
        assert_eq!(g.first_at(1), 1);
        assert_eq!(g.next_at(1, 1), 3);
        assert_eq!(g.next_at(1, 3), 2);
        assert_eq!(g.next_at(1, 2), 0);
    }

    #[test]
    fn handshake_and_isolated() {
        let mut g = five_vertex();
        let total: usize = (1..=5).map(|u| g.edges_at(u).count()).sum();
        assert_eq!(total, 2 * g.m());
        g.remove_edge(1).unwrap();
        g.remove_edge(4).unwrap();
        assert_eq!(g.edges_at(2).count(), 0);
        assert_eq!(g.add_edge(2, 3), Ok(1));
        assert_eq!(g.add_edge(2, 4), Ok(4));
        assert_eq!(g.add_edge(3, 5), Ok(7));
    }

    #[test]
    fn directed_views() {
        let mut g = Graph::new_directed(3, 3);
        g.add_edge(1, 2).unwrap();
        g.add_edge(3, 1).unwrap();
        assert_eq!(g.out_edges(1).collect::<Vec<_>>(), vec![1]);
        assert_eq!(g.in_edges(1).collect::<Vec<_>>(), vec![2]);
        assert_eq!(g.edges_at(1).count(), 2);
    }

    #[test]
    fn capacity_exhausted() {
        let mut g = Graph::new(3, 1);
        g.add_edge(1, 2).unwrap();
        assert_eq!(g.add_edge(2, 3), Err(Error::Full));
    }

    #[test]
    fn residuals() {
        let mut f = FlowGraph::new(2, 2, 1, 2).unwrap();
        let e = f.add_edge(1, 2, 7).unwrap();
        assert_eq!(f.residual_capacity(e, 1), Ok(7));
        assert_eq!(f.residual_capacity(e, 2), Ok(0));
        let g = f.add_edge(1, 2, 16).unwrap();
        f.add_flow(g, 1, 16).unwrap();
        assert_eq!(f.res(1, g), 0);
        assert_eq!(f.res(2, g), 16);
        assert!(matches!(f.add_flow(g, 1, 1), Err(Error::ExceedsResidual { .. })));
        f.add_flow(g, 2, 6).unwrap();
        assert_eq!(f.flow(g), 10);
        assert_eq!(f.total_flow(), 10);

        let mut ff = FlowGraph::with_floors(2, 1, 1, 2).unwrap();
        let e = ff.add_edge(1, 2, 9).unwrap();
        ff.set_floor(e, 4).unwrap();
        ff.set_flow(e, 6).unwrap();
        assert_eq!(ff.res(2, e), 2);
        assert_eq!(ff.res(1, e), 3);
        assert_eq!(ff.set_floor(e, 10), Err(Error::FloorExceedsCapacity(e)));
    }
}
