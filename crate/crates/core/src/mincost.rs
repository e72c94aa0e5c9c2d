//! Minimum-cost maximum flows.
//!
//! All three algorithms find a maximum flow whose total cost is least among
//! maximum flows. Cycle cancelling accepts any costs; the two augmenting
//! algorithms reject networks with a negative-cost cycle of positive
//! capacity, and networks with flow floors.

use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::graph::FlowGraph;
use crate::heaps::{arity_for, DHeap};
use crate::maxflow;
use crate::paths::{find_negative_cycle, Arc};
use crate::{Edge, Error, Result, Vertex, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    /// Cycle reduction: cancel negative residual cycles of a maximum flow.
    Cr,
    /// Least-cost augmenting paths.
    Lc,
    /// Capacity scaling.
    Scale,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Cr, Algo::Lc, Algo::Scale];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Cr => "cr",
            Algo::Lc => "lc",
            Algo::Scale => "scale",
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown min-cost flow algorithm"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct McfResult {
    pub flow: i64,
    pub cost: i64,
}

/// Replaces the flow in `f` by a minimum-cost maximum flow.
pub fn min_cost_flow(f: &mut FlowGraph, algo: Algo) -> Result<McfResult> {
    if f.source() == f.sink() {
        return Err(Error::SourceIsSink);
    }
    match algo {
        Algo::Cr => cycle_reduction(f)?,
        Algo::Lc | Algo::Scale => {
            if f.has_floors() && f.edges().any(|e| f.floor(e) > 0) {
                return Err(Error::Parameter("flow floors need the cycle reduction algorithm"));
            }
            if let Some(cycle) = negative_input_cycle(f) {
                return Err(Error::NegativeCycle(cycle));
            }
            f.clear_flow();
            if algo == Algo::Lc {
                least_cost(f);
            } else {
                scale(f);
            }
        }
    }
    Ok(McfResult { flow: f.total_flow(), cost: f.total_cost() })
}

/// Arcs of the residual graph; arc ids are endpoint numbers, `2e` for
/// the forward direction of `e` and `2e+1` for the reverse.
fn residual_arcs(f: &FlowGraph) -> Vec<Arc> {
    let mut arcs = Vec::with_capacity(2 * f.m());
    for e in f.edges() {
        let (u, v) = (f.tail(e), f.head(e));
        if f.res(u, e) > 0 {
            arcs.push(Arc { from: u, to: v, len: f.cost(e), id: 2 * e });
        }
        if f.res(v, e) > 0 {
            arcs.push(Arc { from: v, to: u, len: -f.cost(e), id: 2 * e + 1 });
        }
    }
    arcs
}

/// Negative-cost cycle among the edges of positive capacity.
fn negative_input_cycle(f: &FlowGraph) -> Option<Vec<Edge>> {
    let arcs: Vec<Arc> = f
        .edges()
        .filter(|&e| f.cap(e) > 0)
        .map(|e| Arc { from: f.tail(e), to: f.head(e), len: f.cost(e), id: e })
        .collect();
    find_negative_cycle(f.n(), &arcs, None)
}

/// A negative-cost cycle of the residual graph as `(from, edge)` steps.
pub(crate) fn residual_negative_cycle(f: &FlowGraph) -> Option<Vec<(Vertex, Edge)>> {
    let cycle = find_negative_cycle(f.n(), &residual_arcs(f), None)?;
    Some(
        cycle
            .into_iter()
            .map(|id| {
                let e = id / 2;
                (if id % 2 == 0 { f.tail(e) } else { f.head(e) }, e)
            })
            .collect(),
    )
}

fn cycle_reduction(f: &mut FlowGraph) -> Result<()> {
    maxflow::max_flow(f, maxflow::Algo::Dinic)?;
    while let Some(cycle) = residual_negative_cycle(f) {
        let amount = cycle.iter().map(|&(u, e)| f.res(u, e)).min().expect("nonempty cycle");
        for (u, e) in cycle {
            f.push(u, e, amount);
        }
    }
    Ok(())
}

/// Dijkstra over residual edges with residual capacity at least `delta`,
/// using reduced costs `cost + p[u] - p[v]`. Returns distances
/// (`i64::MAX` when unreached) and the edge into each reached vertex.
pub(crate) fn reduced_dijkstra(
    f: &FlowGraph,
    s: Vertex,
    delta: i64,
    p: &[i64],
    heap: &mut DHeap<i64>,
    dist: &mut [i64],
    pred: &mut [Edge],
) {
    dist.iter_mut().for_each(|d| *d = i64::MAX);
    pred.iter_mut().for_each(|e| *e = 0);
    let mut done = vec![false; dist.len()];
    heap.clear();
    dist[s] = 0;
    heap.insert(s, 0).expect("empty heap");
    while let Ok(u) = heap.delete_min() {
        done[u] = true;
        for e in f.edges_at(u) {
            if f.res(u, e) < delta {
                continue;
            }
            let v = f.mate(u, e);
            if done[v] {
                continue;
            }
            let rc = f.cost_from(u, e) + p[u] - p[v];
            debug_assert!(rc >= 0, "negative reduced cost");
            let dv = dist[u] + rc;
            if dv < dist[v] {
                dist[v] = dv;
                pred[v] = e;
                heap.insert_or_change(v, dv).expect("vertex in range");
            }
        }
    }
}

/// Shortest distances from the source along edges of positive capacity,
/// 0 for vertices it cannot reach.
pub(crate) fn initial_potentials(f: &FlowGraph) -> Vec<i64> {
    let n = f.n();
    let s = f.source();
    let mut p = vec![i64::MAX; n + 1];
    p[s] = 0;
    for _ in 0..n {
        let mut changed = false;
        for e in f.edges() {
            let (u, v) = (f.tail(e), f.head(e));
            if f.res(u, e) > 0 && p[u] != i64::MAX && p[u] + f.cost(e) < p[v] {
                p[v] = p[u] + f.cost(e);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    p.iter().map(|&x| if x == i64::MAX { 0 } else { x }).collect()
}

/// Successive shortest augmenting paths with vertex potentials.
fn least_cost(f: &mut FlowGraph) {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    let mut p = initial_potentials(f);
    let mut heap = DHeap::with_arity(n, arity_for(n, f.m()));
    let mut dist = vec![0; n + 1];
    let mut pred = vec![0; n + 1];
    loop {
        reduced_dijkstra(f, s, 1, &p, &mut heap, &mut dist, &mut pred);
        if dist[t] == i64::MAX {
            return;
        }
        for v in 1..=n {
            if dist[v] != i64::MAX {
                p[v] += dist[v];
            }
        }
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
    }
}

/// Capacity scaling on the value of a maximum flow.
///
/// The source must send `F` units to the sink, `F` being the maximum flow
/// value. A hub vertex joined to every vertex by uncapacitated edges of
/// prohibitive cost keeps every vertex reachable, so each phase can move
/// `delta` units from a vertex with surplus at least `delta` to one with
/// deficit at least `delta` along a least-cost path of edges with residual
/// capacity at least `delta`. At the start of a phase, edges of residual
/// capacity at least `delta` and negative reduced cost are saturated.
fn scale(f: &mut FlowGraph) {
    let n = f.n();
    let (s, t) = (f.source(), f.sink());
    let mut probe = f.clone();
    let target = maxflow::max_flow(&mut probe, maxflow::Algo::Dinic).expect("source differs from sink");
    if target == 0 {
        return;
    }
    let hub = n + 1;
    let cmax = f.edges().map(|e| f.cost(e).abs()).max().unwrap_or(0).max(1);
    let big_cost = (n as i64 + 1) * cmax + 1;
    let total_cap: i64 = f.edges().map(|e| f.cap(e)).sum();
    let unbounded = total_cap + target + 1;
    let mut aux = FlowGraph::with_costs(n + 1, f.max_edge() + 2 * n, s, t).expect("valid terminals");
    for e in f.edges() {
        aux.join_with(f.tail(e), f.head(e), e, f.cap(e)).expect("free edge number");
        aux.set_cost(e, f.cost(e)).expect("live edge");
    }
    for v in 1..=n {
        aux.add_edge_with_cost(v, hub, unbounded, big_cost).expect("room for hub edges");
        aux.add_edge_with_cost(hub, v, unbounded, big_cost).expect("room for hub edges");
    }
    let mut excess = vec![0i64; n + 2];
    excess[s] = target;
    excess[t] = -target;
    let mut p = vec![0i64; n + 2];
    let mut heap = DHeap::with_arity(n + 1, arity_for(n + 1, aux.m()));
    let mut dist = vec![0; n + 2];
    let mut pred = vec![0; n + 2];
    let top = target.max(f.max_cap());
    let mut delta = 1i64 << (63 - top.leading_zeros());
    let edges: Vec<Edge> = aux.edges().collect();
    while delta >= 1 {
        for &e in &edges {
            for u in [aux.tail(e), aux.head(e)] {
                let r = aux.res(u, e);
                let v = aux.mate(u, e);
                if r >= delta && aux.cost_from(u, e) + p[u] - p[v] < 0 {
                    aux.push(u, e, r);
                    excess[u] -= r;
                    excess[v] += r;
                }
            }
        }
        while let Some(k) = (1..=n + 1).find(|&v| excess[v] >= delta) {
            if !(1..=n + 1).any(|v| excess[v] <= -delta) {
                break;
            }
            reduced_dijkstra(&aux, k, delta, &p, &mut heap, &mut dist, &mut pred);
            let l = (1..=n + 1)
                .filter(|&v| excess[v] <= -delta && dist[v] != i64::MAX)
                .min_by_key(|&v| (dist[v], v))
                .expect("hub keeps every vertex reachable");
            for v in 1..=n + 1 {
                if dist[v] != i64::MAX {
                    p[v] += dist[v];
                }
            }
            let mut v = l;
            while v != k {
                let u = aux.mate(v, pred[v]);
                aux.push(u, pred[v], delta);
                v = u;
            }
            excess[k] -= delta;
            excess[l] += delta;
        }
        delta /= 2;
    }
    for e in f.edges().collect::<Vec<_>>() {
        f.set_flow(e, aux.flow(e)).expect("live edge");
    }
}

/// Checks that the flow in `f` is a maximum flow of value `r.flow` and
/// cost `r.cost`, and that its residual graph has no negative-cost cycle.
pub fn mcf_verify(f: &FlowGraph, r: McfResult) -> core::result::Result<(), Violation> {
    maxflow::flow_verify(f, r.flow)?;
    let actual = f.total_cost();
    if actual != r.cost {
        return Err(Violation::Total { reported: r.cost, actual });
    }
    if let Some(cycle) = residual_negative_cycle(f) {
        return Err(Violation::NegativeCycle(cycle.into_iter().map(|(_, e)| e).collect()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_routes() -> FlowGraph {
        let mut f = FlowGraph::with_costs(4, 4, 1, 4).unwrap();
        f.add_edge_with_cost(1, 2, 2, 1).unwrap();
        f.add_edge_with_cost(2, 4, 2, 0).unwrap();
        f.add_edge_with_cost(1, 3, 2, 5).unwrap();
        f.add_edge_with_cost(3, 4, 2, 0).unwrap();
        f
    }

    #[test]
    fn single_edge() {
        for a in Algo::ALL {
            let mut f = FlowGraph::with_costs(2, 1, 1, 2).unwrap();
            f.add_edge_with_cost(1, 2, 5, 3).unwrap();
            let r = min_cost_flow(&mut f, a).unwrap();
            assert_eq!(r, McfResult { flow: 5, cost: 15 }, "{}", a.name());
        }
    }

    #[test]
    fn forced_split() {
        for a in Algo::ALL {
            let mut f = two_routes();
            let r = min_cost_flow(&mut f, a).unwrap();
            assert_eq!(r, McfResult { flow: 4, cost: 12 }, "{}", a.name());
            assert_eq!(mcf_verify(&f, r), Ok(()));
        }
    }

    #[test]
    fn cheaper_route_preferred() {
        // one unit of demand, two parallel routes of cost 1 and 5
        let mut f = FlowGraph::with_costs(5, 5, 1, 5).unwrap();
        f.add_edge_with_cost(1, 2, 2, 1).unwrap();
        f.add_edge_with_cost(1, 3, 2, 5).unwrap();
        f.add_edge_with_cost(2, 4, 2, 0).unwrap();
        f.add_edge_with_cost(3, 4, 2, 0).unwrap();
        f.add_edge_with_cost(4, 5, 1, 0).unwrap();
        for a in Algo::ALL {
            let r = min_cost_flow(&mut f, a).unwrap();
            assert_eq!(r, McfResult { flow: 1, cost: 1 }, "{}", a.name());
        }
        f.clear_flow();
        f.set_flow(2, 1).unwrap();
        f.set_flow(4, 1).unwrap();
        f.set_flow(5, 1).unwrap();
        let r = McfResult { flow: 1, cost: 5 };
        assert_eq!(mcf_verify(&f, r), Err(Violation::NegativeCycle(vec![2, 1, 3, 4])));
    }

    #[test]
    fn negative_costs() {
        let mut f = FlowGraph::with_costs(3, 3, 1, 3).unwrap();
        f.add_edge_with_cost(1, 2, 3, -2).unwrap();
        f.add_edge_with_cost(2, 3, 2, 1).unwrap();
        f.add_edge_with_cost(1, 3, 3, 0).unwrap();
        for a in Algo::ALL {
            let r = min_cost_flow(&mut f, a).unwrap();
            assert_eq!(r, McfResult { flow: 5, cost: -2 }, "{}", a.name());
            assert_eq!(mcf_verify(&f, r), Ok(()));
        }
        let mut f = FlowGraph::with_costs(3, 3, 1, 3).unwrap();
        f.add_edge_with_cost(1, 2, 3, -2).unwrap();
        f.add_edge_with_cost(2, 1, 3, 1).unwrap();
        f.add_edge_with_cost(1, 3, 3, 4).unwrap();
        assert!(matches!(min_cost_flow(&mut f, Algo::Lc), Err(Error::NegativeCycle(_))));
        let r = min_cost_flow(&mut f, Algo::Cr).unwrap();
        assert_eq!(r, McfResult { flow: 3, cost: 3 * 4 - 3 });
        assert_eq!(mcf_verify(&f, r), Ok(()));
    }
}
