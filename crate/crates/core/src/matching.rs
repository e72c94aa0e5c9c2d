//! Maximum size and maximum weight matchings.
//!
//! Hopcroft-Karp, the flow reduction and both weighted algorithms need a
//! bipartite graph; they compute a 2-coloring first and reject the input
//! with an odd cycle when there is none. Edmonds' algorithm handles any
//! graph. Weighted matchings maximize total weight over all matchings, so
//! they may leave vertices unmatched that could have been matched.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::collections::Dsets;
use crate::graph::{FlowGraph, Graph, WGraph};
use crate::heaps::{arity_for, DHeap};
use crate::{maxflow, mincost};
use crate::{Edge, Error, Result, Vertex, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeAlgo {
    HopcroftKarp,
    FlowReduction,
    EdmondsGabow,
}

impl SizeAlgo {
    pub const ALL: [SizeAlgo; 3] =
        [SizeAlgo::HopcroftKarp, SizeAlgo::FlowReduction, SizeAlgo::EdmondsGabow];

    pub fn name(self) -> &'static str {
        match self {
            SizeAlgo::HopcroftKarp => "hopcroftkarp",
            SizeAlgo::FlowReduction => "flowreduction",
            SizeAlgo::EdmondsGabow => "edmondsgabow",
        }
    }
}

impl FromStr for SizeAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SizeAlgo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown matching algorithm"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightAlgo {
    Hungarian,
    /// Galil-Micali-Gabow primal-dual method, bipartite version.
    Egmg,
}

impl WeightAlgo {
    pub const ALL: [WeightAlgo; 2] = [WeightAlgo::Hungarian, WeightAlgo::Egmg];

    pub fn name(self) -> &'static str {
        match self {
            WeightAlgo::Hungarian => "hungarian",
            WeightAlgo::Egmg => "egmg",
        }
    }
}

impl FromStr for WeightAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeightAlgo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown weighted matching algorithm"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Matched edges in increasing order.
    pub edges: Vec<Edge>,
    /// `mate[v]` is the vertex matched to `v`, 0 if none.
    pub mate: Vec<Vertex>,
}

impl Matching {
    /// Builds a matching from the matched edge of every vertex (0 if none).
    fn from_mate_edges(g: &Graph, medge: &[Edge]) -> Self {
        let mut mate = vec![0; g.n() + 1];
        let mut edges = Vec::new();
        for u in 1..=g.n() {
            let e = medge[u];
            if e != 0 {
                mate[u] = g.mate(u, e);
                if u == g.left(e) {
                    edges.push(e);
                }
            }
        }
        edges.sort_unstable();
        Matching { edges, mate }
    }

    /// Builds a matching from a set of disjoint edges.
    pub fn from_edges(g: &Graph, edges: &[Edge]) -> Self {
        let mut mate = vec![0; g.n() + 1];
        for &e in edges {
            mate[g.left(e)] = g.right(e);
            mate[g.right(e)] = g.left(e);
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Matching { edges, mate }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, g: &WGraph) -> i64 {
        self.edges.iter().map(|&e| g.weight(e)).sum()
    }
}

/// Two-coloring of `g`: `true` marks the side of the lowest-numbered vertex
/// of each component. Fails with the vertices of an odd cycle.
pub fn bipartition(g: &Graph) -> Result<Vec<bool>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n + 1];
    let mut parent = vec![0; n + 1];
    let mut depth = vec![0usize; n + 1];
    let mut queue = VecDeque::new();
    for r in 1..=n {
        if color[r].is_some() {
            continue;
        }
        color[r] = Some(true);
        queue.push_back(r);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for e in g.edges_at(u) {
                let v = g.mate(u, e);
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Err(Error::NotBipartite(odd_cycle(&parent, &depth, u, v))),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

/// Cycle closed by edge `u`-`v` in a breadth-first tree.
fn odd_cycle(parent: &[Vertex], depth: &[usize], mut u: Vertex, mut v: Vertex) -> Vec<Vertex> {
    let mut up = Vec::new();
    let mut down = Vec::new();
    while depth[u] > depth[v] {
        up.push(u);
        u = parent[u];
    }
    while depth[v] > depth[u] {
        down.push(v);
        v = parent[v];
    }
    while u != v {
        up.push(u);
        down.push(v);
        u = parent[u];
        v = parent[v];
    }
    up.push(u);
    up.extend(down.into_iter().rev());
    up
}

pub fn max_size_matching(g: &Graph, algo: SizeAlgo) -> Result<Matching> {
    match algo {
        SizeAlgo::HopcroftKarp => hopcroft_karp(g),
        SizeAlgo::FlowReduction => flow_reduction(g),
        SizeAlgo::EdmondsGabow => Ok(edmonds_gabow(g)),
    }
}

pub fn max_weight_matching(g: &WGraph, algo: WeightAlgo) -> Result<Matching> {
    match algo {
        WeightAlgo::Hungarian => hungarian(g),
        WeightAlgo::Egmg => egmg(g),
    }
}

const UNSET: usize = usize::MAX;

/// Hopcroft-Karp: phases of vertex-disjoint shortest augmenting paths.
pub fn hopcroft_karp(g: &Graph) -> Result<Matching> {
    let side = bipartition(g)?;
    let mut medge = vec![0; g.n() + 1];
    hopcroft_karp_with(g, &side, &mut medge);
    Ok(Matching::from_mate_edges(g, &medge))
}

/// Extends the matching `medge` (matched edge per vertex) to a maximum one.
pub(crate) fn hopcroft_karp_with(g: &Graph, side: &[bool], medge: &mut [Edge]) {
    let n = g.n();
    let left: Vec<Vertex> = (1..=n).filter(|&u| side[u]).collect();
    let mut dist = vec![UNSET; n + 1];
    let mut current = vec![0; n + 1];
    let mut queue = VecDeque::new();
    let mut stack: Vec<Vertex> = Vec::new();
    loop {
        // layers of left vertices; `limit` is the layer where a free right
        // vertex is first found
        queue.clear();
        for &u in &left {
            if medge[u] == 0 {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = UNSET;
            }
        }
        let mut limit = UNSET;
        while let Some(u) = queue.pop_front() {
            if dist[u] >= limit {
                continue;
            }
            for e in g.edges_at(u) {
                let v = g.mate(u, e);
                if medge[v] == 0 {
                    if limit == UNSET {
                        limit = dist[u] + 1;
                    }
                } else {
                    let w = g.mate(v, medge[v]);
                    if dist[w] == UNSET {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        if limit == UNSET {
            return;
        }
        for &u in &left {
            current[u] = g.first_at(u);
        }
        for &r in &left {
            if medge[r] != 0 {
                continue;
            }
            stack.clear();
            stack.push(r);
            while let Some(&x) = stack.last() {
                let e = current[x];
                if e == 0 {
                    dist[x] = UNSET;
                    stack.pop();
                    if let Some(&y) = stack.last() {
                        current[y] = g.next_at(y, current[y]);
                    }
                    continue;
                }
                let v = g.mate(x, e);
                if medge[v] == 0 {
                    if dist[x] + 1 == limit {
                        for &y in &stack {
                            let f = current[y];
                            let z = g.mate(y, f);
                            medge[y] = f;
                            medge[z] = f;
                        }
                        for &y in &stack {
                            dist[y] = UNSET;
                        }
                        break;
                    }
                } else {
                    let w = g.mate(v, medge[v]);
                    if dist[w] != UNSET && dist[w] == dist[x] + 1 {
                        stack.push(w);
                        continue;
                    }
                }
                current[x] = g.next_at(x, e);
            }
        }
    }
}

/// Maximum matching as a unit-capacity flow from the left side to the right.
pub fn flow_reduction(g: &Graph) -> Result<Matching> {
    let side = bipartition(g)?;
    let n = g.n();
    let (s, t) = (n + 1, n + 2);
    let mut f = FlowGraph::new(n + 2, g.max_edge() + n, s, t)?;
    for e in g.edges() {
        let (u, v) = if side[g.left(e)] { (g.left(e), g.right(e)) } else { (g.right(e), g.left(e)) };
        f.join_with(u, v, e, 1)?;
    }
    for u in 1..=n {
        if g.degree(u) == 0 {
            continue;
        }
        if side[u] {
            f.add_edge(s, u, 1)?;
        } else {
            f.add_edge(u, t, 1)?;
        }
    }
    maxflow::augment(&mut f, maxflow::Algo::Dinic)?;
    let edges: Vec<Edge> = g.edges().filter(|&e| f.flow(e) == 1).collect();
    Ok(Matching::from_edges(g, &edges))
}

/// Search state of Edmonds' algorithm rooted at one free vertex.
///
/// Blossoms are shrunk by uniting their vertices in a [`Dsets`]; the base
/// of a blossom is stored at the root of its set.
struct Blossoms<'a> {
    g: &'a Graph,
    mate: &'a [Vertex],
    sets: Dsets,
    base_of: Vec<Vertex>,
    /// Parent of an odd vertex in the search tree.
    pred: Vec<Vertex>,
    even: Vec<bool>,
    mark: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'a> Blossoms<'a> {
    fn new(g: &'a Graph, mate: &'a [Vertex]) -> Self {
        let n = g.n();
        Blossoms {
            g,
            mate,
            sets: Dsets::new(n),
            base_of: (0..=n).collect(),
            pred: vec![0; n + 1],
            even: vec![false; n + 1],
            mark: vec![false; n + 1],
            queue: VecDeque::new(),
        }
    }

    fn base(&mut self, x: Vertex) -> Vertex {
        let r = self.sets.root(x);
        self.base_of[r]
    }

    fn lca(&mut self, a: Vertex, b: Vertex) -> Vertex {
        self.mark.iter_mut().for_each(|m| *m = false);
        let mut a = a;
        loop {
            a = self.base(a);
            self.mark[a] = true;
            if self.mate[a] == 0 {
                break;
            }
            a = self.pred[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base(b);
            if self.mark[b] {
                return b;
            }
            b = self.pred[self.mate[b]];
        }
    }

    /// Folds the tree path from even vertex `v` up to base `b` into the
    /// blossom, pointing odd vertices back across the blossom edge.
    fn fold(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base(v) != b {
            let m = self.mate[v];
            self.pred[v] = child;
            if !self.even[m] {
                self.even[m] = true;
                self.queue.push_back(m);
            }
            let r = self.sets.merge(v, b);
            self.base_of[r] = b;
            let r = self.sets.merge(m, b);
            self.base_of[r] = b;
            child = m;
            v = self.pred[m];
        }
    }

    /// Free vertex at the end of an augmenting path from `root`, if any.
    fn search(&mut self, root: Vertex) -> Option<Vertex> {
        let g = self.g;
        self.even[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for e in g.edges_at(v) {
                let to = g.mate(v, e);
                if self.base(v) == self.base(to) || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != 0 && self.pred[self.mate[to]] != 0) {
                    let b = self.lca(v, to);
                    self.fold(v, b, to);
                    self.fold(to, b, v);
                } else if self.pred[to] == 0 {
                    self.pred[to] = v;
                    if self.mate[to] == 0 {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    /// Vertices of the augmenting path ending at free vertex `end`.
    fn path(&self, end: Vertex) -> Vec<Vertex> {
        let mut path = Vec::new();
        let mut v = end;
        while v != 0 {
            let p = self.pred[v];
            path.push(v);
            path.push(p);
            v = self.mate[p];
        }
        path.reverse();
        path
    }
}

/// Edmonds' blossom algorithm for graphs that need not be bipartite.
pub fn edmonds_gabow(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![0; n + 1];
    for root in 1..=n {
        if mate[root] != 0 {
            continue;
        }
        let path = {
            let mut b = Blossoms::new(g, &mate);
            b.search(root).map(|end| b.path(end))
        };
        let Some(path) = path else { continue };
        for pair in path.chunks(2) {
            mate[pair[0]] = pair[1];
            mate[pair[1]] = pair[0];
        }
    }
    let mut medge = vec![0; n + 1];
    for u in 1..=n {
        let v = mate[u];
        if v != 0 && medge[u] == 0 {
            let e = g.edges_at(u).filter(|&e| g.mate(u, e) == v).min().expect("matched pair is adjacent");
            medge[u] = e;
            medge[v] = e;
        }
    }
    Matching::from_mate_edges(g, &medge)
}

/// Maximum weight bipartite matching by successive shortest augmenting
/// paths in the assignment network, stopping once no path has positive gain.
pub fn hungarian(g: &WGraph) -> Result<Matching> {
    let side = bipartition(g)?;
    let n = g.n();
    let (s, t) = (n + 1, n + 2);
    let mut f = FlowGraph::with_costs(n + 2, g.max_edge() + n, s, t)?;
    for e in g.edges() {
        let (u, v) = if side[g.left(e)] { (g.left(e), g.right(e)) } else { (g.right(e), g.left(e)) };
        f.join_with(u, v, e, 1)?;
        f.set_cost(e, -g.weight(e))?;
    }
    for u in 1..=n {
        if side[u] {
            f.add_edge(s, u, 1)?;
        } else {
            f.add_edge(u, t, 1)?;
        }
    }
    let mut p = mincost::initial_potentials(&f);
    let mut heap = DHeap::with_arity(n + 2, arity_for(n + 2, f.m()));
    let mut dist = vec![0; n + 3];
    let mut pred = vec![0; n + 3];
    loop {
        mincost::reduced_dijkstra(&f, s, 1, &p, &mut heap, &mut dist, &mut pred);
        if dist[t] == i64::MAX {
            break;
        }
        for v in 1..=n + 2 {
            if dist[v] != i64::MAX {
                p[v] += dist[v];
            }
        }
        if p[t] - p[s] >= 0 {
            break;
        }
        let mut v = t;
        while v != s {
            let u = f.mate(v, pred[v]);
            f.push(u, pred[v], 1);
            v = u;
        }
    }
    let edges: Vec<Edge> = g.edges().filter(|&e| f.flow(e) == 1).collect();
    Ok(Matching::from_edges(g, &edges))
}

/// Primal-dual maximum weight bipartite matching.
///
/// Left duals start at the largest edge weight, right duals at 0. Each
/// phase grows alternating trees from all free left vertices at once,
/// keeping the slack of the cheapest edge into every unreached right vertex
/// in a d-heap. Keys are stored offset by the total dual change so far, so
/// they never need updating. The phase ends with an augmentation when a
/// free right vertex becomes reachable by a tight edge, and the whole
/// algorithm ends when the duals of the free left vertices reach 0.
pub fn egmg(g: &WGraph) -> Result<Matching> {
    let side = bipartition(g)?;
    let n = g.n();
    let top = g.edges().map(|e| g.weight(e)).max().unwrap_or(0).max(0);
    let mut y: Vec<i64> = (0..=n).map(|u| if u > 0 && side[u] { top } else { 0 }).collect();
    let mut medge = vec![0; n + 1];
    let mut heap: DHeap<i64> = DHeap::with_arity(n, arity_for(n, g.m()));
    // time (total dual change) at which a vertex was labeled, or UNSET
    let mut labeled = vec![UNSET as i64; n + 1];
    let mut via = vec![0; n + 1];
    let unlabeled = UNSET as i64;
    loop {
        let free: Vec<Vertex> = (1..=n).filter(|&u| side[u] && medge[u] == 0).collect();
        let Some(&f0) = free.first() else { break };
        let free_dual = y[f0];
        if free_dual <= 0 {
            break;
        }
        heap.clear();
        labeled.iter_mut().for_each(|l| *l = unlabeled);
        let scan = |u: Vertex, d: i64, y: &[i64], labeled: &[i64], heap: &mut DHeap<i64>, via: &mut [Edge]| {
            for e in g.edges_at(u) {
                let v = g.mate(u, e);
                if labeled[v] != unlabeled {
                    continue;
                }
                let key = y[u] + y[v] - g.weight(e) + d;
                if !heap.contains(v) || key < heap.key(v) {
                    via[v] = e;
                    heap.insert_or_change(v, key).expect("vertex in range");
                }
            }
        };
        for &u in &free {
            labeled[u] = 0;
            scan(u, 0, &y, &labeled, &mut heap, &mut via);
        }
        let mut d;
        let mut end = 0;
        loop {
            match heap.find_min() {
                Some(v) if heap.key(v) < free_dual => {
                    d = heap.key(v);
                    heap.delete_min().expect("nonempty heap");
                    labeled[v] = d;
                    if medge[v] == 0 {
                        end = v;
                        break;
                    }
                    let x = g.mate(v, medge[v]);
                    labeled[x] = d;
                    scan(x, d, &y, &labeled, &mut heap, &mut via);
                }
                _ => {
                    d = free_dual;
                    break;
                }
            }
        }
        for u in 1..=n {
            if labeled[u] != unlabeled {
                if side[u] {
                    y[u] -= d - labeled[u];
                } else {
                    y[u] += d - labeled[u];
                }
            }
        }
        if end == 0 {
            break;
        }
        let mut v = end;
        loop {
            let e = via[v];
            let u = g.mate(v, e);
            let next = medge[u];
            medge[u] = e;
            medge[v] = e;
            if next == 0 {
                break;
            }
            v = g.mate(u, next);
        }
    }
    Ok(Matching::from_mate_edges(g, &medge))
}

fn check_disjoint(g: &Graph, m: &Matching) -> core::result::Result<(), Violation> {
    let n = g.n();
    let mut at = vec![0; n + 1];
    for &e in &m.edges {
        if !g.is_edge(e) {
            return Err(Violation::NotEdge(e));
        }
        for u in [g.left(e), g.right(e)] {
            if at[u] != 0 {
                return Err(Violation::Shared { vertex: u, first: at[u], second: e });
            }
            at[u] = e;
        }
    }
    if m.mate.len() != n + 1 {
        return Err(Violation::Mate(0));
    }
    for u in 1..=n {
        let expect = if at[u] == 0 { 0 } else { g.mate(u, at[u]) };
        if m.mate[u] != expect {
            return Err(Violation::Mate(u));
        }
    }
    Ok(())
}

/// Checks that `m` is a matching of `g` of maximum size: its edges are
/// disjoint, `mate` agrees with them, and no augmenting path exists.
pub fn matching_verify(g: &Graph, m: &Matching) -> core::result::Result<(), Violation> {
    check_disjoint(g, m)?;
    for r in 1..=g.n() {
        if m.mate[r] != 0 {
            continue;
        }
        let mut b = Blossoms::new(g, &m.mate);
        if let Some(end) = b.search(r) {
            return Err(Violation::AugmentingPath(b.path(end)));
        }
    }
    Ok(())
}

/// Checks that `m` is a matching of maximum weight in bipartite `g`: no
/// alternating path or cycle can increase its weight. Such an improvement is
/// a negative cycle in the residual graph of the assignment network with a
/// return edge from sink to source. On a graph that is not bipartite only
/// the matching itself is checked.
pub fn matching_verify_weight(g: &WGraph, m: &Matching) -> core::result::Result<(), Violation> {
    check_disjoint(g, m)?;
    let Ok(side) = bipartition(g) else { return Ok(()) };
    let n = g.n();
    let (s, t) = (n + 1, n + 2);
    let built = (|| -> Result<FlowGraph> {
        let mut f = FlowGraph::with_costs(n + 2, g.max_edge() + n + 1, s, t)?;
        for e in g.edges() {
            let (u, v) = if side[g.left(e)] { (g.left(e), g.right(e)) } else { (g.right(e), g.left(e)) };
            f.join_with(u, v, e, 1)?;
            f.set_cost(e, -g.weight(e))?;
        }
        for &e in &m.edges {
            f.set_flow(e, 1)?;
        }
        for u in 1..=n {
            let a = if side[u] { f.add_edge(s, u, 1)? } else { f.add_edge(u, t, 1)? };
            if m.mate[u] != 0 {
                f.set_flow(a, 1)?;
            }
        }
        let back = f.add_edge(t, s, n as i64)?;
        f.set_flow(back, m.size() as i64)?;
        Ok(f)
    })();
    let f = built.expect("assignment network fits");
    match mincost::residual_negative_cycle(&f) {
        Some(_) => Err(Violation::Improvable),
        None => Ok(()),
    }
}

/// Minimum vertex cover of bipartite `g` from a maximum matching `m`: left
/// vertices not reachable from a free left vertex by an alternating path,
/// and right vertices that are.
pub fn konig_cover(g: &Graph, side: &[bool], m: &Matching) -> Vec<Vertex> {
    let n = g.n();
    let mut seen = vec![false; n + 1];
    let mut queue: VecDeque<Vertex> = (1..=n).filter(|&u| side[u] && m.mate[u] == 0).collect();
    for &u in &queue {
        seen[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for e in g.edges_at(u) {
            let v = g.mate(u, e);
            if seen[v] || m.mate[u] == v {
                continue;
            }
            seen[v] = true;
            let w = m.mate[v];
            if w != 0 && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    (1..=n).filter(|&u| if side[u] { !seen[u] } else { seen[u] }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n, n);
        for u in 1..=n {
            g.add_edge(u, u % n + 1).unwrap();
        }
        g
    }

    #[test]
    fn even_cycle_and_star() {
        let g = cycle(6);
        for a in SizeAlgo::ALL {
            let m = max_size_matching(&g, a).unwrap();
            assert_eq!(m.size(), 3, "{}", a.name());
            assert_eq!(matching_verify(&g, &m), Ok(()));
        }
        let mut g = Graph::new(6, 5);
        for v in 2..=6 {
            g.add_edge(1, v).unwrap();
        }
        for a in SizeAlgo::ALL {
            assert_eq!(max_size_matching(&g, a).unwrap().size(), 1);
        }
    }

    #[test]
    fn odd_cycle_rejected() {
        let g = cycle(5);
        match hopcroft_karp(&g) {
            Err(Error::NotBipartite(c)) => assert_eq!(c.len() % 2, 1),
            r => panic!("{:?}", r),
        }
        let m = edmonds_gabow(&g);
        assert_eq!(m.size(), 2);
        assert_eq!(matching_verify(&g, &m), Ok(()));
    }

    #[test]
    fn blossom_needed() {
        // triangle 1-2-3 with a tail 3-4 and 1-5: augmenting through the blossom
        let mut g = Graph::new(6, 6);
        for (u, v) in [(1, 2), (2, 3), (3, 1), (3, 4), (1, 5), (4, 6)] {
            g.add_edge(u, v).unwrap();
        }
        let m = edmonds_gabow(&g);
        assert_eq!(m.size(), 3);
        assert_eq!(matching_verify(&g, &m), Ok(()));
    }

    #[test]
    fn verifier() {
        let g = cycle(6);
        let m = hopcroft_karp(&g).unwrap();
        let mut short = m.edges.clone();
        short.pop();
        let small = Matching::from_edges(&g, &short);
        assert!(matches!(matching_verify(&g, &small), Err(Violation::AugmentingPath(_))));
        let clash = Matching::from_edges(&g, &[1, 2]);
        assert_eq!(matching_verify(&g, &clash), Err(Violation::Shared { vertex: 2, first: 1, second: 2 }));
    }

    #[test]
    fn weighted() {
        let mut g = WGraph::new(3, 2);
        g.add_edge(1, 2, 5).unwrap();
        g.add_edge(2, 3, 5).unwrap();
        for a in WeightAlgo::ALL {
            let m = max_weight_matching(&g, a).unwrap();
            assert_eq!(m.weight(&g), 5, "{}", a.name());
            assert_eq!(matching_verify_weight(&g, &m), Ok(()));
        }
        // path with weights 2 3 2: the two outer edges win
        let mut g = WGraph::new(4, 3);
        g.add_edge(1, 2, 2).unwrap();
        g.add_edge(2, 3, 3).unwrap();
        g.add_edge(3, 4, 2).unwrap();
        for a in WeightAlgo::ALL {
            let m = max_weight_matching(&g, a).unwrap();
            assert_eq!(m.edges, vec![1, 3], "{}", a.name());
        }
        let worse = Matching::from_edges(&g, &[2]);
        assert_eq!(matching_verify_weight(&g, &worse), Err(Violation::Improvable));
        // a heavy middle edge beats two light ones; a negative edge is never used
        let mut g = WGraph::new(4, 4);
        g.add_edge(1, 2, 1).unwrap();
        g.add_edge(2, 3, 5).unwrap();
        g.add_edge(3, 4, 1).unwrap();
        g.add_edge(1, 4, -3).unwrap();
        for a in WeightAlgo::ALL {
            let m = max_weight_matching(&g, a).unwrap();
            assert_eq!(m.edges, vec![2], "{}", a.name());
            assert_eq!(matching_verify_weight(&g, &m), Ok(()));
        }
    }

    #[test]
    fn konig() {
        let g = cycle(8);
        let side = bipartition(&g).unwrap();
        let m = hopcroft_karp(&g).unwrap();
        let cover = konig_cover(&g, &side, &m);
        assert_eq!(cover.len(), m.size());
        for e in g.edges() {
            assert!(cover.contains(&g.left(e)) || cover.contains(&g.right(e)));
        }
    }
}
