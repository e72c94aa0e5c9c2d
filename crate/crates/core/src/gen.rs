//! Seeded random graphs.
//!
//! The generator is SplitMix64 (`rand_xoshiro::SplitMix64`) seeded with the
//! caller's seed; integers in a range are drawn with `rand`'s uniform
//! sampler. For a given seed the output is the same on every platform.
//!
//! Draw order: edge structure, then weights/capacities/costs in edge order,
//! then (when scrambling) the vertex permutation and the edge permutation.
//! Edges are sampled uniformly without replacement from the allowed vertex
//! pairs, so no generator produces parallel edges.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::{FlowGraph, Graph, WGraph};
use crate::{Error, Result, Vertex};

/// Kinds of graph the generator knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ugraph,
    Bigraph,
    Tree,
    Wgraph,
    Wbigraph,
    Digraph,
    Wdigraph,
    Dag,
    Flograph,
    Wflograph,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::Ugraph,
        Kind::Bigraph,
        Kind::Tree,
        Kind::Wgraph,
        Kind::Wbigraph,
        Kind::Digraph,
        Kind::Wdigraph,
        Kind::Dag,
        Kind::Flograph,
        Kind::Wflograph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Ugraph => "ugraph",
            Kind::Bigraph => "bigraph",
            Kind::Tree => "tree",
            Kind::Wgraph => "wgraph",
            Kind::Wbigraph => "wbigraph",
            Kind::Digraph => "digraph",
            Kind::Wdigraph => "wdigraph",
            Kind::Dag => "dag",
            Kind::Flograph => "flograph",
            Kind::Wflograph => "wflograph",
        }
    }

    /// Number of value ranges (`lo hi` pairs) the kind takes.
    pub fn ranges(self) -> usize {
        match self {
            Kind::Wgraph | Kind::Wbigraph | Kind::Wdigraph | Kind::Flograph => 1,
            Kind::Wflograph => 2,
            _ => 0,
        }
    }

    /// Whether the kind takes the source/sink edge count argument.
    pub fn takes_extra(self) -> bool {
        matches!(self, Kind::Flograph | Kind::Wflograph)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or(Error::Parameter("unknown graph kind"))
    }
}

/// Arguments common to every kind. Unused fields are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    /// Weight, length or capacity range.
    pub lo: i64,
    pub hi: i64,
    /// Cost range (`wflograph`).
    pub cost_lo: i64,
    pub cost_hi: i64,
    /// Edges leaving the source, and separately entering the sink (flow kinds).
    pub extra: usize,
    pub seed: u64,
    pub scramble: bool,
}

impl Params {
    pub fn new(n: usize, m: usize, seed: u64) -> Self {
        Params { n, m, lo: 1, hi: 1, cost_lo: 0, cost_hi: 0, extra: 0, seed, scramble: false }
    }

    pub fn range(mut self, lo: i64, hi: i64) -> Self {
        self.lo = lo;
        self.hi = hi;
        self
    }

    pub fn costs(mut self, lo: i64, hi: i64) -> Self {
        self.cost_lo = lo;
        self.cost_hi = hi;
        self
    }

    pub fn extra(mut self, k: usize) -> Self {
        self.extra = k;
        self
    }

    pub fn scrambled(mut self, on: bool) -> Self {
        self.scramble = on;
        self
    }
}

/// A generated graph of any kind.
#[derive(Clone, Debug)]
pub enum Generated {
    Plain(Graph),
    Weighted(WGraph),
    Flow(FlowGraph),
}

/// Generates a graph of the given kind.
pub fn rand_graph(kind: Kind, p: &Params) -> Result<Generated> {
    Ok(match kind {
        Kind::Ugraph => Generated::Plain(ugraph(p)?),
        Kind::Bigraph => Generated::Plain(bigraph(p)?),
        Kind::Tree => Generated::Plain(tree(p)?),
        Kind::Wgraph => Generated::Weighted(wgraph(p)?),
        Kind::Wbigraph => Generated::Weighted(wbigraph(p)?),
        Kind::Digraph => Generated::Plain(digraph(p)?),
        Kind::Wdigraph => Generated::Weighted(wdigraph(p)?),
        Kind::Dag => Generated::Plain(dag(p)?),
        Kind::Flograph => Generated::Flow(flograph(p)?),
        Kind::Wflograph => Generated::Flow(wflograph(p)?),
    })
}

/// Size of the left side of a generated bipartite graph on `n` vertices.
pub fn left_side(n: usize) -> usize {
    n.div_ceil(2)
}

/// Draws `m` distinct values from `0..space`, returned in increasing order.
fn sample_distinct(rng: &mut SplitMix64, space: usize, m: usize) -> Result<Vec<usize>> {
    if m > space {
        return Err(Error::Parameter("too many edges for the number of vertices"));
    }
    let mut picked: Vec<usize> = if 2 * m > space {
        let mut all: Vec<usize> = (0..space).collect();
        let (head, _) = all.partial_shuffle(rng, m);
        head.to_vec()
    } else {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(m);
        while out.len() < m {
            let x = rng.gen_range(0..space);
            if seen.insert(x) {
                out.push(x);
            }
        }
        out
    };
    picked.sort_unstable();
    Ok(picked)
}

/// Unordered pair number `k` of `0..n(n-1)/2`, as `(u, v)` with `u < v`.
fn unordered_pair(n: usize, mut k: usize) -> (Vertex, Vertex) {
    let mut u = 1;
    while k >= n - u {
        k -= n - u;
        u += 1;
    }
    (u, u + 1 + k)
}

/// Ordered pair number `k` of `0..n(n-1)`, excluding loops.
fn ordered_pair(n: usize, k: usize) -> (Vertex, Vertex) {
    let u = 1 + k / (n - 1);
    let r = 1 + k % (n - 1);
    (u, if r < u { r } else { r + 1 })
}

fn check_common(p: &Params, ranges: usize) -> Result<()> {
    if p.n == 0 {
        return Err(Error::Parameter("graph needs at least one vertex"));
    }
    if ranges >= 1 && p.lo > p.hi {
        return Err(Error::Parameter("empty value range"));
    }
    if ranges >= 2 && p.cost_lo > p.cost_hi {
        return Err(Error::Parameter("empty cost range"));
    }
    Ok(())
}

struct Skeleton {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Skeleton {
    /// Applies the seeded vertex and edge permutations. Returns the vertex map.
    fn scramble(&mut self, rng: &mut SplitMix64, values: &mut [Vec<i64>]) -> Vec<Vertex> {
        let mut map: Vec<Vertex> = (0..=self.n).collect();
        map[1..].shuffle(rng);
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.shuffle(rng);
        self.edges = order.iter().map(|&i| (map[self.edges[i].0], map[self.edges[i].1])).collect();
        for vals in values.iter_mut() {
            *vals = order.iter().map(|&i| vals[i]).collect();
        }
        map
    }

    fn into_graph(self, directed: bool) -> Graph {
        let mut g = if directed {
            Graph::new_directed(self.n, self.edges.len())
        } else {
            Graph::new(self.n, self.edges.len())
        };
        for (u, v) in self.edges {
            g.add_edge(u, v).expect("generated edges are valid");
        }
        g
    }
}

fn draw(rng: &mut SplitMix64, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..count).map(|_| rng.gen_range(lo..=hi)).collect()
}

fn undirected_skeleton(rng: &mut SplitMix64, p: &Params) -> Result<Skeleton> {
    let space = p.n * (p.n - 1) / 2;
    let edges = sample_distinct(rng, space, p.m)?.into_iter().map(|k| unordered_pair(p.n, k)).collect();
    Ok(Skeleton { n: p.n, edges })
}

fn bipartite_skeleton(rng: &mut SplitMix64, p: &Params) -> Result<Skeleton> {
    let n1 = left_side(p.n);
    let n2 = p.n - n1;
    let edges = sample_distinct(rng, n1 * n2, p.m)?
        .into_iter()
        .map(|k| (1 + k / n2, n1 + 1 + k % n2))
        .collect();
    Ok(Skeleton { n: p.n, edges })
}

fn directed_skeleton(rng: &mut SplitMix64, p: &Params) -> Result<Skeleton> {
    let space = p.n * (p.n - 1);
    let edges = sample_distinct(rng, space, p.m)?.into_iter().map(|k| ordered_pair(p.n, k)).collect();
    Ok(Skeleton { n: p.n, edges })
}

fn plain(p: &Params, directed: bool, build: fn(&mut SplitMix64, &Params) -> Result<Skeleton>) -> Result<Graph> {
    check_common(p, 0)?;
    let mut rng = SplitMix64::seed_from_u64(p.seed);
    let mut sk = build(&mut rng, p)?;
    if p.scramble {
        sk.scramble(&mut rng, &mut []);
    }
    Ok(sk.into_graph(directed))
}

fn weighted(p: &Params, directed: bool, build: fn(&mut SplitMix64, &Params) -> Result<Skeleton>) -> Result<WGraph> {
    check_common(p, 1)?;
    let mut rng = SplitMix64::seed_from_u64(p.seed);
    let mut sk = build(&mut rng, p)?;
    let mut vals = [draw(&mut rng, sk.edges.len(), p.lo, p.hi)];
    if p.scramble {
        sk.scramble(&mut rng, &mut vals);
    }
    let mut g = if directed {
        WGraph::new_directed(sk.n, sk.edges.len())
    } else {
        WGraph::new(sk.n, sk.edges.len())
    };
    for (&(u, v), &w) in sk.edges.iter().zip(vals[0].iter()) {
        g.add_edge(u, v, w)?;
    }
    Ok(g)
}

pub fn ugraph(p: &Params) -> Result<Graph> {
    plain(p, false, undirected_skeleton)
}

/// Bipartite graph; the left side is `1..=ceil(n/2)` before scrambling.
pub fn bigraph(p: &Params) -> Result<Graph> {
    plain(p, false, bipartite_skeleton)
}

/// Random tree: vertex `v` attaches to a uniform earlier vertex. `m` must be `n - 1`.
pub fn tree(p: &Params) -> Result<Graph> {
    if p.n > 0 && p.m != p.n - 1 {
        return Err(Error::Parameter("a tree on n vertices has n-1 edges"));
    }
    plain(p, false, |rng, p| {
        let edges = (2..=p.n).map(|v| (rng.gen_range(1..v), v)).collect();
        Ok(Skeleton { n: p.n, edges })
    })
}

pub fn wgraph(p: &Params) -> Result<WGraph> {
    weighted(p, false, undirected_skeleton)
}

pub fn wbigraph(p: &Params) -> Result<WGraph> {
    weighted(p, false, bipartite_skeleton)
}

pub fn digraph(p: &Params) -> Result<Graph> {
    plain(p, true, directed_skeleton)
}

pub fn wdigraph(p: &Params) -> Result<WGraph> {
    weighted(p, true, directed_skeleton)
}

/// Acyclic digraph; before scrambling every edge runs from lower to higher vertex.
pub fn dag(p: &Params) -> Result<Graph> {
    plain(p, true, undirected_skeleton)
}

fn flow_skeleton(rng: &mut SplitMix64, p: &Params) -> Result<(Skeleton, Vertex, Vertex)> {
    if p.n < 2 {
        return Err(Error::Parameter("flow graph needs a source and a sink"));
    }
    let inner = p.n - 2;
    let k = p.extra;
    if k > inner {
        return Err(Error::Parameter("more source/sink edges than inner vertices"));
    }
    if 2 * k > p.m {
        return Err(Error::Parameter("edge count smaller than source plus sink edges"));
    }
    let (s, t) = (p.n - 1, p.n);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(p.m);
    edges.extend(sample_distinct(rng, inner, k)?.into_iter().map(|x| (s, x + 1)));
    let space = if inner >= 2 { inner * (inner - 1) } else { 0 };
    if inner >= 2 {
        edges.extend(sample_distinct(rng, space, p.m - 2 * k)?.into_iter().map(|i| ordered_pair(inner, i)));
    } else if p.m > 2 * k {
        return Err(Error::Parameter("too many edges for the number of vertices"));
    }
    edges.extend(sample_distinct(rng, inner, k)?.into_iter().map(|x| (x + 1, t)));
    Ok((Skeleton { n: p.n, edges }, s, t))
}

fn flow(p: &Params, with_costs: bool) -> Result<FlowGraph> {
    check_common(p, if with_costs { 2 } else { 1 })?;
    if p.lo < 0 {
        return Err(Error::Parameter("capacities must be non-negative"));
    }
    let mut rng = SplitMix64::seed_from_u64(p.seed);
    let (mut sk, mut s, mut t) = flow_skeleton(&mut rng, p)?;
    let caps = draw(&mut rng, sk.edges.len(), p.lo, p.hi);
    let costs = if with_costs { draw(&mut rng, sk.edges.len(), p.cost_lo, p.cost_hi) } else { Vec::new() };
    let mut vals = [caps, costs];
    if p.scramble {
        if !with_costs {
            vals[1] = alloc::vec![0; sk.edges.len()];
        }
        let map = sk.scramble(&mut rng, &mut vals);
        s = map[s];
        t = map[t];
    }
    let m = sk.edges.len();
    let mut f = if with_costs {
        FlowGraph::with_costs(sk.n, m, s, t)?
    } else {
        FlowGraph::new(sk.n, m, s, t)?
    };
    for (i, &(u, v)) in sk.edges.iter().enumerate() {
        let e = f.add_edge(u, v, vals[0][i])?;
        if with_costs {
            f.set_cost(e, vals[1][i])?;
        }
    }
    Ok(f)
}

/// Flow network: source `n-1`, sink `n` (before scrambling), `extra` edges
/// from the source and `extra` edges into the sink, the remaining `m - 2*extra`
/// edges among the inner vertices. Capacities are drawn from `lo..=hi`.
pub fn flograph(p: &Params) -> Result<FlowGraph> {
    flow(p, false)
}

/// As [`flograph`], with edge costs drawn from `cost_lo..=cost_hi`.
pub fn wflograph(p: &Params) -> Result<FlowGraph> {
    flow(p, true)
}
