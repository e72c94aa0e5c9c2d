//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use grafalgo::text::{self, FlowDialect};
use grafalgo_core::gen::{self, Generated, Kind, Params};
use grafalgo_core::graph::{FlowGraph, Graph};
use grafalgo_testkit::Rng;

/// Edges as `(lower, higher, values)` for undirected graphs or
/// `(tail, head, values)` for directed ones, sorted.
pub fn multiset(g: &Graph, values: impl Fn(usize) -> Vec<i64>) -> Vec<(usize, usize, Vec<i64>)> {
    let mut out: Vec<_> = g
        .edges()
        .map(|e| {
            let (u, v) = (g.left(e), g.right(e));
            let (u, v) = if g.is_directed() { (u, v) } else { (u.min(v), u.max(v)) };
            (u, v, values(e))
        })
        .collect();
    out.sort();
    out
}

pub fn flow_values(f: &FlowGraph) -> impl Fn(usize) -> Vec<i64> + '_ {
    move |e| vec![f.floor(e), f.cap(e), f.cost(e), f.flow(e)]
}

/// Writes `g`, reads it back and checks that vertex count, edge multiset
/// and text are unchanged.
pub fn round_trip(g: &Generated) -> Result<(), String> {
    let same = match g {
        Generated::Plain(g) => {
            let t = text::graph_to_text(g);
            let h = text::graph_from_text(&t, g.is_directed()).map_err(|e| e.to_string())?;
            h.n() == g.n() && multiset(&h, |_| vec![]) == multiset(g, |_| vec![]) && text::graph_to_text(&h) == t
        }
        Generated::Weighted(g) => {
            let t = text::wgraph_to_text(g);
            let h = text::wgraph_from_text(&t, g.is_directed()).map_err(|e| e.to_string())?;
            h.n() == g.n()
                && multiset(&h, |e| vec![h.weight(e)]) == multiset(g, |e| vec![g.weight(e)])
                && text::wgraph_to_text(&h) == t
        }
        Generated::Flow(f) => {
            let t = text::flow_to_text(f);
            let h = text::flow_from_text(&t, FlowDialect::of(f)).map_err(|e| e.to_string())?;
            (h.n(), h.source(), h.sink()) == (f.n(), f.source(), f.sink())
                && multiset(&h, flow_values(&h)) == multiset(f, flow_values(f))
                && text::flow_to_text(&h) == t
        }
    };
    if same {
        Ok(())
    } else {
        Err(format!("round trip changed the graph:\n{g:?}"))
    }
}

/// A random graph of the given kind; flow graphs get random flows within
/// capacity (not conserved) so the flow field is exercised.
pub fn random_instance(r: &mut impl Rng, kind: Kind, n: usize) -> Generated {
    let max = match kind {
        Kind::Ugraph | Kind::Wgraph | Kind::Dag => n * (n - 1) / 2,
        Kind::Bigraph | Kind::Wbigraph => gen::left_side(n) * (n - gen::left_side(n)),
        Kind::Digraph | Kind::Wdigraph => n * (n - 1),
        Kind::Tree => n - 1,
        Kind::Flograph | Kind::Wflograph => (n - 2) * (n - 3),
    };
    let extra = if kind.takes_extra() { r.gen_range(0..=n - 2) } else { 0 };
    let m = if kind == Kind::Tree { n - 1 } else { r.gen_range(0..=max.min(4 * n)) + 2 * extra };
    let p = Params::new(n, m, r.gen())
        .range(if kind.takes_extra() { 0 } else { -5 }, r.gen_range(1..=50))
        .costs(-9, 9)
        .extra(extra)
        .scrambled(r.gen());
    let mut g = gen::rand_graph(kind, &p).unwrap();
    if let Generated::Flow(f) = &mut g {
        for e in f.edges().collect::<Vec<_>>() {
            let flow = r.gen_range(0..=f.cap(e));
            f.set_flow(e, flow).unwrap();
        }
    }
    g
}
