mod common;

use common::{flow_values, multiset, random_instance, round_trip};
use grafalgo::text::{self, FlowDialect};
use grafalgo_core::gen::Kind;
use grafalgo_core::graph::Graph;
use grafalgo_testkit::{rng, Rng};
use proptest::prelude::*;

const FIVE: &str = include_str!("fixtures/five.txt");
const MST6: &str = include_str!("fixtures/mst6.txt");
const SPT6: &str = include_str!("fixtures/spt6.txt");
const FLOW10: &str = include_str!("fixtures/flow10.txt");

fn five() -> Graph {
    let mut g = Graph::new(5, 6);
    for (u, v) in [(1, 2), (1, 3), (1, 4), (2, 5), (3, 4), (4, 5)] {
        g.add_edge(u, v).unwrap();
    }
    g
}

#[test]
fn five_vertex_listing() {
    assert_eq!(text::graph_to_text(&five()), FIVE);
    let g = text::graph_from_text(FIVE, false).unwrap();
    assert_eq!((g.n(), g.m()), (5, 6));
}

#[test]
fn listings_are_fixed_points() {
    assert_eq!(text::wgraph_to_text(&text::wgraph_from_text(MST6, false).unwrap()), MST6);
    assert_eq!(text::wgraph_to_text(&text::wgraph_from_text(SPT6, true).unwrap()), SPT6);
    let f = text::flow_from_text(FLOW10, FlowDialect::Plain).unwrap();
    assert_eq!((f.source(), f.sink(), f.n(), f.m()), (9, 10, 10, 20));
    assert_eq!(text::flow_to_text(&f), FLOW10);
}

#[test]
fn flow_listing_values() {
    let f = text::flow_from_text(FLOW10, FlowDialect::Plain).unwrap();
    let ib = f.out_edges(9).find(|&e| f.head(e) == 2).unwrap();
    assert_eq!((f.cap(ib), f.flow(ib)), (16, 16));
    assert_eq!(f.residual_capacity(ib, 9), Ok(0));
    assert_eq!(f.residual_capacity(ib, 2), Ok(16));
}

#[test]
fn random_round_trips_all_dialects() {
    let mut r = rng(2024);
    let mut count = 0;
    for kind in Kind::ALL {
        for i in 0..20 {
            // half above the 26-vertex letter limit
            let n = if i % 2 == 0 { r.gen_range(4..=26) } else { r.gen_range(27..=60) };
            round_trip(&random_instance(&mut r, kind, n)).unwrap();
            count += 1;
        }
    }
    assert_eq!(count, 200);
}

#[test]
fn floors_dialect_round_trip() {
    let mut r = rng(7);
    for _ in 0..50 {
        let n = r.gen_range(2..=40);
        let m = r.gen_range(0..=80);
        let f = grafalgo_testkit::instances::floor_graph(&mut r, n, m, 9);
        let t = text::flow_to_text(&f);
        assert!(t.contains(&format!("->{}:", text::vertex_name(n, n))));
        let h = text::flow_from_text(&t, FlowDialect::Floors).unwrap();
        assert_eq!(multiset(&h, flow_values(&h)), multiset(&f, flow_values(&f)));
    }
}

#[test]
fn isolated_last_vertex_keeps_count() {
    let mut g = Graph::new(4, 1);
    g.add_edge(1, 2).unwrap();
    let t = text::graph_to_text(&g);
    assert_eq!(t, "{\n[a: b]\n[b: a]\n[d:]\n}\n");
    assert_eq!(text::graph_from_text(&t, false).unwrap().n(), 4);
}

#[test]
fn parallel_edges_round_trip() {
    let t = "{\n[a: b b c]\n[b: a a]\n[c: a]\n}\n";
    let g = text::graph_from_text(t, false).unwrap();
    assert_eq!(g.m(), 3);
    assert_eq!(text::graph_to_text(&g), t);
    assert!(text::graph_from_text("{\n[a: b b]\n[b: a]\n}\n", false).is_err());
}

proptest! {
    #[test]
    fn parser_never_panics(s in "[{}\\[\\]a-e0-9(),:> -]{0,60}") {
        let _ = text::graph_from_text(&s, false);
        let _ = text::wgraph_from_text(&s, true);
        let _ = text::flow_from_text(&s, FlowDialect::Costs);
    }

    #[test]
    fn mutated_listing_never_panics(pos in 0usize..FLOW10.len(), c in "[{}\\[\\]a-k0-9(),:> \n-]") {
        let mut s = FLOW10.to_string();
        s.replace_range(pos..pos + 1, &c);
        let _ = text::flow_from_text(&s, FlowDialect::Plain);
    }
}
