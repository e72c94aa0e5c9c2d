//! The text form of graphs.
//!
//! ```text
//! {
//! [a: b c d]
//! [b: a e]
//! ...
//! }
//! ```
//!
//! Each line holds a vertex and its neighbors; vertices are lower-case
//! letters when there are at most 26 of them and decimal numbers otherwise
//! (both are accepted when reading). An undirected edge is listed on the
//! lines of both endpoints, a directed one only on its tail's line.
//! Neighbors carry the edge's values in parentheses:
//!
//! | graph | neighbor |
//! |---|---|
//! | plain | `v` |
//! | weighted | `v(w)` |
//! | flow | `v(cap,flow)` |
//! | flow with costs | `v(cap,cost,flow)` |
//! | flow with floors | `v(floor,cap,flow)` |
//!
//! Flow graphs mark the source line `[s->: ...]` and the sink line
//! `[->t: ...]`. A line is written for every vertex with listed neighbors,
//! for the source and sink, and for vertex `n` so the vertex count survives
//! a round trip. Neighbors appear in order of vertex, then edge number.
//!
//! Reading an undirected graph creates each edge from the line of its
//! lower-numbered endpoint, in the order read; the mention on the other
//! endpoint's line must agree (same multiplicity and values).

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use grafalgo_core::graph::{FlowGraph, Graph, WGraph};
use grafalgo_core::{write_index, Edge, Vertex};

/// Largest vertex number accepted when reading.
pub const MAX_VERTEX: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based position of the offending character.
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Which three-value form a flow graph uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowDialect {
    Plain,
    Costs,
    Floors,
}

impl FlowDialect {
    pub fn of(f: &FlowGraph) -> FlowDialect {
        if f.has_costs() {
            FlowDialect::Costs
        } else if f.has_floors() {
            FlowDialect::Floors
        } else {
            FlowDialect::Plain
        }
    }

    fn arity(self) -> usize {
        match self {
            FlowDialect::Plain => 2,
            _ => 3,
        }
    }
}

/// Appends the name of vertex `x` of an `n`-vertex graph.
pub fn push_vertex(out: &mut String, x: Vertex, n: usize) {
    write_index(out, x, n).expect("writing to a string");
}

pub fn vertex_name(x: Vertex, n: usize) -> String {
    let mut s = String::new();
    push_vertex(&mut s, x, n);
    s
}

fn write_block(
    g: &Graph,
    marks: Option<(Vertex, Vertex)>,
    mut values: impl FnMut(Edge, &mut String),
) -> String {
    let n = g.n();
    let mut out = String::from("{\n");
    let mut nbrs: Vec<(Vertex, Edge)> = Vec::new();
    for u in 1..=n {
        nbrs.clear();
        let listed = if g.is_directed() { g.out_edges(u).collect::<Vec<_>>() } else { g.edges_at(u).collect() };
        nbrs.extend(listed.into_iter().map(|e| (g.mate(u, e), e)));
        nbrs.sort_unstable();
        let (source, sink) = match marks {
            Some((s, t)) => (u == s, u == t),
            None => (false, false),
        };
        if nbrs.is_empty() && !source && !sink && u != n {
            continue;
        }
        out.push('[');
        if sink {
            out.push_str("->");
        }
        push_vertex(&mut out, u, n);
        if source {
            out.push_str("->");
        }
        out.push(':');
        for &(v, e) in &nbrs {
            out.push(' ');
            push_vertex(&mut out, v, n);
            values(e, &mut out);
        }
        out.push_str("]\n");
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_text(g: &Graph) -> String {
    write_block(g, None, |_, _| {})
}

pub fn wgraph_to_text(g: &WGraph) -> String {
    write_block(g.graph(), None, |e, out| write!(out, "({})", g.weight(e)).unwrap())
}

pub fn flow_to_text(f: &FlowGraph) -> String {
    let dialect = FlowDialect::of(f);
    write_block(f.graph(), Some((f.source(), f.sink())), |e, out| match dialect {
        FlowDialect::Plain => write!(out, "({},{})", f.cap(e), f.flow(e)).unwrap(),
        FlowDialect::Costs => write!(out, "({},{},{})", f.cap(e), f.cost(e), f.flow(e)).unwrap(),
        FlowDialect::Floors => write!(out, "({},{},{})", f.floor(e), f.cap(e), f.flow(e)).unwrap(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    None,
    Source,
    Sink,
}

struct Neighbor {
    vertex: Vertex,
    values: Vec<i64>,
    pos: Pos,
}

struct Line {
    vertex: Vertex,
    mark: Mark,
    neighbors: Vec<Neighbor>,
    pos: Pos,
}

struct Block {
    n: usize,
    lines: Vec<Line>,
    end: Pos,
}

/// Scanner over one line of input.
struct Scanner<'a> {
    bytes: &'a [u8],
    at: usize,
    line: usize,
}

impl Scanner<'_> {
    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.at + 1 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.at).copied()
    }

    fn skip_space(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r')) {
            self.at += 1;
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.bytes[self.at..].starts_with(s.as_bytes()) {
            self.at += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.pos().error(format!("expected '{}'", c as char)))
        }
    }

    fn vertex(&mut self) -> Result<Vertex, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(c @ b'a'..=b'z') => {
                self.at += 1;
                if matches!(self.peek(), Some(b'a'..=b'z' | b'0'..=b'9')) {
                    return Err(pos.error("a vertex is a single letter or a number"));
                }
                Ok((c - b'a') as usize + 1)
            }
            Some(b'0'..=b'9') => {
                let start = self.at;
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.at += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.at]).unwrap();
                match text.parse::<usize>() {
                    Ok(0) => Err(pos.error("vertex numbers start at 1")),
                    Ok(v) if v <= MAX_VERTEX => Ok(v),
                    _ => Err(pos.error("vertex number too large")),
                }
            }
            _ => Err(pos.error("expected a vertex")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let start = self.at;
        if self.peek() == Some(b'-') {
            self.at += 1;
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.at += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.at]).unwrap();
        text.parse().map_err(|_| pos.error("expected an integer"))
    }
}

fn parse_line(text: &str, line: usize) -> Result<Line, ParseError> {
    let mut sc = Scanner { bytes: text.as_bytes(), at: 0, line };
    sc.skip_space();
    let pos = sc.pos();
    sc.expect(b'[')?;
    let mut mark = Mark::None;
    if sc.eat("->") {
        mark = Mark::Sink;
    }
    let vertex = sc.vertex()?;
    if sc.eat("->") {
        if mark == Mark::Sink {
            return Err(sc.pos().error("a vertex cannot be both source and sink"));
        }
        mark = Mark::Source;
    }
    sc.expect(b':')?;
    let mut neighbors = Vec::new();
    loop {
        sc.skip_space();
        if sc.peek() == Some(b']') {
            sc.at += 1;
            break;
        }
        let pos = sc.pos();
        let v = sc.vertex()?;
        let mut values = Vec::new();
        if sc.peek() == Some(b'(') {
            sc.at += 1;
            loop {
                sc.skip_space();
                values.push(sc.int()?);
                sc.skip_space();
                if sc.peek() == Some(b',') {
                    sc.at += 1;
                } else {
                    sc.expect(b')')?;
                    break;
                }
            }
        }
        neighbors.push(Neighbor { vertex: v, values, pos });
    }
    sc.skip_space();
    if sc.peek().is_some() {
        return Err(sc.pos().error("unexpected text after ']'"));
    }
    Ok(Line { vertex, mark, neighbors, pos })
}

fn parse_block(text: &str) -> Result<Block, ParseError> {
    let mut lines = Vec::new();
    let mut opened = false;
    let mut end = None;
    let mut last = Pos { line: 1, column: 1 };
    for (i, raw) in text.split('\n').enumerate() {
        let ln = i + 1;
        let trimmed = raw.trim();
        let column = raw.len() - raw.trim_start().len() + 1;
        last = Pos { line: ln, column };
        if trimmed.is_empty() {
            continue;
        }
        let here = Pos { line: ln, column };
        if end.is_some() {
            return Err(here.error("text after the closing '}'"));
        }
        if !opened {
            if trimmed != "{" {
                return Err(here.error("expected '{'"));
            }
            opened = true;
        } else if trimmed == "}" {
            end = Some(here);
        } else {
            lines.push(parse_line(raw, ln)?);
        }
    }
    if !opened {
        return Err(last.error("expected '{'"));
    }
    let end = end.ok_or_else(|| last.error("missing closing '}'"))?;
    let mut n = 0;
    let mut seen = BTreeMap::new();
    for l in &lines {
        if seen.insert(l.vertex, ()).is_some() {
            return Err(l.pos.error("vertex listed on two lines"));
        }
        n = n.max(l.vertex);
        for nb in &l.neighbors {
            n = n.max(nb.vertex);
        }
    }
    Ok(Block { n, lines, end })
}

fn check_arity(b: &Block, arity: usize, what: &str) -> Result<(), ParseError> {
    for l in &b.lines {
        if l.mark != Mark::None && arity != 2 && arity != 3 {
            return Err(l.pos.error("source and sink marks belong to flow graphs"));
        }
        for nb in &l.neighbors {
            if nb.values.len() != arity {
                return Err(nb.pos.error(format!("expected {what}")));
            }
        }
    }
    Ok(())
}

/// An edge read from a block: endpoints and values.
type ReadEdge = (Vertex, Vertex, Vec<i64>);

/// Values of one vertex pair listed on the lower line, on the higher line,
/// and where the pair was first seen.
type PairSides = (Vec<Vec<i64>>, Vec<Vec<i64>>, Pos);

/// Edges of an undirected block as `(u, v, values)` with `u < v`, in
/// creation order, after checking that both lines agree.
fn undirected_edges(b: &Block) -> Result<Vec<ReadEdge>, ParseError> {
    let mut edges = Vec::new();
    let mut sides: BTreeMap<(Vertex, Vertex), PairSides> = BTreeMap::new();
    for l in &b.lines {
        let u = l.vertex;
        for nb in &l.neighbors {
            let v = nb.vertex;
            if u == v {
                return Err(nb.pos.error("self-loops are not allowed"));
            }
            let key = (u.min(v), u.max(v));
            let entry = sides.entry(key).or_insert_with(|| (Vec::new(), Vec::new(), nb.pos));
            if u < v {
                entry.0.push(nb.values.clone());
                edges.push((u, v, nb.values.clone()));
            } else {
                entry.1.push(nb.values.clone());
            }
        }
    }
    for ((u, v), (mut low, mut high, pos)) in sides {
        low.sort();
        high.sort();
        if low != high {
            let n = b.n;
            return Err(pos.error(format!(
                "edge {}-{} is listed differently on the lines of its two endpoints",
                vertex_name(u, n),
                vertex_name(v, n)
            )));
        }
    }
    Ok(edges)
}

fn directed_edges(b: &Block) -> Result<Vec<(ReadEdge, Pos)>, ParseError> {
    let mut edges = Vec::new();
    for l in &b.lines {
        for nb in &l.neighbors {
            if nb.vertex == l.vertex {
                return Err(nb.pos.error("self-loops are not allowed"));
            }
            edges.push(((l.vertex, nb.vertex, nb.values.clone()), nb.pos));
        }
    }
    Ok(edges)
}

pub fn graph_from_text(text: &str, directed: bool) -> Result<Graph, ParseError> {
    let b = parse_block(text)?;
    check_arity(&b, 0, "a plain vertex")?;
    let pairs: Vec<(Vertex, Vertex)> = if directed {
        directed_edges(&b)?.into_iter().map(|((u, v, _), _)| (u, v)).collect()
    } else {
        undirected_edges(&b)?.into_iter().map(|(u, v, _)| (u, v)).collect()
    };
    let mut g = if directed { Graph::new_directed(b.n, pairs.len()) } else { Graph::new(b.n, pairs.len()) };
    for (u, v) in pairs {
        g.add_edge(u, v).expect("edge within bounds");
    }
    Ok(g)
}

pub fn wgraph_from_text(text: &str, directed: bool) -> Result<WGraph, ParseError> {
    let b = parse_block(text)?;
    check_arity(&b, 1, "a weight in parentheses")?;
    let edges: Vec<(Vertex, Vertex, i64)> = if directed {
        directed_edges(&b)?.into_iter().map(|((u, v, w), _)| (u, v, w[0])).collect()
    } else {
        undirected_edges(&b)?.into_iter().map(|(u, v, w)| (u, v, w[0])).collect()
    };
    let mut g = if directed { WGraph::new_directed(b.n, edges.len()) } else { WGraph::new(b.n, edges.len()) };
    for (u, v, w) in edges {
        g.add_edge(u, v, w).expect("edge within bounds");
    }
    Ok(g)
}

pub fn flow_from_text(text: &str, dialect: FlowDialect) -> Result<FlowGraph, ParseError> {
    let b = parse_block(text)?;
    let what = match dialect {
        FlowDialect::Plain => "(capacity,flow)",
        FlowDialect::Costs => "(capacity,cost,flow)",
        FlowDialect::Floors => "(floor,capacity,flow)",
    };
    check_arity(&b, dialect.arity(), what)?;
    let mut source = None;
    let mut sink = None;
    for l in &b.lines {
        let slot = match l.mark {
            Mark::Source => &mut source,
            Mark::Sink => &mut sink,
            Mark::None => continue,
        };
        if slot.is_some() {
            return Err(l.pos.error("second source or sink line"));
        }
        *slot = Some(l.vertex);
    }
    let s = source.ok_or_else(|| b.end.error("no source line ('[v->: ...]')"))?;
    let t = sink.ok_or_else(|| b.end.error("no sink line ('[->v: ...]')"))?;
    let edges = directed_edges(&b)?;
    let m = edges.len();
    let mut f = match dialect {
        FlowDialect::Plain => FlowGraph::new(b.n, m, s, t),
        FlowDialect::Costs => FlowGraph::with_costs(b.n, m, s, t),
        FlowDialect::Floors => FlowGraph::with_floors(b.n, m, s, t),
    }
    .map_err(|e| b.end.error(e.to_string()))?;
    for ((u, v, vals), pos) in edges {
        let (cap, flow) = match dialect {
            FlowDialect::Plain => (vals[0], vals[1]),
            FlowDialect::Costs => (vals[0], vals[2]),
            FlowDialect::Floors => (vals[1], vals[2]),
        };
        let e = f.add_edge(u, v, cap).map_err(|e| pos.error(e.to_string()))?;
        match dialect {
            FlowDialect::Costs => f.set_cost(e, vals[1]),
            FlowDialect::Floors => f.set_floor(e, vals[0]),
            FlowDialect::Plain => Ok(()),
        }
        .map_err(|e| pos.error(e.to_string()))?;
        f.set_flow(e, flow).map_err(|e| pos.error(e.to_string()))?;
    }
    Ok(f)
}

/// Appends `(u,v)` for edge `e`, lower-numbered endpoint first unless
/// the graph is directed.
pub fn push_edge(out: &mut String, g: &Graph, e: Edge, weight: Option<i64>) {
    let (mut u, mut v) = (g.left(e), g.right(e));
    if !g.is_directed() && v < u {
        std::mem::swap(&mut u, &mut v);
    }
    out.push('(');
    push_vertex(out, u, g.n());
    out.push(',');
    push_vertex(out, v, g.n());
    if let Some(w) = weight {
        write!(out, ",{w}").unwrap();
    }
    out.push(')');
}

/// Space-separated edge list.
pub fn edge_list(g: &Graph, edges: &[Edge], weight: impl Fn(Edge) -> Option<i64>) -> String {
    let mut out = String::new();
    for (i, &e) in edges.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        push_edge(&mut out, g, e, weight(e));
    }
    out
}

/// Parses a vertex name as written in graph text.
pub fn parse_vertex(s: &str) -> Option<Vertex> {
    let mut sc = Scanner { bytes: s.as_bytes(), at: 0, line: 1 };
    let v = sc.vertex().ok()?;
    (sc.at == s.len()).then_some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_carry_positions() {
        let e = graph_from_text("{\n[a: b c]\n  [b: a x1]\n}\n", false).unwrap_err();
        assert_eq!((e.line, e.column), (3, 9));
        let e = graph_from_text("{\n[a: b]\n", false).unwrap_err();
        assert!(e.message.contains("closing"));
        let e = graph_from_text("{\n[a: b b]\n[b: a]\n}\n", false).unwrap_err();
        assert_eq!(e.line, 2);
        let e = wgraph_from_text("{\n[a: b(3)]\n[b: a]\n}\n", false).unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        let e = flow_from_text("{\n[a->: b(3,1)]\n}\n", FlowDialect::Plain).unwrap_err();
        assert!(e.message.contains("sink"));
    }

    #[test]
    fn lenient_spacing() {
        let g = wgraph_from_text("\n    {\n    [a:  b( 7 )]\n\t[b: a(7) ]\n    }\n\n", false).unwrap();
        assert_eq!((g.n(), g.m(), g.weight(1)), (2, 1, 7));
    }

    #[test]
    fn numbers_and_letters_mix() {
        let g = graph_from_text("{\n[1: b 3]\n[2: a]\n[c: 1]\n}\n", false).unwrap();
        assert_eq!(graph_to_text(&g), "{\n[a: b c]\n[b: a]\n[c: a]\n}\n");
    }

    #[test]
    fn vertex_names() {
        assert_eq!(parse_vertex("c"), Some(3));
        assert_eq!(parse_vertex("27"), Some(27));
        assert_eq!(parse_vertex("0"), None);
        assert_eq!(parse_vertex("ab"), None);
    }
}
