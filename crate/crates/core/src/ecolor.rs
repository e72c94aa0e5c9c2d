//! Edge coloring of bipartite multigraphs with the minimum number of colors,
//! which equals the maximum degree.

use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::graph::Graph;
use crate::matching::{bipartition, hopcroft_karp_with};
use crate::{Edge, Error, Result, Vertex, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    AltPath,
    Matching,
    Gabow,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::AltPath, Algo::Matching, Algo::Gabow];

    pub fn name(self) -> &'static str {
        match self {
            Algo::AltPath => "altpath",
            Algo::Matching => "matching",
            Algo::Gabow => "gabow",
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::Parameter("unknown edge coloring algorithm"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    /// `color[e]` in `1..=num_colors`; 0 for numbers that are not edges.
    pub color: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Edges of each color, in increasing edge order; entry 0 is color 1.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.num_colors];
        for (e, &c) in self.color.iter().enumerate() {
            if c != 0 {
                out[c - 1].push(e);
            }
        }
        out
    }
}

pub fn ecolor(g: &Graph, algo: Algo) -> Result<Coloring> {
    let side = bipartition(g)?;
    let delta = g.max_degree();
    let mut color = vec![0; g.max_edge() + 1];
    match algo {
        Algo::AltPath => alt_path(g, delta, &mut color),
        Algo::Matching => by_matchings(g, &side, delta, &mut color),
        Algo::Gabow => {
            let edges: Vec<Edge> = g.edges().collect();
            gabow(g, &side, &edges, delta, 0, &mut color);
        }
    }
    Ok(Coloring { color, num_colors: delta })
}

/// Colors edges one at a time. For edge `u`-`v`, let `a` be the lowest color
/// free at `u` and `b` the lowest free at `v`. If `a` is also free at `v` it
/// is used; otherwise the path from `v` alternating between colors `a` and
/// `b` is recolored, which frees `a` at `v` and cannot reach `u` because
/// the graph is bipartite.
fn alt_path(g: &Graph, delta: usize, color: &mut [usize]) {
    let n = g.n();
    let width = delta + 1;
    // at[u * width + c]: edge of color c at u, 0 if none
    let mut at = vec![0; (n + 1) * width];
    let lowest_free = |at: &[Edge], u: Vertex| (1..=delta).find(|&c| at[u * width + c] == 0).expect("a free color");
    let mut path = Vec::new();
    for e in g.edges() {
        let (u, v) = (g.left(e), g.right(e));
        let a = lowest_free(&at, u);
        if at[v * width + a] != 0 {
            let b = lowest_free(&at, v);
            path.clear();
            let (mut x, mut c) = (v, a);
            while at[x * width + c] != 0 {
                let f = at[x * width + c];
                path.push(f);
                x = g.mate(x, f);
                c = if c == a { b } else { a };
            }
            for &f in &path {
                let (p, q) = (g.left(f), g.right(f));
                at[p * width + color[f]] = 0;
                at[q * width + color[f]] = 0;
            }
            for &f in &path {
                let (p, q) = (g.left(f), g.right(f));
                color[f] = if color[f] == a { b } else { a };
                at[p * width + color[f]] = f;
                at[q * width + color[f]] = f;
            }
            debug_assert!(at[u * width + a] == 0, "alternating path reached its start");
        }
        color[e] = a;
        at[u * width + a] = e;
        at[v * width + a] = e;
    }
}

/// Colors by repeatedly removing a matching that covers every vertex of
/// maximum degree, which lowers the maximum degree by one.
fn by_matchings(g: &Graph, side: &[bool], delta: usize, color: &mut [usize]) {
    let mut rest: Vec<Edge> = g.edges().collect();
    for c in 1..=delta {
        let m = covering_matching(g, side, &rest, delta - c + 1);
        for &e in &m {
            color[e] = c;
        }
        rest.retain(|&e| color[e] == 0);
    }
}

/// Splits the edges in two halves of maximum degree `delta/2` along an
/// Euler partition and colors each half recursively. An odd maximum degree
/// is first made even by removing a matching that covers the vertices of
/// maximum degree.
fn gabow(g: &Graph, side: &[bool], edges: &[Edge], delta: usize, base: usize, color: &mut [usize]) {
    if edges.is_empty() || delta == 0 {
        return;
    }
    if delta == 1 {
        for &e in edges {
            color[e] = base + 1;
        }
        return;
    }
    if delta % 2 == 1 {
        let m = covering_matching(g, side, edges, delta);
        for &e in &m {
            color[e] = base + 1;
        }
        let rest: Vec<Edge> = edges.iter().copied().filter(|&e| color[e] == 0).collect();
        gabow(g, side, &rest, delta - 1, base + 1, color);
        return;
    }
    let (first, second) = euler_partition(g, edges);
    gabow(g, side, &first, delta / 2, base, color);
    gabow(g, side, &second, delta / 2, base + delta / 2, color);
}

/// Splits `edges` into two sets so that every vertex of degree `d` has
/// `ceil(d/2)` or `floor(d/2)` edges in each. Edges are taken along maximal
/// trails, started first at vertices of odd remaining degree, and assigned
/// to the two sets alternately. Every closed trail of a bipartite graph has
/// even length, so the alternation never puts two edges of the same trail
/// at a vertex into the same set except at the ends of open trails.
fn euler_partition(g: &Graph, edges: &[Edge]) -> (Vec<Edge>, Vec<Edge>) {
    let n = g.n();
    let mut adj: Vec<Vec<Edge>> = vec![Vec::new(); n + 1];
    for &e in edges {
        adj[g.left(e)].push(e);
        adj[g.right(e)].push(e);
    }
    let mut used = vec![false; g.max_edge() + 1];
    let mut remaining: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut next = vec![0usize; n + 1];
    let (mut first, mut second) = (Vec::new(), Vec::new());
    let mut walk = |start: Vertex, used: &mut [bool], remaining: &mut [usize]| {
        let mut u = start;
        let mut to_first = true;
        loop {
            while next[u] < adj[u].len() && used[adj[u][next[u]]] {
                next[u] += 1;
            }
            if next[u] == adj[u].len() {
                return;
            }
            let e = adj[u][next[u]];
            used[e] = true;
            let v = g.mate(u, e);
            remaining[u] -= 1;
            remaining[v] -= 1;
            if to_first {
                first.push(e);
            } else {
                second.push(e);
            }
            to_first = !to_first;
            u = v;
        }
    };
    for u in 1..=n {
        if remaining[u] % 2 == 1 {
            walk(u, &mut used, &mut remaining);
        }
    }
    for u in 1..=n {
        while remaining[u] > 0 {
            walk(u, &mut used, &mut remaining);
        }
    }
    (first, second)
}

/// A matching among `edges` that covers every vertex of degree `delta`,
/// the maximum degree of `edges`.
///
/// The edges are embedded in a `delta`-regular bipartite multigraph by
/// padding the smaller side with extra vertices and adding filler edges
/// between vertices of deficient degree. A perfect matching of that graph
/// exists, and at a vertex of degree `delta` its edge is an original one.
fn covering_matching(g: &Graph, side: &[bool], edges: &[Edge], delta: usize) -> Vec<Edge> {
    let n = g.n();
    let left: Vec<Vertex> = (1..=n).filter(|&u| side[u]).collect();
    let right: Vec<Vertex> = (1..=n).filter(|&u| !side[u]).collect();
    let k = left.len().max(right.len());
    let mut slot = vec![0; n + 1];
    for (i, &u) in left.iter().enumerate() {
        slot[u] = i + 1;
    }
    for (i, &u) in right.iter().enumerate() {
        slot[u] = k + i + 1;
    }
    let mut h = Graph::new(2 * k, k * delta);
    let mut origin = vec![0; k * delta + 1];
    let mut degree = vec![0; 2 * k + 1];
    for &e in edges {
        let (u, v) = (slot[g.left(e)], slot[g.right(e)]);
        let f = h.add_edge(u, v).expect("room for original edges");
        origin[f] = e;
        degree[u] += 1;
        degree[v] += 1;
    }
    let (mut i, mut j) = (1, k + 1);
    loop {
        while i <= k && degree[i] == delta {
            i += 1;
        }
        while j <= 2 * k && degree[j] == delta {
            j += 1;
        }
        if i > k || j > 2 * k {
            break;
        }
        h.add_edge(i, j).expect("room for filler edges");
        degree[i] += 1;
        degree[j] += 1;
    }
    let hside: Vec<bool> = (0..=2 * k).map(|u| u >= 1 && u <= k).collect();
    let mut medge = vec![0; 2 * k + 1];
    hopcroft_karp_with(&h, &hside, &mut medge);
    (1..=k).map(|u| origin[medge[u]]).filter(|&e| e != 0).collect()
}

/// Checks that `c` is a proper edge coloring of `g`; returns the number of
/// colors beyond the maximum degree.
pub fn ecolor_verify(g: &Graph, c: &Coloring) -> core::result::Result<usize, Violation> {
    let n = g.n();
    if c.color.len() != g.max_edge() + 1 {
        return Err(Violation::Uncolored(0));
    }
    let width = c.num_colors + 1;
    let mut at = vec![0; (n + 1) * width];
    for e in g.edges() {
        let k = c.color[e];
        if k == 0 || k > c.num_colors {
            return Err(Violation::Uncolored(e));
        }
        for u in [g.left(e), g.right(e)] {
            let prev = at[u * width + k];
            if prev != 0 {
                return Err(Violation::Clash { vertex: u, first: prev, second: e });
            }
            at[u * width + k] = e;
        }
    }
    let max_degree = g.max_degree();
    if c.num_colors < max_degree {
        return Err(Violation::TooFewColors { colors: c.num_colors, max_degree });
    }
    Ok(c.num_colors - max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b, a * b);
        for u in 1..=a {
            for v in a + 1..=a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn k33_three_perfect_matchings() {
        let g = complete_bipartite(3, 3);
        for algo in Algo::ALL {
            let c = ecolor(&g, algo).unwrap();
            assert_eq!(c.num_colors, 3);
            assert_eq!(ecolor_verify(&g, &c), Ok(0), "{}", algo.name());
            for class in c.classes() {
                assert_eq!(class.len(), 3);
            }
        }
    }

    #[test]
    fn perfect_matching_one_color() {
        let mut g = Graph::new(6, 3);
        for u in 1..=3 {
            g.add_edge(u, u + 3).unwrap();
        }
        for algo in Algo::ALL {
            let c = ecolor(&g, algo).unwrap();
            assert_eq!(c.num_colors, 1);
            assert_eq!(ecolor_verify(&g, &c), Ok(0));
        }
    }

    #[test]
    fn multigraph_odd_degree() {
        let mut g = Graph::new(5, 9);
        for (u, v) in [(1, 2), (1, 2), (1, 2), (1, 4), (3, 2), (3, 4), (3, 4), (5, 4), (5, 2)] {
            g.add_edge(u, v).unwrap();
        }
        for algo in Algo::ALL {
            let c = ecolor(&g, algo).unwrap();
            assert_eq!(c.num_colors, 5);
            assert_eq!(ecolor_verify(&g, &c), Ok(0), "{}", algo.name());
        }
    }

    #[test]
    fn verifier_and_odd_cycle() {
        let g = complete_bipartite(2, 2);
        let mut c = ecolor(&g, Algo::AltPath).unwrap();
        c.color[2] = c.color[1];
        assert!(matches!(ecolor_verify(&g, &c), Err(Violation::Clash { vertex: 1, .. })));
        let mut t = Graph::new(3, 3);
        t.add_edge(1, 2).unwrap();
        t.add_edge(2, 3).unwrap();
        t.add_edge(3, 1).unwrap();
        assert!(matches!(ecolor(&t, Algo::Gabow), Err(Error::NotBipartite(_))));
    }
}
