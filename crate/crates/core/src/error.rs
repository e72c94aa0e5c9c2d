use alloc::vec::Vec;
use core::fmt;

use crate::{Edge, Index, Vertex};

pub type Result<T> = core::result::Result<T, Error>;

/// Rejected operations and infeasible inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Index outside `1..=bound`.
    OutOfRange { index: Index, bound: usize },
    /// Item already present.
    Duplicate(Index),
    /// Item not present.
    Absent(Index),
    /// Operation needs a nonempty structure.
    Empty,
    /// Index does not identify a list.
    NotIdentifier(Index),
    /// Both arguments name the same list or set.
    SameList(Index),
    /// Index is not a root (of a set or dynamic tree).
    NotRoot(Index),
    /// Index is a tree root where a non-root is required.
    IsRoot(Index),
    /// Linking would join a tree to itself.
    SameTree(Index, Index),
    /// Decrease-key called with a larger key.
    KeyIncrease(Index),
    /// No free edge number left.
    Full,
    SelfLoop(Vertex),
    NotEdge(Edge),
    NotEndpoint { edge: Edge, vertex: Vertex },
    ExceedsResidual { edge: Edge, amount: i64, residual: i64 },
    FloorExceedsCapacity(Edge),
    NegativeLength(Edge),
    /// Edges of a negative-cost cycle, in cycle order.
    NegativeCycle(Vec<Edge>),
    SourceIsSink,
    /// Vertices of an odd cycle.
    NotBipartite(Vec<Vertex>),
    /// Floors cannot be met; the vertices on the source side of a saturated
    /// cut of the auxiliary network, and the unmet demand.
    Infeasible { cut: Vec<Vertex>, shortfall: i64 },
    /// Generator arguments that admit no graph of the requested kind.
    Parameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange { index, bound } => {
                write!(f, "index {} out of range 1..{}", index, bound)
            }
            Error::Duplicate(x) => write!(f, "index {} already present", x),
            Error::Absent(x) => write!(f, "index {} not present", x),
            Error::Empty => f.write_str("structure is empty"),
            Error::NotIdentifier(x) => write!(f, "index {} is not a list identifier", x),
            Error::SameList(x) => write!(f, "index {} names the same list twice", x),
            Error::NotRoot(x) => write!(f, "index {} is not a root", x),
            Error::IsRoot(x) => write!(f, "index {} is a tree root", x),
            Error::SameTree(u, v) => write!(f, "{} and {} are in the same tree", u, v),
            Error::KeyIncrease(x) => write!(f, "new key for {} is larger than the old one", x),
            Error::Full => f.write_str("no free edge number"),
            Error::SelfLoop(u) => write!(f, "self-loop at vertex {}", u),
            Error::NotEdge(e) => write!(f, "{} is not an edge", e),
            Error::NotEndpoint { edge, vertex } => {
                write!(f, "vertex {} is not an endpoint of edge {}", vertex, edge)
            }
            Error::ExceedsResidual { edge, amount, residual } => write!(
                f,
                "cannot add {} units to edge {} with residual capacity {}",
                amount, edge, residual
            ),
            Error::FloorExceedsCapacity(e) => write!(f, "floor exceeds capacity on edge {}", e),
            Error::NegativeLength(e) => write!(f, "edge {} has negative length", e),
            Error::NegativeCycle(c) => write!(f, "negative cycle through edges {:?}", c),
            Error::SourceIsSink => f.write_str("source and sink coincide"),
            Error::NotBipartite(c) => write!(f, "graph is not bipartite: odd cycle {:?}", c),
            Error::Infeasible { cut, shortfall } => write!(
                f,
                "flow floors are infeasible: demand short by {} across cut {:?}",
                shortfall, cut
            ),
            Error::Parameter(msg) => f.write_str(msg),
        }
    }
}

/// A failed check reported by one of the verifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Edge number in a result is not a live edge.
    NotEdge(Edge),
    /// Result edges close a cycle.
    Cycle(Edge),
    /// A result edge listed twice.
    Repeated(Edge),
    /// Tree does not span the component of this vertex.
    NotSpanning(Vertex),
    /// A non-tree edge is lighter than the heaviest tree edge on its cycle.
    CutOptimality { non_tree: Edge, tree: Edge },
    /// Reported total differs from the recomputed one.
    Total { reported: i64, actual: i64 },
    /// `dist[source]` is not zero, or the source has a parent edge.
    Source,
    /// Distances violate `dist[v] <= dist[u] + len(u,v)`, or a tree edge is not tight.
    Bellman(Edge),
    /// Parent edge does not end at its vertex, or parent links form a cycle.
    BadParent(Vertex),
    /// Reachability disagrees with the distance labels.
    Reachability(Vertex),
    Capacity(Edge),
    Floor(Edge),
    Conservation { vertex: Vertex, imbalance: i64 },
    /// The residual graph still has an augmenting path (vertices from source to sink).
    NotMaximal(Vec<Vertex>),
    /// Residual graph contains a negative-cost cycle (edges in cycle order).
    NegativeCycle(Vec<Edge>),
    /// Two chosen edges share a vertex.
    Shared { vertex: Vertex, first: Edge, second: Edge },
    /// `mate` does not agree with the edge list.
    Mate(Vertex),
    /// Augmenting path in a matching that claims maximum size.
    AugmentingPath(Vec<Vertex>),
    /// Alternating path or cycle with positive gain in a weighted matching.
    Improvable,
    /// Two edges at a vertex have the same color.
    Clash { vertex: Vertex, first: Edge, second: Edge },
    /// Edge left uncolored or given a color outside `1..=num_colors`.
    Uncolored(Edge),
    /// Fewer colors than the maximum degree.
    TooFewColors { colors: usize, max_degree: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotEdge(e) => write!(f, "{} is not an edge of the graph", e),
            Violation::Cycle(e) => write!(f, "edge {} closes a cycle", e),
            Violation::Repeated(e) => write!(f, "edge {} listed twice", e),
            Violation::NotSpanning(u) => write!(f, "vertex {} is not spanned", u),
            Violation::CutOptimality { non_tree, tree } => write!(
                f,
                "non-tree edge {} is lighter than tree edge {} on its cycle",
                non_tree, tree
            ),
            Violation::Total { reported, actual } => {
                write!(f, "reported total {} but actual is {}", reported, actual)
            }
            Violation::Source => f.write_str("source distance or parent is wrong"),
            Violation::Bellman(e) => write!(f, "distance labels violated on edge {}", e),
            Violation::BadParent(u) => write!(f, "bad parent edge at vertex {}", u),
            Violation::Reachability(u) => write!(f, "reachability of vertex {} is wrong", u),
            Violation::Capacity(e) => write!(f, "flow outside capacity bounds on edge {}", e),
            Violation::Floor(e) => write!(f, "flow below floor on edge {}", e),
            Violation::Conservation { vertex, imbalance } => {
                write!(f, "vertex {} is unbalanced by {}", vertex, imbalance)
            }
            Violation::NotMaximal(p) => write!(f, "augmenting path {:?} remains", p),
            Violation::NegativeCycle(c) => write!(f, "negative-cost residual cycle {:?}", c),
            Violation::Shared { vertex, first, second } => write!(
                f,
                "edges {} and {} share vertex {}",
                first, second, vertex
            ),
            Violation::Mate(u) => write!(f, "mate of vertex {} is inconsistent", u),
            Violation::AugmentingPath(p) => write!(f, "augmenting path {:?} exists", p),
            Violation::Improvable => f.write_str("an alternating path or cycle has positive gain"),
            Violation::Clash { vertex, first, second } => write!(
                f,
                "edges {} and {} at vertex {} have the same color",
                first, second, vertex
            ),
            Violation::Uncolored(e) => write!(f, "edge {} has no valid color", e),
            Violation::TooFewColors { colors, max_degree } => write!(
                f,
                "{} colors cannot color a graph of maximum degree {}",
                colors, max_degree
            ),
        }
    }
}
