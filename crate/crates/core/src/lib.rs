//! Index-based data structures and graph optimization algorithms.
//!
//! Every item handled by this crate (vertex, edge, heap item, list member) is
//! an integer in `1..=n`; `0` is the universal null index. This lets several
//! structures share the same identities: a heap of vertices, a list of
//! vertices and a graph all speak about vertex `3` without any mapping.
//!
//! The crate is `no_std` and only needs `alloc`. Text serialization, the
//! command-line drivers and timing live in the companion `grafalgo` crate.
#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod collections;
pub mod dtrees;
pub mod ecolor;
mod error;
pub mod gen;
pub mod graph;
pub mod heaps;
pub mod matching;
pub mod maxflow;
pub mod mincost;
pub mod mst;
pub mod paths;

pub use error::{Error, Result, Violation};

/// An item of an index set `1..=n`.
pub type Index = usize;
/// A vertex number.
pub type Vertex = usize;
/// An edge number.
pub type Edge = usize;

/// Writes index `x` of an index set of size `n`: a lower-case letter when
/// `n <= 26`, the decimal number otherwise. `0` is written as `-`.
pub fn write_index<W: core::fmt::Write>(w: &mut W, x: Index, n: usize) -> core::fmt::Result {
    if x == 0 {
        w.write_char('-')
    } else if n <= 26 && x <= 26 {
        w.write_char((b'a' + (x - 1) as u8) as char)
    } else {
        write!(w, "{}", x)
    }
}

/// Owned variant of [`write_index`].
pub fn index_name(x: Index, n: usize) -> alloc::string::String {
    let mut s = alloc::string::String::new();
    let _ = write_index(&mut s, x, n);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_up_to_26() {
        assert_eq!(index_name(1, 5), "a");
        assert_eq!(index_name(26, 26), "z");
        assert_eq!(index_name(13, 30), "13");
        assert_eq!(index_name(0, 5), "-");
    }
}
