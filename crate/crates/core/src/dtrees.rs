//! Dynamic trees (link-cut trees) with vertex costs.
//!
//! The represented forest is decomposed into preferred paths, each stored as
//! a splay tree ordered from the tree root (leftmost) down to the deepest
//! vertex. Splay nodes carry their own cost, the minimum over their splay
//! subtree, and a pending addition for their children. All operations run in
//! amortized `O(log n)` time.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Index, Result};

/// Cost held by every tree root.
pub const ROOT_COST: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
pub struct DynTrees {
    left: Vec<Index>,
    right: Vec<Index>,
    /// Splay parent, or path-parent when the node is a splay root.
    parent: Vec<Index>,
    cost: Vec<i64>,
    min: Vec<i64>,
    pending: Vec<i64>,
    scratch: Vec<Index>,
}

impl DynTrees {
    /// `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        DynTrees {
            left: vec![0; n + 1],
            right: vec![0; n + 1],
            parent: vec![0; n + 1],
            cost: vec![ROOT_COST; n + 1],
            min: vec![ROOT_COST; n + 1],
            pending: vec![0; n + 1],
            scratch: Vec::new(),
        }
    }

    pub fn capacity(&self) -> usize {
        self.left.len() - 1
    }

    fn check(&self, u: Index) -> Result<()> {
        if u == 0 || u > self.capacity() {
            Err(Error::OutOfRange { index: u, bound: self.capacity() })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn is_splay_root(&self, x: Index) -> bool {
        let p = self.parent[x];
        p == 0 || (self.left[p] != x && self.right[p] != x)
    }

    fn apply(&mut self, x: Index, delta: i64) {
        if x != 0 {
            self.cost[x] += delta;
            self.min[x] += delta;
            self.pending[x] += delta;
        }
    }

    fn push(&mut self, x: Index) {
        let d = self.pending[x];
        if d != 0 {
            let (l, r) = (self.left[x], self.right[x]);
            self.apply(l, d);
            self.apply(r, d);
            self.pending[x] = 0;
        }
    }

    fn pull(&mut self, x: Index) {
        let mut m = self.cost[x];
        let (l, r) = (self.left[x], self.right[x]);
        if l != 0 && self.min[l] < m {
            m = self.min[l];
        }
        if r != 0 && self.min[r] < m {
            m = self.min[r];
        }
        self.min[x] = m;
    }

    fn rotate(&mut self, x: Index) {
        let p = self.parent[x];
        let g = self.parent[p];
        let p_was_root = self.is_splay_root(p);
        if self.left[p] == x {
            let b = self.right[x];
            self.left[p] = b;
            if b != 0 {
                self.parent[b] = p;
            }
            self.right[x] = p;
        } else {
            let b = self.left[x];
            self.right[p] = b;
            if b != 0 {
                self.parent[b] = p;
            }
            self.left[x] = p;
        }
        self.parent[p] = x;
        self.parent[x] = g;
        if !p_was_root {
            if self.left[g] == p {
                self.left[g] = x;
            } else {
                self.right[g] = x;
            }
        }
        self.pull(p);
        self.pull(x);
    }

    fn splay(&mut self, x: Index) {
        let mut stack = core::mem::take(&mut self.scratch);
        stack.clear();
        let mut y = x;
        stack.push(y);
        while !self.is_splay_root(y) {
            y = self.parent[y];
            stack.push(y);
        }
        while let Some(z) = stack.pop() {
            self.push(z);
        }
        self.scratch = stack;
        while !self.is_splay_root(x) {
            let p = self.parent[x];
            if !self.is_splay_root(p) {
                let g = self.parent[p];
                let zigzig = (self.left[g] == p) == (self.left[p] == x);
                if zigzig {
                    self.rotate(p);
                } else {
                    self.rotate(x);
                }
            }
            self.rotate(x);
        }
    }

    /// Makes the path from `x` to its tree root preferred; `x` ends up as
    /// splay root with no right child.
    fn access(&mut self, x: Index) {
        let mut last = 0;
        let mut y = x;
        while y != 0 {
            self.splay(y);
            self.right[y] = last;
            self.pull(y);
            last = y;
            y = self.parent[y];
        }
        self.splay(x);
    }

    pub fn findroot(&mut self, u: Index) -> Result<Index> {
        self.check(u)?;
        self.access(u);
        let mut r = u;
        loop {
            self.push(r);
            if self.left[r] == 0 {
                break;
            }
            r = self.left[r];
        }
        self.splay(r);
        Ok(r)
    }

    /// Vertex of minimum cost on the path from `u` to its root, the one
    /// nearest the root on ties, together with that cost.
    pub fn findcost(&mut self, u: Index) -> Result<(Index, i64)> {
        self.check(u)?;
        self.access(u);
        let m = self.min[u];
        let mut x = u;
        loop {
            self.push(x);
            let l = self.left[x];
            if l != 0 && self.min[l] == m {
                x = l;
            } else if self.cost[x] == m {
                break;
            } else {
                x = self.right[x];
            }
        }
        self.splay(x);
        Ok((x, m))
    }

    /// Adds `delta` to the cost of every vertex on the path from `u` to its root.
    pub fn addcost(&mut self, u: Index, delta: i64) -> Result<()> {
        self.check(u)?;
        self.access(u);
        self.apply(u, delta);
        Ok(())
    }

    /// Current cost of `u`.
    pub fn cost(&mut self, u: Index) -> Result<i64> {
        self.check(u)?;
        self.access(u);
        Ok(self.cost[u])
    }

    /// Parent of `u` in the represented forest, 0 for a root.
    pub fn parent(&mut self, u: Index) -> Result<Index> {
        self.check(u)?;
        self.access(u);
        let mut x = self.left[u];
        if x == 0 {
            return Ok(0);
        }
        loop {
            self.push(x);
            if self.right[x] == 0 {
                break;
            }
            x = self.right[x];
        }
        self.splay(x);
        Ok(x)
    }

    /// Makes tree root `u` a child of `v`, with `cost(u) = c`.
    pub fn link(&mut self, u: Index, v: Index, c: i64) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if self.findroot(u)? != u {
            return Err(Error::NotRoot(u));
        }
        if self.findroot(v)? == u {
            return Err(Error::SameTree(u, v));
        }
        self.access(u);
        debug_assert!(self.left[u] == 0 && self.right[u] == 0);
        self.cost[u] = c;
        self.min[u] = c;
        self.parent[u] = v;
        Ok(())
    }

    /// Separates `u` from its parent; `u` becomes a root and its cost is reset.
    pub fn cut(&mut self, u: Index) -> Result<()> {
        self.check(u)?;
        self.access(u);
        let l = self.left[u];
        if l == 0 {
            return Err(Error::IsRoot(u));
        }
        self.parent[l] = 0;
        self.left[u] = 0;
        self.cost[u] = ROOT_COST;
        self.pull(u);
        Ok(())
    }
}
