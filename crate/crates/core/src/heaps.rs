//! Addressable priority queues over an index set `1..=n`.
//!
//! All three heaps order items by `(key, index)`, so equal keys are broken in
//! favour of the lower index and every run is reproducible.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Index, Result};

fn check_range(x: Index, n: usize) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::OutOfRange { index: x, bound: n })
    } else {
        Ok(())
    }
}

/// Arity used by the algorithms for a graph with `n` vertices and `m` edges.
pub fn arity_for(n: usize, m: usize) -> usize {
    2 + m / n.max(1)
}

/// d-ary heap with change-key.
#[derive(Clone, Debug)]
pub struct DHeap<K> {
    d: usize,
    /// Heap slots, 0-based.
    items: Vec<Index>,
    /// `pos[x]` is slot+1 of `x`, or 0 when absent.
    pos: Vec<usize>,
    key: Vec<K>,
}

impl<K: Copy + Ord + Default> DHeap<K> {
    /// Heap on `1..=n` with the default arity 4.
    pub fn new(n: usize) -> Self {
        Self::with_arity(n, 4)
    }

    pub fn with_arity(n: usize, d: usize) -> Self {
        assert!(d >= 2, "heap arity must be at least 2");
        DHeap { d, items: Vec::new(), pos: vec![0; n + 1], key: vec![K::default(); n + 1] }
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn capacity(&self) -> usize {
        self.pos.len() - 1
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, x: Index) -> bool {
        x < self.pos.len() && self.pos[x] != 0
    }

    /// Key of `x`; meaningful only while `x` is in the heap.
    pub fn key(&self, x: Index) -> K {
        self.key[x]
    }

    pub fn find_min(&self) -> Option<Index> {
        self.items.first().copied()
    }

    #[inline]
    fn less(&self, a: Index, b: Index) -> bool {
        (self.key[a], a) < (self.key[b], b)
    }

    pub fn insert(&mut self, x: Index, k: K) -> Result<()> {
        check_range(x, self.capacity())?;
        if self.contains(x) {
            return Err(Error::Duplicate(x));
        }
        self.key[x] = k;
        self.items.push(x);
        let i = self.items.len() - 1;
        self.pos[x] = i + 1;
        self.sift_up(i);
        Ok(())
    }

    pub fn delete_min(&mut self) -> Result<Index> {
        let x = self.find_min().ok_or(Error::Empty)?;
        self.remove_slot(0);
        Ok(x)
    }

    pub fn remove(&mut self, x: Index) -> Result<()> {
        if !self.contains(x) {
            return Err(Error::Absent(x));
        }
        self.remove_slot(self.pos[x] - 1);
        Ok(())
    }

    fn remove_slot(&mut self, i: usize) {
        let x = self.items[i];
        let last = self.items.pop().unwrap();
        self.pos[x] = 0;
        if last != x {
            self.items[i] = last;
            self.pos[last] = i + 1;
            self.sift_up(i);
            let j = self.pos[last] - 1;
            self.sift_down(j);
        }
    }

    pub fn change_key(&mut self, x: Index, k: K) -> Result<()> {
        if !self.contains(x) {
            return Err(Error::Absent(x));
        }
        let old = self.key[x];
        self.key[x] = k;
        let i = self.pos[x] - 1;
        if k < old {
            self.sift_up(i);
        } else {
            self.sift_down(i);
        }
        Ok(())
    }

    /// Inserts `x` or changes its key, whichever applies.
    pub fn insert_or_change(&mut self, x: Index, k: K) -> Result<()> {
        if self.contains(x) {
            self.change_key(x, k)
        } else {
            self.insert(x, k)
        }
    }

    pub fn clear(&mut self) {
        for &x in &self.items {
            self.pos[x] = 0;
        }
        self.items.clear();
    }

    fn sift_up(&mut self, mut i: usize) {
        let x = self.items[i];
        while i > 0 {
            let p = (i - 1) / self.d;
            let y = self.items[p];
            if !self.less(x, y) {
                break;
            }
            self.items[i] = y;
            self.pos[y] = i + 1;
            i = p;
        }
        self.items[i] = x;
        self.pos[x] = i + 1;
    }

    fn sift_down(&mut self, mut i: usize) {
        let x = self.items[i];
        let len = self.items.len();
        loop {
            let first = self.d * i + 1;
            if first >= len {
                break;
            }
            let end = (first + self.d).min(len);
            let mut c = first;
            for j in first + 1..end {
                if self.less(self.items[j], self.items[c]) {
                    c = j;
                }
            }
            let y = self.items[c];
            if !self.less(y, x) {
                break;
            }
            self.items[i] = y;
            self.pos[y] = i + 1;
            i = c;
        }
        self.items[i] = x;
        self.pos[x] = i + 1;
    }

    /// Heap order and position maps are consistent.
    pub fn check_invariants(&self) -> bool {
        self.items.iter().enumerate().all(|(i, &x)| {
            self.pos[x] == i + 1 && (i == 0 || !self.less(x, self.items[(i - 1) / self.d]))
        }) && self.pos.iter().filter(|&&p| p != 0).count() == self.items.len()
    }
}

/// A collection of leftist heaps sharing one index set.
///
/// Each index belongs to at most one heap; a heap is named by its root index
/// (0 is the empty heap). Items can be retired in constant time; retired
/// items are purged when they reach the root and are never returned.
#[derive(Clone, Debug)]
pub struct LeftistHeaps<K> {
    key: Vec<K>,
    rank: Vec<u32>,
    left: Vec<Index>,
    right: Vec<Index>,
    retired: Vec<bool>,
}

impl<K: Copy + Ord + Default> LeftistHeaps<K> {
    /// Every index starts as a singleton heap with the default key.
    pub fn new(n: usize) -> Self {
        let mut rank = vec![1; n + 1];
        rank[0] = 0;
        LeftistHeaps {
            key: vec![K::default(); n + 1],
            rank,
            left: vec![0; n + 1],
            right: vec![0; n + 1],
            retired: vec![false; n + 1],
        }
    }

    pub fn capacity(&self) -> usize {
        self.key.len() - 1
    }

    pub fn key(&self, i: Index) -> K {
        self.key[i]
    }

    /// Sets the key of a singleton heap `i`.
    pub fn set_key(&mut self, i: Index, k: K) -> Result<()> {
        check_range(i, self.capacity())?;
        debug_assert!(self.left[i] == 0 && self.right[i] == 0);
        self.key[i] = k;
        Ok(())
    }

    #[inline]
    fn less(&self, a: Index, b: Index) -> bool {
        (self.key[a], a) < (self.key[b], b)
    }

    /// Combines heaps `h1` and `h2` (either may be 0) and returns the new root.
    pub fn meld(&mut self, h1: Index, h2: Index) -> Index {
        debug_assert!(h1 == 0 || h1 != h2, "melding a heap with itself");
        if h1 == 0 {
            return h2;
        }
        if h2 == 0 {
            return h1;
        }
        let (top, other) = if self.less(h2, h1) { (h2, h1) } else { (h1, h2) };
        let r = self.meld(self.right[top], other);
        self.right[top] = r;
        if self.rank[self.left[top]] < self.rank[r] {
            self.right[top] = self.left[top];
            self.left[top] = r;
        }
        self.rank[top] = self.rank[self.right[top]] + 1;
        top
    }

    /// Adds singleton `i` to heap `h`; returns the new root.
    pub fn insert(&mut self, i: Index, h: Index) -> Result<Index> {
        check_range(i, self.capacity())?;
        if self.left[i] != 0 || self.right[i] != 0 || i == h {
            return Err(Error::Duplicate(i));
        }
        Ok(self.meld(i, h))
    }

    /// Marks `i` for lazy removal.
    pub fn retire(&mut self, i: Index) {
        self.retired[i] = true;
    }

    pub fn is_retired(&self, i: Index) -> bool {
        self.retired[i]
    }

    fn detach_root(&mut self, h: Index) -> Index {
        let rest = self.meld(self.left[h], self.right[h]);
        self.left[h] = 0;
        self.right[h] = 0;
        self.rank[h] = 1;
        self.retired[h] = false;
        rest
    }

    /// Removes retired items from the top of `h`; returns the new root,
    /// whose item (if any) is the minimum live item.
    pub fn purge(&mut self, mut h: Index) -> Index {
        while h != 0 && self.retired[h] {
            h = self.detach_root(h);
        }
        h
    }

    /// Removes the minimum live item of `h`; returns it and the new root.
    pub fn find_delete_min(&mut self, h: Index) -> Result<(Index, Index)> {
        let h = self.purge(h);
        if h == 0 {
            return Err(Error::Empty);
        }
        let rest = self.detach_root(h);
        Ok((h, rest))
    }

    /// Items of heap `h` in preorder, retired ones included.
    pub fn items(&self, h: Index) -> Vec<Index> {
        let mut out = Vec::new();
        let mut stack = vec![h];
        while let Some(x) = stack.pop() {
            if x != 0 {
                out.push(x);
                stack.push(self.right[x]);
                stack.push(self.left[x]);
            }
        }
        out
    }

    /// Heap order, leftist property and stored ranks hold throughout `h`.
    pub fn check_invariants(&self, h: Index) -> bool {
        self.items(h).into_iter().all(|x| {
            let (l, r) = (self.left[x], self.right[x]);
            (l == 0 || !self.less(l, x))
                && (r == 0 || !self.less(r, x))
                && self.rank[l] >= self.rank[r]
                && self.rank[x] == self.rank[r] + 1
        })
    }
}

/// Fibonacci heap with decrease-key.
#[derive(Clone, Debug)]
pub struct FibHeap<K> {
    key: Vec<K>,
    parent: Vec<Index>,
    child: Vec<Index>,
    left: Vec<Index>,
    right: Vec<Index>,
    degree: Vec<u32>,
    mark: Vec<bool>,
    member: Vec<bool>,
    min: Index,
    len: usize,
}

impl<K: Copy + Ord + Default> FibHeap<K> {
    pub fn new(n: usize) -> Self {
        FibHeap {
            key: vec![K::default(); n + 1],
            parent: vec![0; n + 1],
            child: vec![0; n + 1],
            left: (0..=n).collect(),
            right: (0..=n).collect(),
            degree: vec![0; n + 1],
            mark: vec![false; n + 1],
            member: vec![false; n + 1],
            min: 0,
            len: 0,
        }
    }

    pub fn capacity(&self) -> usize {
        self.key.len() - 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: Index) -> bool {
        x < self.member.len() && self.member[x]
    }

    pub fn key(&self, x: Index) -> K {
        self.key[x]
    }

    pub fn find_min(&self) -> Option<Index> {
        if self.min == 0 {
            None
        } else {
            Some(self.min)
        }
    }

    #[inline]
    fn less(&self, a: Index, b: Index) -> bool {
        (self.key[a], a) < (self.key[b], b)
    }

    /// Splices the circular list containing `x` after `at`.
    fn splice(&mut self, at: Index, x: Index) {
        let at_next = self.right[at];
        let x_prev = self.left[x];
        self.right[at] = x;
        self.left[x] = at;
        self.right[x_prev] = at_next;
        self.left[at_next] = x_prev;
    }

    fn unlink(&mut self, x: Index) {
        let (l, r) = (self.left[x], self.right[x]);
        self.right[l] = r;
        self.left[r] = l;
        self.left[x] = x;
        self.right[x] = x;
    }

    fn add_root(&mut self, x: Index) {
        self.parent[x] = 0;
        if self.min == 0 {
            self.min = x;
        } else {
            self.splice(self.min, x);
            if self.less(x, self.min) {
                self.min = x;
            }
        }
    }

    pub fn insert(&mut self, x: Index, k: K) -> Result<()> {
        check_range(x, self.capacity())?;
        if self.member[x] {
            return Err(Error::Duplicate(x));
        }
        self.key[x] = k;
        self.member[x] = true;
        self.degree[x] = 0;
        self.mark[x] = false;
        self.child[x] = 0;
        self.left[x] = x;
        self.right[x] = x;
        self.add_root(x);
        self.len += 1;
        Ok(())
    }

    pub fn delete_min(&mut self) -> Result<Index> {
        let z = self.find_min().ok_or(Error::Empty)?;
        let c = self.child[z];
        if c != 0 {
            let mut y = c;
            loop {
                self.parent[y] = 0;
                self.mark[y] = false;
                y = self.right[y];
                if y == c {
                    break;
                }
            }
            self.splice(z, c);
            self.child[z] = 0;
        }
        let next = self.right[z];
        self.unlink(z);
        self.member[z] = false;
        self.degree[z] = 0;
        self.len -= 1;
        self.min = if next == z { 0 } else { next };
        if self.min != 0 {
            self.consolidate();
        }
        Ok(z)
    }

    fn consolidate(&mut self) {
        let mut roots = Vec::new();
        let start = self.min;
        let mut x = start;
        loop {
            roots.push(x);
            x = self.right[x];
            if x == start {
                break;
            }
        }
        let mut table: Vec<Index> = Vec::new();
        for &r in &roots {
            self.left[r] = r;
            self.right[r] = r;
        }
        for r in roots {
            let mut x = r;
            let mut d = self.degree[x] as usize;
            loop {
                if table.len() <= d {
                    table.resize(d + 1, 0);
                }
                let y = table[d];
                if y == 0 {
                    break;
                }
                table[d] = 0;
                let (top, sub) = if self.less(y, x) { (y, x) } else { (x, y) };
                self.make_child(sub, top);
                x = top;
                d += 1;
            }
            table[d] = x;
        }
        self.min = 0;
        for x in table.into_iter().filter(|&x| x != 0) {
            self.add_root(x);
        }
    }

    fn make_child(&mut self, sub: Index, top: Index) {
        self.parent[sub] = top;
        self.mark[sub] = false;
        if self.child[top] == 0 {
            self.child[top] = sub;
        } else {
            self.splice(self.child[top], sub);
        }
        self.degree[top] += 1;
    }

    fn cut(&mut self, x: Index, p: Index) {
        if self.child[p] == x {
            self.child[p] = if self.right[x] == x { 0 } else { self.right[x] };
        }
        self.unlink(x);
        self.degree[p] -= 1;
        self.mark[x] = false;
        self.add_root(x);
    }

    pub fn decrease_key(&mut self, x: Index, k: K) -> Result<()> {
        if !self.contains(x) {
            return Err(Error::Absent(x));
        }
        if k > self.key[x] {
            return Err(Error::KeyIncrease(x));
        }
        if k == self.key[x] {
            return Ok(());
        }
        self.key[x] = k;
        let p = self.parent[x];
        if p != 0 && self.less(x, p) {
            self.cut(x, p);
            let mut y = p;
            while self.parent[y] != 0 {
                if !self.mark[y] {
                    self.mark[y] = true;
                    break;
                }
                let up = self.parent[y];
                self.cut(y, up);
                y = up;
            }
        } else if p == 0 && self.less(x, self.min) {
            self.min = x;
        }
        Ok(())
    }

    /// Heap order in every tree, consistent degrees and parent links, and a
    /// correct minimum pointer.
    pub fn check_invariants(&self) -> bool {
        if self.min == 0 {
            return self.len == 0;
        }
        let mut count = 0;
        let mut stack = Vec::new();
        let mut x = self.min;
        loop {
            if self.parent[x] != 0 || self.less(x, self.min) {
                return false;
            }
            stack.push(x);
            x = self.right[x];
            if x == self.min {
                break;
            }
        }
        while let Some(p) = stack.pop() {
            count += 1;
            let c = self.child[p];
            let mut deg = 0;
            if c != 0 {
                let mut y = c;
                loop {
                    if self.parent[y] != p || self.less(y, p) {
                        return false;
                    }
                    deg += 1;
                    stack.push(y);
                    y = self.right[y];
                    if y == c {
                        break;
                    }
                }
            }
            if deg != self.degree[p] {
                return false;
            }
        }
        count == self.len
    }

    /// Number of trees in the root list.
    pub fn root_count(&self) -> usize {
        if self.min == 0 {
            return 0;
        }
        let mut c = 1;
        let mut x = self.right[self.min];
        while x != self.min {
            c += 1;
            x = self.right[x];
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_xoshiro::SplitMix64;

    #[test]
    fn dheap_small() {
        let mut h = DHeap::new(3);
        h.insert(1, 5).unwrap();
        h.insert(2, 3).unwrap();
        h.insert(3, 9).unwrap();
        assert_eq!(h.find_min(), Some(2));
        h.change_key(3, 1).unwrap();
        assert_eq!(h.find_min(), Some(3));
        h.change_key(3, 100).unwrap();
        assert_eq!(h.delete_min(), Ok(2));
        assert_eq!(h.insert(1, 0), Err(Error::Duplicate(1)));
        assert_eq!(h.change_key(2, 0), Err(Error::Absent(2)));
        assert_eq!(h.delete_min(), Ok(1));
        assert_eq!(h.delete_min(), Ok(3));
        assert_eq!(h.delete_min(), Err(Error::Empty));
    }

    #[test]
    fn dheap_ties_prefer_low_index() {
        for _ in 0..3 {
            let mut h = DHeap::with_arity(2, 2);
            h.insert(2, 7).unwrap();
            h.insert(1, 7).unwrap();
            assert_eq!(h.delete_min(), Ok(1));
        }
    }

    #[test]
    fn dheap_full_then_duplicate() {
        let mut h = DHeap::with_arity(5, 3);
        for x in 1..=5 {
            h.insert(x, 10 - x as i64).unwrap();
        }
        assert_eq!(h.insert(3, 0), Err(Error::Duplicate(3)));
        assert_eq!(h.insert(6, 0), Err(Error::OutOfRange { index: 6, bound: 5 }));
    }

    #[test]
    fn dheap_sorts() {
        let mut rng = SplitMix64::seed_from_u64(7);
        for d in 2..6 {
            let keys: Vec<i64> = (0..20).map(|_| rng.gen_range(0..50)).collect();
            let mut h = DHeap::with_arity(20, d);
            for (i, &k) in keys.iter().enumerate() {
                h.insert(i + 1, k).unwrap();
            }
            assert!(h.check_invariants());
            let mut out = Vec::new();
            while let Ok(x) = h.delete_min() {
                out.push(keys[x - 1]);
            }
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(out, sorted);
        }
    }

    #[test]
    fn leftist_meld_and_drain() {
        let mut f = LeftistHeaps::new(40);
        let mut rng = SplitMix64::seed_from_u64(3);
        let mut roots = [0; 4];
        let mut keys = Vec::new();
        for i in 1..=40 {
            let k: i64 = rng.gen_range(-20..20);
            keys.push(k);
            f.set_key(i, k).unwrap();
            roots[i % 4] = f.insert(i, roots[i % 4]).unwrap();
        }
        assert_eq!(f.meld(roots[0], 0), roots[0]);
        assert_eq!(f.meld(0, roots[1]), roots[1]);
        let a = f.meld(roots[0], roots[1]);
        let b = f.meld(roots[2], roots[3]);
        let mut h = f.meld(a, b);
        assert!(f.check_invariants(h));
        let mut out = Vec::new();
        while h != 0 {
            let (x, rest) = f.find_delete_min(h).unwrap();
            out.push(keys[x - 1]);
            h = rest;
            assert!(f.check_invariants(h));
        }
        keys.sort();
        assert_eq!(out, keys);
    }

    #[test]
    fn leftist_singletons_and_retirement() {
        let mut f = LeftistHeaps::new(4);
        f.set_key(1, 4).unwrap();
        f.set_key(2, 2).unwrap();
        let h = f.meld(1, 2);
        assert_eq!(h, 2);
        let (x, rest) = f.find_delete_min(h).unwrap();
        assert_eq!((x, rest), (2, 1));
        let (x, rest) = f.find_delete_min(1).unwrap();
        assert_eq!((x, rest), (1, 0));
        let mut h = f.meld(1, 2);
        f.set_key(3, 3).unwrap();
        h = f.insert(3, h).unwrap();
        f.retire(2);
        f.retire(3);
        let (x, rest) = f.find_delete_min(h).unwrap();
        assert_eq!(x, 1);
        assert_eq!(f.find_delete_min(rest), Err(Error::Empty));
        assert_eq!(f.find_delete_min(0), Err(Error::Empty));
    }

    #[test]
    fn fib_drain_sorted() {
        let mut rng = SplitMix64::seed_from_u64(11);
        let mut h = FibHeap::new(100);
        let keys: Vec<i64> = (0..100).map(|_| rng.gen_range(0..1000)).collect();
        for (i, &k) in keys.iter().enumerate() {
            h.insert(i + 1, k).unwrap();
        }
        let mut out = Vec::new();
        while let Ok(x) = h.delete_min() {
            assert!(h.check_invariants());
            out.push(keys[x - 1]);
        }
        let mut sorted = keys;
        sorted.sort();
        assert_eq!(out, sorted);
    }

    #[test]
    fn fib_decrease_key() {
        let mut h = FibHeap::new(10);
        for x in 1..=10 {
            h.insert(x, 10 * x as i64).unwrap();
        }
        assert_eq!(h.delete_min(), Ok(1));
        assert!(h.root_count() <= 4);
        h.decrease_key(7, 5).unwrap();
        assert_eq!(h.find_min(), Some(7));
        let before = h.clone();
        h.decrease_key(7, 5).unwrap();
        assert_eq!(h.root_count(), before.root_count());
        assert_eq!(h.decrease_key(7, 6), Err(Error::KeyIncrease(7)));
        assert_eq!(h.decrease_key(1, 0), Err(Error::Absent(1)));
        assert_eq!(h.insert(2, 0), Err(Error::Duplicate(2)));
        assert!(h.check_invariants());
        let mut empty: FibHeap<i64> = FibHeap::new(1);
        assert_eq!(empty.delete_min(), Err(Error::Empty));
    }
}
