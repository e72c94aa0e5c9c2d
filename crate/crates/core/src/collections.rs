//! Collections over a fixed index set `1..=n`.
//!
//! [`List`] is an ordered subset with constant-time membership, [`Dlists`]
//! partitions the whole index set into doubly linked lists, and [`Dsets`] is
//! the union-find structure (union by rank, path compression).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{write_index, Error, Index, Result};

const ABSENT: usize = usize::MAX;

fn check_range(x: Index, n: usize) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::OutOfRange { index: x, bound: n })
    } else {
        Ok(())
    }
}

/// Ordered subset of `1..=n`, each index at most once.
///
/// `next[x]` is the successor of `x`, `0` when `x` is last and a sentinel
/// when `x` is not in the list, so membership is a single lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct List {
    next: Vec<usize>,
    first: Index,
    last: Index,
    len: usize,
}

impl List {
    pub fn new(n: usize) -> Self {
        List { next: vec![ABSENT; n + 1], first: 0, last: 0, len: 0 }
    }

    /// Largest index the list can hold.
    pub fn capacity(&self) -> usize {
        self.next.len() - 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.first == 0
    }

    /// First index, or 0 when empty.
    pub fn first(&self) -> Index {
        self.first
    }

    /// Last index, or 0 when empty.
    pub fn last(&self) -> Index {
        self.last
    }

    /// Successor of a member `x`; 0 for the last member and for non-members.
    pub fn next(&self, x: Index) -> Index {
        match self.next.get(x) {
            Some(&nx) if nx != ABSENT => nx,
            _ => 0,
        }
    }

    pub fn contains(&self, x: Index) -> Result<bool> {
        check_range(x, self.capacity())?;
        Ok(self.next[x] != ABSENT)
    }

    pub fn append(&mut self, x: Index) -> Result<()> {
        if self.contains(x)? {
            return Err(Error::Duplicate(x));
        }
        if self.first == 0 {
            self.first = x;
        } else {
            self.next[self.last] = x;
        }
        self.next[x] = 0;
        self.last = x;
        self.len += 1;
        Ok(())
    }

    pub fn push_front(&mut self, x: Index) -> Result<()> {
        if self.contains(x)? {
            return Err(Error::Duplicate(x));
        }
        self.next[x] = self.first;
        if self.first == 0 {
            self.last = x;
        }
        self.first = x;
        self.len += 1;
        Ok(())
    }

    /// Removes and returns the first index.
    pub fn pop_front(&mut self) -> Option<Index> {
        let x = self.first;
        if x == 0 {
            return None;
        }
        self.first = self.next[x];
        if self.first == 0 {
            self.last = 0;
        }
        self.next[x] = ABSENT;
        self.len -= 1;
        Some(x)
    }

    pub fn clear(&mut self) {
        while self.pop_front().is_some() {}
    }

    pub fn iter(&self) -> ListIter<'_> {
        ListIter { list: self, cur: self.first }
    }
}

impl fmt::Display for List {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write_index(f, x, self.capacity())?;
        }
        f.write_str("]")
    }
}

pub struct ListIter<'a> {
    list: &'a List,
    cur: Index,
}

impl Iterator for ListIter<'_> {
    type Item = Index;

    fn next(&mut self) -> Option<Index> {
        if self.cur == 0 {
            return None;
        }
        let x = self.cur;
        self.cur = self.list.next[x];
        Some(x)
    }
}

impl<'a> IntoIterator for &'a List {
    type Item = Index;
    type IntoIter = ListIter<'a>;

    fn into_iter(self) -> ListIter<'a> {
        self.iter()
    }
}

/// Partition of `1..=n` into disjoint lists.
///
/// `next[x]` is the successor of `x` (0 at the end); `prev[x]` is the
/// predecessor, or the last member when `x` is first. The first member of a
/// list is its identifier, recognized in constant time by `next[prev[x]] == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dlists {
    next: Vec<Index>,
    prev: Vec<Index>,
}

impl Dlists {
    /// All singletons.
    pub fn new(n: usize) -> Self {
        Dlists { next: vec![0; n + 1], prev: (0..=n).collect() }
    }

    pub fn capacity(&self) -> usize {
        self.next.len() - 1
    }

    pub fn is_identifier(&self, x: Index) -> bool {
        x != 0 && x <= self.capacity() && self.next[self.prev[x]] == 0
    }

    fn check_identifier(&self, x: Index) -> Result<()> {
        check_range(x, self.capacity())?;
        if self.is_identifier(x) {
            Ok(())
        } else {
            Err(Error::NotIdentifier(x))
        }
    }

    /// Successor of `x` within its list, 0 at the end.
    pub fn next(&self, x: Index) -> Index {
        self.next[x]
    }

    /// Last member of the list identified by `id`.
    pub fn last(&self, id: Index) -> Index {
        self.prev[id]
    }

    /// Identifier of the list containing `x`; linear in the list length.
    pub fn find_list(&self, x: Index) -> Result<Index> {
        check_range(x, self.capacity())?;
        let mut y = x;
        while !self.is_identifier(y) {
            y = self.prev[y];
        }
        Ok(y)
    }

    pub fn members(&self, id: Index) -> Result<DlistIter<'_>> {
        self.check_identifier(id)?;
        Ok(DlistIter { lists: self, cur: id })
    }

    /// Appends list `id2` to list `id1`; `id1` identifies the result.
    pub fn join(&mut self, id1: Index, id2: Index) -> Result<Index> {
        self.check_identifier(id1)?;
        self.check_identifier(id2)?;
        if id1 == id2 {
            return Err(Error::SameList(id1));
        }
        let last1 = self.prev[id1];
        let last2 = self.prev[id2];
        self.next[last1] = id2;
        self.prev[id2] = last1;
        self.prev[id1] = last2;
        Ok(id1)
    }

    /// Removes `x` from the list identified by `id`, leaving `x` a singleton.
    /// Returns the identifier of what remains of the list (0 if nothing).
    pub fn remove(&mut self, x: Index, id: Index) -> Result<Index> {
        self.check_identifier(id)?;
        check_range(x, self.capacity())?;
        debug_assert_eq!(self.find_list(x), Ok(id));
        let result = if x == id {
            let rest = self.next[x];
            if rest != 0 {
                self.prev[rest] = self.prev[x];
            }
            rest
        } else {
            let p = self.prev[x];
            let nx = self.next[x];
            self.next[p] = nx;
            if nx == 0 {
                self.prev[id] = p;
            } else {
                self.prev[nx] = p;
            }
            id
        };
        self.next[x] = 0;
        self.prev[x] = x;
        Ok(result)
    }

    /// Identifiers of all lists, in increasing order.
    pub fn identifiers(&self) -> impl Iterator<Item = Index> + '_ {
        (1..=self.capacity()).filter(move |&x| self.is_identifier(x))
    }
}

pub struct DlistIter<'a> {
    lists: &'a Dlists,
    cur: Index,
}

impl Iterator for DlistIter<'_> {
    type Item = Index;

    fn next(&mut self) -> Option<Index> {
        if self.cur == 0 {
            return None;
        }
        let x = self.cur;
        self.cur = self.lists.next[x];
        Some(x)
    }
}

/// Disjoint sets over `1..=n` with union by rank and path compression.
#[derive(Clone, Debug)]
pub struct Dsets {
    parent: Vec<Index>,
    rank: Vec<u8>,
}

impl Dsets {
    pub fn new(n: usize) -> Self {
        Dsets { parent: (0..=n).collect(), rank: vec![0; n + 1] }
    }

    pub fn capacity(&self) -> usize {
        self.parent.len() - 1
    }

    /// Canonical element of the set containing `x`.
    pub fn find(&mut self, x: Index) -> Result<Index> {
        check_range(x, self.capacity())?;
        Ok(self.root(x))
    }

    pub(crate) fn root(&mut self, x: Index) -> Index {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let up = self.parent[y];
            self.parent[y] = r;
            y = up;
        }
        r
    }

    /// Root of `x` without compressing the path.
    pub fn find_no_compress(&self, x: Index) -> Result<Index> {
        check_range(x, self.capacity())?;
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        Ok(r)
    }

    /// Number of parent links from `x` to its root.
    pub fn depth(&self, x: Index) -> Result<usize> {
        check_range(x, self.capacity())?;
        let mut d = 0;
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
            d += 1;
        }
        Ok(d)
    }

    pub fn rank(&self, x: Index) -> u8 {
        self.rank[x]
    }

    pub fn is_root(&self, x: Index) -> bool {
        x != 0 && x <= self.capacity() && self.parent[x] == x
    }

    /// Combines the sets with roots `rx` and `ry`; returns the new root.
    pub fn union(&mut self, rx: Index, ry: Index) -> Result<Index> {
        check_range(rx, self.capacity())?;
        check_range(ry, self.capacity())?;
        if !self.is_root(rx) {
            return Err(Error::NotRoot(rx));
        }
        if !self.is_root(ry) {
            return Err(Error::NotRoot(ry));
        }
        if rx == ry {
            return Err(Error::SameList(rx));
        }
        Ok(self.link(rx, ry))
    }

    pub(crate) fn link(&mut self, rx: Index, ry: Index) -> Index {
        use core::cmp::Ordering::*;
        match self.rank[rx].cmp(&self.rank[ry]) {
            Less => {
                self.parent[rx] = ry;
                ry
            }
            Greater => {
                self.parent[ry] = rx;
                rx
            }
            Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
                rx
            }
        }
    }

    /// Unites the sets containing `x` and `y` if distinct; returns the root.
    pub(crate) fn merge(&mut self, x: Index, y: Index) -> Index {
        let rx = self.root(x);
        let ry = self.root(y);
        if rx == ry {
            rx
        } else {
            self.link(rx, ry)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn figure1() -> List {
        let mut l = List::new(10);
        for x in [7, 5, 3, 8, 2] {
            l.append(x).unwrap();
        }
        l
    }

    #[test]
    fn append_links_successors() {
        let l = figure1();
        assert_eq!(l.next(7), 5);
        assert_eq!(l.next(5), 3);
        assert_eq!(l.next(3), 8);
        assert_eq!(l.next(8), 2);
        assert_eq!(l.next(2), 0);
        assert_eq!(l.last(), 2);
        assert_eq!(l.iter().collect::<Vec<_>>(), vec![7, 5, 3, 8, 2]);
    }

    #[test]
    fn append_to_empty_and_duplicates() {
        let mut l = List::new(10);
        l.append(7).unwrap();
        assert_eq!(l.iter().collect::<Vec<_>>(), vec![7]);
        l.append(5).unwrap();
        assert_eq!(l.append(5), Err(Error::Duplicate(5)));
        assert_eq!(l.append(11), Err(Error::OutOfRange { index: 11, bound: 10 }));
        assert_eq!(l.append(0), Err(Error::OutOfRange { index: 0, bound: 10 }));
    }

    #[test]
    fn membership() {
        let l = figure1();
        assert_eq!(l.contains(3), Ok(true));
        assert_eq!(l.contains(1), Ok(false));
        assert!(l.contains(11).is_err());
        let e = List::new(4);
        assert!((1..=4).all(|x| e.contains(x) == Ok(false)));
        assert_eq!(e.iter().count(), 0);
        let mut s = List::new(4);
        s.append(4).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![4]);
    }

    #[test]
    fn pop_and_push_front() {
        let mut l = figure1();
        assert_eq!(l.pop_front(), Some(7));
        assert_eq!(l.contains(7), Ok(false));
        l.push_front(1).unwrap();
        assert_eq!(l.iter().collect::<Vec<_>>(), vec![1, 5, 3, 8, 2]);
        l.clear();
        assert!(l.is_empty());
        assert_eq!(l.last(), 0);
    }

    #[test]
    fn list_text() {
        let mut l = List::new(30);
        for x in [13, 30, 22] {
            l.append(x).unwrap();
        }
        assert_eq!(l.to_string(), "[13 30 22]");
        let mut s = List::new(5);
        for x in [1, 3, 4] {
            s.append(x).unwrap();
        }
        assert_eq!(s.to_string(), "[a c d]");
    }

    fn figure2() -> Dlists {
        let mut d = Dlists::new(12);
        for list in [&[1, 3, 6][..], &[2, 7], &[5, 10, 12], &[9, 11]] {
            for &x in &list[1..] {
                d.join(list[0], x).unwrap();
            }
        }
        d
    }

    #[test]
    fn dlists_members_of_figure2() {
        let d = figure2();
        assert_eq!(d.members(1).unwrap().collect::<Vec<_>>(), vec![1, 3, 6]);
        assert_eq!(d.members(5).unwrap().collect::<Vec<_>>(), vec![5, 10, 12]);
        assert_eq!(d.members(4).unwrap().collect::<Vec<_>>(), vec![4]);
        assert_eq!(d.identifiers().collect::<Vec<_>>(), vec![1, 2, 4, 5, 8, 9]);
        assert_eq!(d.members(3).err(), Some(Error::NotIdentifier(3)));
        assert_eq!(d.find_list(12), Ok(5));
    }

    #[test]
    fn dlists_fresh_singletons() {
        let d = Dlists::new(3);
        assert_eq!(d.members(2).unwrap().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn dlists_merge() {
        let mut d = figure2();
        assert_eq!(d.join(2, 4), Ok(2));
        assert_eq!(d.members(2).unwrap().collect::<Vec<_>>(), vec![2, 7, 4]);
        assert_eq!(d.join(1, 2), Ok(1));
        assert_eq!(d.members(1).unwrap().collect::<Vec<_>>(), vec![1, 3, 6, 2, 7, 4]);
        assert_eq!(d.join(1, 1), Err(Error::SameList(1)));
        assert_eq!(d.join(1, 3), Err(Error::NotIdentifier(3)));
        let mut s = Dlists::new(2);
        s.join(1, 2).unwrap();
        assert_eq!(s.members(1).unwrap().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn dlists_remove() {
        let mut d = figure2();
        assert_eq!(d.remove(3, 1), Ok(1));
        assert_eq!(d.members(1).unwrap().collect::<Vec<_>>(), vec![1, 6]);
        assert_eq!(d.remove(6, 1), Ok(1));
        assert_eq!(d.last(1), 1);
        assert_eq!(d.remove(5, 5), Ok(10));
        assert_eq!(d.members(10).unwrap().collect::<Vec<_>>(), vec![10, 12]);
        assert_eq!(d.remove(4, 4), Ok(0));
        let total: usize = d.identifiers().map(|id| d.members(id).unwrap().count()).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn dsets_basics() {
        let mut s = Dsets::new(8);
        assert_eq!(s.find(5), Ok(5));
        let r = s.union(1, 2).unwrap();
        assert_eq!(s.find(2), Ok(r));
        assert_eq!(s.rank(r), 1);
        let r3 = s.find(3).unwrap();
        let r = s.union(r, r3).unwrap();
        assert_eq!(s.find(1), s.find(3));
        assert_eq!(s.find(1), Ok(r));
        assert!(s.find(9).is_err());
        assert_eq!(s.union(r, r), Err(Error::SameList(r)));
        let nr = if r == 1 { 2 } else { 1 };
        assert_eq!(s.union(nr, 4), Err(Error::NotRoot(nr)));
    }

    #[test]
    fn dsets_chain_height_bounded() {
        let mut s = Dsets::new(8);
        for x in 1..8 {
            let a = s.find_no_compress(x).unwrap();
            let b = s.find_no_compress(x + 1).unwrap();
            if a != b {
                s.union(a, b).unwrap();
            }
        }
        let root = s.find_no_compress(1).unwrap();
        for x in 1..=8 {
            assert_eq!(s.find_no_compress(x), Ok(root));
            assert!(s.depth(x).unwrap() <= 3);
        }
    }
}
