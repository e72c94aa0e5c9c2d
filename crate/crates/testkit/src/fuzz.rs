//! Randomized operation sequences run against a structure and a naive model
//! side by side. Each driver returns the number of operations performed, or
//! a description of the first disagreement.

use std::collections::BTreeSet;

use grafalgo_core::collections::Dsets;
use grafalgo_core::dtrees::{DynTrees, ROOT_COST};
use grafalgo_core::heaps::{DHeap, FibHeap, LeftistHeaps};
use rand::Rng;

pub type Outcome = Result<usize, String>;

macro_rules! agree {
    ($op:expr, $got:expr, $want:expr) => {{
        let (got, want) = ($got, $want);
        if got != want {
            return Err(format!("op {}: got {:?}, model says {:?}", $op, got, want));
        }
    }};
}

pub fn dsets(rng: &mut impl Rng, n: usize, ops: usize) -> Outcome {
    let mut d = Dsets::new(n);
    let mut label: Vec<usize> = (0..=n).collect();
    for op in 0..ops {
        let (x, y) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        if rng.gen_bool(0.4) {
            let (rx, ry) = (d.find(x).unwrap(), d.find(y).unwrap());
            agree!(op, rx == ry, label[x] == label[y]);
            if rx != ry {
                let r = d.union(rx, ry).unwrap();
                agree!(op, r == rx || r == ry, true);
                let (old, new) = (label[y], label[x]);
                for l in label.iter_mut() {
                    if *l == old {
                        *l = new;
                    }
                }
            }
        } else {
            let same = d.find(x).unwrap() == d.find(y).unwrap();
            agree!(op, same, label[x] == label[y]);
        }
    }
    Ok(ops)
}

/// Heap operations common to the d-heap and Fibonacci heap drivers.
trait Addressable {
    fn insert(&mut self, x: usize, k: i64);
    fn delete_min(&mut self) -> Option<usize>;
    fn find_min(&self) -> Option<usize>;
    fn lower(&mut self, x: usize, k: i64);
    fn len(&self) -> usize;
    fn valid(&self) -> bool;
}

impl Addressable for DHeap<i64> {
    fn insert(&mut self, x: usize, k: i64) {
        DHeap::insert(self, x, k).unwrap()
    }
    fn delete_min(&mut self) -> Option<usize> {
        DHeap::delete_min(self).ok()
    }
    fn find_min(&self) -> Option<usize> {
        DHeap::find_min(self)
    }
    fn lower(&mut self, x: usize, k: i64) {
        self.change_key(x, k).unwrap()
    }
    fn len(&self) -> usize {
        DHeap::len(self)
    }
    fn valid(&self) -> bool {
        self.check_invariants()
    }
}

impl Addressable for FibHeap<i64> {
    fn insert(&mut self, x: usize, k: i64) {
        FibHeap::insert(self, x, k).unwrap()
    }
    fn delete_min(&mut self) -> Option<usize> {
        FibHeap::delete_min(self).ok()
    }
    fn find_min(&self) -> Option<usize> {
        FibHeap::find_min(self)
    }
    fn lower(&mut self, x: usize, k: i64) {
        self.decrease_key(x, k).unwrap()
    }
    fn len(&self) -> usize {
        FibHeap::len(self)
    }
    fn valid(&self) -> bool {
        self.check_invariants()
    }
}

fn addressable<H: Addressable>(h: &mut H, rng: &mut impl Rng, n: usize, ops: usize) -> Outcome {
    let mut model: BTreeSet<(i64, usize)> = BTreeSet::new();
    let mut key = vec![None; n + 1];
    for op in 0..ops {
        let x = rng.gen_range(1..=n);
        match rng.gen_range(0..10) {
            0..=3 => match key[x] {
                None => {
                    let k = rng.gen_range(0..50);
                    h.insert(x, k);
                    key[x] = Some(k);
                    model.insert((k, x));
                }
                Some(k) => {
                    let k2 = k - rng.gen_range(0..10);
                    h.lower(x, k2);
                    model.remove(&(k, x));
                    model.insert((k2, x));
                    key[x] = Some(k2);
                }
            },
            4..=6 => {
                let want = model.pop_first().map(|(_, x)| x);
                if let Some(x) = want {
                    key[x] = None;
                }
                agree!(op, h.delete_min(), want);
            }
            _ => agree!(op, h.find_min(), model.first().map(|&(_, x)| x)),
        }
        agree!(op, h.len(), model.len());
        if op % 97 == 0 {
            agree!(op, h.valid(), true);
        }
    }
    Ok(ops)
}

/// D-heap with insert, change-key (both directions), remove and delete-min.
pub fn dheap(rng: &mut impl Rng, n: usize, arity: usize, ops: usize) -> Outcome {
    let mut h = DHeap::with_arity(n, arity);
    let done = addressable(&mut h, rng, n, ops / 2)?;
    // second half also raises keys and removes arbitrary items
    let mut model: BTreeSet<(i64, usize)> = (1..=n).filter(|&x| h.contains(x)).map(|x| (h.key(x), x)).collect();
    for op in done..ops {
        let x = rng.gen_range(1..=n);
        match rng.gen_range(0..4) {
            0 => {
                let k = rng.gen_range(-50..100);
                if h.contains(x) {
                    model.remove(&(h.key(x), x));
                }
                h.insert_or_change(x, k).unwrap();
                model.insert((k, x));
            }
            1 => {
                if h.contains(x) {
                    model.remove(&(h.key(x), x));
                    h.remove(x).unwrap();
                } else {
                    agree!(op, h.remove(x).is_err(), true);
                }
            }
            2 => agree!(op, h.delete_min().ok(), model.pop_first().map(|(_, x)| x)),
            _ => agree!(op, h.find_min(), model.first().map(|&(_, x)| x)),
        }
        agree!(op, h.len(), model.len());
        if op % 97 == 0 {
            agree!(op, h.check_invariants(), true);
        }
    }
    Ok(ops)
}

pub fn fibheap(rng: &mut impl Rng, n: usize, ops: usize) -> Outcome {
    addressable(&mut FibHeap::new(n), rng, n, ops)
}

/// Leftist heaps: singletons, inserts, melds, lazy deletion and
/// delete-min over a pool of heaps. Items are never reused.
pub fn leftist(rng: &mut impl Rng, ops: usize) -> Outcome {
    let n = ops + 1;
    let mut h: LeftistHeaps<i64> = LeftistHeaps::new(n);
    let mut fresh = 1..=n;
    let mut roots: Vec<usize> = Vec::new();
    let mut model: Vec<BTreeSet<(i64, usize)>> = Vec::new();
    for op in 0..ops {
        let pick = |rng: &mut dyn rand::RngCore, len: usize| rng.gen_range(0..len);
        match rng.gen_range(0..10) {
            0..=2 => {
                let Some(i) = fresh.next() else { break };
                let k = rng.gen_range(0..100);
                h.set_key(i, k).unwrap();
                if roots.is_empty() || rng.gen_bool(0.3) {
                    roots.push(i);
                    model.push(BTreeSet::from([(k, i)]));
                } else {
                    let j = pick(rng, roots.len());
                    roots[j] = h.insert(i, roots[j]).unwrap();
                    model[j].insert((k, i));
                }
            }
            3 | 4 if roots.len() >= 2 => {
                let a = pick(rng, roots.len());
                let b = roots.len() - 1;
                if a != b {
                    let r = roots.pop().unwrap();
                    let items = model.pop().unwrap();
                    roots[a] = h.meld(roots[a], r);
                    model[a].extend(items);
                }
            }
            5 | 6 if !roots.is_empty() => {
                let j = pick(rng, roots.len());
                let want = model[j].pop_first().map(|(_, x)| x);
                match h.find_delete_min(roots[j]) {
                    Ok((x, rest)) => {
                        agree!(op, Some(x), want);
                        roots[j] = rest;
                    }
                    Err(_) => {
                        agree!(op, None::<usize>, want);
                        roots[j] = 0;
                    }
                }
            }
            7 if !roots.is_empty() => {
                let j = pick(rng, roots.len());
                if let Some(&(k, x)) = model[j].iter().nth(rng.gen_range(0..model[j].len().max(1))) {
                    h.retire(x);
                    model[j].remove(&(k, x));
                }
            }
            _ if !roots.is_empty() => {
                let j = pick(rng, roots.len());
                roots[j] = h.purge(roots[j]);
                let top = if roots[j] == 0 { None } else { Some(roots[j]) };
                agree!(op, top, model[j].first().map(|&(_, x)| x));
                agree!(op, h.check_invariants(roots[j]), true);
            }
            _ => {}
        }
    }
    Ok(ops)
}

/// Naive forest: parent pointers and costs.
struct Forest {
    parent: Vec<usize>,
    cost: Vec<i64>,
}

impl Forest {
    fn root(&self, mut u: usize) -> usize {
        while self.parent[u] != 0 {
            u = self.parent[u];
        }
        u
    }

    fn path(&self, mut u: usize) -> Vec<usize> {
        let mut p = vec![u];
        while self.parent[u] != 0 {
            u = self.parent[u];
            p.push(u);
        }
        p
    }

    fn findcost(&self, u: usize) -> (usize, i64) {
        let mut best = (u, self.cost[u]);
        for v in self.path(u) {
            if self.cost[v] <= best.1 {
                best = (v, self.cost[v]);
            }
        }
        best
    }
}

pub fn dyntrees(rng: &mut impl Rng, n: usize, ops: usize) -> Outcome {
    let mut t = DynTrees::new(n);
    let mut f = Forest { parent: vec![0; n + 1], cost: vec![ROOT_COST; n + 1] };
    for op in 0..ops {
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        match rng.gen_range(0..12) {
            0..=2 => {
                let ru = f.root(u);
                if f.root(v) != ru {
                    let c = rng.gen_range(0..40);
                    t.link(ru, v, c).unwrap();
                    f.parent[ru] = v;
                    f.cost[ru] = c;
                } else {
                    agree!(op, t.link(ru, v, 0).is_err(), true);
                }
            }
            3 => {
                if f.parent[u] != 0 {
                    t.cut(u).unwrap();
                    f.parent[u] = 0;
                    f.cost[u] = ROOT_COST;
                } else {
                    agree!(op, t.cut(u).is_err(), true);
                }
            }
            4 | 5 => agree!(op, t.findroot(u).unwrap(), f.root(u)),
            6 | 7 => agree!(op, t.findcost(u).unwrap(), f.findcost(u)),
            8 | 9 => {
                let d = rng.gen_range(-5..=5);
                t.addcost(u, d).unwrap();
                for w in f.path(u) {
                    f.cost[w] += d;
                }
            }
            10 => agree!(op, t.parent(u).unwrap(), f.parent[u]),
            _ => agree!(op, t.cost(u).unwrap(), f.cost[u]),
        }
    }
    Ok(ops)
}
