//! Disjoint sets used by the reference algorithms and the tree checker.
//!
//! The linear-time builders never touch this module.

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            sets: n,
        }
    }

    /// Path halving.
    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (lo, hi) = if self.rank[a] < self.rank[b] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[lo] = hi;
        if self.rank[lo] == self.rank[hi] {
            self.rank[hi] += 1;
        }
        self.sets -= 1;
        true
    }

    pub fn sets(&self) -> usize {
        self.sets
    }
}

/// Union by rank without path compression, so unions can be undone in
/// reverse order. Used by the backtracking enumerator.
#[derive(Debug, Clone)]
pub(crate) struct RollbackUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    history: Vec<Option<(usize, usize, bool)>>,
}

impl RollbackUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the sets of `a` and `b`; always records a history entry so that
    /// every call can be paired with one `undo`.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            self.history.push(None);
            return false;
        }
        let (lo, hi) = if self.rank[a] < self.rank[b] {
            (a, b)
        } else {
            (b, a)
        };
        let bumped = self.rank[lo] == self.rank[hi];
        self.parent[lo] = hi;
        if bumped {
            self.rank[hi] += 1;
        }
        self.history.push(Some((lo, hi, bumped)));
        true
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((lo, hi, bumped))) = self.history.pop() {
            self.parent[lo] = lo;
            if bumped {
                self.rank[hi] -= 1;
            }
        }
    }
}
