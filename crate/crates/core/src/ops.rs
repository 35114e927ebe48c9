//! Operation counters for the scaling evidence.
//!
//! Wall time depends on the machine; these counts do not. Every BFS-style
//! routine bumps `scanned` once per adjacency entry it reads and `pushes`
//! once per queue insertion.

use std::ops::AddAssign;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    pub scanned: u64,
    pub pushes: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.scanned + self.pushes
    }

    #[inline]
    pub(crate) fn scan(&mut self, entries: usize) {
        self.scanned += entries as u64;
    }

    #[inline]
    pub(crate) fn push(&mut self) {
        self.pushes += 1;
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.scanned += rhs.scanned;
        self.pushes += rhs.pushes;
    }
}
