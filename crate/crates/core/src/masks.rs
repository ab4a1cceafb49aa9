//! Bitmask predicates for the exhaustive searches (graphs with n <= 64).
//!
//! Kept apart from `certify` on purpose: search results are re-checked by
//! the adjacency-list predicates there.

use crate::partition::PartKind;

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// Vertices reachable from `start` inside `within`.
pub(crate) fn reach(adj: &[u64], within: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & within;
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

fn degree(adj: &[u64], mask: u64, v: usize) -> u32 {
    (adj[v] & mask).count_ones()
}

pub(crate) fn is_forest(adj: &[u64], mask: u64) -> bool {
    let twice_edges: u32 = bits(mask).map(|v| degree(adj, mask, v)).sum();
    let mut components = 0;
    let mut left = mask;
    while left != 0 {
        let c = reach(adj, mask, left.trailing_zeros() as usize);
        left &= !c;
        components += 1;
    }
    twice_edges / 2 + components == mask.count_ones()
}

fn no_edge_between_branch_vertices(adj: &[u64], mask: u64) -> bool {
    let branch = bits(mask)
        .filter(|&v| degree(adj, mask, v) >= 2)
        .fold(0u64, |acc, v| acc | 1 << v);
    bits(branch).all(|v| adj[v] & branch == 0)
}

pub(crate) fn degeneracy_at_most(adj: &[u64], mask: u64, d: usize) -> bool {
    let mut left = mask;
    loop {
        let peel = bits(left)
            .filter(|&v| degree(adj, left, v) as usize <= d)
            .fold(0u64, |acc, v| acc | 1 << v);
        if peel == 0 {
            return left == 0;
        }
        left &= !peel;
    }
}

/// Whether `mask` induces a part of the given kind. Every kind supported
/// here is hereditary, so a failing partial part can be pruned.
pub(crate) fn satisfies(kind: PartKind, adj: &[u64], mask: u64) -> bool {
    match kind {
        PartKind::StableSet => bits(mask).all(|v| adj[v] & mask == 0),
        PartKind::Forest => is_forest(adj, mask),
        PartKind::StarForest => is_forest(adj, mask) && no_edge_between_branch_vertices(adj, mask),
        PartKind::LinearForest => {
            bits(mask).all(|v| degree(adj, mask, v) <= 2) && is_forest(adj, mask)
        }
        PartKind::Degenerate(d) => degeneracy_at_most(adj, mask, d),
        PartKind::InOutStarForest => {
            unreachable!("orientation-dependent kinds are rejected earlier")
        }
    }
}

/// Exhaustive assignment of vertices `0..n` (in index order) to parts with
/// fixed capacities, such that every part satisfies `kind`.
///
/// Parts with equal capacity are interchangeable and are opened in index
/// order only, so the minimum vertices of same-capacity parts increase.
pub(crate) struct EquitableSearch<'a> {
    adj: &'a [u64],
    kind: PartKind,
    capacity: Vec<usize>,
    parts: Vec<u64>,
    sizes: Vec<usize>,
    pub nodes: u64,
    budget: u64,
}

pub(crate) enum SearchResult {
    Found(Vec<u64>),
    Exhausted,
    OutOfBudget,
}

impl<'a> EquitableSearch<'a> {
    pub fn new(adj: &'a [u64], kind: PartKind, capacity: Vec<usize>, budget: u64) -> Self {
        let k = capacity.len();
        EquitableSearch {
            adj,
            kind,
            capacity,
            parts: vec![0; k],
            sizes: vec![0; k],
            nodes: 0,
            budget,
        }
    }

    pub fn run(&mut self) -> SearchResult {
        debug_assert_eq!(self.capacity.iter().sum::<usize>(), self.adj.len());
        match self.descend(0) {
            Some(true) => SearchResult::Found(self.parts.clone()),
            Some(false) => SearchResult::Exhausted,
            None => SearchResult::OutOfBudget,
        }
    }

    /// `None` when the node budget runs out.
    fn descend(&mut self, v: usize) -> Option<bool> {
        if v == self.adj.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for p in 0..self.parts.len() {
            if self.sizes[p] == self.capacity[p] {
                continue;
            }
            if self.parts[p] == 0
                && (0..p).any(|q| self.parts[q] == 0 && self.capacity[q] == self.capacity[p])
            {
                continue;
            }
            let grown = self.parts[p] | 1 << v;
            if !satisfies(self.kind, self.adj, grown) {
                continue;
            }
            self.parts[p] = grown;
            self.sizes[p] += 1;
            if self.descend(v + 1)? {
                return Some(true);
            }
            self.parts[p] &= !(1 << v);
            self.sizes[p] -= 1;
        }
        Some(false)
    }
}
