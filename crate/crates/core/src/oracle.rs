//! Exhaustive equitable-partition search, used as ground truth.
//!
//! The search assigns vertices one at a time (highest degree first) to parts
//! with the forced size profile and prunes as soon as a partial part leaves
//! its kind. All supported kinds are hereditary, so pruning is exact. Parts
//! of equal size are opened in index order only.

use crate::certify::{verify_partition, PartitionReport};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::masks::{bits, EquitableSearch, SearchResult};
use crate::partition::{equitable_profile, PartKind, Partition};

/// Default vertex cap of the exhaustive search.
pub const DEFAULT_ORACLE_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `n` searched (at most 64).
    pub cap: usize,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            cap: DEFAULT_ORACLE_CAP,
            node_budget: 500_000_000,
        }
    }
}

/// What one search is asked to find.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub k: usize,
    pub part_kind: PartKind,
    /// `n mod k` parts of size `ceil(n/k)` first, then the `floor` parts.
    pub size_profile: Vec<usize>,
    pub node_budget: u64,
}

impl SearchSpec {
    pub fn new(n: usize, k: usize, part_kind: PartKind, node_budget: u64) -> Self {
        SearchSpec {
            k,
            part_kind,
            size_profile: equitable_profile(n, k),
            node_budget,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Sat(Partition),
    Unsat { nodes: u64 },
    BudgetExceeded { nodes: u64 },
}

impl SearchOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SearchOutcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, SearchOutcome::Unsat { .. })
    }
}

/// Runs a search to the end of its spec.
pub fn run_search(g: &Graph, spec: &SearchSpec) -> Result<SearchOutcome, Error> {
    let n = g.n();
    if spec.part_kind == PartKind::InOutStarForest {
        return Err(Error::UnsupportedKind(
            "in_out_star_forest needs an orientation".into(),
        ));
    }
    if spec.k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if spec.size_profile.iter().sum::<usize>() != n || spec.size_profile.len() != spec.k {
        return Err(Error::InvalidParameter(
            "size profile does not match n and k".into(),
        ));
    }
    if n > 64 {
        return Err(Error::CapExceeded { n, cap: 64 });
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let relabeled = Graph::from_edges(n, g.edges().map(|(u, v)| (position[u], position[v])))?;
    let adj = relabeled.adjacency_masks();
    let mut search = EquitableSearch::new(
        &adj,
        spec.part_kind,
        spec.size_profile.clone(),
        spec.node_budget,
    );
    Ok(match search.run() {
        SearchResult::Found(masks) => {
            let parts = masks
                .into_iter()
                .map(|m| bits(m).map(|i| order[i]).collect::<VertexSet>())
                .collect();
            let p = Partition::new(spec.part_kind, parts);
            let report = verify_partition(g, &p);
            assert!(
                report.is_valid(),
                "exhaustive search produced an invalid partition: {report}"
            );
            SearchOutcome::Sat(p)
        }
        SearchResult::Exhausted => SearchOutcome::Unsat {
            nodes: search.nodes,
        },
        SearchResult::OutOfBudget => SearchOutcome::BudgetExceeded {
            nodes: search.nodes,
        },
    })
}

/// Equitable partition of `g` into `k` parts of `kind`, or a proof by
/// exhaustion that none exists.
pub fn brute_force_equitable(
    g: &Graph,
    k: usize,
    kind: PartKind,
    cfg: &SearchConfig,
) -> Result<SearchOutcome, Error> {
    let cap = cfg.cap.min(64);
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    run_search(g, &SearchSpec::new(g.n(), k, kind, cfg.node_budget))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Existence {
    /// The search found some partition with the same `k` and kind.
    Confirmed,
    /// The search proved that none exists.
    Refuted,
    Skipped {
        reason: String,
    },
    BudgetExceeded {
        nodes: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub report: PartitionReport,
    pub existence: Existence,
}

impl CrossValidation {
    /// Valid partition and no contradicting search result.
    pub fn is_consistent(&self) -> bool {
        self.report.is_valid() && self.existence != Existence::Refuted
    }
}

/// Certifies a constructed partition and, within the cap, checks that the
/// exhaustive search agrees that such a partition exists.
pub fn cross_validate(g: &Graph, constructed: &Partition, cfg: &SearchConfig) -> CrossValidation {
    let report = verify_partition(g, constructed);
    let k = constructed.len();
    let existence = if k == 0 {
        Existence::Skipped {
            reason: "partition has no parts".into(),
        }
    } else {
        match brute_force_equitable(g, k, constructed.part_kind(), cfg) {
            Ok(SearchOutcome::Sat(_)) => Existence::Confirmed,
            Ok(SearchOutcome::Unsat { .. }) => Existence::Refuted,
            Ok(SearchOutcome::BudgetExceeded { nodes }) => Existence::BudgetExceeded { nodes },
            Err(e) => Existence::Skipped {
                reason: e.to_string(),
            },
        }
    };
    CrossValidation { report, existence }
}
