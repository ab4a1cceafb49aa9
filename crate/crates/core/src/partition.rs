use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::VertexSet;

/// What each part of a partition is claimed to induce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PartKind {
    Forest,
    StarForest,
    /// Forest of in-stars and out-stars; needs an orientation to check.
    InOutStarForest,
    LinearForest,
    StableSet,
    /// Subgraph of degeneracy at most the given value.
    Degenerate(usize),
}

impl PartKind {
    /// Kinds whose predicate implies "induces a forest" and that are closed
    /// under taking subsets, so they can be peeled and trimmed freely.
    pub fn is_forest_like(self) -> bool {
        matches!(
            self,
            PartKind::Forest
                | PartKind::StarForest
                | PartKind::InOutStarForest
                | PartKind::LinearForest
        ) || self == PartKind::Degenerate(1)
    }
}

impl fmt::Display for PartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartKind::Forest => f.write_str("forest"),
            PartKind::StarForest => f.write_str("star_forest"),
            PartKind::InOutStarForest => f.write_str("in_out_star_forest"),
            PartKind::LinearForest => f.write_str("linear_forest"),
            PartKind::StableSet => f.write_str("stable_set"),
            PartKind::Degenerate(d) => write!(f, "degenerate_{d}"),
        }
    }
}

impl FromStr for PartKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "forest" => PartKind::Forest,
            "star_forest" => PartKind::StarForest,
            "in_out_star_forest" => PartKind::InOutStarForest,
            "linear_forest" => PartKind::LinearForest,
            "stable_set" => PartKind::StableSet,
            other => match other.strip_prefix("degenerate_").map(str::parse) {
                Some(Ok(d)) => PartKind::Degenerate(d),
                _ => return Err(Error::UnsupportedKind(other.to_string())),
            },
        })
    }
}

impl TryFrom<String> for PartKind {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<PartKind> for String {
    fn from(kind: PartKind) -> Self {
        kind.to_string()
    }
}

/// An ordered list of vertex sets with a claimed part kind.
///
/// Construction does not check anything; use
/// [`verify_partition`](crate::certify::verify_partition).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    part_kind: PartKind,
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(part_kind: PartKind, parts: Vec<VertexSet>) -> Self {
        Partition { part_kind, parts }
    }

    pub fn part_kind(&self) -> PartKind {
        self.part_kind
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(VertexSet::len).collect()
    }

    /// Sorted part sizes, for comparing profiles regardless of part order.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut sizes = self.sizes();
        sizes.sort_unstable();
        sizes
    }

    pub fn is_equitable(&self) -> bool {
        let sizes = self.sizes();
        match (sizes.iter().min(), sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    /// Relabels a partition of an induced subgraph back into the parent,
    /// where vertex `i` of the subgraph is `original[i]`.
    pub fn lift(&self, original: &[usize]) -> Partition {
        let parts = self
            .parts
            .iter()
            .map(|part| part.iter().map(|v| original[v]).collect())
            .collect();
        Partition::new(self.part_kind, parts)
    }

    pub fn with_kind(mut self, part_kind: PartKind) -> Partition {
        self.part_kind = part_kind;
        self
    }
}

/// Sizes of an equitable partition of `n` items into `k` parts:
/// `n mod k` parts of size `ceil(n / k)` first, then `floor(n / k)`.
pub fn equitable_profile(n: usize, k: usize) -> Vec<usize> {
    assert!(k > 0 || n == 0, "cannot split {n} items into zero parts");
    if k == 0 {
        return Vec::new();
    }
    let (q, s) = (n / k, n % k);
    (0..k).map(|i| if i < s { q + 1 } else { q }).collect()
}
