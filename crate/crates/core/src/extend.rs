//! From `l` equitable forest parts to any `k >= l`.
//!
//! With `n = k*q + s`, the target profile is `s` parts of size `q + 1` and
//! `k - s` parts of size `q`. Each round asks the oracle for an `l`-part
//! partition of what is left, keeps the first `q + 1` (for the first `s`
//! rounds) or `q` vertices of its largest part, and removes them. After
//! `k - l` rounds the oracle's partition of the remainder supplies the last
//! `l` parts. The oracle must work on every induced subgraph it is handed.

use crate::certify::verify_partition;
use crate::coloring::Coloring;
use crate::error::Error;
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::merge::{merge_partition, MergeMode};
use crate::partition::{PartKind, Partition};

/// A partitioner into a fixed number of equitable forest-like parts.
pub trait PartitionOracle {
    /// The fixed part count `l`.
    fn parts(&self) -> usize;

    fn part_kind(&self) -> PartKind {
        PartKind::Forest
    }

    /// Partitions `g`, an induced subgraph of the top-level graph; vertex
    /// `i` of `g` is vertex `original[i]` up there.
    fn partition(&self, g: &Graph, original: &[usize]) -> Result<Partition, Error>;
}

/// The one-part partitioner for forests.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityOracle;

impl PartitionOracle for IdentityOracle {
    fn parts(&self) -> usize {
        1
    }

    fn partition(&self, g: &Graph, _original: &[usize]) -> Result<Partition, Error> {
        Ok(Partition::new(
            PartKind::Forest,
            vec![VertexSet::full(g.n())],
        ))
    }
}

/// Restricts a fixed coloring of the top-level graph and merges it: `c`
/// classes give `c - 1` parts on every induced subgraph.
#[derive(Clone, Debug)]
pub struct ColoringMergeOracle {
    coloring: Coloring,
    mode: MergeMode,
}

impl ColoringMergeOracle {
    pub fn new(coloring: Coloring, mode: MergeMode) -> Result<Self, Error> {
        if coloring.class_count() < 2 {
            return Err(Error::TooFewClasses(coloring.class_count()));
        }
        Ok(ColoringMergeOracle { coloring, mode })
    }
}

impl PartitionOracle for ColoringMergeOracle {
    fn parts(&self) -> usize {
        self.coloring.class_count() - 1
    }

    fn part_kind(&self) -> PartKind {
        self.mode.part_kind()
    }

    fn partition(&self, g: &Graph, original: &[usize]) -> Result<Partition, Error> {
        merge_partition(g, &self.coloring.restrict(original), self.mode)
    }
}

/// The `target` lowest-indexed vertices of `part`.
pub fn trim_forest(part: &VertexSet, target: usize) -> Result<VertexSet, Error> {
    if target > part.len() {
        return Err(Error::InvalidParameter(format!(
            "cannot trim a part of size {} to {target}",
            part.len()
        )));
    }
    Ok(VertexSet::from(part.as_slice()[..target].to_vec()))
}

fn checked_call<O: PartitionOracle + ?Sized>(
    oracle: &O,
    g: &Graph,
    original: &[usize],
) -> Result<Partition, Error> {
    let p = oracle.partition(g, original)?;
    if p.len() != oracle.parts() {
        return Err(Error::InvalidOracleResponse(format!(
            "expected {} parts, got {}",
            oracle.parts(),
            p.len()
        )));
    }
    if p.part_kind() != oracle.part_kind() {
        return Err(Error::InvalidOracleResponse(format!(
            "expected {} parts, got {}",
            oracle.part_kind(),
            p.part_kind()
        )));
    }
    let report = verify_partition(g, &p);
    if !report.is_valid() {
        return Err(Error::InvalidOracleResponse(report.to_string()));
    }
    Ok(p)
}

/// Equitable partition of `g` into `k` parts of the oracle's kind.
///
/// Every oracle response is verified before use. `n < k` is fine: the
/// trailing parts are then empty.
pub fn extend_partition<O: PartitionOracle + ?Sized>(
    g: &Graph,
    oracle: &O,
    k: usize,
) -> Result<Partition, Error> {
    let l = oracle.parts();
    let kind = oracle.part_kind();
    if l == 0 {
        return Err(Error::InvalidParameter(
            "oracle must produce at least one part".into(),
        ));
    }
    if k < l {
        return Err(Error::InvalidParameter(format!(
            "k = {k} is below the oracle's {l} parts"
        )));
    }
    if !kind.is_forest_like() || kind == PartKind::InOutStarForest {
        return Err(Error::UnsupportedKind(format!(
            "cannot extend {kind} partitions"
        )));
    }
    let n = g.n();
    let (q, s) = (n / k, n % k);
    let mut alive = VertexSet::full(n);
    let mut parts = Vec::with_capacity(k);
    for round in 1..=k - l {
        let sub = induced_subgraph(g, &alive)?;
        let p = checked_call(oracle, &sub.graph, &sub.original)?;
        let largest = (0..p.len())
            .max_by_key(|&i| (p.parts()[i].len(), std::cmp::Reverse(i)))
            .expect("oracle returned at least one part");
        let target = if round <= s { q + 1 } else { q };
        let available = p.parts()[largest].len();
        assert!(
            available >= sub.graph.n().div_ceil(l) && available >= target,
            "round {round}: largest forest has {available} vertices, schedule needs {target}"
        );
        let kept = trim_forest(&p.parts()[largest], target)?;
        let chosen: VertexSet = kept.iter().map(|v| sub.original[v]).collect();
        alive = alive.iter().filter(|&v| !chosen.contains(v)).collect();
        parts.push(chosen);
    }
    let sub = induced_subgraph(g, &alive)?;
    let last = checked_call(oracle, &sub.graph, &sub.original)?;
    parts.extend(last.lift(&sub.original).into_parts());
    Ok(Partition::new(kind, parts))
}
