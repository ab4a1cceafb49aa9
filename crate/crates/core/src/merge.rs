//! Coloring -> equitable partition.
//!
//! Given `k >= 2` color classes in which any two classes induce a forest
//! (resp. star forest, forest of in- and out-stars), the engine peels off
//! one part at a time: take a smallest class `V1`, a class `V2` with
//! `|V1| + |V2| >= n / (k - 1)`, emit `V1` plus the first
//! `floor(n / (k - 1)) - |V1|` vertices of `V2`, and continue with the
//! remaining `k - 1` classes. With two classes left, their union is the last
//! part. Each emitted part lies inside the union of two classes, so it
//! inherits the pair property.

use crate::certify::Verdict;
use crate::coloring::{
    verify_acyclic, verify_oriented_consistent, verify_star, Coloring, ColoringKind,
};
use crate::error::Error;
use crate::graph::{Graph, Orientation, VertexSet};
use crate::partition::{PartKind, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MergeMode {
    /// Acyclic coloring in, induced forests out.
    Acyclic,
    /// Star coloring in, induced star forests out.
    Star,
}

impl MergeMode {
    pub fn part_kind(self) -> PartKind {
        match self {
            MergeMode::Acyclic => PartKind::Forest,
            MergeMode::Star => PartKind::StarForest,
        }
    }
}

/// Picks the pair of classes to merge from.
///
/// Returns `(i1, i2)`: `i1` is a smallest class (lowest index on ties) and
/// `i2 != i1` the lowest-indexed class with
/// `(size[i1] + size[i2]) * (k - 1) >= n`. Such a class always exists when
/// `k >= 3` and the sizes sum to `n`; a failure is a bug and panics.
pub fn select_merge_pair(class_sizes: &[usize], n: usize, k: usize) -> (usize, usize) {
    assert!(
        k >= 3 && class_sizes.len() == k,
        "need k >= 3 classes, got {k}"
    );
    assert_eq!(
        class_sizes.iter().sum::<usize>(),
        n,
        "class sizes must sum to n"
    );
    let i1 = (0..k).min_by_key(|&i| (class_sizes[i], i)).expect("k >= 3");
    let i2 = (0..k)
        .filter(|&i| i != i1)
        .find(|&i| (class_sizes[i1] + class_sizes[i]) * (k - 1) >= n)
        .expect("the classes paired with a smallest one cover n + (k - 2)|V1| >= n vertices");
    (i1, i2)
}

/// Runs the peeling loop on already-verified classes.
fn merge_classes(classes: &[VertexSet], part_kind: PartKind) -> Partition {
    let mut classes: Vec<Vec<usize>> = classes.iter().map(|c| c.as_slice().to_vec()).collect();
    let mut n: usize = classes.iter().map(Vec::len).sum();
    let mut parts = Vec::with_capacity(classes.len().saturating_sub(1));
    while classes.len() > 2 {
        let k = classes.len();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let (i1, i2) = select_merge_pair(&sizes, n, k);
        let target = n / (k - 1);
        let take = target - sizes[i1];
        let mut part = std::mem::take(&mut classes[i1]);
        part.extend(classes[i2].drain(..take));
        debug_assert_eq!(part.len(), target);
        parts.push(VertexSet::from(part));
        classes.remove(i1);
        n -= target;
    }
    parts.push(classes.concat().into());
    Partition::new(part_kind, parts)
}

fn require(verdict: Verdict, expected: ColoringKind) -> Result<(), Error> {
    match verdict {
        Verdict::Accept => Ok(()),
        Verdict::Reject(witness) => Err(Error::InvalidColoring { expected, witness }),
    }
}

/// Equitable partition into `k - 1` induced forests (or star forests) from
/// a `k`-class acyclic (or star) coloring. Empty classes count towards `k`.
///
/// Part sizes are all `floor(n / (k - 1))` or `ceil(n / (k - 1))`, smaller
/// parts first.
pub fn merge_partition(g: &Graph, c: &Coloring, mode: MergeMode) -> Result<Partition, Error> {
    if c.class_count() < 2 {
        return Err(Error::TooFewClasses(c.class_count()));
    }
    match mode {
        MergeMode::Acyclic => require(verify_acyclic(g, c)?, ColoringKind::Acyclic)?,
        MergeMode::Star => require(verify_star(g, c)?, ColoringKind::Star)?,
    }
    Ok(merge_classes(&c.classes, mode.part_kind()))
}

/// Equitable partition of an orientation into `k - 1` induced forests of
/// in- and out-stars, from a `k`-class star coloring whose arcs between any
/// two classes all point the same way.
pub fn merge_partition_oriented(o: &Orientation, c: &Coloring) -> Result<Partition, Error> {
    if c.class_count() < 2 {
        return Err(Error::TooFewClasses(c.class_count()));
    }
    require(verify_star(o.base(), c)?, ColoringKind::Star)?;
    require(
        verify_oriented_consistent(o, c)?,
        ColoringKind::OrientedConsistent,
    )?;
    Ok(merge_classes(&c.classes, PartKind::InOutStarForest))
}
