//! Independent verification predicates and the serialized certificate.
//!
//! Everything here works on the plain [`Graph`] adjacency lists and a
//! union-find, and shares no code with the constructive algorithms or the
//! bitmask searches, so a certificate check is a genuinely separate route.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::formats::{write_arc_list, write_graph6};
use crate::graph::{induced_subgraph, Graph, Induced, Orientation, VertexSet};
use crate::partition::{PartKind, Partition};

/// Evidence attached to a rejection. Vertex labels refer to the graph the
/// check was run on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// An edge inside a set that should be stable, or inside one color class.
    Edge { u: usize, v: usize },
    /// A cycle, listed in traversal order.
    Cycle { vertices: Vec<usize> },
    /// A path on four vertices using only two colors.
    Path { vertices: Vec<usize> },
    /// A component that is not a star (or not a path).
    Component { vertices: Vec<usize> },
    /// Two arcs that point in opposite directions where they must agree.
    ArcConflict {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Vertices left after peeling everything of degree at most the bound.
    Core { vertices: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[must_use]
pub enum Verdict {
    Accept,
    Reject(Witness),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(w) => Some(w),
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// A cycle of `g`, if any: the first edge that closes a cycle under
/// union-find, completed by the tree path between its endpoints.
pub(crate) fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut uf = UnionFind::new(g.n());
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        if uf.union(u, v) {
            tree[u].push(v);
            tree[v].push(u);
            continue;
        }
        // BFS from v to u over the spanning forest built so far
        let mut prev = vec![usize::MAX; g.n()];
        prev[v] = v;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if x == u {
                break;
            }
            for &y in &tree[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut cycle = vec![u];
        let mut x = u;
        while x != v {
            x = prev[x];
            cycle.push(x);
        }
        return Some(cycle);
    }
    None
}

fn component_of(g: &Graph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for &w in g.neighbors(out[i]) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

fn induce(g: &Graph, s: &VertexSet) -> Result<Induced, Error> {
    induced_subgraph(g, s).map_err(|_| Error::VertexOutOfRange {
        vertex: s.out_of_range(g.n()).unwrap_or_default(),
        n: g.n(),
    })
}

fn lift(original: &[usize], vertices: Vec<usize>) -> Vec<usize> {
    vertices.into_iter().map(|v| original[v]).collect()
}

fn forest_verdict(sub: &Induced) -> Option<Witness> {
    find_cycle(&sub.graph).map(|c| Witness::Cycle {
        vertices: lift(&sub.original, c),
    })
}

fn star_verdict(sub: &Induced) -> Option<Witness> {
    if let Some(w) = forest_verdict(sub) {
        return Some(w);
    }
    // in a forest, a component with two vertices of degree >= 2 has an
    // edge joining two such vertices
    let h = &sub.graph;
    h.edges()
        .find(|&(u, v)| h.degree(u) >= 2 && h.degree(v) >= 2)
        .map(|(u, _)| Witness::Component {
            vertices: lift(&sub.original, component_of(h, u)),
        })
}

/// Accepts iff `s` induces a forest (no cycle); witnesses a cycle.
pub fn is_forest(g: &Graph, s: &VertexSet) -> Result<Verdict, Error> {
    let sub = induce(g, s)?;
    Ok(forest_verdict(&sub).map_or(Verdict::Accept, Verdict::Reject))
}

/// Accepts iff `s` induces a forest in which every component has at most one
/// vertex of degree two or more.
pub fn is_star_forest(g: &Graph, s: &VertexSet) -> Result<Verdict, Error> {
    let sub = induce(g, s)?;
    Ok(star_verdict(&sub).map_or(Verdict::Accept, Verdict::Reject))
}

/// Accepts iff `s` induces a forest of maximum degree at most two.
pub fn is_linear_forest(g: &Graph, s: &VertexSet) -> Result<Verdict, Error> {
    let sub = induce(g, s)?;
    if let Some(w) = forest_verdict(&sub) {
        return Ok(Verdict::Reject(w));
    }
    let h = &sub.graph;
    Ok(match h.vertices().find(|&v| h.degree(v) > 2) {
        Some(v) => Verdict::Reject(Witness::Component {
            vertices: lift(&sub.original, component_of(h, v)),
        }),
        None => Verdict::Accept,
    })
}

pub fn is_stable_set(g: &Graph, s: &VertexSet) -> Result<Verdict, Error> {
    let sub = induce(g, s)?;
    let edge = sub.graph.edges().next();
    Ok(match edge {
        Some((u, v)) => Verdict::Reject(Witness::Edge {
            u: sub.original[u],
            v: sub.original[v],
        }),
        None => Verdict::Accept,
    })
}

/// Accepts iff every subgraph of `g[s]` has a vertex of degree at most `d`,
/// checked by peeling; witnesses the nonempty core that survives.
pub fn is_degenerate(g: &Graph, s: &VertexSet, d: usize) -> Result<Verdict, Error> {
    let sub = induce(g, s)?;
    let h = &sub.graph;
    let mut deg: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    let mut gone = vec![false; h.n()];
    let mut stack: Vec<usize> = h.vertices().filter(|&v| deg[v] <= d).collect();
    while let Some(v) = stack.pop() {
        if gone[v] {
            continue;
        }
        gone[v] = true;
        for &w in h.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                if deg[w] == d {
                    stack.push(w);
                }
            }
        }
    }
    let core: Vec<usize> = h.vertices().filter(|&v| !gone[v]).collect();
    Ok(if core.is_empty() {
        Verdict::Accept
    } else {
        Verdict::Reject(Witness::Core {
            vertices: lift(&sub.original, core),
        })
    })
}

/// Accepts iff `s` induces a star forest in which every star is an
/// out-star or an in-star. Single vertices and single arcs always qualify.
pub fn is_in_out_star_forest(o: &Orientation, s: &VertexSet) -> Result<Verdict, Error> {
    let sub = induce(o.base(), s)?;
    if let Some(w) = star_verdict(&sub) {
        return Ok(Verdict::Reject(w));
    }
    let original = &sub.original;
    let h = &sub.graph;
    for c in h.vertices().filter(|&c| h.degree(c) >= 2) {
        let center = original[c];
        let outward = h
            .neighbors(c)
            .iter()
            .map(|&x| original[x])
            .find(|&x| o.has_arc(center, x));
        let inward = h
            .neighbors(c)
            .iter()
            .map(|&x| original[x])
            .find(|&x| o.has_arc(x, center));
        if let (Some(a), Some(b)) = (outward, inward) {
            return Ok(Verdict::Reject(Witness::ArcConflict {
                first: (center, a),
                second: (b, center),
            }));
        }
    }
    Ok(Verdict::Accept)
}

/// Dispatches to the predicate for `kind` on an undirected graph.
pub fn part_verdict(g: &Graph, s: &VertexSet, kind: PartKind) -> Result<Verdict, Error> {
    match kind {
        PartKind::Forest => is_forest(g, s),
        PartKind::StarForest => is_star_forest(g, s),
        PartKind::LinearForest => is_linear_forest(g, s),
        PartKind::StableSet => is_stable_set(g, s),
        PartKind::Degenerate(d) => is_degenerate(g, s, d),
        PartKind::InOutStarForest => Err(Error::UnsupportedKind(
            "in_out_star_forest needs an orientation".into(),
        )),
    }
}

/// One failed check of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange {
        vertex: usize,
        part: usize,
    },
    Overlap {
        vertex: usize,
        first_part: usize,
        second_part: usize,
    },
    Uncovered {
        vertex: usize,
    },
    Inequitable {
        min: usize,
        max: usize,
    },
    Part {
        part: usize,
        kind: PartKind,
        witness: Witness,
    },
    OrientationRequired,
    GraphHashMismatch {
        expected: String,
        actual: String,
    },
    PartCountMismatch {
        declared: usize,
        actual: usize,
    },
}

impl Violation {
    /// Name of the violated predicate.
    pub fn predicate(&self) -> &'static str {
        match self {
            Violation::VertexOutOfRange { .. } => "range",
            Violation::Overlap { .. } => "disjointness",
            Violation::Uncovered { .. } => "cover",
            Violation::Inequitable { .. } => "equitability",
            Violation::Part { .. } | Violation::OrientationRequired => "part_kind",
            Violation::GraphHashMismatch { .. } => "graph_hash",
            Violation::PartCountMismatch { .. } => "part_count",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { vertex, part } => {
                write!(
                    f,
                    "range: vertex {vertex} in part {part} is not a vertex of the graph"
                )
            }
            Violation::Overlap {
                vertex,
                first_part,
                second_part,
            } => write!(
                f,
                "disjointness: vertex {vertex} appears in parts {first_part} and {second_part}"
            ),
            Violation::Uncovered { vertex } => write!(f, "cover: vertex {vertex} is in no part"),
            Violation::Inequitable { min, max } => {
                write!(f, "equitability: part sizes range from {min} to {max}")
            }
            Violation::Part {
                part,
                kind,
                witness,
            } => {
                write!(f, "part_kind: part {part} is not a {kind}: {witness:?}")
            }
            Violation::OrientationRequired => {
                f.write_str("part_kind: in_out_star_forest parts need an orientation")
            }
            Violation::GraphHashMismatch { expected, actual } => {
                write!(
                    f,
                    "graph_hash: certificate names {expected}, graph hashes to {actual}"
                )
            }
            Violation::PartCountMismatch { declared, actual } => {
                write!(f, "part_count: k = {declared} but {actual} parts listed")
            }
        }
    }
}

/// Every violated predicate of a partition; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionReport {
    pub violations: Vec<Violation>,
}

impl PartitionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for PartitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        let lines: Vec<String> = self.violations.iter().map(Violation::to_string).collect();
        f.write_str(&lines.join("; "))
    }
}

fn check_parts<P, F>(n: usize, kind: PartKind, parts: &[P], mut verdict: F) -> PartitionReport
where
    P: AsRef<[usize]>,
    F: FnMut(&VertexSet) -> Result<Verdict, Error>,
{
    let mut violations = Vec::new();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part.as_ref() {
            if v >= n {
                violations.push(Violation::VertexOutOfRange { vertex: v, part: i });
            } else if owner[v] != usize::MAX {
                violations.push(Violation::Overlap {
                    vertex: v,
                    first_part: owner[v],
                    second_part: i,
                });
            } else {
                owner[v] = i;
            }
        }
    }
    violations.extend(
        owner
            .iter()
            .enumerate()
            .filter(|(_, &o)| o == usize::MAX)
            .map(|(v, _)| Violation::Uncovered { vertex: v }),
    );
    let sizes: Vec<usize> = parts.iter().map(|p| p.as_ref().len()).collect();
    if let (Some(&min), Some(&max)) = (sizes.iter().min(), sizes.iter().max()) {
        if max - min > 1 {
            violations.push(Violation::Inequitable { min, max });
        }
    }
    for (i, part) in parts.iter().enumerate() {
        let set: VertexSet = part.as_ref().iter().copied().filter(|&v| v < n).collect();
        match verdict(&set) {
            Ok(Verdict::Accept) => {}
            Ok(Verdict::Reject(witness)) => violations.push(Violation::Part {
                part: i,
                kind,
                witness,
            }),
            Err(_) => {
                violations.push(Violation::OrientationRequired);
                break;
            }
        }
    }
    PartitionReport { violations }
}

/// Checks disjointness, cover, equitability and the part predicate.
pub fn verify_partition(g: &Graph, p: &Partition) -> PartitionReport {
    let parts: Vec<&[usize]> = p.parts().iter().map(VertexSet::as_slice).collect();
    check_parts(g.n(), p.part_kind(), &parts, |s| {
        part_verdict(g, s, p.part_kind())
    })
}

/// [`verify_partition`] on an orientation, which also supports
/// [`PartKind::InOutStarForest`].
pub fn verify_partition_oriented(o: &Orientation, p: &Partition) -> PartitionReport {
    let parts: Vec<&[usize]> = p.parts().iter().map(VertexSet::as_slice).collect();
    verify_oriented_parts(o, p.part_kind(), &parts)
}

fn verify_oriented_parts<P: AsRef<[usize]>>(
    o: &Orientation,
    kind: PartKind,
    parts: &[P],
) -> PartitionReport {
    check_parts(o.n(), kind, parts, |s| match kind {
        PartKind::InOutStarForest => is_in_out_star_forest(o, s),
        other => part_verdict(o.base(), s, other),
    })
}

/// SHA-256 of the graph6 encoding, as lowercase hex.
pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(write_graph6(g).as_bytes()))
}

/// SHA-256 of the base graph's graph6 encoding, a newline, then the arc list.
pub fn orientation_hash(o: &Orientation) -> String {
    let mut text = write_graph6(o.base());
    text.push('\n');
    text.push_str(&write_arc_list(o));
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// A labeled partition bound to the graph it partitions.
///
/// The verdict is never stored: [`Certificate::verify`] recomputes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph_hash: String,
    pub k: usize,
    pub part_kind: PartKind,
    pub parts: Vec<Vec<usize>>,
    pub producer: String,
}

impl Certificate {
    pub fn new(g: &Graph, p: &Partition, producer: impl Into<String>) -> Self {
        Self::with_hash(graph_hash(g), p, producer.into())
    }

    pub fn for_orientation(o: &Orientation, p: &Partition, producer: impl Into<String>) -> Self {
        Self::with_hash(orientation_hash(o), p, producer.into())
    }

    fn with_hash(graph_hash: String, p: &Partition, producer: String) -> Self {
        Certificate {
            graph_hash,
            k: p.len(),
            part_kind: p.part_kind(),
            parts: p.parts().iter().map(|s| s.as_slice().to_vec()).collect(),
            producer,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    fn header_violations(&self, actual_hash: String) -> Vec<Violation> {
        let mut violations = Vec::new();
        if self.graph_hash != actual_hash {
            violations.push(Violation::GraphHashMismatch {
                expected: self.graph_hash.clone(),
                actual: actual_hash,
            });
        }
        if self.k != self.parts.len() {
            violations.push(Violation::PartCountMismatch {
                declared: self.k,
                actual: self.parts.len(),
            });
        }
        violations
    }

    /// Recomputes the verdict against `g`, including the hash binding.
    pub fn verify(&self, g: &Graph) -> PartitionReport {
        let mut violations = self.header_violations(graph_hash(g));
        let kind = self.part_kind;
        let body = check_parts(g.n(), kind, &self.parts, |s| part_verdict(g, s, kind));
        violations.extend(body.violations);
        PartitionReport { violations }
    }

    pub fn verify_oriented(&self, o: &Orientation) -> PartitionReport {
        let mut violations = self.header_violations(orientation_hash(o));
        violations.extend(verify_oriented_parts(o, self.part_kind, &self.parts).violations);
        PartitionReport { violations }
    }
}
