//! Simple undirected graphs over dense vertex indices, their orientations,
//! induced subgraphs and degeneracy orderings.

use std::collections::BTreeSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }
}

/// A sorted set of vertex indices without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// All vertices of a graph on `n` vertices.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// First out-of-range member, if any.
    pub fn out_of_range(&self, n: usize) -> Option<usize> {
        self.0.last().copied().filter(|&v| v >= n)
    }

    /// Index-wise membership vector for a graph on `n` vertices.
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut flags = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            flags[v] = true;
        }
        flags
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An induced subgraph together with the order-preserving relabeling.
///
/// Vertex `i` of `graph` is vertex `original[i]` of the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Induced {
    /// New index of a parent vertex, if it was kept.
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }
}

/// The subgraph induced by `keep`, relabeled to `0..keep.len()` in
/// increasing order of the original indices.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Result<Induced, GraphError> {
    let n = g.n();
    if let Some(vertex) = keep.out_of_range(n) {
        return Err(GraphError::VertexOutOfRange { vertex, n });
    }
    let mut new_index = vec![usize::MAX; n];
    for (i, v) in keep.iter().enumerate() {
        new_index[v] = i;
    }
    let mut adj = Vec::with_capacity(keep.len());
    let mut m = 0;
    for v in keep.iter() {
        // old neighbors are sorted and relabeling is monotone, so this stays sorted
        let list: Vec<usize> = g.adj[v]
            .iter()
            .map(|&w| new_index[w])
            .filter(|&w| w != usize::MAX)
            .collect();
        m += list.len();
        adj.push(list);
    }
    Ok(Induced {
        graph: Graph { adj, m: m / 2 },
        original: keep.as_slice().to_vec(),
    })
}

/// Degeneracy and the minimum-degree deletion order that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub d: usize,
    /// Deletion order: each vertex has at most `d` neighbors after it.
    pub order: Vec<usize>,
}

/// Repeatedly deletes a minimum-degree vertex (lowest index on ties).
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    Degeneracy { d, order }
}

/// An orientation of a simple graph: every edge carries one direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    out: Vec<Vec<usize>>,
}

impl Orientation {
    /// Builds an orientation from arcs `(tail, head)`. The underlying
    /// undirected graph must be simple, so antiparallel pairs are rejected.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let base = Graph::from_edges(n, arcs.iter().copied()).map_err(|e| match e {
            GraphError::DuplicateEdge(u, v) => {
                if arcs.contains(&(u, v)) && arcs.contains(&(v, u)) {
                    GraphError::AntiparallelArcs(u, v)
                } else {
                    GraphError::DuplicateEdge(u, v)
                }
            }
            other => other,
        })?;
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        Ok(Orientation { base, out })
    }

    /// Orients every edge `u < v` of `base` as `u -> v` when `forward(u, v)`
    /// holds and `v -> u` otherwise.
    pub fn from_graph(base: Graph, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = vec![Vec::new(); base.n()];
        for (u, v) in base.edges() {
            if forward(u, v) {
                out[u].push(v);
            } else {
                out[v].push(u);
            }
        }
        for list in &mut out {
            list.sort_unstable();
        }
        Orientation { base, out }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Arcs `(tail, head)` ordered by tail, then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// The induced sub-orientation, relabeled like [`induced_subgraph`].
    pub fn induced(&self, keep: &VertexSet) -> Result<(Orientation, Vec<usize>), GraphError> {
        let sub = induced_subgraph(&self.base, keep)?;
        let Induced { graph, original } = sub;
        let o = Orientation::from_graph(graph, |u, v| self.has_arc(original[u], original[v]));
        Ok((o, original))
    }
}
