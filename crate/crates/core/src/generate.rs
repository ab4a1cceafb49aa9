//! Deterministic graph families for tests, benchmarks and the CLI.
//!
//! Random families draw from a ChaCha8 stream seeded with the given `u64`,
//! so outputs are reproducible across platforms.

use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, Orientation};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits a simple graph")
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)).collect())
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Ok(build(n, edges))
}

/// The star `K_{1,n}`: center 0 joined to leaves `1..=n`.
pub fn star(n: usize) -> Graph {
    build(n + 1, (1..=n).map(|v| (0, v)).collect())
}

pub fn complete(n: usize) -> Graph {
    build(
        n,
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
    )
}

/// Path on `0..n` plus a universal vertex `n`.
pub fn fan(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.extend((0..n).map(|v| (v, n)));
    build(n + 1, edges)
}

/// Vertex `i` joins `min(d, i)` distinct earlier vertices chosen uniformly,
/// so the degeneracy is at most `d`.
pub fn random_d_degenerate(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    if d == 0 {
        return Err(GraphError::InvalidParameter("d must be at least 1".into()));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for v in 0..n {
        let picks = sample(&mut rng, v, d.min(v));
        edges.extend(picks.into_iter().map(|u| (u, v)));
    }
    Ok(build(n, edges))
}

/// Stacked (Apollonian) triangulation: start from a triangle and repeatedly
/// insert a vertex into a uniformly chosen face, joining it to the face's
/// three corners. Planar and 3-degenerate.
pub fn stacked_triangulation(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "stacked triangulation needs n >= 3, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    // both sides of the initial triangle are faces
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        edges.extend([(a, v), (b, v), (c, v)]);
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
    }
    Ok(build(n, edges))
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Orients each edge independently with a fair coin.
pub fn random_orientation(g: &Graph, seed: u64) -> Orientation {
    let mut rng = rng(seed);
    Orientation::from_graph(g.clone(), |_, _| rng.gen_bool(0.5))
}

/// Named families, as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Fan,
    RandomDegenerate,
    StackedTriangulation,
}

impl Family {
    pub fn build(self, n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
        match self {
            Family::Path => Ok(path(n)),
            Family::Cycle => cycle(n),
            Family::Star => Ok(star(n)),
            Family::Complete => Ok(complete(n)),
            Family::Fan => Ok(fan(n)),
            Family::RandomDegenerate => random_d_degenerate(n, d, seed),
            Family::StackedTriangulation => stacked_triangulation(n, seed),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            "complete" => Family::Complete,
            "fan" => Family::Fan,
            "random_d_degenerate" => Family::RandomDegenerate,
            "stacked_triangulation" => Family::StackedTriangulation,
            other => {
                return Err(GraphError::InvalidParameter(format!(
                    "unknown family {other:?}"
                )))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degeneracy;

    #[test]
    fn fixed_families() {
        let f = fan(4);
        assert_eq!((f.n(), f.edge_count(), f.degree(4)), (5, 7, 4));
        let s = star(9);
        assert_eq!((s.n(), s.edge_count(), degeneracy(&s).d), (10, 9, 1));
        assert_eq!(path(0).n(), 0);
        assert_eq!(path(1).edge_count(), 0);
        assert!(cycle(2).is_err());
        assert_eq!(complete(4).edge_count(), 6);
    }

    #[test]
    fn random_degenerate_respects_bound() {
        for seed in 0..25 {
            let g = random_d_degenerate(50, 2, seed).unwrap();
            assert!(degeneracy(&g).d <= 2);
            assert_eq!(g.edge_count(), 1 + 2 * 48);
        }
        assert!(random_d_degenerate(5, 0, 0).is_err());
        assert_eq!(
            random_d_degenerate(60, 2, 7).unwrap(),
            random_d_degenerate(60, 2, 7).unwrap()
        );
    }

    #[test]
    fn stacked_triangulation_is_maximal_planar_and_3_degenerate() {
        for seed in 0..10 {
            let g = stacked_triangulation(40, seed).unwrap();
            assert_eq!(g.edge_count(), 3 * 40 - 6);
            assert_eq!(degeneracy(&g).d, 3);
        }
        assert!(stacked_triangulation(2, 0).is_err());
    }

    #[test]
    fn orientation_covers_every_edge_once() {
        let g = gnp(15, 0.4, 3);
        let o = random_orientation(&g, 9);
        assert_eq!(o.arcs().count(), g.edge_count());
        for (u, v) in g.edges() {
            assert!(o.has_arc(u, v) ^ o.has_arc(v, u));
        }
    }
}
