//! Degeneracy pipeline and the top-level partition facade.
//!
//! A `d`-degenerate graph is split equitably into three parts of
//! degeneracy at most `d - 1`, each part is split again, and so on down to
//! forests: `3^(d-1)` equitable induced forests in total, which the
//! extension loop then lifts to any larger `k`.
//!
//! The three-way split sits behind [`kdeg_split`]: an exhaustive search for
//! small graphs and a repair heuristic above the cap. Every split is
//! verified before it is used, and a heuristic that runs out of budget
//! reports [`Error::HeuristicFailure`] instead of returning a bad split.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::verify_partition;
use crate::coloring::{
    exact_coloring, greedy_acyclic, greedy_star, Coloring, ColoringKind, DEFAULT_EXACT_CAP,
};
use crate::error::Error;
use crate::extend::{extend_partition, ColoringMergeOracle, PartitionOracle};
use crate::graph::{degeneracy, induced_subgraph, Graph, VertexSet};
use crate::masks::{EquitableSearch, SearchResult};
use crate::merge::MergeMode;
use crate::partition::{equitable_profile, PartKind, Partition};

/// Default vertex cap for the exhaustive splitter.
pub const DEFAULT_SPLIT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitterConfig {
    /// Largest `n` split by exhaustive search (at most 64).
    pub exact_cap: usize,
    /// Node budget of the exhaustive search.
    pub exact_node_budget: u64,
    /// Number of candidate moves the repair heuristic may evaluate.
    pub heuristic_budget: usize,
    pub seed: u64,
}

impl Default for SplitterConfig {
    fn default() -> Self {
        SplitterConfig {
            exact_cap: DEFAULT_SPLIT_CAP,
            exact_node_budget: 50_000_000,
            heuristic_budget: 200_000,
            seed: 0,
        }
    }
}

/// Residual core of `part` after peeling vertices of degree `<= bound`.
fn core_size(
    g: &Graph,
    part_of: &[usize],
    part: usize,
    bound: usize,
    scratch: &mut Vec<usize>,
) -> usize {
    let members: Vec<usize> = g.vertices().filter(|&v| part_of[v] == part).collect();
    scratch.clear();
    scratch.resize(g.n(), 0);
    let mut stack = Vec::new();
    for &v in &members {
        scratch[v] = g
            .neighbors(v)
            .iter()
            .filter(|&&w| part_of[w] == part)
            .count()
            + 1;
        if scratch[v] <= bound + 1 {
            stack.push(v);
        }
    }
    // scratch[v] = degree + 1 while alive, 0 once peeled
    let mut peeled = 0;
    while let Some(v) = stack.pop() {
        if scratch[v] == 0 {
            continue;
        }
        scratch[v] = 0;
        peeled += 1;
        for &w in g.neighbors(v) {
            if part_of[w] == part && scratch[w] > 0 {
                scratch[w] -= 1;
                if scratch[w] == bound + 1 {
                    stack.push(w);
                }
            }
        }
    }
    members.len() - peeled
}

fn core_members(g: &Graph, part_of: &[usize], part: usize, bound: usize) -> Vec<usize> {
    let set: VertexSet = g.vertices().filter(|&v| part_of[v] == part).collect();
    match crate::certify::is_degenerate(g, &set, bound).expect("in range") {
        crate::certify::Verdict::Accept => Vec::new(),
        crate::certify::Verdict::Reject(crate::certify::Witness::Core { vertices }) => vertices,
        crate::certify::Verdict::Reject(_) => unreachable!("degeneracy rejections carry a core"),
    }
}

struct Repair<'a> {
    g: &'a Graph,
    bound: usize,
    k: usize,
    part_of: Vec<usize>,
    sizes: Vec<usize>,
    cores: Vec<usize>,
    scratch: Vec<usize>,
    evaluated: usize,
}

impl Repair<'_> {
    fn total(&self) -> usize {
        self.cores.iter().sum()
    }

    fn recompute(&mut self, a: usize, b: usize) -> (usize, usize) {
        let ca = core_size(self.g, &self.part_of, a, self.bound, &mut self.scratch);
        let cb = core_size(self.g, &self.part_of, b, self.bound, &mut self.scratch);
        (ca, cb)
    }

    /// Applies the reassignment, keeps it if the total drops (or `force`),
    /// otherwise undoes it.
    fn attempt(&mut self, moves: &[(usize, usize)], a: usize, b: usize, force: bool) -> bool {
        self.evaluated += 1;
        let before = self.total();
        let old: Vec<(usize, usize)> = moves.iter().map(|&(v, _)| (v, self.part_of[v])).collect();
        for &(v, to) in moves {
            self.part_of[v] = to;
        }
        let (ca, cb) = self.recompute(a, b);
        let after = before - self.cores[a] - self.cores[b] + ca + cb;
        if after < before || force {
            self.cores[a] = ca;
            self.cores[b] = cb;
            for (&(_, to), &(_, from)) in moves.iter().zip(&old) {
                self.sizes[from] -= 1;
                self.sizes[to] += 1;
            }
            true
        } else {
            for (v, from) in old {
                self.part_of[v] = from;
            }
            false
        }
    }

    /// First strictly improving move or swap touching a core vertex,
    /// scanning candidates by increasing vertex index.
    fn improve(&mut self, budget: usize) -> bool {
        let mut violators: Vec<usize> = (0..self.k)
            .flat_map(|p| core_members(self.g, &self.part_of, p, self.bound))
            .collect();
        violators.sort_unstable();
        for v in violators {
            let a = self.part_of[v];
            for b in (0..self.k).filter(|&b| b != a) {
                if self.evaluated >= budget {
                    return false;
                }
                if self.sizes[a] == self.sizes[b] + 1 && self.attempt(&[(v, b)], a, b, false) {
                    return true;
                }
                let others: Vec<usize> = self
                    .g
                    .vertices()
                    .filter(|&u| self.part_of[u] == b)
                    .collect();
                for u in others {
                    if self.evaluated >= budget {
                        return false;
                    }
                    if self.attempt(&[(v, b), (u, a)], a, b, false) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Greedy split in reverse degeneracy order followed by local repair.
fn heuristic_split(
    g: &Graph,
    bound: usize,
    k: usize,
    cfg: &SplitterConfig,
) -> Result<Vec<usize>, Error> {
    let n = g.n();
    let capacity = equitable_profile(n, k);
    let mut part_of = vec![usize::MAX; n];
    let mut sizes = vec![0; k];
    let mut next = 0;
    for v in degeneracy(g).order.into_iter().rev() {
        let back = |p: usize| g.neighbors(v).iter().filter(|&&w| part_of[w] == p).count();
        let open: Vec<usize> = (0..k)
            .map(|i| (next + i) % k)
            .filter(|&p| sizes[p] < capacity[p])
            .collect();
        let p = open
            .iter()
            .copied()
            .find(|&p| back(p) <= bound)
            .or_else(|| open.iter().copied().min_by_key(|&p| back(p)))
            .expect("capacities sum to n");
        part_of[v] = p;
        sizes[p] += 1;
        next = (p + 1) % k;
    }
    let mut scratch = Vec::new();
    let cores = (0..k)
        .map(|p| core_size(g, &part_of, p, bound, &mut scratch))
        .collect();
    let mut repair = Repair {
        g,
        bound,
        k,
        part_of,
        sizes,
        cores,
        scratch,
        evaluated: 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while repair.total() > 0 {
        if repair.evaluated >= cfg.heuristic_budget {
            return Err(Error::HeuristicFailure {
                violations: repair.total(),
                evaluated: repair.evaluated,
            });
        }
        if repair.improve(cfg.heuristic_budget) {
            continue;
        }
        // stuck in a local minimum: swap a core vertex with a random vertex
        // of another part
        let violators: Vec<usize> = (0..k)
            .flat_map(|p| core_members(g, &repair.part_of, p, bound))
            .collect();
        let v = violators[rng.gen_range(0..violators.len())];
        let a = repair.part_of[v];
        let b = (a + rng.gen_range(1..k)) % k;
        let others: Vec<usize> = g.vertices().filter(|&u| repair.part_of[u] == b).collect();
        if others.is_empty() {
            return Err(Error::HeuristicFailure {
                violations: repair.total(),
                evaluated: repair.evaluated,
            });
        }
        let u = others[rng.gen_range(0..others.len())];
        repair.attempt(&[(v, b), (u, a)], a, b, true);
    }
    Ok(repair.part_of)
}

fn exhaustive_split(
    g: &Graph,
    bound: usize,
    k: usize,
    cfg: &SplitterConfig,
) -> Result<Vec<usize>, Error> {
    // search in reverse degeneracy order: every vertex then has at most d
    // earlier neighbors, so most branches succeed at once
    let order: Vec<usize> = degeneracy(g).order.into_iter().rev().collect();
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let relabeled = Graph::from_edges(g.n(), g.edges().map(|(u, v)| (position[u], position[v])))?;
    let adj = relabeled.adjacency_masks();
    let mut search = EquitableSearch::new(
        &adj,
        PartKind::Degenerate(bound),
        equitable_profile(g.n(), k),
        cfg.exact_node_budget,
    );
    match search.run() {
        SearchResult::Found(parts) => {
            let mut part_of = vec![0; g.n()];
            for (p, mask) in parts.into_iter().enumerate() {
                for i in crate::masks::bits(mask) {
                    part_of[order[i]] = p;
                }
            }
            Ok(part_of)
        }
        SearchResult::Exhausted => Err(Error::NoRoute(format!(
            "no equitable split into {k} parts of degeneracy <= {bound} exists"
        ))),
        SearchResult::OutOfBudget => Err(Error::BudgetExceeded {
            nodes: search.nodes,
        }),
    }
}

/// Equitable partition of a graph of degeneracy at most `d` into `k` parts
/// of degeneracy at most `d - 1` (`d >= 2`, `k >= 3`).
///
/// Exhaustive when `n <= cfg.exact_cap`, heuristic otherwise; the result is
/// verified either way.
pub fn kdeg_split(g: &Graph, d: usize, k: usize, cfg: &SplitterConfig) -> Result<Partition, Error> {
    if d < 2 || k < 3 {
        return Err(Error::InvalidParameter(format!(
            "splitting needs d >= 2 and k >= 3, got d = {d}, k = {k}"
        )));
    }
    let actual = degeneracy(g).d;
    if actual > d {
        return Err(Error::DegeneracyTooHigh { actual, claimed: d });
    }
    let bound = d - 1;
    let part_of = if g.n() <= cfg.exact_cap.min(64) {
        exhaustive_split(g, bound, k, cfg)?
    } else {
        heuristic_split(g, bound, k, cfg)?
    };
    let mut parts = vec![Vec::new(); k];
    for (v, &p) in part_of.iter().enumerate() {
        parts[p].push(v);
    }
    let p = Partition::new(
        PartKind::Degenerate(bound),
        parts.into_iter().map(VertexSet::from).collect(),
    );
    let report = verify_partition(g, &p);
    if !report.is_valid() {
        return Err(Error::HeuristicFailure {
            violations: report.violations.len(),
            evaluated: 0,
        });
    }
    Ok(p)
}

/// Equitable partition into exactly `3^(d-1)` induced forests of a graph of
/// degeneracy at most `d`.
pub fn forests_from_degenerate(
    g: &Graph,
    d: usize,
    cfg: &SplitterConfig,
) -> Result<Partition, Error> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let actual = degeneracy(g).d;
    if actual > d {
        return Err(Error::DegeneracyTooHigh { actual, claimed: d });
    }
    if d == 1 {
        return Ok(Partition::new(
            PartKind::Forest,
            vec![VertexSet::full(g.n())],
        ));
    }
    let split = kdeg_split(g, d, 3, cfg)?;
    let mut parts = Vec::with_capacity(3usize.pow(d as u32 - 1));
    for part in split.parts() {
        let sub = induced_subgraph(g, part)?;
        let inner = forests_from_degenerate(&sub.graph, d - 1, cfg)?;
        parts.extend(inner.lift(&sub.original).into_parts());
    }
    let p = Partition::new(PartKind::Forest, parts);
    if !p.is_equitable() {
        let sizes = p.sizes();
        return Err(Error::EquitabilityDrift {
            min: sizes.iter().copied().min().unwrap_or(0),
            max: sizes.iter().copied().max().unwrap_or(0),
        });
    }
    Ok(p)
}

/// `3^(d-1)` forests per call, via [`forests_from_degenerate`].
#[derive(Clone, Debug)]
pub struct DegenerateOracle {
    pub d: usize,
    pub cfg: SplitterConfig,
}

impl PartitionOracle for DegenerateOracle {
    fn parts(&self) -> usize {
        3usize.pow(self.d as u32 - 1)
    }

    fn partition(&self, g: &Graph, _original: &[usize]) -> Result<Partition, Error> {
        forests_from_degenerate(g, self.d, &self.cfg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Acyclic (or star) coloring with at most `k + 1` classes, merged.
    ViaAcyclic,
    /// `3^(d-1)` forests from the degeneracy, extended.
    ViaDegeneracy,
    /// Whichever applicable route needs fewer base parts.
    Auto,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::ViaAcyclic => "via_acyclic",
            Strategy::ViaDegeneracy => "via_degeneracy",
            Strategy::Auto => "auto",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "via_acyclic" => Ok(Strategy::ViaAcyclic),
            "via_degeneracy" => Ok(Strategy::ViaDegeneracy),
            "auto" => Ok(Strategy::Auto),
            other => Err(Error::InvalidParameter(format!(
                "unknown strategy {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteConfig {
    pub splitter: SplitterConfig,
    /// Largest `n` handed to the exact coloring solver.
    pub coloring_cap: usize,
}

impl Default for RouteConfig {
    fn default() -> Self {
        RouteConfig {
            splitter: SplitterConfig::default(),
            coloring_cap: DEFAULT_EXACT_CAP,
        }
    }
}

impl RouteConfig {
    /// Same cap for the exact coloring solver and the exhaustive splitter.
    pub fn with_exact_cap(mut self, cap: usize) -> Self {
        self.coloring_cap = cap;
        self.splitter.exact_cap = cap;
        self
    }
}

/// A partition and the route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Routed {
    pub partition: Partition,
    pub route: Strategy,
}

fn coloring_for(
    g: &Graph,
    k: usize,
    mode: MergeMode,
    cap: usize,
) -> Result<Option<Coloring>, Error> {
    let (greedy, kind) = match mode {
        MergeMode::Acyclic => (greedy_acyclic(g), ColoringKind::Acyclic),
        MergeMode::Star => (greedy_star(g), ColoringKind::Star),
    };
    let mut coloring = if greedy.class_count() <= k + 1 {
        greedy
    } else if g.n() <= cap {
        match exact_coloring(g, kind, k + 1, cap)? {
            Some(c) => c,
            None => return Ok(None),
        }
    } else {
        return Ok(None);
    };
    while coloring.class_count() < 2 {
        coloring.classes.push(VertexSet::new());
    }
    Ok(Some(coloring))
}

fn degeneracy_base(g: &Graph) -> (usize, Option<usize>) {
    let d = degeneracy(g).d.max(1);
    let base = u32::try_from(d - 1)
        .ok()
        .and_then(|e| 3usize.checked_pow(e));
    (d, base)
}

/// Equitable partition into `k` parts of `kind` (forest or star forest).
pub fn equitable_partition(
    g: &Graph,
    k: usize,
    kind: PartKind,
    strategy: Strategy,
    cfg: &RouteConfig,
) -> Result<Routed, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mode = match kind {
        PartKind::Forest => MergeMode::Acyclic,
        PartKind::StarForest => MergeMode::Star,
        other => {
            return Err(Error::UnsupportedKind(format!(
                "no constructive route to {other} parts"
            )))
        }
    };
    let coloring_route = |coloring: Coloring| -> Result<Routed, Error> {
        let oracle = ColoringMergeOracle::new(coloring, mode)?;
        let partition = extend_partition(g, &oracle, k)?;
        Ok(Routed {
            partition,
            route: Strategy::ViaAcyclic,
        })
    };
    let degeneracy_route = |d: usize| -> Result<Routed, Error> {
        let oracle = DegenerateOracle {
            d,
            cfg: cfg.splitter.clone(),
        };
        let partition = extend_partition(g, &oracle, k)?;
        Ok(Routed {
            partition,
            route: Strategy::ViaDegeneracy,
        })
    };
    let no_coloring = || {
        Error::NoRoute(format!(
            "no {} coloring with at most {} colors was found",
            mode.part_kind(),
            k + 1
        ))
    };
    let below_threshold = |d: usize| {
        Error::NoRoute(format!(
            "degeneracy {d} needs k >= 3^{}, got k = {k}",
            d - 1
        ))
    };
    match strategy {
        Strategy::ViaAcyclic => {
            let coloring = coloring_for(g, k, mode, cfg.coloring_cap)?.ok_or_else(no_coloring)?;
            coloring_route(coloring)
        }
        Strategy::ViaDegeneracy => {
            if kind != PartKind::Forest {
                return Err(Error::NoRoute(
                    "the degeneracy route only yields forests".into(),
                ));
            }
            let (d, base) = degeneracy_base(g);
            match base {
                Some(b) if b <= k => degeneracy_route(d),
                _ => Err(below_threshold(d)),
            }
        }
        Strategy::Auto => {
            let coloring = coloring_for(g, k, mode, cfg.coloring_cap)?;
            let (d, base) = degeneracy_base(g);
            let degeneracy_base = base.filter(|&b| b <= k && kind == PartKind::Forest);
            let acyclic_base = coloring.as_ref().map(|c| c.class_count() - 1);
            let acyclic_first = match (acyclic_base, degeneracy_base) {
                (Some(a), Some(b)) => a <= b,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => return Err(Error::NoRoute(format!(
                    "no acyclic coloring with at most {} colors and degeneracy {d} needs k >= 3^{}",
                    k + 1,
                    d - 1
                ))),
            };
            let first = if acyclic_first {
                coloring_route(coloring.clone().expect("checked"))
            } else {
                degeneracy_route(d)
            };
            match first {
                Err(Error::HeuristicFailure { .. } | Error::BudgetExceeded { .. })
                    if acyclic_first && degeneracy_base.is_some() =>
                {
                    degeneracy_route(d)
                }
                Err(Error::HeuristicFailure { .. } | Error::BudgetExceeded { .. })
                    if !acyclic_first && coloring.is_some() =>
                {
                    coloring_route(coloring.expect("checked"))
                }
                other => other,
            }
        }
    }
}

/// Equitable partition of `g` into `k` induced forests.
pub fn equitable_forests(
    g: &Graph,
    k: usize,
    strategy: Strategy,
    cfg: &RouteConfig,
) -> Result<Partition, Error> {
    equitable_partition(g, k, PartKind::Forest, strategy, cfg).map(|r| r.partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::is_forest;
    use crate::generate;

    fn cfg() -> SplitterConfig {
        SplitterConfig::default()
    }

    #[test]
    fn split_k4() {
        let k4 = generate::complete(4);
        let p = kdeg_split(&k4, 3, 3, &cfg()).unwrap();
        assert_eq!(p.sizes(), vec![2, 1, 1]);
        assert_eq!(p.part_kind(), PartKind::Degenerate(2));
    }

    #[test]
    fn split_c5_into_acyclic_parts() {
        let c5 = generate::cycle(5).unwrap();
        let p = kdeg_split(&c5, 2, 3, &cfg()).unwrap();
        assert_eq!(p.sizes(), vec![2, 2, 1]);
        for part in p.parts() {
            assert!(is_forest(&c5, part).unwrap().is_accept());
        }
    }

    #[test]
    fn split_rejects_bad_parameters() {
        let k4 = generate::complete(4);
        assert!(matches!(
            kdeg_split(&k4, 2, 3, &cfg()),
            Err(Error::DegeneracyTooHigh {
                actual: 3,
                claimed: 2
            })
        ));
        assert!(matches!(
            kdeg_split(&k4, 3, 2, &cfg()),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            kdeg_split(&k4, 1, 3, &cfg()),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn exhaustive_split_of_random_2_degenerate() {
        let g = generate::random_d_degenerate(18, 2, 5).unwrap();
        let p = kdeg_split(&g, 2, 3, &cfg()).unwrap();
        assert_eq!(p.sizes(), vec![6, 6, 6]);
        for part in p.parts() {
            assert!(is_forest(&g, part).unwrap().is_accept());
        }
    }

    #[test]
    fn heuristic_split_matches_contract() {
        let small_cap = SplitterConfig {
            exact_cap: 0,
            ..cfg()
        };
        for seed in 0..5 {
            let g = generate::random_d_degenerate(60, 2, seed).unwrap();
            let p = kdeg_split(&g, 2, 3, &small_cap).unwrap();
            assert_eq!(p.sizes(), vec![20, 20, 20]);
            assert!(verify_partition(&g, &p).is_valid());
        }
    }

    #[test]
    fn forests_from_degenerate_counts() {
        let tree = generate::random_d_degenerate(20, 1, 1).unwrap();
        let p = forests_from_degenerate(&tree, 1, &cfg()).unwrap();
        assert_eq!(p.parts(), &[VertexSet::full(20)]);

        let g = generate::random_d_degenerate(60, 2, 3).unwrap();
        let p = forests_from_degenerate(&g, 2, &cfg()).unwrap();
        assert_eq!(p.sizes(), vec![20, 20, 20]);
        assert!(verify_partition(&g, &p).is_valid());

        let g = generate::random_d_degenerate(27, 3, 3).unwrap();
        let p = forests_from_degenerate(&g, 3, &cfg()).unwrap();
        assert_eq!(p.len(), 9);
        assert!(verify_partition(&g, &p).is_valid());

        assert!(matches!(
            forests_from_degenerate(&generate::complete(5), 3, &cfg()),
            Err(Error::DegeneracyTooHigh { .. })
        ));
    }

    #[test]
    fn facade_examples() {
        let rc = RouteConfig::default();
        let c5 = generate::cycle(5).unwrap();
        let p = equitable_forests(&c5, 2, Strategy::ViaAcyclic, &rc).unwrap();
        assert_eq!(p.size_profile(), vec![2, 3]);
        assert!(verify_partition(&c5, &p).is_valid());

        let k4 = generate::complete(4);
        let p = equitable_forests(&k4, 4, Strategy::Auto, &rc).unwrap();
        assert_eq!(p.sizes(), vec![1, 1, 1, 1]);
        assert!(matches!(
            equitable_forests(&k4, 1, Strategy::Auto, &rc),
            Err(Error::NoRoute(_))
        ));
        assert!(matches!(
            equitable_forests(&k4, 1, Strategy::ViaDegeneracy, &rc),
            Err(Error::NoRoute(_))
        ));

        let t = generate::stacked_triangulation(60, 4).unwrap();
        let p = equitable_forests(&t, 9, Strategy::ViaDegeneracy, &rc).unwrap();
        assert_eq!(p.len(), 9);
        assert!(verify_partition(&t, &p).is_valid());
    }

    #[test]
    fn star_forest_route() {
        let g = generate::stacked_triangulation(14, 2).unwrap();
        let r = equitable_partition(
            &g,
            12,
            PartKind::StarForest,
            Strategy::Auto,
            &RouteConfig::default(),
        )
        .unwrap();
        assert_eq!(r.route, Strategy::ViaAcyclic);
        assert_eq!(r.partition.part_kind(), PartKind::StarForest);
        assert!(verify_partition(&g, &r.partition).is_valid());
        assert!(matches!(
            equitable_partition(
                &g,
                12,
                PartKind::StarForest,
                Strategy::ViaDegeneracy,
                &RouteConfig::default()
            ),
            Err(Error::NoRoute(_))
        ));
    }

    #[test]
    fn strategy_names() {
        for s in [
            Strategy::Auto,
            Strategy::ViaAcyclic,
            Strategy::ViaDegeneracy,
        ] {
            assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
    }
}
