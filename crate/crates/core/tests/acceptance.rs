//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p equiforest --test acceptance` (add `--release`
//! for speed). Every partition is checked twice: by the library's
//! certification and by the small local checkers below, which share no code
//! with it.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equiforest::certify::{
    is_forest, is_in_out_star_forest, is_linear_forest, is_star_forest, verify_partition,
    verify_partition_oriented,
};
use equiforest::coloring::{
    exact_chromatic, exact_coloring, exact_oriented_coloring, verify_oriented_consistent,
    ColoringKind,
};
use equiforest::extend::{extend_partition, IdentityOracle, PartitionOracle};
use equiforest::merge::{merge_partition, merge_partition_oriented, MergeMode};
use equiforest::oracle::{brute_force_equitable, SearchConfig, SearchOutcome};
use equiforest::route::{
    equitable_forests, equitable_partition, forests_from_degenerate, DegenerateOracle, RouteConfig,
    SplitterConfig, Strategy,
};
use equiforest::{generate, Error, Graph, Orientation, PartKind, Partition, VertexSet};

// Pinned thresholds. Every pass rate below is 100%: no tolerance.
const C1_MIN_GRAPHS: usize = 500;
const C1_MAX_N: usize = 16;
const C2_MIN_GRAPHS: usize = 500;
const C3_MIN_ORIENTATIONS: usize = 100;
const C3_MAX_N: usize = 12;
const C4_MAX_N: usize = 60;
const C4_K_SPAN: usize = 8;
const C5_MAX_N_D2: usize = 60;
const C5_MAX_N_D3: usize = 30;
const C6_MIN_TRIANGULATIONS: usize = 20;
const C6_MAX_N: usize = 16;
const C7_MAX_N: usize = 9;
const C8_TIME_LIMIT: Duration = Duration::from_secs(60);
const C9_PAIRS_PER_PREDICATE: usize = 10_000;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn first_failure(failures: &[String]) -> String {
    failures
        .first()
        .map(|f| format!(", first: {f}"))
        .unwrap_or_default()
}

// ---- local checkers ----

fn components(edges: &[(usize, usize)], s: &VertexSet) -> Vec<Vec<usize>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for v in s.iter() {
        if !seen.insert(v) {
            continue;
        }
        let mut comp = vec![v];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            for &(a, b) in edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

fn induced_edges(g: &Graph, s: &VertexSet) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| s.contains(u) && s.contains(v))
        .collect()
}

fn local_forest(g: &Graph, s: &VertexSet) -> bool {
    induced_edges(g, s).len() + components(&induced_edges(g, s), s).len() == s.len()
}

fn local_star_forest(g: &Graph, s: &VertexSet) -> bool {
    let edges = induced_edges(g, s);
    let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    local_forest(g, s)
        && components(&edges, s)
            .iter()
            .all(|c| c.iter().filter(|&&v| deg(v) >= 2).count() <= 1)
}

fn local_in_out_star_forest(o: &Orientation, s: &VertexSet) -> bool {
    if !local_star_forest(o.base(), s) {
        return false;
    }
    let arcs: Vec<(usize, usize)> = o
        .arcs()
        .filter(|&(u, v)| s.contains(u) && s.contains(v))
        .collect();
    s.iter().all(|c| {
        let outs = arcs.iter().filter(|a| a.0 == c).count();
        let ins = arcs.iter().filter(|a| a.1 == c).count();
        outs + ins < 2 || outs == 0 || ins == 0
    })
}

fn local_equitable(p: &Partition, n: usize) -> bool {
    let sizes = p.sizes();
    let covered: usize = sizes.iter().sum();
    let mut all: Vec<usize> = p.parts().iter().flat_map(|s| s.iter()).collect();
    all.sort_unstable();
    all.dedup();
    covered == n
        && all.len() == n
        && sizes.iter().max().unwrap_or(&0) - sizes.iter().min().unwrap_or(&0) <= 1
}

fn forests_ok(g: &Graph, p: &Partition) -> bool {
    verify_partition(g, p).is_valid()
        && local_equitable(p, g.n())
        && p.parts().iter().all(|s| local_forest(g, s))
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(3..=max_n);
    let p = rng.gen_range(0.1..0.45);
    generate::gnp(n, p, rng.gen())
}

// ---- criteria ----

fn merge_engine(kind: ColoringKind, min_graphs: usize, seed: u64) -> Outcome {
    let (mode, local): (MergeMode, fn(&Graph, &VertexSet) -> bool) = match kind {
        ColoringKind::Acyclic => (MergeMode::Acyclic, local_forest),
        _ => (MergeMode::Star, local_star_forest),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut graphs, mut colorings, mut failures) = (0, 0, Vec::new());
    while graphs < min_graphs {
        let g = random_graph(&mut rng, C1_MAX_N);
        let (chi, _) = exact_chromatic(&g, kind, C1_MAX_N).expect("within cap");
        graphs += 1;
        for k in chi.max(2)..=chi.max(2) + 2 {
            let c = exact_coloring(&g, kind, k, C1_MAX_N)
                .expect("within cap")
                .expect("monotone");
            colorings += 1;
            let p = merge_partition(&g, &c, mode).expect("valid coloring");
            let ok = p.len() == k - 1
                && verify_partition(&g, &p).is_valid()
                && local_equitable(&p, g.n())
                && p.parts().iter().all(|s| local(&g, s));
            if !ok {
                failures.push(format!("n={} k={k}", g.n()));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{graphs} graphs, {colorings} colorings, {} failures{}",
            failures.len(),
            first_failure(&failures)
        ),
    )
}

fn criterion_1() -> Outcome {
    merge_engine(ColoringKind::Acyclic, C1_MIN_GRAPHS, 1)
}

fn criterion_2() -> Outcome {
    merge_engine(ColoringKind::Star, C2_MIN_GRAPHS, 2)
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut tested, mut failures) = (0, 0);
    while tested < C3_MIN_ORIENTATIONS {
        let g = random_graph(&mut rng, C3_MAX_N);
        let o = generate::random_orientation(&g, rng.gen());
        let Some(c) =
            (2..=g.n()).find_map(|k| exact_oriented_coloring(&o, k, C3_MAX_N).expect("within cap"))
        else {
            continue;
        };
        if !verify_oriented_consistent(&o, &c).unwrap().is_accept() {
            continue;
        }
        tested += 1;
        let p = merge_partition_oriented(&o, &c).expect("consistent star coloring");
        let ok = p.len() == c.class_count() - 1
            && verify_partition_oriented(&o, &p).is_valid()
            && local_equitable(&p, g.n())
            && p.parts().iter().all(|s| {
                is_in_out_star_forest(&o, s).unwrap().is_accept() && local_in_out_star_forest(&o, s)
            });
        if !ok {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{tested} orientations, {failures} failures"),
    )
}

fn exact_profile(p: &Partition, n: usize, k: usize) -> bool {
    let (q, s) = (n / k, n % k);
    p.len() == k
        && p.sizes().iter().filter(|&&x| x == q + 1).count() == s
        && p.sizes().iter().all(|&x| x == q || x == q + 1)
}

fn criterion_4() -> Outcome {
    let (mut runs, mut failures) = (0, Vec::new());
    let mut check = |g: &Graph, oracle: &dyn PartitionOracle, label: &str| {
        let l = oracle.parts();
        for k in l..=l + C4_K_SPAN {
            runs += 1;
            match extend_partition(g, oracle, k) {
                Ok(p) if forests_ok(g, &p) && exact_profile(&p, g.n(), k) => {}
                Ok(_) => failures.push(format!("{label} k={k}: bad partition")),
                Err(e) => failures.push(format!("{label} k={k}: {e}")),
            }
        }
    };
    for seed in 0..10 {
        for n in [1, 7, 20, 41, C4_MAX_N] {
            let tree = generate::random_d_degenerate(n, 1, seed).unwrap();
            check(&tree, &IdentityOracle, &format!("tree n={n} seed={seed}"));
            let g = generate::random_d_degenerate(n, 2, seed).unwrap();
            let oracle = DegenerateOracle {
                d: 2,
                cfg: SplitterConfig {
                    seed,
                    ..SplitterConfig::default()
                },
            };
            check(&g, &oracle, &format!("2-degenerate n={n} seed={seed}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{runs} extensions, {} failures{}",
            failures.len(),
            first_failure(&failures)
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let (mut d2_runs, mut d2_heuristic_failures) = (0, 0);
    for seed in 0..20 {
        for n in [12, 18, 24, 30, 45, C5_MAX_N_D2] {
            let g = generate::random_d_degenerate(n, 2, seed).unwrap();
            let cfg = SplitterConfig {
                seed,
                ..SplitterConfig::default()
            };
            d2_runs += 1;
            match forests_from_degenerate(&g, 2, &cfg) {
                Ok(p) if p.len() == 3 && forests_ok(&g, &p) => {}
                Ok(_) => problems.push(format!("d=2 n={n} seed={seed}: bad partition")),
                Err(Error::HeuristicFailure { .. }) if n > cfg.exact_cap => {
                    d2_heuristic_failures += 1
                }
                Err(e) => problems.push(format!("d=2 n={n} seed={seed}: {e}")),
            }
        }
    }
    let mut d3_runs = 0;
    let exhaustive = SplitterConfig {
        exact_cap: C5_MAX_N_D3,
        ..SplitterConfig::default()
    };
    for seed in 0..10 {
        for n in [9, 15, 21, 27, C5_MAX_N_D3] {
            let g = generate::random_d_degenerate(n, 3, seed).unwrap();
            d3_runs += 1;
            match forests_from_degenerate(&g, 3, &exhaustive) {
                Ok(p) if p.len() == 9 && forests_ok(&g, &p) => {}
                Ok(_) => problems.push(format!("d=3 n={n} seed={seed}: bad partition")),
                Err(e) => problems.push(format!("d=3 n={n} seed={seed}: {e}")),
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "d=2: {d2_runs} graphs, heuristic failure rate {d2_heuristic_failures}/{d2_runs}; d=3 exhaustive: {d3_runs} graphs; {} problems{}",
            problems.len(),
            first_failure(&problems)
        ),
    )
}

fn criterion_6() -> Outcome {
    let (mut tested, mut failures, mut seed) = (0, 0, 0);
    while tested < C6_MIN_TRIANGULATIONS {
        let n = 4 + (seed as usize % (C6_MAX_N - 3));
        let g = generate::stacked_triangulation(n, seed).unwrap();
        seed += 1;
        if exact_coloring(&g, ColoringKind::Acyclic, 5, C6_MAX_N)
            .unwrap()
            .is_none()
        {
            continue;
        }
        tested += 1;
        match equitable_forests(&g, 4, Strategy::ViaAcyclic, &RouteConfig::default()) {
            Ok(p) if p.len() == 4 && forests_ok(&g, &p) => {}
            _ => failures += 1,
        }
    }
    outcome(
        failures == 0,
        format!("{tested} triangulations, {failures} failures"),
    )
}

fn small_corpus() -> Vec<(String, Graph)> {
    let mut corpus = Vec::new();
    for n in 1..=C7_MAX_N {
        corpus.push((format!("path{n}"), generate::path(n)));
        corpus.push((format!("complete{n}"), generate::complete(n)));
        if n >= 3 {
            corpus.push((format!("cycle{n}"), generate::cycle(n).unwrap()));
            corpus.push((
                format!("stacked{n}"),
                generate::stacked_triangulation(n, n as u64).unwrap(),
            ));
        }
        if n >= 2 {
            corpus.push((format!("star{}", n - 1), generate::star(n - 1)));
            corpus.push((format!("fan{}", n - 1), generate::fan(n - 1)));
        }
        for seed in 0..4 {
            for p in [0.3, 0.5] {
                corpus.push((format!("gnp{n}_{p}_{seed}"), generate::gnp(n, p, seed)));
            }
            for d in 1..=3 {
                corpus.push((
                    format!("deg{d}_{n}_{seed}"),
                    generate::random_d_degenerate(n, d, seed).unwrap(),
                ));
            }
        }
    }
    corpus
}

fn criterion_7() -> Outcome {
    let (mut agreements, mut constructed, mut disagreements) = (0, 0, Vec::new());
    for (name, g) in small_corpus() {
        for k in 1..=g.n() {
            let Ok(routed) = equitable_partition(
                &g,
                k,
                PartKind::Forest,
                Strategy::Auto,
                &RouteConfig::default(),
            ) else {
                continue;
            };
            constructed += 1;
            let valid = forests_ok(&g, &routed.partition);
            let sat = brute_force_equitable(&g, k, PartKind::Forest, &SearchConfig::default())
                .unwrap()
                .is_sat();
            if valid && sat {
                agreements += 1;
            } else {
                disagreements.push(format!("{name} k={k}"));
            }
        }
    }
    outcome(
        disagreements.is_empty() && constructed > 0,
        format!(
            "{agreements}/{constructed} constructed partitions confirmed{}",
            first_failure(&disagreements)
        ),
    )
}

fn criterion_8() -> Outcome {
    let cases = [
        (
            "star K_{1,9}, k=3, stable_set",
            generate::star(9),
            PartKind::StableSet,
        ),
        (
            "fan(12), k=3, linear_forest",
            generate::fan(12),
            PartKind::LinearForest,
        ),
    ];
    let mut pass = true;
    let mut details = Vec::new();
    for (label, g, kind) in cases {
        let started = Instant::now();
        let result = brute_force_equitable(&g, 3, kind, &SearchConfig::default()).unwrap();
        let elapsed = started.elapsed();
        let ok = matches!(result, SearchOutcome::Unsat { .. }) && elapsed < C8_TIME_LIMIT;
        pass &= ok;
        let nodes = match result {
            SearchOutcome::Unsat { nodes } | SearchOutcome::BudgetExceeded { nodes } => nodes,
            SearchOutcome::Sat(_) => 0,
        };
        details.push(format!(
            "{label}: {} after {nodes} nodes in {:.3}s",
            if result.is_unsat() {
                "UNSAT"
            } else {
                "not UNSAT"
            },
            elapsed.as_secs_f64()
        ));
    }
    outcome(pass, details.join("; "))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let names = [
        "forest",
        "star_forest",
        "linear_forest",
        "in_out_star_forest",
    ];
    let mut violations = [0usize; 4];
    for (i, violation) in violations.iter_mut().enumerate() {
        let mut pairs = 0;
        while pairs < C9_PAIRS_PER_PREDICATE {
            let g = random_graph(&mut rng, 14);
            let o = generate::random_orientation(&g, rng.gen());
            let accepts = |s: &VertexSet| -> bool {
                match i {
                    0 => is_forest(&g, s).unwrap().is_accept(),
                    1 => is_star_forest(&g, s).unwrap().is_accept(),
                    2 => is_linear_forest(&g, s).unwrap().is_accept(),
                    _ => is_in_out_star_forest(&o, s).unwrap().is_accept(),
                }
            };
            // random set, shrunk at random until accepted
            let mut s: Vec<usize> = g.vertices().filter(|_| rng.gen_bool(0.6)).collect();
            while !accepts(&VertexSet::from(s.clone())) {
                s.remove(rng.gen_range(0..s.len()));
            }
            for _ in 0..10 {
                let subset: VertexSet = s.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                pairs += 1;
                if !accepts(&subset) {
                    *violation += 1;
                }
            }
        }
    }
    let detail = names
        .iter()
        .zip(violations)
        .map(|(n, v)| format!("{n}: {C9_PAIRS_PER_PREDICATE} pairs, {v} violations"))
        .collect::<Vec<_>>()
        .join("; ");
    outcome(violations.iter().all(|&v| v == 0), detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("acyclic coloring merge", criterion_1),
        ("star coloring merge", criterion_2),
        ("oriented star coloring merge", criterion_3),
        ("extension to any k", criterion_4),
        ("3^(d-1) forests from degeneracy", criterion_5),
        ("4 forests on small triangulations", criterion_6),
        ("constructive vs exhaustive agreement", criterion_7),
        ("negative examples are UNSAT", criterion_8),
        ("predicate hereditariness", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            outcome(false, format!("panicked: {:?}", e.downcast_ref::<String>()))
        });
        if !result.pass {
            failed += 1;
        }
        println!(
            "criterion {} {}: {title}: {} ({:.1}s)",
            i + 1,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            started.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
