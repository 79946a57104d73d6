//! One line per acceptance criterion. Exits non-zero if any criterion fails.

#![allow(clippy::needless_range_loop)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use suspension_turan::construct::best_construction;
use suspension_turan::family::GraphFamily;
use suspension_turan::formula::{construction_n0, f_max, predicted_maximizers};
use suspension_turan::freeness::{contains_subgraph, contains_suspension, greedy_embed_min_degree};
use suspension_turan::graph::{
    canonical_form, complete, complete_bipartite, parse_graph6, path, suspension, write_graph6, Graph,
};
use suspension_turan::oracle::{
    decomposition_family_bruteforce, enumerate_balanced_trees, enumerate_graphs, enumerate_trees, ex_bruteforce,
};
use suspension_turan::tree::{
    certify_tree, check_decomposition, decompose_bruteforce, decompose_lemma4, konig_cover, max_matching,
    parse_parent_array, s_hat_family, Tree,
};

/// Outcome of one criterion: pass flag and a one-line detail.
type Verdict = (bool, String);
type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("formula maximizers equal the closed form", c1_formula),
        ("ex(n, K3) is floor(n^2/4) with a unique extremal graph", c2_turan),
        ("constructions meet f(n, k) and are certified free", c3_constructions),
        (
            "ex(n, suspension) is at least every construction",
            c4_oracle_lower_bound,
        ),
        ("inductive decomposition valid on all balanced trees", c5_lemma4),
        ("matching and cover sizes agree", c6_konig),
        ("greedy embedding under minimum degree", c7_greedy),
        ("decomposition family equals minimal coverings", c8_decomposition_family),
        ("suspension search equals generic search", c9_suspension_equivalence),
        ("graph6 round trip", c10_graph6),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        });
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {detail} ({:.1?})",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn c1_formula() -> Verdict {
    let start = Instant::now();
    let (mut pairs, mut superset, mut outside, mut other) = (0, 0, 0, 0);
    let mut first = None;
    for k in 1..=12u64 {
        for n in 1..=500u64 {
            pairs += 1;
            let scanned = f_max(n, k).unwrap().maximizers;
            let predicted = predicted_maximizers(n, k);
            if scanned == predicted {
                continue;
            }
            first.get_or_insert((n, k, scanned.clone(), predicted.clone()));
            if predicted.iter().any(|&p| p > n) {
                outside += 1;
            } else if predicted.iter().all(|p| scanned.contains(p)) {
                superset += 1;
            } else {
                other += 1;
            }
        }
    }
    let fast = start.elapsed() < Duration::from_secs(5);
    let mismatched = superset + outside + other;
    let mut detail = format!(
        "{mismatched} of {pairs} pairs differ ({superset} with extra tied maximizers, {outside} with a prediction above n, {other} other)"
    );
    if let Some((n, k, s, p)) = first {
        detail += &format!("; first: n = {n}, k = {k}, scanned {s:?}, predicted {p:?}");
    }
    (mismatched == 0 && fast, detail)
}

fn c2_turan() -> Verdict {
    let k3 = GraphFamily::from_graphs(&[complete(3)]).unwrap();
    for n in 3..=8 {
        let start = Instant::now();
        let r = ex_bruteforce(n, &k3, true).unwrap();
        let t2 = canonical_form(&complete_bipartite(n / 2, n - n / 2))
            .unwrap()
            .to_string();
        if r.value != n * n / 4 || r.extremal_graphs != vec![t2] {
            return (
                false,
                format!("n = {n}: ex = {}, extremal {:?}", r.value, r.extremal_graphs),
            );
        }
        if start.elapsed() > Duration::from_secs(300) {
            return (false, format!("n = {n} took {:.1?}", start.elapsed()));
        }
    }
    (true, "3 <= n <= 8".into())
}

fn certified_at(t: &Tree, n: usize) -> Result<(), String> {
    let start = Instant::now();
    let d = best_construction(n, t, None).map_err(|e| e.to_string())?;
    let r = d
        .report
        .ok_or_else(|| format!("n = {n}: nothing applies {:?}", d.attempts))?;
    let f = f_max(n as u64, t.k() as u64).unwrap().value;
    if r.edge_count as u64 != f || !r.meets_target {
        return Err(format!("n = {n}: {} edges, f = {f}", r.edge_count));
    }
    if contains_suspension(&r.graph, t).is_some() {
        return Err(format!("n = {n}: contains the suspension"));
    }
    if start.elapsed() > Duration::from_secs(60) {
        return Err(format!("n = {n} took {:.1?}", start.elapsed()));
    }
    Ok(())
}

fn c3_constructions() -> Verdict {
    let p4 = certify_tree(&path(4)).unwrap();
    let prop5_tree = parse_parent_array("-1 0 0 0 3 3 3").unwrap();
    let p7 = certify_tree(&path(7)).unwrap();
    let even_n0: Vec<usize> = (11..=31)
        .filter(|&n| construction_n0(n as u64, 3).is_multiple_of(2))
        .collect();
    let runs: Vec<(&Tree, Vec<usize>)> = vec![
        (&p4, (5..=40).collect()),
        (&prop5_tree, even_n0),
        (&p7, (7..=30).collect()),
    ];
    let mut total = 0;
    for (t, ns) in runs {
        for n in ns {
            if let Err(e) = certified_at(t, n) {
                return (false, format!("{:?}: {e}", t.to_parent_array()));
            }
            total += 1;
        }
    }
    (true, format!("{total} (tree, n) pairs"))
}

fn c4_oracle_lower_bound() -> Verdict {
    let trees = enumerate_balanced_trees(8).unwrap();
    let cells: Vec<(usize, usize)> = (0..trees.len()).flat_map(|i| (1..=8).map(move |n| (i, n))).collect();
    let results: Vec<Result<Option<i64>, String>> = cells
        .par_iter()
        .map(|&(i, n)| {
            let t = &trees[i];
            let d = best_construction(n, t, None).map_err(|e| e.to_string())?;
            let Some(r) = d.report else { return Ok(None) };
            let fam = GraphFamily::from_graphs(&[suspension(t.graph())]).unwrap();
            let ex = ex_bruteforce(n, &fam, true).map_err(|e| e.to_string())?.value;
            if ex < r.edge_count {
                return Err(format!(
                    "{:?} n = {n}: ex = {ex} < {}",
                    t.to_parent_array(),
                    r.edge_count
                ));
            }
            Ok(Some(ex as i64 - f_max(n as u64, t.k() as u64).unwrap().value as i64))
        })
        .collect();
    let mut gaps = Vec::new();
    for r in results {
        match r {
            Ok(Some(g)) => gaps.push(g),
            Ok(None) => {}
            Err(e) => return (false, e),
        }
    }
    let pos = gaps.iter().filter(|&&g| g > 0).count();
    let zero = gaps.iter().filter(|&&g| g == 0).count();
    let neg = gaps.len() - pos - zero;
    (
        true,
        format!(
            "{} trees, {} applicable cells; ex - f: {pos} positive (max {}), {zero} zero, {neg} negative",
            trees.len(),
            gaps.len(),
            gaps.iter().max().copied().unwrap_or(0)
        ),
    )
}

fn c5_lemma4() -> Verdict {
    let trees = enumerate_balanced_trees(12).unwrap();
    let bad: Vec<String> = trees
        .par_iter()
        .flat_map_iter(|t| {
            (1..=t.k()).filter_map(move |a| {
                let d = match decompose_lemma4(t, a) {
                    Ok(d) => d,
                    Err(e) => return Some(format!("{:?} a = {a}: {e}", t.to_parent_array())),
                };
                if let Err(v) = check_decomposition(t, a, &d) {
                    return Some(format!("{:?} a = {a}: {v:?}", t.to_parent_array()));
                }
                match decompose_bruteforce(t, a) {
                    Ok(Some(b)) if check_decomposition(t, a, &b).is_ok() => None,
                    other => Some(format!("{:?} a = {a}: brute force {other:?}", t.to_parent_array())),
                }
            })
        })
        .collect();
    match bad.first() {
        None => (true, format!("{} trees on at most 12 vertices, every a", trees.len())),
        Some(e) => (false, format!("{} failures, first {e}", bad.len())),
    }
}

fn two_colouring(g: &Graph) -> Option<Vec<usize>> {
    let mut colour = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        if colour[s] != usize::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if colour[v] == usize::MAX {
                    colour[v] = 1 - colour[u];
                    stack.push(v);
                } else if colour[v] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some((0..g.n()).filter(|&v| colour[v] == 0).collect())
}

fn covers(g: &Graph, set: &[usize]) -> bool {
    g.edges().iter().all(|(u, v)| set.contains(u) || set.contains(v))
}

fn c6_konig() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..1000 {
        let n = rng.gen_range(1..=20);
        let side: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let p = rng.gen_range(0.05..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| side.contains(&u) != side.contains(&v))
            .collect();
        let edges: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let m = max_matching(&g, &side).unwrap();
        let c = konig_cover(&g, &side, &m).unwrap();
        if m.len() != c.len() || !covers(&g, &c) {
            return (false, format!("random instance {i}: matching {}, cover {c:?}", m.len()));
        }
    }
    let mut exhaustive = 0;
    for n in 1..=8 {
        for g in enumerate_graphs(n).unwrap() {
            let Some(side) = two_colouring(&g) else { continue };
            exhaustive += 1;
            let m = max_matching(&g, &side).unwrap();
            let c = konig_cover(&g, &side, &m).unwrap();
            let beta = (0u32..1 << n)
                .filter(|mask| covers(&g, &(0..n).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>()))
                .map(u32::count_ones)
                .min()
                .unwrap() as usize;
            if m.len() != beta || c.len() != beta || !covers(&g, &c) {
                return (
                    false,
                    format!("{}: matching {}, minimum cover {beta}", g.to_edge_list(), m.len()),
                );
            }
        }
    }
    (
        true,
        format!("1000 random graphs, {exhaustive} bipartite classes on at most 8 vertices"),
    )
}

fn c7_greedy() -> Verdict {
    let trees: Vec<Tree> = (2..=8).flat_map(|n| enumerate_trees(n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..500 {
        let t = trees.choose(&mut rng).unwrap();
        let n = rng.gen_range(t.n()..=t.n() + 12);
        let d = t.n() - 1;
        let mut adj = vec![vec![false; n]; n];
        let p = rng.gen_range(0.0..0.5);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
            }
        }
        for u in 0..n {
            let mut others: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u][v]).collect();
            others.shuffle(&mut rng);
            while adj[u].iter().filter(|&&x| x).count() < d {
                let v = others.pop().unwrap();
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| adj[u][v]);
        let host = Graph::from_edges(n, edges).unwrap();
        let e = match greedy_embed_min_degree(&host, t) {
            Ok(e) => e,
            Err(err) => return (false, format!("instance {i}: {err}")),
        };
        let mut seen = vec![false; n];
        let injective = e.map.iter().all(|&h| !std::mem::replace(&mut seen[h], true));
        let edges_kept = t.graph().edges().iter().all(|&(u, v)| adj[e.map[u]][e.map[v]]);
        if !injective || !edges_kept || e.map.len() != t.n() {
            return (false, format!("instance {i}: bad embedding {:?}", e.map));
        }
    }
    (true, "500 random hosts".into())
}

fn c8_decomposition_family() -> Verdict {
    let p4 = certify_tree(&path(4)).unwrap();
    let cherry = GraphFamily::from_graphs(&[path(3)]).unwrap();
    let got = decomposition_family_bruteforce(&p4, 5).unwrap();
    let minimal = s_hat_family(&p4).unwrap().minimal;
    if got != cherry || minimal != cherry {
        return (false, format!("P4: brute force {got:?}, minimal {minimal:?}"));
    }
    let six: Vec<Tree> = enumerate_trees(6)
        .unwrap()
        .into_iter()
        .filter(Tree::is_balanced)
        .collect();
    for t in &six {
        let got = decomposition_family_bruteforce(t, 7).unwrap();
        let minimal = s_hat_family(t).unwrap().minimal;
        if got != minimal {
            return (
                false,
                format!("{:?}: brute force {got:?}, minimal {minimal:?}", t.to_parent_array()),
            );
        }
    }
    (true, format!("P4 and all {} balanced 6-vertex trees", six.len()))
}

fn c9_suspension_equivalence() -> Verdict {
    let trees = enumerate_balanced_trees(6).unwrap();
    let hosts: Vec<Graph> = (1..=7).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    let bad = hosts
        .par_iter()
        .flat_map_iter(|h| trees.iter().map(move |t| (h, t)))
        .filter(|(h, t)| contains_suspension(h, t).is_some() != contains_subgraph(h, &suspension(t.graph())).is_some())
        .count();
    (
        bad == 0,
        format!("{} hosts x {} trees, {bad} disagreements", hosts.len(), trees.len()),
    )
}

fn c10_graph6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..10_000 {
        let n = rng.gen_range(0..=20);
        let p = rng.gen::<f64>();
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let g = Graph::from_edges(n, edges.into_iter().filter(|_| rng.gen_bool(p))).unwrap();
        let bytes = write_graph6(&g);
        let back = parse_graph6(&bytes).unwrap();
        if back != g || write_graph6(&back) != bytes {
            return (false, format!("graph {i} did not round trip"));
        }
    }
    (true, "10000 random graphs".into())
}
