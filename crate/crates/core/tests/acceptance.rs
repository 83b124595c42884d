//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use median_voting::cc::{cc_brute_force, cc_tree_dp, Misrepresentation, Objective};
use median_voting::domain::condorcet_oracle;
use median_voting::fixtures;
use median_voting::graph::{all_pairs_distances, find_isomorphism, Graph};
use median_voting::intermediate::{ab_cuts, check_condition_iii, is_intermediate};
use median_voting::order::LinearOrder;
use median_voting::profile::Profile;
use median_voting::recognition::{build_neighbor_graph, recognition_oracle, recognize, RecognitionResult};
use median_voting::synthesis::{mulder_decompose, random_median_graph, synthesize_profile};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    all_orders, maximal_single_crossing_path, monotone_table, random_approval, random_connected_graph, random_tree,
    single_crossing_on_tree, subsets,
};

type Check = Result<String, String>;

/// Size of the `i`-th seeded random median graph: cycles through 1..=10.
fn instance(i: u64) -> Graph {
    random_median_graph(1 + (i % 10) as usize, 1000 + i)
}

fn fixture_reproduction() -> Check {
    let limit = Duration::from_secs(1);
    let (path_p, _) = fixtures::path_profile();
    let (tree_p, _) = fixtures::tree_profile();
    let (cube_p, _) = fixtures::cube_profile();
    let mut times = Vec::new();
    let expected = [
        ("path", path_p, Graph::path(4), true),
        ("tree", tree_p, Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap(), true),
        ("cube", cube_p, Graph::hypercube(3), false),
    ];
    for (name, p, g, exact) in expected {
        let start = Instant::now();
        let r = recognize(&p);
        let elapsed = start.elapsed();
        if !r.is_accepted() {
            return Err(format!("{name} rejected: {:?}", r.verdict));
        }
        let same = if exact { r.graph == g } else { find_isomorphism(&r.graph, &g).is_some() };
        if !same {
            return Err(format!("{name} recognized as {:?}", r.graph.edges()));
        }
        if elapsed >= limit {
            return Err(format!("{name} took {elapsed:?}"));
        }
        times.push(format!("{name} {:.1?}", elapsed));
    }
    if Profile::from_letters(&["abcd"]).unwrap().order(0) != &LinearOrder::identity(4) {
        return Err("letter numbering".into());
    }
    Ok(times.join(", "))
}

fn condorcet_on_synthesized() -> Check {
    for i in 0..200 {
        let g = instance(i);
        let p = synthesize_profile(&g).map_err(|e| format!("instance {i}: {e}"))?;
        if !condorcet_oracle(&p.domain(), 5) {
            return Err(format!("instance {i}: intransitive strict majority"));
        }
    }
    Ok("200 instances, totals up to 5".into())
}

fn synthesis_bound() -> Check {
    let mut max_m = 0;
    for i in 0..200 {
        let g = instance(i);
        let p = synthesize_profile(&g).map_err(|e| format!("instance {i}: {e}"))?;
        let steps = mulder_decompose(&g).map_err(|e| e.to_string())?.len();
        if !p.is_reduced() {
            return Err(format!("instance {i}: not reduced"));
        }
        if !is_intermediate(&p, &g).unwrap() {
            return Err(format!("instance {i}: not intermediate"));
        }
        if p.m() > g.n() || p.m() != steps + 1 {
            return Err(format!("instance {i}: {} alternatives for {} vertices", p.m(), g.n()));
        }
        let r = recognize(&p);
        if !r.is_accepted() || find_isomorphism(&r.graph, &g).is_none() {
            return Err(format!("instance {i}: round trip failed"));
        }
        max_m = max_m.max(p.m());
    }
    Ok(format!("200 instances, at most {max_m} alternatives"))
}

/// Reduced profiles on the star with `n` vertices over `m` alternatives.
fn star_profiles(n: usize, m: usize) -> (usize, usize) {
    let star = Graph::star(n);
    let orders = all_orders(m);
    let mut tried = 0;
    let mut found = 0;
    let mut pick = vec![0usize; n];
    fn place(
        slot: usize,
        pick: &mut Vec<usize>,
        orders: &[LinearOrder],
        star: &Graph,
        tried: &mut usize,
        found: &mut usize,
    ) {
        if slot == pick.len() {
            *tried += 1;
            let p = Profile::unnamed(pick.iter().map(|&i| orders[i].clone()).collect()).unwrap();
            if is_intermediate(&p, star).unwrap() {
                *found += 1;
            }
            return;
        }
        for i in 0..orders.len() {
            if !pick[..slot].contains(&i) {
                pick[slot] = i;
                place(slot + 1, pick, orders, star, tried, found);
            }
        }
    }
    place(0, &mut pick, &orders, &star, &mut tried, &mut found);
    (tried, found)
}

fn star_lower_bound() -> Check {
    let start = Instant::now();
    let (t3, f3) = star_profiles(3, 2);
    let (t4, f4) = star_profiles(4, 3);
    // With as many alternatives as vertices, solutions exist.
    let (_, g3) = star_profiles(3, 3);
    let (_, g4) = star_profiles(4, 4);
    let elapsed = start.elapsed();
    if f3 != 0 || f4 != 0 {
        return Err(format!("found {f3} on S3 with 2 alternatives, {f4} on S4 with 3"));
    }
    if g3 == 0 || g4 == 0 {
        return Err("no control solutions with n alternatives".into());
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("search took {elapsed:?}"));
    }
    Ok(format!(
        "S3/2: {t3} placements, S4/3: {t4} placements, none intermediate; controls {g3}, {g4}; {elapsed:.1?}"
    ))
}

fn recognition_vs_oracle(accepted: &mut Vec<RecognitionResult>) -> Check {
    let start = Instant::now();
    let mut total = 0usize;
    let mut positive = 0usize;
    for m in 1..=4 {
        let orders = all_orders(m);
        for size in 1..=5.min(orders.len()) {
            for subset in subsets(orders.len(), size) {
                let p = Profile::unnamed(subset.iter().map(|&i| orders[i].clone()).collect()).unwrap();
                let r = recognize(&p);
                let oracle = recognition_oracle(&p, 7).map_err(|e| e.to_string())?;
                if r.is_accepted() != oracle {
                    let rows: Vec<String> = p.orders().iter().map(|o| p.render(o)).collect();
                    return Err(format!("disagreement on {rows:?}: recognize {:?}, oracle {oracle}", r.verdict));
                }
                total += 1;
                if oracle {
                    positive += 1;
                    if accepted.len() < 5000 {
                        accepted.push(r);
                    }
                }
            }
        }
    }
    Ok(format!("{total} domains, {positive} accepted, {:.1?}", start.elapsed()))
}

fn convexity_conditions_agree() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut agree_true = 0;
    let mut agree_false = 0;
    for i in 0..1000u64 {
        let n = rng.gen_range(2..=10);
        let g = random_median_graph(n, i);
        let base = synthesize_profile(&g).map_err(|e| e.to_string())?;
        let mut orders = base.orders().to_vec();
        let graph = match i % 5 {
            // Unchanged.
            0 => g,
            // Voters shuffled across vertices.
            1 => {
                orders.shuffle(&mut rng);
                g
            }
            // One adjacent transposition in one voter.
            2 => {
                let v = rng.gen_range(0..n);
                let mut o = orders[v].as_slice().to_vec();
                if o.len() > 1 {
                    let j = rng.gen_range(0..o.len() - 1);
                    o.swap(j, j + 1);
                }
                orders[v] = LinearOrder::new(o).unwrap();
                g
            }
            // A random connected graph.
            3 => {
                let extra = rng.gen_range(0..n);
                random_connected_graph(n, extra, &mut rng)
            }
            // Random orders on the median graph.
            _ => {
                let m = base.m();
                for o in orders.iter_mut() {
                    let mut perm: Vec<usize> = (0..m).collect();
                    perm.shuffle(&mut rng);
                    *o = LinearOrder::new(perm).unwrap();
                }
                g
            }
        };
        let p = Profile::unnamed(orders).unwrap();
        let ii = is_intermediate(&p, &graph).unwrap();
        let iii = check_condition_iii(&p, &graph).unwrap();
        if ii != iii {
            return Err(format!("pair {i}: condition ii {ii}, condition iii {iii}"));
        }
        if ii {
            agree_true += 1;
        } else {
            agree_false += 1;
        }
    }
    Ok(format!("1000 pairs ({agree_true} intermediate, {agree_false} not)"))
}

fn cc_oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut runs = 0usize;
    for n in 1..=8 {
        for m in 1..=6 {
            let mut instances: Vec<(Profile, Graph, Misrepresentation, &str)> = Vec::new();
            for _ in 0..3 {
                let t = random_tree(n, &mut rng);
                let p = single_crossing_on_tree(&t, m, &mut rng);
                instances.push((p.clone(), t.clone(), Misrepresentation::borda(m), "borda"));
                let sets = random_approval(&p, &mut rng);
                let r = Misrepresentation::approval(&p, &sets).map_err(|e| e.to_string())?;
                instances.push((p, t, r, "approval"));
            }
            for _ in 0..50 {
                let t = random_tree(n, &mut rng);
                let p = single_crossing_on_tree(&t, m, &mut rng);
                let rows = monotone_table(&p, &mut rng);
                let r = Misrepresentation::table(&p, rows).map_err(|e| e.to_string())?;
                instances.push((p, t, r, "table"));
            }
            for (p, t, r, kind) in &instances {
                for k in 1..=3.min(m) {
                    for obj in [Objective::Utilitarian, Objective::Egalitarian] {
                        let dp = cc_tree_dp(p, t, k, r, obj).map_err(|e| format!("{kind} n={n} m={m}: {e}"))?;
                        let bf = cc_brute_force(p, k, r, obj).map_err(|e| e.to_string())?;
                        if dp.phi != bf.phi {
                            let rows: Vec<String> = p.orders().iter().map(|o| p.render(o)).collect();
                            return Err(format!(
                                "{kind} n={n} m={m} k={k} {obj:?}: dp {} vs brute force {} on {rows:?} tree {:?}",
                                dp.phi,
                                bf.phi,
                                t.edges()
                            ));
                        }
                        if dp.committee.len() > k {
                            return Err(format!("{kind} n={n} m={m} k={k}: committee too large"));
                        }
                        runs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{runs} comparisons"))
}

fn complexity_smoke() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let path = Graph::path(200);
    let p = maximal_single_crossing_path(200, 20, &mut rng);
    let start = Instant::now();
    let s = cc_tree_dp(&p, &path, 5, &Misrepresentation::borda(20), Objective::Utilitarian)
        .map_err(|e| e.to_string())?;
    let cc_time = start.elapsed();
    let orders = all_orders(8);
    let domain: Vec<LinearOrder> = orders.choose_multiple(&mut rng, 50).cloned().collect();
    let start = Instant::now();
    build_neighbor_graph(&domain).map_err(|e| e.to_string())?;
    let ng_time = start.elapsed();
    if cc_time >= Duration::from_secs(5) || ng_time >= Duration::from_secs(5) {
        return Err(format!("cc {cc_time:?}, neighbour graph {ng_time:?}"));
    }
    Ok(format!("cc n=200 m=20 k=5 {cc_time:.1?} (phi {}), neighbour graph 50x8 {ng_time:.1?}", s.phi))
}

fn cut_invariants(r: &RecognitionResult) -> Result<usize, String> {
    let p = &r.reduced;
    let g = &r.graph;
    let dm = all_pairs_distances(g).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for a in 0..p.m() {
        for b in 0..p.m() {
            if a == b {
                continue;
            }
            let cuts = ab_cuts(p, g, a, b).map_err(|e| e.to_string())?;
            if cuts.is_empty() {
                continue;
            }
            let v_ab = p.v_ab(a, b).map_err(|e| e.to_string())?;
            for cut in &cuts {
                let halfspace: Vec<usize> = (0..g.n()).filter(|&w| dm.get(w, cut.u) < dm.get(w, cut.v)).collect();
                if halfspace != v_ab {
                    return Err(format!("halfspace of {}-{} differs from V_ab", cut.u, cut.v));
                }
                if cut.signature != cuts[0].signature {
                    return Err(format!("signatures differ on cuts of ({a},{b})"));
                }
                checked += 1;
            }
            let mut us: Vec<usize> = cuts.iter().map(|c| c.u).collect();
            let mut vs: Vec<usize> = cuts.iter().map(|c| c.v).collect();
            us.sort_unstable();
            us.dedup();
            vs.sort_unstable();
            vs.dedup();
            if us.len() != cuts.len() || vs.len() != cuts.len() {
                return Err(format!("cut endpoints of ({a},{b}) repeat"));
            }
        }
    }
    Ok(checked)
}

fn cut_structure(accepted: &[RecognitionResult]) -> Check {
    let mut corpus: Vec<RecognitionResult> = accepted.to_vec();
    for (p, _) in [fixtures::path_profile(), fixtures::tree_profile(), fixtures::cube_profile()] {
        corpus.push(recognize(&p));
    }
    for i in 0..200 {
        corpus.push(recognize(&synthesize_profile(&instance(i)).map_err(|e| e.to_string())?));
    }
    let mut cuts = 0;
    for r in &corpus {
        if !r.is_accepted() {
            return Err("corpus instance rejected".into());
        }
        cuts += cut_invariants(r)?;
    }
    Ok(format!("{} accepted recognitions, {cuts} cuts", corpus.len()))
}

fn main() -> ExitCode {
    let mut accepted = Vec::new();
    let results: Vec<(&str, Check)> = vec![
        ("1 fixture reproduction", fixture_reproduction()),
        ("2 Condorcet domains from synthesized profiles", condorcet_on_synthesized()),
        ("3 synthesis bound and round trip", synthesis_bound()),
        ("4 star lower bound", star_lower_bound()),
        ("5 recognition against exhaustive oracle", recognition_vs_oracle(&mut accepted)),
        ("6 convexity and shortest-path conditions agree", convexity_conditions_agree()),
        ("7 Chamberlin-Courant DP against brute force", cc_oracle_equivalence()),
        ("8 complexity smoke test", complexity_smoke()),
        ("9 cut-structure invariants", cut_structure(&accepted)),
    ];
    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
