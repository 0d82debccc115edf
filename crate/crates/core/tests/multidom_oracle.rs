use domlab::graph::gnp;
use domlab::multidom::{
    build_candidate_families, build_clique_graph_relaxed, family_shape, family_size_closed_form, list_2_dominating_sets,
    solve_multidom_fast, solve_multidom_kminus1,
};
use domlab::oracles::{oracle_multidom, oracle_multidom_all};
use domlab::problem::verify_solution;
use domlab::{DominationVariant, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const VARIANTS: [DominationVariant; 2] = [DominationVariant::Multiple, DominationVariant::Tuple];

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(3..=max_n);
    let p = [0.15, 0.3, 0.6][rng.gen_range(0..3)];
    gnp(n, p, rng)
}

#[test]
fn fast_solver_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..120 {
        let g = random_graph(&mut rng, 11);
        for k in 2..=4.min(g.n()) {
            for r in 1..k {
                for variant in VARIANTS {
                    let fast = solve_multidom_fast(&g, k, r, variant).unwrap();
                    let oracle = oracle_multidom(&g, k, r, variant).unwrap();
                    assert_eq!(fast.is_some(), oracle.is_some(), "k={k} r={r} {variant} on {:?}", g.edges().collect::<Vec<_>>());
                    if let Some(s) = fast {
                        assert!(verify_solution(&g, &s.problem, &s.vertices));
                    }
                }
            }
        }
    }
}

#[test]
fn pipeline_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..80 {
        let g = random_graph(&mut rng, 11);
        for k in [3, 4] {
            for variant in VARIANTS {
                let pipeline = solve_multidom_kminus1(&g, k, variant, None).unwrap();
                let oracle = oracle_multidom(&g, k, k - 1, variant).unwrap();
                assert_eq!(pipeline.is_some(), oracle.is_some(), "k={k} {variant}");
                if let Some(s) = pipeline {
                    assert!(verify_solution(&g, &s.problem, &s.vertices));
                }
            }
        }
    }
}

#[test]
fn every_solution_holds_enough_heavy_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let g = random_graph(&mut rng, 10);
        for k in 2..=4.min(g.n()) {
            let heavy = g.heavy_vertices(k);
            for r in 1..k {
                for variant in VARIANTS {
                    for s in oracle_multidom_all(&g, k, r, variant).unwrap() {
                        let inside = s.iter().filter(|&v| heavy.contains(v)).count();
                        assert!(inside >= r, "{s} has {inside} heavy vertices, r={r}");
                    }
                }
            }
        }
    }
}

#[test]
fn families_cover_every_qualifying_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 9);
        for k in 2..=4.min(g.n()) {
            let heavy = g.heavy_vertices(k);
            for r in 1..k {
                let (left, right) = build_candidate_families(&g, k, r);
                let ((ls, lq), (rs, rq)) = family_shape(k, r);
                assert_eq!(left.len() as u128, family_size_closed_form(g.n(), heavy.len(), ls, lq));
                assert_eq!(right.len() as u128, family_size_closed_form(g.n(), heavy.len(), rs, rq));
                let mut splits = std::collections::BTreeSet::new();
                for s in &left.members {
                    for t in &right.members {
                        if s.is_disjoint(t) {
                            splits.insert(s.union(t));
                        }
                    }
                }
                // every k-subset with at least r heavy vertices appears
                let all: Vec<usize> = g.vertices().collect();
                let mut count = 0;
                for_each_k_subset(&all, k, &mut |set| {
                    if set.iter().filter(|&&v| heavy.contains(v)).count() >= r {
                        count += 1;
                        assert!(splits.contains(&domlab::VertexSet::from_sorted(set.to_vec())));
                    }
                });
                assert_eq!(count, splits.len());
            }
        }
    }
}

fn for_each_k_subset(items: &[usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, visit);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::new(), visit);
}

#[test]
fn relaxed_clique_graph_contains_every_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 10);
        for k in [3, 4] {
            let cg = build_clique_graph_relaxed(&g, k).unwrap();
            let heavy = g.heavy_vertices(k);
            for s in oracle_multidom_all(&g, k, k - 1, DominationVariant::Multiple).unwrap() {
                // place k-1 heavy members in the copies of H and the rest in the copy of V
                let members = s.as_slice();
                let last = *members.iter().rev().find(|&&v| !heavy.contains(v)).unwrap_or(&members[k - 1]);
                let firsts: Vec<usize> = members.iter().copied().filter(|&v| v != last).collect();
                let mut picks = Vec::new();
                for (part, &v) in firsts.iter().enumerate() {
                    picks.push((part, cg.origin[part].iter().position(|&x| x == v).expect("member is heavy")));
                }
                picks.push((k - 1, last));
                assert!(cg.graph.is_clique(&picks), "{s} is not a clique of the relaxed graph");
            }
        }
    }
}

#[test]
fn pair_listing_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..50 {
        let g = random_graph(&mut rng, 14);
        let expected: Vec<(usize, usize)> = g
            .vertices()
            .flat_map(|u| g.vertices().filter(move |&v| v > u).map(move |v| (u, v)))
            .filter(|&(u, v)| g.dominates(&[u, v]))
            .collect();
        assert_eq!(list_2_dominating_sets(&g), expected);
    }
}
