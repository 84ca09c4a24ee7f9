//! Randomized property tests for the parsing, verification, and solver
//! layers.

use proptest::prelude::*;

use centroidal::exact::{exact_cd, exact_cd_with, forced_constraints, SolveOptions};
use centroidal::locate::{identifies, is_centroidal_locating};
use centroidal::{all_pairs_distances, parse_edge_list, Graph};

/// Random connected graph: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let tree = proptest::collection::vec(0..usize::MAX, n - 1);
            let extra = proptest::collection::vec((0..n, 0..n), 0..n);
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut edges: Vec<(usize, usize)> = tree
                .iter()
                .enumerate()
                .map(|(i, &r)| (i + 1, r % (i + 1)))
                .collect();
            for &(u, v) in &extra {
                if u != v {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trips(g in connected_graph(12)) {
        let text = g.to_edge_list();
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert_eq!(parsed.vertex_count(), g.vertex_count());
        prop_assert_eq!(parsed.edges(), g.edges());
    }

    #[test]
    fn rank_vectors_distinct_iff_some_pair_identifies(g in connected_graph(6)) {
        // the partition view and the sign-profile view must agree on every
        // detector set of size two or more
        let n = g.vertex_count();
        let dm = all_pairs_distances(&g);
        let sets: Vec<Vec<usize>> = (1u32..1 << n)
            .filter(|m| m.count_ones() >= 2)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        for b in sets {
            let by_rank = is_centroidal_locating(&dm, &b).unwrap();
            let by_pairs = (0..n).all(|x| {
                (x + 1..n).all(|y| {
                    b.iter().enumerate().any(|(i, &a)| {
                        b[i + 1..].iter().any(|&c| identifies(&dm, a, c, x, y))
                    })
                })
            });
            prop_assert_eq!(by_rank, by_pairs);
        }
    }

    #[test]
    fn locating_is_monotone_under_supersets(g in connected_graph(9)) {
        let dm = all_pairs_distances(&g);
        let res = exact_cd(&g).unwrap();
        prop_assert!(is_centroidal_locating(&dm, &res.basis).unwrap());
        let mut grown = res.basis.clone();
        for v in 0..g.vertex_count() {
            if !grown.contains(&v) {
                grown.push(v);
                grown.sort_unstable();
                prop_assert!(is_centroidal_locating(&dm, &grown).unwrap());
            }
        }
    }

    #[test]
    fn minimum_basis_respects_forced_constraints(g in connected_graph(8)) {
        // solve WITHOUT the forcing rules, then check the found minimum
        // basis satisfies them anyway
        let unpruned = SolveOptions { pruning: false, ..SolveOptions::default() };
        let res = exact_cd_with(&g, unpruned).unwrap();
        prop_assert_eq!(res.value, exact_cd(&g).unwrap().value);
        let forced = forced_constraints(&g);
        for v in &forced.must_include {
            prop_assert!(res.basis.contains(v), "forced vertex {} missing", v);
        }
        for group in &forced.at_least_one_of {
            prop_assert!(
                group.iter().any(|v| res.basis.contains(v)),
                "basis avoids a forced group"
            );
        }
    }
}
