//! Exhaustive enumeration of connected graphs on few vertices, one
//! representative per isomorphism class.

use std::collections::HashSet;

use crate::graph::Graph;

/// Hard limit: beyond this the class counts explode and permutation-based
/// canonization stops being viable.
pub const MAX_ENUM_N: usize = 7;

fn edge_bit(n: usize, i: usize, j: usize) -> u32 {
    let (i, j) = (i.min(j), i.max(j));
    (i * n - i * (i + 1) / 2 + (j - i - 1)) as u32
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// Minimum edge bitmask over all vertex relabelings.
fn canonical_mask(n: usize, mask: u64, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask >> edge_bit(n, i, j) & 1 == 1)
        .collect();
    let mut best = u64::MAX;
    for perm in perms {
        let mut relabeled = 0u64;
        for &(i, j) in &edges {
            relabeled |= 1 << edge_bit(n, perm[i], perm[j]);
        }
        if relabeled < best {
            best = relabeled;
        }
    }
    best
}

fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask >> edge_bit(n, i, j) & 1 == 1)
        .collect();
    Graph::new(n, edges).expect("mask encodes a simple graph")
}

/// All connected graphs on exactly `n` vertices, one canonical
/// representative per isomorphism class, in ascending bitmask order.
///
/// Built by extending every class on n-1 vertices with a new vertex
/// attached to each non-empty subset of the old ones; every connected
/// graph arises this way because removing a non-cut vertex (one always
/// exists) leaves a connected graph.
pub fn connected_graphs_of_order(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_ENUM_N).contains(&n),
        "enumeration supported for 1 <= n <= {MAX_ENUM_N}"
    );
    let mut masks: Vec<u64> = vec![0]; // the 1-vertex graph
    for m in 2..=n {
        let perms = permutations(m);
        let mut seen: HashSet<u64> = HashSet::new();
        for &base in &masks {
            // re-encode the (m-1)-vertex mask into the m-vertex pair indexing
            let mut rebased = 0u64;
            for i in 0..m - 1 {
                for j in i + 1..m - 1 {
                    if base >> edge_bit(m - 1, i, j) & 1 == 1 {
                        rebased |= 1 << edge_bit(m, i, j);
                    }
                }
            }
            for nb in 1u64..1 << (m - 1) {
                let mut mask = rebased;
                for v in 0..m - 1 {
                    if nb >> v & 1 == 1 {
                        mask |= 1 << edge_bit(m, v, m - 1);
                    }
                }
                seen.insert(canonical_mask(m, mask, &perms));
            }
        }
        masks = seen.into_iter().collect();
        masks.sort_unstable();
    }
    masks.into_iter().map(|mask| mask_to_graph(n, mask)).collect()
}

/// All connected graphs with between 1 and `max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_oeis_a001349() {
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_graphs_of_order(i + 1).len(), want, "n={}", i + 1);
        }
    }

    #[test]
    fn order_seven_count() {
        assert_eq!(connected_graphs_of_order(7).len(), 853);
    }

    #[test]
    fn representatives_are_connected_and_distinct() {
        let graphs = connected_graphs_of_order(5);
        for g in &graphs {
            assert!(g.is_connected());
            assert_eq!(g.vertex_count(), 5);
        }
        // spot-check degree sequences are not all alike
        let mut seqs: Vec<Vec<usize>> = graphs
            .iter()
            .map(|g| {
                let mut d: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
                d.sort_unstable();
                d
            })
            .collect();
        seqs.sort();
        seqs.dedup();
        assert!(seqs.len() > 10);
    }

    #[test]
    fn up_to_combines_orders() {
        assert_eq!(connected_graphs_up_to(4).len(), 1 + 1 + 2 + 6);
    }
}
