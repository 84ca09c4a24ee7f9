//! Exact computation of the centroidal dimension, metric dimension, and
//! location-domination number by constrained exhaustive search.

use std::collections::{BTreeSet, HashSet};

use crate::bounds::bell_lower_bound;
use crate::dist::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::locate;

/// Membership constraints every centroidal locating set must satisfy.
#[derive(Debug, Clone, Default)]
pub struct ForcedConstraints {
    /// Degree-1 vertices: always members.
    pub must_include: Vec<usize>,
    /// Sets of which at least one vertex must be a member.
    pub at_least_one_of: Vec<Vec<usize>>,
}

/// Derives the forcing rules: degree-1 vertices are always members; a
/// degree-1 vertex with a degree-2 neighbour v forces v or another
/// neighbour of v; twin vertices (open or closed) force one of the pair.
pub fn forced_constraints(g: &Graph) -> ForcedConstraints {
    let n = g.vertex_count();
    let must: Vec<usize> = (0..n).filter(|&u| g.degree(u) == 1).collect();
    let must_set: HashSet<usize> = must.iter().copied().collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &u in &must {
        let v = g.neighbors(u)[0];
        if g.degree(v) == 2 {
            let mut s: Vec<usize> = vec![v];
            s.extend(g.neighbors(v).iter().copied().filter(|&w| w != u));
            s.sort_unstable();
            groups.push(s);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let open_twins = g.open_neighborhood(u) == g.open_neighborhood(v);
            let closed_twins = g.closed_neighborhood(u) == g.closed_neighborhood(v);
            if open_twins || closed_twins {
                groups.push(vec![u, v]);
            }
        }
    }
    // drop groups already satisfied by forced members
    groups.retain(|s| !s.iter().any(|v| must_set.contains(v)));
    groups.sort();
    groups.dedup();
    ForcedConstraints {
        must_include: must,
        at_least_one_of: groups,
    }
}

/// Outcome of an exact search.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub value: usize,
    pub basis: Vec<usize>,
    pub nodes_examined: u64,
    /// True when every smaller size was exhausted.
    pub certified: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub size_cap: Option<usize>,
    pub pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            size_cap: None,
            pruning: true,
        }
    }
}

/// Enumerates `r`-combinations of `pool` in lexicographic order, invoking
/// `f` until it returns true; reports whether a call succeeded.
fn for_each_combination(
    pool: &[usize],
    r: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let n = pool.len();
    if r > n {
        return false;
    }
    if r == 0 {
        return f(&[]);
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        if f(&chosen) {
            return true;
        }
        // advance to the next combination
        let mut i = r;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - r {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..r {
            chosen[j] = pool[idx[j]];
        }
    }
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out
}

/// Exact centroidal dimension. Iterates candidate sizes upward from the
/// ordered-Bell lower bound, enumerating subsets in lexicographic order so
/// the returned basis is the lexicographically smallest optimum.
pub fn exact_cd(g: &Graph) -> Result<SolveResult> {
    exact_cd_with(g, SolveOptions::default())
}

pub fn exact_cd_with(g: &Graph, opts: SolveOptions) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = all_pairs_distances(g);
    let default_cap = if g.max_degree() >= 2 { n - 1 } else { n };
    let cap = opts.size_cap.unwrap_or(default_cap).min(n);

    let constraints = if opts.pruning {
        forced_constraints(g)
    } else {
        ForcedConstraints::default()
    };
    let must = &constraints.must_include;
    let must_set: BTreeSet<usize> = must.iter().copied().collect();
    let free: Vec<usize> = (0..n).filter(|v| !must_set.contains(v)).collect();

    let start = bell_lower_bound(n).max(must.len()).max(1);
    let mut nodes = 0u64;
    for k in start..=cap {
        let needed = k - must.len();
        let mut found: Option<Vec<usize>> = None;
        for_each_combination(&free, needed, &mut |combo| {
            let candidate = merge_sorted(must, combo);
            if !constraints
                .at_least_one_of
                .iter()
                .all(|s| s.iter().any(|v| candidate.binary_search(v).is_ok()))
            {
                return false;
            }
            nodes += 1;
            if locate::locating_fast(&dm, &candidate).is_none() {
                found = Some(candidate);
                true
            } else {
                false
            }
        });
        if let Some(basis) = found {
            return Ok(SolveResult {
                value: k,
                basis,
                nodes_examined: nodes,
                certified: true,
            });
        }
    }

    // cap exhausted: fall back to the guaranteed set
    let trivial = trivial_locating_set(g, &dm);
    let certified = trivial.len() <= cap;
    Ok(SolveResult {
        value: trivial.len(),
        basis: trivial,
        nodes_examined: nodes,
        certified,
    })
}

/// `V \ {u}` for the smallest vertex of degree >= 2, else the full vertex set.
fn trivial_locating_set(g: &Graph, dm: &DistanceMatrix) -> Vec<usize> {
    let n = g.vertex_count();
    if let Some(u) = (0..n).find(|&u| g.degree(u) >= 2) {
        let b: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        debug_assert!(locate::locating_fast(dm, &b).is_none());
        return b;
    }
    (0..n).collect()
}

/// Exact metric dimension: minimum set whose distance vectors separate all
/// vertices.
pub fn exact_md(g: &Graph) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = all_pairs_distances(g);
    let pool: Vec<usize> = (0..n).collect();
    let mut nodes = 0u64;
    for k in 1..=n {
        let mut found = None;
        for_each_combination(&pool, k, &mut |combo| {
            nodes += 1;
            if resolves(&dm, combo) {
                found = Some(combo.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(basis) = found {
            return Ok(SolveResult {
                value: k,
                basis,
                nodes_examined: nodes,
                certified: true,
            });
        }
    }
    unreachable!("the full vertex set always resolves a connected graph");
}

fn resolves(dm: &DistanceMatrix, b: &[usize]) -> bool {
    let n = dm.vertex_count();
    let mut seen = HashSet::with_capacity(n);
    for x in 0..n {
        let key: Vec<u32> = b.iter().map(|&w| dm.dist(x, w)).collect();
        if !seen.insert(key) {
            return false;
        }
    }
    true
}

/// True iff `d` is a locating-dominating set: every outside vertex has a
/// non-empty, distinct dominated neighbourhood.
pub fn is_locating_dominating(g: &Graph, d: &[usize]) -> bool {
    let n = g.vertex_count();
    let in_d = membership(n, d);
    let mut seen = HashSet::new();
    for v in 0..n {
        if in_d[v] {
            continue;
        }
        let nv: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| in_d[w]).collect();
        if nv.is_empty() || !seen.insert(nv) {
            return false;
        }
    }
    true
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Exact location-domination number.
pub fn exact_ld(g: &Graph) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pool: Vec<usize> = (0..n).collect();
    let mut nodes = 0u64;
    for k in 1..=n {
        let mut found = None;
        for_each_combination(&pool, k, &mut |combo| {
            nodes += 1;
            if is_locating_dominating(g, combo) {
                found = Some(combo.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(basis) = found {
            return Ok(SolveResult {
                value: k,
                basis,
                nodes_examined: nodes,
                certified: true,
            });
        }
    }
    unreachable!("the full vertex set is locating-dominating");
}

/// All minimum locating-dominating sets of `g`.
pub fn all_minimum_ld_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let value = exact_ld(g)?.value;
    let pool: Vec<usize> = (0..g.vertex_count()).collect();
    let mut out = Vec::new();
    for_each_combination(&pool, value, &mut |combo| {
        if is_locating_dominating(g, combo) {
            out.push(combo.to_vec());
        }
        false
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn p8_constraints() {
        let g = generate(Family::Path, &[8]).unwrap();
        let fc = forced_constraints(&g);
        assert_eq!(fc.must_include, vec![0, 7]);
        assert_eq!(fc.at_least_one_of, vec![vec![1, 2], vec![5, 6]]);
    }

    #[test]
    fn k4_constraints_are_all_pairs() {
        let g = generate(Family::Complete, &[4]).unwrap();
        let fc = forced_constraints(&g);
        assert!(fc.must_include.is_empty());
        assert_eq!(fc.at_least_one_of.len(), 6);
    }

    #[test]
    fn c6_has_no_constraints() {
        let g = generate(Family::Cycle, &[6]).unwrap();
        let fc = forced_constraints(&g);
        assert!(fc.must_include.is_empty());
        assert!(fc.at_least_one_of.is_empty());
    }

    #[test]
    fn cd_of_small_graphs() {
        assert_eq!(exact_cd(&generate(Family::Complete, &[1]).unwrap()).unwrap().value, 1);
        assert_eq!(exact_cd(&generate(Family::Complete, &[3]).unwrap()).unwrap().value, 2);
        assert_eq!(exact_cd(&generate(Family::Path, &[3]).unwrap()).unwrap().value, 2);
        assert_eq!(exact_cd(&generate(Family::Complete, &[5]).unwrap()).unwrap().value, 4);
        assert_eq!(exact_cd(&generate(Family::Complete, &[2]).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn cd_of_p8() {
        let res = exact_cd(&generate(Family::Path, &[8]).unwrap()).unwrap();
        assert_eq!(res.value, 4);
        assert_eq!(res.basis, vec![0, 2, 5, 7]);
        assert!(res.certified);
    }

    #[test]
    fn cd_of_fig2a() {
        let res = exact_cd(&generate(Family::Fig2a, &[]).unwrap()).unwrap();
        assert_eq!(res.value, 3);
    }

    #[test]
    fn size_cap_yields_uncertified_fallback() {
        let g = generate(Family::Path, &[8]).unwrap();
        let res = exact_cd_with(
            &g,
            SolveOptions {
                size_cap: Some(3),
                pruning: true,
            },
        )
        .unwrap();
        assert!(!res.certified);
        assert_eq!(res.value, 7);
    }

    #[test]
    fn pruning_matches_unpruned() {
        for (fam, params) in [
            (Family::Path, vec![7]),
            (Family::Star, vec![6]),
            (Family::U, vec![6]),
            (Family::T, vec![6]),
            (Family::Cycle, vec![7]),
        ] {
            let g = generate(fam, &params).unwrap();
            let a = exact_cd_with(&g, SolveOptions { size_cap: None, pruning: true }).unwrap();
            let b = exact_cd_with(&g, SolveOptions { size_cap: None, pruning: false }).unwrap();
            assert_eq!(a.value, b.value);
            assert_eq!(a.basis, b.basis);
            assert!(a.nodes_examined <= b.nodes_examined);
        }
    }

    #[test]
    fn md_values() {
        for n in [4, 7, 10] {
            assert_eq!(exact_md(&generate(Family::Path, &[n]).unwrap()).unwrap().value, 1);
        }
        for n in [4, 6, 7] {
            assert_eq!(exact_md(&generate(Family::Cycle, &[n]).unwrap()).unwrap().value, 2);
        }
        assert_eq!(exact_md(&generate(Family::Complete, &[4]).unwrap()).unwrap().value, 3);
    }

    #[test]
    fn ld_values() {
        assert_eq!(exact_ld(&generate(Family::Path, &[4]).unwrap()).unwrap().value, 2);
        assert_eq!(exact_ld(&generate(Family::Path, &[10]).unwrap()).unwrap().value, 4);
        assert_eq!(exact_ld(&generate(Family::Complete, &[4]).unwrap()).unwrap().value, 3);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(exact_cd(&g).is_err());
        assert!(exact_md(&g).is_err());
        assert!(exact_ld(&g).is_err());
    }
}
