//! Set-cover reduction for the centroidal dimension, the greedy
//! approximation, and the locating-domination transfer.

use crate::dist::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::exact::is_locating_dominating;
use crate::graph::Graph;
use crate::locate::{identifies, is_centroidal_locating};

/// Dense bitset over the universe of vertex pairs.
type Bits = Vec<u64>;

fn bits_new(len: usize) -> Bits {
    vec![0; len.div_ceil(64)]
}

fn bits_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

#[cfg(test)]
fn bits_count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

/// Set-cover instance over the universe of unordered vertex pairs, with one
/// hyperedge per detector pair containing the probe pairs it identifies.
#[derive(Debug, Clone)]
pub struct SetCoverInstance {
    n: usize,
    universe_size: usize,
    /// (detector pair, identified probe pairs), pairs in ascending order.
    hyperedges: Vec<((usize, usize), Bits)>,
}

impl SetCoverInstance {
    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedge(&self, a: usize, b: usize) -> Option<&Bits> {
        let key = (a.min(b), a.max(b));
        self.hyperedges
            .iter()
            .find(|(p, _)| *p == key)
            .map(|(_, bits)| bits)
    }

    pub fn pair_index(&self, x: usize, y: usize) -> usize {
        pair_index(self.n, x.min(y), x.max(y))
    }
}

fn pair_index(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < n);
    // pairs in lexicographic order: (0,1), (0,2), ..., (n-2, n-1)
    x * n - x * (x + 1) / 2 + (y - x - 1)
}

fn pair_from_index(n: usize, mut idx: usize) -> (usize, usize) {
    for x in 0..n {
        let row = n - x - 1;
        if idx < row {
            return (x, x + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("pair index out of range")
}

/// Builds the set-cover instance for a connected graph on `n >= 2` vertices.
pub fn build_cd_setcover(dm: &DistanceMatrix) -> Result<SetCoverInstance> {
    let n = dm.vertex_count();
    if n < 2 {
        return Err(Error::BadParams {
            family: "setcover".into(),
            msg: "need at least two vertices".into(),
        });
    }
    if !dm.connected() {
        return Err(Error::Disconnected);
    }
    let universe_size = n * (n - 1) / 2;
    let mut hyperedges = Vec::with_capacity(universe_size);
    for a in 0..n {
        for b in a + 1..n {
            let mut bits = bits_new(universe_size);
            for x in 0..n {
                for y in x + 1..n {
                    if identifies(dm, a, b, x, y) {
                        bits_set(&mut bits, pair_index(n, x, y));
                    }
                }
            }
            hyperedges.push(((a, b), bits));
        }
    }
    Ok(SetCoverInstance {
        n,
        universe_size,
        hyperedges,
    })
}

/// A cover of the pair universe, the detector set it induces, and the greedy
/// selection trace.
#[derive(Debug, Clone)]
pub struct CoverResult {
    pub cover: Vec<(usize, usize)>,
    pub basis: Vec<usize>,
    /// Per step: chosen detector pair and how many universe elements it
    /// newly covered.
    pub greedy_trace: Vec<((usize, usize), usize)>,
}

/// Classical greedy set cover: repeatedly pick the hyperedge covering the
/// most uncovered elements, breaking ties by the colexicographically
/// smallest detector pair.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> Result<CoverResult> {
    let words = bits_new(inst.universe_size).len();
    let mut uncovered = inst.universe_size;
    let mut covered: Bits = vec![0; words];
    let mut cover = Vec::new();
    let mut trace = Vec::new();
    while uncovered > 0 {
        let mut best: Option<(usize, (usize, usize), usize)> = None; // (gain, colex key..), index
        for (i, ((a, b), bits)) in inst.hyperedges.iter().enumerate() {
            let gain: usize = bits
                .iter()
                .zip(&covered)
                .map(|(e, c)| (e & !c).count_ones() as usize)
                .sum();
            if gain == 0 {
                continue;
            }
            let better = match &best {
                None => true,
                Some((g, (pa, pb), _)) => {
                    gain > *g || (gain == *g && (*b, *a) < (*pb, *pa))
                }
            };
            if better {
                best = Some((gain, (*a, *b), i));
            }
        }
        let Some((gain, pair, i)) = best else {
            // some universe element is in no hyperedge
            let mut idx = 0;
            for (w, word) in covered.iter().enumerate() {
                let mut missing = !word;
                if w == words - 1 && inst.universe_size % 64 != 0 {
                    missing &= (1u64 << (inst.universe_size % 64)) - 1;
                }
                let mut found = false;
                for bit in 0..64 {
                    if missing >> bit & 1 == 1 {
                        let cand = w * 64 + bit;
                        if inst.hyperedges.iter().all(|(_, e)| e[w] >> bit & 1 == 0) {
                            idx = cand;
                            found = true;
                            break;
                        }
                    }
                }
                if found {
                    break;
                }
            }
            let (x, y) = pair_from_index(inst.n, idx);
            return Err(Error::Uncoverable(x, y));
        };
        for (c, e) in covered.iter_mut().zip(&inst.hyperedges[i].1) {
            *c |= e;
        }
        uncovered -= gain;
        cover.push(pair);
        trace.push((pair, gain));
    }
    let mut basis: Vec<usize> = cover.iter().flat_map(|&(a, b)| [a, b]).collect();
    basis.sort_unstable();
    basis.dedup();
    Ok(CoverResult {
        cover,
        basis,
        greedy_trace: trace,
    })
}

/// Optimal set-cover size by dynamic programming over covered subsets.
/// Only intended for small instances (universe of at most 24 elements).
pub fn optimal_set_cover_size(inst: &SetCoverInstance) -> Result<usize> {
    let u = inst.universe_size;
    assert!(u <= 24, "DP set cover is for small universes only");
    let full: u32 = if u == 32 { u32::MAX } else { (1u32 << u) - 1 };
    let edges: Vec<u32> = inst
        .hyperedges
        .iter()
        .map(|(_, bits)| bits.first().copied().unwrap_or(0) as u32)
        .collect();
    let mut dp = vec![u32::MAX; (full as usize) + 1];
    dp[0] = 0;
    for mask in 0..=full {
        let cur = dp[mask as usize];
        if cur == u32::MAX {
            continue;
        }
        for &e in &edges {
            let next = (mask | e) as usize;
            if dp[next] > cur + 1 {
                dp[next] = cur + 1;
            }
        }
    }
    if dp[full as usize] == u32::MAX {
        let (x, y) = pair_from_index(inst.n, 0);
        return Err(Error::Uncoverable(x, y));
    }
    Ok(dp[full as usize] as usize)
}

/// Greedy-approximate centroidal locating set: the set-cover route, clamped
/// by the trivial all-but-one-vertex fallback. The returned basis always
/// verifies.
pub fn approx_cd(g: &Graph) -> Result<CoverResult> {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = all_pairs_distances(g);
    let inst = build_cd_setcover(&dm)?;
    let mut result = greedy_set_cover(&inst)?;
    debug_assert!(result.basis.len() <= 2 * result.cover.len());

    let fallback: Vec<usize> = match (0..n).find(|&u| g.degree(u) >= 2) {
        Some(u) => (0..n).filter(|&v| v != u).collect(),
        None => (0..n).collect(),
    };
    if fallback.len() < result.basis.len() {
        result.basis = fallback;
    }
    debug_assert!(is_centroidal_locating(&dm, &result.basis).unwrap());
    Ok(result)
}

/// Lifts a locating-dominating set to a centroidal locating set by adding
/// every outside vertex with a unique dominator.
pub fn ld_to_cd(g: &Graph, dm: &DistanceMatrix, d: &[usize]) -> Result<Vec<usize>> {
    if !is_locating_dominating(g, d) {
        return Err(Error::NotLocatingDominating(format!("{d:?}")));
    }
    let n = g.vertex_count();
    let mut in_d = vec![false; n];
    for &v in d {
        in_d[v] = true;
    }
    let mut out: Vec<usize> = d.to_vec();
    for v in 0..n {
        if !in_d[v] {
            let dominators = g.neighbors(v).iter().filter(|&&w| in_d[w]).count();
            if dominators == 1 {
                out.push(v);
            }
        }
    }
    out.sort_unstable();
    debug_assert!(is_centroidal_locating(dm, &out).unwrap());
    Ok(out)
}

/// Greedy locating-dominating set via set cover: elements are "dominate v"
/// for each vertex and "separate {x, y}" for each vertex pair; vertex w
/// covers the former when w is in N[v] and the latter when w is one of x, y
/// or distinguishes their neighbourhoods.
pub fn greedy_ld(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pair_count = n * (n - 1) / 2;
    let total = n + pair_count;
    let mut covers: Vec<Bits> = Vec::with_capacity(n);
    for w in 0..n {
        let mut bits = bits_new(total);
        bits_set(&mut bits, w); // dominates itself
        for &v in g.neighbors(w) {
            bits_set(&mut bits, v);
        }
        for x in 0..n {
            for y in x + 1..n {
                let sep = w == x
                    || w == y
                    || (g.has_edge(w, x) != g.has_edge(w, y));
                if sep {
                    bits_set(&mut bits, n + pair_index(n, x, y));
                }
            }
        }
        covers.push(bits);
    }
    let mut covered = bits_new(total);
    let mut uncovered = total;
    let mut chosen = Vec::new();
    while uncovered > 0 {
        let mut best: Option<(usize, usize)> = None;
        for (w, bits) in covers.iter().enumerate() {
            let gain: usize = bits
                .iter()
                .zip(&covered)
                .map(|(e, c)| (e & !c).count_ones() as usize)
                .sum();
            if gain > 0 && best.map_or(true, |(g0, _)| gain > g0) {
                best = Some((gain, w));
            }
        }
        let (gain, w) = best.expect("every element is coverable by some vertex");
        for (c, e) in covered.iter_mut().zip(&covers[w]) {
            *c |= e;
        }
        uncovered -= gain;
        chosen.push(w);
    }
    chosen.sort_unstable();
    debug_assert!(is_locating_dominating(g, &chosen));
    Ok(chosen)
}
