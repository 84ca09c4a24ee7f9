//! Rank vectors, the pair-identification predicate, centroidal-locating-set
//! verification, and the competitive facility-location quantities.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::dist::DistanceMatrix;
use crate::graph::Graph;

/// Ordered partition of a detector set by distance from a probe vertex.
/// Classes are sorted by strictly increasing distance; members of one class
/// are equidistant from the probe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankVector {
    classes: Vec<Vec<usize>>,
}

impl RankVector {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

impl fmt::Display for RankVector {
    /// Classes joined by `<`, ties as `{a,b}` with ascending ids, e.g. `{0,2}<5<7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str("<")?;
            }
            if class.len() == 1 {
                write!(f, "{}", class[0])?;
            } else {
                f.write_str("{")?;
                for (j, v) in class.iter().enumerate() {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("}")?;
            }
        }
        Ok(())
    }
}

/// Computes the rank vector of probe `x` for detector set `b`.
pub fn rank_vector(dm: &DistanceMatrix, x: usize, b: &[usize]) -> Result<RankVector> {
    if b.is_empty() {
        return Err(Error::EmptyDetectorSet);
    }
    if !dm.connected() {
        return Err(Error::Disconnected);
    }
    let mut pairs: Vec<(u32, usize)> = b.iter().map(|&w| (dm.dist(x, w), w)).collect();
    pairs.sort_unstable();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for (d, w) in pairs {
        if last != Some(d) {
            classes.push(Vec::new());
            last = Some(d);
        }
        classes.last_mut().unwrap().push(w);
    }
    Ok(RankVector { classes })
}

/// Sign of `d(x, a) - d(x, b)` for an ordered detector pair.
pub fn sign_profile(dm: &DistanceMatrix, a: usize, b: usize, x: usize) -> i8 {
    let (da, db) = (dm.dist(x, a), dm.dist(x, b));
    match da.cmp(&db) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// True iff the detector pair `{a, b}` distinguishes probes `x` and `y`,
/// i.e. the two sign profiles differ. A tie against a strict comparison
/// counts as distinguishing.
pub fn identifies(dm: &DistanceMatrix, a: usize, b: usize, x: usize, y: usize) -> bool {
    debug_assert!(a != b && x != y);
    sign_profile(dm, a, b, x) != sign_profile(dm, a, b, y)
}

/// Equality key for a rank vector: detector ids annotated with their tie
/// class index, packed for cheap hashing. Two probes share a key iff their
/// rank vectors are equal.
pub(crate) fn rank_key(dm: &DistanceMatrix, x: usize, b: &[usize], out: &mut Vec<u64>) {
    out.clear();
    let row = dm.row(x);
    out.extend(b.iter().map(|&w| (u64::from(row[w]) << 32) | w as u64));
    out.sort_unstable();
    let mut group = 0u64;
    let mut last_d = out[0] >> 32;
    for v in out.iter_mut() {
        let d = *v >> 32;
        if d != last_d {
            group += 1;
            last_d = d;
        }
        *v = (group << 32) | (*v & 0xffff_ffff);
    }
}

/// Fast verification used by the solvers: bails out on the first duplicate
/// rank vector, returning some (not necessarily lex-smallest) colliding pair.
pub(crate) fn locating_fast(dm: &DistanceMatrix, b: &[usize]) -> Option<(usize, usize)> {
    let n = dm.vertex_count();
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::with_capacity(n);
    let mut key = Vec::with_capacity(b.len());
    for x in 0..n {
        rank_key(dm, x, b, &mut key);
        if let Some(&y) = seen.get(&key) {
            return Some((y, x));
        }
        seen.insert(key.clone(), x);
    }
    None
}

/// Checks whether `b` is a centroidal locating set. Returns `None` when it
/// is, otherwise the lexicographically smallest unidentified pair `(x, y)`.
pub fn check_centroidal_locating(
    dm: &DistanceMatrix,
    b: &[usize],
) -> Result<Option<(usize, usize)>> {
    if b.is_empty() {
        return Err(Error::EmptyDetectorSet);
    }
    if !dm.connected() {
        return Err(Error::Disconnected);
    }
    let n = dm.vertex_count();
    let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::with_capacity(n);
    let mut key = Vec::with_capacity(b.len());
    for x in 0..n {
        rank_key(dm, x, b, &mut key);
        groups.entry(key.clone()).or_default().push(x);
    }
    // vertices are visited in ascending order, so (g[0], g[1]) is the
    // smallest pair inside each collision group
    Ok(groups
        .values()
        .filter(|g| g.len() >= 2)
        .map(|g| (g[0], g[1]))
        .min())
}

pub fn is_centroidal_locating(dm: &DistanceMatrix, b: &[usize]) -> Result<bool> {
    Ok(check_centroidal_locating(dm, b)?.is_none())
}

/// `V_{u,v}`: vertices strictly closer to `u` than to `v`.
pub fn v_region(dm: &DistanceMatrix, u: usize, v: usize) -> Vec<usize> {
    debug_assert!(u != v);
    (0..dm.vertex_count())
        .filter(|&x| dm.dist(x, u) < dm.dist(x, v))
        .collect()
}

/// Per-vertex facility-location scores together with the median and the
/// centroid of the graph.
#[derive(Debug, Clone)]
pub struct FacilityScores {
    /// `f(u) = min over v != u of |V_{u,v}| - |V_{v,u}|`.
    pub f: Vec<i64>,
    /// `d(u) = sum of distances from u`.
    pub total_distance: Vec<u64>,
    /// Vertices of minimum total distance.
    pub median: Vec<usize>,
    /// Vertices of maximum `f`.
    pub centroid: Vec<usize>,
}

pub fn facility_scores(dm: &DistanceMatrix) -> Result<FacilityScores> {
    if !dm.connected() {
        return Err(Error::Disconnected);
    }
    let n = dm.vertex_count();
    let mut f = vec![i64::MAX; n];
    let mut total = vec![0u64; n];
    for u in 0..n {
        total[u] = dm.row(u).iter().map(|&d| u64::from(d)).sum();
        for v in 0..n {
            if v == u {
                continue;
            }
            let mut closer_u = 0i64;
            let mut closer_v = 0i64;
            for x in 0..n {
                match dm.dist(x, u).cmp(&dm.dist(x, v)) {
                    std::cmp::Ordering::Less => closer_u += 1,
                    std::cmp::Ordering::Greater => closer_v += 1,
                    std::cmp::Ordering::Equal => {}
                }
            }
            f[u] = f[u].min(closer_u - closer_v);
        }
    }
    if n == 1 {
        f[0] = 0;
    }
    let min_d = total.iter().copied().min().unwrap_or(0);
    let max_f = f.iter().copied().max().unwrap_or(0);
    Ok(FacilityScores {
        median: (0..n).filter(|&u| total[u] == min_d).collect(),
        centroid: (0..n).filter(|&u| f[u] == max_f).collect(),
        f,
        total_distance: total,
    })
}

/// Branch-weight centroid of a tree: vertices minimizing the largest branch
/// (edge count including the edge into the branch) hanging at them.
pub fn branch_weight_centroid(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(vec![0]);
    }
    let mut bw = vec![0usize; n];
    for u in 0..n {
        // component sizes of g - u via DFS from each neighbor
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut best = 0;
        for &start in g.neighbors(u) {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut vertices = 0usize;
            while let Some(v) = stack.pop() {
                vertices += 1;
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            // a branch with c vertices has c-1 internal edges plus the edge to u
            best = best.max(vertices);
        }
        bw[u] = best;
    }
    let min_bw = *bw.iter().min().unwrap();
    Ok((0..n).filter(|&u| bw[u] == min_bw).collect())
}
