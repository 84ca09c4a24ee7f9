//! Builders for the explicit constructions: near-optimal diameter-2/3
//! graphs, path/cycle centroidal bases, the six maximum-dimension families,
//! and the recognizer for that characterization.

use std::collections::BTreeSet;

use crate::dist::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::{generate, Family, Graph};
use crate::locate::check_centroidal_locating;

/// What the construction promises about the centroidal dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ClaimedCd {
    Exact(usize),
    /// Inclusive interval `[lo, hi]`.
    Interval(usize, usize),
}

/// A generated graph together with a verified centroidal locating set.
#[derive(Debug, Clone)]
pub struct ConstructedInstance {
    pub graph: Graph,
    pub basis: Vec<usize>,
    pub claimed_cd: ClaimedCd,
    pub provenance: String,
    /// Basis size before post-pass minimization, when one was applied.
    pub raw_size: Option<usize>,
}

/// Verifies the basis, returning the instance or an error carrying the
/// offending vertex pair.
fn verified(
    graph: Graph,
    mut basis: Vec<usize>,
    claimed_cd: ClaimedCd,
    provenance: String,
    raw_size: Option<usize>,
) -> Result<ConstructedInstance> {
    basis.sort_unstable();
    basis.dedup();
    let dm = all_pairs_distances(&graph);
    match check_centroidal_locating(&dm, &basis)? {
        None => Ok(ConstructedInstance {
            graph,
            basis,
            claimed_cd,
            provenance,
            raw_size,
        }),
        Some((x, y)) => Err(Error::ConstructionInvalid(x, y)),
    }
}

/// Greedily drops basis vertices (ascending id, restarting after each
/// successful removal) while the set still verifies.
fn minimize_basis(g: &Graph, basis: &[usize]) -> Vec<usize> {
    let dm = all_pairs_distances(g);
    let mut b: Vec<usize> = basis.to_vec();
    b.sort_unstable();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..b.len() {
            if b.len() == 1 {
                break;
            }
            let mut cand = b.clone();
            cand.remove(i);
            if matches!(check_centroidal_locating(&dm, &cand), Ok(None)) {
                b = cand;
                changed = true;
                break;
            }
        }
    }
    b
}

/// Diameter-2 graph on 2^k + k - 1 vertices with centroidal dimension k:
/// a k-cycle B plus a clique S whose members carry the distinct non-empty
/// subsets of B as neighbourhoods.
pub fn construct_diam2(k: usize) -> Result<ConstructedInstance> {
    if k < 4 {
        return Err(Error::BadParams {
            family: "diam2".into(),
            msg: "k must be at least 4".into(),
        });
    }
    let s_count = (1usize << k) - 1;
    let n = k + s_count;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
    }
    // S is the clique {k, ..., n-1}; member k-1+j gets subset j of B.
    for a in k..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    for j in 1..=s_count {
        let s = k - 1 + j;
        for bit in 0..k {
            if j >> bit & 1 == 1 {
                edges.push((s, bit));
            }
        }
    }
    let graph = Graph::new(n, edges)?;
    verified(
        graph,
        (0..k).collect(),
        ClaimedCd::Exact(k),
        format!("diam2(k={k})"),
        None,
    )
}

fn subsets_of_size(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..k {
            cur.push(v);
            rec(v + 1, k, r, cur, out);
            cur.pop();
        }
    }
    rec(0, k, r, &mut cur, &mut out);
    out
}

/// Diameter-3 graph on 3^k - 2^{k+1} + 2 vertices whose independent set B
/// of size k is a centroidal basis. Layers: clique X over the middle-sized
/// subsets, independent Y over (subset, witness-subset) pairs, clique Z over
/// the two largest subset sizes.
pub fn construct_diam3(k: usize) -> Result<ConstructedInstance> {
    if k < 4 {
        return Err(Error::BadParams {
            family: "diam3".into(),
            msg: "k must be at least 4".into(),
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = k;
    // X layer: x(S) for 2 <= |S| <= k-2, adjacent to S; X is a clique.
    let mut x_id: std::collections::HashMap<Vec<usize>, usize> = Default::default();
    let mut x_layer = Vec::new();
    for r in 2..=k - 2 {
        for s in subsets_of_size(k, r) {
            let id = next;
            next += 1;
            for &b in &s {
                edges.push((id, b));
            }
            x_id.insert(s, id);
            x_layer.push(id);
        }
    }
    for (i, &a) in x_layer.iter().enumerate() {
        for &b in &x_layer[i + 1..] {
            edges.push((a, b));
        }
    }
    // Y layer: y(S, T) for 1 <= |S| <= k-2 and T a proper non-empty subset
    // of the complement of S; adjacent to S and to one X witness for T.
    for r in 1..=k - 2 {
        for s in subsets_of_size(k, r) {
            let rest: Vec<usize> = (0..k).filter(|v| !s.contains(v)).collect();
            for tr in 1..rest.len() {
                for t_idx in subsets_of_size(rest.len(), tr) {
                    let t: Vec<usize> = t_idx.iter().map(|&i| rest[i]).collect();
                    let id = next;
                    next += 1;
                    for &b in &s {
                        edges.push((id, b));
                    }
                    let witness = if t.len() >= 2 {
                        t.clone()
                    } else {
                        let mut w = vec![t[0], s[0]];
                        w.sort_unstable();
                        w
                    };
                    edges.push((id, x_id[&witness]));
                }
            }
        }
    }
    // Z layer: clique of the k+1 vertices z(S) with |S| in {k-1, k}.
    let mut z_layer = Vec::new();
    for r in [k - 1, k] {
        for s in subsets_of_size(k, r) {
            let id = next;
            next += 1;
            for &b in &s {
                edges.push((id, b));
            }
            z_layer.push(id);
        }
    }
    for (i, &a) in z_layer.iter().enumerate() {
        for &b in &z_layer[i + 1..] {
            edges.push((a, b));
        }
    }
    let expected = 3usize.pow(k as u32) - 2usize.pow(k as u32 + 1) + 2;
    debug_assert_eq!(next, expected);
    let graph = Graph::new(next, edges)?;
    verified(
        graph,
        (0..k).collect(),
        ClaimedCd::Exact(k),
        format!("diam3(k={k})"),
        None,
    )
}

/// Smallest t with t*t > x (strict square-root lower bound, in integers).
fn strict_sqrt_bound(x: usize) -> usize {
    let mut t = (x as f64).sqrt() as usize;
    while t * t <= x {
        t += 1;
    }
    while t > 1 && (t - 1) * (t - 1) > x {
        t -= 1;
    }
    t
}

/// Best factorization n = p(2q+2) with p >= 3, q >= 2, minimizing the basis
/// size p + q - 1 (ties broken by smaller q). Returns None when n has no such
/// form. p = 2 is excluded: those instances fail verification (the two long
/// blocks leave antipodal probes tied everywhere).
fn cycle_factorization(n: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for q in 2..n {
        let block = 2 * q + 2;
        if block > n {
            break;
        }
        if n % block == 0 {
            let p = n / block;
            if p >= 3 {
                let better = match best {
                    None => true,
                    Some((bp, bq)) => p + q < bp + bq,
                };
                if better {
                    best = Some((p, q));
                }
            }
        }
    }
    best
}

/// Centroidal basis for the cycle C_n (vertices 0..n around the cycle).
///
/// For n = p(2q+2) the closed form of size p + q - 1 is used; otherwise a
/// padded variant is built and then greedily minimized, with both sizes
/// reported.
pub fn construct_cycle_basis(n: usize) -> Result<ConstructedInstance> {
    if n < 12 {
        return Err(Error::BadParams {
            family: "cycle-basis".into(),
            msg: "n must be at least 12".into(),
        });
    }
    let graph = generate(Family::Cycle, &[n])?;
    let lower = strict_sqrt_bound(n / 2).max(1);
    if let Some((p, q)) = cycle_factorization(n) {
        let mut basis: Vec<usize> = (0..p).map(|i| i * (2 * q + 2)).collect();
        basis.extend((1..q).map(|j| 2 * j));
        let size = p + q - 1;
        debug_assert_eq!(basis.iter().collect::<BTreeSet<_>>().len(), size);
        return verified(
            graph,
            basis,
            ClaimedCd::Interval(lower, size),
            format!("cycle-basis(n={n}, p={p}, q={q})"),
            None,
        );
    }
    // padded: take the largest m = 2l^2 <= n, lay out the closed form on the
    // first m vertices, and add the whole seam {1..2q+1} u {m..n-1}.
    let mut l = 2;
    while 2 * (l + 1) * (l + 1) <= n {
        l += 1;
    }
    let m = 2 * l * l;
    let (p, q) = (l, (l - 1).max(1));
    let mut raw: Vec<usize> = (0..p).map(|i| i * (2 * q + 2)).collect();
    raw.extend(1..=2 * q + 1);
    raw.extend(m..n);
    raw.sort_unstable();
    raw.dedup();
    let raw_size = raw.len();
    let basis = minimize_basis(&graph, &raw);
    let size = basis.len();
    verified(
        graph,
        basis,
        ClaimedCd::Interval(lower, size),
        format!("cycle-basis(n={n}, padded m={m}, p={p}, q={q})"),
        Some(raw_size),
    )
}

/// Best factorization n = p(2q+2)+1 with p, q >= 2, minimizing p + 2q - 1.
fn path_factorization(n: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for q in 2..n {
        let block = 2 * q + 2;
        if block >= n {
            break;
        }
        if (n - 1) % block == 0 {
            let p = (n - 1) / block;
            if p >= 2 {
                let better = match best {
                    None => true,
                    Some((bp, bq)) => p + 2 * q < bp + 2 * bq,
                };
                if better {
                    best = Some((p, q));
                }
            }
        }
    }
    best
}

/// Centroidal basis for the path P_n (vertices 0..n in order).
///
/// For n = p(2q+2)+1 the closed form of size p + 2q - 1 is used; otherwise
/// a padded variant is built and then greedily minimized.
pub fn construct_path_basis(n: usize) -> Result<ConstructedInstance> {
    if n < 13 {
        return Err(Error::BadParams {
            family: "path-basis".into(),
            msg: "n must be at least 13".into(),
        });
    }
    let graph = generate(Family::Path, &[n])?;
    let lower = strict_sqrt_bound(n - 1).max(1);
    if let Some((p, q)) = path_factorization(n) {
        let mut basis: Vec<usize> = (0..=p).map(|i| i * (2 * q + 2)).collect();
        basis.extend((1..q).map(|j| 2 * j));
        basis.extend((1..q).map(|j| n - 1 - 2 * j));
        let size = p + 2 * q - 1;
        debug_assert_eq!(basis.iter().collect::<BTreeSet<_>>().len(), size);
        return verified(
            graph,
            basis,
            ClaimedCd::Interval(lower, size),
            format!("path-basis(n={n}, p={p}, q={q})"),
            None,
        );
    }
    // padded: closed form on the first m = (2l)^2 + 1 vertices, left seam
    // {1..2q+1}, and a right seam covering the stretch past x_m. The vertex
    // x_m itself is skipped unless it is the path endpoint, which any
    // centroidal locating set must contain.
    let mut l = 1;
    while (2 * (l + 1)) * (2 * (l + 1)) + 1 <= n {
        l += 1;
    }
    let m = (2 * l) * (2 * l) + 1;
    let (p, q) = (2 * l, (l - 1).max(1));
    let mut raw: Vec<usize> = (0..=p).map(|i| i * (2 * q + 2)).collect();
    raw.extend(1..=2 * q + 1);
    let seam_start = n.saturating_sub((n - m) + 2 * q + 3);
    for v in seam_start..n {
        if v != m || m == n - 1 {
            raw.push(v);
        }
    }
    raw.sort_unstable();
    raw.dedup();
    let raw_size = raw.len();
    let basis = minimize_basis(&graph, &raw);
    let size = basis.len();
    verified(
        graph,
        basis,
        ClaimedCd::Interval(lower, size),
        format!("path-basis(n={n}, padded m={m}, p={p}, q={q})"),
        Some(raw_size),
    )
}

/// One of the six families with centroidal dimension n - 1, together with a
/// canonical basis of n - 1 vertices.
pub fn extremal_family(family: Family, n: usize) -> Result<ConstructedInstance> {
    let bad = |msg: &str| Error::BadParams {
        family: format!("{family:?}"),
        msg: msg.into(),
    };
    let (graph, basis) = match family {
        Family::Complete => {
            if n < 3 {
                return Err(bad("need n >= 3"));
            }
            (generate(Family::Complete, &[n])?, (1..n).collect())
        }
        Family::Star => {
            if n < 3 {
                return Err(bad("need n >= 3"));
            }
            // centre is 0; the basis is the set of leaves
            (generate(Family::Star, &[n])?, (1..n).collect())
        }
        Family::CompleteBipartite => {
            if n < 4 {
                return Err(bad("need n >= 4"));
            }
            // parts {0, 1} and {2..n}; drop one side-vertex of the pair
            let mut b: Vec<usize> = vec![0];
            b.extend(2..n);
            (generate(Family::CompleteBipartite, &[2, n - 2])?, b)
        }
        Family::S => {
            if n < 4 {
                return Err(bad("need n >= 4"));
            }
            let mut b: Vec<usize> = vec![0];
            b.extend(2..n);
            (generate(Family::S, &[n])?, b)
        }
        Family::T => {
            if n < 4 {
                return Err(bad("need n >= 4"));
            }
            // everything except the high-degree centre (vertex 2)
            let b = (0..n).filter(|&v| v != 2).collect();
            (generate(Family::T, &[n])?, b)
        }
        Family::U => {
            if n < 4 {
                return Err(bad("need n >= 4"));
            }
            let b = (0..n).filter(|&v| v != 2).collect();
            (generate(Family::U, &[n])?, b)
        }
        other => {
            return Err(Error::BadParams {
                family: format!("{other:?}"),
                msg: "not one of the six maximum-dimension families".into(),
            })
        }
    };
    verified(
        graph,
        basis,
        ClaimedCd::Exact(n - 1),
        format!("extremal({family:?}, n={n})"),
        None,
    )
}

/// Structural recognition of the six families with centroidal dimension
/// n - 1. Returns the family, or None for any other graph.
pub fn recognize_extremal(g: &Graph) -> Option<Family> {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() {
        return None;
    }
    // K_n: every degree is n - 1
    if (0..n).all(|v| g.degree(v) == n - 1) {
        return Some(Family::Complete);
    }
    // K_{1,n-1}: one centre of degree n - 1, all others leaves
    let centres: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if centres.len() == 1 && (0..n).filter(|&v| v != centres[0]).all(|v| g.degree(v) == 1) {
        return Some(Family::Star);
    }
    // S_n: two adjacent vertices of degree n - 1, the rest an independent
    // set of degree-2 vertices joined to both
    if n >= 4 && centres.len() == 2 && g.has_edge(centres[0], centres[1]) {
        let rest: Vec<usize> = (0..n).filter(|v| !centres.contains(v)).collect();
        let ok = rest.iter().all(|&v| {
            g.degree(v) == 2 && rest.iter().all(|&w| w == v || !g.has_edge(v, w))
        });
        if ok {
            return Some(Family::S);
        }
    }
    // K_{2,n-2}: two non-adjacent vertices with identical neighbourhoods
    // covering everything else, which forms an independent set
    if n >= 4 {
        for a in 0..n {
            if g.degree(a) != n - 2 {
                continue;
            }
            for b in a + 1..n {
                if g.degree(b) != n - 2 || g.has_edge(a, b) {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
                let ok = rest.iter().all(|&v| {
                    g.has_edge(v, a)
                        && g.has_edge(v, b)
                        && g.degree(v) == 2
                });
                if ok {
                    return Some(Family::CompleteBipartite);
                }
            }
        }
    }
    // T_n: a tree that is a star with exactly one subdivided edge
    if n >= 4 && g.is_tree() {
        let deg2: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
        if n == 4 {
            // P_4: degree sequence 2,2,1,1
            if deg2.len() == 2 && g.has_edge(deg2[0], deg2[1]) {
                return Some(Family::T);
            }
        } else if deg2.len() == 1 {
            let mid = deg2[0];
            let centre = (0..n).find(|&v| g.degree(v) == n - 2);
            if let Some(c) = centre {
                let leaves_ok = (0..n)
                    .filter(|&v| v != mid && v != c)
                    .all(|v| g.degree(v) == 1);
                if leaves_ok && g.has_edge(mid, c) {
                    return Some(Family::T);
                }
            }
        }
    }
    // U_n: a triangle on {a, b, c} with leaves attached to c only
    if n >= 4 {
        if let Some(c) = (0..n).find(|&v| g.degree(v) == n - 1) {
            let deg2: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
            let leaves_ok = (0..n)
                .filter(|&v| v != c && !deg2.contains(&v))
                .all(|v| g.degree(v) == 1);
            if deg2.len() == 2 && leaves_ok && g.has_edge(deg2[0], deg2[1]) {
                return Some(Family::U);
            }
        }
    }
    None
}

/// The two 13-vertex fixtures with centroidal dimension 3.
pub fn fig2_fixtures() -> Result<Vec<ConstructedInstance>> {
    let a = verified(
        generate(Family::Fig2a, &[])?,
        vec![1, 5, 9],
        ClaimedCd::Exact(3),
        "fig2a".into(),
        None,
    )?;
    // hexagon 0..5, centre 12 joined to the odd corners, and three 2-paths
    // bridging consecutive odd corners on the outside
    let fig2b_edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 0),
        (12, 1),
        (12, 3),
        (12, 5),
        (1, 6),
        (6, 7),
        (7, 3),
        (3, 8),
        (8, 9),
        (9, 5),
        (5, 10),
        (10, 11),
        (11, 1),
    ];
    let b = verified(
        Graph::new(13, fig2b_edges)?,
        vec![1, 3, 5],
        ClaimedCd::Exact(3),
        "fig2b".into(),
        None,
    )?;
    Ok(vec![a, b])
}
