//! Simple undirected graphs with contiguous vertex labels, plus the
//! edge-list text format and the generators for the graph families
//! used throughout the crate.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable simple undirected graph. Vertices are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Open neighbourhood as a sorted set.
    pub fn open_neighborhood(&self, u: usize) -> BTreeSet<usize> {
        self.adj[u].iter().copied().collect()
    }

    /// Closed neighbourhood as a sorted set.
    pub fn closed_neighborhood(&self, u: usize) -> BTreeSet<usize> {
        let mut s = self.open_neighborhood(u);
        s.insert(u);
        s
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Serializes to the edge-list text format (header line + one edge per line).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list text format: `#` comments, optional `n <count>`
/// header, one `u v` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "n" {
            if idx != 0 && declared_n.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "duplicate header line".into(),
                });
            }
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must be `n <count>`".into(),
                });
            }
            declared_n = Some(toks[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad vertex count `{}`", toks[1]),
            })?);
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected `u v`, got `{line}`"),
            });
        }
        let parse = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("malformed vertex id `{t}`"),
            })
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = match (declared_n, max_id) {
        (Some(n), Some(m)) if m >= n => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("vertex id {m} exceeds declared count {n}"),
            })
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    Graph::new(n, edges)
}

/// The named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    /// `K_2` joined to an independent set of `n - 2` vertices.
    S,
    /// `P_3` with `n - 3` leaves attached to one end.
    T,
    /// `K_3` with `n - 3` leaves attached to one triangle vertex.
    U,
    Hypercube,
    /// The 13-vertex graph: a 12-cycle plus a center adjacent to `x3, x7, x11`.
    Fig2a,
}

impl Family {
    pub fn from_name(name: &str) -> Result<Family> {
        Ok(match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "complete_bipartite" | "complete-bipartite" => Family::CompleteBipartite,
            "S" | "s" => Family::S,
            "T" | "t" => Family::T,
            "U" | "u" => Family::U,
            "hypercube" => Family::Hypercube,
            "fig2a" => Family::Fig2a,
            other => return Err(Error::UnknownFamily(other.into())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::CompleteBipartite => "complete_bipartite",
            Family::S => "s",
            Family::T => "t",
            Family::U => "u",
            Family::Hypercube => "hypercube",
            Family::Fig2a => "fig2a",
        }
    }
}

fn bad(family: &str, msg: &str) -> Error {
    Error::BadParams {
        family: family.into(),
        msg: msg.into(),
    }
}

/// Generates a member of the named family.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    let one = |name: &str| -> Result<usize> {
        params
            .first()
            .copied()
            .ok_or_else(|| bad(name, "missing size parameter"))
    };
    match family {
        Family::Path => {
            let n = one("path")?;
            if n < 1 {
                return Err(bad("path", "need n >= 1"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            let n = one("cycle")?;
            if n < 3 {
                return Err(bad("cycle", "need n >= 3"));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete => {
            let n = one("complete")?;
            Graph::new(n, pairs(n))
        }
        Family::Star => {
            let n = one("star")?;
            if n < 2 {
                return Err(bad("star", "need n >= 2"));
            }
            Graph::new(n, (1..n).map(|i| (0, i)))
        }
        Family::CompleteBipartite => {
            let (a, b) = match params {
                [a, b] => (*a, *b),
                _ => return Err(bad("complete_bipartite", "need two part sizes")),
            };
            if a < 1 || b < 1 {
                return Err(bad("complete_bipartite", "parts must be non-empty"));
            }
            Graph::new(
                a + b,
                (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
            )
        }
        Family::S => {
            let n = one("S")?;
            if n < 4 {
                return Err(bad("S", "need n >= 4"));
            }
            let mut e = vec![(0, 1)];
            for v in 2..n {
                e.push((0, v));
                e.push((1, v));
            }
            Graph::new(n, e)
        }
        Family::T => {
            let n = one("T")?;
            if n < 4 {
                return Err(bad("T", "need n >= 4"));
            }
            let mut e = vec![(0, 1), (1, 2)];
            e.extend((3..n).map(|v| (2, v)));
            Graph::new(n, e)
        }
        Family::U => {
            let n = one("U")?;
            if n < 4 {
                return Err(bad("U", "need n >= 4"));
            }
            let mut e = vec![(0, 1), (0, 2), (1, 2)];
            e.extend((3..n).map(|v| (2, v)));
            Graph::new(n, e)
        }
        Family::Hypercube => {
            let k = one("hypercube")?;
            if k < 1 || k > 20 {
                return Err(bad("hypercube", "need 1 <= k <= 20"));
            }
            let n = 1usize << k;
            let mut e = Vec::new();
            for u in 0..n {
                for bit in 0..k {
                    let v = u ^ (1 << bit);
                    if u < v {
                        e.push((u, v));
                    }
                }
            }
            Graph::new(n, e)
        }
        Family::Fig2a => {
            let mut e: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
            e.extend([(12, 3), (12, 7), (12, 11)]);
            Graph::new(13, e)
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}
