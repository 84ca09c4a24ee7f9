//! All-pairs hop distances via per-source BFS.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const INFINITY: u32 = u32::MAX;

/// All-pairs shortest-path table for a graph; entries are hop counts,
/// `INFINITY` for unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Vec<u32>>,
    connected: bool,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn connected(&self) -> bool {
        self.connected
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.d[u][v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u]
    }

    /// Maximum eccentricity. Errors on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        if !self.connected {
            return Err(Error::Disconnected);
        }
        Ok(self
            .d
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0))
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.d[u].iter().copied().max().unwrap_or(0)
    }
}

/// Runs a BFS from every source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![vec![INFINITY; n]; n];
    let mut connected = true;
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == INFINITY {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.iter().any(|&x| x == INFINITY) {
            connected = false;
        }
    }
    DistanceMatrix { n, d, connected }
}
