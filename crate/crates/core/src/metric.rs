//! Shortest-path distances.
//!
//! Two independent routes: the direct rule for Γ_k (0 / 1 / 2 by adjacency)
//! and breadth-first search, which works on any graph.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DprimeGraph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("graph is disconnected: vertex {to} is unreachable from vertex {from}")]
    Disconnected { from: usize, to: usize },
}

/// Square matrix of pairwise distances in the graph's canonical vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        Self {
            order,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.order..(u + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        // chunks_exact(0) panics, and the empty matrix has no rows anyway
        self.data.chunks_exact(self.order.max(1))
    }

    /// D_u: sum of distances from `u` to every vertex.
    pub fn transmission(&self, u: usize) -> u64 {
        self.row(u).iter().map(|&d| d as u64).sum()
    }

    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.order).map(|u| self.transmission(u)).collect()
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Number of ordered off-diagonal pairs at distance `d`.
    pub fn count_entries(&self, d: u32) -> usize {
        let mut count = self.data.iter().filter(|&&x| x == d).count();
        if d == 0 {
            count -= self.order;
        }
        count
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|u| (0..u).all(|v| self.get(u, v) == self.get(v, u)))
    }

    pub fn satisfies_triangle_inequality(&self) -> bool {
        let n = self.order;
        (0..n).all(|u| {
            (0..n).all(|v| (0..n).all(|w| self.get(u, v) <= self.get(u, w) + self.get(w, v)))
        })
    }

    /// CSV with a header row of vertex labels followed by one row per vertex.
    pub fn to_csv(&self, labels: &[String]) -> String {
        assert_eq!(labels.len(), self.order);
        let mut out = labels.join(",");
        out.push('\n');
        for row in self.rows().take(self.order) {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Distance in Γ_k: 0 on the diagonal, 1 between comparable divisors, else 2
/// (any two divisors are joined through 1).
pub fn distance_fast(g: &DprimeGraph, u: usize, v: usize) -> u32 {
    if u == v {
        0
    } else if g.adjacent(u, v) {
        1
    } else {
        2
    }
}

pub fn distance_matrix_fast(g: &DprimeGraph) -> DistanceMatrix {
    let n = g.order();
    let rows = (0..n)
        .into_par_iter()
        .map(|u| (0..n).map(|v| distance_fast(g, u, v)).collect())
        .collect();
    DistanceMatrix::from_rows(rows)
}

fn bfs_row(adjacency: &[Vec<usize>], source: usize) -> Result<Vec<u32>, MetricError> {
    let mut dist = vec![u32::MAX; adjacency.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in &adjacency[x] {
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    match dist.iter().position(|&d| d == u32::MAX) {
        Some(to) => Err(MetricError::Disconnected { from: source, to }),
        None => Ok(dist),
    }
}

/// All-pairs distances by one breadth-first search per vertex.
pub fn distance_matrix_bfs<G: Graph + ?Sized>(g: &G) -> Result<DistanceMatrix, MetricError> {
    let n = g.order();
    let adjacency: Vec<Vec<usize>> = (0..n).into_par_iter().map(|u| g.neighbors(u)).collect();
    let rows = (0..n)
        .into_par_iter()
        .map(|s| bfs_row(&adjacency, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DistanceMatrix::from_rows(rows))
}

/// For an edge `uv`: how many vertices are strictly closer to each endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCloserCounts {
    pub n_u: usize,
    pub n_v: usize,
}

impl EdgeCloserCounts {
    pub fn imbalance(&self) -> usize {
        self.n_u.abs_diff(self.n_v)
    }
}

pub fn mostar_counts(dm: &DistanceMatrix, u: usize, v: usize) -> EdgeCloserCounts {
    let (mut n_u, mut n_v) = (0, 0);
    for w in 0..dm.order() {
        let (du, dv) = (dm.get(w, u), dm.get(w, v));
        if du < dv {
            n_u += 1;
        } else if dv < du {
            n_v += 1;
        }
    }
    EdgeCloserCounts { n_u, n_v }
}
