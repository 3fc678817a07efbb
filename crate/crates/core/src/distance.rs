//! All-pairs BFS distances.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Marks a pair with no connecting path. Never used in arithmetic.
pub const UNREACHABLE: u32 = u32::MAX;

/// Dense `order x order` table of shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance between `u` and `v`, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Largest finite entry; fails on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        self.ensure_connected()?;
        Ok(self.dist.iter().copied().max().unwrap_or(0))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }
}

/// One BFS per source. Rows are computed in parallel and written to fixed
/// slots, so the result does not depend on scheduling.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let order = g.order();
    let mut dist = vec![UNREACHABLE; order * order];
    if order > 0 {
        dist.par_chunks_mut(order)
            .enumerate()
            .for_each(|(source, row)| bfs_into(g, source, row));
    }
    DistanceMatrix { order, dist }
}

fn bfs_into(g: &Graph, source: usize, row: &mut [u32]) {
    let mut queue = VecDeque::new();
    row[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            if row[v] == UNREACHABLE {
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
}

pub fn diameter(g: &Graph) -> Result<u32> {
    all_pairs_distances(g).diameter()
}
