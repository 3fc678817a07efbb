//! Undirected simple graphs on contiguous vertex ids `0..order`.

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;

use crate::error::{Error, Result};

/// An undirected simple graph with sorted neighbor lists and optional labels.
///
/// Instances are immutable once built; every constructor validates that the
/// edge list has no self-loops, no duplicates and no out-of-range ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Builds a graph from an edge list. Each edge is reported with its
    /// position in the list when it violates an invariant.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); order];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            check_edge(order, u, v).map_err(|e| e.at(format!("edge #{idx} ({u}, {v})")))?;
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph {
            adjacency,
            labels: BTreeMap::new(),
        })
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            labels: BTreeMap::new(),
        }
    }

    /// Attaches display labels. Ids outside the vertex range are rejected.
    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some(&v) = labels.keys().find(|&&v| v >= self.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }
            .at(format!("label for vertex {v}")));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Display name of `v`: its label when present, otherwise the decimal id.
    pub fn name(&self, v: usize) -> String {
        self.labels
            .get(&v)
            .cloned()
            .unwrap_or_else(|| v.to_string())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// True iff a BFS from vertex 0 reaches every vertex. Graphs of order at
    /// most one are connected.
    pub fn is_connected(&self) -> bool {
        if self.order() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.order()
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Same vertex set and labels with a new edge set.
    pub(crate) fn respan(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(self.order(), edges)?;
        g.labels = self.labels.clone();
        Ok(g)
    }
}

fn check_edge(order: usize, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= order {
            return Err(Error::VertexOutOfRange { vertex: w, order });
        }
    }
    if u == v {
        return Err(Error::SelfLoop { vertex: u });
    }
    Ok(())
}

/// Path `0 - 1 - ... - (order-1)`.
pub fn path(order: usize) -> Graph {
    let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
    Graph::new(order, &edges).expect("path edges are valid")
}

/// Cycle on `order >= 3` vertices.
pub fn cycle(order: usize) -> Result<Graph> {
    if order < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {order}"
        )));
    }
    let edges: Vec<_> = (0..order).map(|v| (v, (v + 1) % order)).collect();
    Graph::new(order, &edges)
}

pub fn complete(order: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            edges.push((u, v));
        }
    }
    Graph::new(order, &edges).expect("complete edges are valid")
}

/// Star `K_{1,leaves}` with the center at id 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are valid")
}

/// Random connected graph: a uniformly attached spanning tree plus each
/// remaining pair independently with probability `extra_edge_prob`.
pub fn random_connected<R: Rng + ?Sized>(order: usize, extra_edge_prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..order {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..order {
        for v in u + 1..order {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, &edges).expect("generated edges are valid")
}
