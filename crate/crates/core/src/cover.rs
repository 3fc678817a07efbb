//! Minimum vertex cover and maximum independent set.
//!
//! The exact solver is a deterministic branch and bound:
//!
//! 1. drop isolated vertices, and for any degree-1 vertex put its neighbor
//!    into the cover; repeat until neither rule applies;
//! 2. prune when `|partial cover| + |maximal matching|` cannot beat the
//!    incumbent;
//! 3. branch on a maximum-degree vertex (lowest id first): either it joins
//!    the cover, or all of its remaining neighbors do.
//!
//! The incumbent starts from [`greedy_cover`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Verdict;

pub const DEFAULT_COVER_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    /// Sorted ascending.
    pub cover: Vec<usize>,
    pub size: usize,
    pub optimal: bool,
    pub nodes_explored: u64,
}

/// Checks that every edge has an endpoint in `set`. On failure the witness is
/// the lexicographically first uncovered edge.
pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> Result<Verdict> {
    let mut member = vec![false; g.order()];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    Ok(g.edges()
        .find(|&(u, v)| !member[u] && !member[v])
        .map_or(Verdict::Holds, |(u, v)| Verdict::Witness(u, v)))
}

/// Size of the maximal matching built by scanning edges in lexicographic
/// order. Any maximal matching bounds the cover number from below.
pub fn matching_lower_bound(g: &Graph) -> usize {
    let alive = vec![true; g.order()];
    greedy_matching(g, &alive)
}

fn greedy_matching(g: &Graph, alive: &[bool]) -> usize {
    let mut matched = vec![false; g.order()];
    let mut size = 0;
    for (u, v) in g.edges() {
        if alive[u] && alive[v] && !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            size += 1;
        }
    }
    size
}

/// Repeatedly takes a vertex of maximum remaining degree (lowest id on ties).
pub fn greedy_cover(g: &Graph) -> CoverResult {
    let mut state = State::new(g);
    while let Some(v) = state.max_degree_vertex() {
        state.take(g, v);
    }
    let mut cover = state.chosen;
    cover.sort_unstable();
    let size = cover.len();
    CoverResult {
        optimal: size == matching_lower_bound(g),
        cover,
        size,
        nodes_explored: 0,
    }
}

pub fn exact_min_vertex_cover(g: &Graph) -> Result<CoverResult> {
    exact_min_vertex_cover_capped(g, DEFAULT_COVER_CAP)
}

pub fn exact_min_vertex_cover_capped(g: &Graph, cap: usize) -> Result<CoverResult> {
    if g.order() > cap {
        return Err(Error::CoverCap {
            order: g.order(),
            cap,
        });
    }
    let greedy = greedy_cover(g);
    let mut search = Search {
        graph: g,
        best: greedy.cover,
        nodes: 0,
    };
    search.run(State::new(g));
    let mut cover = search.best;
    cover.sort_unstable();
    Ok(CoverResult {
        size: cover.len(),
        cover,
        optimal: true,
        nodes_explored: search.nodes,
    })
}

/// Complement of the exact minimum cover.
pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>> {
    max_independent_set_capped(g, DEFAULT_COVER_CAP)
}

pub fn max_independent_set_capped(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let cover = exact_min_vertex_cover_capped(g, cap)?;
    let mut in_cover = vec![false; g.order()];
    for &v in &cover.cover {
        in_cover[v] = true;
    }
    Ok((0..g.order()).filter(|&v| !in_cover[v]).collect())
}

#[derive(Clone)]
struct State {
    alive: Vec<bool>,
    degree: Vec<usize>,
    chosen: Vec<usize>,
}

impl State {
    fn new(g: &Graph) -> Self {
        State {
            alive: vec![true; g.order()],
            degree: g.degree_sequence(),
            chosen: Vec::new(),
        }
    }

    fn remove(&mut self, g: &Graph, v: usize) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        for &w in g.neighbors(v) {
            if self.alive[w] {
                self.degree[w] -= 1;
            }
        }
    }

    fn take(&mut self, g: &Graph, v: usize) {
        self.chosen.push(v);
        self.remove(g, v);
    }

    fn alive_neighbors<'g>(&'g self, g: &'g Graph, v: usize) -> impl Iterator<Item = usize> + 'g {
        g.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    /// Maximum-degree alive vertex with at least one edge; lowest id wins ties.
    fn max_degree_vertex(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.alive.len() {
            if self.alive[v]
                && self.degree[v] > 0
                && best.is_none_or(|b| self.degree[v] > self.degree[b])
            {
                best = Some(v);
            }
        }
        best
    }

    fn reduce(&mut self, g: &Graph) {
        loop {
            let mut changed = false;
            for v in 0..self.alive.len() {
                if !self.alive[v] {
                    continue;
                }
                match self.degree[v] {
                    0 => {
                        self.remove(g, v);
                        changed = true;
                    }
                    1 => {
                        let u = self
                            .alive_neighbors(g, v)
                            .next()
                            .expect("degree-1 vertex has an alive neighbor");
                        self.take(g, u);
                        self.remove(g, v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }
}

struct Search<'g> {
    graph: &'g Graph,
    best: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, mut state: State) {
        self.nodes += 1;
        let g = self.graph;
        state.reduce(g);
        let Some(pivot) = state.max_degree_vertex() else {
            if state.chosen.len() < self.best.len() {
                self.best = state.chosen;
            }
            return;
        };
        if state.chosen.len() + greedy_matching(g, &state.alive) >= self.best.len() {
            return;
        }

        let mut with_pivot = state.clone();
        with_pivot.take(g, pivot);
        self.run(with_pivot);

        let neighbors: Vec<usize> = state.alive_neighbors(g, pivot).collect();
        for w in neighbors {
            state.take(g, w);
        }
        state.remove(g, pivot);
        self.run(state);
    }
}
