//! Strong resolution, mutually maximally distant pairs and the strong
//! resolving graph.
//!
//! A vertex `w` strongly resolves `u, v` when one of them lies on a shortest
//! path from the other to `w`. The strong metric dimension of a connected
//! graph equals the vertex cover number of its strong resolving graph, whose
//! edges are the mutually maximally distant pairs; [`sdim_via_cover`] relies
//! on that and [`brute_force_sdim`] checks it independently.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{self, DEFAULT_COVER_CAP};
use crate::distance::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Verdict;

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 16;

/// Bitmask width used by the subset enumeration.
const BRUTE_FORCE_HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    VertexCoverReduction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongBasisResult {
    pub size: usize,
    /// Sorted ascending.
    pub basis: Vec<usize>,
    pub method: Method,
}

/// Unordered, deduplicated vertex pairs stored as `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MmdPairSet {
    order: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl MmdPairSet {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }
}

fn check_pair(d: &DistanceMatrix, u: usize, v: usize) -> Result<()> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

#[inline]
fn resolves_unchecked(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    let (uw, uv, vw) = (d.get(u, w), d.get(u, v), d.get(v, w));
    if uw == UNREACHABLE || uv == UNREACHABLE || vw == UNREACHABLE {
        return false;
    }
    let (uw, uv, vw) = (uw as u64, uv as u64, vw as u64);
    uw == uv + vw || vw == uv + uw
}

/// `d(u,w) = d(u,v) + d(v,w)` or `d(v,w) = d(v,u) + d(u,w)`.
pub fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> Result<bool> {
    check_pair(d, u, v)?;
    d.check_vertex(w)?;
    Ok(resolves_unchecked(d, w, u, v))
}

/// Checks that every pair of distinct vertices is strongly resolved by some
/// member of `set`.
///
/// The witness for a failing set is the unresolved pair at largest distance,
/// ties broken lexicographically.
pub fn is_strong_resolving_set(d: &DistanceMatrix, set: &[usize]) -> Result<Verdict> {
    d.ensure_connected()?;
    for &w in set {
        d.check_vertex(w)?;
    }
    let mut witness: Option<(u32, usize, usize)> = None;
    for u in 0..d.order() {
        for v in u + 1..d.order() {
            if set.iter().any(|&w| resolves_unchecked(d, w, u, v)) {
                continue;
            }
            let dist = d.get(u, v);
            if witness.is_none_or(|(best, _, _)| dist > best) {
                witness = Some((dist, u, v));
            }
        }
    }
    Ok(witness.map_or(Verdict::Holds, |(_, u, v)| Verdict::Witness(u, v)))
}

/// Ordinary resolvability: every pair is separated by some `w` with
/// `d(u,w) != d(v,w)`.
pub fn is_resolving_set(d: &DistanceMatrix, set: &[usize]) -> bool {
    (0..d.order())
        .tuple_combinations()
        .all(|(u, v)| set.iter().any(|&w| d.get(u, w) != d.get(v, w)))
}

/// Smallest strong resolving set by exhaustive search: cardinalities in
/// increasing order, lexicographic within a cardinality, first hit wins.
pub fn brute_force_sdim(g: &Graph, size_cap: usize) -> Result<StrongBasisResult> {
    let cap = size_cap.min(BRUTE_FORCE_HARD_LIMIT);
    if g.order() > cap {
        return Err(Error::BruteForceCap {
            order: g.order(),
            cap,
        });
    }
    let d = all_pairs_distances(g);
    d.ensure_connected()?;
    let n = g.order();

    let resolvers: Vec<u64> = (0..n)
        .tuple_combinations()
        .map(|(u, v)| {
            (0..n)
                .filter(|&w| resolves_unchecked(&d, w, u, v))
                .fold(0u64, |mask, w| mask | 1 << w)
        })
        .collect();

    for k in 0..=n {
        for subset in (0..n).combinations(k) {
            let mask = subset.iter().fold(0u64, |m, &w| m | 1 << w);
            if resolvers.iter().all(|r| r & mask != 0) {
                return Ok(StrongBasisResult {
                    size: k,
                    basis: subset,
                    method: Method::BruteForce,
                });
            }
        }
    }
    unreachable!("the full vertex set strongly resolves every pair")
}

/// `u MD v`: no neighbor of `u` is farther from `v` than `u` is.
pub fn is_maximally_distant(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Result<bool> {
    check_pair(d, u, v)?;
    g.check_vertex(u)?;
    Ok(md_unchecked(g, d, u, v))
}

#[inline]
fn md_unchecked(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let reach = d.get(u, v);
    g.neighbors(u).iter().all(|&w| d.get(w, v) <= reach)
}

/// All pairs `{u, v}` with `u MD v` and `v MD u`.
pub fn mmd_pairs(g: &Graph) -> Result<MmdPairSet> {
    let d = all_pairs_distances(g);
    mmd_pairs_with(g, &d)
}

pub fn mmd_pairs_with(g: &Graph, d: &DistanceMatrix) -> Result<MmdPairSet> {
    d.ensure_connected()?;
    let n = g.order();
    let md: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|u| (0..n).map(|v| u != v && md_unchecked(g, d, u, v)).collect())
        .collect();
    let pairs = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| md[u][v] && md[v][u])
        .collect();
    Ok(MmdPairSet { order: n, pairs })
}

/// Same vertex set and labels as `g`, with the MMD pairs as edges.
pub fn strong_resolving_graph(g: &Graph) -> Result<Graph> {
    let pairs = mmd_pairs(g)?;
    let edges: Vec<_> = pairs.iter().collect();
    g.respan(&edges)
}

pub fn sdim_via_cover(g: &Graph) -> Result<StrongBasisResult> {
    sdim_via_cover_capped(g, DEFAULT_COVER_CAP)
}

/// Minimum vertex cover of the strong resolving graph, re-checked as a
/// strong resolving set of `g` before it is returned.
pub fn sdim_via_cover_capped(g: &Graph, cover_cap: usize) -> Result<StrongBasisResult> {
    let d = all_pairs_distances(g);
    let pairs = mmd_pairs_with(g, &d)?;
    let srg = g.respan(&pairs.iter().collect::<Vec<_>>())?;
    let cover = cover::exact_min_vertex_cover_capped(&srg, cover_cap)?;
    if let Verdict::Witness(u, v) = is_strong_resolving_set(&d, &cover.cover)? {
        return Err(Error::Inconsistent(format!(
            "minimum cover of the strong resolving graph leaves {{{}, {}}} unresolved",
            g.name(u),
            g.name(v)
        )));
    }
    Ok(StrongBasisResult {
        size: cover.size,
        basis: cover.cover,
        method: Method::VertexCoverReduction,
    })
}
