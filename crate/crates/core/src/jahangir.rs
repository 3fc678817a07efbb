//! Generalized Jahangir graphs `J(n, m)` and their closed forms.
//!
//! `J(n, m)` is the cycle `u_1 ... u_{nm}` plus a hub `c` adjacent to the
//! spoke vertices `u_{nk+1}`, `k = 0..m`. Vertex ids follow the conventional
//! names directly: the hub is id 0 and `u_i` is id `i`. Rim subscripts are
//! taken modulo `nm` into `1..=nm`, so `u_0 = u_{nm}` and `u_{nm+1} = u_1`.
//!
//! The internal cycle `C_k` is `c u_{nk+1} ... u_{n(k+1)+1} c` (length
//! `n + 2`). Consecutive internal cycles share one edge.
//!
//! Predicted edge sets, covers and lemma pair sets are generated as rim
//! subscripts and mapped to vertex ids through [`JahangirLabeling`]; every
//! comparison against the computed graph happens on ids.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::cover::{exact_min_vertex_cover_capped, is_vertex_cover, DEFAULT_COVER_CAP};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::strong::{
    brute_force_sdim, mmd_pairs_with, sdim_via_cover_capped, DEFAULT_BRUTE_FORCE_CAP,
};
use crate::Verdict;

pub type PairSet = BTreeSet<(usize, usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JahangirParams {
    n: usize,
    m: usize,
}

/// Which closed-form result, if any, covers a parameter pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `m = 3`, `n` in `{2, 3, 4}`.
    BaseCase,
    /// `n > 5` even, `m >= 4`.
    Even,
    /// `n >= 5` odd, `m >= 4`.
    Odd,
    /// Computable, but no closed form applies.
    Exploratory,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::BaseCase => "base",
            Regime::Even => "even",
            Regime::Odd => "odd",
            Regime::Exploratory => "exploratory",
        })
    }
}

impl JahangirParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 3 {
            return Err(Error::InvalidJahangir { n, m });
        }
        Ok(JahangirParams { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rim_len(&self) -> usize {
        self.n * self.m
    }

    pub fn order(&self) -> usize {
        self.rim_len() + 1
    }

    pub fn regime(&self) -> Regime {
        let (n, m) = (self.n, self.m);
        if m == 3 && (2..=4).contains(&n) {
            Regime::BaseCase
        } else if m >= 4 && n % 2 == 0 && n > 5 {
            Regime::Even
        } else if m >= 4 && n % 2 == 1 && n >= 5 {
            Regime::Odd
        } else {
            Regime::Exploratory
        }
    }

    fn require(&self, regime: Regime, what: &'static str) -> Result<()> {
        if self.regime() == regime {
            Ok(())
        } else {
            Err(Error::OutsideHypothesis {
                what,
                n: self.n,
                m: self.m,
            })
        }
    }
}

impl fmt::Display for JahangirParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({},{})", self.n, self.m)
    }
}

/// Conventional name of a Jahangir vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JahangirVertex {
    Hub,
    /// Rim subscript in `1..=nm`.
    Rim(usize),
}

impl fmt::Display for JahangirVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JahangirVertex::Hub => f.write_str("c"),
            JahangirVertex::Rim(i) => write!(f, "u{i}"),
        }
    }
}

/// Maps between conventional names and vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JahangirLabeling {
    params: JahangirParams,
}

impl JahangirLabeling {
    pub fn new(params: JahangirParams) -> Self {
        JahangirLabeling { params }
    }

    pub fn params(&self) -> JahangirParams {
        self.params
    }

    pub fn hub(&self) -> usize {
        0
    }

    /// Id of `u_i`, with `i` reduced modulo `nm` into `1..=nm`.
    pub fn rim(&self, i: i64) -> usize {
        self.rim_index(i)
    }

    /// Normalized subscript; ids and subscripts coincide for rim vertices.
    pub fn rim_index(&self, i: i64) -> usize {
        let len = self.params.rim_len() as i64;
        ((i - 1).rem_euclid(len) + 1) as usize
    }

    pub fn vertex(&self, id: usize) -> JahangirVertex {
        if id == 0 {
            JahangirVertex::Hub
        } else {
            JahangirVertex::Rim(id)
        }
    }

    pub fn id(&self, v: JahangirVertex) -> usize {
        match v {
            JahangirVertex::Hub => self.hub(),
            JahangirVertex::Rim(i) => self.rim(i as i64),
        }
    }

    pub fn name(&self, id: usize) -> String {
        self.vertex(id).to_string()
    }

    /// Normalized unordered id pair for `{u_a, u_b}`.
    pub fn rim_pair(&self, a: i64, b: i64) -> (usize, usize) {
        let (x, y) = (self.rim(a), self.rim(b));
        (x.min(y), x.max(y))
    }

    pub fn pair_name(&self, (u, v): (usize, usize)) -> String {
        format!("{}{}", self.name(u), self.name(v))
    }

    /// Ids of the internal cycle `C_k`: the hub followed by
    /// `u_{nk+1}, ..., u_{n(k+1)+1}`.
    pub fn internal_cycle(&self, k: usize) -> Vec<usize> {
        let n = self.params.n as i64;
        let base = n * k as i64;
        std::iter::once(self.hub())
            .chain((1..=n + 1).map(|t| self.rim(base + t)))
            .collect()
    }

    /// Ids of `V(C_k) ∩ U_2`: `u_{nk+2}, ..., u_{nk+n}`.
    pub fn internal_cycle_u2(&self, k: usize) -> Vec<usize> {
        let n = self.params.n as i64;
        (2..=n).map(|t| self.rim(n * k as i64 + t)).collect()
    }
}

/// Builds `J(n, m)` with labels `c`, `u1`, ..., `u{nm}`.
pub fn build_jahangir(p: JahangirParams) -> (Graph, JahangirLabeling) {
    let labeling = JahangirLabeling::new(p);
    let len = p.rim_len();
    let mut edges: Vec<(usize, usize)> =
        (1..=len).map(|i| (i, labeling.rim(i as i64 + 1))).collect();
    edges.extend((0..p.m).map(|k| (labeling.hub(), labeling.rim((p.n * k + 1) as i64))));
    let labels: BTreeMap<usize, String> = (0..p.order()).map(|v| (v, labeling.name(v))).collect();
    let g = Graph::new(p.order(), &edges)
        .and_then(|g| g.with_labels(labels))
        .expect("Jahangir construction is a simple graph");
    (g, labeling)
}

/// Recovers `(n, m)` when `g` is exactly the graph [`build_jahangir`] would
/// produce (same ids and edges; labels are ignored).
pub fn recognize_jahangir(g: &Graph) -> Option<JahangirParams> {
    let rim = g.order().checked_sub(1)?;
    let m = g.degree(0);
    if m == 0 || rim % m != 0 {
        return None;
    }
    let p = JahangirParams::new(rim / m, m).ok()?;
    let (canonical, _) = build_jahangir(p);
    canonical.edges().eq(g.edges()).then_some(p)
}

/// Closed-form diameter `2(⌊n/2⌋ + 1)`.
///
/// BFS agrees for every `m >= 4` and for odd `n`. With `m = 3` and even `n`
/// all three internal cycles pairwise share an edge and the true diameter is
/// `n + 1`, one less than this value.
pub fn diameter_formula(p: JahangirParams) -> u32 {
    2 * (p.n as u32 / 2 + 1)
}

/// Strong metric dimension where a closed form is known, `None` otherwise.
pub fn sdim_formula(p: JahangirParams) -> Option<usize> {
    let (n, m) = (p.n, p.m);
    match p.regime() {
        Regime::BaseCase => Some(3),
        Regime::Even => Some(m * (n - 2) / 2),
        Regime::Odd => Some(m * (n - 1) / 2 + m - 3),
        Regime::Exploratory => None,
    }
}

/// The three edge families making up a predicted strong resolving graph, as
/// normalized id pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeFamilies {
    /// Pairs across consecutive internal cycles.
    pub a: PairSet,
    /// Pairs across internal cycles sharing no edge.
    pub b: PairSet,
    /// Pairs inside a single internal cycle.
    pub c: PairSet,
}

impl EdgeFamilies {
    pub fn union(&self) -> PairSet {
        self.a
            .iter()
            .chain(&self.b)
            .chain(&self.c)
            .copied()
            .collect()
    }

    pub fn pairwise_disjoint(&self) -> bool {
        self.a.is_disjoint(&self.b) && self.a.is_disjoint(&self.c) && self.b.is_disjoint(&self.c)
    }
}

/// `k, k'` with `k != k'` and `|k - k'|` not in `{1, m - 1}`.
fn non_adjacent_cycle_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |k| {
        (0..m).filter_map(move |k2| {
            let diff = k.abs_diff(k2);
            (k != k2 && diff != 1 && diff != m - 1).then_some((k, k2))
        })
    })
}

/// Predicted strong resolving graph for even `n > 5`, `m >= 4`.
pub fn predicted_srg_edges_even(p: JahangirParams) -> Result<EdgeFamilies> {
    p.require(Regime::Even, "the even-n edge families")?;
    let lab = JahangirLabeling::new(p);
    let (n, m, h) = (p.n as i64, p.m, (p.n / 2) as i64);
    let mut fam = EdgeFamilies::default();
    for k in 0..m as i64 {
        fam.a
            .insert(lab.rim_pair(n * k + h + 1, n * (k + 1) + h + 2));
        fam.a.insert(lab.rim_pair(n * k + h + 1, n * (k - 1) + h));
        for i in 2..h {
            fam.c.insert(lab.rim_pair(n * k + i, n * k + i + h + 1));
        }
    }
    for (k, k2) in non_adjacent_cycle_pairs(m) {
        let (k, k2) = (k as i64, k2 as i64);
        fam.b.insert(lab.rim_pair(n * k + h + 1, n * k2 + h + 1));
    }
    Ok(fam)
}

/// Predicted strong resolving graph for odd `n >= 5`, `m >= 4`.
pub fn predicted_srg_edges_odd(p: JahangirParams) -> Result<EdgeFamilies> {
    p.require(Regime::Odd, "the odd-n edge families")?;
    let lab = JahangirLabeling::new(p);
    let (n, m, h) = (p.n as i64, p.m, (p.n / 2) as i64);
    let mut fam = EdgeFamilies::default();
    for k in 0..m as i64 {
        let (next, prev) = (n * (k + 1), n * (k - 1));
        let here = n * k;
        for (a, b) in [
            (here + h, next + h + 1),
            (here + h + 1, prev + h),
            (here + h + 1, next + h + 2),
            (here + h + 2, prev + h + 1),
            (here + h + 2, next + h + 3),
            (here + h + 3, prev + h + 2),
        ] {
            fam.a.insert(lab.rim_pair(a, b));
        }
        for i in 2..=h {
            for j in h + 3..=n {
                if j - i == h + 1 || j - i == h + 2 {
                    fam.c.insert(lab.rim_pair(here + i, here + j));
                }
            }
        }
    }
    for (k, k2) in non_adjacent_cycle_pairs(m) {
        let (k, k2) = (k as i64, k2 as i64);
        for a in [h + 1, h + 2] {
            for b in [h + 1, h + 2] {
                fam.b.insert(lab.rim_pair(n * k + a, n * k2 + b));
            }
        }
    }
    Ok(fam)
}

/// Mutually maximally distant pairs listed for `J(2,3)`, `J(3,3)` and
/// `J(4,3)`.
pub fn predicted_srg_edges_base(p: JahangirParams) -> Result<PairSet> {
    p.require(Regime::BaseCase, "the m = 3 base cases")?;
    let lab = JahangirLabeling::new(p);
    let listed: &[(i64, i64)] = match p.n {
        2 => &[(2, 5), (4, 1), (6, 3)],
        3 => &[(2, 6), (3, 8), (5, 9)],
        _ => &[(3, 8), (3, 10), (7, 2), (7, 12), (11, 4), (11, 6)],
    };
    Ok(listed.iter().map(|&(a, b)| lab.rim_pair(a, b)).collect())
}

/// Predicted edge set of the strong resolving graph, when one is known.
pub fn predicted_srg_edges(p: JahangirParams) -> Option<PairSet> {
    match p.regime() {
        Regime::BaseCase => predicted_srg_edges_base(p).ok(),
        Regime::Even => predicted_srg_edges_even(p).ok().map(|f| f.union()),
        Regime::Odd => predicted_srg_edges_odd(p).ok().map(|f| f.union()),
        Regime::Exploratory => None,
    }
}

/// The explicit minimum cover for even `n > 5`, `m >= 4`: the middle vertex
/// of every internal cycle plus `u_{nk+2}, ..., u_{nk+n/2-1}`.
pub fn predicted_cover_even(p: JahangirParams) -> Result<BTreeSet<usize>> {
    p.require(Regime::Even, "the even-n cover")?;
    let lab = JahangirLabeling::new(p);
    let (n, h) = (p.n as i64, (p.n / 2) as i64);
    let mut cover = BTreeSet::new();
    for k in 0..p.m as i64 {
        cover.insert(lab.rim(n * k + h + 1));
        cover.extend((2..h).map(|i| lab.rim(n * k + i)));
    }
    Ok(cover)
}

/// The explicit minimum cover for odd `n >= 5`, `m >= 4`.
pub fn predicted_cover_odd(p: JahangirParams) -> Result<BTreeSet<usize>> {
    p.require(Regime::Odd, "the odd-n cover")?;
    let lab = JahangirLabeling::new(p);
    let (n, m, h) = (p.n as i64, p.m as i64, (p.n / 2) as i64);
    let mut cover = BTreeSet::new();
    for l in 0..=m - 3 {
        cover.insert(lab.rim(n * l + h + 1));
        cover.insert(lab.rim(n * l + h + 2));
    }
    cover.insert(lab.rim(n * (m - 1) + h + 2));
    for k in 0..=m - 2 {
        cover.extend((2..=h).map(|i| lab.rim(n * k + i)));
    }
    cover.extend((h + 3..=n).map(|i| lab.rim(n * (m - 1) + i)));
    Ok(cover)
}

pub fn predicted_cover(p: JahangirParams) -> Option<BTreeSet<usize>> {
    match p.regime() {
        Regime::Even => predicted_cover_even(p).ok(),
        Regime::Odd => predicted_cover_odd(p).ok(),
        Regime::BaseCase | Regime::Exploratory => None,
    }
}

/// The six distance characterizations, three per parity of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaCase {
    /// Consecutive internal cycles, `d = n + 1`.
    EvenA,
    /// Internal cycles sharing no edge, `d = n + 2`.
    EvenB,
    /// Inside one internal cycle, `d = n/2 + 1`.
    EvenC,
    /// Consecutive internal cycles, `d = n + 1`; also the `d = n` pairs off
    /// every diametrical path.
    OddA,
    /// Internal cycles sharing no edge, `d = n + 1`.
    OddB,
    /// Inside one internal cycle, `d = ⌊n/2⌋ + 1`.
    OddC,
}

impl LemmaCase {
    pub const EVEN: [LemmaCase; 3] = [LemmaCase::EvenA, LemmaCase::EvenB, LemmaCase::EvenC];
    pub const ODD: [LemmaCase; 3] = [LemmaCase::OddA, LemmaCase::OddB, LemmaCase::OddC];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaCase::EvenA => "even-a",
            LemmaCase::EvenB => "even-b",
            LemmaCase::EvenC => "even-c",
            LemmaCase::OddA => "odd-a",
            LemmaCase::OddB => "odd-b",
            LemmaCase::OddC => "odd-c",
        }
    }

    fn regime(&self) -> Regime {
        match self {
            LemmaCase::EvenA | LemmaCase::EvenB | LemmaCase::EvenC => Regime::Even,
            _ => Regime::Odd,
        }
    }

    fn target_distance(&self, p: JahangirParams) -> u32 {
        let n = p.n as u32;
        match self {
            LemmaCase::EvenA | LemmaCase::OddA | LemmaCase::OddB => n + 1,
            LemmaCase::EvenB => n + 2,
            LemmaCase::EvenC | LemmaCase::OddC => n / 2 + 1,
        }
    }

    /// Which pairs of internal cycles the case ranges over.
    fn cells(&self, m: usize) -> Vec<(usize, usize)> {
        match self {
            LemmaCase::EvenA | LemmaCase::OddA => (0..m).map(|k| (k, (k + 1) % m)).collect(),
            LemmaCase::EvenB | LemmaCase::OddB => non_adjacent_cycle_pairs(m)
                .filter(|&(k, k2)| k < k2)
                .collect(),
            LemmaCase::EvenC | LemmaCase::OddC => (0..m).map(|k| (k, k)).collect(),
        }
    }
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for LemmaCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for LemmaCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [LemmaCase::EVEN, LemmaCase::ODD]
            .concat()
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown lemma case `{s}`")))
    }
}

/// Pairs for one `(k, k')` cell of a lemma case, as normalized id pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCell {
    pub k: usize,
    pub other: usize,
    pub target_distance: u32,
    pub pairs: PairSet,
    /// `odd-a` only: pairs at distance `n` not lying on a diametrical path.
    pub off_diametrical: PairSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaPairs {
    pub case: LemmaCase,
    pub cells: Vec<LemmaCell>,
}

impl LemmaPairs {
    pub fn all_pairs(&self) -> PairSet {
        self.cells
            .iter()
            .flat_map(|c| c.pairs.iter().copied())
            .collect()
    }

    pub fn all_off_diametrical(&self) -> PairSet {
        self.cells
            .iter()
            .flat_map(|c| c.off_diametrical.iter().copied())
            .collect()
    }
}

/// Pairs the closed-form index descriptions predict for `case`.
pub fn lemma_distance_pairs(p: JahangirParams, case: LemmaCase) -> Result<LemmaPairs> {
    p.require(case.regime(), "this distance lemma case")?;
    let lab = JahangirLabeling::new(p);
    let (n, h) = (p.n as i64, (p.n / 2) as i64);
    let target = case.target_distance(p);
    let cells = case
        .cells(p.m)
        .into_iter()
        .map(|(k, other)| {
            let (b, b2) = (n * k as i64, n * other as i64);
            let mut pairs = PairSet::new();
            let mut off_diametrical = PairSet::new();
            match case {
                LemmaCase::EvenA => {
                    pairs.insert(lab.rim_pair(b + h + 1, b2 + h + 2));
                    pairs.insert(lab.rim_pair(b + h, b2 + h + 1));
                }
                LemmaCase::OddA => {
                    pairs.insert(lab.rim_pair(b + h + 1, b2 + h + 2));
                    off_diametrical.insert(lab.rim_pair(b + h, b2 + h + 1));
                    off_diametrical.insert(lab.rim_pair(b + h + 2, b2 + h + 3));
                }
                LemmaCase::EvenB => {
                    pairs.insert(lab.rim_pair(b + h + 1, b2 + h + 1));
                }
                LemmaCase::OddB => {
                    for x in [h + 1, h + 2] {
                        for y in [h + 1, h + 2] {
                            pairs.insert(lab.rim_pair(b + x, b2 + y));
                        }
                    }
                }
                LemmaCase::EvenC | LemmaCase::OddC => {
                    for i in 2..=n {
                        for j in i + 1..=n {
                            let gap = j - i;
                            let hit = if case == LemmaCase::EvenC {
                                gap == h + 1
                            } else {
                                gap == h + 1 || gap == h + 2
                            };
                            if hit {
                                pairs.insert(lab.rim_pair(b + i, b + j));
                            }
                        }
                    }
                }
            }
            LemmaCell {
                k,
                other,
                target_distance: target,
                pairs,
                off_diametrical,
            }
        })
        .collect();
    Ok(LemmaPairs { case, cells })
}

/// Pairs read off BFS distances over the same cells as
/// [`lemma_distance_pairs`]: every `x` in `C_k`, `y` in `C_{k'}` (or both in
/// `V(C_k) ∩ U_2` for the within-cycle cases) at the target distance.
pub fn observed_lemma_pairs(
    p: JahangirParams,
    d: &DistanceMatrix,
    case: LemmaCase,
) -> Result<LemmaPairs> {
    p.require(case.regime(), "this distance lemma case")?;
    let lab = JahangirLabeling::new(p);
    let target = case.target_distance(p);
    let diameter = d.diameter()?;
    let diametral: Vec<(usize, usize)> = (0..d.order())
        .flat_map(|a| (0..d.order()).map(move |b| (a, b)))
        .filter(|&(a, b)| d.get(a, b) == diameter)
        .collect();

    let cells = case
        .cells(p.m)
        .into_iter()
        .map(|(k, other)| {
            let (xs, ys) = if k == other {
                (lab.internal_cycle_u2(k), lab.internal_cycle_u2(k))
            } else {
                (lab.internal_cycle(k), lab.internal_cycle(other))
            };
            let mut pairs = PairSet::new();
            let mut off_diametrical = PairSet::new();
            for &x in &xs {
                for &y in &ys {
                    if x == y {
                        continue;
                    }
                    let pair = (x.min(y), x.max(y));
                    let dist = d.get(x, y);
                    if dist == target {
                        pairs.insert(pair);
                    } else if case == LemmaCase::OddA
                        && dist == p.n as u32
                        && !on_diametrical_path(d, &diametral, diameter, x, y)
                    {
                        off_diametrical.insert(pair);
                    }
                }
            }
            LemmaCell {
                k,
                other,
                target_distance: target,
                pairs,
                off_diametrical,
            }
        })
        .collect();
    Ok(LemmaPairs { case, cells })
}

/// `x` and `y` lie together on some shortest path between two vertices at
/// diameter distance. Both orders along the path are covered because
/// `diametral` holds every ordered endpoint pair.
pub fn on_diametrical_path(
    d: &DistanceMatrix,
    diametral: &[(usize, usize)],
    diameter: u32,
    x: usize,
    y: usize,
) -> bool {
    let xy = d.get(x, y);
    diametral
        .iter()
        .any(|&(a, b)| d.get(a, x) + xy + d.get(y, b) == diameter)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Brute-force sdim is cross-checked when the order is at most this.
    pub brute_cap: usize,
    pub cover_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            brute_cap: DEFAULT_BRUTE_FORCE_CAP,
            cover_cap: DEFAULT_COVER_CAP,
        }
    }
}

/// One finding from [`verify_paper`]. Vertex pairs use paper names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Discrepancy {
    SrgEdgeMismatch {
        unpredicted: Vec<String>,
        missing: Vec<String>,
    },
    EdgeFamiliesOverlap,
    HubNotIsolated,
    PredictedCoverInvalid {
        uncovered: String,
    },
    PredictedCoverSize {
        predicted: usize,
        expected: usize,
    },
    AlphaMismatch {
        computed: usize,
        formula: usize,
    },
    LemmaMismatch {
        case: LemmaCase,
        k: usize,
        other: usize,
        unpredicted: Vec<String>,
        missing: Vec<String>,
    },
    PipelineMismatch {
        pipeline: usize,
        formula: usize,
    },
    BruteForceMismatch {
        brute_force: usize,
        pipeline: usize,
    },
    PipelineError {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: JahangirParams,
    pub regime: Regime,
    /// Vacuously true when no edge set is predicted.
    pub srg_edges_match: bool,
    /// Vacuously true when no cover is predicted.
    pub predicted_cover_valid: bool,
    pub predicted_cover_size: Option<usize>,
    pub alpha_computed: Option<usize>,
    pub formula_sdim: Option<usize>,
    pub pipeline_sdim: Option<usize>,
    pub brute_force_sdim: Option<usize>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("VerificationReport", 10)?;
        st.serialize_field("n", &self.params.n)?;
        st.serialize_field("m", &self.params.m)?;
        st.serialize_field("regime", &self.regime)?;
        st.serialize_field("srg_edges_match", &self.srg_edges_match)?;
        st.serialize_field("cover_valid", &self.predicted_cover_valid)?;
        st.serialize_field("alpha", &self.alpha_computed)?;
        st.serialize_field("formula_sdim", &self.formula_sdim)?;
        st.serialize_field("pipeline_sdim", &self.pipeline_sdim)?;
        st.serialize_field("brute_force_sdim", &self.brute_force_sdim)?;
        st.serialize_field("discrepancies", &self.discrepancies)?;
        st.end()
    }
}

fn names(lab: &JahangirLabeling, pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<String> {
    pairs.into_iter().map(|p| lab.pair_name(p)).collect()
}

pub fn verify_paper(p: JahangirParams) -> VerificationReport {
    verify_paper_with(p, &VerifyOptions::default())
}

/// Compares every closed-form prediction for `p` against the computed
/// strong resolving graph, exact cover number and sdim pipeline. Exploratory
/// parameters are computed but compared against nothing.
pub fn verify_paper_with(p: JahangirParams, opts: &VerifyOptions) -> VerificationReport {
    let (g, lab) = build_jahangir(p);
    let d = all_pairs_distances(&g);
    let regime = p.regime();
    let formula = sdim_formula(p);
    let mut report = VerificationReport {
        params: p,
        regime,
        srg_edges_match: true,
        predicted_cover_valid: true,
        predicted_cover_size: None,
        alpha_computed: None,
        formula_sdim: formula,
        pipeline_sdim: None,
        brute_force_sdim: None,
        discrepancies: Vec::new(),
    };
    let found = &mut report.discrepancies;

    let computed = mmd_pairs_with(&g, &d).expect("Jahangir graphs are connected");
    let srg = g
        .respan(&computed.iter().collect::<Vec<_>>())
        .expect("MMD pairs form a simple graph");
    if srg.degree(lab.hub()) != 0 {
        found.push(Discrepancy::HubNotIsolated);
    }

    let predicted_edges = match regime {
        Regime::Even => predicted_srg_edges_even(p).ok().inspect(|fam| {
            if !fam.pairwise_disjoint() {
                found.push(Discrepancy::EdgeFamiliesOverlap);
            }
        }),
        Regime::Odd => predicted_srg_edges_odd(p).ok(),
        _ => None,
    }
    .map(|fam| fam.union())
    .or_else(|| predicted_srg_edges_base(p).ok());
    if let Some(predicted) = predicted_edges {
        let actual = computed.as_set();
        if &predicted != actual {
            report.srg_edges_match = false;
            found.push(Discrepancy::SrgEdgeMismatch {
                unpredicted: names(&lab, actual.difference(&predicted).copied()),
                missing: names(&lab, predicted.difference(actual).copied()),
            });
        }
    }

    if let Some(cover) = predicted_cover(p) {
        let cover: Vec<usize> = cover.into_iter().collect();
        report.predicted_cover_size = Some(cover.len());
        if let Ok(Verdict::Witness(u, v)) = is_vertex_cover(&srg, &cover) {
            report.predicted_cover_valid = false;
            found.push(Discrepancy::PredictedCoverInvalid {
                uncovered: lab.pair_name((u, v)),
            });
        }
        if let Some(expected) = formula.filter(|&f| f != cover.len()) {
            found.push(Discrepancy::PredictedCoverSize {
                predicted: cover.len(),
                expected,
            });
        }
    }

    match exact_min_vertex_cover_capped(&srg, opts.cover_cap) {
        Ok(result) => {
            report.alpha_computed = Some(result.size);
            if let Some(formula) = formula.filter(|&f| f != result.size) {
                found.push(Discrepancy::AlphaMismatch {
                    computed: result.size,
                    formula,
                });
            }
            if let Some(size) = report.predicted_cover_size.filter(|&s| s != result.size) {
                found.push(Discrepancy::PredictedCoverSize {
                    predicted: size,
                    expected: result.size,
                });
            }
        }
        Err(e) => found.push(Discrepancy::PipelineError {
            message: e.to_string(),
        }),
    }

    let cases: &[LemmaCase] = match regime {
        Regime::Even => &LemmaCase::EVEN,
        Regime::Odd => &LemmaCase::ODD,
        _ => &[],
    };
    for &case in cases {
        let (Ok(predicted), Ok(observed)) = (
            lemma_distance_pairs(p, case),
            observed_lemma_pairs(p, &d, case),
        ) else {
            continue;
        };
        for (want, got) in predicted.cells.iter().zip(&observed.cells) {
            let want_all: PairSet = want.pairs.union(&want.off_diametrical).copied().collect();
            let got_all: PairSet = got.pairs.union(&got.off_diametrical).copied().collect();
            if want.pairs != got.pairs || want.off_diametrical != got.off_diametrical {
                found.push(Discrepancy::LemmaMismatch {
                    case,
                    k: want.k,
                    other: want.other,
                    unpredicted: names(&lab, got_all.difference(&want_all).copied()),
                    missing: names(&lab, want_all.difference(&got_all).copied()),
                });
            }
        }
    }

    match sdim_via_cover_capped(&g, opts.cover_cap) {
        Ok(result) => {
            report.pipeline_sdim = Some(result.size);
            if let Some(formula) = formula.filter(|&f| f != result.size) {
                found.push(Discrepancy::PipelineMismatch {
                    pipeline: result.size,
                    formula,
                });
            }
        }
        Err(e) => found.push(Discrepancy::PipelineError {
            message: e.to_string(),
        }),
    }

    if p.order() <= opts.brute_cap {
        match brute_force_sdim(&g, opts.brute_cap) {
            Ok(result) => {
                report.brute_force_sdim = Some(result.size);
                if let Some(pipeline) = report.pipeline_sdim.filter(|&s| s != result.size) {
                    found.push(Discrepancy::BruteForceMismatch {
                        brute_force: result.size,
                        pipeline,
                    });
                }
            }
            Err(e) => found.push(Discrepancy::PipelineError {
                message: e.to_string(),
            }),
        }
    }

    report
}

/// Fixed-width table, one row per report, in the given order.
pub fn report_table(reports: &[VerificationReport]) -> String {
    use std::fmt::Write as _;
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = format!(
        "{:>3} {:>3} {:<12} {:>5} {:>5} {:>5} {:>7} {:>8} {:>5}  {}\n",
        "n", "m", "regime", "srg", "cover", "alpha", "formula", "pipeline", "brute", "status"
    );
    for r in reports {
        let flag = |b: bool| if b { "ok" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:<12} {:>5} {:>5} {:>5} {:>7} {:>8} {:>5}  {}",
            r.params.n,
            r.params.m,
            r.regime.to_string(),
            flag(r.srg_edges_match),
            flag(r.predicted_cover_valid),
            opt(r.alpha_computed),
            opt(r.formula_sdim),
            opt(r.pipeline_sdim),
            opt(r.brute_force_sdim),
            if r.passed() {
                "PASS".to_string()
            } else {
                format!("FAIL ({} discrepancies)", r.discrepancies.len())
            }
        );
    }
    out
}
