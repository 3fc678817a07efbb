//! Acceptance criteria, one test per criterion. Each prints a single
//! `[PASS]` or `[FAIL]` line; run with `--nocapture` to see them all.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdim::cover::{
    exact_min_vertex_cover, greedy_cover, is_vertex_cover, matching_lower_bound,
    max_independent_set,
};
use sdim::distance::diameter;
use sdim::graph::{random_connected, Graph};
use sdim::jahangir::{
    build_jahangir, diameter_formula, lemma_distance_pairs, observed_lemma_pairs, predicted_cover,
    predicted_srg_edges, JahangirLabeling, JahangirParams, LemmaCase,
};
use sdim::strong::{brute_force_sdim, mmd_pairs, sdim_via_cover, strong_resolving_graph};
use sdim::{all_pairs_distances, UNREACHABLE};

type Outcome = Result<(), Vec<String>>;

fn criterion(id: u8, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let mut problems = outcome.err().unwrap_or_default();
    if let Some(limit) = limit {
        if elapsed > limit {
            problems.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {title} ({elapsed:.2?})");
    for p in &problems {
        println!("       {p}");
    }
    assert!(
        problems.is_empty(),
        "criterion {id} failed:\n{}",
        problems.join("\n")
    );
}

/// Collects mismatches instead of stopping at the first one.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        what: impl std::fmt::Display,
        got: T,
        want: T,
    ) {
        if got != want {
            self.0
                .push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn holds(&mut self, what: impl std::fmt::Display, ok: bool) {
        if !ok {
            self.0.push(format!("{what}: does not hold"));
        }
    }

    fn finish(self) -> Outcome {
        if self.0.is_empty() {
            Ok(())
        } else {
            Err(self.0)
        }
    }
}

fn jahangir(n: usize, m: usize) -> (Graph, JahangirLabeling) {
    build_jahangir(JahangirParams::new(n, m).unwrap())
}

fn listed_pairs(lab: &JahangirLabeling, list: &[(i64, i64)]) -> BTreeSet<(usize, usize)> {
    list.iter().map(|&(a, b)| lab.rim_pair(a, b)).collect()
}

fn listed_rims(lab: &JahangirLabeling, list: &[i64]) -> Vec<usize> {
    list.iter().map(|&i| lab.rim(i)).collect()
}

fn edge_diff(
    g: &Graph,
    computed: &BTreeSet<(usize, usize)>,
    listed: &BTreeSet<(usize, usize)>,
) -> Vec<String> {
    let name = |&(u, v): &(usize, usize)| format!("{}{}", g.name(u), g.name(v));
    let mut out = Vec::new();
    let extra: Vec<_> = computed.difference(listed).map(name).collect();
    let missing: Vec<_> = listed.difference(computed).map(name).collect();
    if !extra.is_empty() {
        out.push(format!("computed but not listed: {}", extra.join(", ")));
    }
    if !missing.is_empty() {
        out.push(format!("listed but not computed: {}", missing.join(", ")));
    }
    out
}

/// The worked-example check shared by criteria 2 and 3.
fn worked_example(
    n: usize,
    m: usize,
    families: [&[(i64, i64)]; 3],
    sizes: [usize; 3],
    s: &[i64],
    sdim: usize,
) -> Outcome {
    let (g, lab) = jahangir(n, m);
    let mut c = Checks::default();
    let families: Vec<_> = families.iter().map(|f| listed_pairs(&lab, f)).collect();
    for (i, (fam, &size)) in families.iter().zip(&sizes).enumerate() {
        c.eq(
            format_args!("family {} size", ["A", "B", "C"][i]),
            fam.len(),
            size,
        );
    }
    let listed: BTreeSet<_> = families.into_iter().flatten().collect();
    let srg = strong_resolving_graph(&g).unwrap();
    let computed: BTreeSet<_> = srg.edges().collect();
    c.0.extend(edge_diff(&g, &computed, &listed));

    let alpha = exact_min_vertex_cover(&srg).unwrap();
    c.eq("alpha", alpha.size, sdim);
    c.holds("alpha proved optimal", alpha.optimal);
    let s = listed_rims(&lab, s);
    c.eq("|S|", s.len(), sdim);
    c.holds(
        "listed S covers the computed SRG",
        is_vertex_cover(&srg, &s).unwrap().holds(),
    );
    c.eq("pipeline sdim", sdim_via_cover(&g).unwrap().size, sdim);
    c.finish()
}

#[test]
fn criterion_1_base_cases() {
    criterion(
        1,
        "base cases J(2,3), J(3,3), J(4,3) have sdim 3",
        Some(Duration::from_secs(5)),
        || {
            let mut c = Checks::default();
            for n in [2, 3, 4] {
                let (g, _) = jahangir(n, 3);
                c.eq(
                    format_args!("brute force J({n},3)"),
                    brute_force_sdim(&g, 16).unwrap().size,
                    3,
                );
                c.eq(
                    format_args!("pipeline J({n},3)"),
                    sdim_via_cover(&g).unwrap().size,
                    3,
                );
            }
            c.finish()
        },
    );
}

#[test]
fn criterion_2_example_j65() {
    criterion(
        2,
        "J(6,5) listed SRG edges, cover and sdim 10",
        Some(Duration::from_secs(1)),
        || {
            worked_example(
                6,
                5,
                [
                    &[
                        (4, 11),
                        (4, 27),
                        (10, 3),
                        (10, 17),
                        (16, 9),
                        (16, 23),
                        (22, 15),
                        (22, 19),
                        (28, 21),
                        (28, 5),
                    ],
                    &[(4, 16), (4, 22), (10, 22), (10, 28), (16, 28)],
                    &[(2, 6), (8, 12), (14, 18), (20, 24), (26, 30)],
                ],
                [10, 5, 5],
                &[4, 10, 16, 22, 28, 2, 8, 14, 20, 26],
                10,
            )
        },
    );
}

#[test]
fn criterion_3_example_j55() {
    criterion(
        3,
        "J(5,5) listed SRG edges, cover and sdim 12",
        Some(Duration::from_secs(1)),
        || {
            worked_example(
                5,
                5,
                [
                    &[
                        (2, 8),
                        (3, 22),
                        (3, 9),
                        (4, 23),
                        (4, 10),
                        (5, 24),
                        (7, 13),
                        (8, 14),
                        (9, 15),
                        (12, 18),
                        (13, 19),
                        (14, 20),
                        (17, 23),
                        (18, 24),
                        (19, 25),
                    ],
                    &[
                        (3, 13),
                        (3, 14),
                        (4, 13),
                        (4, 14),
                        (3, 18),
                        (3, 19),
                        (4, 18),
                        (4, 19),
                        (8, 18),
                        (8, 19),
                        (9, 18),
                        (9, 19),
                        (8, 23),
                        (8, 24),
                        (9, 23),
                        (9, 24),
                        (13, 23),
                        (13, 24),
                        (14, 23),
                        (14, 24),
                    ],
                    &[(2, 5), (7, 10), (12, 15), (17, 20), (22, 25)],
                ],
                [15, 20, 5],
                &[3, 4, 8, 9, 13, 14, 12, 17, 24, 25, 2, 7],
                12,
            )
        },
    );
}

fn theorem_grid(ns: [usize; 4], formula: impl Fn(usize, usize) -> usize) -> Outcome {
    let mut c = Checks::default();
    for n in ns {
        for m in 4..=8 {
            let p = JahangirParams::new(n, m).unwrap();
            let (g, _) = build_jahangir(p);
            let computed = mmd_pairs(&g).unwrap();
            let predicted = predicted_srg_edges(p).expect("grid cell has a prediction");
            c.holds(
                format_args!("{p} predicted SRG equals computed"),
                &predicted == computed.as_set(),
            );
            c.eq(
                format_args!("{p} pipeline sdim"),
                sdim_via_cover(&g).unwrap().size,
                formula(n, m),
            );

            let srg = strong_resolving_graph(&g).unwrap();
            let alpha = exact_min_vertex_cover(&srg).unwrap().size;
            let cover: Vec<usize> = predicted_cover(p).unwrap().into_iter().collect();
            c.holds(
                format_args!("{p} predicted cover valid"),
                is_vertex_cover(&srg, &cover).unwrap().holds(),
            );
            c.eq(format_args!("{p} predicted cover size"), cover.len(), alpha);
        }
    }
    c.finish()
}

#[test]
fn criterion_4_even_theorem() {
    criterion(
        4,
        "even grid n in {6,8,10,12}, m in 4..=8",
        Some(Duration::from_secs(60)),
        || theorem_grid([6, 8, 10, 12], |n, m| m * (n - 2) / 2),
    );
}

#[test]
fn criterion_5_odd_theorem() {
    criterion(
        5,
        "odd grid n in {5,7,9,11}, m in 4..=8",
        Some(Duration::from_secs(60)),
        || theorem_grid([5, 7, 9, 11], |n, m| m * (n - 1) / 2 + m - 3),
    );
}

#[test]
fn criterion_6_brute_force_equals_alpha() {
    criterion(
        6,
        "brute force sdim equals alpha of the SRG on <= 12 vertices",
        Some(Duration::from_secs(120)),
        || {
            let mut corpus = Vec::new();
            for n in 2..=11 {
                for m in 3..=11 {
                    let order = n * m + 1;
                    if order <= 12 {
                        corpus.push((format!("J({n},{m})"), jahangir(n, m).0));
                    }
                }
            }
            let mut c = Checks::default();
            c.eq("Jahangir graphs in corpus", corpus.len(), 4);
            let mut rng = ChaCha8Rng::seed_from_u64(0x5d1d);
            for i in 0..240 {
                let order = rng.gen_range(1..=12);
                let p = rng.gen_range(0.0..0.7);
                corpus.push((format!("random #{i}"), random_connected(order, p, &mut rng)));
            }
            for (name, g) in &corpus {
                let srg = strong_resolving_graph(g).unwrap();
                let alpha = exact_min_vertex_cover(&srg).unwrap().size;
                c.eq(
                    format_args!("{name}"),
                    brute_force_sdim(g, 16).unwrap().size,
                    alpha,
                );
            }
            c.finish()
        },
    );
}

#[test]
fn criterion_7_distance_lemmas() {
    criterion(
        7,
        "lemma pair sets equal BFS pair sets on both grids",
        None,
        || {
            let mut c = Checks::default();
            for (ns, cases) in [
                ([6, 8, 10, 12], LemmaCase::EVEN),
                ([5, 7, 9, 11], LemmaCase::ODD),
            ] {
                for n in ns {
                    for m in 4..=8 {
                        let p = JahangirParams::new(n, m).unwrap();
                        let d = all_pairs_distances(&build_jahangir(p).0);
                        for case in cases {
                            let predicted = lemma_distance_pairs(p, case).unwrap();
                            let observed = observed_lemma_pairs(p, &d, case).unwrap();
                            c.holds(format_args!("{p} {case}"), predicted == observed);
                        }
                    }
                }
            }
            c.finish()
        },
    );
}

fn exhaustive_cover_size(g: &Graph) -> usize {
    let edges: Vec<_> = g.edges().collect();
    (0u32..1 << g.order())
        .filter(|mask| {
            edges
                .iter()
                .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

fn random_graph(order: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<_> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(order, &edges).unwrap()
}

#[test]
fn criterion_8_invariants() {
    criterion(
        8,
        "distance axioms, cover soundness, duality, bound sandwich",
        None,
        || {
            let mut c = Checks::default();
            let mut rng = ChaCha8Rng::seed_from_u64(8);
            for i in 0..60 {
                let order = rng.gen_range(1..=64);
                let g = random_connected(order, rng.gen_range(0.0..0.3), &mut rng);
                let d = all_pairs_distances(&g);
                let mut ok = true;
                for u in 0..order {
                    ok &= d.get(u, u) == 0;
                    for v in 0..order {
                        let duv = d.get(u, v);
                        ok &= duv != UNREACHABLE
                            && duv == d.get(v, u)
                            && (duv == 1) == g.has_edge(u, v);
                        ok &= (0..order).all(|w| duv <= d.get(u, w) + d.get(w, v));
                    }
                }
                c.holds(format_args!("distance axioms on random graph #{i}"), ok);
            }

            let mut runs: Vec<Graph> = Vec::new();
            for _ in 0..300 {
                let order = rng.gen_range(0..=10);
                runs.push(random_graph(order, rng.gen_range(0.0..1.0), &mut rng));
            }
            for (i, g) in runs.iter().enumerate() {
                c.eq(
                    format_args!("exact cover on graph #{i}"),
                    exact_min_vertex_cover(g).unwrap().size,
                    exhaustive_cover_size(g),
                );
            }
            for n in [5, 6, 7, 8] {
                for m in 4..=6 {
                    let (g, _) = jahangir(n, m);
                    runs.push(strong_resolving_graph(&g).unwrap());
                }
            }
            for _ in 0..100 {
                let order = rng.gen_range(10..=40);
                runs.push(random_graph(order, rng.gen_range(0.0..0.3), &mut rng));
            }
            for (i, g) in runs.iter().enumerate() {
                let exact = exact_min_vertex_cover(g).unwrap();
                c.holds(
                    format_args!("cover valid on graph #{i}"),
                    is_vertex_cover(g, &exact.cover).unwrap().holds(),
                );
                c.eq(
                    format_args!("duality on graph #{i}"),
                    max_independent_set(g).unwrap().len() + exact.size,
                    g.order(),
                );
                let sandwich =
                    matching_lower_bound(g) <= exact.size && exact.size <= greedy_cover(g).size;
                c.holds(format_args!("bound sandwich on graph #{i}"), sandwich);
            }
            c.finish()
        },
    );
}

#[test]
fn criterion_9_diameter_formula() {
    criterion(
        9,
        "diameter of J(n,m) is 2(n/2 + 1) for 2 <= n <= 12, 3 <= m <= 8",
        None,
        || {
            let mut c = Checks::default();
            for n in 2..=12 {
                for m in 3..=8 {
                    let p = JahangirParams::new(n, m).unwrap();
                    c.eq(
                        format_args!("diameter {p}"),
                        diameter(&build_jahangir(p).0).unwrap(),
                        diameter_formula(p),
                    );
                }
            }
            c.finish()
        },
    );
}
