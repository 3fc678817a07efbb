//! Mutually maximally distant pairs and the strong resolving graph they
//! span, on a cycle, a tree and a small Jahangir graph.
//!
//!     cargo run --example strong_resolving_graph

use sdim::graph::{cycle, Graph};
use sdim::jahangir::{build_jahangir, JahangirParams};
use sdim::strong::{is_strong_resolving_set, mmd_pairs, strong_resolving_graph};
use sdim::{all_pairs_distances, Verdict};

fn show(name: &str, g: &Graph) {
    let pairs: Vec<String> = mmd_pairs(g)
        .unwrap()
        .iter()
        .map(|(u, v)| format!("{}-{}", g.name(u), g.name(v)))
        .collect();
    let srg = strong_resolving_graph(g).unwrap();
    let isolated = (0..srg.order()).filter(|&v| srg.degree(v) == 0).count();
    println!(
        "{name}: {} MMD pairs [{}], {isolated} isolated in G_SR",
        pairs.len(),
        pairs.join(" ")
    );
}

fn main() {
    show("C4", &cycle(4).unwrap());
    show("C5", &cycle(5).unwrap());
    // Spider with legs of length 1, 2, 3: MMD pairs are exactly the leaf pairs.
    show(
        "spider",
        &Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap(),
    );

    let (g, lab) = build_jahangir(JahangirParams::new(2, 3).unwrap());
    show("J(2,3)", &g);

    let d = all_pairs_distances(&g);
    for set in [vec![2, 4, 6], vec![2, 4]] {
        let ids: Vec<usize> = set.iter().map(|&i| lab.rim(i)).collect();
        let names: Vec<String> = ids.iter().map(|&v| g.name(v)).collect();
        match is_strong_resolving_set(&d, &ids).unwrap() {
            Verdict::Holds => println!("{{{}}} strongly resolves J(2,3)", names.join(", ")),
            Verdict::Witness(u, v) => println!(
                "{{{}}} fails: no member strongly resolves {} and {}",
                names.join(", "),
                g.name(u),
                g.name(v)
            ),
        }
    }
}
