//! The edge families and covers predicted for J(6,5) and J(5,5), checked
//! against the computed strong resolving graphs.
//!
//!     cargo run --example jahangir_examples [n m]

use sdim::cover::{exact_min_vertex_cover, is_vertex_cover};
use sdim::jahangir::{
    build_jahangir, predicted_cover, predicted_srg_edges_even, predicted_srg_edges_odd,
    sdim_formula, EdgeFamilies, JahangirLabeling, JahangirParams, Regime,
};
use sdim::strong::strong_resolving_graph;

fn names(lab: &JahangirLabeling, set: &std::collections::BTreeSet<(usize, usize)>) -> String {
    set.iter()
        .map(|&(u, v)| lab.pair_name((u, v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn show(p: JahangirParams) {
    let (g, lab) = build_jahangir(p);
    let families: EdgeFamilies = match p.regime() {
        Regime::Even => predicted_srg_edges_even(p).unwrap(),
        Regime::Odd => predicted_srg_edges_odd(p).unwrap(),
        r => {
            println!("{p}: regime {r}, no families predicted");
            return;
        }
    };
    println!("{p} ({} regime)", p.regime());
    println!("  A ({}): {}", families.a.len(), names(&lab, &families.a));
    println!("  B ({}): {}", families.b.len(), names(&lab, &families.b));
    println!("  C ({}): {}", families.c.len(), names(&lab, &families.c));

    let srg = strong_resolving_graph(&g).unwrap();
    let computed: std::collections::BTreeSet<_> = srg.edges().collect();
    println!(
        "  predicted union equals computed SRG: {}",
        families.union() == computed
    );

    let cover: Vec<usize> = predicted_cover(p).unwrap().into_iter().collect();
    let cover_names: Vec<String> = cover.iter().map(|&v| lab.name(v)).collect();
    println!("  cover ({}): {}", cover.len(), cover_names.join(" "));
    println!(
        "  cover valid: {}",
        is_vertex_cover(&srg, &cover).unwrap().holds()
    );
    println!(
        "  alpha = {}, formula = {:?}",
        exact_min_vertex_cover(&srg).unwrap().size,
        sdim_formula(p)
    );
}

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer"))
        .collect();
    match args.as_slice() {
        [n, m] => show(JahangirParams::new(*n, *m).expect("n >= 2, m >= 3")),
        _ => {
            show(JahangirParams::new(6, 5).unwrap());
            show(JahangirParams::new(5, 5).unwrap());
        }
    }
}
