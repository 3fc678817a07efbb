//! Closed-form distance pair sets compared with BFS, cell by cell.
//!
//!     cargo run --example distance_lemmas [n m]

use sdim::all_pairs_distances;
use sdim::jahangir::{
    build_jahangir, lemma_distance_pairs, observed_lemma_pairs, JahangirParams, LemmaCase, Regime,
};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer"))
        .collect();
    let p = match args.as_slice() {
        [n, m] => JahangirParams::new(*n, *m).expect("n >= 2, m >= 3"),
        _ => JahangirParams::new(7, 5).unwrap(),
    };
    let cases = match p.regime() {
        Regime::Even => LemmaCase::EVEN,
        Regime::Odd => LemmaCase::ODD,
        r => panic!("{p} is in the {r} regime; distance lemmas need n >= 5, m >= 4"),
    };
    let (g, lab) = build_jahangir(p);
    let d = all_pairs_distances(&g);
    for case in cases {
        let predicted = lemma_distance_pairs(p, case).unwrap();
        let observed = observed_lemma_pairs(p, &d, case).unwrap();
        println!(
            "{p} {case}: {} cells, agree = {}",
            predicted.cells.len(),
            predicted == observed
        );
        if let Some(cell) = predicted.cells.first() {
            let sample: Vec<String> = cell
                .pairs
                .iter()
                .take(4)
                .map(|&(u, v)| lab.pair_name((u, v)))
                .collect();
            println!(
                "  k={} other={:?} distance {}: {} pairs, e.g. {}",
                cell.k,
                cell.other,
                cell.target_distance,
                cell.pairs.len(),
                sample.join(" ")
            );
        }
    }
}
