//! Builds a few graphs, inspects their distances, and round-trips them
//! through the edge-JSON and DOT formats.
//!
//!     cargo run --example build_and_export

use sdim::graph::{cycle, path, star};
use sdim::io::{parse_edge_json, to_dot, to_edge_json};
use sdim::jahangir::{build_jahangir, JahangirParams};
use sdim::{all_pairs_distances, Graph};

fn describe(name: &str, g: &Graph) {
    let d = all_pairs_distances(g);
    println!(
        "{name}: order {}, size {}, diameter {}, degrees {:?}",
        g.order(),
        g.size(),
        d.diameter().unwrap(),
        g.degree_sequence()
    );
}

fn main() {
    describe("P5", &path(5));
    describe("C6", &cycle(6).unwrap());
    describe("K1,4", &star(4));

    let (j, lab) = build_jahangir(JahangirParams::new(2, 8).unwrap());
    describe("J(2,8)", &j);
    let d = all_pairs_distances(&j);
    println!("d(u1, u9) = {}", d.get(lab.rim(1), lab.rim(9)));

    let json = to_edge_json(&j);
    assert_eq!(parse_edge_json(&json).unwrap(), j);
    println!("\nedge-json ({} bytes):\n{json}", json.len());

    let (small, _) = build_jahangir(JahangirParams::new(2, 3).unwrap());
    println!("\nDOT for J(2,3):\n{}", to_dot(&small));
}
