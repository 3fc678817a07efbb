//! Exact and greedy vertex covers, the matching lower bound, and the
//! complementary maximum independent set.
//!
//!     cargo run --release --example vertex_cover

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sdim::cover::{
    exact_min_vertex_cover, greedy_cover, matching_lower_bound, max_independent_set,
};
use sdim::graph::{complete, cycle, random_connected, star, Graph};
use sdim::jahangir::{build_jahangir, JahangirParams};
use sdim::strong::strong_resolving_graph;

fn report(name: &str, g: &Graph) {
    let exact = exact_min_vertex_cover(g).unwrap();
    let greedy = greedy_cover(g);
    let beta = max_independent_set(g).unwrap().len();
    println!(
        "{name:<14} n={:<3} m={:<4} matching>={:<3} alpha={:<3} greedy={:<3} beta={:<3} nodes={}",
        g.order(),
        g.size(),
        matching_lower_bound(g),
        exact.size,
        greedy.size,
        beta,
        exact.nodes_explored
    );
}

fn main() {
    report("star K1,6", &star(6));
    report("C9", &cycle(9).unwrap());
    report("K7", &complete(7));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    report("random 60", &random_connected(60, 0.08, &mut rng));
    for (n, m) in [(6, 5), (5, 5), (12, 8), (11, 8)] {
        let (g, _) = build_jahangir(JahangirParams::new(n, m).unwrap());
        report(
            &format!("J({n},{m})_SR"),
            &strong_resolving_graph(&g).unwrap(),
        );
    }
}
