//! Compares exhaustive search for a strong metric basis with the vertex
//! cover number of the strong resolving graph on seeded random graphs.
//!
//!     cargo run --release --example theorem_one [count] [seed]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdim::graph::random_connected;
use sdim::strong::{brute_force_sdim, sdim_via_cover, DEFAULT_BRUTE_FORCE_CAP};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map_or(200, |s| s.parse().expect("count"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut agree = 0;
    for i in 0..count {
        let order = rng.gen_range(2..=12);
        let g = random_connected(order, rng.gen_range(0.0..0.6), &mut rng);
        let brute = brute_force_sdim(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        let cover = sdim_via_cover(&g).unwrap();
        if brute.size == cover.size {
            agree += 1;
        } else {
            println!(
                "#{i}: brute {} vs cover {} on {:?}",
                brute.size,
                cover.size,
                g.edges().collect::<Vec<_>>()
            );
        }
    }
    println!("{agree}/{count} graphs agree (seed {seed})");
}
