//! Checks every closed form over the default parameter grid and prints the
//! report table.
//!
//!     cargo run --release --example verify_grid

use std::time::Instant;

use rayon::prelude::*;
use sdim::jahangir::{report_table, verify_paper, JahangirParams};

fn main() {
    let cells: Vec<JahangirParams> = (5..=12)
        .flat_map(|n| (4..=8).map(move |m| JahangirParams::new(n, m).unwrap()))
        .collect();

    let start = Instant::now();
    let reports: Vec<_> = cells.par_iter().map(|&p| verify_paper(p)).collect();
    print!("{}", report_table(&reports));

    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} cells, {} failed, {:.2?}",
        reports.len(),
        failed,
        start.elapsed()
    );
}
