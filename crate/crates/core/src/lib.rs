//! Strong metric dimension of connected graphs.
//!
//! The pipeline builds the strong resolving graph (edges = mutually
//! maximally distant pairs) and solves minimum vertex cover on it exactly.
//! [`jahangir`] adds generalized Jahangir graphs `J(n, m)` together with
//! closed-form predictions for their strong resolving graphs, minimum covers
//! and strong metric dimension, and checks every prediction against the
//! generic pipeline.
//!
//! ```
//! use sdim::jahangir::{build_jahangir, JahangirParams};
//! use sdim::strong::sdim_via_cover;
//!
//! let (g, _labels) = build_jahangir(JahangirParams::new(6, 5).unwrap());
//! assert_eq!(sdim_via_cover(&g).unwrap().size, 10);
//! ```

pub mod cli;
pub mod cover;
pub mod distance;
pub mod error;
pub mod graph;
pub mod io;
pub mod jahangir;
pub mod strong;

pub use distance::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
pub use error::{Error, Result};
pub use graph::Graph;

/// Outcome of a set-property check. A failing check carries one offending
/// vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Witness(usize, usize),
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(self) -> Option<(usize, usize)> {
        match self {
            Verdict::Holds => None,
            Verdict::Witness(u, v) => Some((u, v)),
        }
    }
}
