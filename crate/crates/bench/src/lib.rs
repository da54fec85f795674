//! Fixtures shared by the criterion targets.

use hotspot_core::gen::{gen_comb, gen_walk};
use hotspot_core::{Dim, EdgeSet};

pub const SIDE: f64 = 10.0;

/// Float-mode random walk with `n` edges.
pub fn walk(n: usize) -> EdgeSet<f64> {
    gen_walk(n, 1, Dim::Two)
}

/// Float-mode comb with `n` edges.
pub fn comb(n: usize) -> EdgeSet<f64> {
    gen_comb(n, Dim::Two)
}
