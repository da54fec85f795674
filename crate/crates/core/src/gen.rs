//! Seeded instance families for tests and benchmarks. All coordinates and
//! timestamps are integers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{build_edge_set, Dim, EdgeSet, TimedVertex};
use crate::scalar::Scalar;

/// Side of the box that [`cluster`] walks revisit.
pub const CLUSTER_BOX: i64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Walk,
    Cluster,
    Comb,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "walk" => Ok(Family::Walk),
            "cluster" => Ok(Family::Cluster),
            "comb" => Ok(Family::Comb),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

type Raw = [i64; 4];

fn to_vertices<S: Scalar>(raw: &[Raw]) -> Vec<TimedVertex<S>> {
    raw.iter()
        .map(|v| TimedVertex {
            t: S::from_i64(v[0]),
            p: [S::from_i64(v[1]), S::from_i64(v[2]), S::from_i64(v[3])],
        })
        .collect()
}

fn edges_of<S: Scalar>(dim: Dim, raw: &[Raw]) -> EdgeSet<S> {
    build_edge_set(dim, &to_vertices(raw)).expect("generators emit valid polylines")
}

fn walk_raw(n: usize, seed: u64, dim: Dim) -> Vec<Raw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur: Raw = [0; 4];
    let mut out = vec![cur];
    for _ in 0..n {
        let axis = 1 + rng.gen_range(0..dim.count());
        let len = rng.gen_range(1..=10);
        cur[axis] += if rng.gen_bool(0.5) { len } else { -len };
        cur[0] += rng.gen_range(1..=10);
        out.push(cur);
    }
    out
}

fn cluster_raw(n: usize, seed: u64, revisit_rate: f64, dim: Dim) -> Vec<Raw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rate = revisit_rate.clamp(0.0, 1.0);
    let mut cur: Raw = [0; 4];
    let mut out = vec![cur];
    for _ in 0..n {
        let axes: Vec<usize> = (1..=dim.count()).collect();
        if rng.gen_bool(rate) {
            let outside: Vec<usize> = axes
                .iter()
                .copied()
                .filter(|&a| !(0..=CLUSTER_BOX).contains(&cur[a]))
                .collect();
            let pool = if outside.is_empty() { &axes } else { &outside };
            let axis = pool[rng.gen_range(0..pool.len())];
            cur[axis] = rng.gen_range(0..=CLUSTER_BOX);
        } else {
            let axis = axes[rng.gen_range(0..axes.len())];
            let len = rng.gen_range(1..=20);
            cur[axis] += if rng.gen_bool(0.5) { len } else { -len };
        }
        cur[0] += rng.gen_range(1..=10);
        out.push(cur);
    }
    out
}

fn comb_raw(n: usize, dim: Dim) -> Vec<Raw> {
    let mut cur: Raw = [0; 4];
    let mut out = vec![cur];
    for k in 0..n {
        let j = (k / 2) as i64;
        if k % 2 == 0 {
            // Teeth alternate direction with varying widths and speeds.
            cur[1] = if j % 2 == 0 { 10 + (j * 37) % 23 } else { 0 };
            cur[0] += 1 + (j * 13) % 17;
        } else {
            let axis = if dim == Dim::Three && j % 2 == 1 { 3 } else { 2 };
            cur[axis] += 1;
            cur[0] += 1;
        }
        out.push(cur);
    }
    out
}

/// Random orthogonal walk with `n` edges.
pub fn walk<S: Scalar>(n: usize, seed: u64, dim: Dim) -> Vec<TimedVertex<S>> {
    to_vertices(&walk_raw(n, seed, dim))
}

/// Walk that keeps returning to the box `[0, CLUSTER_BOX]^d`; with
/// `revisit_rate == 1` it never leaves it.
pub fn cluster<S: Scalar>(n: usize, seed: u64, revisit_rate: f64, dim: Dim) -> Vec<TimedVertex<S>> {
    to_vertices(&cluster_raw(n, seed, revisit_rate, dim))
}

/// Boustrophedon of stacked horizontal teeth one unit apart, a dense
/// interleaving of height intervals for any side above 1.
pub fn comb<S: Scalar>(n: usize, dim: Dim) -> Vec<TimedVertex<S>> {
    to_vertices(&comb_raw(n, dim))
}

pub fn gen_walk<S: Scalar>(n: usize, seed: u64, dim: Dim) -> EdgeSet<S> {
    edges_of(dim, &walk_raw(n, seed, dim))
}

pub fn gen_cluster<S: Scalar>(n: usize, seed: u64, revisit_rate: f64, dim: Dim) -> EdgeSet<S> {
    edges_of(dim, &cluster_raw(n, seed, revisit_rate, dim))
}

pub fn gen_comb<S: Scalar>(n: usize, dim: Dim) -> EdgeSet<S> {
    edges_of(dim, &comb_raw(n, dim))
}

/// Vertices of family `family`; `cluster` uses a revisit rate of 0.7.
pub fn vertices<S: Scalar>(family: Family, n: usize, seed: u64, dim: Dim) -> Vec<TimedVertex<S>> {
    match family {
        Family::Walk => walk(n, seed, dim),
        Family::Cluster => cluster(n, seed, 0.7, dim),
        Family::Comb => comb(n, dim),
    }
}
