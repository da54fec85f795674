//! Plane sweep with Fenwick-tree range sums: the best square with a left
//! corner on a vertex of an x-parallel edge set, and the 1/4-approximate
//! hotspot built from four rotated runs of it.

use std::cmp::Ordering;

use crate::algo::{best_rescored, SweepStats};
use crate::contribution::contribution_after;
use crate::error::{HotspotError, Result};
use crate::fenwick::FenwickPair;
use crate::model::{partition, rotate, rotate_square, Dim, EdgeSet, Orientation, Placement};
use crate::scalar::Scalar;

// Step phases; at equal x arrivals go first and point-edge departures last.
const ARRIVE: u8 = 0;
const EVALUATE: u8 = 1;
const DEPART: u8 = 2;

pub(crate) fn check_horizontal_set<S: Scalar>(h: &EdgeSet<S>, s: &S) -> Result<()> {
    h.require_dim(Dim::Two)?;
    h.require_nonempty()?;
    if *s <= S::zero() {
        return Err(HotspotError::NonPositiveSide);
    }
    if h.edges().iter().any(|e| e.orientation() != Orientation::X && !e.is_point()) {
        return Err(HotspotError::VerticalEdge);
    }
    Ok(())
}

/// Maximum-weight square whose lower-left or upper-left corner is an edge
/// endpoint of `h`.
pub fn corner_anchored_max<S: Scalar>(h: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    corner_anchored_max_with_stats(h, s).map(|(p, _)| p)
}

pub fn corner_anchored_max_with_stats<S: Scalar>(
    h: &EdgeSet<S>,
    s: &S,
) -> Result<(Placement<S>, SweepStats)> {
    check_horizontal_set(h, s)?;
    let edges = h.edges();
    let n = edges.len();

    // Edges ordered by height, ties by input index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&i, &j| edges[i].a()[1].total_cmp(&edges[j].a()[1]).then(i.cmp(&j)));
    let mut rank = vec![0usize; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r + 1;
    }
    let heights: Vec<S> = order.iter().map(|&i| edges[i].a()[1].clone()).collect();

    // Rank ranges of the edges inside the squares with upper-left and
    // lower-left corner at height y_i; they do not depend on x.
    let ranges: Vec<[(usize, usize); 2]> = edges
        .iter()
        .map(|e| {
            let y = &e.a()[1];
            let below = y.clone() - s.clone();
            let above = y.clone() + s.clone();
            [
                (heights.partition_point(|h| *h < below) + 1, heights.partition_point(|h| h <= y)),
                (heights.partition_point(|h| h < y) + 1, heights.partition_point(|h| *h <= above)),
            ]
        })
        .collect();

    // Every step sits at an endpoint or at an endpoint shifted left by s.
    // The shift keeps the order, so one sort serves both sequences, and a
    // merge enumerates the step positions.
    let mut ends: Vec<(S, usize)> = Vec::with_capacity(2 * n);
    for (i, e) in edges.iter().enumerate() {
        ends.push((e.lo().clone(), i));
        if !e.is_point() {
            ends.push((e.hi().clone(), i));
        }
    }
    ends.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let shifted: Vec<S> = ends.iter().map(|(v, _)| v.clone() - s.clone()).collect();

    let mut fns = FenwickPair::new(n);
    let mut stats = SweepStats::default();
    let mut best: Option<(S, S, usize, usize)> = None;
    let (mut a, mut b) = (0, 0);
    let mut group: Vec<(u8, usize)> = Vec::new();
    while a < ends.len() || b < shifted.len() {
        let take_shifted =
            a == ends.len() || (b < shifted.len() && shifted[b].total_cmp(&ends[a].0) != Ordering::Greater);
        let x = if take_shifted { shifted[b].clone() } else { ends[a].0.clone() };

        // All steps at x, ordered by phase and then edge.
        group.clear();
        while b < shifted.len() && shifted[b].total_cmp(&x) == Ordering::Equal {
            group.push((ARRIVE, ends[b].1));
            b += 1;
        }
        while a < ends.len() && ends[a].0.total_cmp(&x) == Ordering::Equal {
            let edge = ends[a].1;
            let phase = if edges[edge].is_point() { DEPART } else { ARRIVE };
            group.push((phase, edge));
            group.push((EVALUATE, edge));
            a += 1;
        }
        group.sort_unstable();
        // An edge of length exactly s meets its own shifted endpoint.
        group.dedup();

        for &(phase, edge) in &group {
            stats.events += 1;
            if phase != EVALUATE {
                stats.updates += 1;
                fns.set(rank[edge], contribution_after(&edges[edge], s, &x)?)?;
                continue;
            }
            // Upper-left corner on the vertex, then lower-left.
            for (k, &(start, end)) in ranges[edge].iter().enumerate() {
                let weight = fns.range_sum_fn(start, end)?.eval(&x);
                let better = match &best {
                    None => true,
                    Some((w, ..)) => weight.decide_cmp(w) == Ordering::Greater,
                };
                if better {
                    best = Some((weight, x.clone(), edge, k));
                }
            }
        }
    }
    let (weight, x, edge, k) = best.expect("every edge contributes an evaluation");
    let y = edges[edge].a()[1].clone();
    let corner_y = if k == 0 { y - s.clone() } else { y };
    let best = Placement::square(x, corner_y, s.clone(), weight);
    Ok((best, stats))
}

/// 1/4-approximate hotspot of an orthogonal planar trajectory.
pub fn quarter_hotspot<S: Scalar>(t: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    quarter_hotspot_with_stats(t, s).map(|(p, _)| p)
}

pub fn quarter_hotspot_with_stats<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
) -> Result<(Placement<S>, SweepStats)> {
    t.require_dim(Dim::Two)?;
    t.require_nonempty()?;
    if *s <= S::zero() {
        return Err(HotspotError::NonPositiveSide);
    }
    let (h, v) = partition(t)?;
    let mut stats = SweepStats::default();
    let mut candidates = Vec::new();
    for (part, turns) in [(&h, 0u8), (&h, 2), (&v, 1), (&v, 3)] {
        if part.is_empty() {
            continue;
        }
        let turned = rotate(part, turns)?;
        let (p, st) = corner_anchored_max_with_stats(&turned, s)?;
        stats += st;
        let (x, y) = rotate_square(&p.x, &p.y, s, (4 - turns) % 4);
        candidates.push(Placement::square(x, y, s.clone(), p.weight));
    }
    Ok((best_rescored(t, candidates), stats))
}
