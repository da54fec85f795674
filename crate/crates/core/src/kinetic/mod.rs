//! Exact hotspot of an x-parallel edge set by a plane sweep that keeps the
//! heaviest sweep square at the root of a kinetic tournament, and the
//! 1/2-approximate hotspot for orthogonal trajectories built on it.
//!
//! The sweep tracks the squares whose upper side lies at an edge height.
//! Their weights are piecewise linear in the sweep position, so the maximum
//! over all positions occurs at an event and is read off the root there.

mod queue;
mod sweep;
mod tree;

pub use queue::{EventQueue, SweepEvent, SweepEventKind};
pub use sweep::{KineticSweep, SweepReport, TraceKind, TraceRecord};
pub use tree::{KineticSegment, KineticTree, Recomputed, SegTreeNode, ROOT};

use crate::algo::{best_rescored, SweepStats};
use crate::error::Result;
use crate::model::{partition, rotate, rotate_square, Dim, EdgeSet, Placement};
use crate::scalar::Scalar;

/// Hotspot of an x-parallel (or point) edge set; the weight is exact.
pub fn half_hotspot_horizontal<S: Scalar>(h: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    Ok(KineticSweep::new(h, s)?.run()?.placement)
}

pub fn half_hotspot_horizontal_with_stats<S: Scalar>(
    h: &EdgeSet<S>,
    s: &S,
) -> Result<(Placement<S>, SweepStats)> {
    let report = KineticSweep::new(h, s)?.run()?;
    Ok((report.placement, report.stats))
}

/// 1/2-approximate hotspot of an orthogonal planar trajectory: the better of
/// the horizontal part's hotspot and the vertical part's (found after a
/// quarter turn), each re-scored against the whole trajectory.
pub fn half_hotspot<S: Scalar>(t: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    half_hotspot_with_stats(t, s).map(|(p, _)| p)
}

pub fn half_hotspot_with_stats<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
) -> Result<(Placement<S>, SweepStats)> {
    let (p, stats, _) = half_hotspot_impl(t, s, false)?;
    Ok((p, stats))
}

/// Per-pass event traces of [`half_hotspot`]; the vertical pass runs on the
/// vertical part turned a quarter counterclockwise.
#[derive(Debug, Clone)]
pub struct HalfTrace<S> {
    pub horizontal: Vec<TraceRecord<S>>,
    pub vertical: Vec<TraceRecord<S>>,
}

pub fn half_hotspot_traced<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
) -> Result<(Placement<S>, SweepStats, HalfTrace<S>)> {
    half_hotspot_impl(t, s, true)
}

fn half_hotspot_impl<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
    traced: bool,
) -> Result<(Placement<S>, SweepStats, HalfTrace<S>)> {
    t.require_dim(Dim::Two)?;
    t.require_nonempty()?;
    let (h, v) = partition(t)?;
    let mut stats = SweepStats::default();
    let mut trace = HalfTrace {
        horizontal: Vec::new(),
        vertical: Vec::new(),
    };
    let mut candidates = Vec::with_capacity(2);
    for (part, turns) in [(&h, 0u8), (&v, 1)] {
        if part.is_empty() {
            continue;
        }
        let turned = rotate(part, turns)?;
        let mut sweep = KineticSweep::new(&turned, s)?;
        if traced {
            sweep = sweep.with_trace();
        }
        let report = sweep.run()?;
        stats += report.stats;
        if turns == 0 {
            trace.horizontal = report.trace;
        } else {
            trace.vertical = report.trace;
        }
        let p = report.placement;
        let (x, y) = rotate_square(&p.x, &p.y, s, (4 - turns) % 4);
        candidates.push(Placement::square(x, y, s.clone(), p.weight));
    }
    Ok((best_rescored(t, candidates), stats, trace))
}
