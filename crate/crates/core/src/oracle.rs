//! Exact hotspots by brute force over the candidate grid.
//!
//! For orthogonal input the weight of a square is linear inside every cell of
//! the grid cut by the lines `c = v` and `c = v - s` for each vertex
//! coordinate `v`, and upper semicontinuous across cell boundaries (closed
//! squares), so some grid point attains the maximum.

use std::cmp::Ordering;

use crate::algo::SweepStats;
use crate::error::{HotspotError, Result};
use crate::model::{cube_weight, edges_weight, square_weight, Dim, EdgeSet, Placement, WeightedEdge};
use crate::scalar::Scalar;

/// Sorted distinct candidate coordinates along one axis.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateGrid<S> {
    pub xs: Vec<S>,
    pub ys: Vec<S>,
}

impl<S: Scalar> CandidateGrid<S> {
    pub fn new<'a>(edges: impl IntoIterator<Item = &'a WeightedEdge<S>> + Clone, s: &S) -> Self {
        CandidateGrid {
            xs: axis_candidates(edges.clone(), 0, s),
            ys: axis_candidates(edges, 1, s),
        }
    }
}

fn axis_candidates<'a, S: Scalar>(
    edges: impl IntoIterator<Item = &'a WeightedEdge<S>>,
    axis: usize,
    s: &S,
) -> Vec<S> {
    let mut out = Vec::new();
    for e in edges {
        for p in [e.a(), e.b()] {
            out.push(p[axis].clone());
            out.push(p[axis].clone() - s.clone());
        }
    }
    out.sort_by(|a, b| a.total_cmp(b));
    out.dedup();
    out
}

fn touches_band<S: Scalar>(e: &WeightedEdge<S>, axis: usize, lo: &S, hi: &S) -> bool {
    let (a, b) = e.extent(axis);
    a <= hi && b >= lo
}

fn check<S: Scalar>(t: &EdgeSet<S>, dim: Dim, s: &S) -> Result<()> {
    t.require_dim(dim)?;
    t.require_nonempty()?;
    if *s <= S::zero() {
        return Err(HotspotError::NonPositiveSide);
    }
    Ok(())
}

fn improves<S: Scalar>(candidate: &Placement<S>, best: &Option<Placement<S>>) -> bool {
    match best {
        None => true,
        Some(b) => match candidate.weight.decide_cmp(&b.weight) {
            Ordering::Greater => true,
            Ordering::Equal => candidate.corner_cmp(b) == Ordering::Less,
            Ordering::Less => false,
        },
    }
}

/// Maximum-weight square by evaluating every grid point against every edge,
/// `O(n^3)`; ties go to the lexicographically smallest corner.
pub fn exact_hotspot_2d<S: Scalar>(t: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    exact_hotspot_2d_with_stats(t, s).map(|(p, _)| p)
}

pub fn exact_hotspot_2d_with_stats<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
) -> Result<(Placement<S>, SweepStats)> {
    check(t, Dim::Two, s)?;
    let grid = CandidateGrid::new(t.edges(), s);
    let mut stats = SweepStats::default();
    let mut best = None;
    for y in &grid.ys {
        for x in &grid.xs {
            stats.events += 1;
            let weight = square_weight(t, x, y, s);
            let candidate = Placement::square(x.clone(), y.clone(), s.clone(), weight);
            if improves(&candidate, &best) {
                best = Some(candidate);
            }
        }
    }
    Ok((best.expect("grid is nonempty"), stats))
}

/// Best square with a left corner on an endpoint of `h`, by enumeration.
pub fn corner_anchored_oracle<S: Scalar>(h: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    check(h, Dim::Two, s)?;
    let mut best: Option<Placement<S>> = None;
    for p in h.endpoints() {
        for y in [p[1].clone(), p[1].clone() - s.clone()] {
            let weight = square_weight(h, &p[0], &y, s);
            let candidate = Placement::square(p[0].clone(), y, s.clone(), weight);
            if improves(&candidate, &best) {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("nonempty"))
}

/// Maximum-weight cube; ties go to the lexicographically smallest corner.
pub fn exact_hotspot_3d<S: Scalar>(t: &EdgeSet<S>, s: &S) -> Result<Placement<S>> {
    check(t, Dim::Three, s)?;
    let zs = axis_candidates(t.edges(), 2, s);
    let mut best = None;
    for z in &zs {
        let top = z.clone() + s.clone();
        let slab: Vec<&WeightedEdge<S>> = t
            .edges()
            .iter()
            .filter(|e| touches_band(e, 2, z, &top))
            .collect();
        let grid = CandidateGrid::new(slab.iter().copied(), s);
        for y in &grid.ys {
            for x in &grid.xs {
                let weight = edges_weight(slab.iter().copied(), &[x.clone(), y.clone(), z.clone()], s);
                let candidate = Placement::cube(x.clone(), y.clone(), z.clone(), s.clone(), weight);
                if improves(&candidate, &best) {
                    best = Some(candidate);
                }
            }
        }
    }
    let best = best.expect("grid is nonempty");
    debug_assert_eq!(
        cube_weight(t, &best.x, &best.y, best.z.as_ref().unwrap(), s),
        best.weight
    );
    Ok(best)
}
