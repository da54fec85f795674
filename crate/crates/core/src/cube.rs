//! Cube hotspots in three dimensions by slab projection.
//!
//! A cube whose bottom face sits at height `z` sees exactly the part of the
//! trajectory inside the slab `[z, z + s]`. Projecting that part onto the
//! plane (z-parallel pieces become point edges carrying the time spent in the
//! slab) turns the cube into a square of the same weight, so any planar
//! procedure can be run once per vertex height, and again with the z axis
//! reversed to cover cubes whose top face holds a vertex.

use std::cmp::Ordering;

use crate::algo::{Algorithm, SweepStats};
use crate::error::{HotspotError, Result};
use crate::model::{cube_weight, reflect_z, Dim, EdgeSet, Orientation, Placement, WeightedEdge};
use crate::scalar::Scalar;

/// The z range `[z0, z0 + s]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Slab<S> {
    z0: S,
    z1: S,
}

impl<S: Scalar> Slab<S> {
    pub fn new(z0: S, side: &S) -> Self {
        let z1 = z0.clone() + side.clone();
        Slab { z0, z1 }
    }

    pub fn bottom(&self) -> &S {
        &self.z0
    }

    pub fn top(&self) -> &S {
        &self.z1
    }

    pub fn contains(&self, z: &S) -> bool {
        *z >= self.z0 && *z <= self.z1
    }
}

/// Duration per unit length of a z-parallel edge.
pub fn z_rate<S: Scalar>(e: &WeightedEdge<S>) -> Option<&S> {
    (e.orientation() == Orientation::Z).then(|| e.rate()).flatten()
}

/// Projects the part of `t` inside the closed slab onto the plane.
pub fn project_slab<S: Scalar>(t: &EdgeSet<S>, slab: &Slab<S>) -> Result<EdgeSet<S>> {
    t.require_dim(Dim::Three)?;
    let mut out = Vec::new();
    for e in t.edges() {
        let (a, b) = (e.a(), e.b());
        let flat = |p: &[S; 3]| [p[0].clone(), p[1].clone(), S::zero()];
        if let Some(rate) = z_rate(e) {
            let start = S::max_of(e.lo(), &slab.z0);
            let end = S::min_of(e.hi(), &slab.z1);
            if start <= end {
                out.push(WeightedEdge::point(flat(a), rate.clone() * (end - start))?);
            }
        } else if slab.contains(&a[2]) {
            out.push(WeightedEdge::new(flat(a), flat(b), e.duration().clone())?);
        }
    }
    EdgeSet::new(Dim::Two, out)
}

/// Cube hotspot using `algo` on every projected slab. The approximation
/// factor of `algo` carries over.
pub fn cube_hotspot<S: Scalar>(t: &EdgeSet<S>, s: &S, algo: Algorithm) -> Result<Placement<S>> {
    cube_hotspot_with_stats(t, s, algo).map(|(p, _)| p)
}

pub fn cube_hotspot_with_stats<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
    algo: Algorithm,
) -> Result<(Placement<S>, SweepStats)> {
    t.require_dim(Dim::Three)?;
    t.require_nonempty()?;
    if *s <= S::zero() {
        return Err(HotspotError::NonPositiveSide);
    }
    let mut stats = SweepStats::default();
    let mut best = bottom_anchored(t, s, algo, &mut stats)?;

    let reversed = reflect_z(t);
    if let Some(mut p) = bottom_anchored(&reversed, s, algo, &mut stats)? {
        let z = p.z.take().expect("cube");
        p.z = Some(-(z + s.clone()));
        if best
            .as_ref()
            .is_none_or(|b| p.weight.decide_cmp(&b.weight) == Ordering::Greater)
        {
            best = Some(p);
        }
    }
    Ok((best.expect("a nonempty trajectory projects to some slab"), stats))
}

/// Best cube whose bottom face lies at the height of a vertex.
fn bottom_anchored<S: Scalar>(
    t: &EdgeSet<S>,
    s: &S,
    algo: Algorithm,
    stats: &mut SweepStats,
) -> Result<Option<Placement<S>>> {
    let mut heights: Vec<S> = t.endpoints().map(|p| p[2].clone()).collect();
    heights.sort_by(|a, b| a.total_cmp(b));
    heights.dedup();

    let mut best: Option<Placement<S>> = None;
    for z in heights {
        let slab = Slab::new(z.clone(), s);
        let flat = project_slab(t, &slab)?;
        if flat.is_empty() {
            continue;
        }
        let (sq, st) = algo.run_2d(&flat, s)?;
        *stats += st;
        let cube = Placement::cube(sq.x, sq.y, z, s.clone(), sq.weight);
        if S::EXACT {
            debug_assert_eq!(
                cube_weight(t, &cube.x, &cube.y, cube.z.as_ref().unwrap(), s),
                cube.weight
            );
        }
        if best
            .as_ref()
            .is_none_or(|b| cube.weight.decide_cmp(&b.weight) == Ordering::Greater)
        {
            best = Some(cube);
        }
    }
    Ok(best)
}
