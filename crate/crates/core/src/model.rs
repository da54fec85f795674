//! Trajectories as unordered sets of weighted axis-parallel edges, and the
//! direct square/cube weight evaluation everything else is checked against.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{HotspotError, Result};
use crate::scalar::Scalar;

/// Number of spatial coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn count(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    pub fn from_count(n: usize) -> Option<Dim> {
        match n {
            2 => Some(Dim::Two),
            3 => Some(Dim::Three),
            _ => None,
        }
    }
}

/// A point; the z component is zero for planar data.
pub type Point<S> = [S; 3];

#[derive(Debug, Clone, PartialEq)]
pub struct TimedVertex<S> {
    pub t: S,
    pub p: Point<S>,
}

impl<S: Scalar> TimedVertex<S> {
    pub fn new2(t: S, x: S, y: S) -> Self {
        TimedVertex {
            t,
            p: [x, y, S::zero()],
        }
    }

    pub fn new3(t: S, x: S, y: S, z: S) -> Self {
        TimedVertex { t, p: [x, y, z] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    X,
    Y,
    Z,
    Point,
}

impl Orientation {
    pub fn axis(self) -> Option<usize> {
        match self {
            Orientation::X => Some(0),
            Orientation::Y => Some(1),
            Orientation::Z => Some(2),
            Orientation::Point => None,
        }
    }

    fn from_axis(axis: usize) -> Orientation {
        match axis {
            0 => Orientation::X,
            1 => Orientation::Y,
            _ => Orientation::Z,
        }
    }
}

/// An axis-parallel (or degenerate) edge carrying the time spent on it.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedEdge<S> {
    a: Point<S>,
    b: Point<S>,
    duration: S,
    orientation: Orientation,
    // Extent along the edge's axis and duration per unit length.
    lo: S,
    hi: S,
    rate: Option<S>,
}

impl<S: Scalar> WeightedEdge<S> {
    pub fn new(a: Point<S>, b: Point<S>, duration: S) -> Result<Self> {
        if duration < S::zero() {
            return Err(HotspotError::InvalidNumber(format!("{duration:?}")));
        }
        let differing: Vec<usize> = (0..3).filter(|&k| a[k] != b[k]).collect();
        let orientation = match differing.as_slice() {
            [] => Orientation::Point,
            [k] => Orientation::from_axis(*k),
            _ => return Err(HotspotError::NotAxisParallel),
        };
        let (lo, hi, rate) = match orientation.axis() {
            Some(k) => {
                let lo = S::min_of(&a[k], &b[k]);
                let hi = S::max_of(&a[k], &b[k]);
                let rate = duration.clone() / (hi.clone() - lo.clone());
                (lo, hi, Some(rate))
            }
            None => (a[0].clone(), a[0].clone(), None),
        };
        Ok(WeightedEdge {
            a,
            b,
            duration,
            orientation,
            lo,
            hi,
            rate,
        })
    }

    /// A stationary interval at `p`.
    pub fn point(p: Point<S>, duration: S) -> Result<Self> {
        Self::new(p.clone(), p, duration)
    }

    /// Planar constructor.
    pub fn new2(a: (S, S), b: (S, S), duration: S) -> Result<Self> {
        Self::new([a.0, a.1, S::zero()], [b.0, b.1, S::zero()], duration)
    }

    pub fn a(&self) -> &Point<S> {
        &self.a
    }

    pub fn b(&self) -> &Point<S> {
        &self.b
    }

    pub fn duration(&self) -> &S {
        &self.duration
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_point(&self) -> bool {
        self.orientation == Orientation::Point
    }

    /// Smaller coordinate along the edge's axis (the x coordinate of a point edge).
    pub fn lo(&self) -> &S {
        &self.lo
    }

    /// Larger coordinate along the edge's axis.
    pub fn hi(&self) -> &S {
        &self.hi
    }

    pub fn length(&self) -> S {
        self.hi.clone() - self.lo.clone()
    }

    /// Duration per unit length; `None` for point edges.
    pub fn rate(&self) -> Option<&S> {
        self.rate.as_ref()
    }

    /// Minimum and maximum coordinate of the edge along `axis`.
    pub fn extent(&self, axis: usize) -> (&S, &S) {
        if self.orientation.axis() == Some(axis) {
            (&self.lo, &self.hi)
        } else {
            (&self.a[axis], &self.a[axis])
        }
    }

    fn map_points(&self, f: impl Fn(&Point<S>) -> Point<S>) -> Self {
        Self::new(f(&self.a), f(&self.b), self.duration.clone())
            .expect("axis-parallel edges stay axis-parallel under axis maps")
    }

    /// Time spent inside the closed box `[lower, lower + s]` over the first
    /// `axes` coordinates.
    fn weight_in_box(&self, lower: &[S], s: &S) -> S {
        let axes = lower.len();
        let along = self.orientation.axis().filter(|&k| k < axes);
        for j in 0..axes {
            if Some(j) == along {
                continue;
            }
            let c = &self.a[j];
            let lo = &lower[j];
            if c < lo || *c > lo.clone() + s.clone() {
                return S::zero();
            }
        }
        match (along, &self.rate) {
            (Some(k), Some(rate)) => {
                let box_lo = &lower[k];
                let box_hi = box_lo.clone() + s.clone();
                let start = S::max_of(&self.lo, box_lo);
                let end = S::min_of(&self.hi, &box_hi);
                if end > start {
                    rate.clone() * (end - start)
                } else {
                    S::zero()
                }
            }
            _ => self.duration.clone(),
        }
    }
}

/// A trajectory reduced to its unordered set of edges.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSet<S> {
    dim: Dim,
    edges: Vec<WeightedEdge<S>>,
}

impl<S: Scalar> EdgeSet<S> {
    /// Edges of a planar set must have zero z coordinates.
    pub fn new(dim: Dim, edges: Vec<WeightedEdge<S>>) -> Result<Self> {
        if dim == Dim::Two && edges.iter().any(|e| !e.a[2].is_zero() || !e.b[2].is_zero()) {
            return Err(HotspotError::DimensionMismatch {
                expected: 2,
                found: 3,
            });
        }
        Ok(EdgeSet { dim, edges })
    }

    pub fn empty(dim: Dim) -> Self {
        EdgeSet {
            dim,
            edges: Vec::new(),
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn edges(&self) -> &[WeightedEdge<S>] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn total_duration(&self) -> S {
        self.edges
            .iter()
            .fold(S::zero(), |acc, e| acc + e.duration.clone())
    }

    pub(crate) fn require_dim(&self, dim: Dim) -> Result<()> {
        if self.dim == dim {
            Ok(())
        } else {
            Err(HotspotError::DimensionMismatch {
                expected: dim.count(),
                found: self.dim.count(),
            })
        }
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(HotspotError::EmptyTrajectory)
        } else {
            Ok(())
        }
    }

    /// Endpoints of every edge (both ends, duplicates kept).
    pub fn endpoints(&self) -> impl Iterator<Item = &Point<S>> {
        self.edges.iter().flat_map(|e| [&e.a, &e.b])
    }
}

/// A square (`z == None`) or cube with its lower corner, side and weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement<S> {
    pub x: S,
    pub y: S,
    pub z: Option<S>,
    pub side: S,
    pub weight: S,
}

impl<S: Scalar> Placement<S> {
    pub fn square(x: S, y: S, side: S, weight: S) -> Self {
        Placement {
            x,
            y,
            z: None,
            side,
            weight,
        }
    }

    pub fn cube(x: S, y: S, z: S, side: S, weight: S) -> Self {
        Placement {
            x,
            y,
            z: Some(z),
            side,
            weight,
        }
    }

    /// Lexicographic order on the lower corner.
    pub(crate) fn corner_cmp(&self, other: &Self) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
            .then_with(|| match (&self.z, &other.z) {
                (Some(a), Some(b)) => a.total_cmp(b),
                _ => Ordering::Equal,
            })
    }
}

/// Turns a polyline into its weighted edges, one per consecutive pair.
pub fn build_edge_set<S: Scalar>(dim: Dim, vertices: &[TimedVertex<S>]) -> Result<EdgeSet<S>> {
    if vertices.is_empty() {
        return Err(HotspotError::NoVertices);
    }
    let mut edges = Vec::with_capacity(vertices.len().saturating_sub(1));
    for (i, pair) in vertices.windows(2).enumerate() {
        let (u, v) = (&pair[0], &pair[1]);
        if v.t <= u.t {
            return Err(HotspotError::NonMonotoneTime { index: i + 1 });
        }
        let edge = WeightedEdge::new(u.p.clone(), v.p.clone(), v.t.clone() - u.t.clone())
            .map_err(|_| HotspotError::NonOrthogonalStep { index: i + 1 })?;
        edges.push(edge);
    }
    EdgeSet::new(dim, edges)
}

/// Splits a planar set into its x-parallel part (with point edges) and its
/// y-parallel part.
pub fn partition<S: Scalar>(set: &EdgeSet<S>) -> Result<(EdgeSet<S>, EdgeSet<S>)> {
    set.require_dim(Dim::Two)?;
    let (vertical, horizontal): (Vec<_>, Vec<_>) = set
        .edges
        .iter()
        .cloned()
        .partition(|e| e.orientation == Orientation::Y);
    Ok((
        EdgeSet {
            dim: Dim::Two,
            edges: horizontal,
        },
        EdgeSet {
            dim: Dim::Two,
            edges: vertical,
        },
    ))
}

/// Applies `(x, y) -> (y, -x)` a total of `quarter_turns` times.
pub fn rotate_point<S: Scalar>(x: &S, y: &S, quarter_turns: u8) -> (S, S) {
    let (mut x, mut y) = (x.clone(), y.clone());
    for _ in 0..quarter_turns % 4 {
        let nx = y;
        y = -x;
        x = nx;
    }
    (x, y)
}

/// Lower-left corner of the image of square `(x, y, s)` under the rotation.
pub fn rotate_square<S: Scalar>(x: &S, y: &S, s: &S, quarter_turns: u8) -> (S, S) {
    let (ax, ay) = rotate_point(x, y, quarter_turns);
    let (bx, by) = rotate_point(&(x.clone() + s.clone()), &(y.clone() + s.clone()), quarter_turns);
    (S::min_of(&ax, &bx), S::min_of(&ay, &by))
}

pub fn rotate<S: Scalar>(set: &EdgeSet<S>, quarter_turns: u8) -> Result<EdgeSet<S>> {
    set.require_dim(Dim::Two)?;
    let edges = set
        .edges
        .iter()
        .map(|e| {
            e.map_points(|p| {
                let (x, y) = rotate_point(&p[0], &p[1], quarter_turns);
                [x, y, S::zero()]
            })
        })
        .collect();
    Ok(EdgeSet {
        dim: Dim::Two,
        edges,
    })
}

/// Mirrors a set through the plane `z = 0`.
pub fn reflect_z<S: Scalar>(set: &EdgeSet<S>) -> EdgeSet<S> {
    let edges = set
        .edges
        .iter()
        .map(|e| e.map_points(|p| [p[0].clone(), p[1].clone(), -p[2].clone()]))
        .collect();
    EdgeSet {
        dim: set.dim,
        edges,
    }
}

/// Weight of the closed square `[x, x+s] x [y, y+s]`.
pub fn square_weight<S: Scalar>(set: &EdgeSet<S>, x: &S, y: &S, s: &S) -> S {
    edges_weight(&set.edges, &[x.clone(), y.clone()], s)
}

/// Weight of the closed cube with lower corner `(x, y, z)`.
pub fn cube_weight<S: Scalar>(set: &EdgeSet<S>, x: &S, y: &S, z: &S, s: &S) -> S {
    edges_weight(&set.edges, &[x.clone(), y.clone(), z.clone()], s)
}

pub(crate) fn edges_weight<'a, S: Scalar>(
    edges: impl IntoIterator<Item = &'a WeightedEdge<S>>,
    lower: &[S],
    s: &S,
) -> S {
    edges
        .into_iter()
        .fold(S::zero(), |acc, e| acc + e.weight_in_box(lower, s))
}

/// Weight of `p` evaluated against `set`, square or cube by `p.z`.
pub fn placement_weight<S: Scalar>(set: &EdgeSet<S>, p: &Placement<S>) -> S {
    match &p.z {
        Some(z) => cube_weight(set, &p.x, &p.y, z, &p.side),
        None => square_weight(set, &p.x, &p.y, &p.side),
    }
}
