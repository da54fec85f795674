//! Segment tree over the height intervals `[y_i - s, y_i]`, with a kinetic
//! tournament over the leaves.
//!
//! Each node keeps the sum `sum` of the contribution functions of the
//! segments stored at it and a winner function `winner_fn`: for a leaf the
//! sum itself, otherwise `sum` plus the winner function of the better child.
//! Along any root-to-leaf path the sums add up to the weight of the sweep
//! square whose lower side sits at that leaf's height.

use std::cmp::Ordering;

use crate::contribution::LinearFn;
use crate::error::{HotspotError, Result};
use crate::model::EdgeSet;
use crate::quarter::check_horizontal_set;
use crate::scalar::Scalar;

/// Height interval `[lo, hi]` of one edge; `hi - lo` equals the side.
#[derive(Debug, Clone, PartialEq)]
pub struct KineticSegment<S> {
    pub id: usize,
    pub lo: S,
    pub hi: S,
    pub edge: usize,
    pub contribution: LinearFn<S>,
    canonical: Vec<usize>,
}

impl<S> KineticSegment<S> {
    /// Nodes that store this segment.
    pub fn canonical_nodes(&self) -> &[usize] {
        &self.canonical
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegTreeNode<S> {
    /// Inclusive range of leaf indices below this node.
    pub leaves: (usize, usize),
    pub parent: Option<usize>,
    pub children: Option<(usize, usize)>,
    pub depth: usize,
    /// Segments whose canonical decomposition includes this node.
    pub stored: Vec<usize>,
    /// Midpoint of the node's interval.
    pub mid_y: S,
    pub sum: LinearFn<S>,
    pub winner_fn: LinearFn<S>,
    /// Winning leaf index.
    pub winner: usize,
    /// Bumped whenever the node's certificate is recomputed.
    pub version: u64,
}

impl<S> SegTreeNode<S> {
    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }
}

/// Result of re-deciding a node's winner.
#[derive(Debug, Clone, PartialEq)]
pub struct Recomputed<S> {
    pub winner_changed: bool,
    pub fn_changed: bool,
    /// Next time the loser overtakes, if any.
    pub failure_at: Option<S>,
    pub version: u64,
}

#[derive(Debug, Clone)]
pub struct KineticTree<S> {
    side: S,
    points: Vec<S>,
    nodes: Vec<SegTreeNode<S>>,
    leaf_nodes: Vec<usize>,
    segments: Vec<KineticSegment<S>>,
}

pub const ROOT: usize = 0;

impl<S: Scalar> KineticTree<S> {
    /// Builds the tree for an x-parallel edge set; every contribution starts
    /// at zero.
    pub fn build(h: &EdgeSet<S>, s: &S) -> Result<Self> {
        check_horizontal_set(h, s)?;
        let mut points: Vec<S> = h
            .edges()
            .iter()
            .flat_map(|e| {
                let y = e.a()[1].clone();
                [y.clone() - s.clone(), y]
            })
            .collect();
        points.sort_by(|a, b| a.total_cmp(b));
        points.dedup();

        let leaf_count = 2 * points.len() - 1;
        let mut tree = KineticTree {
            side: s.clone(),
            points,
            nodes: Vec::with_capacity(2 * leaf_count),
            leaf_nodes: vec![usize::MAX; leaf_count],
            segments: Vec::with_capacity(h.len()),
        };
        tree.build_node(0, leaf_count - 1, None, 0);

        for (id, e) in h.edges().iter().enumerate() {
            let hi = e.a()[1].clone();
            let lo = hi.clone() - s.clone();
            let l = 2 * tree.point_index(&lo);
            let r = 2 * tree.point_index(&hi);
            let mut canonical = Vec::new();
            tree.insert(ROOT, l, r, id, &mut canonical);
            tree.segments.push(KineticSegment {
                id,
                lo,
                hi,
                edge: id,
                contribution: LinearFn::zero(),
                canonical,
            });
        }
        Ok(tree)
    }

    fn point_index(&self, y: &S) -> usize {
        self.points
            .binary_search_by(|p| p.total_cmp(y))
            .expect("segment endpoints are tree points")
    }

    fn build_node(&mut self, lo: usize, hi: usize, parent: Option<usize>, depth: usize) -> usize {
        let id = self.nodes.len();
        let mid_y = (self.leaf_low(lo) + self.leaf_high(hi)).half();
        self.nodes.push(SegTreeNode {
            leaves: (lo, hi),
            parent,
            children: None,
            depth,
            stored: Vec::new(),
            mid_y,
            sum: LinearFn::zero(),
            winner_fn: LinearFn::zero(),
            winner: lo,
            version: 0,
        });
        if lo == hi {
            self.leaf_nodes[lo] = id;
        } else {
            let mid = lo + (hi - lo) / 2;
            let left = self.build_node(lo, mid, Some(id), depth + 1);
            let right = self.build_node(mid + 1, hi, Some(id), depth + 1);
            self.nodes[id].children = Some((left, right));
        }
        id
    }

    fn insert(&mut self, node: usize, l: usize, r: usize, seg: usize, out: &mut Vec<usize>) {
        let (lo, hi) = self.nodes[node].leaves;
        if r < lo || hi < l {
            return;
        }
        if l <= lo && hi <= r {
            self.nodes[node].stored.push(seg);
            out.push(node);
            return;
        }
        let (left, right) = self.nodes[node].children.expect("partial overlap implies children");
        self.insert(left, l, r, seg, out);
        self.insert(right, l, r, seg, out);
    }

    // Lower and upper bound of a leaf's elementary interval.
    fn leaf_low(&self, leaf: usize) -> S {
        self.points[leaf / 2].clone()
    }

    fn leaf_high(&self, leaf: usize) -> S {
        self.points[leaf.div_ceil(2)].clone()
    }

    pub fn side(&self) -> &S {
        &self.side
    }

    pub fn nodes(&self) -> &[SegTreeNode<S>] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &SegTreeNode<S> {
        &self.nodes[id]
    }

    pub fn root(&self) -> &SegTreeNode<S> {
        &self.nodes[ROOT]
    }

    pub fn segments(&self) -> &[KineticSegment<S>] {
        &self.segments
    }

    pub fn segment(&self, id: usize) -> Result<&KineticSegment<S>> {
        self.segments.get(id).ok_or(HotspotError::UnknownEdge(id))
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_nodes.len()
    }

    pub fn leaf_node(&self, leaf: usize) -> usize {
        self.leaf_nodes[leaf]
    }

    /// True for the degenerate intervals `[p, p]`.
    pub fn leaf_is_point(&self, leaf: usize) -> bool {
        leaf % 2 == 0
    }

    /// Representative height of a leaf: the point itself, or the midpoint of
    /// an open elementary interval.
    pub fn leaf_y(&self, leaf: usize) -> &S {
        &self.nodes[self.leaf_nodes[leaf]].mid_y
    }

    /// The leaf whose interval is `[y, y]` for a segment endpoint `y`.
    pub fn segleaf(&self, seg: usize) -> usize {
        2 * self.point_index(&self.segments[seg].lo)
    }

    /// Leaf whose elementary interval contains `q`, point leaves preferred.
    pub fn leaf_containing(&self, q: &S) -> Option<usize> {
        let idx = self.points.partition_point(|p| p < q);
        if idx < self.points.len() && self.points[idx] == *q {
            Some(2 * idx)
        } else if idx == 0 || idx == self.points.len() {
            None
        } else {
            Some(2 * idx - 1)
        }
    }

    /// Segments containing `q`, i.e. edges meeting the sweep square whose
    /// lower side is at height `q`.
    pub fn stab(&self, q: &S) -> Vec<usize> {
        let Some(leaf) = self.leaf_containing(q) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut node = ROOT;
        loop {
            out.extend_from_slice(&self.nodes[node].stored);
            match self.nodes[node].children {
                None => break,
                Some((l, r)) => node = if leaf <= self.nodes[l].leaves.1 { l } else { r },
            }
        }
        out
    }

    /// Sum of `sum` functions from `from` down to `leaf`.
    pub fn path_sum(&self, from: usize, leaf: usize) -> LinearFn<S> {
        let mut total = LinearFn::zero();
        let mut node = from;
        loop {
            let n = &self.nodes[node];
            debug_assert!(n.leaves.0 <= leaf && leaf <= n.leaves.1);
            total += &n.sum;
            match n.children {
                None => return total,
                Some((l, r)) => node = if leaf <= self.nodes[l].leaves.1 { l } else { r },
            }
        }
    }

    /// Installs a new contribution for `seg`, shifting the sums and winner
    /// functions of its canonical nodes. Returns `false` if nothing changed.
    pub(crate) fn set_contribution(&mut self, seg: usize, f: LinearFn<S>) -> Result<bool> {
        let segment = self.segments.get_mut(seg).ok_or(HotspotError::UnknownEdge(seg))?;
        let delta = f.clone() - std::mem::replace(&mut segment.contribution, f);
        if delta.is_zero() {
            return Ok(false);
        }
        for &node in &self.segments[seg].canonical {
            let n = &mut self.nodes[node];
            n.sum += &delta;
            n.winner_fn += &delta;
        }
        Ok(true)
    }

    /// Re-decides the winner of `node` at sweep position `x` and bumps its
    /// version.
    ///
    /// Children are compared by value at `x`, then by slope (the larger one
    /// leads just after `x`), then the left child wins.
    pub fn recompute(&mut self, node: usize, x: &S) -> Recomputed<S> {
        let Some((l, r)) = self.nodes[node].children else {
            let n = &mut self.nodes[node];
            let old = std::mem::replace(&mut n.winner_fn, n.sum.clone());
            n.version += 1;
            return Recomputed {
                winner_changed: false,
                fn_changed: old != n.winner_fn,
                failure_at: None,
                version: n.version,
            };
        };
        let (fl, fr) = (&self.nodes[l].winner_fn, &self.nodes[r].winner_fn);
        let order = fl
            .eval(x)
            .decide_cmp(&fr.eval(x))
            .then_with(|| fl.slope.decide_cmp(&fr.slope));
        let (win, lose) = if order == Ordering::Less { (r, l) } else { (l, r) };
        let (fw, fo) = (&self.nodes[win].winner_fn, &self.nodes[lose].winner_fn);

        let failure_at = if fo.slope.decide_cmp(&fw.slope) == Ordering::Greater {
            let t = (fw.intercept.clone() - fo.intercept.clone())
                / (fo.slope.clone() - fw.slope.clone());
            (t.total_cmp(x) == Ordering::Greater).then_some(t)
        } else {
            None
        };
        let new_fn = &self.nodes[node].sum + fw;
        let new_winner = self.nodes[win].winner;

        let n = &mut self.nodes[node];
        let winner_changed = n.winner != new_winner;
        let fn_changed = n.winner_fn != new_fn;
        n.winner = new_winner;
        n.winner_fn = new_fn;
        n.version += 1;
        Recomputed {
            winner_changed,
            fn_changed,
            failure_at,
            version: n.version,
        }
    }
}
