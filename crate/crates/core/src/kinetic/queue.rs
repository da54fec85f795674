use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepEventKind {
    /// An edge's contribution changes case. `departure` marks a point edge
    /// leaving the sweep squares, which must follow every other update at the
    /// same position.
    Update {
        edge: usize,
        index: usize,
        departure: bool,
    },
    /// The certificate of `node` fails, unless `version` is stale.
    Failure { node: usize, version: u64 },
}

impl SweepEventKind {
    fn rank(&self) -> (u8, usize, u64) {
        match *self {
            SweepEventKind::Update {
                edge,
                index,
                departure,
            } => (u8::from(departure), edge, index as u64),
            SweepEventKind::Failure { node, version } => (2, node, version),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepEvent<S> {
    pub x: S,
    pub kind: SweepEventKind,
}

impl<S: Scalar> Eq for SweepEvent<S> {}

impl<S: Scalar> Ord for SweepEvent<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.kind.rank().cmp(&other.kind.rank()))
    }
}

impl<S: Scalar> PartialOrd for SweepEvent<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Min-queue of sweep events: by position, then arrivals, departures and
/// failures, then by id.
#[derive(Debug, Clone)]
pub struct EventQueue<S> {
    heap: BinaryHeap<Reverse<SweepEvent<S>>>,
}

impl<S: Scalar> Default for EventQueue<S> {
    fn default() -> Self {
        EventQueue {
            heap: BinaryHeap::new(),
        }
    }
}

impl<S: Scalar> EventQueue<S> {
    pub fn push(&mut self, x: S, kind: SweepEventKind) {
        self.heap.push(Reverse(SweepEvent { x, kind }));
    }

    pub fn pop(&mut self) -> Option<SweepEvent<S>> {
        self.heap.pop().map(|Reverse(e)| e)
    }

    pub fn peek(&self) -> Option<&SweepEvent<S>> {
        self.heap.peek().map(|Reverse(e)| e)
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }
}
