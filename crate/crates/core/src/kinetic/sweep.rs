use std::cmp::Ordering;

use crate::algo::SweepStats;
use crate::contribution::{contribution_after, is_departure, update_events};
use crate::error::{HotspotError, Result};
use crate::model::{EdgeSet, Placement};
use crate::scalar::Scalar;

use super::queue::{EventQueue, SweepEvent, SweepEventKind};
use super::tree::KineticTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Update,
    Failure,
    Stale,
}

impl TraceKind {
    pub fn name(self) -> &'static str {
        match self {
            TraceKind::Update => "update",
            TraceKind::Failure => "failure",
            TraceKind::Stale => "stale",
        }
    }
}

/// State after one processed event.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord<S> {
    pub x: S,
    pub kind: TraceKind,
    /// Edge id for updates, node id for failures.
    pub id: usize,
    pub winner_leaf: usize,
    pub root_value: S,
}

#[derive(Debug, Clone)]
pub struct SweepReport<S> {
    pub placement: Placement<S>,
    pub stats: SweepStats,
    pub trace: Vec<TraceRecord<S>>,
}

/// The plane sweep over an x-parallel edge set, driven one event at a time.
pub struct KineticSweep<'a, S> {
    edges: &'a EdgeSet<S>,
    side: S,
    tree: KineticTree<S>,
    queue: EventQueue<S>,
    last_x: Option<S>,
    stats: SweepStats,
    // Best root value seen: (weight, x, winning leaf).
    best: Option<(S, S, usize)>,
    trace: Option<Vec<TraceRecord<S>>>,
    // Scratch for collecting ancestors during updates.
    stamp: Vec<u64>,
    epoch: u64,
}

impl<'a, S: Scalar> KineticSweep<'a, S> {
    pub fn new(h: &'a EdgeSet<S>, s: &S) -> Result<Self> {
        let tree = KineticTree::build(h, s)?;
        let mut queue = EventQueue::default();
        for (edge, e) in h.edges().iter().enumerate() {
            for (index, x) in update_events(e, s)?.into_iter().enumerate() {
                let departure = is_departure(e, &x);
                queue.push(
                    x,
                    SweepEventKind::Update {
                        edge,
                        index,
                        departure,
                    },
                );
            }
        }
        let stamp = vec![0; tree.nodes().len()];
        Ok(KineticSweep {
            edges: h,
            side: s.clone(),
            tree,
            queue,
            last_x: None,
            stats: SweepStats::default(),
            best: None,
            trace: None,
            stamp,
            epoch: 0,
        })
    }

    /// Keep one [`TraceRecord`] per processed event.
    pub fn with_trace(mut self) -> Self {
        self.trace = Some(Vec::new());
        self
    }

    pub fn tree(&self) -> &KineticTree<S> {
        &self.tree
    }

    pub fn stats(&self) -> SweepStats {
        self.stats
    }

    /// Position of the last processed event.
    pub fn position(&self) -> Option<&S> {
        self.last_x.as_ref()
    }

    /// Position of the next pending event.
    pub fn peek_x(&self) -> Option<&S> {
        self.queue.peek().map(|e| &e.x)
    }

    pub fn is_done(&self) -> bool {
        self.queue.is_empty()
    }

    fn root_value(&self, x: &S) -> S {
        self.tree.root().winner_fn.eval(x)
    }

    fn offer(&mut self, weight: S, x: &S, leaf: usize) {
        let better = match &self.best {
            None => true,
            Some((w, _, _)) => weight.decide_cmp(w) == Ordering::Greater,
        };
        if better {
            self.best = Some((weight, x.clone(), leaf));
        }
    }

    fn schedule(&mut self, node: usize, x: &S) -> (bool, bool) {
        let rc = self.tree.recompute(node, x);
        if rc.winner_changed {
            self.stats.winner_changes += 1;
        }
        if let Some(t) = rc.failure_at {
            self.queue.push(
                t,
                SweepEventKind::Failure {
                    node,
                    version: rc.version,
                },
            );
        }
        (rc.winner_changed, rc.fn_changed)
    }

    /// Installs the contribution of `edge` valid just after `x` and repairs
    /// the tournament above every node storing the edge's segment.
    pub fn process_update(&mut self, edge: usize, x: &S) -> Result<()> {
        let e = self
            .edges
            .edges()
            .get(edge)
            .ok_or(HotspotError::UnknownEdge(edge))?;
        let f = contribution_after(e, &self.side, x)?;
        self.stats.updates += 1;
        if !self.tree.set_contribution(edge, f)? {
            return Ok(());
        }

        // Strict ancestors of the canonical nodes; the canonical nodes keep
        // their winners because all their leaves shift together.
        self.epoch += 1;
        let mut affected = Vec::new();
        for &node in self.tree.segment(edge)?.canonical_nodes() {
            let mut cur = self.tree.node(node).parent;
            while let Some(p) = cur {
                if self.stamp[p] == self.epoch {
                    break;
                }
                self.stamp[p] = self.epoch;
                affected.push(p);
                cur = self.tree.node(p).parent;
            }
        }
        affected.sort_by_key(|&n| std::cmp::Reverse(self.tree.node(n).depth));
        for node in affected {
            self.schedule(node, x);
        }
        Ok(())
    }

    /// Handles a certificate failure at `node`; stale versions are ignored.
    pub fn process_failure(&mut self, node: usize, version: u64, x: &S) -> bool {
        if self.tree.node(node).version != version {
            self.stats.stale_events += 1;
            return false;
        }
        self.stats.failures += 1;
        let mut cur = node;
        let (_, mut changed) = self.schedule(cur, x);
        while changed {
            let Some(parent) = self.tree.node(cur).parent else {
                break;
            };
            let (winner_changed, fn_changed) = self.schedule(parent, x);
            changed = winner_changed || fn_changed;
            cur = parent;
        }
        true
    }

    /// Processes the next event, recording the root value just before and
    /// just after it. Returns `None` once the queue is exhausted.
    pub fn step(&mut self) -> Result<Option<SweepEvent<S>>> {
        let Some(event) = self.queue.pop() else {
            return Ok(None);
        };
        debug_assert!(self
            .last_x
            .as_ref()
            .is_none_or(|prev| prev.total_cmp(&event.x) != Ordering::Greater));
        self.stats.events += 1;
        let x = event.x.clone();

        let before = self.root_value(&x);
        let leaf_before = self.tree.root().winner;
        self.offer(before, &x, leaf_before);

        let (kind, id) = match event.kind {
            SweepEventKind::Update { edge, .. } => {
                self.process_update(edge, &x)?;
                (TraceKind::Update, edge)
            }
            SweepEventKind::Failure { node, version } => {
                if self.process_failure(node, version, &x) {
                    (TraceKind::Failure, node)
                } else {
                    (TraceKind::Stale, node)
                }
            }
        };

        let after = self.root_value(&x);
        let leaf_after = self.tree.root().winner;
        self.offer(after.clone(), &x, leaf_after);
        if let Some(trace) = &mut self.trace {
            trace.push(TraceRecord {
                x: x.clone(),
                kind,
                id,
                winner_leaf: leaf_after,
                root_value: after,
            });
        }
        self.last_x = Some(x);
        Ok(Some(event))
    }

    /// Runs to completion; the placement's weight is the maximum root value.
    pub fn run(mut self) -> Result<SweepReport<S>> {
        while self.step()?.is_some() {}
        let (weight, x, leaf) = self.best.clone().expect("every edge has update events");
        let y = self.tree.leaf_y(leaf).clone();
        Ok(SweepReport {
            placement: Placement::square(x, y, self.side.clone(), weight),
            stats: self.stats,
            trace: self.trace.unwrap_or_default(),
        })
    }
}
