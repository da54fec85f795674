use std::cmp::Ordering;
use std::ops::AddAssign;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{square_weight, EdgeSet, Placement};
use crate::scalar::Scalar;
use crate::{kinetic, oracle, quarter};

/// Work counters reported by the sweeps.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepStats {
    /// Events taken off the queue (or sorted step list), stale ones included.
    pub events: u64,
    pub updates: u64,
    pub failures: u64,
    pub stale_events: u64,
    pub winner_changes: u64,
}

impl AddAssign for SweepStats {
    fn add_assign(&mut self, rhs: Self) {
        self.events += rhs.events;
        self.updates += rhs.updates;
        self.failures += rhs.failures;
        self.stale_events += rhs.stale_events;
        self.winner_changes += rhs.winner_changes;
    }
}

/// Planar hotspot procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Exact,
    Quarter,
    Half,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Exact, Algorithm::Quarter, Algorithm::Half];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Quarter => "quarter",
            Algorithm::Half => "half",
        }
    }

    pub fn run_2d<S: Scalar>(self, t: &EdgeSet<S>, s: &S) -> Result<(Placement<S>, SweepStats)> {
        match self {
            Algorithm::Exact => oracle::exact_hotspot_2d_with_stats(t, s),
            Algorithm::Quarter => quarter::quarter_hotspot_with_stats(t, s),
            Algorithm::Half => kinetic::half_hotspot_with_stats(t, s),
        }
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Algorithm::Exact),
            "quarter" => Ok(Algorithm::Quarter),
            "half" => Ok(Algorithm::Half),
            other => Err(format!("unknown algorithm {other:?}")),
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Re-scores each square against `t` and keeps the heaviest; ties go to the
/// earliest candidate.
pub(crate) fn best_rescored<S: Scalar>(
    t: &EdgeSet<S>,
    candidates: impl IntoIterator<Item = Placement<S>>,
) -> Placement<S> {
    let mut best: Option<Placement<S>> = None;
    for mut p in candidates {
        p.weight = square_weight(t, &p.x, &p.y, &p.side);
        if best
            .as_ref()
            .is_none_or(|b| p.weight.decide_cmp(&b.weight) == Ordering::Greater)
        {
            best = Some(p);
        }
    }
    best.expect("at least one candidate")
}
