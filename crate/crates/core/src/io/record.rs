use serde::{Deserialize, Serialize};

use crate::algo::{Algorithm, SweepStats};
use crate::error::{HotspotError, Result};
use crate::model::{Dim, Placement};
use crate::scalar::Scalar;

pub const RECORD_VERSION: u32 = 1;

/// One hotspot result, serialized as a single JSON object. Coordinates and
/// the weight are exact strings in exact mode; `weight_decimal` is always a
/// float rendering for humans.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub version: u32,
    pub algo: Algorithm,
    pub mode: String,
    pub dim: usize,
    pub side: String,
    pub x: String,
    pub y: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    pub weight: String,
    pub weight_decimal: f64,
    pub events: u64,
    pub updates: u64,
    pub failures: u64,
    pub stale_events: u64,
    pub winner_changes: u64,
    pub runtime_ns: u64,
}

impl ResultRecord {
    pub fn new<S: Scalar>(
        algo: Algorithm,
        placement: &Placement<S>,
        stats: SweepStats,
        runtime_ns: u64,
    ) -> Self {
        ResultRecord {
            version: RECORD_VERSION,
            algo,
            mode: if S::EXACT { "exact" } else { "float" }.into(),
            dim: if placement.z.is_some() { 3 } else { 2 },
            side: placement.side.to_exact_string(),
            x: placement.x.to_exact_string(),
            y: placement.y.to_exact_string(),
            z: placement.z.as_ref().map(Scalar::to_exact_string),
            weight: placement.weight.to_exact_string(),
            weight_decimal: placement.weight.to_f64(),
            events: stats.events,
            updates: stats.updates,
            failures: stats.failures,
            stale_events: stats.stale_events,
            winner_changes: stats.winner_changes,
            runtime_ns,
        }
    }

    pub fn dim(&self) -> Option<Dim> {
        Dim::from_count(self.dim)
    }

    pub fn placement<S: Scalar>(&self) -> Result<Placement<S>> {
        let num = |v: &str| S::parse(v).map_err(|_| HotspotError::InvalidNumber(v.to_string()));
        Ok(Placement {
            x: num(&self.x)?,
            y: num(&self.y)?,
            z: self.z.as_deref().map(num).transpose()?,
            side: num(&self.side)?,
            weight: num(&self.weight)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text.trim()).map_err(|e| HotspotError::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}
