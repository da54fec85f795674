//! Runtime scaling measurements on seeded random walks in float mode.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::algo::Algorithm;
use crate::error::Result;
use crate::gen::gen_walk;
use crate::model::{Dim, EdgeSet};

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algos: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub reps: usize,
    pub side: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algos: vec![Algorithm::Quarter, Algorithm::Half],
            sizes: vec![1000, 2000, 4000, 8000],
            seed: 1,
            reps: 3,
            side: 10.0,
        }
    }
}

/// One timed run; field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub algo: Algorithm,
    pub n: usize,
    pub rep: usize,
    pub runtime_ns: u64,
    pub events: u64,
    pub winner_changes: u64,
    pub stale_events: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingSummary {
    pub algo: Algorithm,
    pub n: usize,
    pub median_ns: u64,
    /// `T(n) / T(n_prev)` for the previous size of this algorithm.
    pub ratio: Option<f64>,
}

/// Times `algo` once on `t`.
pub fn run_cell(algo: Algorithm, t: &EdgeSet<f64>, rep: usize, side: f64) -> Result<BenchRow> {
    let start = Instant::now();
    let (_, stats) = algo.run_2d(t, &side)?;
    let runtime_ns = start.elapsed().as_nanos() as u64;
    Ok(BenchRow {
        algo,
        n: t.len(),
        rep,
        runtime_ns,
        events: stats.events,
        winner_changes: stats.winner_changes,
        stale_events: stats.stale_events,
    })
}

/// Every repetition of a cell times the same walk, seeded by `config.seed`.
/// One untimed pass over all cells warms the allocator and caches, then the
/// timed repetitions are interleaved across cells so that slow periods of a
/// busy machine are spread over all sizes. Rows come back ordered by cell.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let instances: Vec<EdgeSet<f64>> = config
        .sizes
        .iter()
        .map(|&n| gen_walk::<f64>(n, config.seed, Dim::Two))
        .collect();
    for &algo in &config.algos {
        for t in &instances {
            run_cell(algo, t, 0, config.side)?;
        }
    }
    let mut rows = Vec::new();
    for rep in 0..config.reps.max(1) {
        for (a, &algo) in config.algos.iter().enumerate() {
            for (k, t) in instances.iter().enumerate() {
                rows.push(((a, k), run_cell(algo, t, rep, config.side)?));
            }
        }
    }
    rows.sort_by_key(|((a, k), row)| (*a, *k, row.rep));
    Ok(rows.into_iter().map(|(_, row)| row).collect())
}

pub fn median(values: &mut [u64]) -> u64 {
    values.sort_unstable();
    let m = values.len() / 2;
    if values.len() % 2 == 1 {
        values[m]
    } else {
        (values[m - 1] + values[m]) / 2
    }
}

/// Median runtime per (algo, n) and the ratio to the next smaller size.
pub fn summarize(rows: &[BenchRow]) -> Vec<ScalingSummary> {
    let mut cells: BTreeMap<(String, usize), (Algorithm, Vec<u64>)> = BTreeMap::new();
    for r in rows {
        cells
            .entry((r.algo.name().to_string(), r.n))
            .or_insert_with(|| (r.algo, Vec::new()))
            .1
            .push(r.runtime_ns);
    }
    let mut out: Vec<ScalingSummary> = Vec::new();
    for ((_, n), (algo, mut times)) in cells {
        let median_ns = median(&mut times);
        let ratio = out
            .last()
            .filter(|prev| prev.algo == algo)
            .map(|prev| median_ns as f64 / prev.median_ns.max(1) as f64);
        out.push(ScalingSummary {
            algo,
            n,
            median_ns,
            ratio,
        });
    }
    out
}

pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn render_summary(summary: &[ScalingSummary]) -> String {
    let mut s = String::from("algo,n,median_ns,doubling_ratio\n");
    for row in summary {
        let ratio = row.ratio.map(|r| format!("{r:.3}")).unwrap_or_default();
        s.push_str(&format!("{},{},{},{}\n", row.algo, row.n, row.median_ns, ratio));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(&mut [5, 1, 3]), 3);
        assert_eq!(median(&mut [4, 1, 3, 2]), 2);
    }

    #[test]
    fn csv_has_expected_columns() {
        let config = BenchConfig {
            algos: vec![Algorithm::Half],
            sizes: vec![50, 100],
            seed: 3,
            reps: 2,
            side: 10.0,
        };
        let rows = run_bench(&config).unwrap();
        assert_eq!(rows.len(), 4);
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("algo,n,rep,runtime_ns,events,winner_changes,stale_events\nhalf,50,0,"));
        let summary = summarize(&rows);
        assert_eq!(summary.len(), 2);
        assert!(summary[0].ratio.is_none() && summary[1].ratio.is_some());
    }
}
