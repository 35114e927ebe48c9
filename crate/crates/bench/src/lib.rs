//! Scaling harness: times the linear k-red construction against the
//! exchange method and records operation counts alongside wall time.
//!
//! Each size gets one seeded instance. Every trial re-runs the construction
//! on it; the reported time is the median over trials. Trees are checked
//! with `verify_tree` before any row is recorded.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use kred_core::io::{verify_tree, TreeDefect};
use kred_core::oracle::exchange_construct_counted;
use kred_core::{
    construct_k_red_counted, feasible_interval, gen_random, FeasibleInterval, OpCounter,
};
use serde::Serialize;
use thiserror::Error;

/// Largest `n` for which the quadratic exchange method runs by default.
pub const DEFAULT_EXCHANGE_CAP: usize = 20_000;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Core(#[from] kred_core::Error),
    #[error("{algo} produced an invalid tree for n={n}, m={m}, k={k}: {defect}")]
    Unverified {
        algo: Algo,
        n: usize,
        m: usize,
        k: usize,
        defect: TreeDefect,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KRule {
    Midpoint,
    KMin,
    KMax,
}

impl KRule {
    pub fn pick(self, iv: FeasibleInterval) -> usize {
        match self {
            KRule::Midpoint => iv.midpoint(),
            KRule::KMin => iv.k_min,
            KRule::KMax => iv.k_max,
        }
    }
}

impl FromStr for KRule {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mid" | "midpoint" => Ok(KRule::Midpoint),
            "min" => Ok(KRule::KMin),
            "max" => Ok(KRule::KMax),
            other => Err(BenchError::BadParams(format!(
                "k rule must be mid, min or max, got {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Linear,
    Exchange,
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algo::Linear => "linear",
            Algo::Exchange => "exchange",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// `(n, m)` pairs, nondecreasing in both coordinates.
    pub sizes: Vec<(usize, usize)>,
    pub red_prob: f64,
    pub k_rule: KRule,
    pub trials: usize,
    pub seed: u64,
    pub exchange_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![(1_000, 10_000), (10_000, 100_000), (100_000, 1_000_000)],
            red_prob: 0.5,
            k_rule: KRule::Midpoint,
            trials: 3,
            seed: 1,
            exchange_cap: DEFAULT_EXCHANGE_CAP,
        }
    }
}

/// One CSV row; field order is the column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub algo: Algo,
    pub n: usize,
    pub m: usize,
    pub red_prob: f64,
    pub k: usize,
    pub time_ns: u64,
    pub ops: u64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// Header `algo,n,m,red_prob,k,time_ns,ops`, then one line per row.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), BenchError> {
        let mut out = csv::Writer::from_writer(w);
        for row in &self.rows {
            out.serialize(row)?;
        }
        out.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn rows_for(&self, algo: Algo) -> impl Iterator<Item = &BenchRow> {
        self.rows.iter().filter(move |r| r.algo == algo)
    }
}

/// Parses `n:m,n:m,...`.
pub fn parse_sizes(text: &str) -> Result<Vec<(usize, usize)>, BenchError> {
    text.split(',')
        .map(|pair| {
            let bad = || BenchError::BadParams(format!("size {pair:?} is not n:m"));
            let (n, m) = pair.trim().split_once(':').ok_or_else(bad)?;
            Ok((n.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn validate(cfg: &BenchConfig) -> Result<(), BenchError> {
    if cfg.sizes.is_empty() {
        return Err(BenchError::BadParams("no sizes given".into()));
    }
    if cfg.trials == 0 {
        return Err(BenchError::BadParams("trials must be at least 1".into()));
    }
    if cfg
        .sizes
        .windows(2)
        .any(|w| w[1].0 < w[0].0 || w[1].1 < w[0].1)
    {
        return Err(BenchError::BadParams("sizes must be nondecreasing".into()));
    }
    Ok(())
}

fn median(mut xs: Vec<u64>) -> u64 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport, BenchError> {
    validate(cfg)?;
    let mut report = BenchReport::default();
    for (i, &(n, m)) in cfg.sizes.iter().enumerate() {
        let g = gen_random(n, m, cfg.red_prob, cfg.seed.wrapping_add(i as u64))?;
        let k = cfg.k_rule.pick(feasible_interval(&g)?);
        let mut algos = vec![Algo::Linear];
        if n <= cfg.exchange_cap {
            algos.push(Algo::Exchange);
        }
        for algo in algos {
            let mut times = Vec::with_capacity(cfg.trials);
            let mut ops = OpCounter::new();
            for _ in 0..cfg.trials {
                ops = OpCounter::new();
                let start = Instant::now();
                let tree = match algo {
                    Algo::Linear => construct_k_red_counted(&g, k, &mut ops)?,
                    Algo::Exchange => exchange_construct_counted(&g, k, &mut ops)?.0,
                };
                let elapsed = start.elapsed().as_nanos() as u64;
                verify_tree(&g, &tree.edge_ids, k).map_err(|defect| BenchError::Unverified {
                    algo,
                    n,
                    m,
                    k,
                    defect,
                })?;
                times.push(elapsed);
            }
            report.rows.push(BenchRow {
                algo,
                n,
                m,
                red_prob: cfg.red_prob,
                k,
                time_ns: median(times),
                ops: ops.total(),
            });
        }
    }
    Ok(report)
}
