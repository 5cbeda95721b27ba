//! Records of cluster variables for general `b`, collected as evidence on
//! positivity. Nothing here asserts positivity for `b > 2`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cluster::ClusterContext;
use crate::error::Result;
use crate::laurent::DimVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreRecord {
    pub b: u32,
    pub m: i64,
    pub denominator: DimVector,
    pub terms: usize,
    pub min_coeff: String,
    pub max_coeff: String,
    pub positive: bool,
    pub time_ms: u64,
}

impl ExploreRecord {
    pub const CSV_HEADER: &'static str = "b,m,d1,d2,terms,min_coeff,max_coeff,positive,time_ms";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.b,
            self.m,
            self.denominator.d1,
            self.denominator.d2,
            self.terms,
            self.min_coeff,
            self.max_coeff,
            self.positive,
            self.time_ms
        )
    }
}

/// Computes `x_m` and summarizes it. The time covers whatever recursion
/// steps the context still had to run.
pub fn explore_one(ctx: &ClusterContext, m: i64) -> Result<ExploreRecord> {
    let start = Instant::now();
    let x = ctx.cluster_var(m)?;
    let elapsed = start.elapsed();
    Ok(ExploreRecord {
        b: ctx.b(),
        m,
        denominator: x.denominator_vector()?,
        terms: x.len(),
        min_coeff: x.min_coeff().map(ToString::to_string).unwrap_or_default(),
        max_coeff: x.max_coeff().map(ToString::to_string).unwrap_or_default(),
        positive: x.is_positive(),
        time_ms: elapsed.as_millis() as u64,
    })
}

/// Visits `m_min..=m_max` in increasing order, passing each record to `sink`.
/// Stops at the first error, or when `sink` returns `false`.
pub fn explore_range(
    ctx: &ClusterContext,
    m_min: i64,
    m_max: i64,
    mut sink: impl FnMut(ExploreRecord) -> bool,
) -> Result<()> {
    for m in m_min..=m_max {
        if !sink(explore_one(ctx, m)?) {
            break;
        }
    }
    Ok(())
}

/// How far the recursion got from the initial cluster in each direction
/// before a budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frontier {
    pub b: u32,
    /// Smallest `m <= 0` reached.
    pub low: i64,
    /// Largest `m >= 3` reached.
    pub high: i64,
    pub records: Vec<ExploreRecord>,
    /// Reason the sweep stopped early, if it did.
    pub stopped: Option<String>,
}

/// Explores outward from the initial cluster towards `[m_min, m_max]`,
/// alternating directions, until both ends are reached, a step fails or
/// `budget` is exhausted. A step already running is not interrupted, so
/// contexts should carry a work limit.
pub fn explore_outward(ctx: &ClusterContext, m_min: i64, m_max: i64, budget: Duration) -> Frontier {
    let start = Instant::now();
    let mut low = 1;
    let mut high = 2;
    let mut records = Vec::new();
    let mut stopped = None;
    let (mut low_done, mut high_done) = (m_min >= 1, m_max <= 2);
    while !(low_done && high_done) {
        if start.elapsed() > budget {
            stopped = Some(format!("time budget of {} ms exhausted", budget.as_millis()));
            break;
        }
        let up = !high_done && (low_done || high - 2 <= 1 - low);
        let m = if up { high + 1 } else { low - 1 };
        match explore_one(ctx, m) {
            Ok(rec) => {
                records.push(rec);
                if up {
                    high = m;
                    high_done = high >= m_max;
                } else {
                    low = m;
                    low_done = low <= m_min;
                }
            }
            Err(e) => {
                stopped = Some(format!("m = {m}: {e}"));
                break;
            }
        }
    }
    records.sort_by_key(|r| r.m);
    Frontier {
        b: ctx.b(),
        low,
        high,
        records,
        stopped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_small_range() {
        let ctx = ClusterContext::new(3).unwrap();
        let mut out = Vec::new();
        explore_range(&ctx, 3, 8, |r| {
            out.push(r);
            true
        })
        .unwrap();
        assert_eq!(out.len(), 6);
        assert!(out.iter().all(|r| r.positive));
        assert_eq!(out[0].denominator, DimVector::new(1, 0));
        assert_eq!(
            out[0].csv_row().split(',').count(),
            ExploreRecord::CSV_HEADER.split(',').count()
        );
    }

    #[test]
    fn empty_range() {
        let ctx = ClusterContext::new(2).unwrap();
        let mut n = 0;
        explore_range(&ctx, 5, 4, |_| {
            n += 1;
            true
        })
        .unwrap();
        assert_eq!(n, 0);
    }

    #[test]
    fn outward_sweep_reaches_both_ends() {
        let ctx = ClusterContext::new(2).unwrap();
        let f = explore_outward(&ctx, -6, 9, Duration::from_secs(60));
        assert_eq!((f.low, f.high), (-6, 9));
        assert!(f.stopped.is_none());
        assert_eq!(f.records.len(), 16 - 2);
        assert!(f.records.windows(2).all(|w| w[0].m < w[1].m));
    }

    #[test]
    fn outward_sweep_reports_work_limit() {
        let ctx = ClusterContext::new(4).unwrap().with_work_limit(10_000);
        let f = explore_outward(&ctx, -12, 15, Duration::from_secs(60));
        assert!(f.stopped.as_deref().unwrap().contains("limit"));
        assert!(f.high < 15);
    }
}
