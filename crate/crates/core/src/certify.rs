//! Exhaustive enumeration of `M(f, r; m)` and batch verification.

use rayon::prelude::*;
use serde::Serialize;

use crate::correspondence::{verify_theorem, TheoremReport};
use crate::embedding::EmbeddingDatum;
use crate::error::{Error, Result};

/// Weak compositions of `total` into `parts` parts, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Compositions {
    pub fn new(total: u32, parts: usize) -> Self {
        let current = match parts {
            0 if total == 0 => Some(Vec::new()),
            0 => None,
            n => {
                let mut v = vec![0; n];
                v[n - 1] = total;
                Some(v)
            }
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let n = out.len();
        // bump the last position that still has mass to its right
        let mut suffix = 0u32;
        for i in (0..n.saturating_sub(1)).rev() {
            suffix += out[i + 1];
            if suffix > 0 {
                let mut next = out.clone();
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 0;
                }
                next[n - 1] = suffix - 1;
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every datum of `M(f, r; m)`, lexicographic on the flattened matrix.
pub fn enumerate_data(f: usize, r: usize, m: u32) -> impl Iterator<Item = EmbeddingDatum> {
    Compositions::new(m, f * r)
        .filter_map(move |entries| EmbeddingDatum::new(f, r, m, entries).ok())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `|M(f, r; m)|` by inclusion–exclusion over zero columns.
pub fn count_data(f: usize, r: usize, m: u32) -> u64 {
    let weak = |cells: u64| -> u64 {
        match cells {
            0 => (m == 0) as u64,
            c => binomial(m as u64 + c - 1, c - 1),
        }
    };
    let mut total: i128 = 0;
    for k in 0..=r as u64 {
        let term = (binomial(r as u64, k) * weak(f as u64 * (r as u64 - k))) as i128;
        total += if k % 2 == 0 { term } else { -term };
    }
    total as u64
}

/// Bounds for a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyRange {
    pub f_max: usize,
    pub r_max: usize,
    pub m_max: u32,
    pub fr_max: usize,
    #[serde(skip)]
    pub jobs: usize,
}

impl VerifyRange {
    pub fn new(f_max: usize, r_max: usize, m_max: u32, fr_max: usize, jobs: usize) -> Result<Self> {
        if f_max == 0 || r_max == 0 || m_max == 0 || fr_max == 0 || jobs == 0 {
            return Err(Error::InvalidRange);
        }
        Ok(VerifyRange {
            f_max,
            r_max,
            m_max,
            fr_max,
            jobs,
        })
    }

    /// `(f, r, m)` triples in the range, ordered by `f`, then `r`, then `m`.
    pub fn configurations(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for f in 1..=self.f_max {
            for r in 1..=self.r_max {
                if f * r > self.fr_max {
                    continue;
                }
                for m in 1..=self.m_max {
                    out.push((f, r, m));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigSummary {
    pub f: usize,
    pub r: usize,
    pub m: u32,
    pub count: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub range: VerifyRange,
    pub configurations: Vec<ConfigSummary>,
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<TheoremReport>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

pub struct VerifyOutcome {
    pub summary: VerifySummary,
    /// Every report in enumeration order, when requested.
    pub reports: Option<Vec<TheoremReport>>,
}

/// Runs [`verify_theorem`] on every datum in `range` using `range.jobs`
/// worker threads. Results are reduced in enumeration order, so the summary
/// does not depend on the worker count.
pub fn run_verify(range: &VerifyRange, keep_reports: bool) -> Result<VerifyOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(range.jobs)
        .build()
        .map_err(|_| Error::InvalidRange)?;
    pool.install(|| {
        let mut configurations = Vec::new();
        let mut failures = Vec::new();
        let mut reports = keep_reports.then(Vec::new);
        for (f, r, m) in range.configurations() {
            let data: Vec<EmbeddingDatum> = enumerate_data(f, r, m).collect();
            let batch: Vec<TheoremReport> = data.par_iter().map(verify_theorem).collect();
            let passed = batch.iter().filter(|rep| rep.passed()).count() as u64;
            let count = batch.len() as u64;
            failures.extend(batch.iter().filter(|rep| !rep.passed()).cloned());
            if let Some(all) = reports.as_mut() {
                all.extend(batch);
            }
            configurations.push(ConfigSummary {
                f,
                r,
                m,
                count,
                passed,
                failed: count - passed,
            });
        }
        let total = configurations.iter().map(|c| c.count).sum();
        let passed = configurations.iter().map(|c| c.passed).sum();
        Ok(VerifyOutcome {
            summary: VerifySummary {
                range: *range,
                configurations,
                total,
                passed,
                failed: total - passed,
                failures,
            },
            reports,
        })
    })
}
