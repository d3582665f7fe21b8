//! Coverage and dispersion of sampled difficult pairs, and reduction
//! profiles of uniformly random pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dps::{dps_sample_with, MIN_SIZE};
use crate::enumeration::{enumerate_difficult_pairs, PAIR_GUARD};
use crate::error::{Error, Result};
use crate::growth::remy_sample;
use crate::rng::Rng;
use crate::rotation::{reduce, TreePair};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub n: usize,
    pub samples: usize,
    pub distinct_seen: usize,
    /// Number of ordered difficult pairs of size `n`, when enumerable.
    pub universe: Option<usize>,
    #[serde(serialize_with = "frequency_list")]
    pub frequencies: BTreeMap<TreePair, usize>,
    /// Third over first quartile of the per-pair counts (nearest rank).
    pub q3_q1_ratio: Option<f64>,
    /// Most over least frequent count.
    pub max_min_ratio: Option<f64>,
}

#[derive(Serialize)]
struct FrequencyRecord<'a> {
    s: String,
    t: String,
    count: &'a usize,
}

fn frequency_list<S: serde::Serializer>(
    map: &BTreeMap<TreePair, usize>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(map.iter().map(|(p, count)| FrequencyRecord {
        s: p.s.to_string(),
        t: p.t.to_string(),
        count,
    }))
}

impl CoverageReport {
    pub fn coverage(&self) -> Option<f64> {
        self.universe.map(|u| {
            if u == 0 {
                0.0
            } else {
                self.distinct_seen as f64 / u as f64
            }
        })
    }

    /// `key = value` lines; frequencies are not included.
    pub fn to_text(&self) -> String {
        let opt = |v: Option<f64>| v.map_or_else(|| "none".to_string(), |x| format!("{x:.6}"));
        let mut out = String::new();
        let _ = writeln!(out, "n = {}", self.n);
        let _ = writeln!(out, "samples = {}", self.samples);
        let _ = writeln!(out, "distinct_seen = {}", self.distinct_seen);
        let _ = writeln!(
            out,
            "universe = {}",
            self.universe
                .map_or_else(|| "unknown".to_string(), |u| u.to_string())
        );
        let _ = writeln!(out, "coverage = {}", opt(self.coverage()));
        let _ = writeln!(out, "q3_q1_ratio = {}", opt(self.q3_q1_ratio));
        let _ = writeln!(out, "max_min_ratio = {}", opt(self.max_min_ratio));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Nearest-rank percentile of ascending `sorted`, `p` in `(0, 1]`.
fn nearest_rank(sorted: &[usize], p: f64) -> usize {
    let rank = (p * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

/// Tallies `samples` independent DPS draws of size `n`. Each draw is seeded
/// from `rng`, so the report depends only on `(n, samples, rng state)`.
pub fn coverage_report(n: usize, samples: usize, rng: &mut Rng) -> Result<CoverageReport> {
    if n < MIN_SIZE {
        return Err(Error::SizeTooSmall(n));
    }
    let seeds: Vec<u64> = (0..samples).map(|_| rng.next_u64()).collect();
    let pairs: Vec<TreePair> = seeds
        .par_iter()
        .map(|&seed| {
            dps_sample_with(n, &mut Rng::new(seed))
                .map(|(p, _)| p)
                .expect("size checked")
        })
        .collect();
    let mut frequencies = BTreeMap::new();
    for p in pairs {
        *frequencies.entry(p).or_insert(0) += 1;
    }
    let universe = if n <= PAIR_GUARD {
        Some(enumerate_difficult_pairs(n)?.len())
    } else {
        None
    };

    let mut counts: Vec<usize> = frequencies.values().copied().collect();
    counts.sort_unstable();
    let (q3_q1_ratio, max_min_ratio) = if counts.is_empty() {
        (None, None)
    } else {
        let q1 = nearest_rank(&counts, 0.25);
        let q3 = nearest_rank(&counts, 0.75);
        (
            Some(q3 as f64 / q1 as f64),
            Some(counts[counts.len() - 1] as f64 / counts[0] as f64),
        )
    };
    Ok(CoverageReport {
        n,
        samples,
        distinct_seen: frequencies.len(),
        universe,
        frequencies,
        q3_q1_ratio,
        max_min_ratio,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionProfile {
    pub n: usize,
    pub samples: usize,
    /// Mean of (largest difficult component size) / n.
    pub mean_largest_fraction: f64,
    pub mean_forced_moves: f64,
    /// Fraction of pairs reduced to nothing.
    pub resolved_fraction: f64,
    /// Sizes of every component produced, across all samples.
    pub component_sizes: BTreeMap<usize, usize>,
}

impl ReductionProfile {
    pub fn from_pairs<'a>(n: usize, pairs: impl IntoIterator<Item = &'a TreePair>) -> Self {
        let mut samples = 0;
        let mut fraction_sum = 0.0;
        let mut forced_sum = 0;
        let mut resolved = 0;
        let mut component_sizes = BTreeMap::new();
        for pair in pairs {
            let r = reduce(pair);
            samples += 1;
            fraction_sum += r.largest_component() as f64 / n as f64;
            forced_sum += r.forced_moves;
            if r.components.is_empty() {
                resolved += 1;
            }
            for c in &r.components {
                *component_sizes.entry(c.size()).or_insert(0) += 1;
            }
        }
        let mean = |x: f64| {
            if samples == 0 {
                0.0
            } else {
                x / samples as f64
            }
        };
        ReductionProfile {
            n,
            samples,
            mean_largest_fraction: mean(fraction_sum),
            mean_forced_moves: mean(forced_sum as f64),
            resolved_fraction: mean(resolved as f64),
            component_sizes,
        }
    }
}

/// Reduces `samples` pairs of independent uniform random trees of size `n`.
pub fn reduction_profile(n: usize, samples: usize, rng: &mut Rng) -> Result<ReductionProfile> {
    if n < MIN_SIZE {
        return Err(Error::SizeTooSmall(n));
    }
    let pairs: Vec<TreePair> = (0..samples)
        .map(|_| {
            let s = remy_sample(n, rng);
            let t = remy_sample(n, rng);
            TreePair::new_unchecked(s, t)
        })
        .collect();
    Ok(ReductionProfile::from_pairs(n, &pairs))
}
