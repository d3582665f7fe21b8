//! Difficult pair sampling.
//!
//! Starting from a random primitive pair of size 4, each step replaces the
//! current difficult pair `(S, T)` with a uniformly chosen difficult pair
//! `(U, V)` where `U` is a growth neighbor of `S` and `V` a growth neighbor
//! of `T`. Such a pair always exists: growing both trees left at the parent
//! of their rightmost leaf preserves difficulty.
//!
//! Each step costs `O(n)` per neighbor pair. The intervals and 1-intervals of
//! every neighbor are computed once, in linear time, as flat keys into an
//! `(n + 1) x (n + 1)` table. For each `U` the table flags the intervals and
//! 1-intervals of `U`; each `V` is then checked by scanning its own keys.
//! Candidates are stored as index pairs in a buffer preallocated to
//! `(3n + 1)^2` slots. Over the `n - 4` steps this is `O(n^4)` time.

use crate::enumeration::primitive_pairs;
use crate::error::{Error, Result};
use crate::growth::growth_neighbors;
use crate::rng::Rng;
use crate::rotation::{is_difficult, IntervalTable, TreePair};
use crate::word::TreeWord;

/// Smallest size with difficult pairs.
pub const MIN_SIZE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpsConfig {
    pub n: usize,
    pub seed: u64,
}

impl DpsConfig {
    pub fn new(n: usize, seed: u64) -> Result<Self> {
        if n < MIN_SIZE {
            return Err(Error::SizeTooSmall(n));
        }
        Ok(DpsConfig { n, seed })
    }
}

/// Bookkeeping from one sampling run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DpsTrace {
    pub steps: usize,
    /// Largest candidate list seen in any step.
    pub peak_candidates: usize,
    /// Slots preallocated for candidates.
    pub candidate_capacity: usize,
}

struct Neighbor {
    word: TreeWord,
    intervals: Vec<u32>,
    one_intervals: Vec<u32>,
}

fn profiled_neighbors(word: &TreeWord, table: &IntervalTable) -> Vec<Neighbor> {
    growth_neighbors(word)
        .into_iter()
        .map(|word| {
            let (intervals, one_intervals) = table.keys(&word.layout());
            Neighbor {
                word,
                intervals,
                one_intervals,
            }
        })
        .collect()
}

/// Scratch space for the growth steps of one sampling run.
struct Grower {
    table: IntervalTable,
    candidates: Vec<(u32, u32)>,
    trace: DpsTrace,
}

impl Grower {
    /// Sized for pairs growing up to `max_size`.
    fn new(max_size: usize) -> Self {
        let slots = (3 * max_size + 1).pow(2);
        Grower {
            table: IntervalTable::new(max_size),
            candidates: Vec::with_capacity(slots),
            trace: DpsTrace {
                candidate_capacity: slots,
                ..DpsTrace::default()
            },
        }
    }

    /// Fills `self.candidates` with the difficult neighbor pairs of `pair`.
    fn collect(&mut self, pair: &TreePair) -> (Vec<Neighbor>, Vec<Neighbor>) {
        let us = profiled_neighbors(&pair.s, &self.table);
        let vs = profiled_neighbors(&pair.t, &self.table);
        self.candidates.clear();
        for (i, u) in us.iter().enumerate() {
            self.table.mark_keys(&u.intervals, &u.one_intervals);
            for (j, v) in vs.iter().enumerate() {
                if !self.table.conflicts_keys(&v.intervals, &v.one_intervals) {
                    self.candidates.push((i as u32, j as u32));
                }
            }
            self.table.clear_keys(&u.intervals, &u.one_intervals);
        }
        self.trace.peak_candidates = self.trace.peak_candidates.max(self.candidates.len());
        (us, vs)
    }

    fn step(&mut self, pair: &TreePair, rng: &mut Rng) -> TreePair {
        let (us, vs) = self.collect(pair);
        // The sigma-grown pair is always a candidate.
        assert!(
            !self.candidates.is_empty(),
            "no difficult growth neighbors for difficult pair {pair}"
        );
        let (i, j) = self.candidates[rng.below(self.candidates.len())];
        self.trace.steps += 1;
        TreePair::new_unchecked(us[i as usize].word.clone(), vs[j as usize].word.clone())
    }
}

/// All difficult pairs `(U, V)` with `U` a growth neighbor of `pair.s` and
/// `V` a growth neighbor of `pair.t`, in lexicographic order.
pub fn dps_choices(pair: &TreePair) -> Result<Vec<TreePair>> {
    if !is_difficult(pair) {
        return Err(Error::NotDifficultInput);
    }
    let mut grower = Grower::new(pair.size() + 1);
    let (us, vs) = grower.collect(pair);
    Ok(grower
        .candidates
        .iter()
        .map(|&(i, j)| {
            TreePair::new_unchecked(us[i as usize].word.clone(), vs[j as usize].word.clone())
        })
        .collect())
}

/// A random primitive pair in a random orientation.
fn random_primitive(rng: &mut Rng) -> TreePair {
    let mut primitives = primitive_pairs();
    let pick = primitives.swap_remove(rng.below(primitives.len()));
    if rng.coin() {
        pick.swapped()
    } else {
        pick
    }
}

pub fn dps_sample(cfg: DpsConfig) -> Result<TreePair> {
    dps_sample_traced(cfg).map(|(pair, _)| pair)
}

pub fn dps_sample_traced(cfg: DpsConfig) -> Result<(TreePair, DpsTrace)> {
    let mut rng = Rng::new(cfg.seed);
    dps_sample_with(cfg.n, &mut rng)
}

/// Samples a difficult pair of size `n` drawing from a caller-owned `rng`.
pub fn dps_sample_with(n: usize, rng: &mut Rng) -> Result<(TreePair, DpsTrace)> {
    if n < MIN_SIZE {
        return Err(Error::SizeTooSmall(n));
    }
    let mut grower = Grower::new(n);
    let mut pair = random_primitive(rng);
    while pair.size() < n {
        pair = grower.step(&pair, rng);
    }
    Ok((pair, grower.trace))
}
