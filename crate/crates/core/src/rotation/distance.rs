use std::collections::HashMap;

use super::{rotation_neighbors, TreePair};
use crate::error::{Error, Result};
use crate::word::TreeWord;

/// Largest size [`exact_distance`] will search by default.
pub const DEFAULT_DISTANCE_GUARD: usize = 12;

/// Rotation distance by bidirectional breadth-first search over the flip graph.
pub fn exact_distance(pair: &TreePair) -> Result<usize> {
    exact_distance_bounded(pair, DEFAULT_DISTANCE_GUARD)
}

pub fn exact_distance_bounded(pair: &TreePair, max_size: usize) -> Result<usize> {
    if pair.size() > max_size {
        return Err(Error::SizeGuardExceeded {
            size: pair.size(),
            max: max_size,
        });
    }
    if pair.s == pair.t {
        return Ok(0);
    }

    let mut forward = Search::new(pair.s.clone());
    let mut backward = Search::new(pair.t.clone());
    loop {
        // Expand the smaller frontier by one full layer; the best meeting
        // found within that layer is a shortest path.
        let (grow, other) = if forward.frontier.len() <= backward.frontier.len() {
            (&mut forward, &backward)
        } else {
            (&mut backward, &forward)
        };
        if let Some(d) = grow.expand(other) {
            return Ok(d);
        }
        // The flip graph is connected, so a search never runs dry first.
        assert!(!grow.frontier.is_empty(), "flip graph search exhausted");
    }
}

struct Search {
    depth: usize,
    seen: HashMap<TreeWord, usize>,
    frontier: Vec<TreeWord>,
}

impl Search {
    fn new(start: TreeWord) -> Self {
        let mut seen = HashMap::new();
        seen.insert(start.clone(), 0);
        Search {
            depth: 0,
            seen,
            frontier: vec![start],
        }
    }

    fn expand(&mut self, other: &Search) -> Option<usize> {
        self.depth += 1;
        let mut best: Option<usize> = None;
        let mut next = Vec::new();
        for word in std::mem::take(&mut self.frontier) {
            for neighbor in rotation_neighbors(&word) {
                if self.seen.contains_key(&neighbor) {
                    continue;
                }
                if let Some(&d) = other.seen.get(&neighbor) {
                    let total = self.depth + d;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                self.seen.insert(neighbor.clone(), self.depth);
                next.push(neighbor);
            }
        }
        self.frontier = next;
        best
    }
}
