use super::{common_intervals, one_off_moves, rotate, split_at_common, Side, TreePair};

/// Outcome of exhausting the reduction rules on a pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionResult {
    /// One-off rotations applied; each lies on some shortest path.
    pub forced_moves: usize,
    /// Remaining difficult pairs, in the order they were isolated.
    pub components: Vec<TreePair>,
}

impl ReductionResult {
    pub fn largest_component(&self) -> usize {
        self.components
            .iter()
            .map(TreePair::size)
            .max()
            .unwrap_or(0)
    }
}

/// Splits at common intervals (smallest first) and applies one-off moves
/// until only difficult pairs remain.
///
/// Splits take precedence over one-off moves, so the result is deterministic;
/// the rotation distance of the input equals `forced_moves` plus the sum of
/// the component distances.
pub fn reduce(pair: &TreePair) -> ReductionResult {
    let mut result = ReductionResult::default();
    let mut pending = vec![pair.clone()];
    while let Some(current) = pending.pop() {
        if current.s == current.t {
            continue;
        }
        if let Some(&common) = common_intervals(&current).first() {
            let (inner, outer) = split_at_common(&current, common).expect("interval is common");
            pending.push(outer);
            pending.push(inner);
            continue;
        }
        if let Some(step) = one_off_moves(&current).first() {
            let rotated =
                rotate(current.tree(step.side), step.node).expect("non-root internal node");
            let next = match step.side {
                Side::S => TreePair::new_unchecked(rotated, current.t),
                Side::T => TreePair::new_unchecked(current.s, rotated),
            };
            result.forced_moves += 1;
            pending.push(next);
            continue;
        }
        result.components.push(current);
    }
    result
}
