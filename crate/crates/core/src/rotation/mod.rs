//! Rotations, the common-interval and one-off reduction rules, and the
//! difficulty predicate on tree pairs.
//!
//! Intervals correspond to diagonals of the associated polygon triangulation.
//! The root interval `(0, n)` is the polygon boundary and is present in every
//! tree of size `n`, so it never counts as a common interval and never
//! witnesses a one-off move.

mod distance;
mod reduce;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Interval, IntervalSet, Layout, NodeRef, TreeWord};

pub use distance::{exact_distance, exact_distance_bounded, DEFAULT_DISTANCE_GUARD};
pub use reduce::{reduce, ReductionResult};

/// An ordered pair of trees of the same size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TreePair {
    pub s: TreeWord,
    pub t: TreeWord,
}

impl TreePair {
    pub fn new(s: TreeWord, t: TreeWord) -> Result<Self> {
        if s.size() != t.size() {
            return Err(Error::SizeMismatch {
                left: s.size(),
                right: t.size(),
            });
        }
        Ok(TreePair { s, t })
    }

    pub(crate) fn new_unchecked(s: TreeWord, t: TreeWord) -> Self {
        debug_assert_eq!(s.size(), t.size());
        TreePair { s, t }
    }

    /// Parses the pair text format: two words separated by a space.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(s), Some(t), None) => TreePair::new(s.parse()?, t.parse()?),
            _ => Err(Error::MalformedPair(text.to_string())),
        }
    }

    pub fn size(&self) -> usize {
        self.s.size()
    }

    pub fn swapped(&self) -> TreePair {
        TreePair::new_unchecked(self.t.clone(), self.s.clone())
    }

    pub fn tree(&self, side: Side) -> &TreeWord {
        match side {
            Side::S => &self.s,
            Side::T => &self.t,
        }
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.s, self.t)
    }
}

impl FromStr for TreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TreePair::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    S,
    T,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::S => Side::T,
            Side::T => Side::S,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::S => "S",
            Side::T => "T",
        })
    }
}

/// A rotation in one tree of a pair whose 1-interval is a non-root interval
/// of the other tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneOffMove {
    pub side: Side,
    pub node: NodeRef,
    pub created: Interval,
}

impl fmt::Display for OneOffMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})->{}", self.side, self.node, self.created)
    }
}

/// Rotates at `node`, promoting it to its parent's position.
pub fn rotate(word: &TreeWord, node: NodeRef) -> Result<TreeWord> {
    word.check(node)?;
    let layout = word.layout();
    rotate_with(word, &layout, node)
}

pub(crate) fn rotate_with(word: &TreeWord, layout: &Layout, node: NodeRef) -> Result<TreeWord> {
    if !layout.is_internal(node) {
        return Err(Error::NotInternal(node.0));
    }
    let parent = layout.parent(node).ok_or(Error::NoParent(node.0))?;
    let sym = word.symbols();
    let p = parent.0;
    let p_end = layout.end(parent);
    let mut out = Vec::with_capacity(sym.len());
    out.extend_from_slice(&sym[..p]);
    if layout.is_left_child(node) {
        // p(v(A, B), C)  ->  v(A, p(B, C))
        let a_end = layout.end(NodeRef(node.0 + 1));
        out.push(true);
        out.extend_from_slice(&sym[node.0 + 1..a_end]);
        out.push(true);
        out.extend_from_slice(&sym[a_end..p_end]);
    } else {
        // p(A, v(B, C))  ->  v(p(A, B), C)
        out.push(true);
        out.push(true);
        out.extend_from_slice(&sym[p + 1..node.0]);
        out.extend_from_slice(&sym[node.0 + 1..p_end]);
    }
    out.extend_from_slice(&sym[p_end..]);
    Ok(TreeWord::from_symbols_unchecked(out))
}

/// All trees one rotation away, in word order of the rotated node.
pub fn rotation_neighbors(word: &TreeWord) -> Vec<TreeWord> {
    let layout = word.layout();
    layout
        .internal_nodes()
        .skip(1)
        .map(|node| rotate_with(word, &layout, node).expect("non-root internal node"))
        .collect()
}

pub fn common_intervals(pair: &TreePair) -> IntervalSet {
    let s = pair.s.intervals(false);
    let t = pair.t.intervals(false);
    s.intersection(&t).copied().collect()
}

/// One-off moves of the pair, tree `S` first, each side in word order.
pub fn one_off_moves(pair: &TreePair) -> Vec<OneOffMove> {
    let mut moves = Vec::new();
    for side in [Side::S, Side::T] {
        let here = pair.tree(side).layout();
        let there = pair.tree(side.other()).intervals(false);
        for node in here.internal_nodes().skip(1) {
            let created = here.one_interval(node).expect("non-root internal node");
            if there.contains(&created) {
                moves.push(OneOffMove {
                    side,
                    node,
                    created,
                });
            }
        }
    }
    moves
}

/// Reason a pair is not difficult.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// Both trees are the same; the distance is zero.
    Identical,
    Common(Interval),
    OneOff(OneOffMove),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Identical => f.write_str("identical"),
            Witness::Common(c) => write!(f, "common {c}"),
            Witness::OneOff(m) => write!(f, "one-off {m}"),
        }
    }
}

/// The first obstruction to difficulty: identity, then the smallest common
/// interval, then the first one-off move.
pub fn difficulty_witness(pair: &TreePair) -> Option<Witness> {
    if pair.s == pair.t {
        return Some(Witness::Identical);
    }
    if let Some(&c) = common_intervals(pair).first() {
        return Some(Witness::Common(c));
    }
    one_off_moves(pair).first().map(|&m| Witness::OneOff(m))
}

/// True when the trees differ and share no non-root interval, and no single
/// rotation in either tree creates a non-root interval of the other.
pub fn is_difficult(pair: &TreePair) -> bool {
    if pair.s == pair.t || pair.s.size() != pair.t.size() {
        return false;
    }
    let n = pair.size();
    let s = pair.s.layout();
    let t = pair.t.layout();
    let mut table = IntervalTable::new(n);
    table.mark(&s);
    !table.conflicts(&t)
}

const AS_INTERVAL: u8 = 1;
const AS_ONE_INTERVAL: u8 = 2;

/// Flags over the `(n + 1)^2` possible intervals of one tree, for linear-time
/// difficulty checks against another tree.
pub(crate) struct IntervalTable {
    width: usize,
    flags: Vec<u8>,
}

impl IntervalTable {
    pub(crate) fn new(n: usize) -> Self {
        let width = n + 1;
        IntervalTable {
            width,
            flags: vec![0; width * width],
        }
    }

    pub(crate) fn key(&self, interval: Interval) -> usize {
        interval.lower * self.width + interval.upper
    }

    pub(crate) fn mark_keys(&mut self, intervals: &[u32], one_intervals: &[u32]) {
        for &k in intervals {
            self.flags[k as usize] |= AS_INTERVAL;
        }
        for &k in one_intervals {
            self.flags[k as usize] |= AS_ONE_INTERVAL;
        }
    }

    pub(crate) fn clear_keys(&mut self, intervals: &[u32], one_intervals: &[u32]) {
        for &k in intervals.iter().chain(one_intervals) {
            self.flags[k as usize] = 0;
        }
    }

    /// Whether another tree, given by its non-root interval keys and 1-interval
    /// keys, shares an interval or a one-off with the marked tree.
    pub(crate) fn conflicts_keys(&self, intervals: &[u32], one_intervals: &[u32]) -> bool {
        intervals.iter().any(|&k| self.flags[k as usize] != 0)
            || one_intervals
                .iter()
                .any(|&k| self.flags[k as usize] & AS_INTERVAL != 0)
    }

    fn mark(&mut self, layout: &Layout) {
        let (iv, one) = self.keys(layout);
        self.mark_keys(&iv, &one);
    }

    fn conflicts(&self, layout: &Layout) -> bool {
        let (iv, one) = self.keys(layout);
        self.conflicts_keys(&iv, &one)
    }

    /// Non-root interval keys and 1-interval keys of a tree.
    pub(crate) fn keys(&self, layout: &Layout) -> (Vec<u32>, Vec<u32>) {
        let iv = layout
            .intervals(false)
            .map(|i| self.key(i) as u32)
            .collect();
        let one = layout.one_intervals().map(|i| self.key(i) as u32).collect();
        (iv, one)
    }
}

/// Splits a pair at a common interval into the pair of subtrees spanning it
/// and the pair of quotient trees with that subtree collapsed to a leaf.
pub fn split_at_common(pair: &TreePair, common: Interval) -> Result<(TreePair, TreePair)> {
    let n = pair.size();
    if common.upper - common.lower == n {
        return Err(Error::NotCommon(common));
    }
    let s = split_one(&pair.s, common)?;
    let t = split_one(&pair.t, common)?;
    Ok((
        TreePair::new_unchecked(s.0, t.0),
        TreePair::new_unchecked(s.1, t.1),
    ))
}

fn split_one(word: &TreeWord, common: Interval) -> Result<(TreeWord, TreeWord)> {
    let layout = word.layout();
    let node = layout
        .find_interval(common)
        .ok_or(Error::NotCommon(common))?;
    let sym = word.symbols();
    let end = layout.end(node);
    let inner = sym[node.0..end].to_vec();
    let mut outer = Vec::with_capacity(sym.len() - inner.len() + 1);
    outer.extend_from_slice(&sym[..node.0]);
    outer.push(false);
    outer.extend_from_slice(&sym[end..]);
    Ok((
        TreeWord::from_symbols_unchecked(inner),
        TreeWord::from_symbols_unchecked(outer),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TreeWord {
        s.parse().unwrap()
    }

    fn pair(s: &str, t: &str) -> TreePair {
        TreePair::new(w(s), w(t)).unwrap()
    }

    fn set(items: &[(usize, usize)]) -> IntervalSet {
        items.iter().map(|&p| p.into()).collect()
    }

    const PRIMITIVE: (&str, &str) = ("101011000", "111010000");

    #[test]
    fn rotate_examples() {
        assert_eq!(rotate(&w("1010100"), NodeRef(2)), Ok(w("1100100")));
        assert_eq!(rotate(&w("11000"), NodeRef(1)), Ok(w("10100")));
        assert_eq!(rotate(&w("100"), NodeRef(0)), Err(Error::NoParent(0)));
        assert_eq!(rotate(&w("100"), NodeRef(1)), Err(Error::NotInternal(1)));
    }

    #[test]
    fn neighbor_examples() {
        assert!(rotation_neighbors(&w("100")).is_empty());
        assert_eq!(rotation_neighbors(&w("11000")), vec![w("10100")]);
        let mut got = rotation_neighbors(&w("1100100"));
        got.sort();
        assert_eq!(got, vec![w("1010100"), w("1110000")]);
    }

    #[test]
    fn common_interval_examples() {
        let t = w("1100100");
        assert_eq!(
            common_intervals(&TreePair::new(t.clone(), t).unwrap()),
            set(&[(0, 1), (2, 3)])
        );
        assert!(common_intervals(&pair("11000", "10100")).is_empty());
        assert_eq!(
            common_intervals(&pair("1100100", "1110000")),
            set(&[(0, 1)])
        );
    }

    #[test]
    fn one_off_examples() {
        assert_eq!(
            one_off_moves(&pair("11000", "10100")),
            vec![
                OneOffMove {
                    side: Side::S,
                    node: NodeRef(1),
                    created: Interval::new(1, 2)
                },
                OneOffMove {
                    side: Side::T,
                    node: NodeRef(2),
                    created: Interval::new(0, 1)
                },
            ]
        );
        assert!(one_off_moves(&pair(PRIMITIVE.0, PRIMITIVE.1)).is_empty());
        assert!(one_off_moves(&pair("100", "100")).is_empty());
    }

    #[test]
    fn difficulty_examples() {
        assert!(!is_difficult(&pair("11000", "10100")));
        assert!(!is_difficult(&pair("1100100", "1100100")));
        assert!(!is_difficult(&pair("100", "100")));
        assert!(is_difficult(&pair(PRIMITIVE.0, PRIMITIVE.1)));
        assert!(is_difficult(&pair(PRIMITIVE.1, PRIMITIVE.0)));
    }

    #[test]
    fn witness_matches_predicate() {
        assert_eq!(
            difficulty_witness(&pair("11000", "10100"))
                .unwrap()
                .to_string(),
            "one-off (S,@1)->(1,2)"
        );
        assert_eq!(
            difficulty_witness(&pair("1100100", "1110000")),
            Some(Witness::Common(Interval::new(0, 1)))
        );
        assert_eq!(
            difficulty_witness(&pair("100", "100")),
            Some(Witness::Identical)
        );
        assert_eq!(difficulty_witness(&pair(PRIMITIVE.0, PRIMITIVE.1)), None);
    }

    #[test]
    fn split_examples() {
        let (inner, outer) = split_at_common(&pair("1100100", "1110000"), (0, 1).into()).unwrap();
        assert_eq!(inner, pair("100", "100"));
        assert_eq!(outer, pair("10100", "11000"));

        let same = pair("1100100", "1100100");
        let (inner, outer) = split_at_common(&same, (2, 3).into()).unwrap();
        assert_eq!(inner.s, inner.t);
        assert_eq!(outer.s, outer.t);
        assert_eq!(inner.size() + outer.size(), 3);

        assert_eq!(
            split_at_common(&pair("11000", "10100"), (0, 1).into()),
            Err(Error::NotCommon(Interval::new(0, 1)))
        );
        assert_eq!(
            split_at_common(&same, (0, 3).into()),
            Err(Error::NotCommon(Interval::new(0, 3)))
        );
    }

    #[test]
    fn pair_text_format() {
        let p: TreePair = "11000 10100".parse().unwrap();
        assert_eq!(p.to_string(), "11000 10100");
        assert!(matches!(
            TreePair::parse("11000"),
            Err(Error::MalformedPair(_))
        ));
        assert!(matches!(
            TreePair::parse("100 11000"),
            Err(Error::SizeMismatch { left: 1, right: 2 })
        ));
    }
}
