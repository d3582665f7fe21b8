//! Extended ordered binary trees encoded as pre-order binary words.
//!
//! A tree is stored as the sequence of symbols visited by a pre-order
//! traversal: `1` for an internal node, `0` for a leaf. Nodes are addressed by
//! their 0-based position in that sequence ([`NodeRef`]). Leaves are labelled
//! `0..=n` from left to right, so the label of a leaf is the number of `0`s
//! that precede it, and the interval of an internal node is
//! `(zeros before it, zeros before it + subtree size)`.
//!
//! All per-node quantities are derived from one linear pass over the word and
//! held in a [`Layout`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A node, identified by its index into a [`TreeWord`].
///
/// Only meaningful relative to the word it was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeRef(pub usize);

impl NodeRef {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

/// Relative to navigate to from a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Parent,
    Left,
    Right,
}

/// The span `(lower, upper)` of leaf labels below a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lower: usize,
    pub upper: usize,
}

impl Interval {
    pub const fn new(lower: usize, upper: usize) -> Self {
        Interval { lower, upper }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lower, self.upper)
    }
}

impl From<(usize, usize)> for Interval {
    fn from((lower, upper): (usize, usize)) -> Self {
        Interval { lower, upper }
    }
}

pub type IntervalSet = BTreeSet<Interval>;

/// An extended ordered binary tree of size `n`, stored as its pre-order word
/// of length `2n + 1`. `true` stands for `1` (internal), `false` for `0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeWord {
    symbols: Vec<bool>,
}

impl TreeWord {
    /// The single-leaf tree of size 0.
    pub fn leaf() -> Self {
        TreeWord {
            symbols: vec![false],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let malformed = |reason| Error::MalformedWord {
            word: text.to_string(),
            reason,
        };
        let symbols = text
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(malformed("symbols must be 0 or 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(symbols).map_err(|e| match e {
            Error::MalformedWord { reason, .. } => malformed(reason),
            other => other,
        })
    }

    /// Validates a symbol sequence: `n` ones, `n + 1` zeros, and no proper
    /// prefix with more zeros than ones.
    pub fn from_symbols(symbols: Vec<bool>) -> Result<Self> {
        let malformed = |reason| Error::MalformedWord {
            word: render(&symbols),
            reason,
        };
        if symbols.is_empty() {
            return Err(malformed("empty word"));
        }
        let ones = symbols.iter().filter(|&&s| s).count();
        if symbols.len() != 2 * ones + 1 {
            return Err(malformed("expected n ones and n + 1 zeros"));
        }
        let mut balance = 0isize;
        for &s in &symbols[..symbols.len() - 1] {
            balance += if s { 1 } else { -1 };
            if balance < 0 {
                return Err(malformed("a proper prefix has more zeros than ones"));
            }
        }
        Ok(TreeWord { symbols })
    }

    /// Wraps symbols that are valid by construction.
    pub(crate) fn from_symbols_unchecked(symbols: Vec<bool>) -> Self {
        debug_assert!(TreeWord::from_symbols(symbols.clone()).is_ok());
        TreeWord { symbols }
    }

    pub fn symbols(&self) -> &[bool] {
        &self.symbols
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        self.symbols.len() / 2
    }

    /// Word length, `2n + 1`.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn root(&self) -> NodeRef {
        NodeRef(0)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeRef> {
        (0..self.symbols.len()).map(NodeRef)
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = NodeRef> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| NodeRef(i))
    }

    pub fn check(&self, node: NodeRef) -> Result<()> {
        if node.0 < self.symbols.len() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: node.0,
                len: self.symbols.len(),
            })
        }
    }

    pub fn is_internal(&self, node: NodeRef) -> bool {
        self.symbols.get(node.0).copied().unwrap_or(false)
    }

    pub fn layout(&self) -> Layout {
        Layout::new(&self.symbols)
    }

    pub fn navigate(&self, node: NodeRef, step: Step) -> Result<NodeRef> {
        self.check(node)?;
        self.layout().navigate(node, step)
    }

    pub fn interval_of(&self, node: NodeRef) -> Result<Interval> {
        self.check(node)?;
        Ok(self.layout().interval(node))
    }

    pub fn intervals(&self, include_root: bool) -> IntervalSet {
        self.layout().intervals(include_root).collect()
    }

    pub fn one_interval_of(&self, node: NodeRef) -> Result<Interval> {
        self.check(node)?;
        self.layout().one_interval(node)
    }

    pub fn one_intervals(&self) -> IntervalSet {
        self.layout().one_intervals().collect()
    }

    /// The sub-word spanning the subtree rooted at `node`.
    pub fn subtree(&self, node: NodeRef) -> Result<TreeWord> {
        self.check(node)?;
        let end = self.layout().end(node);
        Ok(TreeWord::from_symbols_unchecked(
            self.symbols[node.0..end].to_vec(),
        ))
    }
}

fn render(symbols: &[bool]) -> String {
    symbols.iter().map(|&s| if s { '1' } else { '0' }).collect()
}

impl fmt::Display for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.symbols))
    }
}

impl fmt::Debug for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeWord({self})")
    }
}

impl FromStr for TreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TreeWord::parse(s)
    }
}

impl Serialize for TreeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TreeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        TreeWord::parse(&text).map_err(serde::de::Error::custom)
    }
}

const NO_PARENT: usize = usize::MAX;

/// Per-node navigation and interval data for one word, built in a single
/// right-to-left pass plus a prefix count of zeros.
#[derive(Debug, Clone)]
pub struct Layout {
    internal: Vec<bool>,
    /// Exclusive end of each node's subtree word.
    end: Vec<usize>,
    parent: Vec<usize>,
    zeros_before: Vec<usize>,
}

impl Layout {
    pub fn new(symbols: &[bool]) -> Self {
        let len = symbols.len();
        let mut end = vec![0; len];
        let mut parent = vec![NO_PARENT; len];
        let mut stack = Vec::with_capacity(len / 2 + 1);
        for i in (0..len).rev() {
            if symbols[i] {
                // Scanning backwards, the left subtree starting at i + 1 is on
                // top with the right subtree beneath it.
                let left = stack.pop().expect("valid word");
                let right = stack.pop().expect("valid word");
                end[i] = end[right];
                parent[left] = i;
                parent[right] = i;
            } else {
                end[i] = i + 1;
            }
            stack.push(i);
        }
        let mut zeros_before = Vec::with_capacity(len);
        let mut zeros = 0;
        for &s in symbols {
            zeros_before.push(zeros);
            if !s {
                zeros += 1;
            }
        }
        Layout {
            internal: symbols.to_vec(),
            end,
            parent,
            zeros_before,
        }
    }

    pub fn len(&self) -> usize {
        self.internal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.internal.is_empty()
    }

    pub fn size(&self) -> usize {
        self.internal.len() / 2
    }

    pub fn is_internal(&self, node: NodeRef) -> bool {
        self.internal[node.0]
    }

    pub fn end(&self, node: NodeRef) -> usize {
        self.end[node.0]
    }

    /// Number of internal nodes in the subtree at `node`.
    pub fn subtree_size(&self, node: NodeRef) -> usize {
        (self.end[node.0] - node.0) / 2
    }

    pub fn parent(&self, node: NodeRef) -> Option<NodeRef> {
        match self.parent[node.0] {
            NO_PARENT => None,
            p => Some(NodeRef(p)),
        }
    }

    pub fn left(&self, node: NodeRef) -> Option<NodeRef> {
        self.internal[node.0].then(|| NodeRef(node.0 + 1))
    }

    pub fn right(&self, node: NodeRef) -> Option<NodeRef> {
        self.internal[node.0].then(|| NodeRef(self.end[node.0 + 1]))
    }

    pub fn is_left_child(&self, node: NodeRef) -> bool {
        self.parent(node).is_some_and(|p| p.0 + 1 == node.0)
    }

    pub fn navigate(&self, node: NodeRef, step: Step) -> Result<NodeRef> {
        match step {
            Step::Parent => self.parent(node).ok_or(Error::NoParent(node.0)),
            Step::Left => self.left(node).ok_or(Error::NotInternal(node.0)),
            Step::Right => self.right(node).ok_or(Error::NotInternal(node.0)),
        }
    }

    pub fn interval(&self, node: NodeRef) -> Interval {
        let lower = self.zeros_before[node.0];
        Interval::new(lower, lower + self.subtree_size(node))
    }

    /// The interval created by rotating at `node`.
    pub fn one_interval(&self, node: NodeRef) -> Result<Interval> {
        if !self.internal[node.0] {
            return Err(Error::NotInternal(node.0));
        }
        let parent = self.parent(node).ok_or(Error::NoParent(node.0))?;
        let left = NodeRef(node.0 + 1);
        Ok(if parent.0 + 1 == node.0 {
            let right = NodeRef(self.end[left.0]);
            Interval::new(self.zeros_before[right.0], self.interval(parent).upper)
        } else {
            Interval::new(self.zeros_before[parent.0], self.interval(left).upper)
        })
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = NodeRef> + '_ {
        (0..self.len()).filter(|&i| self.internal[i]).map(NodeRef)
    }

    /// Intervals of the internal nodes in word order.
    pub fn intervals(&self, include_root: bool) -> impl Iterator<Item = Interval> + '_ {
        let skip = usize::from(!include_root);
        self.internal_nodes()
            .filter(move |n| n.0 >= skip)
            .map(|n| self.interval(n))
    }

    /// 1-intervals of the non-root internal nodes in word order.
    pub fn one_intervals(&self) -> impl Iterator<Item = Interval> + '_ {
        self.internal_nodes()
            .skip(1)
            .map(|n| self.one_interval(n).expect("non-root internal node"))
    }

    /// Internal node carrying `interval`, if any.
    pub fn find_interval(&self, interval: Interval) -> Option<NodeRef> {
        self.internal_nodes()
            .find(|&n| self.interval(n) == interval)
    }
}
