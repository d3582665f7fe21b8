//! Remy-style growth of trees by word splicing.
//!
//! Growing at a node `v` inserts a new internal node in `v`'s place with `v`
//! as its left (or right) child and a fresh leaf as the other child. On the
//! word this is `1 word(v) 0` (left) or `1 0 word(v)` (right) in place of
//! `word(v)`.

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::word::{NodeRef, TreeWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GrowSide {
    Left,
    Right,
}

/// Where to grow: the node that is pushed down, and which child it becomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrowSite {
    pub node: NodeRef,
    pub side: GrowSide,
}

impl GrowSite {
    pub fn new(node: NodeRef, side: GrowSide) -> Self {
        GrowSite { node, side }
    }
}

pub fn grow(word: &TreeWord, site: GrowSite) -> Result<TreeWord> {
    word.check(site.node)?;
    let end = word.layout().end(site.node);
    Ok(grow_span(word.symbols(), site.node.0, end, site.side))
}

fn grow_span(sym: &[bool], start: usize, end: usize, side: GrowSide) -> TreeWord {
    TreeWord::from_symbols_unchecked(splice(sym, start, end, side))
}

fn splice(sym: &[bool], start: usize, end: usize, side: GrowSide) -> Vec<bool> {
    let mut out = Vec::with_capacity(sym.len() + 2);
    out.extend_from_slice(&sym[..start]);
    out.push(true);
    match side {
        GrowSide::Left => {
            out.extend_from_slice(&sym[start..end]);
            out.push(false);
        }
        GrowSide::Right => {
            out.push(false);
            out.extend_from_slice(&sym[start..end]);
        }
    }
    out.extend_from_slice(&sym[end..]);
    out
}

/// Distinct trees reachable by one grow step, in lexicographic order.
///
/// At most `3n + 1` trees: both sides of every internal node plus one tree
/// per leaf, since growing a leaf left or right gives the same tree.
pub fn growth_neighbors(word: &TreeWord) -> Vec<TreeWord> {
    let layout = word.layout();
    let sym = word.symbols();
    let mut out = Vec::with_capacity(3 * word.size() + 1);
    for node in word.nodes() {
        let end = layout.end(node);
        out.push(grow_span(sym, node.0, end, GrowSide::Left));
        if layout.is_internal(node) {
            out.push(grow_span(sym, node.0, end, GrowSide::Right));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Uniformly random tree of size `n` by Remy's procedure: starting from the
/// size-1 tree, repeatedly pick one of the `2k + 1` nodes and a side
/// uniformly and grow there.
pub fn remy_sample(n: usize, rng: &mut Rng) -> TreeWord {
    if n == 0 {
        return TreeWord::leaf();
    }
    let mut sym = vec![true, false, false];
    let mut end = Vec::new();
    for _ in 1..n {
        let node = rng.below(sym.len());
        let side = if rng.coin() {
            GrowSide::Left
        } else {
            GrowSide::Right
        };
        subtree_ends(&sym, &mut end);
        sym = splice(&sym, node, end[node], side);
    }
    TreeWord::from_symbols_unchecked(sym)
}

fn subtree_ends(sym: &[bool], end: &mut Vec<usize>) {
    end.clear();
    end.resize(sym.len(), 0);
    let mut stack = Vec::new();
    for i in (0..sym.len()).rev() {
        if sym[i] {
            stack.pop();
            let right = stack.pop().expect("valid word");
            end[i] = end[right];
        } else {
            end[i] = i + 1;
        }
        stack.push(i);
    }
}

/// The split `word = prefix ++ suffix` where `suffix` is the word of the
/// internal node whose right child is the last leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition<'a> {
    pub omega: NodeRef,
    pub prefix: &'a [bool],
    pub suffix: &'a [bool],
}

/// The parent of the rightmost leaf.
pub fn omega(word: &TreeWord) -> Result<NodeRef> {
    if word.is_empty() {
        return Err(Error::EmptyTree);
    }
    let last = NodeRef(word.len() - 1);
    Ok(word.layout().parent(last).expect("non-root leaf"))
}

pub fn word_decompose(word: &TreeWord) -> Result<Decomposition<'_>> {
    let omega = omega(word)?;
    let (prefix, suffix) = word.symbols().split_at(omega.0);
    Ok(Decomposition {
        omega,
        prefix,
        suffix,
    })
}

/// Grows left at the parent of the rightmost leaf: `prefix 1 suffix 0`.
pub fn sigma(word: &TreeWord) -> Result<TreeWord> {
    let omega = omega(word)?;
    Ok(grow_span(
        word.symbols(),
        omega.0,
        word.len(),
        GrowSide::Left,
    ))
}

/// Image of `node` in `sigma(word)`: nodes before the suffix keep their
/// index, nodes in the suffix shift by one past the inserted `1`.
pub fn growth_injection(word: &TreeWord, node: NodeRef) -> Result<NodeRef> {
    word.check(node)?;
    let omega = omega(word)?;
    Ok(if node.0 >= omega.0 {
        NodeRef(node.0 + 1)
    } else {
        node
    })
}
