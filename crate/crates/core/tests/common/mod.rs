//! Independent reference implementations for tests.
//!
//! Everything here works on a boxed pointer tree parsed from the raw word,
//! and shares no code with the word-index machinery of the library: labels
//! come from a traversal counter, 1-intervals from actually rotating and
//! diffing interval sets, distances from a plain one-sided BFS.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use difficult_pairs::growth::{growth_injection, sigma, word_decompose};
use difficult_pairs::word::{Layout, NodeRef, TreeWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

pub type Span = (usize, usize);

impl Tree {
    pub fn parse(word: &str) -> Tree {
        fn go(chars: &[u8], pos: &mut usize) -> Tree {
            let c = chars[*pos];
            *pos += 1;
            match c {
                b'0' => Tree::Leaf,
                b'1' => {
                    let l = go(chars, pos);
                    let r = go(chars, pos);
                    Tree::Node(Box::new(l), Box::new(r))
                }
                _ => panic!("bad symbol"),
            }
        }
        let bytes = word.as_bytes();
        let mut pos = 0;
        let t = go(bytes, &mut pos);
        assert_eq!(pos, bytes.len(), "trailing symbols in {word}");
        t
    }

    pub fn word(&self) -> String {
        match self {
            Tree::Leaf => "0".into(),
            Tree::Node(l, r) => format!("1{}{}", l.word(), r.word()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Spans of all internal nodes, labelling leaves left to right.
    pub fn spans(&self) -> Vec<Span> {
        fn go(t: &Tree, next: &mut usize, out: &mut Vec<Span>) -> Span {
            match t {
                Tree::Leaf => {
                    let l = *next;
                    *next += 1;
                    (l, l)
                }
                Tree::Node(l, r) => {
                    let slot = out.len();
                    out.push((0, 0));
                    let (lo, _) = go(l, next, out);
                    let (_, hi) = go(r, next, out);
                    out[slot] = (lo, hi);
                    (lo, hi)
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut 0, &mut out);
        out
    }

    /// `(pre-order position, label)` of every leaf.
    pub fn leaf_labels(&self) -> Vec<(usize, usize)> {
        fn go(t: &Tree, pos: &mut usize, label: &mut usize, out: &mut Vec<(usize, usize)>) {
            let here = *pos;
            *pos += 1;
            match t {
                Tree::Leaf => {
                    out.push((here, *label));
                    *label += 1;
                }
                Tree::Node(l, r) => {
                    go(l, pos, label, out);
                    go(r, pos, label, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut 0, &mut 0, &mut out);
        out
    }

    pub fn intervals(&self, include_root: bool) -> BTreeSet<Span> {
        let spans = self.spans();
        let skip = usize::from(!include_root);
        spans.into_iter().skip(skip).collect()
    }

    /// Every tree one rotation away.
    pub fn rotations(&self) -> Vec<Tree> {
        let mut out = Vec::new();
        if let Tree::Node(l, r) = self {
            if let Tree::Node(a, b) = l.as_ref() {
                out.push(node(
                    a.as_ref().clone(),
                    node(b.as_ref().clone(), r.as_ref().clone()),
                ));
            }
            if let Tree::Node(b, c) = r.as_ref() {
                out.push(node(
                    node(l.as_ref().clone(), b.as_ref().clone()),
                    c.as_ref().clone(),
                ));
            }
            for l2 in l.rotations() {
                out.push(node(l2, r.as_ref().clone()));
            }
            for r2 in r.rotations() {
                out.push(node(l.as_ref().clone(), r2));
            }
        }
        out
    }

    /// The interval each rotation introduces.
    pub fn one_intervals(&self) -> BTreeSet<Span> {
        let before = self.intervals(true);
        self.rotations()
            .iter()
            .map(|r| {
                let after = r.intervals(true);
                let created: Vec<_> = after.difference(&before).copied().collect();
                assert_eq!(created.len(), 1);
                created[0]
            })
            .collect()
    }

    /// Every tree obtained by replacing one node `v` with `1 v 0` or `1 0 v`.
    pub fn growths(&self) -> BTreeSet<Tree> {
        let mut out = BTreeSet::new();
        out.insert(node(self.clone(), Tree::Leaf));
        out.insert(node(Tree::Leaf, self.clone()));
        if let Tree::Node(l, r) = self {
            for l2 in l.growths() {
                out.insert(node(l2, r.as_ref().clone()));
            }
            for r2 in r.growths() {
                out.insert(node(l.as_ref().clone(), r2));
            }
        }
        out
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word().cmp(&other.word())
    }
}

fn node(l: Tree, r: Tree) -> Tree {
    Tree::Node(Box::new(l), Box::new(r))
}

/// All trees of size `n`, as words in lexicographic order.
pub fn all_trees(n: usize) -> Vec<String> {
    fn go(n: usize) -> Vec<Tree> {
        if n == 0 {
            return vec![Tree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in go(k) {
                for r in go(n - 1 - k) {
                    out.push(node(l.clone(), r));
                }
            }
        }
        out
    }
    let mut words: Vec<String> = go(n).iter().map(Tree::word).collect();
    words.sort();
    words
}

pub fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Difficulty straight from the definitions.
pub fn oracle_is_difficult(s: &str, t: &str) -> bool {
    if s == t {
        return false;
    }
    let (s, t) = (Tree::parse(s), Tree::parse(t));
    if s.size() != t.size() {
        return false;
    }
    let (is, it) = (s.intervals(false), t.intervals(false));
    is.is_disjoint(&it) && s.one_intervals().is_disjoint(&it) && t.one_intervals().is_disjoint(&is)
}

/// Rotation distance by plain BFS from `s`.
pub fn oracle_distance(s: &str, t: &str) -> usize {
    if s == t {
        return 0;
    }
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(s.to_string(), 0);
    queue.push_back(Tree::parse(s));
    while let Some(cur) = queue.pop_front() {
        let d = seen[&cur.word()];
        for next in cur.rotations() {
            let w = next.word();
            if w == t {
                return d + 1;
            }
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(w) {
                slot.insert(d + 1);
                queue.push_back(next);
            }
        }
    }
    panic!("unreachable target");
}

pub fn left_comb(n: usize) -> String {
    "1".repeat(n) + &"0".repeat(n + 1)
}

pub fn right_comb(n: usize) -> String {
    "10".repeat(n) + "0"
}

fn shift(span: Span, n: usize) -> Span {
    (span.0, span.1 + usize::from(span.1 == n))
}

/// Checks every structural relation between a tree and its sigma-growth.
/// Returns the first violated relation.
pub fn check_growth_relations(word: &TreeWord) -> Result<(), String> {
    let n = word.size();
    let grown = sigma(word).map_err(|e| e.to_string())?;
    let parts = word_decompose(word).map_err(|e| e.to_string())?;
    let omega = parts.omega;
    let t = word.layout();
    let g = grown.layout();
    let image = |v: NodeRef| growth_injection(word, v).unwrap();
    let span = |l: &Layout, v: NodeRef| {
        let i = l.interval(v);
        (i.lower, i.upper)
    };
    let one_span = |l: &Layout, v: NodeRef| {
        let i = l.one_interval(v).unwrap();
        (i.lower, i.upper)
    };
    let fail = |what: &str| Err(format!("{what} fails for {word}"));

    // Word decomposition.
    let mut expected = parts.prefix.to_vec();
    expected.push(true);
    expected.extend_from_slice(parts.suffix);
    expected.push(false);
    if grown.symbols() != expected.as_slice() {
        return fail("word decomposition");
    }
    for v in word.nodes() {
        if grown.symbols()[image(v).0] != word.symbols()[v.0] {
            return fail("injection symbol");
        }
    }

    // Intervals of images. The rightmost leaf keeps its label n, the one
    // exception to the shift rule besides omega.
    let last_leaf = NodeRef(word.len() - 1);
    for v in word.nodes().filter(|&v| v != omega) {
        let want = if v == last_leaf {
            (n, n)
        } else {
            shift(span(&t, v), n)
        };
        if span(&g, image(v)) != want {
            return fail("interval of image");
        }
    }

    // Left children, right children, parents.
    let omega_parent = t.parent(omega);
    for v in t.internal_nodes() {
        if image(t.left(v).unwrap()) != g.left(image(v)).unwrap() {
            return fail("left child preservation");
        }
        if Some(v) != omega_parent && image(t.right(v).unwrap()) != g.right(image(v)).unwrap() {
            return fail("right child preservation");
        }
    }
    for v in word.nodes().filter(|&v| v != omega) {
        if let Some(p) = t.parent(v) {
            if g.parent(image(v)) != Some(image(p)) {
                return fail("parent preservation");
            }
        }
    }

    // Interval sets.
    let mut want: BTreeSet<Span> = t
        .intervals(true)
        .map(|i| shift((i.lower, i.upper), n))
        .collect();
    want.insert(span(&t, omega));
    let got: BTreeSet<Span> = g.intervals(true).map(|i| (i.lower, i.upper)).collect();
    if got != want {
        return fail("interval set");
    }

    // 1-interval sets.
    let omega_left = t.left(omega).unwrap();
    let mut removed = BTreeSet::new();
    if t.parent(omega).is_some() {
        removed.insert(one_span(&t, omega));
    }
    if t.is_internal(omega_left) {
        removed.insert(one_span(&t, omega_left));
    }
    let theta: BTreeSet<Span> = t
        .one_intervals()
        .map(|i| (i.lower, i.upper))
        .filter(|s| !removed.contains(s))
        .collect();
    let mut want: BTreeSet<Span> = theta.into_iter().map(|s| shift(s, n)).collect();
    if t.is_internal(omega_left) {
        want.insert(one_span(&t, omega_left));
    }
    want.insert((n, n + 1));
    let phi = g.parent(image(omega)).unwrap();
    if g.parent(phi).is_some() {
        want.insert(one_span(&g, phi));
    }
    let got: BTreeSet<Span> = g.one_intervals().map(|i| (i.lower, i.upper)).collect();
    if got != want {
        return fail("1-interval set");
    }
    Ok(())
}
