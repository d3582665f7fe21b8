//! Exhaustive enumeration of trees and difficult pairs at small sizes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rotation::{IntervalTable, TreePair};
use crate::word::TreeWord;

pub const TREE_GUARD: usize = 14;
pub const PAIR_GUARD: usize = 8;

/// The size-4 difficult pairs, one per unordered pair with `s < t`.
///
/// Enumeration finds 8 ordered pairs at size 4, i.e. 4 unordered pairs; no
/// pair is its own mirror. Checked against [`enumerate_difficult_pairs`] in
/// the tests.
const PRIMITIVES: [(&str, &str); 4] = [
    ("101011000", "111010000"),
    ("101100100", "111001000"),
    ("101101000", "111000100"),
    ("110010100", "110110000"),
];

/// All trees of size `n` in lexicographic word order.
pub fn enumerate_trees(n: usize) -> Result<Vec<TreeWord>> {
    enumerate_trees_bounded(n, TREE_GUARD)
}

pub fn enumerate_trees_bounded(n: usize, max_size: usize) -> Result<Vec<TreeWord>> {
    if n > max_size {
        return Err(Error::SizeGuardExceeded {
            size: n,
            max: max_size,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(2 * n + 1);
    extend(n, 0, 0, &mut prefix, &mut out);
    Ok(out)
}

fn extend(n: usize, ones: usize, zeros: usize, prefix: &mut Vec<bool>, out: &mut Vec<TreeWord>) {
    if prefix.len() == 2 * n + 1 {
        out.push(TreeWord::from_symbols_unchecked(prefix.clone()));
        return;
    }
    // `0` sorts before `1`. A zero may close the word only once all ones are
    // placed; otherwise it must keep zeros <= ones.
    if zeros < ones || (ones == n && zeros == n) {
        prefix.push(false);
        extend(n, ones, zeros + 1, prefix, out);
        prefix.pop();
    }
    if ones < n {
        prefix.push(true);
        extend(n, ones + 1, zeros, prefix, out);
        prefix.pop();
    }
}

/// All ordered difficult pairs of size `n`, in lexicographic order.
pub fn enumerate_difficult_pairs(n: usize) -> Result<Vec<TreePair>> {
    enumerate_difficult_pairs_bounded(n, PAIR_GUARD)
}

pub fn enumerate_difficult_pairs_bounded(n: usize, max_size: usize) -> Result<Vec<TreePair>> {
    if n > max_size {
        return Err(Error::SizeGuardExceeded {
            size: n,
            max: max_size,
        });
    }
    let trees = enumerate_trees_bounded(n, max_size)?;
    let table = IntervalTable::new(n);
    let keys: Vec<_> = trees.iter().map(|t| table.keys(&t.layout())).collect();
    let pairs = (0..trees.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut table = IntervalTable::new(n);
            table.mark_keys(&keys[i].0, &keys[i].1);
            let row: Vec<_> = (0..trees.len())
                .filter(|&j| j != i && !table.conflicts_keys(&keys[j].0, &keys[j].1))
                .map(|j| TreePair::new_unchecked(trees[i].clone(), trees[j].clone()))
                .collect();
            row
        })
        .collect();
    Ok(pairs)
}

/// The primitive difficult pairs: one representative per unordered pair.
pub fn primitive_pairs() -> Vec<TreePair> {
    PRIMITIVES
        .iter()
        .map(|(s, t)| {
            TreePair::new_unchecked(
                s.parse().expect("valid fixture"),
                t.parse().expect("valid fixture"),
            )
        })
        .collect()
}

/// Census text: a `# n=<n> count=<k>` header, then one pair per line.
pub fn census_text(n: usize, pairs: &[TreePair]) -> String {
    let mut out = format!("# n={} count={}\n", n, pairs.len());
    for p in pairs {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

/// Parses census or pair-list text, skipping blank lines and `#` comments.
pub fn parse_pair_lines(text: &str) -> Result<Vec<TreePair>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(TreePair::parse)
        .collect()
}
