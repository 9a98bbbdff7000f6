//! Permutations in one-line notation, classical pattern containment and
//! exhaustive enumeration of avoidance classes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest length accepted by [`enumerate_avoiders`].
pub const MAX_AVOIDER_N: usize = 11;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("entry {v} repeated")));
            }
        }
        Ok(Permutation(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Digit-string form, available when every entry is a single digit.
    pub fn compact(&self) -> Option<String> {
        if self.len() > 9 {
            return None;
        }
        Some(self.0.iter().map(|v| v.to_string()).collect())
    }

    /// Reduce an arbitrary sequence of distinct integers to the permutation
    /// with the same relative order.
    pub fn standardize(values: &[usize]) -> Permutation {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut out = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation(out)
    }

    /// Classical containment: some subsequence of `self` is order isomorphic
    /// to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_slice(&self.0, &pattern.0)
    }

    pub fn avoids_all(&self, basis: &[Permutation]) -> bool {
        basis.iter().all(|sigma| !self.contains(sigma))
    }

    /// Length of the longest increasing subsequence.
    pub fn lis(&self) -> usize {
        // patience sorting: tails[k] is the least possible tail of an
        // increasing subsequence of length k + 1
        let mut tails: Vec<usize> = Vec::new();
        for &v in &self.0 {
            match tails.binary_search(&v) {
                Ok(_) => unreachable!("entries are distinct"),
                Err(k) if k == tails.len() => tails.push(v),
                Err(k) => tails[k] = v,
            }
        }
        tails.len()
    }

    /// The permutation obtained by inserting the value `n + 1` before
    /// 0-indexed position `pos`.
    fn insert_max(&self, pos: usize) -> Permutation {
        let mut v = self.0.clone();
        v.insert(pos, self.len() + 1);
        Permutation(v)
    }
}

/// Backtracking containment test. The value chosen for pattern index `d` only
/// has to be compared with the already chosen entries whose pattern values are
/// the nearest below and above `pattern[d]`.
fn contains_slice(host: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > host.len() {
        return false;
    }
    let mut below = vec![None; k];
    let mut above = vec![None; k];
    for d in 0..k {
        for e in 0..d {
            if pattern[e] < pattern[d] && below[d].is_none_or(|b: usize| pattern[e] > pattern[b]) {
                below[d] = Some(e);
            }
            if pattern[e] > pattern[d] && above[d].is_none_or(|a: usize| pattern[e] < pattern[a]) {
                above[d] = Some(e);
            }
        }
    }
    let mut chosen = vec![0usize; k];
    search(host, &below, &above, &mut chosen, 0, 0)
}

fn search(
    host: &[usize],
    below: &[Option<usize>],
    above: &[Option<usize>],
    chosen: &mut [usize],
    depth: usize,
    start: usize,
) -> bool {
    let k = chosen.len();
    if depth == k {
        return true;
    }
    let last = host.len() - (k - depth);
    for p in start..=last {
        let v = host[p];
        if below[depth].is_some_and(|e| chosen[e] > v) || above[depth].is_some_and(|e| chosen[e] < v) {
            continue;
        }
        chosen[depth] = v;
        if search(host, below, above, chosen, depth + 1, p + 1) {
            return true;
        }
    }
    false
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n).collect()),
    }
}

/// Iterator over the symmetric group in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation(current))
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All length-`n` permutations avoiding every pattern of `basis`, in
/// lexicographic order.
///
/// Avoidance classes are closed under deleting entries, so every avoider of
/// length `m` arises by inserting `m` into an avoider of length `m - 1`; the
/// classes are grown level by level from the empty permutation.
pub fn enumerate_avoiders(n: usize, basis: &[Permutation]) -> Result<Vec<Permutation>> {
    if n > MAX_AVOIDER_N {
        return Err(Error::TooLarge {
            what: "enumerate_avoiders",
            n,
            limit: MAX_AVOIDER_N,
        });
    }
    let mut level = vec![Permutation::empty()];
    level.retain(|p| p.avoids_all(basis));
    for m in 0..n {
        let mut next = Vec::with_capacity(level.len() * (m + 1));
        for p in &level {
            for pos in 0..=m {
                let q = p.insert_max(pos);
                if q.avoids_all(basis) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level.sort_unstable();
    Ok(level)
}

/// Parse a comma-separated list of permutations such as `"3124,1234"`.
/// Each item uses the compact digit form; an empty string is the empty basis.
pub fn parse_basis(text: &str) -> Result<Vec<Permutation>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|item| parse_compact(item.trim())).collect()
}

fn parse_compact(s: &str) -> Result<Permutation> {
    let entries = s
        .chars()
        .map(|c| {
            c.to_digit(10)
                .filter(|&d| d > 0)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(entries)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"4,2,5,1,3"` or, for lengths up to 9, `"42513"`. The empty
    /// string is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            let entries = s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::new(entries)
        } else {
            parse_compact(s)
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}
