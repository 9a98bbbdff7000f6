//! Dyck paths, labeled Dyck paths and the border-labeling map from rook
//! placements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rook::RookPlacement;

/// Largest semilength accepted by [`enumerate_lx312`].
pub const MAX_LX312_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidPath(format!(
                    "prefix of length {} goes below the axis",
                    i + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath(format!("path ends at height {h}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Step `j`, 1-indexed: it leads from vertex `j - 1` to vertex `j`.
    pub fn step(&self, j: usize) -> Step {
        self.steps[j - 1]
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights of the `2n + 1` vertices.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            match s {
                Step::U => h += 1,
                Step::D => h -= 1,
            }
            out.push(h);
        }
        out
    }

    /// Indices `j` of peak vertices (step `j` is U and step `j + 1` is D).
    pub fn peaks(&self) -> Vec<usize> {
        (1..self.steps.len())
            .filter(|&j| self.steps[j - 1] == Step::U && self.steps[j] == Step::D)
            .collect()
    }

    /// Split at returns to the axis: `u D1 d u D2 d ...` gives `[D1, D2, ...]`.
    pub fn return_blocks(&self) -> Vec<DyckPath> {
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut h = 0usize;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => h += 1,
                Step::D => h -= 1,
            }
            if h == 0 {
                blocks.push(DyckPath {
                    steps: self.steps[start + 1..i].to_vec(),
                });
                start = i + 1;
            }
        }
        blocks
    }

    /// All pairs `(i, j)`, `i < j`, of vertices at a common height `h` such
    /// that every vertex between them has height at least `h`.
    pub fn weak_tunnel_pairs(&self) -> Vec<(usize, usize)> {
        let hs = self.heights();
        let mut out = Vec::new();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                if hs[j] < hs[i] {
                    break;
                }
                if hs[j] == hs[i] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Every Dyck path of semilength `n`, lexicographic with `U < D`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn go(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if downs == n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if ups < n {
                cur.push(Step::U);
                go(n, ups + 1, downs, cur, out);
                cur.pop();
            }
            if downs < ups {
                cur.push(Step::D);
                go(n, ups, downs + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
        out
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                _ => Err(Error::Parse(format!("bad step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// A Dyck path with one nonnegative label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabeledRepr", into = "LabeledRepr")]
pub struct LabeledDyckPath {
    path: DyckPath,
    labels: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct LabeledRepr {
    steps: String,
    labels: Vec<usize>,
}

impl LabeledDyckPath {
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != path.steps.len() + 1 {
            return Err(Error::InvalidPath(format!(
                "{} labels for a path with {} vertices",
                labels.len(),
                path.steps.len() + 1
            )));
        }
        Ok(LabeledDyckPath { path, labels })
    }

    /// The empty path carrying the single label 0.
    pub fn empty() -> Self {
        LabeledDyckPath {
            path: DyckPath::empty(),
            labels: vec![0],
        }
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn semilength(&self) -> usize {
        self.path.semilength()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn max_label(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// Up steps change the label by 0 or +1, down steps by -1 or 0.
    pub fn check_monotone(&self) -> bool {
        self.path.steps.iter().enumerate().all(|(i, s)| {
            let (a, b) = (self.labels[i], self.labels[i + 1]);
            match s {
                Step::U => b == a || b == a + 1,
                Step::D => b == a || b + 1 == a,
            }
        })
    }

    /// Label 0 occurs exactly at the vertices on the axis.
    pub fn check_zero(&self) -> bool {
        self.path
            .heights()
            .iter()
            .zip(&self.labels)
            .all(|(&h, &a)| (h == 0) == (a == 0))
    }

    /// Across every weak tunnel the right label is at most the left one.
    pub fn check_tunnel(&self) -> bool {
        self.path
            .weak_tunnel_pairs()
            .into_iter()
            .all(|(i, j)| self.labels[j] <= self.labels[i])
    }

    /// Labels around each peak read `l, l + 1, l`.
    pub fn check_peak(&self) -> bool {
        self.path.peaks().into_iter().all(|j| {
            let l = self.labels[j - 1];
            self.labels[j] == l + 1 && self.labels[j + 1] == l
        })
    }

    pub fn is_lx312(&self) -> bool {
        self.check_monotone() && self.check_zero() && self.check_tunnel() && self.check_peak()
    }

    /// Vertices at height 0, by index.
    pub(crate) fn axis_vertices(&self) -> Vec<usize> {
        self.path
            .heights()
            .iter()
            .enumerate()
            .filter(|(_, &h)| h == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Sub-path between vertices `a` and `b` (which must be at the same
    /// height with the path staying weakly above), with its labels.
    pub(crate) fn slice(&self, a: usize, b: usize) -> LabeledDyckPath {
        LabeledDyckPath {
            path: DyckPath::from_steps_unchecked(self.path.steps[a..b].to_vec()),
            labels: self.labels[a..=b].to_vec(),
        }
    }
}

impl fmt::Display for LabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|a| a.to_string()).collect();
        write!(f, "{} | {}", self.path, labels.join(","))
    }
}

impl FromStr for LabeledDyckPath {
    type Err = Error;

    /// Parses `"UUDD | 0,1,2,1,0"`.
    fn from_str(s: &str) -> Result<Self> {
        let (steps, labels) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected \"STEPS | LABELS\", got {s:?}")))?;
        let labels = labels
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledDyckPath::new(steps.parse()?, labels)
    }
}

impl TryFrom<LabeledRepr> for LabeledDyckPath {
    type Error = Error;

    fn try_from(r: LabeledRepr) -> Result<Self> {
        LabeledDyckPath::new(r.steps.parse()?, r.labels)
    }
}

impl From<LabeledDyckPath> for LabeledRepr {
    fn from(l: LabeledDyckPath) -> Self {
        LabeledRepr {
            steps: l.path.to_string(),
            labels: l.labels,
        }
    }
}

/// Border labeling of a full rook placement.
///
/// The northwest-southeast border is walked from `(0, n)` to `(n, 0)`; east
/// steps become U and south steps become D. Each border vertex `(x, y)` is
/// labeled with the longest chain of rooks increasing in both coordinates that
/// lies in columns `<= x` and rows `<= y`.
pub fn pi_map(rp: &RookPlacement) -> LabeledDyckPath {
    let n = rp.size();
    let heights = rp.board().heights();
    let mut vertices = Vec::with_capacity(2 * n + 1);
    let mut steps = Vec::with_capacity(2 * n);
    vertices.push((0, n));
    for c in 1..=n {
        steps.push(Step::U);
        vertices.push((c, heights[c - 1]));
        let next = if c < n { heights[c] } else { 0 };
        for y in (next..heights[c - 1]).rev() {
            steps.push(Step::D);
            vertices.push((c, y));
        }
    }
    let path = DyckPath::new(steps).expect("the border of a full placement is a Dyck path");
    let labels = vertices.iter().map(|&(x, y)| chain_below(rp, x, y)).collect();
    LabeledDyckPath { path, labels }
}

/// Longest increasing chain among the rooks in columns `<= x`, rows `<= y`.
fn chain_below(rp: &RookPlacement, x: usize, y: usize) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for c in 1..=x {
        let r = rp.rook_row(c);
        if r > y {
            continue;
        }
        match tails.binary_search(&r) {
            Ok(_) => unreachable!(),
            Err(k) if k == tails.len() => tails.push(r),
            Err(k) => tails[k] = r,
        }
    }
    tails.len()
}

/// How labels on the axis are constrained during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum AxisRule {
    /// Zero exactly on the axis.
    Exact,
    /// Zero on the axis, zero also allowed above it.
    ZeroOnAxis,
    Free,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct LabelRules {
    pub max_label: Option<usize>,
    pub axis: AxisRule,
    pub first: Option<usize>,
}

/// All labelings of all Dyck paths of semilength `n` that satisfy the
/// monotone, tunnel and peak properties plus `rules`. Paths come in
/// lexicographic `U < D` order, labelings smallest-first.
pub(crate) fn enumerate_labelings(n: usize, rules: LabelRules) -> Vec<LabeledDyckPath> {
    let mut out = Vec::new();
    for path in DyckPath::all(n) {
        let heights = path.heights();
        let firsts: Vec<usize> = match (rules.first, rules.axis) {
            (Some(a), _) => vec![a],
            (None, AxisRule::Exact | AxisRule::ZeroOnAxis) => vec![0],
            (None, AxisRule::Free) => (0..=rules.max_label.expect("free axis needs a label bound")).collect(),
        };
        for a0 in firsts {
            if !admissible(&path, &heights, &[], a0, rules) {
                continue;
            }
            let mut labels = vec![a0];
            extend(&path, &heights, &mut labels, rules, &mut out);
        }
    }
    out
}

fn extend(
    path: &DyckPath,
    heights: &[usize],
    labels: &mut Vec<usize>,
    rules: LabelRules,
    out: &mut Vec<LabeledDyckPath>,
) {
    let j = labels.len();
    if j == heights.len() {
        out.push(LabeledDyckPath {
            path: path.clone(),
            labels: labels.clone(),
        });
        return;
    }
    let prev = labels[j - 1];
    let candidates: [Option<usize>; 2] = match path.step(j) {
        Step::U => [Some(prev), Some(prev + 1)],
        Step::D => [prev.checked_sub(1), Some(prev)],
    };
    for a in candidates.into_iter().flatten() {
        if admissible(path, heights, labels, a, rules) {
            labels.push(a);
            extend(path, heights, labels, rules, out);
            labels.pop();
        }
    }
}

/// Whether label `a` may be placed on vertex `labels.len()` given the labels
/// already placed to its left.
fn admissible(path: &DyckPath, heights: &[usize], labels: &[usize], a: usize, rules: LabelRules) -> bool {
    let j = labels.len();
    if rules.max_label.is_some_and(|m| a > m) {
        return false;
    }
    let h = heights[j];
    match rules.axis {
        AxisRule::Exact if (h == 0) != (a == 0) => return false,
        AxisRule::ZeroOnAxis if h == 0 && a != 0 => return false,
        _ => {}
    }
    // peak closing at vertex j - 1
    if j >= 2 && path.step(j - 1) == Step::U && path.step(j) == Step::D {
        let l = labels[j - 2];
        if labels[j - 1] != l + 1 || a != l {
            return false;
        }
    }
    // weak tunnels ending at j
    for i in (0..j).rev() {
        if heights[i] < h {
            break;
        }
        if heights[i] == h && a > labels[i] {
            return false;
        }
    }
    true
}

/// Every member of L×(312) with semilength `n`: labeled Dyck paths with the
/// monotone, zero, tunnel and peak properties.
pub fn enumerate_lx312(n: usize) -> Result<Vec<LabeledDyckPath>> {
    if n > MAX_LX312_N {
        return Err(Error::TooLarge {
            what: "enumerate_lx312",
            n,
            limit: MAX_LX312_N,
        });
    }
    let rules = LabelRules {
        max_label: None,
        axis: AxisRule::Exact,
        first: None,
    };
    let out = enumerate_labelings(n, rules);
    debug_assert!(out.iter().all(LabeledDyckPath::is_lx312));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_avoiders, Permutation};
    use crate::rook::chi;
    use std::collections::BTreeSet;

    fn l(s: &str) -> LabeledDyckPath {
        s.parse().unwrap()
    }

    fn example() -> LabeledDyckPath {
        l("UUUDDUUDDD | 0,1,1,2,1,1,1,2,1,1,0")
    }

    /// Brute force over all label vectors in `0..=n` for every path.
    fn lx312_brute(n: usize) -> BTreeSet<LabeledDyckPath> {
        let mut out = BTreeSet::new();
        for path in DyckPath::all(n) {
            let v = 2 * n + 1;
            let base = n + 1;
            for code in 0..base.pow(v as u32) {
                let mut c = code;
                let labels: Vec<usize> = (0..v)
                    .map(|_| {
                        let d = c % base;
                        c /= base;
                        d
                    })
                    .collect();
                let lp = LabeledDyckPath::new(path.clone(), labels).unwrap();
                if lp.is_lx312() {
                    out.insert(lp);
                }
            }
        }
        out
    }

    #[test]
    fn pi_map_examples() {
        let ex = pi_map(&chi(&"42513".parse().unwrap()).unwrap());
        assert_eq!(ex, example());
        assert_eq!(pi_map(&chi(&"1".parse().unwrap()).unwrap()), l("UD | 0,1,0"));
        assert_eq!(pi_map(&chi(&"21".parse().unwrap()).unwrap()), l("UDUD | 0,1,0,1,0"));
    }

    #[test]
    fn monotone_examples() {
        assert!(example().check_monotone());
        assert!(!l("UD | 0,2,0").check_monotone());
        assert!(!l("UD | 1,0,0").check_monotone());
    }

    #[test]
    fn zero_examples() {
        assert!(example().check_zero());
        assert!(!l("UUDD | 0,0,1,0,0").check_zero());
        assert!(l("UD | 0,1,0").check_zero());
    }

    #[test]
    fn weak_tunnel_examples() {
        let p = |s: &str| s.parse::<DyckPath>().unwrap();
        assert_eq!(p("UD").weak_tunnel_pairs(), vec![(0, 2)]);
        assert_eq!(p("UUDD").weak_tunnel_pairs(), vec![(0, 4), (1, 3)]);
        // vertices 1 and 3 are separated by a dip to the axis
        assert_eq!(p("UDUD").weak_tunnel_pairs(), vec![(0, 2), (0, 4), (2, 4)]);
    }

    #[test]
    fn tunnel_examples() {
        assert!(example().check_tunnel());
        assert!(l("UDUD | 0,1,0,2,0").check_tunnel());
        // (1,3) is a weak tunnel with label 2 > 1 on the right
        assert!(!l("UUDUDD | 0,1,1,2,2,1,0").check_tunnel());
    }

    #[test]
    fn peak_examples() {
        assert!(example().check_peak());
        assert!(!l("UD | 0,0,0").check_peak());
        assert!(l("UUDD | 0,1,2,1,0").check_peak());
    }

    #[test]
    fn lx312_examples() {
        assert!(example().is_lx312());
        assert!(l("UD | 0,1,0").is_lx312());
        assert!(!l("UUDD | 0,1,1,1,0").is_lx312());
    }

    #[test]
    fn max_label_examples() {
        assert_eq!(example().max_label(), 2);
        assert_eq!(l("UD | 0,1,0").max_label(), 1);
        assert_eq!(LabeledDyckPath::empty().max_label(), 0);
        for n in 1..=7 {
            for q in crate::perm::all_permutations(n) {
                assert_eq!(pi_map(&chi(&q).unwrap()).max_label(), q.lis());
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_lx312(0).unwrap(), vec![LabeledDyckPath::empty()]);
        assert_eq!(enumerate_lx312(1).unwrap(), vec![l("UD | 0,1,0")]);
        assert_eq!(enumerate_lx312(2).unwrap().len(), 2);
        assert_eq!(enumerate_lx312(4).unwrap().len(), 23);
        assert!(enumerate_lx312(MAX_LX312_N + 1).is_err());
    }

    #[test]
    fn enumeration_matches_label_brute_force() {
        for n in 0..=3 {
            let fast: BTreeSet<_> = enumerate_lx312(n).unwrap().into_iter().collect();
            assert_eq!(fast, lx312_brute(n), "n = {n}");
        }
    }

    #[test]
    fn pi_chi_is_a_bijection_onto_lx312() {
        let basis = ["3124".parse::<Permutation>().unwrap()];
        for n in 1..=7 {
            let images: Vec<_> = enumerate_avoiders(n, &basis)
                .unwrap()
                .iter()
                .map(|q| pi_map(&chi(q).unwrap()))
                .collect();
            assert!(images.iter().all(LabeledDyckPath::is_lx312));
            let set: BTreeSet<_> = images.iter().cloned().collect();
            assert_eq!(set.len(), images.len(), "collision at n = {n}");
            let target: BTreeSet<_> = enumerate_lx312(n).unwrap().into_iter().collect();
            assert_eq!(set, target, "n = {n}");
        }
    }

    #[test]
    fn labels_are_bounded() {
        for n in 1..=6 {
            for lp in enumerate_lx312(n).unwrap() {
                assert!(lp.labels().iter().all(|&a| a <= n));
            }
        }
    }

    #[test]
    fn formats() {
        let ex = example();
        assert_eq!(ex.to_string(), "UUUDDUUDDD | 0,1,1,2,1,1,1,2,1,1,0");
        let json = serde_json::to_string(&ex).unwrap();
        assert_eq!(json, r#"{"steps":"UUUDDUUDDD","labels":[0,1,1,2,1,1,1,2,1,1,0]}"#);
        assert_eq!(serde_json::from_str::<LabeledDyckPath>(&json).unwrap(), ex);
        assert!("UD | 0,1".parse::<LabeledDyckPath>().is_err());
        assert!("DU | 0,1,0".parse::<LabeledDyckPath>().is_err());
        assert!("UUD | 0,1,0,0".parse::<LabeledDyckPath>().is_err());
        assert_eq!(" | 0".parse::<LabeledDyckPath>().unwrap(), LabeledDyckPath::empty());
    }

    #[test]
    fn return_blocks() {
        let p: DyckPath = "UUDDUUUDDDUD".parse().unwrap();
        let blocks: Vec<String> = p.return_blocks().iter().map(|b| b.to_string()).collect();
        assert_eq!(blocks, vec!["UD", "UUDD", ""]);
    }
}
