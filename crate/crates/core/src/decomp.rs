//! Decomposition of the labeled paths with every label at most 3.
//!
//! * `A`: labeled Dyck paths with the monotone, tunnel and peak properties,
//!   labels in `{0, 1, 2}`, and label 0 on every axis vertex (0 may also occur
//!   above the axis). The empty path `(ε, (0))` belongs to `A`.
//! * `B`: nonempty paths with the same local properties, labels in
//!   `{0, 1, 2}` and leftmost label 1.
//! * `C`: nonempty Dyck paths with the trivial labeling (1 everywhere, 2 on
//!   peaks).
//!
//! [`phi`] is a bijection `A × C → B` that preserves total semilength.

use crate::dyck::{enumerate_labelings, AxisRule, DyckPath, LabelRules, LabeledDyckPath, Step};
use crate::error::{Error, Result};

/// Largest semilength accepted by the `enumerate_*` functions here.
pub const MAX_DECOMP_N: usize = 8;

fn local_properties(l: &LabeledDyckPath) -> bool {
    l.check_monotone() && l.check_tunnel() && l.check_peak() && l.labels().iter().all(|&a| a <= 2)
}

pub fn is_member_a(l: &LabeledDyckPath) -> bool {
    let heights = l.path().heights();
    local_properties(l) && heights.iter().zip(l.labels()).all(|(&h, &a)| h != 0 || a == 0)
}

pub fn is_member_b(l: &LabeledDyckPath) -> bool {
    !l.is_empty() && local_properties(l) && l.labels()[0] == 1
}

pub fn is_member_c(l: &LabeledDyckPath) -> bool {
    !l.is_empty() && l.labels() == trivial_label_vec(l.path().steps())
}

fn trivial_label_vec(steps: &[Step]) -> Vec<usize> {
    let mut labels = vec![1; steps.len() + 1];
    for j in 1..steps.len() {
        if steps[j - 1] == Step::U && steps[j] == Step::D {
            labels[j] = 2;
        }
    }
    labels
}

fn trivially_labeled(steps: Vec<Step>) -> LabeledDyckPath {
    let labels = trivial_label_vec(&steps);
    LabeledDyckPath::new(DyckPath::from_steps_unchecked(steps), labels).unwrap()
}

/// Label every vertex 1 except peaks, which get 2.
pub fn trivial_labels(path: &DyckPath) -> Result<LabeledDyckPath> {
    if path.is_empty() {
        return Err(Error::Precondition("trivial labeling needs a nonempty path".into()));
    }
    Ok(trivially_labeled(path.steps().to_vec()))
}

/// Split a member of L×(312) with labels at most 3 at its returns; each
/// block's interior is returned with its labels lowered by one.
pub fn returns_decomposition(l: &LabeledDyckPath) -> Result<Vec<LabeledDyckPath>> {
    if !l.is_lx312() || l.max_label() > 3 {
        return Err(Error::Precondition(format!(
            "{l} is not in L×(312) with labels at most 3"
        )));
    }
    let axis = l.axis_vertices();
    let blocks = axis
        .windows(2)
        .map(|w| {
            let inner = l.slice(w[0] + 1, w[1] - 1);
            let lowered = inner.labels().iter().map(|&a| a - 1).collect();
            LabeledDyckPath::new(inner.path().clone(), lowered).unwrap()
        })
        .collect::<Vec<_>>();
    debug_assert!(blocks.iter().all(is_member_a));
    Ok(blocks)
}

/// Inverse of [`returns_decomposition`]: raise each block by one and wrap it
/// in an up and a down step.
pub fn compose_returns(blocks: &[LabeledDyckPath]) -> LabeledDyckPath {
    let mut steps = Vec::new();
    let mut labels = vec![0];
    for b in blocks {
        steps.push(Step::U);
        steps.extend_from_slice(b.path().steps());
        steps.push(Step::D);
        labels.extend(b.labels().iter().map(|a| a + 1));
        labels.push(0);
    }
    LabeledDyckPath::new(DyckPath::from_steps_unchecked(steps), labels).unwrap()
}

/// First-return split `u E1 d E2` of a nonempty path, as step vectors
/// `(u E1 d, E2)`.
fn first_return(steps: &[Step]) -> (Vec<Step>, Vec<Step>) {
    let mut h = 0isize;
    for (i, s) in steps.iter().enumerate() {
        h += if *s == Step::U { 1 } else { -1 };
        if h == 0 {
            return (steps[..=i].to_vec(), steps[i + 1..].to_vec());
        }
    }
    unreachable!("a nonempty Dyck path returns to the axis")
}

/// The bijection `A × C → B`.
///
/// With `C = u E1 d E2` and `i` the first index where the A-labels reach 1
/// (so the first `i` steps of the A-path are up steps), the result is
/// `E2 · U^i · u E1 d · (remaining A-steps)`. `E2` and `u E1 d` carry trivial
/// labels, the `U^i` run is labeled 1, and the A-labels after index `i`
/// follow unchanged.
pub fn phi(a: &LabeledDyckPath, c: &LabeledDyckPath) -> Result<LabeledDyckPath> {
    if !is_member_a(a) {
        return Err(Error::Precondition(format!("{a} is not in A")));
    }
    if !is_member_c(c) {
        return Err(Error::Precondition(format!("{c} is not trivially labeled")));
    }
    let (block, e2) = first_return(c.path().steps());

    if a.is_empty() {
        let mut steps = e2;
        steps.extend(block);
        return Ok(trivially_labeled(steps));
    }

    let alpha = a.labels();
    let i = alpha
        .iter()
        .position(|&x| x == 1)
        .ok_or_else(|| Error::Precondition(format!("{a} has no label 1")))?;
    debug_assert!(a.path().steps()[..i].iter().all(|&s| s == Step::U));

    let mut steps = e2.clone();
    let mut labels = if e2.is_empty() { vec![1] } else { trivial_label_vec(&e2) };
    steps.extend(std::iter::repeat_n(Step::U, i));
    labels.extend(std::iter::repeat_n(1, i));
    labels.extend_from_slice(&trivial_label_vec(&block)[1..]);
    steps.extend(block);
    steps.extend_from_slice(&a.path().steps()[i..]);
    labels.extend_from_slice(&alpha[i + 1..]);

    let out = LabeledDyckPath::new(DyckPath::from_steps_unchecked(steps), labels).unwrap();
    debug_assert!(is_member_b(&out), "{out}");
    Ok(out)
}

/// Recover `(a, c)` with `phi(a, c) == b`.
pub fn phi_inverse(b: &LabeledDyckPath) -> Result<(LabeledDyckPath, LabeledDyckPath)> {
    if !is_member_b(b) {
        return Err(Error::Precondition(format!("{b} is not in B")));
    }
    let steps = b.path().steps();
    let labels = b.labels();
    let axis = b.axis_vertices();
    let not_in_image = || Error::NotInImage(b.to_string());

    let (a, c) = if *labels.last().unwrap() == 1 {
        // A-part empty: b = E2 · u E1 d with u E1 d its last return block
        let s = axis[axis.len() - 2];
        let mut c_steps = steps[s..].to_vec();
        c_steps.extend_from_slice(&steps[..s]);
        (LabeledDyckPath::empty(), trivially_labeled(c_steps))
    } else {
        // split point: axis labels are 1 up to it and 0 after it
        let split = *axis.iter().rev().find(|&&v| labels[v] == 1).ok_or_else(not_in_image)?;
        let e2 = &steps[..split];
        let tail = &steps[split..];
        let peak = (1..tail.len())
            .find(|&j| tail[j - 1] == Step::U && tail[j] == Step::D)
            .ok_or_else(not_in_image)?;
        let tail_labels = &labels[split..];
        let mut found = None;
        // largest one-return trivially labeled block around the first peak
        for start in 1..peak {
            let end = block_end(tail, start);
            if tail_labels[start..=end] == trivial_label_vec(&tail[start..end])[..] {
                found = Some((start, end));
                break;
            }
        }
        let (i, end) = found.ok_or_else(not_in_image)?;

        let mut c_steps = tail[i..end].to_vec();
        c_steps.extend_from_slice(e2);

        let mut a_steps = vec![Step::U; i];
        a_steps.extend_from_slice(&tail[end..]);
        let mut a_labels = vec![0; i];
        a_labels.push(1);
        a_labels.extend_from_slice(&tail_labels[end + 1..]);
        let a = LabeledDyckPath::new(DyckPath::new(a_steps).map_err(|_| not_in_image())?, a_labels)?;
        (a, trivially_labeled(c_steps))
    };

    if !is_member_a(&a) || phi(&a, &c).as_ref() != Ok(b) {
        return Err(not_in_image());
    }
    Ok((a, c))
}

/// First vertex after `start` at the height of `start`.
fn block_end(steps: &[Step], start: usize) -> usize {
    let mut h = 0isize;
    for (k, s) in steps[start..].iter().enumerate() {
        h += if *s == Step::U { 1 } else { -1 };
        if h == 0 {
            return start + k + 1;
        }
    }
    steps.len()
}

fn check_limit(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_DECOMP_N {
        return Err(Error::TooLarge {
            what,
            n,
            limit: MAX_DECOMP_N,
        });
    }
    Ok(())
}

pub fn enumerate_a(n: usize) -> Result<Vec<LabeledDyckPath>> {
    check_limit("enumerate_a", n)?;
    let rules = LabelRules {
        max_label: Some(2),
        axis: AxisRule::ZeroOnAxis,
        first: None,
    };
    let out = enumerate_labelings(n, rules);
    debug_assert!(out.iter().all(is_member_a));
    Ok(out)
}

pub fn enumerate_b(n: usize) -> Result<Vec<LabeledDyckPath>> {
    check_limit("enumerate_b", n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let rules = LabelRules {
        max_label: Some(2),
        axis: AxisRule::Free,
        first: Some(1),
    };
    let out = enumerate_labelings(n, rules);
    debug_assert!(out.iter().all(is_member_b));
    Ok(out)
}

pub fn enumerate_c(n: usize) -> Result<Vec<LabeledDyckPath>> {
    check_limit("enumerate_c", n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(DyckPath::all(n)
        .into_iter()
        .map(|p| trivially_labeled(p.steps().to_vec()))
        .collect())
}

/// Members of L×(312) with semilength `n` and every label at most 3.
pub fn enumerate_l3(n: usize) -> Result<Vec<LabeledDyckPath>> {
    check_limit("enumerate_l3", n)?;
    Ok(enumerate_labelings(
        n,
        LabelRules {
            max_label: Some(3),
            axis: AxisRule::Exact,
            first: None,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_lx312;
    use std::collections::BTreeSet;

    fn l(s: &str) -> LabeledDyckPath {
        s.parse().unwrap()
    }

    /// Brute force over all label vectors in {0,1,2}.
    fn brute(n: usize, keep: impl Fn(&LabeledDyckPath) -> bool) -> BTreeSet<LabeledDyckPath> {
        let mut out = BTreeSet::new();
        for path in DyckPath::all(n) {
            let v = 2 * n + 1;
            for code in 0..3usize.pow(v as u32) {
                let mut c = code;
                let labels = (0..v)
                    .map(|_| {
                        let d = c % 3;
                        c /= 3;
                        d
                    })
                    .collect();
                let lp = LabeledDyckPath::new(path.clone(), labels).unwrap();
                if keep(&lp) {
                    out.insert(lp);
                }
            }
        }
        out
    }

    #[test]
    fn membership_examples() {
        assert!(is_member_a(&l("UUDD | 0,0,1,0,0")));
        assert!(is_member_a(&l("UUDD | 0,1,2,1,0")));
        assert!(!is_member_a(&l("UD | 0,1,1")));
        assert!(is_member_a(&LabeledDyckPath::empty()));
        assert!(is_member_b(&l("UD | 1,2,1")));
        assert!(is_member_b(&l("UUDD | 1,1,2,1,0")));
        assert!(!is_member_b(&l("UD | 0,1,0")));
        assert!(!is_member_b(&l(" | 1")));
    }

    #[test]
    fn trivial_label_examples() {
        let t = |s: &str| trivial_labels(&s.parse().unwrap()).unwrap().labels().to_vec();
        assert_eq!(t("UD"), vec![1, 2, 1]);
        assert_eq!(t("UUDD"), vec![1, 1, 2, 1, 1]);
        assert_eq!(t("UDUD"), vec![1, 2, 1, 2, 1]);
        assert!(trivial_labels(&DyckPath::empty()).is_err());
    }

    #[test]
    fn returns_decomposition_examples() {
        assert_eq!(
            returns_decomposition(&l("UD | 0,1,0")).unwrap(),
            vec![LabeledDyckPath::empty()]
        );
        assert_eq!(
            returns_decomposition(&l("UUUDDUUDDD | 0,1,1,2,1,1,1,2,1,1,0")).unwrap(),
            vec![l("UUDDUUDD | 0,0,1,0,0,0,1,0,0")]
        );
        assert_eq!(
            returns_decomposition(&l("UDUD | 0,1,0,1,0")).unwrap(),
            vec![LabeledDyckPath::empty(), LabeledDyckPath::empty()]
        );
        assert!(returns_decomposition(&l("UD | 0,2,0")).is_err());
        // lis 4 gives label 4
        let big = crate::dyck::pi_map(&crate::rook::chi(&"1234".parse().unwrap()).unwrap());
        assert!(returns_decomposition(&big).is_err());
    }

    #[test]
    fn phi_examples() {
        let e = LabeledDyckPath::empty();
        assert_eq!(phi(&e, &l("UD | 1,2,1")).unwrap(), l("UD | 1,2,1"));
        assert_eq!(phi(&l("UD | 0,1,0"), &l("UD | 1,2,1")).unwrap(), l("UUDD | 1,1,2,1,0"));
        assert_eq!(phi(&e, &l("UDUD | 1,2,1,2,1")).unwrap(), l("UDUD | 1,2,1,2,1"));
        assert!(phi(&l("UD | 0,1,1"), &l("UD | 1,2,1")).is_err());
        assert!(phi(&e, &l("UD | 1,1,1")).is_err());
    }

    #[test]
    fn phi_inverse_examples() {
        let e = LabeledDyckPath::empty();
        assert_eq!(phi_inverse(&l("UD | 1,2,1")).unwrap(), (e.clone(), l("UD | 1,2,1")));
        assert_eq!(
            phi_inverse(&l("UUDD | 1,1,2,1,0")).unwrap(),
            (l("UD | 0,1,0"), l("UD | 1,2,1"))
        );
        assert_eq!(phi_inverse(&l("UDUD | 1,2,1,2,1")).unwrap(), (e, l("UDUD | 1,2,1,2,1")));
        assert!(phi_inverse(&l("UD | 0,1,0")).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_a(0).unwrap(), vec![LabeledDyckPath::empty()]);
        let a2: BTreeSet<_> = enumerate_a(2).unwrap().into_iter().collect();
        let expected: BTreeSet<_> = ["UDUD | 0,1,0,1,0", "UUDD | 0,1,2,1,0", "UUDD | 0,0,1,0,0"]
            .into_iter()
            .map(l)
            .collect();
        assert_eq!(a2, expected);
        assert_eq!(enumerate_b(1).unwrap(), vec![l("UD | 1,2,1")]);
        assert!(enumerate_b(0).unwrap().is_empty());
        assert_eq!(enumerate_c(3).unwrap().len(), 5);
        assert!(enumerate_a(MAX_DECOMP_N + 1).is_err());
    }

    #[test]
    fn enumerators_match_brute_force() {
        for n in 0..=4 {
            let a: BTreeSet<_> = enumerate_a(n).unwrap().into_iter().collect();
            assert_eq!(a, brute(n, is_member_a), "A_{n}");
            let b: BTreeSet<_> = enumerate_b(n).unwrap().into_iter().collect();
            assert_eq!(b, brute(n, is_member_b), "B_{n}");
        }
    }

    #[test]
    fn l3_is_the_bounded_part_of_lx312() {
        for n in 0..=7 {
            let bounded: Vec<_> = enumerate_lx312(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.max_label() <= 3)
                .collect();
            assert_eq!(enumerate_l3(n).unwrap(), bounded);
        }
    }

    #[test]
    fn returns_decomposition_lands_in_a_and_inverts() {
        for n in 1..=7 {
            for lp in enumerate_l3(n).unwrap() {
                let blocks = returns_decomposition(&lp).unwrap();
                for b in &blocks {
                    assert!(is_member_a(b));
                    assert_eq!(b.labels()[0], 0);
                }
                assert_eq!(compose_returns(&blocks), lp);
            }
        }
    }

    #[test]
    fn return_blocks_are_exactly_a() {
        // every A member arises as a single-return block of L^{<=3}
        for n in 0..=6 {
            let from_l3: BTreeSet<_> = enumerate_l3(n + 1)
                .unwrap()
                .into_iter()
                .filter(|l| l.axis_vertices().len() == 2)
                .map(|l| returns_decomposition(&l).unwrap().remove(0))
                .collect();
            let a: BTreeSet<_> = enumerate_a(n).unwrap().into_iter().collect();
            assert_eq!(from_l3, a, "n = {n}");
        }
    }

    #[test]
    fn phi_is_a_bijection() {
        for n in 1..=6 {
            let mut image = BTreeSet::new();
            let mut pairs = 0;
            for k in 0..n {
                for a in enumerate_a(k).unwrap() {
                    for c in enumerate_c(n - k).unwrap() {
                        let b = phi(&a, &c).unwrap();
                        assert!(is_member_b(&b));
                        assert_eq!(b.semilength(), n);
                        assert_eq!(phi_inverse(&b).unwrap(), (a.clone(), c.clone()));
                        image.insert(b);
                        pairs += 1;
                    }
                }
            }
            assert_eq!(image.len(), pairs, "phi not injective at n = {n}");
            let b_n: BTreeSet<_> = enumerate_b(n).unwrap().into_iter().collect();
            assert_eq!(image, b_n, "phi not onto B_{n}");
            for b in &b_n {
                let (a, c) = phi_inverse(b).unwrap();
                assert_eq!(&phi(&a, &c).unwrap(), b);
            }
        }
    }

    #[test]
    fn decomposition_count_identity() {
        // |L^{<=3}_n| = sum over compositions of n of prod |A_{k-1}|
        let a: Vec<usize> = (0..=7).map(|k| enumerate_a(k).unwrap().len()).collect();
        let mut total = [0usize; 8];
        total[0] = 1;
        for n in 1..=7 {
            total[n] = (1..=n).map(|k| a[k - 1] * total[n - k]).sum();
        }
        for n in 0..=7 {
            assert_eq!(enumerate_l3(n).unwrap().len(), total[n], "n = {n}");
        }
    }
}
