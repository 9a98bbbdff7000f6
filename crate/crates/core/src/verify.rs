//! Exhaustive cross-checks of the bijections and generating functions. Each
//! check walks `n = 1, 2, ...` in order and stops at the first failure, so a
//! reported counterexample is one of minimal size.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::decomp::{enumerate_a, enumerate_b, enumerate_c, enumerate_l3, phi, phi_inverse, returns_decomposition};
use crate::dyck::{enumerate_lx312, pi_map, LabeledDyckPath};
use crate::error::{Error, Result};
use crate::machine::{
    enumerate_greedy_words, greedy_word, has_sp_factor, has_tt_factor, has_w3_factor, is_greedy_increasing_word,
    phi_big, phi_big_inverse, sortable, word_to_permutation,
};
use crate::perm::{all_permutations, enumerate_avoiders, Permutation};
use crate::rook::RookPlacement;
use crate::series::{catalan, gf_a, gf_av1342, gf_av3124_1234, gf_b, PowerSeries};

/// Largest size any suite accepts.
pub const MAX_VERIFY_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    PiChi,
    Phi,
    Words,
    Series,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "pi-chi" => Suite::PiChi,
            "phi" => Suite::Phi,
            "words" => Suite::Words,
            "series" => Suite::Series,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Outcome of one check: a summary on success, a counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub result: std::result::Result<String, String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            Ok(summary) => write!(f, "PASS {}: {summary}", self.name),
            Err(counter) => write!(f, "FAIL {}: {counter}", self.name),
        }
    }
}

type Check = std::result::Result<String, String>;

fn outcome(name: &'static str, f: impl FnOnce() -> Check) -> CheckOutcome {
    CheckOutcome { name, result: f() }
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

/// Run a suite up to size `max_n`.
pub fn run(suite: Suite, max_n: usize) -> Result<Vec<CheckOutcome>> {
    if max_n > MAX_VERIFY_N {
        return Err(Error::TooLarge {
            what: "verify",
            n: max_n,
            limit: MAX_VERIFY_N,
        });
    }
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::PiChi) {
        out.extend(pi_chi_checks(max_n));
    }
    if matches!(suite, Suite::All | Suite::Phi) {
        out.extend(phi_checks(max_n));
    }
    if matches!(suite, Suite::All | Suite::Words) {
        out.extend(word_checks(max_n));
    }
    if matches!(suite, Suite::All | Suite::Series) {
        out.extend(series_checks(max_n));
    }
    Ok(out)
}

fn pi_chi_checks(max_n: usize) -> Vec<CheckOutcome> {
    let (p312, p3124, p1234) = (perm("312"), perm("3124"), perm("1234"));
    vec![
        outcome("chi restricts Av(3124) to 312-avoiding placements", || {
            for n in 1..=max_n {
                for q in all_permutations(n) {
                    let frp_avoids = !RookPlacement::chi(&q).unwrap().contains(&p312);
                    if frp_avoids != !q.contains(&p3124) {
                        return Err(format!("{q}: placement avoids 312 = {frp_avoids}"));
                    }
                }
            }
            Ok(format!("S_1..S_{max_n}"))
        }),
        outcome("chi round trip", || {
            for n in 1..=max_n {
                for q in all_permutations(n) {
                    let rp = RookPlacement::chi(&q).unwrap();
                    if rp.read_permutation() != q || !rp.is_board_minimal() {
                        return Err(q.to_string());
                    }
                }
            }
            Ok(format!("S_1..S_{max_n}"))
        }),
        outcome("Pi∘chi is a bijection Av(3124) -> L×(312)", || {
            let mut counts = Vec::new();
            for n in 1..=max_n.min(7) {
                let class = enumerate_avoiders(n, std::slice::from_ref(&p3124)).unwrap();
                let mut seen = BTreeMap::new();
                for q in &class {
                    let l = pi_map(&RookPlacement::chi(q).unwrap());
                    if !l.is_lx312() {
                        return Err(format!("{q} maps to {l}, outside L×(312)"));
                    }
                    if let Some(prev) = seen.insert(l.clone(), q.clone()) {
                        return Err(format!("{prev} and {q} both map to {l}"));
                    }
                }
                let target: BTreeSet<_> = enumerate_lx312(n).unwrap().into_iter().collect();
                if let Some(missed) = target.iter().find(|l| !seen.contains_key(*l)) {
                    return Err(format!("{missed} has no preimage"));
                }
                counts.push(class.len());
            }
            Ok(format!("counts {counts:?}"))
        }),
        outcome("Av(3124,1234) maps onto labels <= 3", || {
            for n in 1..=max_n.min(7) {
                let image: BTreeSet<_> = enumerate_avoiders(n, &[p3124.clone(), p1234.clone()])
                    .unwrap()
                    .iter()
                    .map(|q| pi_map(&RookPlacement::chi(q).unwrap()))
                    .collect();
                let bounded: BTreeSet<_> = enumerate_lx312(n)
                    .unwrap()
                    .into_iter()
                    .filter(|l| l.max_label() <= 3)
                    .collect();
                if let Some(d) = image.symmetric_difference(&bounded).next() {
                    return Err(format!("n = {n}: {d}"));
                }
            }
            Ok(format!("n <= {}", max_n.min(7)))
        }),
        outcome("max label equals longest increasing subsequence", || {
            for n in 1..=max_n.min(7) {
                for q in all_permutations(n) {
                    let l = pi_map(&RookPlacement::chi(&q).unwrap());
                    if l.max_label() != q.lis() {
                        return Err(format!("{q}: max label {} vs lis {}", l.max_label(), q.lis()));
                    }
                }
            }
            Ok(format!("S_1..S_{}", max_n.min(7)))
        }),
    ]
}

fn phi_checks(max_n: usize) -> Vec<CheckOutcome> {
    let top = max_n.min(7);
    vec![
        outcome("returns decomposition lands in A", || {
            for n in 1..=top {
                for l in enumerate_l3(n).unwrap() {
                    let blocks = returns_decomposition(&l).map_err(|e| e.to_string())?;
                    if let Some(b) = blocks.iter().find(|b| !crate::decomp::is_member_a(b)) {
                        return Err(format!("{l}: block {b}"));
                    }
                }
            }
            Ok(format!("n <= {top}"))
        }),
        outcome("phi is a bijection A×C -> B", || {
            let top = max_n.min(6);
            for n in 1..=top {
                let mut image: BTreeMap<LabeledDyckPath, (LabeledDyckPath, LabeledDyckPath)> = BTreeMap::new();
                for k in 0..n {
                    for a in enumerate_a(k).unwrap() {
                        for c in enumerate_c(n - k).unwrap() {
                            let b = phi(&a, &c).map_err(|e| format!("phi({a}, {c}): {e}"))?;
                            match phi_inverse(&b) {
                                Ok(back) if back == (a.clone(), c.clone()) => {}
                                other => return Err(format!("phi_inverse({b}) = {other:?}, expected ({a}, {c})")),
                            }
                            if let Some(prev) = image.insert(b.clone(), (a.clone(), c.clone())) {
                                return Err(format!("{b} hit by {prev:?} and ({a}, {c})"));
                            }
                        }
                    }
                }
                let target = enumerate_b(n).unwrap();
                if let Some(b) = target.iter().find(|b| !image.contains_key(*b)) {
                    return Err(format!("{b} has no preimage"));
                }
                if target.len() != image.len() {
                    return Err(format!("n = {n}: image {} vs |B| {}", image.len(), target.len()));
                }
            }
            Ok(format!("n <= {top}"))
        }),
        outcome("|A_n|, |B_n| match C(xC) and A(C-1)", || {
            let a = gf_a(top);
            let b = gf_b(top);
            for n in 0..=top {
                let (ca, cb) = (enumerate_a(n).unwrap().len(), enumerate_b(n).unwrap().len());
                if BigInt::from(ca) != a.coeff(n).to_integer() || BigInt::from(cb) != b.coeff(n).to_integer() {
                    return Err(format!("n = {n}: |A| = {ca}, |B| = {cb}"));
                }
            }
            Ok(format!("n <= {top}"))
        }),
    ]
}

fn word_checks(max_n: usize) -> Vec<CheckOutcome> {
    let top = max_n.min(7);
    vec![
        outcome("Phi is a bijection L×(312) -> greedy words", || {
            let mut counts = Vec::new();
            for n in 1..=top {
                let mut image = BTreeSet::new();
                for l in enumerate_lx312(n).unwrap() {
                    let w = phi_big(&l).map_err(|e| e.to_string())?;
                    if !is_greedy_increasing_word(&w) || has_tt_factor(&w) || has_sp_factor(&w) {
                        return Err(format!("{l} -> {w} is not greedy"));
                    }
                    if phi_big_inverse(&w).as_ref() != Ok(&l) {
                        return Err(format!("{l} -> {w} does not invert"));
                    }
                    if !image.insert(w.clone()) {
                        return Err(format!("{w} hit twice"));
                    }
                }
                let words: BTreeSet<_> = enumerate_greedy_words(n).unwrap().into_iter().collect();
                if let Some(d) = words.symmetric_difference(&image).next() {
                    return Err(format!("n = {n}: {d}"));
                }
                for w in &words {
                    if has_w3_factor(w) {
                        return Err(format!("{w} breaks (W3)"));
                    }
                }
                counts.push(words.len());
            }
            Ok(format!("counts {counts:?}"))
        }),
        outcome("greedy words sort exactly the sortable permutations", || {
            let mut counts = Vec::new();
            for n in 1..=top {
                let mut decoded = BTreeSet::new();
                for w in enumerate_greedy_words(n).unwrap() {
                    let q = word_to_permutation(&w).map_err(|e| e.to_string())?;
                    match crate::machine::execute(&w, &q, true) {
                        Ok(state) if state.is_sorted() => {}
                        other => return Err(format!("{w} fails on {q}: {other:?}")),
                    }
                    decoded.insert(q);
                }
                let sortable_n: BTreeSet<_> = all_permutations(n).filter(|q| sortable(q).unwrap()).collect();
                if let Some(d) = decoded.symmetric_difference(&sortable_n).next() {
                    return Err(format!("n = {n}: {d}"));
                }
                let av1342 = enumerate_avoiders(n, &[perm("1342")]).unwrap().len();
                if sortable_n.len() != av1342 {
                    return Err(format!(
                        "n = {n}: {} sortable vs {av1342} in Av(1342)",
                        sortable_n.len()
                    ));
                }
                counts.push(sortable_n.len());
            }
            Ok(format!("counts {counts:?}"))
        }),
        outcome("greedy_word agrees with Phi∘Pi∘chi", || {
            for n in 1..=top.min(6) {
                let via_chain: BTreeSet<_> = enumerate_avoiders(n, &[perm("3124")])
                    .unwrap()
                    .iter()
                    .map(|q| phi_big(&pi_map(&RookPlacement::chi(q).unwrap())).unwrap())
                    .collect();
                let mut via_search = BTreeSet::new();
                for q in all_permutations(n) {
                    match greedy_word(&q) {
                        Ok(Some(w)) => {
                            via_search.insert(w);
                        }
                        Ok(None) => {}
                        Err(e) => return Err(format!("{q}: {e}")),
                    }
                }
                if let Some(d) = via_chain.symmetric_difference(&via_search).next() {
                    return Err(format!("n = {n}: {d}"));
                }
            }
            Ok(format!("n <= {}", top.min(6)))
        }),
    ]
}

fn series_checks(max_n: usize) -> Vec<CheckOutcome> {
    vec![
        outcome("C = 1 + x C^2", || {
            let n = 30;
            let c = catalan(n);
            let rhs = PowerSeries::one(n)
                .checked_add(&c.checked_mul(&c).unwrap().mul_x())
                .unwrap();
            (c == rhs)
                .then(|| format!("order {n}"))
                .ok_or_else(|| "identity fails".into())
        }),
        outcome("A = 1 + x (A + B) A and B = A (C - 1)", || {
            let n = 20;
            let (a, b) = (gf_a(n), gf_b(n));
            let rhs = PowerSeries::one(n)
                .checked_add(&a.checked_add(&b).unwrap().checked_mul(&a).unwrap().mul_x())
                .unwrap();
            (a == rhs)
                .then(|| format!("order {n}"))
                .ok_or_else(|| "identity fails".into())
        }),
        outcome("Av(3124), Av(1342) counts match the closed form", || {
            let g = gf_av1342(20).map_err(|e| e.to_string())?;
            for n in 1..=max_n {
                let a = enumerate_avoiders(n, &[perm("3124")]).unwrap().len();
                let b = enumerate_avoiders(n, &[perm("1342")]).unwrap().len();
                let expected = g.coeff(n).to_integer();
                if BigInt::from(a) != expected || BigInt::from(b) != expected {
                    return Err(format!("n = {n}: {a}, {b} vs {expected}"));
                }
            }
            Ok(format!("n <= {max_n}"))
        }),
        outcome("Av(3124,1234) counts match 1/(1 - x C(x C))", || {
            let top = (max_n + 2).min(10);
            let g = gf_av3124_1234(top).map_err(|e| e.to_string())?;
            for n in 0..=top {
                let a = enumerate_avoiders(n, &[perm("3124"), perm("1234")]).unwrap().len();
                if BigInt::from(a) != g.coeff(n).to_integer() {
                    return Err(format!("n = {n}: {a} vs {}", g.coeff(n)));
                }
            }
            Ok(format!("n <= {top}"))
        }),
    ]
}
