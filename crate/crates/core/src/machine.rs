//! Two stacks in series: push (`s`) moves the next input entry onto the
//! first stack, transfer (`t`) moves the top of the first stack onto the
//! second, pop (`p`) moves the top of the second stack to the output.
//!
//! Greedy words for increasing stacks obey five rules:
//! (W1) equal numbers of `s`, `t`, `p`; (W2) every prefix has
//! `#s >= #t >= #p`; (W3) no factor `t u t` with `u` valid (possibly empty);
//! (W4) no factor `sp`; (W5) no factor `u t` with `u` valid and nonempty.
//! "Valid" means (W1) and (W2).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyck::{DyckPath, LabeledDyckPath, Step};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest permutation length / semilength accepted by the exhaustive
/// searches in this module.
pub const MAX_MACHINE_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// push
    S,
    /// transfer
    T,
    /// pop
    P,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::S => 's',
            Letter::T => 't',
            Letter::P => 'p',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StackWord(Vec<Letter>);

impl StackWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        StackWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for StackWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl FromStr for StackWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                's' => Ok(Letter::S),
                't' => Ok(Letter::T),
                'p' => Ok(Letter::P),
                _ => Err(Error::Parse(format!("bad stack letter {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StackWord)
    }
}

impl TryFrom<String> for StackWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<StackWord> for String {
    fn from(w: StackWord) -> Self {
        w.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("push with empty input")]
    EmptyInput,
    #[error("transfer from empty first stack")]
    EmptyFirstStack,
    #[error("pop from empty second stack")]
    EmptySecondStack,
    #[error("{value} placed on {top} breaks the increasing order of stack {stack}")]
    NotIncreasing { stack: u8, value: usize, top: usize },
}

/// Machine contents. Stacks are listed top first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MachineState {
    pub input: Vec<usize>,
    pub stack1: Vec<usize>,
    pub stack2: Vec<usize>,
    pub output: Vec<usize>,
}

impl MachineState {
    pub fn new(perm: &Permutation) -> Self {
        MachineState {
            input: perm.entries().to_vec(),
            stack1: Vec::new(),
            stack2: Vec::new(),
            output: Vec::new(),
        }
    }

    /// Everything has reached the output, in increasing order.
    pub fn is_sorted(&self) -> bool {
        self.input.is_empty()
            && self.stack1.is_empty()
            && self.stack2.is_empty()
            && self.output.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Apply one letter.
    pub fn apply(&mut self, letter: Letter, enforce_increasing: bool) -> std::result::Result<(), MoveError> {
        match letter {
            Letter::S => {
                let &v = self.input.first().ok_or(MoveError::EmptyInput)?;
                check_top(1, v, self.stack1.first(), enforce_increasing)?;
                self.input.remove(0);
                self.stack1.insert(0, v);
            }
            Letter::T => {
                let &v = self.stack1.first().ok_or(MoveError::EmptyFirstStack)?;
                check_top(2, v, self.stack2.first(), enforce_increasing)?;
                self.stack1.remove(0);
                self.stack2.insert(0, v);
            }
            Letter::P => {
                if self.stack2.is_empty() {
                    return Err(MoveError::EmptySecondStack);
                }
                let v = self.stack2.remove(0);
                self.output.push(v);
            }
        }
        Ok(())
    }
}

fn check_top(stack: u8, value: usize, top: Option<&usize>, enforce: bool) -> std::result::Result<(), MoveError> {
    match top {
        Some(&top) if enforce && value > top => Err(MoveError::NotIncreasing { stack, value, top }),
        _ => Ok(()),
    }
}

impl fmt::Display for MachineState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "input=[{}] stack1=[{}] stack2=[{}] output=[{}]",
            show(&self.input),
            show(&self.stack1),
            show(&self.stack2),
            show(&self.output)
        )
    }
}

/// One entry of an execution trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: char,
    pub state: MachineState,
}

/// Run `word` on `perm` from the initial state.
pub fn execute(word: &StackWord, perm: &Permutation, enforce_increasing: bool) -> Result<MachineState> {
    let mut state = MachineState::new(perm);
    for (position, &letter) in word.letters().iter().enumerate() {
        state
            .apply(letter, enforce_increasing)
            .map_err(|reason| Error::Machine { position, reason })?;
    }
    Ok(state)
}

/// Like [`execute`], recording the state after every letter.
pub fn execute_traced(word: &StackWord, perm: &Permutation, enforce_increasing: bool) -> Result<Vec<TraceStep>> {
    let mut state = MachineState::new(perm);
    let mut trace = Vec::with_capacity(word.len());
    for (position, &letter) in word.letters().iter().enumerate() {
        state
            .apply(letter, enforce_increasing)
            .map_err(|reason| Error::Machine { position, reason })?;
        trace.push(TraceStep {
            op: letter.as_char(),
            state: state.clone(),
        });
    }
    Ok(trace)
}

/// Running differences `#s - #t` and `#t - #p` over the prefixes of a word.
fn prefix_differences(letters: &[Letter]) -> (Vec<isize>, Vec<isize>) {
    let mut st = Vec::with_capacity(letters.len() + 1);
    let mut tp = Vec::with_capacity(letters.len() + 1);
    let (mut a, mut b) = (0isize, 0isize);
    st.push(a);
    tp.push(b);
    for l in letters {
        match l {
            Letter::S => a += 1,
            Letter::T => {
                a -= 1;
                b += 1
            }
            Letter::P => b -= 1,
        }
        st.push(a);
        tp.push(b);
    }
    (st, tp)
}

/// (W1) and (W2).
pub fn is_valid_word(w: &StackWord) -> bool {
    let (st, tp) = prefix_differences(w.letters());
    st.iter().all(|&d| d >= 0) && tp.iter().all(|&d| d >= 0) && st.last() == Some(&0) && tp.last() == Some(&0)
}

/// Starts `a` such that `letters[a..e]` is a valid word, with `e` fixed.
/// `st`/`tp` are the prefix differences of `letters`.
fn valid_factor_starts<'a>(st: &'a [isize], tp: &'a [isize], e: usize) -> impl Iterator<Item = usize> + 'a {
    let (mut min_st, mut min_tp) = (st[e], tp[e]);
    (0..=e).rev().filter(move |&a| {
        min_st = min_st.min(st[a]);
        min_tp = min_tp.min(tp[a]);
        st[a] == st[e] && tp[a] == tp[e] && min_st >= st[a] && min_tp >= tp[a]
    })
}

/// Which of the factor rules a factor ending at letter `e` breaks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct FactorViolations {
    w3: bool,
    w4: bool,
    w5: bool,
}

fn violations_ending_at(letters: &[Letter], st: &[isize], tp: &[isize], e: usize) -> FactorViolations {
    let mut v = FactorViolations::default();
    if e >= 1 && letters[e - 1] == Letter::S && letters[e] == Letter::P {
        v.w4 = true;
    }
    if letters[e] == Letter::T {
        for a in valid_factor_starts(st, tp, e) {
            if a < e {
                v.w5 = true;
            }
            if a >= 1 && letters[a - 1] == Letter::T {
                v.w3 = true;
            }
        }
    }
    v
}

fn scan_factors(w: &StackWord) -> FactorViolations {
    let letters = w.letters();
    let (st, tp) = prefix_differences(letters);
    let mut all = FactorViolations::default();
    for e in 0..letters.len() {
        let v = violations_ending_at(letters, &st, &tp, e);
        all.w3 |= v.w3;
        all.w4 |= v.w4;
        all.w5 |= v.w5;
    }
    all
}

/// A factor `t u t` with `u` valid, possibly empty.
pub fn has_w3_factor(w: &StackWord) -> bool {
    scan_factors(w).w3
}

/// An `sp` factor.
pub fn has_sp_factor(w: &StackWord) -> bool {
    scan_factors(w).w4
}

/// A factor `u t` with `u` valid and nonempty.
pub fn has_w5_factor(w: &StackWord) -> bool {
    scan_factors(w).w5
}

pub fn has_tt_factor(w: &StackWord) -> bool {
    w.letters().windows(2).any(|p| p == [Letter::T, Letter::T])
}

/// (W1) through (W5).
pub fn is_greedy_increasing_word(w: &StackWord) -> bool {
    if !is_valid_word(w) {
        return false;
    }
    let v = scan_factors(w);
    !(v.w3 || v.w4 || v.w5)
}

/// Map a member of L×(312) to its greedy word: a positive up step becomes
/// `st`, a neutral up step `s`, a neutral down step `pt`, a negative down
/// step `p`.
pub fn phi_big(l: &LabeledDyckPath) -> Result<StackWord> {
    if !l.is_lx312() {
        return Err(Error::Precondition(format!("{l} is not in L×(312)")));
    }
    let labels = l.labels();
    let mut out = Vec::with_capacity(3 * l.semilength());
    for (j, step) in l.path().steps().iter().enumerate() {
        let rises = labels[j + 1] > labels[j];
        let falls = labels[j + 1] < labels[j];
        match step {
            Step::U if rises => out.extend([Letter::S, Letter::T]),
            Step::U => out.push(Letter::S),
            Step::D if falls => out.push(Letter::P),
            Step::D => out.extend([Letter::P, Letter::T]),
        }
    }
    Ok(StackWord(out))
}

/// Pushes become up steps, pops down steps; each vertex is labeled with the
/// size of the second stack just before the next push or pop.
pub fn phi_big_inverse(w: &StackWord) -> Result<LabeledDyckPath> {
    if !is_greedy_increasing_word(w) {
        return Err(Error::Precondition(format!(
            "{w} is not a greedy increasing stack word"
        )));
    }
    let mut steps = Vec::with_capacity(2 * w.len() / 3);
    let mut labels = Vec::with_capacity(steps.capacity() + 1);
    let mut second = 0usize;
    for &letter in w.letters() {
        match letter {
            Letter::T => second += 1,
            Letter::S | Letter::P => {
                labels.push(second);
                if letter == Letter::S {
                    steps.push(Step::U);
                } else {
                    steps.push(Step::D);
                    second -= 1;
                }
            }
        }
    }
    labels.push(second);
    let path = DyckPath::new(steps)?;
    LabeledDyckPath::new(path, labels)
}

/// The permutation that `w` sorts: entries are pushed in input order and the
/// `k`-th entry to be popped is given the value `k`.
pub fn word_to_permutation(w: &StackWord) -> Result<Permutation> {
    if !is_valid_word(w) {
        return Err(Error::Precondition(format!("{w} is not a valid stack word")));
    }
    let n = w.len() / 3;
    let mut values = vec![0; n];
    let (mut next_entry, mut popped) = (0usize, 0usize);
    let (mut first, mut second): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
    for &letter in w.letters() {
        match letter {
            Letter::S => {
                first.push(next_entry);
                next_entry += 1;
            }
            Letter::T => second.push(first.pop().unwrap()),
            Letter::P => {
                popped += 1;
                values[second.pop().unwrap()] = popped;
            }
        }
    }
    Permutation::new(values)
}

fn check_machine_limit(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_MACHINE_N {
        return Err(Error::TooLarge {
            what,
            n,
            limit: MAX_MACHINE_N,
        });
    }
    Ok(())
}

/// Search state: next input index plus both stacks (bottom first).
#[derive(Clone, PartialEq, Eq, Hash)]
struct SearchState {
    next: usize,
    first: Vec<usize>,
    second: Vec<usize>,
}

impl SearchState {
    fn output_len(&self) -> usize {
        self.next - self.first.len() - self.second.len()
    }

    /// Legal moves for increasing stacks that can still lead to sorted
    /// output: pops only release the next value due.
    fn moves(&self, input: &[usize]) -> impl Iterator<Item = Letter> {
        let push = self.next < input.len() && self.first.last().is_none_or(|&top| input[self.next] < top);
        let transfer = match (self.first.last(), self.second.last()) {
            (Some(_), None) => true,
            (Some(a), Some(b)) => a < b,
            _ => false,
        };
        let pop = self.second.last() == Some(&(self.output_len() + 1));
        [(push, Letter::S), (transfer, Letter::T), (pop, Letter::P)]
            .into_iter()
            .filter_map(|(ok, l)| ok.then_some(l))
    }

    fn apply(&mut self, letter: Letter, input: &[usize]) {
        match letter {
            Letter::S => {
                self.first.push(input[self.next]);
                self.next += 1;
            }
            Letter::T => {
                let v = self.first.pop().unwrap();
                self.second.push(v);
            }
            Letter::P => {
                self.second.pop();
            }
        }
    }

    fn undo(&mut self, letter: Letter) {
        match letter {
            Letter::S => {
                self.first.pop();
                self.next -= 1;
            }
            Letter::T => {
                let v = self.second.pop().unwrap();
                self.first.push(v);
            }
            Letter::P => {
                // the value popped last is the current output length
                let v = self.output_len();
                self.second.push(v);
            }
        }
    }

    fn done(&self, n: usize) -> bool {
        self.next == n && self.first.is_empty() && self.second.is_empty()
    }
}

/// Whether two increasing stacks in series can sort `perm`, by depth-first
/// search over legal moves with memoization of dead states.
pub fn sortable(perm: &Permutation) -> Result<bool> {
    check_machine_limit("sortable", perm.len())?;
    fn dfs(state: &mut SearchState, input: &[usize], dead: &mut HashSet<SearchState>) -> bool {
        if state.done(input.len()) {
            return true;
        }
        if dead.contains(state) {
            return false;
        }
        let moves: Vec<Letter> = state.moves(input).collect();
        for m in moves {
            state.apply(m, input);
            let ok = dfs(state, input, dead);
            state.undo(m);
            if ok {
                return true;
            }
        }
        dead.insert(state.clone());
        false
    }
    let mut state = SearchState {
        next: 0,
        first: Vec::new(),
        second: Vec::new(),
    };
    Ok(dfs(&mut state, perm.entries(), &mut HashSet::new()))
}

/// The unique word satisfying (W1)-(W5) that sorts `perm` with increasing
/// stacks, or `None` when `perm` is not sortable.
pub fn greedy_word(perm: &Permutation) -> Result<Option<StackWord>> {
    check_machine_limit("greedy_word", perm.len())?;
    fn dfs(state: &mut SearchState, input: &[usize], word: &mut Vec<Letter>, found: &mut Vec<StackWord>) {
        if state.done(input.len()) {
            found.push(StackWord(word.clone()));
            return;
        }
        let moves: Vec<Letter> = state.moves(input).collect();
        for m in moves {
            word.push(m);
            if !violates_at_end(word) {
                state.apply(m, input);
                dfs(state, input, word, found);
                state.undo(m);
            }
            word.pop();
        }
    }
    let mut state = SearchState {
        next: 0,
        first: Vec::new(),
        second: Vec::new(),
    };
    let mut found = Vec::new();
    dfs(&mut state, perm.entries(), &mut Vec::new(), &mut found);
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        k => Err(Error::AmbiguousGreedyWord(k)),
    }
}

/// Whether a (W3)-(W5) factor ends at the last letter.
fn violates_at_end(letters: &[Letter]) -> bool {
    let e = letters.len() - 1;
    let (st, tp) = prefix_differences(letters);
    let v = violations_ending_at(letters, &st, &tp, e);
    v.w3 || v.w4 || v.w5
}

/// Every word of length `3n` satisfying (W1)-(W5), in lexicographic order
/// `s < t < p`, found by extending prefixes that keep (W2) and contain no
/// forbidden factor.
pub fn enumerate_greedy_words(n: usize) -> Result<Vec<StackWord>> {
    check_machine_limit("enumerate_greedy_words", n)?;
    fn go(n: usize, counts: [usize; 3], word: &mut Vec<Letter>, out: &mut Vec<StackWord>) {
        let [s, t, p] = counts;
        if p == n {
            out.push(StackWord(word.clone()));
            return;
        }
        let options = [
            (s < n, Letter::S, [s + 1, t, p]),
            (t < s, Letter::T, [s, t + 1, p]),
            (p < t, Letter::P, [s, t, p + 1]),
        ];
        for (ok, letter, next) in options {
            if !ok {
                continue;
            }
            word.push(letter);
            if !violates_at_end(word) {
                go(n, next, word, out);
            }
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(n, [0, 0, 0], &mut Vec::with_capacity(3 * n), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_lx312;
    use crate::perm::all_permutations;

    fn w(s: &str) -> StackWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn example() -> LabeledDyckPath {
        "UUUDDUUDDD | 0,1,1,2,1,1,1,2,1,1,0".parse().unwrap()
    }

    const EXAMPLE_WORD: &str = "stsstpptsstpptp";

    /// Every word over {s,t,p} with n of each letter.
    fn all_balanced_words(n: usize) -> Vec<StackWord> {
        fn go(c: [usize; 3], n: usize, cur: &mut Vec<Letter>, out: &mut Vec<StackWord>) {
            if c == [n, n, n] {
                out.push(StackWord(cur.clone()));
                return;
            }
            for (i, l) in [Letter::S, Letter::T, Letter::P].into_iter().enumerate() {
                if c[i] < n {
                    let mut d = c;
                    d[i] += 1;
                    cur.push(l);
                    go(d, n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go([0; 3], n, &mut Vec::new(), &mut out);
        out
    }

    /// Literal factor rules: try every factor and test the enclosed word.
    fn greedy_literal(word: &StackWord) -> bool {
        let l = word.letters();
        if !is_valid_word(word) {
            return false;
        }
        for a in 0..l.len() {
            for b in a..=l.len() {
                let u = StackWord(l[a..b].to_vec());
                let valid_u = is_valid_word(&u);
                // t u t
                if valid_u && a >= 1 && b < l.len() && l[a - 1] == Letter::T && l[b] == Letter::T {
                    return false;
                }
                // u t, u nonempty
                if valid_u && b > a && b < l.len() && l[b] == Letter::T {
                    return false;
                }
            }
        }
        !has_sp_factor(word)
    }

    #[test]
    fn execute_examples() {
        let out = execute(&w(EXAMPLE_WORD), &p("24153"), true).unwrap();
        assert!(out.is_sorted());
        assert_eq!(out.output, vec![1, 2, 3, 4, 5]);
        assert!(execute(&w("stp"), &p("1"), true).unwrap().is_sorted());
        assert_eq!(
            execute(&w("ts"), &p("12"), false),
            Err(Error::Machine {
                position: 0,
                reason: MoveError::EmptyFirstStack
            })
        );
        assert_eq!(
            execute(&w("ss"), &p("12"), true),
            Err(Error::Machine {
                position: 1,
                reason: MoveError::NotIncreasing {
                    stack: 1,
                    value: 2,
                    top: 1
                }
            })
        );
        assert!(execute(&w("ss"), &p("12"), false).is_ok());
        assert!(matches!(
            execute(&w("p"), &p("1"), false),
            Err(Error::Machine {
                reason: MoveError::EmptySecondStack,
                ..
            })
        ));
        assert!(matches!(
            execute(&w("stps"), &p("1"), false),
            Err(Error::Machine {
                position: 3,
                reason: MoveError::EmptyInput
            })
        ));
    }

    #[test]
    fn trace_matches_example_states() {
        let trace = execute_traced(&w(EXAMPLE_WORD), &p("24153"), true).unwrap();
        assert_eq!(trace.len(), 15);
        // after "sts": 2 on the second stack, 4 on the first
        assert_eq!(trace[2].state.stack1, vec![4]);
        assert_eq!(trace[2].state.stack2, vec![2]);
        // after "stsst": first stack holds 4, second holds 1 over 2
        assert_eq!(trace[4].state.stack1, vec![4]);
        assert_eq!(trace[4].state.stack2, vec![1, 2]);
        assert_eq!(trace[14].state.output, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_word(&w("stp")));
        assert!(!is_valid_word(&w("tsp")));
        assert!(is_valid_word(&w(EXAMPLE_WORD)));
        assert!(!is_valid_word(&w("stpp")));
        assert!(is_valid_word(&w("")));
    }

    #[test]
    fn greedy_examples() {
        assert!(is_greedy_increasing_word(&w(EXAMPLE_WORD)));
        assert!(is_greedy_increasing_word(&w("stpstp")));
        assert!(!is_greedy_increasing_word(&w("ssptp")));
        assert!(has_sp_factor(&w("ssptp")));
        assert!(has_w3_factor(&w("sstt")));
        assert!(has_w5_factor(&w("stptp")));
        assert!(!is_greedy_increasing_word(&w("ssttpp")));
    }

    #[test]
    fn factor_scan_agrees_with_literal_rules() {
        for n in 0..=3 {
            for word in all_balanced_words(n) {
                assert_eq!(is_greedy_increasing_word(&word), greedy_literal(&word), "{word}");
            }
        }
    }

    #[test]
    fn phi_big_examples() {
        assert_eq!(phi_big(&example()).unwrap(), w(EXAMPLE_WORD));
        assert_eq!(phi_big(&"UD | 0,1,0".parse().unwrap()).unwrap(), w("stp"));
        assert_eq!(phi_big(&"UDUD | 0,1,0,1,0".parse().unwrap()).unwrap(), w("stpstp"));
        assert!(phi_big(&"UD | 0,0,0".parse().unwrap()).is_err());
    }

    #[test]
    fn phi_big_inverse_examples() {
        assert_eq!(phi_big_inverse(&w(EXAMPLE_WORD)).unwrap(), example());
        assert_eq!(phi_big_inverse(&w("stp")).unwrap(), "UD | 0,1,0".parse().unwrap());
        assert_eq!(
            phi_big_inverse(&w("stpstp")).unwrap(),
            "UDUD | 0,1,0,1,0".parse().unwrap()
        );
        assert!(phi_big_inverse(&w("ssttpp")).is_err());
    }

    #[test]
    fn word_to_permutation_examples() {
        assert_eq!(word_to_permutation(&w(EXAMPLE_WORD)).unwrap(), p("24153"));
        assert_eq!(word_to_permutation(&w("stp")).unwrap(), p("1"));
        // both entries move to the second stack, the first pushed ends on top
        assert_eq!(word_to_permutation(&w("ssttpp")).unwrap(), p("12"));
        assert!(execute(&w("ssttpp"), &p("12"), false).unwrap().is_sorted());
        assert!(word_to_permutation(&w("tsp")).is_err());
    }

    #[test]
    fn sortable_examples() {
        assert!(sortable(&p("24153")).unwrap());
        assert!(sortable(&p("12345")).unwrap());
        let count = all_permutations(4).filter(|q| sortable(q).unwrap()).count();
        assert_eq!(count, 23);
        assert!(sortable(&Permutation::identity(10)).is_err());
    }

    #[test]
    fn greedy_word_examples() {
        assert_eq!(greedy_word(&p("24153")).unwrap(), Some(w(EXAMPLE_WORD)));
        assert_eq!(greedy_word(&p("1")).unwrap(), Some(w("stp")));
        assert_eq!(greedy_word(&p("12")).unwrap(), Some(w("stpstp")));
        assert_eq!(greedy_word(&Permutation::empty()).unwrap(), Some(w("")));
    }

    #[test]
    fn greedy_word_exists_iff_sortable() {
        for n in 1..=6 {
            for q in all_permutations(n) {
                let g = greedy_word(&q).unwrap();
                assert_eq!(g.is_some(), sortable(&q).unwrap(), "{q}");
                if let Some(word) = g {
                    assert!(is_greedy_increasing_word(&word));
                    assert_eq!(word_to_permutation(&word).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn enumerated_words_are_greedy() {
        for n in 0..=5 {
            let words = enumerate_greedy_words(n).unwrap();
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            for word in &words {
                assert!(is_greedy_increasing_word(word));
            }
        }
        for n in 0..=3 {
            let brute: Vec<_> = all_balanced_words(n).into_iter().filter(greedy_literal).collect();
            let mut fast = enumerate_greedy_words(n).unwrap();
            fast.sort();
            let mut brute = brute;
            brute.sort();
            assert_eq!(fast, brute);
        }
    }

    #[test]
    fn w5_without_tt_implies_w3() {
        for n in 0..=4 {
            for word in all_balanced_words(n) {
                if is_valid_word(&word) && !has_w5_factor(&word) && !has_tt_factor(&word) {
                    assert!(!has_w3_factor(&word), "{word}");
                }
            }
        }
    }

    #[test]
    fn phi_big_on_lx312() {
        for n in 1..=6 {
            for l in enumerate_lx312(n).unwrap() {
                let word = phi_big(&l).unwrap();
                assert_eq!(word.len(), 3 * n);
                assert!(is_greedy_increasing_word(&word));
                assert!(!has_tt_factor(&word) && !has_sp_factor(&word));
                assert_eq!(phi_big_inverse(&word).unwrap(), l);
                let q = word_to_permutation(&word).unwrap();
                let trace = execute_traced(&word, &q, true).unwrap();
                assert!(trace.last().unwrap().state.is_sorted());
                // stack2 size before each push or pop equals the vertex label
                let mut vertex = 0;
                let mut size = 0;
                for (step, letter) in trace.iter().zip(word.letters()) {
                    if *letter != Letter::T {
                        assert_eq!(size, l.labels()[vertex], "{l}");
                        vertex += 1;
                    }
                    size = step.state.stack2.len();
                }
                assert_eq!(size, l.labels()[vertex]);
            }
        }
    }

    #[test]
    fn json_formats() {
        let word = w(EXAMPLE_WORD);
        assert_eq!(serde_json::to_string(&word).unwrap(), format!("\"{EXAMPLE_WORD}\""));
        let trace = execute_traced(&w("stp"), &p("1"), true).unwrap();
        let json = serde_json::to_string(&trace).unwrap();
        assert_eq!(
            json,
            r#"[{"op":"s","state":{"input":[],"stack1":[1],"stack2":[],"output":[]}},{"op":"t","state":{"input":[],"stack1":[],"stack2":[1],"output":[]}},{"op":"p","state":{"input":[],"stack1":[],"stack2":[],"output":[1]}}]"#
        );
        assert!("stx".parse::<StackWord>().is_err());
    }
}
