//! Finite Mealy automata over an `m`-symbol alphabet.
//!
//! A [`MealyMachine`] is non-initial: every state defines a transformation of
//! finite words. Products compose transformations right to left, so the state
//! `(f, g)` of `A × B` acts as `f ∘ g`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type State = usize;
pub type Symbol = usize;

/// Upper bounds for the exhaustive similarity search.
pub const SIMILARITY_MAX_ALPHABET: usize = 8;
pub const SIMILARITY_MAX_STATES: usize = 6;

/// Complete transition and output tables of a Mealy automaton.
#[derive(Clone, Debug)]
pub struct MealyMachine {
    alphabet: usize,
    transition: Vec<State>,
    output: Vec<Symbol>,
    labels: Option<Vec<String>>,
}

impl PartialEq for MealyMachine {
    /// Labels are cosmetic and do not take part in equality.
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.transition == other.transition
            && self.output == other.output
    }
}

impl Eq for MealyMachine {}

impl MealyMachine {
    /// Builds a machine from flat row-major tables indexed by `state * m + symbol`.
    pub fn new(alphabet: usize, transition: Vec<State>, output: Vec<Symbol>) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidTable("alphabet must be non-empty".into()));
        }
        if transition.len() != output.len() || !transition.len().is_multiple_of(alphabet) {
            return Err(Error::InvalidTable(format!(
                "tables of length {} and {} are not total over an alphabet of size {alphabet}",
                transition.len(),
                output.len()
            )));
        }
        let states = transition.len() / alphabet;
        if let Some(&t) = transition.iter().find(|&&t| t >= states) {
            return Err(Error::StateOutOfRange { state: t, states });
        }
        if let Some(&o) = output.iter().find(|&&o| o >= alphabet) {
            return Err(Error::SymbolOutOfRange {
                symbol: o,
                alphabet,
            });
        }
        Ok(Self {
            alphabet,
            transition,
            output,
            labels: None,
        })
    }

    /// Builds a machine from one row of `(target, output)` pairs per state.
    pub fn from_rows(alphabet: usize, rows: &[Vec<(State, Symbol)>]) -> Result<Self> {
        let mut transition = Vec::with_capacity(rows.len() * alphabet);
        let mut output = Vec::with_capacity(rows.len() * alphabet);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != alphabet {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {alphabet}",
                    row.len()
                )));
            }
            for &(t, o) in row {
                transition.push(t);
                output.push(o);
            }
        }
        Self::new(alphabet, transition, output)
    }

    /// The one-state identity machine.
    pub fn identity(alphabet: usize) -> Self {
        Self {
            alphabet,
            transition: vec![0; alphabet],
            output: (0..alphabet).collect(),
            labels: Some(vec!["e".into()]),
        }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.num_states() {
            return Err(Error::InvalidTable(format!(
                "{} labels for {} states",
                labels.len(),
                self.num_states()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.transition.len() / self.alphabet
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, state: State) -> String {
        match &self.labels {
            Some(l) => l[state].clone(),
            None => state.to_string(),
        }
    }

    /// Looks up a state by its label.
    pub fn state_by_label(&self, label: &str) -> Option<State> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn next(&self, state: State, symbol: Symbol) -> State {
        self.transition[state * self.alphabet + symbol]
    }

    #[inline]
    pub fn out(&self, state: State, symbol: Symbol) -> Symbol {
        self.output[state * self.alphabet + symbol]
    }

    pub fn output_row(&self, state: State) -> &[Symbol] {
        &self.output[state * self.alphabet..(state + 1) * self.alphabet]
    }

    pub fn transition_row(&self, state: State) -> &[State] {
        &self.transition[state * self.alphabet..(state + 1) * self.alphabet]
    }

    fn check_state(&self, state: State) -> Result<()> {
        if state >= self.num_states() {
            return Err(Error::StateOutOfRange {
                state,
                states: self.num_states(),
            });
        }
        Ok(())
    }

    fn check_word(&self, word: &[Symbol]) -> Result<()> {
        match word.iter().find(|&&x| x >= self.alphabet) {
            Some(&x) => Err(Error::SymbolOutOfRange {
                symbol: x,
                alphabet: self.alphabet,
            }),
            None => Ok(()),
        }
    }

    /// Image of `word` under the transformation defined at `state`.
    pub fn apply(&self, state: State, word: &[Symbol]) -> Result<Vec<Symbol>> {
        self.check_state(state)?;
        self.check_word(word)?;
        let mut q = state;
        Ok(word
            .iter()
            .map(|&x| {
                let y = self.out(q, x);
                q = self.next(q, x);
                y
            })
            .collect())
    }

    /// State reached from `state` after reading `word`; the restriction of the
    /// transformation at `state` to `word` is the transformation at this state.
    pub fn transit(&self, state: State, word: &[Symbol]) -> Result<State> {
        self.check_state(state)?;
        self.check_word(word)?;
        Ok(word.iter().fold(state, |q, &x| self.next(q, x)))
    }

    /// Product automaton: state `(f, g)` has index `f * other.n + g` and acts
    /// as `self[f] ∘ other[g]`.
    pub fn product(&self, other: &MealyMachine) -> Result<MealyMachine> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        let m = self.alphabet;
        let (na, nb) = (self.num_states(), other.num_states());
        let mut transition = Vec::with_capacity(na * nb * m);
        let mut output = Vec::with_capacity(na * nb * m);
        for f in 0..na {
            for g in 0..nb {
                for x in 0..m {
                    let y = other.out(g, x);
                    transition.push(self.next(f, y) * nb + other.next(g, x));
                    output.push(self.out(f, y));
                }
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|lf| b.iter().map(move |lg| format!("({lf},{lg})")))
                    .collect(),
            ),
            _ => None,
        };
        Ok(MealyMachine {
            alphabet: m,
            transition,
            output,
            labels,
        })
    }

    /// Moore partition refinement. Returns a class id per state; two states
    /// share a class iff they define the same transformation.
    pub fn equivalence_classes(&self) -> Vec<usize> {
        let n = self.num_states();
        let mut class = vec![0usize; n];
        let mut count = {
            let mut ids: HashMap<&[Symbol], usize> = HashMap::new();
            for s in 0..n {
                let next_id = ids.len();
                class[s] = *ids.entry(self.output_row(s)).or_insert(next_id);
            }
            ids.len()
        };
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut refined = vec![0usize; n];
            for s in 0..n {
                let mut sig = Vec::with_capacity(self.alphabet + 1);
                sig.push(class[s]);
                sig.extend(self.transition_row(s).iter().map(|&t| class[t]));
                let next_id = ids.len();
                refined[s] = *ids.entry(sig).or_insert(next_id);
            }
            let refined_count = ids.len();
            class = refined;
            if refined_count == count {
                return class;
            }
            count = refined_count;
        }
    }

    /// Reduced machine together with the map from original states to classes.
    ///
    /// Classes are numbered in breadth-first order from the class of state 0,
    /// visiting symbols in increasing order; classes unreachable from there are
    /// appended the same way, seeded by their smallest original state.
    pub fn minimize(&self) -> (MealyMachine, Vec<State>) {
        let n = self.num_states();
        if n == 0 {
            return (self.clone(), Vec::new());
        }
        let class = self.equivalence_classes();
        let num_classes = class.iter().max().map_or(0, |&c| c + 1);
        let mut representative = vec![usize::MAX; num_classes];
        for s in (0..n).rev() {
            representative[class[s]] = s;
        }

        let mut order = vec![usize::MAX; num_classes];
        let mut visited = Vec::with_capacity(num_classes);
        for seed in 0..n {
            if order[class[seed]] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([class[seed]]);
            order[class[seed]] = visited.len();
            visited.push(class[seed]);
            while let Some(c) = queue.pop_front() {
                let rep = representative[c];
                for &t in self.transition_row(rep) {
                    let ct = class[t];
                    if order[ct] == usize::MAX {
                        order[ct] = visited.len();
                        visited.push(ct);
                        queue.push_back(ct);
                    }
                }
            }
        }

        let m = self.alphabet;
        let mut transition = Vec::with_capacity(num_classes * m);
        let mut output = Vec::with_capacity(num_classes * m);
        for &c in &visited {
            let rep = representative[c];
            for x in 0..m {
                transition.push(order[class[self.next(rep, x)]]);
                output.push(self.out(rep, x));
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| visited.iter().map(|&c| l[representative[c]].clone()).collect());
        let map = (0..n).map(|s| order[class[s]]).collect();
        (
            MealyMachine {
                alphabet: m,
                transition,
                output,
                labels,
            },
            map,
        )
    }

    /// Whether two states define the same transformation (exact, by refinement).
    pub fn states_equivalent(&self, s: State, t: State) -> Result<bool> {
        self.check_state(s)?;
        self.check_state(t)?;
        if s == t {
            return Ok(true);
        }
        let class = self.equivalence_classes();
        Ok(class[s] == class[t])
    }

    /// True iff every output row is a permutation of the alphabet.
    pub fn is_invertible(&self) -> bool {
        (0..self.num_states()).all(|s| {
            let mut seen = vec![false; self.alphabet];
            self.output_row(s)
                .iter()
                .all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    /// Sub-machine of the states reachable from `start`, renumbered in
    /// breadth-first order so that `start` becomes state 0.
    pub fn reachable_from(&self, start: State) -> Result<MealyMachine> {
        self.check_state(start)?;
        let n = self.num_states();
        let mut index = vec![usize::MAX; n];
        let mut order = vec![start];
        index[start] = 0;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for &t in self.transition_row(s) {
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        let mut transition = Vec::with_capacity(order.len() * self.alphabet);
        let mut output = Vec::with_capacity(order.len() * self.alphabet);
        for &s in &order {
            transition.extend(self.transition_row(s).iter().map(|&t| index[t]));
            output.extend_from_slice(self.output_row(s));
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| order.iter().map(|&s| l[s].clone()).collect());
        Ok(MealyMachine {
            alphabet: self.alphabet,
            transition,
            output,
            labels,
        })
    }

    /// The machine obtained by renaming symbols with `xi` and states with
    /// `theta`, so that the result is similar to `self` under `(xi, theta)`.
    pub fn relabel(&self, xi: &[Symbol], theta: &[State]) -> Result<MealyMachine> {
        let (m, n) = (self.alphabet, self.num_states());
        check_permutation(xi, m, "symbol")?;
        check_permutation(theta, n, "state")?;
        let mut transition = vec![0; n * m];
        let mut output = vec![0; n * m];
        for f in 0..n {
            for x in 0..m {
                let at = theta[f] * m + xi[x];
                transition[at] = theta[self.next(f, x)];
                output[at] = xi[self.out(f, x)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for f in 0..n {
                out[theta[f]] = l[f].clone();
            }
            out
        });
        Ok(MealyMachine {
            alphabet: m,
            transition,
            output,
            labels,
        })
    }

    /// Checks `θπ₁(x,f) = π₂(ξx,θf)` and `ξλ₁(x,f) = λ₂(ξx,θf)` for all pairs.
    pub fn check_similar(&self, other: &MealyMachine, xi: &[Symbol], theta: &[State]) -> Result<bool> {
        self.check_same_shape(other)?;
        check_permutation(xi, self.alphabet, "symbol")?;
        check_permutation(theta, self.num_states(), "state")?;
        Ok(self.similar_under(other, xi, theta))
    }

    fn similar_under(&self, other: &MealyMachine, xi: &[Symbol], theta: &[State]) -> bool {
        (0..self.num_states()).all(|f| {
            (0..self.alphabet).all(|x| {
                theta[self.next(f, x)] == other.next(theta[f], xi[x])
                    && xi[self.out(f, x)] == other.out(theta[f], xi[x])
            })
        })
    }

    fn check_same_shape(&self, other: &MealyMachine) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        if self.num_states() != other.num_states() {
            return Err(Error::StateCountMismatch {
                left: self.num_states(),
                right: other.num_states(),
            });
        }
        Ok(())
    }

    /// Exhaustive search for a similarity `(ξ, θ)`; permutation pairs are
    /// enumerated lexicographically (ξ outer) and the first witness wins.
    pub fn search_similarity(&self, other: &MealyMachine) -> Result<Option<(Vec<Symbol>, Vec<State>)>> {
        self.check_same_shape(other)?;
        let (m, n) = (self.alphabet, self.num_states());
        if m > SIMILARITY_MAX_ALPHABET || n > SIMILARITY_MAX_STATES {
            return Err(Error::SearchTooLarge(format!(
                "similarity search limited to m <= {SIMILARITY_MAX_ALPHABET}, n <= {SIMILARITY_MAX_STATES} (got m = {m}, n = {n})"
            )));
        }
        let mut xi: Vec<Symbol> = (0..m).collect();
        loop {
            let mut theta: Vec<State> = (0..n).collect();
            loop {
                if self.similar_under(other, &xi, &theta) {
                    return Ok(Some((xi, theta)));
                }
                if !next_permutation(&mut theta) {
                    break;
                }
            }
            if !next_permutation(&mut xi) {
                return Ok(None);
            }
        }
    }

    /// Minimized machine of the `n`-fold product `A × … × A`, built one factor
    /// at a time with minimization after every step. `A^0` is the identity.
    ///
    /// `max_states` bounds the size of each unminimized intermediate product.
    pub fn power_minimized(&self, n: usize, max_states: usize) -> Result<MealyMachine> {
        let mut acc = MealyMachine::identity(self.alphabet);
        acc.labels = None;
        for _ in 0..n {
            acc = self.power_step(&acc, max_states)?;
        }
        Ok(acc)
    }

    /// One step of [`power_minimized`](Self::power_minimized): `minimize(acc × self)`.
    pub fn power_step(&self, acc: &MealyMachine, max_states: usize) -> Result<MealyMachine> {
        let requested = acc.num_states().saturating_mul(self.num_states());
        if requested > max_states {
            return Err(Error::GuardExceeded {
                what: "intermediate product states",
                requested,
                limit: max_states,
            });
        }
        let mut product = acc.product(self)?;
        product.labels = None;
        Ok(product.minimize().0)
    }
}

fn check_permutation(p: &[usize], size: usize, what: &str) -> Result<()> {
    if p.len() != size {
        return Err(Error::Domain(format!(
            "{what} permutation has length {}, expected {size}",
            p.len()
        )));
    }
    let mut seen = vec![false; size];
    for &v in p {
        if v >= size || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Domain(format!("{what} map is not a permutation")));
        }
    }
    Ok(())
}

/// Advances `p` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for MealyMachine {
    /// Text format: a `mealy m=<m> n=<n>` header and one
    /// `<name>: t/o t/o …` line per state.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mealy m={} n={}", self.alphabet, self.num_states())?;
        for s in 0..self.num_states() {
            write!(f, "{}:", self.label(s))?;
            for x in 0..self.alphabet {
                write!(f, " {}/{}", self.next(s, x), self.out(s, x))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for MealyMachine {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty machine description".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("mealy") {
            return Err(Error::Parse(format!("bad header {header:?}")));
        }
        let mut m = None;
        let mut n = None;
        for field in fields {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in {field:?}")))?;
            match key {
                "m" => m = Some(value),
                "n" => n = Some(value),
                _ => return Err(Error::Parse(format!("unknown header field {key:?}"))),
            }
        }
        let (m, n) = match (m, n) {
            (Some(m), Some(n)) => (m, n),
            _ => return Err(Error::Parse("header needs m= and n=".into())),
        };
        if m == 0 {
            return Err(Error::Parse("alphabet must be non-empty".into()));
        }

        let mut labels = Vec::with_capacity(n);
        let mut transition = Vec::with_capacity(n * m);
        let mut output = Vec::with_capacity(n * m);
        for line in lines {
            let (name, cells) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("row without name: {line:?}")))?;
            let cells: Vec<&str> = cells.split_whitespace().collect();
            if cells.len() != m {
                return Err(Error::Parse(format!(
                    "row {:?} has {} entries, expected {m}",
                    name.trim(),
                    cells.len()
                )));
            }
            for cell in cells {
                let (t, o) = cell
                    .split_once('/')
                    .ok_or_else(|| Error::Parse(format!("bad entry {cell:?}")))?;
                transition.push(
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad target in {cell:?}")))?,
                );
                output.push(
                    o.parse()
                        .map_err(|_| Error::Parse(format!("bad output in {cell:?}")))?,
                );
            }
            labels.push(name.trim().to_string());
        }
        if labels.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, found {}", labels.len())));
        }
        MealyMachine::new(m, transition, output)?.with_labels(labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i2() -> MealyMachine {
        MealyMachine::from_rows(
            2,
            &[
                vec![(0, 0), (0, 1)],
                vec![(0, 0), (1, 0)],
                vec![(0, 1), (2, 0)],
            ],
        )
        .unwrap()
        .with_labels(["e", "f0", "f1"])
        .unwrap()
    }

    #[test]
    fn apply_matches_hand_simulation() {
        let a = i2();
        assert_eq!(a.apply(1, &[1, 1, 0, 1]).unwrap(), vec![0, 0, 0, 1]);
        assert_eq!(a.apply(2, &[1, 1, 0, 1]).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(a.apply(0, &[1, 0, 1]).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn transit_examples() {
        let a = i2();
        assert_eq!(a.transit(1, &[1]).unwrap(), 1);
        assert_eq!(a.transit(1, &[0]).unwrap(), 0);
        assert_eq!(a.transit(2, &[]).unwrap(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        let a = i2();
        assert!(matches!(a.apply(0, &[2]), Err(Error::SymbolOutOfRange { .. })));
        assert!(matches!(a.transit(3, &[]), Err(Error::StateOutOfRange { .. })));
        assert!(MealyMachine::new(2, vec![0, 1], vec![0, 0]).is_err());
        assert!(MealyMachine::new(2, vec![0, 0], vec![0, 2]).is_err());
        assert!(MealyMachine::new(2, vec![0, 0, 0], vec![0, 0, 0]).is_err());
    }

    #[test]
    fn product_adds_two() {
        let a = i2();
        let sq = a.product(&a).unwrap();
        assert_eq!(sq.num_states(), 9);
        // (f1, f1) adds two to 0 = 000 (LSB first).
        assert_eq!(sq.apply(2 * 3 + 2, &[0, 0, 0]).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn minimize_square_of_i2() {
        let a = i2();
        let (min, map) = a.product(&a).unwrap().minimize();
        assert_eq!(min.num_states(), 6);
        assert_eq!(map.len(), 9);
        // (e, f0) and (f0, e) are both f0.
        assert_eq!(map[1], map[3]);
        let (again, _) = min.minimize();
        assert_eq!(again, min);
    }

    #[test]
    fn minimize_keeps_i2() {
        let (min, map) = i2().minimize();
        assert_eq!(min.num_states(), 3);
        assert_eq!(map, vec![0, 1, 2]);
        let id = MealyMachine::identity(3);
        assert_eq!(id.minimize().0, id);
    }

    #[test]
    fn equivalence_examples() {
        let a = i2();
        assert!(!a.states_equivalent(0, 1).unwrap());
        assert!(a.states_equivalent(2, 2).unwrap());
        let sq = a.product(&a).unwrap();
        assert!(sq.states_equivalent(1, 3).unwrap());
    }

    #[test]
    fn invertibility() {
        assert!(!i2().is_invertible());
        assert!(MealyMachine::identity(4).is_invertible());
        // f1 of I_3 on its own: self loop on x2, cyclic output.
        let f1 = MealyMachine::from_rows(3, &[vec![(0, 1), (0, 2), (0, 0)]]).unwrap();
        assert!(f1.is_invertible());
    }

    #[test]
    fn similarity_search_finds_nothing_for_swapped_outputs() {
        let a = i2();
        // f0 with its constant output moved to x1 is not a relabelling of I_2.
        let b = MealyMachine::from_rows(
            2,
            &[
                vec![(0, 0), (0, 1)],
                vec![(0, 1), (1, 1)],
                vec![(0, 1), (2, 0)],
            ],
        )
        .unwrap();
        assert_eq!(a.search_similarity(&b).unwrap(), None);
        let (xi, theta) = a.search_similarity(&a).unwrap().unwrap();
        assert_eq!(xi, vec![0, 1]);
        assert_eq!(theta, vec![0, 1, 2]);
    }

    #[test]
    fn similarity_guard() {
        let big = MealyMachine::identity(9);
        assert!(matches!(
            big.search_similarity(&big),
            Err(Error::SearchTooLarge(_))
        ));
    }

    #[test]
    fn power_minimized_counts() {
        let a = i2();
        assert_eq!(a.power_minimized(0, 1000).unwrap(), MealyMachine::identity(2));
        assert_eq!(a.power_minimized(2, 1000).unwrap().num_states(), 6);
        assert_eq!(a.power_minimized(3, 1000).unwrap().num_states(), 11);
        assert!(matches!(
            a.power_minimized(3, 10),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn text_format_round_trip() {
        let a = i2();
        let text = a.to_string();
        assert_eq!(text, "mealy m=2 n=3\ne: 0/0 0/1\nf0: 0/0 1/0\nf1: 0/1 2/0\n");
        let parsed: MealyMachine = text.parse().unwrap();
        assert_eq!(parsed, a);
        assert_eq!(parsed.labels(), a.labels());
    }

    #[test]
    fn text_format_rejects_incomplete_rows() {
        assert!("mealy m=2 n=1\ns: 0/0".parse::<MealyMachine>().is_err());
        assert!("mealy m=2 n=2\ns: 0/0 0/1".parse::<MealyMachine>().is_err());
        assert!("mealy m=2\ns: 0/0 0/1".parse::<MealyMachine>().is_err());
        assert!("mealy m=2 n=1\ns: 0/0 1/1".parse::<MealyMachine>().is_err());
    }

    #[test]
    fn lexicographic_permutations() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2, 1]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }
}
