//! Exact growth functions by breadth-first enumeration of transformations.
//!
//! Every semigroup element is carried as its own reduced transducer
//! ([`Transformation`]), so two products are equal exactly when their
//! [`CanonicalKey`]s are.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::machine::{MealyMachine, State, Symbol};

/// Default budget for distinct elements held during an enumeration.
pub const DEFAULT_MAX_ELEMENTS: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthLimits {
    pub max_elements: usize,
}

impl Default for GrowthLimits {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// Canonical byte encoding of a reduced, breadth-first numbered transducer:
/// state count, the table rows, then the initial state.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// A single automaton transformation, stored as the reduced machine of the
/// states reachable from it. State 0 is the transformation itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformation {
    machine: MealyMachine,
}

impl Transformation {
    pub fn identity(alphabet: usize) -> Self {
        Self {
            machine: MealyMachine::identity(alphabet).without_labels(),
        }
    }

    /// The transformation defined by `machine` at `state`.
    pub fn at(machine: &MealyMachine, state: State) -> Result<Self> {
        let reachable = machine.reachable_from(state)?.without_labels();
        Ok(Self {
            machine: reachable.minimize().0,
        })
    }

    pub fn machine(&self) -> &MealyMachine {
        &self.machine
    }

    pub fn alphabet(&self) -> usize {
        self.machine.alphabet()
    }

    pub fn num_states(&self) -> usize {
        self.machine.num_states()
    }

    pub fn key(&self) -> CanonicalKey {
        let m = &self.machine;
        let n = m.num_states();
        let mut bytes = Vec::with_capacity(4 * (2 + 2 * n * m.alphabet()));
        bytes.extend_from_slice(&(n as u32).to_le_bytes());
        for s in 0..n {
            for x in 0..m.alphabet() {
                bytes.extend_from_slice(&(m.next(s, x) as u32).to_le_bytes());
                bytes.extend_from_slice(&(m.out(s, x) as u32).to_le_bytes());
            }
        }
        bytes.extend_from_slice(&0u32.to_le_bytes());
        CanonicalKey(bytes)
    }

    pub fn apply(&self, word: &[Symbol]) -> Result<Vec<Symbol>> {
        self.machine.apply(0, word)
    }

    /// The restriction to the one-letter prefix `symbol`.
    pub fn restrict(&self, symbol: Symbol) -> Result<Self> {
        let target = self.machine.transit(0, &[symbol])?;
        Self::at(&self.machine, target)
    }

    pub fn is_identity(&self) -> bool {
        self.num_states() == 1 && (0..self.alphabet()).all(|x| self.machine.out(0, x) == x)
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &Transformation) -> Result<Self> {
        let (a, b) = (&self.machine, &inner.machine);
        if a.alphabet() != b.alphabet() {
            return Err(Error::AlphabetMismatch {
                left: a.alphabet(),
                right: b.alphabet(),
            });
        }
        let m = a.alphabet();
        let mut index: HashMap<(State, State), usize> = HashMap::from([((0, 0), 0)]);
        let mut pairs = vec![(0, 0)];
        let mut transition = Vec::new();
        let mut output = Vec::new();
        let mut head = 0;
        while head < pairs.len() {
            let (f, g) = pairs[head];
            head += 1;
            for x in 0..m {
                let y = b.out(g, x);
                let next = (a.next(f, y), b.next(g, x));
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                transition.push(id);
                output.push(a.out(f, y));
            }
        }
        let product = MealyMachine::new(m, transition, output)?;
        Ok(Self {
            machine: product.minimize().0,
        })
    }

    /// `self^exponent` by repeated squaring.
    pub fn pow(&self, exponent: &BigUint) -> Result<Self> {
        let mut result = Transformation::identity(self.alphabet());
        let mut base = self.clone();
        let bits = exponent.bits();
        for i in 0..bits {
            if exponent.bit(i) {
                result = result.compose(&base)?;
            }
            if i + 1 < bits {
                base = base.compose(&base)?;
            }
        }
        Ok(result)
    }
}

/// A shortest word on which the transformations differ, or `None` when they
/// are equal. Pairs of states are explored breadth first, which is the same as
/// enumerating words up to the combined state count.
pub fn distinguishing_word(a: &Transformation, b: &Transformation) -> Result<Option<Vec<Symbol>>> {
    let (ma, mb) = (a.machine(), b.machine());
    if ma.alphabet() != mb.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: ma.alphabet(),
            right: mb.alphabet(),
        });
    }
    let m = ma.alphabet();
    let mut parent: HashMap<(State, State), Option<((State, State), Symbol)>> =
        HashMap::from([((0, 0), None)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((s, t)) = queue.pop_front() {
        for x in 0..m {
            if ma.out(s, x) != mb.out(t, x) {
                let mut word = vec![x];
                let mut cur = (s, t);
                while let Some(Some((prev, y))) = parent.get(&cur) {
                    word.push(*y);
                    cur = *prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            let next = (ma.next(s, x), mb.next(t, x));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some(((s, t), x)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthKind {
    Ball,
    Word,
    Spherical,
}

impl GrowthKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthKind::Ball => "ball",
            GrowthKind::Word => "word",
            GrowthKind::Spherical => "spherical",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Bfs,
    Recurrence,
    Series,
    ClosedForm,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Bfs => "bfs",
            Provenance::Recurrence => "recurrence",
            Provenance::Series => "series",
            Provenance::ClosedForm => "closed-form",
        }
    }
}

/// Values of a growth function at `n = 0, 1, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    pub m: usize,
    pub kind: GrowthKind,
    pub provenance: Provenance,
    pub values: Vec<BigUint>,
}

impl GrowthTable {
    pub fn new(m: usize, kind: GrowthKind, provenance: Provenance, values: Vec<BigUint>) -> Self {
        Self {
            m,
            kind,
            provenance,
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Cumulative sums, turning a word growth table into a ball growth table.
    pub fn partial_sums(&self) -> GrowthTable {
        let mut acc = BigUint::zero();
        let values = self
            .values
            .iter()
            .map(|v| {
                acc += v;
                acc.clone()
            })
            .collect();
        GrowthTable::new(self.m, GrowthKind::Ball, self.provenance, values)
    }

    /// First differences with `value(-1) = 0`, the inverse of
    /// [`partial_sums`](Self::partial_sums). Fails on a decreasing table.
    pub fn increments(&self) -> Result<GrowthTable> {
        let mut prev = BigUint::zero();
        let mut values = Vec::with_capacity(self.values.len());
        for (n, v) in self.values.iter().enumerate() {
            if v < &prev {
                return Err(Error::Domain(format!("table decreases at n = {n}")));
            }
            values.push(v - &prev);
            prev = v.clone();
        }
        Ok(GrowthTable::new(self.m, GrowthKind::Word, self.provenance, values))
    }

    /// Index of the first disagreement with `other`, comparing the common prefix
    /// and then the lengths.
    pub fn first_mismatch(&self, other: &GrowthTable) -> Option<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .or_else(|| (self.len() != other.len()).then(|| self.len().min(other.len())))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "kind": self.kind.as_str(),
            "provenance": self.provenance.as_str(),
            "values": self.values.iter().map(big_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<GrowthTable> {
        let field = |name: &str| {
            value
                .get(name)
                .ok_or_else(|| Error::Parse(format!("missing field {name:?}")))
        };
        let m = field("m")?
            .as_u64()
            .ok_or_else(|| Error::Parse("m must be an integer".into()))? as usize;
        let kind = match field("kind")?.as_str() {
            Some("ball") => GrowthKind::Ball,
            Some("word") => GrowthKind::Word,
            Some("spherical") => GrowthKind::Spherical,
            other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
        };
        let provenance = match field("provenance")?.as_str() {
            Some("bfs") => Provenance::Bfs,
            Some("recurrence") => Provenance::Recurrence,
            Some("series") => Provenance::Series,
            Some("closed-form") => Provenance::ClosedForm,
            other => return Err(Error::Parse(format!("unknown provenance {other:?}"))),
        };
        let values = field("values")?
            .as_array()
            .ok_or_else(|| Error::Parse("values must be an array".into()))?
            .iter()
            .map(big_from_json)
            .collect::<Result<_>>()?;
        Ok(GrowthTable::new(m, kind, provenance, values))
    }
}

impl fmt::Display for GrowthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub(crate) fn big_to_json(v: &BigUint) -> serde_json::Value {
    let number: serde_json::Number = v
        .to_string()
        .parse()
        .expect("decimal digits form a JSON number");
    serde_json::Value::Number(number)
}

pub(crate) fn big_from_json(v: &serde_json::Value) -> Result<BigUint> {
    match v {
        serde_json::Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| Error::Parse(format!("{n} is not a nonnegative integer"))),
        other => Err(Error::Parse(format!("{other} is not a number"))),
    }
}

/// The elements of a semigroup ball, in the order they were first reached.
#[derive(Clone, Debug)]
pub struct Ball {
    pub elements: Vec<Transformation>,
    /// Word length at which each element was first reached.
    pub lengths: Vec<usize>,
    /// Left-multiplication edges `(source, generator index, target)` out of
    /// every element of length below the radius.
    pub edges: Vec<(usize, usize, usize)>,
    index: HashMap<CanonicalKey, usize>,
}

impl Ball {
    pub fn position(&self, t: &Transformation) -> Option<usize> {
        self.index.get(&t.key()).copied()
    }

    /// Word growth: number of elements first reached at each length.
    pub fn word_counts(&self, radius: usize) -> Vec<usize> {
        let mut counts = vec![0; radius + 1];
        for &l in &self.lengths {
            counts[l] += 1;
        }
        counts
    }
}

/// Breadth-first enumeration of all products of `gens` of length at most
/// `radius`, starting from the identity at length 0.
///
/// On hitting the element budget the error carries the ball growth table of
/// the levels that completed.
pub fn explore_ball(
    gens: &[Transformation],
    radius: usize,
    limits: GrowthLimits,
    record_edges: bool,
) -> Result<Ball> {
    let alphabet = gens
        .first()
        .map(Transformation::alphabet)
        .ok_or_else(|| Error::Domain("no generators".into()))?;
    let identity = Transformation::identity(alphabet);
    let mut ball = Ball {
        index: HashMap::from([(identity.key(), 0)]),
        elements: vec![identity],
        lengths: vec![0],
        edges: Vec::new(),
    };
    let mut frontier = vec![0usize];
    for length in 1..=radius {
        let mut next = Vec::new();
        for &src in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let product = g.compose(&ball.elements[src])?;
                let key = product.key();
                let dst = match ball.index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if ball.elements.len() >= limits.max_elements {
                            let counts = ball.word_counts(radius);
                            let partial = counts[..length]
                                .iter()
                                .map(|&c| BigUint::from(c))
                                .collect::<Vec<_>>();
                            let table = GrowthTable::new(
                                alphabet,
                                GrowthKind::Word,
                                Provenance::Bfs,
                                partial,
                            )
                            .partial_sums();
                            return Err(Error::GrowthLimit {
                                limit: limits.max_elements,
                                partial: Box::new(table),
                            });
                        }
                        let id = ball.elements.len();
                        ball.index.insert(key, id);
                        ball.elements.push(product);
                        ball.lengths.push(length);
                        next.push(id);
                        id
                    }
                };
                if record_edges {
                    ball.edges.push((src, gi, dst));
                }
            }
        }
        frontier = next;
    }
    Ok(ball)
}

fn generators(machine: &MealyMachine, states: &[State]) -> Result<Vec<Transformation>> {
    if states.is_empty() {
        return Err(Error::Domain("no generators".into()));
    }
    states.iter().map(|&s| Transformation::at(machine, s)).collect()
}

/// Ball and word growth of the semigroup generated by `gens` (states of
/// `machine`), for lengths `0..=max_n`.
pub fn ball_and_word_growth(
    machine: &MealyMachine,
    gens: &[State],
    max_n: usize,
    limits: GrowthLimits,
) -> Result<(GrowthTable, GrowthTable)> {
    let gens = generators(machine, gens)?;
    let ball = explore_ball(&gens, max_n, limits, false)?;
    let word = GrowthTable::new(
        machine.alphabet(),
        GrowthKind::Word,
        Provenance::Bfs,
        ball.word_counts(max_n).into_iter().map(BigUint::from).collect(),
    );
    let mut balls = word.partial_sums();
    balls.provenance = Provenance::Bfs;
    Ok((balls, word))
}

pub fn ball_growth(
    machine: &MealyMachine,
    gens: &[State],
    max_n: usize,
    limits: GrowthLimits,
) -> Result<GrowthTable> {
    Ok(ball_and_word_growth(machine, gens, max_n, limits)?.0)
}

pub fn word_growth(
    machine: &MealyMachine,
    gens: &[State],
    max_n: usize,
    limits: GrowthLimits,
) -> Result<GrowthTable> {
    Ok(ball_and_word_growth(machine, gens, max_n, limits)?.1)
}

/// Number of distinct products of exactly `n` generators, for `n = 0..=max_n`.
pub fn spherical_growth(
    machine: &MealyMachine,
    gens: &[State],
    max_n: usize,
    limits: GrowthLimits,
) -> Result<GrowthTable> {
    let gens = generators(machine, gens)?;
    let alphabet = machine.alphabet();
    let mut level = vec![Transformation::identity(alphabet)];
    let mut values = vec![BigUint::one()];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for s in &level {
            for g in &gens {
                let product = g.compose(s)?;
                if seen.insert(product.key()) {
                    if next.len() >= limits.max_elements {
                        return Err(Error::GrowthLimit {
                            limit: limits.max_elements,
                            partial: Box::new(GrowthTable::new(
                                alphabet,
                                GrowthKind::Spherical,
                                Provenance::Bfs,
                                values,
                            )),
                        });
                    }
                    next.push(product);
                }
            }
        }
        debug_assert_eq!(values.len(), n);
        values.push(BigUint::from(next.len()));
        level = next;
    }
    Ok(GrowthTable::new(
        alphabet,
        GrowthKind::Spherical,
        Provenance::Bfs,
        values,
    ))
}

/// Growth function of the automaton: the state count of the reduced `A^n`.
pub fn automaton_growth(machine: &MealyMachine, max_n: usize, limits: GrowthLimits) -> Result<GrowthTable> {
    let mut power = MealyMachine::identity(machine.alphabet());
    let mut values = vec![BigUint::one()];
    for _ in 0..max_n {
        power = machine
            .power_step(&power, limits.max_elements)
            .map_err(|e| match e {
                Error::GuardExceeded { limit, .. } => Error::GrowthLimit {
                    limit,
                    partial: Box::new(GrowthTable::new(
                        machine.alphabet(),
                        GrowthKind::Spherical,
                        Provenance::Bfs,
                        values.clone(),
                    )),
                },
                other => other,
            })?;
        values.push(BigUint::from(power.num_states()));
    }
    Ok(GrowthTable::new(
        machine.alphabet(),
        GrowthKind::Spherical,
        Provenance::Bfs,
        values,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_i;

    fn table(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn ball_growth_of_i2() {
        let a = build_i(2).unwrap();
        let (ball, word) = ball_and_word_growth(&a, &[0, 1, 2], 7, GrowthLimits::default()).unwrap();
        assert_eq!(ball.values, table(&[1, 3, 6, 11, 18, 28, 41, 59]));
        assert_eq!(word.values, table(&[1, 2, 3, 5, 7, 10, 13, 18]));
    }

    #[test]
    fn word_growth_of_i3() {
        let a = build_i(3).unwrap();
        let word = word_growth(&a, &[0, 1, 2], 4, GrowthLimits::default()).unwrap();
        assert_eq!(word.values, table(&[1, 2, 3, 4, 6]));
        let ball = ball_growth(&a, &[0, 1, 2], 0, GrowthLimits::default()).unwrap();
        assert_eq!(ball.values, table(&[1]));
    }

    #[test]
    fn spherical_growth_examples() {
        let a = build_i(2).unwrap();
        let with_e = spherical_growth(&a, &[0, 1, 2], 2, GrowthLimits::default()).unwrap();
        assert_eq!(with_e.values, table(&[1, 3, 6]));
        let without_e = spherical_growth(&a, &[1, 2], 2, GrowthLimits::default()).unwrap();
        assert_eq!(without_e.values, table(&[1, 2, 4]));
    }

    #[test]
    fn automaton_growth_examples() {
        let a = build_i(2).unwrap();
        let g = automaton_growth(&a, 3, GrowthLimits::default()).unwrap();
        assert_eq!(g.values, table(&[1, 3, 6, 11]));
        let b = build_i(3).unwrap();
        assert_eq!(
            automaton_growth(&b, 2, GrowthLimits::default()).unwrap().values,
            table(&[1, 3, 6])
        );
    }

    #[test]
    fn element_limit_returns_partial_table() {
        let a = build_i(2).unwrap();
        let err = ball_growth(&a, &[0, 1, 2], 10, GrowthLimits { max_elements: 20 }).unwrap_err();
        match err {
            Error::GrowthLimit { limit, partial } => {
                assert_eq!(limit, 20);
                assert_eq!(partial.values, table(&[1, 3, 6, 11, 18]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let a = build_i(3).unwrap();
        let f1 = Transformation::at(&a, 2).unwrap();
        let mut acc = Transformation::identity(3);
        for e in 0..20u32 {
            assert_eq!(f1.pow(&BigUint::from(e)).unwrap(), acc);
            acc = f1.compose(&acc).unwrap();
        }
    }

    #[test]
    fn distinguishing_words() {
        let a = build_i(2).unwrap();
        let e = Transformation::at(&a, 0).unwrap();
        let f0 = Transformation::at(&a, 1).unwrap();
        assert_eq!(distinguishing_word(&e, &f0).unwrap(), Some(vec![1]));
        let f0f0 = f0.compose(&f0).unwrap();
        assert_eq!(distinguishing_word(&f0, &f0f0).unwrap(), None);
        assert_eq!(f0.key(), f0f0.key());
    }

    #[test]
    fn json_and_csv() {
        let t = GrowthTable::new(2, GrowthKind::Ball, Provenance::Bfs, table(&[1, 3, 6]));
        assert_eq!(t.to_csv(), "n,value\n0,1\n1,3\n2,6\n");
        let json = t.to_json();
        assert_eq!(
            json.to_string(),
            r#"{"m":2,"kind":"ball","provenance":"bfs","values":[1,3,6]}"#
        );
        assert_eq!(GrowthTable::from_json(&json).unwrap(), t);
    }

    #[test]
    fn huge_values_survive_json() {
        let big: BigUint = "123456789012345678901234567890".parse().unwrap();
        let t = GrowthTable::new(2, GrowthKind::Word, Provenance::Recurrence, vec![big]);
        let text = t.to_json().to_string();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(GrowthTable::from_json(&back).unwrap(), t);
    }

    #[test]
    fn increments_inverse_of_partial_sums() {
        let w = GrowthTable::new(2, GrowthKind::Word, Provenance::Bfs, table(&[1, 2, 3, 5]));
        assert_eq!(w.partial_sums().increments().unwrap().values, w.values);
        assert_eq!(w.first_mismatch(&w), None);
        let shorter = GrowthTable::new(2, GrowthKind::Word, Provenance::Bfs, table(&[1, 2]));
        assert_eq!(w.first_mismatch(&shorter), Some(2));
    }
}
