use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::growth::{big_from_json, big_to_json};
use crate::machine::Symbol;

use super::word::{Gen, GeneratorWord};
use super::{check_m, t1, t2};

/// Exponent vector `p_0..p_k` of the normal form
/// `f1^{p_k} f0 f1^{m^{k-1} p_{k-1} - 1} … f0 f1^{m p_1 - 1} f0 f1^{p_0}`,
/// or `f1^{p_0}` when `k = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    m: usize,
    p: Vec<BigUint>,
}

impl NormalForm {
    pub fn new(m: usize, p: Vec<BigUint>) -> Result<Self> {
        check_m(m)?;
        if p.is_empty() {
            return Err(Error::Domain("normal form needs p_0".into()));
        }
        let k = p.len() - 1;
        if let Some(i) = (1..k).find(|&i| p[i].is_zero()) {
            return Err(Error::Domain(format!("p_{i} must be positive")));
        }
        Ok(Self { m, p })
    }

    pub fn from_u64(m: usize, p: &[u64]) -> Result<Self> {
        Self::new(m, p.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn identity(m: usize) -> Self {
        Self {
            m,
            p: vec![BigUint::zero()],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.p.len() - 1
    }

    /// `p_0..p_k`.
    pub fn p(&self) -> &[BigUint] {
        &self.p
    }

    pub fn to_word(&self) -> GeneratorWord {
        let m = BigUint::from(self.m);
        let k = self.k();
        let mut word = GeneratorWord::f1_pow(self.m, self.p[k].clone());
        if k == 0 {
            return word;
        }
        word.push(Gen::F0, BigUint::one());
        let mut scale = m.pow(k as u32 - 1);
        for i in (1..k).rev() {
            word.push(Gen::F1, &scale * &self.p[i] - 1u32);
            word.push(Gen::F0, BigUint::one());
            scale /= &m;
        }
        word.push(Gen::F1, self.p[0].clone());
        word
    }

    pub fn length(&self) -> BigUint {
        let k = self.k();
        if k == 0 {
            return self.p[0].clone();
        }
        let m = BigUint::from(self.m);
        let mut total = &self.p[k] + &self.p[0] + 1u32;
        let mut scale = m.clone();
        for i in 1..k {
            total += &scale * &self.p[i];
            scale *= &m;
        }
        total
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "k": self.k(),
            "p": self.p.iter().map(big_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let m = value
            .get("m")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer field \"m\"".into()))?;
        let p: Vec<BigUint> = value
            .get("p")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"p\"".into()))?
            .iter()
            .map(big_from_json)
            .collect::<Result<_>>()?;
        if let Some(k) = value.get("k") {
            if k.as_u64() != Some(p.len() as u64 - 1) {
                return Err(Error::Parse(format!("k = {k} disagrees with {} exponents", p.len())));
            }
        }
        Self::new(m as usize, p)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.to_word();
        if word.is_empty() {
            f.write_str("e")
        } else {
            write!(f, "{word}")
        }
    }
}

/// The normal form of the element `w` defines, scanning runs right to left.
///
/// `r` is the exponent of `f1` accumulated since the last `f0` and `modulus`
/// is `m^j`, where `j` counts the levels already closed. An `f0` either opens
/// a new level, when `r + 1` is divisible by `m^j`, or cancels back to
/// `f1^{r + 1 - t2(r + 1)}`.
pub fn reduce(w: &GeneratorWord) -> NormalForm {
    let m = w.m();
    let base = BigUint::from(m);
    let mut p = Vec::new();
    let mut r = BigUint::zero();
    let mut modulus = BigUint::one();
    for (g, e) in w.runs().iter().rev() {
        match g {
            Gen::F1 => r += e,
            // f0^e = f0, and a second f0 in a row always cancels
            Gen::F0 if p.is_empty() => {
                p.push(std::mem::take(&mut r));
                modulus = base.clone();
            }
            Gen::F0 => {
                let next = &r + 1u32;
                if (&next % &modulus).is_zero() {
                    p.push(next / &modulus);
                    modulus *= &base;
                    r = BigUint::zero();
                } else {
                    r = &next - t2(&next, m).expect("next is positive");
                }
            }
        }
    }
    p.push(r);
    NormalForm { m, p }
}

/// Whether `w1` and `w2` define the same element.
pub fn word_problem(w1: &GeneratorWord, w2: &GeneratorWord) -> Result<bool> {
    if w1.m() != w2.m() {
        return Err(Error::AlphabetMismatch {
            left: w1.m(),
            right: w2.m(),
        });
    }
    Ok(reduce(w1) == reduce(w2))
}

/// The normal form of the restriction of `nf` at the one-letter word `x`.
pub fn restrict_nf(nf: &NormalForm, x: Symbol) -> Result<NormalForm> {
    let m = nf.m;
    if x >= m {
        return Err(Error::SymbolOutOfRange { symbol: x, alphabet: m });
    }
    let base = BigUint::from(m);
    let p = &nf.p;
    let k = nf.k();
    let floor = |v: &BigUint| v / &base;
    let shifted_p0 = (&p[0] + x) / &base;
    if k == 0 {
        return Ok(NormalForm { m, p: vec![shifted_p0] });
    }
    if x != r2(&p[0], m) {
        // the f0 next to p_0 reads a letter other than x_{m-1} and vanishes
        let mut q = Vec::with_capacity(k);
        if k == 1 {
            q.push(floor(&p[1]) + shifted_p0);
        } else {
            q.push(&p[1] - 1u32 + shifted_p0);
            q.extend(p[2..k].iter().cloned());
            q.push(floor(&p[k]));
        }
        return Ok(NormalForm { m, p: q });
    }
    let i0 = (1..k).find(|&i| !(&p[i] % &base).is_zero());
    let mut q = vec![floor(&p[0])];
    match i0 {
        None => {
            q.extend(p[1..k].iter().map(|v| v / &base));
            q.push(floor(&p[k]));
        }
        Some(i0) => {
            q.extend(p[1..i0].iter().map(|v| v / &base));
            if i0 < k - 1 {
                q.push(&p[i0 + 1] + floor(&p[i0]));
                q.extend(p[i0 + 2..k].iter().cloned());
                q.push(floor(&p[k]));
            } else {
                q.push(floor(&p[k]) + base.pow(k as u32 - 1) * floor(&p[k - 1]));
            }
        }
    }
    Ok(NormalForm { m, p: q })
}

/// Every normal form of length at most `max_len`, ordered by `k` then
/// lexicographically by `p_0..p_k`.
pub fn normal_forms_up_to(m: usize, max_len: u64) -> Result<Vec<NormalForm>> {
    check_m(m)?;
    let mut out: Vec<NormalForm> = (0..=max_len)
        .map(|p0| NormalForm {
            m,
            p: vec![BigUint::from(p0)],
        })
        .collect();
    // k ≥ 1: p_k + p_0 + 1 + Σ_{0<i<k} m^i p_i ≤ max_len
    let mut middles: Vec<(Vec<u64>, u64)> = vec![(Vec::new(), 0)];
    let mut scale = m as u64;
    loop {
        let mut found = false;
        for (middle, used) in &middles {
            if used + 1 > max_len {
                continue;
            }
            let room = max_len - used - 1;
            for p0 in 0..=room {
                for pk in 0..=room - p0 {
                    let mut p = vec![BigUint::from(p0)];
                    p.extend(middle.iter().map(|&v| BigUint::from(v)));
                    p.push(BigUint::from(pk));
                    out.push(NormalForm { m, p });
                    found = true;
                }
            }
        }
        if !found {
            break;
        }
        let mut next = Vec::new();
        for (middle, used) in &middles {
            let mut pi = 1;
            while used + scale * pi < max_len {
                let mut extended = middle.clone();
                extended.push(pi);
                next.push((extended, used + scale * pi));
                pi += 1;
            }
        }
        if next.is_empty() {
            break;
        }
        middles = next;
        scale = scale.saturating_mul(m as u64);
    }
    Ok(out)
}

/// `r_2(p) = m - 1 - (p mod m)`: the letter whose restriction keeps the `f0`.
fn r2(p: &BigUint, m: usize) -> usize {
    m - 1 - (p % m).to_usize().expect("residue below m")
}

/// Whether a left-hand side of the general defining relation occurs in `w`.
///
/// The left-hand sides are exactly the factors `f0 f1^{g_0} f0 … f1^{g_k} f0`
/// with `t1(g_0 + 1) = k` and `m^{k+1-s}` dividing `g_s + 1` for `1 ≤ s ≤ k`.
pub fn contains_relation_lhs(w: &GeneratorWord) -> bool {
    let m = w.m();
    let base = BigUint::from(m);
    // gaps between consecutive f0 letters
    let mut gaps: Vec<BigUint> = Vec::new();
    let mut seen_f0 = false;
    let mut pending = BigUint::zero();
    for (g, e) in w.runs() {
        match g {
            Gen::F1 => pending += e,
            Gen::F0 => {
                if e > &BigUint::one() {
                    return true;
                }
                if seen_f0 {
                    gaps.push(std::mem::take(&mut pending));
                }
                seen_f0 = true;
                pending = BigUint::zero();
            }
        }
    }
    (0..gaps.len()).any(|a| {
        let first = &gaps[a] + 1u32;
        let k = t1(&first, m).expect("positive") as usize;
        a + k < gaps.len()
            && (1..=k).all(|s| {
                let divisor = base.pow((k + 1 - s) as u32);
                (&gaps[a + s] + 1u32).is_multiple_of(&divisor)
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(m: usize, s: &str) -> GeneratorWord {
        GeneratorWord::parse(m, s).unwrap()
    }

    fn nf(m: usize, p: &[u64]) -> NormalForm {
        NormalForm::from_u64(m, p).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&w(2, "f0 f1^2 f0")), nf(2, &[0, 2]));
        assert_eq!(reduce(&w(2, "f0 f1 f0")), nf(2, &[0, 1, 0]));
        assert_eq!(reduce(&w(2, "f0 f0")), nf(2, &[0, 0]));
        assert_eq!(reduce(&w(2, "f1^5")), nf(2, &[5]));
        assert_eq!(reduce(&w(2, "")), NormalForm::identity(2));
    }

    #[test]
    fn reduce_handles_huge_exponents() {
        let big = "340282366920938463463374607431768211456"; // 2^128
        let word = w(2, &format!("f0 f1^{big} f0"));
        let r = reduce(&word);
        assert_eq!(r.k(), 1);
        assert_eq!(r.p()[1].to_string(), big);
    }

    #[test]
    fn words_and_lengths() {
        let a = nf(2, &[0, 1, 0]);
        assert_eq!(a.to_word().to_string(), "f0 f1 f0");
        assert_eq!(a.length(), BigUint::from(3u32));
        let b = nf(3, &[2, 1]);
        assert_eq!(b.to_word().to_string(), "f1 f0 f1^2");
        assert_eq!(b.length(), BigUint::from(4u32));
        assert_eq!(NormalForm::identity(2).length(), BigUint::zero());
        assert_eq!(NormalForm::identity(2).to_string(), "e");
    }

    #[test]
    fn invalid_forms_rejected() {
        assert!(NormalForm::from_u64(2, &[0, 0, 0]).is_err());
        assert!(NormalForm::from_u64(1, &[0]).is_err());
        assert!(NormalForm::new(2, vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = nf(2, &[0, 1, 0]);
        assert_eq!(a.to_json().to_string(), r#"{"m":2,"k":2,"p":[0,1,0]}"#);
        assert_eq!(NormalForm::from_json(&a.to_json()).unwrap(), a);
        let bad = serde_json::json!({"m": 2, "k": 1, "p": [0, 1, 0]});
        assert!(NormalForm::from_json(&bad).is_err());
    }

    #[test]
    fn word_problem_examples() {
        assert!(word_problem(&w(2, "f0 f1^2 f0"), &w(2, "f1^2 f0")).unwrap());
        assert!(!word_problem(&w(2, "f0 f1 f0"), &w(2, "f0")).unwrap());
        assert!(word_problem(&w(3, "f1 f0"), &w(2, "f1 f0")).is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restrict_nf(&nf(2, &[1, 1]), 0).unwrap(), nf(2, &[0, 0]));
        assert_eq!(restrict_nf(&nf(2, &[2]), 0).unwrap(), nf(2, &[1]));
        assert_eq!(restrict_nf(&nf(2, &[2]), 1).unwrap(), nf(2, &[1]));
        assert_eq!(restrict_nf(&NormalForm::identity(3), 2).unwrap(), NormalForm::identity(3));
        assert!(restrict_nf(&nf(2, &[1]), 2).is_err());
    }

    #[test]
    fn restriction_matches_transducer() {
        for m in 2..4usize {
            let bound = (m * m) as u64;
            let mut forms = vec![];
            for p0 in 0..=bound {
                for p1 in 0..=bound {
                    forms.push(vec![p0, p1]);
                    for p2 in 0..=bound {
                        if p1 > 0 {
                            forms.push(vec![p0, p1, p2]);
                        }
                    }
                }
            }
            for p in forms {
                let form = nf(m, &p);
                let t = form.to_word().to_transformation().unwrap();
                for x in 0..m {
                    let expected = t.restrict(x).unwrap();
                    let got = restrict_nf(&form, x).unwrap();
                    assert_eq!(got.to_word().to_transformation().unwrap(), expected, "{p:?} at {x}");
                }
            }
        }
    }

    #[test]
    fn normal_form_enumeration() {
        let forms = normal_forms_up_to(2, 8).unwrap();
        assert_eq!(forms.len(), 82);
        assert!(forms.iter().all(|f| f.length() <= BigUint::from(8u32)));
        let counts: Vec<usize> = (0..=6u64)
            .map(|l| {
                normal_forms_up_to(3, 6)
                    .unwrap()
                    .iter()
                    .filter(|f| f.length() == BigUint::from(l))
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 4, 6, 8, 10]);
    }

    #[test]
    fn relation_lhs_detection() {
        assert!(contains_relation_lhs(&w(2, "f0 f0")));
        assert!(contains_relation_lhs(&w(2, "f0^2")));
        assert!(contains_relation_lhs(&w(2, "f1 f0 f1^2 f0")));
        assert!(contains_relation_lhs(&w(2, "f0 f1^4 f0")));
        assert!(!contains_relation_lhs(&w(2, "f0 f1 f0")));
        assert!(!contains_relation_lhs(&w(2, "f1^9")));
        // f0 f1^3 f0 f1 f0 is the normal form (0,1,1,0)
        assert!(!contains_relation_lhs(&w(2, "f0 f1^3 f0 f1 f0")));
    }

    fn arb_word(m: usize) -> impl Strategy<Value = GeneratorWord> {
        prop::collection::vec((any::<bool>(), 1u64..40), 0..8).prop_map(move |runs| {
            GeneratorWord::new(
                m,
                runs.into_iter()
                    .map(|(b, e)| if b { (Gen::F0, BigUint::one()) } else { (Gen::F1, BigUint::from(e)) }),
            )
        })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_shortening(word in (2usize..5).prop_flat_map(arb_word)) {
            let m = word.m();
            let r = reduce(&word);
            prop_assert!(NormalForm::new(m, r.p().to_vec()).is_ok());
            prop_assert_eq!(reduce(&r.to_word()), r.clone());
            prop_assert!(r.length() <= word.written_length());
        }

        #[test]
        fn reduce_agrees_with_transducers(word in arb_word(2)) {
            let r = reduce(&word);
            prop_assert_eq!(
                r.to_word().to_transformation().unwrap().key(),
                word.to_transformation().unwrap().key()
            );
        }

        #[test]
        fn normal_form_words_are_irreducible(word in arb_word(3)) {
            let canonical = reduce(&word).to_word();
            prop_assert!(!contains_relation_lhs(&canonical));
        }
    }
}
